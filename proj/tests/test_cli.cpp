#include <gtest/gtest.h>

#include <sstream>

#include "kmf/cli.hpp"
#include "kmf/json_io.hpp"

using namespace kmf;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = KMF_TEST_DATA;

}  // namespace

TEST(Json, MatrixRoundTrip) {
  Matrix m(2, 2);
  m << Complex(0.1, -3e-17), Complex(1.0 / 3.0, 2.0), -7.25, Complex(0.0, 1e300);
  Json j = matrix_to_json(m);
  Matrix back = matrix_from_json(j);
  EXPECT_EQ(back, m);
  EXPECT_EQ(matrix_to_json(back).dump(), j.dump());
}

TEST(Json, ParamsRoundTrip) {
  ParamSet p;
  p.k = 1.25;
  p.A = 0.5 * identity(2);
  p.P = {identity(2), 2.0 * identity(2)};
  p.Q = {Matrix(Complex(1.5, 0.25) * identity(2))};
  p.B = 3.0 * identity(2);
  p.C = identity(2);
  const std::string first = params_to_json(p).dump();
  EXPECT_EQ(params_to_json(params_from_json(Json::parse(first))).dump(), first);
}

TEST(Json, PlainNumbersAccepted) {
  Matrix m = matrix_from_json(Json::parse("[[1, 2], [3, 4.5]]"));
  EXPECT_EQ(m(1, 1), Complex(4.5));
}

TEST(Json, ParseComplex) {
  EXPECT_EQ(parse_complex("0.5-1i"), Complex(0.5, -1.0));
  EXPECT_EQ(parse_complex("2"), Complex(2.0));
  EXPECT_EQ(parse_complex("-3j"), Complex(0.0, -3.0));
  EXPECT_EQ(parse_complex("1e-2+i"), Complex(0.01, 1.0));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_THROW(parse_complex("abc"), Error);
  EXPECT_THROW(parse_complex("1+2"), Error);
}

TEST(Json, NonFiniteBecomesNull) {
  IdentityReport r;
  r.id = "x";
  r.max_rel_residual = INFINITY;
  EXPECT_TRUE(to_json(r)["max_rel_residual"].is_null());
}

TEST(Cli, EvalExponential) {
  Outcome o = run({"eval", "--params", kData + "/ml.json", "--z", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  Json j = Json::parse(o.out);
  EXPECT_NEAR(j["value"][0][0][0].get<double>(), 2.718281828459045, 1e-14);
}

TEST(Cli, ClassifyAndTable) {
  Outcome c = run({"classify", "--params", kData + "/r2s1k2.json", "--z", "0.3"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("InsideRadius"), std::string::npos);
  Outcome t = run({"table", "--params", kData + "/ml.json", "--z-start", "0", "--z-end", "1", "--points", "3",
                   "--output", "csv"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find('\n'), std::string::npos);
}

TEST(Cli, VerifyOutputs) {
  Outcome o = run({"verify", "--identity", "2.3a", "--samples", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  Json j = Json::parse(o.out);
  EXPECT_EQ(j["id"], "2.3a");
  EXPECT_EQ(j["passed"], true);
  Outcome all = run({"verify", "--all", "--samples", "1", "--output", "pretty"});
  EXPECT_EQ(all.code, 0) << all.out;
  EXPECT_NE(all.out.find("2.43"), std::string::npos);
  Outcome csv = run({"verify", "--identity", "2.3a", "--samples", "2", "--output", "csv"});
  EXPECT_EQ(csv.out.rfind("id,samples,max_rel_residual,passed", 0), 0u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "--identity", "nope"}).code, cli::kUsage);
  // an unreachable quadrature tolerance exhausts the refinement budget
  EXPECT_EQ(run({"verify", "--identity", "2.19", "--samples", "1", "--quad-tol", "1e-300"}).code, cli::kVerifyFailed);
  EXPECT_EQ(run({"verify", "--identity", "2.3a", "--all"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "--z", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "--params", kData + "/r2s1k2.json", "--z", "0.9"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"eval", "--params", kData + "/r2s1k2.json", "--z", "0.55", "--no-radius-guard", "--max-terms", "300"})
                .code,
            cli::kNumerical);
}
