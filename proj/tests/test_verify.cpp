#include <gtest/gtest.h>

#include <set>

#include "kmf/json_io.hpp"
#include "kmf/verify.hpp"

using namespace kmf;

TEST(Sampler, FamilyCommutes) {
  CommutingFamilySampler s(42, 3);
  Matrix a = s.draw(-1.0, 1.0), b = s.draw(0.0, 2.0, 1.0);
  EXPECT_TRUE(commutes(a, b));
  Vector ev = s.eigenvalues_of(a);
  EXPECT_LT(relative_residual(s.from_eigenvalues(ev), a), 1e-13);
  for (Index i = 0; i < 3; ++i) {
    EXPECT_GE(ev(i).real(), -1.0 - 1e-12);
    EXPECT_LE(ev(i).real(), 1.0 + 1e-12);
  }
}

TEST(Sampler, Reproducible) {
  CommutingFamilySampler a(9, 2), b(9, 2);
  EXPECT_EQ(a.draw(0.0, 1.0), b.draw(0.0, 1.0));
  EXPECT_EQ(a.uniform(0.0, 1.0), b.uniform(0.0, 1.0));
}

TEST(Catalog, IdsUnique) {
  std::set<std::string> ids;
  for (const auto& c : catalog()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.paths.empty()) << c.id;
    EXPECT_GT(c.tol, 0.0);
  }
  EXPECT_GE(ids.size(), 40u);
}

TEST(Verify, SingleIdentity) {
  IdentityReport r = verify("2.3a", 1, 0);
  EXPECT_EQ(r.samples, 1);
  EXPECT_TRUE(r.passed) << (r.failures.empty() ? "" : r.failures.front().message);
  EXPECT_LE(r.max_rel_residual, r.tol);
}

TEST(Verify, Deterministic) {
  auto a = verify_all(2, 17, {}, "2.1");
  auto b = verify_all(2, 17, {}, "2.1");
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Verify, SeedChangesSamples) {
  auto a = verify("2.14", 3, 1), b = verify("2.14", 3, 2);
  EXPECT_NE(a.mean_rel_residual, b.mean_rel_residual);
}

TEST(Verify, Errors) {
  try {
    verify("9.99", 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownIdentity);
  }
  EXPECT_THROW(verify("2.3a", 0, 0), Error);
  EXPECT_TRUE(verify_all(1, 0, {}, "no-such-prefix").empty());
}
