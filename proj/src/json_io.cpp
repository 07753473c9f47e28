#include "kmf/json_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace kmf {

namespace {

// inf and nan are not JSON numbers
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

std::vector<Matrix> matrix_list(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j[key].is_array()) bad(std::string(key) + " must be an array of matrices");
  std::vector<Matrix> out;
  for (const auto& m : j[key]) out.push_back(matrix_from_json(m));
  return out;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({number(m(i, j).real()), number(m(i, j).imag())}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  const Index n = static_cast<Index>(j.size());
  Matrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) bad("matrix must be square");
    for (Index c = 0; c < n; ++c) {
      const Json& e = row[c];
      if (e.is_number()) {
        m(r, c) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        bad("matrix entries must be [re, im] pairs");
      }
    }
  }
  return m;
}

Json params_to_json(const ParamSet& p) {
  Json j;
  j["k"] = p.k;
  j["A"] = matrix_to_json(p.A);
  j["P"] = Json::array();
  for (const auto& m : p.P) j["P"].push_back(matrix_to_json(m));
  j["Q"] = Json::array();
  for (const auto& m : p.Q) j["Q"].push_back(matrix_to_json(m));
  j["B"] = matrix_to_json(p.B);
  j["C"] = matrix_to_json(p.C);
  return j;
}

ParamSet params_from_json(const Json& j) {
  if (!j.is_object()) bad("parameter file must hold a JSON object");
  for (const char* key : {"k", "A", "B", "C"})
    if (!j.contains(key)) bad(std::string("parameter file lacks \"") + key + "\"");
  if (!j["k"].is_number()) bad("k must be a number");
  ParamSet p;
  p.k = j["k"].get<double>();
  p.A = matrix_from_json(j["A"]);
  p.P = matrix_list(j, "P");
  p.Q = matrix_list(j, "Q");
  p.B = matrix_from_json(j["B"]);
  p.C = matrix_from_json(j["C"]);
  return p;
}

Json to_json(const ConvergenceClass& c) {
  Json j;
  j["tag"] = std::string(to_string(c.tag));
  j["radius"] = c.radius ? number(*c.radius) : Json(nullptr);
  return j;
}

Json to_json(const EvalResult& r) {
  Json j;
  j["value"] = matrix_to_json(r.value);
  j["terms_used"] = r.terms_used;
  j["residual_estimate"] = number(r.residual_estimate);
  j["convergence"] = to_json(r.convergence);
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["id"] = r.id;
  j["paths"] = r.paths;
  j["samples"] = r.samples;
  j["max_rel_residual"] = number(r.max_rel_residual);
  j["mean_rel_residual"] = number(r.mean_rel_residual);
  j["tol"] = r.tol;
  j["failures"] = Json::array();
  for (const auto& f : r.failures)
    j["failures"].push_back(Json{{"seed", f.seed}, {"residual", number(f.residual)}, {"message", f.message}});
  j["passed"] = r.passed;
  return j;
}

Json to_json(const std::vector<IdentityReport>& reports) {
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(to_json(r));
  return j;
}

std::string reports_csv(const std::vector<IdentityReport>& reports) {
  std::ostringstream os;
  os.precision(17);
  os << "id,samples,max_rel_residual,passed\n";
  for (const auto& r : reports)
    os << r.id << ',' << r.samples << ',' << r.max_rel_residual << ',' << (r.passed ? "true" : "false") << '\n';
  return os.str();
}

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) bad("empty complex number");

  auto read = [&](std::string_view part) -> double {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    const char* first = part.data();
    if (*first == '+') ++first;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) bad("cannot parse complex number '" + s + "'");
    return v;
  };

  const bool imaginary = s.back() == 'i' || s.back() == 'j';
  if (!imaginary) return {read(s), 0.0};
  std::string_view body(s.data(), s.size() - 1);
  // split at the last sign that does not follow an exponent marker
  std::size_t cut = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  if (cut == std::string_view::npos) return {0.0, read(body)};
  return {read(body.substr(0, cut)), read(body.substr(cut))};
}

}  // namespace kmf
