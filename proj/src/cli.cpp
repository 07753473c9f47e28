#include "kmf/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "kmf/json_io.hpp"

namespace kmf::cli {

namespace {

struct Config {
  std::string params_path;
  std::string z = "0";
  std::optional<double> k;
  double tol = 1e-14;
  long max_terms = 500;
  bool no_radius_guard = false;
  double quad_tol = 1e-13;
  std::string output = "json";
  std::string out_path;
  std::string z_start = "0", z_end = "1";
  long points = 11;
  std::string identity;
  bool all = false;
  long samples = 8;
  std::uint64_t seed = 0;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::NonCommuting:
    case ErrorKind::RadiusViolation:
    case ErrorKind::SingularQShift:
    case ErrorKind::InvalidReduction:
    case ErrorKind::GrowthViolation:
    case ErrorKind::IntegrandSingular:
    case ErrorKind::NonDecayingIntegrand:
      return kInvalidInput;
    case ErrorKind::UnknownIdentity:
      return kUsage;
    case ErrorKind::SamplerExhausted:
      return kVerifyFailed;
    default:
      return kNumerical;
  }
}

ParamSet load_params(const Config& c) {
  std::ifstream in(c.params_path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open parameter file '" + c.params_path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("parameter file is not valid JSON: ") + e.what());
  }
  ParamSet p = params_from_json(j);
  if (c.k) p.k = *c.k;
  return p;
}

EvalOptions eval_options(const Config& c) {
  EvalOptions o;
  o.tol = c.tol;
  o.max_terms = c.max_terms;
  o.radius_guard = !c.no_radius_guard;
  return o;
}

std::string complex_text(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
  return os.str();
}

std::string pretty_matrix(const Matrix& m) {
  std::ostringstream os;
  os << std::setprecision(12);
  for (Index i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (Index j = 0; j < m.cols(); ++j) os << (j ? "  " : "") << complex_text(m(i, j));
    os << '\n';
  }
  return os.str();
}

void csv_header(std::ostream& os, Index n) {
  os << "z_re,z_im";
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) os << ",m" << i << j << "_re,m" << i << j << "_im";
  os << '\n';
}

void csv_row(std::ostream& os, Complex z, const Matrix& m) {
  os << std::setprecision(17) << z.real() << ',' << z.imag();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) os << ',' << m(i, j).real() << ',' << m(i, j).imag();
  os << '\n';
}

std::string do_eval(const Config& c) {
  ParamSet p = load_params(c);
  Complex z = parse_complex(c.z);
  EvalResult r = eval_series(p, z, eval_options(c));
  std::ostringstream os;
  if (c.output == "json") {
    os << to_json(r).dump(2) << '\n';
  } else if (c.output == "csv") {
    csv_header(os, r.value.rows());
    csv_row(os, z, r.value);
  } else {
    os << "value:\n" << pretty_matrix(r.value) << "terms_used: " << r.terms_used
       << "\nresidual_estimate: " << r.residual_estimate << "\nconvergence: " << to_string(r.convergence.tag);
    if (r.convergence.radius) os << " (radius " << *r.convergence.radius << ')';
    os << '\n';
    for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  }
  return os.str();
}

std::string do_classify(const Config& c) {
  ParamSet p = load_params(c);
  validate(p);
  ConvergenceClass cc = classify_convergence(p, parse_complex(c.z));
  std::ostringstream os;
  if (c.output == "json") {
    os << to_json(cc).dump(2) << '\n';
  } else if (c.output == "csv") {
    os << "tag,radius\n" << to_string(cc.tag) << ',';
    if (cc.radius) os << std::setprecision(17) << *cc.radius;
    os << '\n';
  } else {
    os << to_string(cc.tag);
    if (cc.radius) os << " (radius " << *cc.radius << ')';
    os << '\n';
  }
  return os.str();
}

std::string do_table(const Config& c) {
  if (c.points < 2) throw Error(ErrorKind::InvalidInput, "--points must be at least 2");
  ParamSet p = load_params(c);
  const Complex a = parse_complex(c.z_start), b = parse_complex(c.z_end);
  const EvalOptions o = eval_options(c);
  RSeries series(p);
  validate(p);
  std::vector<std::pair<Complex, Matrix>> rows;
  for (long i = 0; i < c.points; ++i) {
    const Complex z = a + (b - a) * (static_cast<double>(i) / static_cast<double>(c.points - 1));
    rows.emplace_back(z, series.evaluate(z, o).value);
  }
  std::ostringstream os;
  if (c.output == "json") {
    Json j = Json::array();
    for (const auto& [z, m] : rows) j.push_back(Json{{"z", Json::array({z.real(), z.imag()})}, {"value", matrix_to_json(m)}});
    os << j.dump(2) << '\n';
  } else if (c.output == "csv") {
    csv_header(os, p.dim());
    for (const auto& [z, m] : rows) csv_row(os, z, m);
  } else {
    for (const auto& [z, m] : rows) os << "z = " << complex_text(z) << '\n' << pretty_matrix(m);
  }
  return os.str();
}

std::string do_verify(const Config& c, bool& all_passed) {
  if (c.all == !c.identity.empty()) throw CLI::ValidationError("verify", "give exactly one of --identity or --all");
  VerifyOptions o;
  o.quad.abs_tol = o.quad.rel_tol = c.quad_tol;
  std::vector<IdentityReport> reports;
  if (c.all) {
    reports = verify_all(c.samples, c.seed, o);
  } else {
    reports.push_back(verify(c.identity, c.samples, c.seed, o));
  }
  all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed;

  std::ostringstream os;
  if (c.output == "json") {
    os << (c.all ? to_json(reports) : to_json(reports.front())).dump(2) << '\n';
  } else if (c.output == "csv") {
    os << reports_csv(reports);
  } else {
    os << std::setprecision(3);
    for (const auto& r : reports) {
      os << std::left << std::setw(6) << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << "  max " << r.max_rel_residual
         << "  tol " << r.tol << '\n';
      for (const auto& f : r.failures) os << "    seed " << f.seed << ": " << f.message << '\n';
    }
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix-valued k-analogue R-function toolkit", "kmf"};
  app.require_subcommand(1, 1);
  Config c;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", c.output, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--out", c.out_path, "write to this file instead of stdout");
  };
  auto add_series = [&](CLI::App* sub) {
    sub->add_option("--params", c.params_path, "ParamSet JSON file")->required();
    sub->add_option("--k", c.k, "override k")->check(CLI::PositiveNumber);
    sub->add_option("--tol", c.tol, "series stopping tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-terms", c.max_terms, "term cap")->check(CLI::PositiveNumber);
    sub->add_flag("--no-radius-guard", c.no_radius_guard, "evaluate outside the convergence region");
    add_output(sub);
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate the series at z");
  add_series(eval);
  eval->add_option("--z", c.z, "complex argument, e.g. 0.5-1i");

  CLI::App* classify = app.add_subcommand("classify", "convergence class at z");
  add_series(classify);
  classify->add_option("--z", c.z, "complex argument");

  CLI::App* table = app.add_subcommand("table", "evaluate on a straight z-grid");
  add_series(table);
  table->add_option("--z-start", c.z_start, "first grid point");
  table->add_option("--z-end", c.z_end, "last grid point");
  table->add_option("--points", c.points, "grid size");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check catalog identities on random samples");
  verify_cmd->add_option("--identity", c.identity, "catalog id, e.g. 2.3a");
  verify_cmd->add_flag("--all", c.all, "run the whole catalog");
  verify_cmd->add_option("--samples", c.samples, "samples per identity")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", c.seed, "random seed");
  verify_cmd->add_option("--quad-tol", c.quad_tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  add_output(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "kmf: " << e.what() << '\n';
    return kUsage;
  }

  int code = kOk;
  std::string text;
  try {
    if (eval->parsed()) {
      text = do_eval(c);
    } else if (classify->parsed()) {
      text = do_classify(c);
    } else if (table->parsed()) {
      text = do_table(c);
    } else {
      bool passed = false;
      text = do_verify(c, passed);
      if (!passed) code = kVerifyFailed;
    }
  } catch (const CLI::ParseError& e) {
    err << "kmf: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "kmf: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "kmf: " << e.what() << '\n';
    return kNumerical;
  }

  if (c.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out_path);
    if (!f) {
      err << "kmf: cannot write '" << c.out_path << "'\n";
      return kUsage;
    }
    f << text;
  }
  return code;
}

}  // namespace kmf::cli
