#include "kmf/verify.hpp"

#include <cmath>
#include <limits>

#include "catalog_common.hpp"

namespace kmf {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a, stable across platforms unlike std::hash
std::uint64_t hash_id(std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr int kMaxAttempts = 20;

IdentityReport run_case(const IdentityCase& c, long samples, std::uint64_t seed, const VerifyOptions& opts) {
  IdentityReport rep;
  rep.id = c.id;
  rep.paths = c.paths;
  rep.samples = samples;
  rep.tol = c.tol;
  const std::uint64_t base = splitmix(seed ^ splitmix(hash_id(c.id)));
  double sum = 0.0;
  for (long i = 0; i < samples; ++i) {
    const Index dim = 2 + (i % 2);
    std::function<Sides()> thunk;
    std::uint64_t used = 0;
    std::string last_reason;
    for (int attempt = 0; attempt < kMaxAttempts && !thunk; ++attempt) {
      used = splitmix(base + static_cast<std::uint64_t>(i) * 1000003ULL + static_cast<std::uint64_t>(attempt));
      try {
        CommutingFamilySampler sampler(used, dim);
        const double k = i == 0 ? 1.0 : sampler.uniform(0.6, 1.8);
        SampleContext ctx{sampler, k, i, opts};
        thunk = c.build(ctx);
      } catch (const detail::Precondition& e) {
        last_reason = e.what();
      } catch (const Error& e) {
        last_reason = e.what();
      }
    }
    if (!thunk)
      throw Error(ErrorKind::SamplerExhausted,
                  c.id + ": no admissible sample after " + std::to_string(kMaxAttempts) + " draws (" + last_reason + ")");

    double residual = std::numeric_limits<double>::infinity();
    std::string message;
    try {
      Sides s = thunk();
      residual = relative_residual(s.lhs, s.rhs);
      if (!std::isfinite(residual)) {
        residual = std::numeric_limits<double>::infinity();
        message = "non-finite residual";
      }
    } catch (const std::exception& e) {
      message = e.what();
    }
    if (!message.empty() || residual > c.tol) {
      if (message.empty()) message = "residual above tolerance";
      rep.failures.push_back({used, residual, message});
    }
    rep.max_rel_residual = std::max(rep.max_rel_residual, residual);
    sum += residual;
  }
  rep.mean_rel_residual = samples > 0 ? sum / static_cast<double>(samples) : 0.0;
  rep.passed = samples > 0 && rep.failures.empty();
  return rep;
}

}  // namespace

std::vector<IdentityCase> catalog() {
  std::vector<IdentityCase> out;
  detail::add_series_cases(out);
  detail::add_integral_cases(out);
  detail::add_transform_cases(out);
  return out;
}

IdentityReport verify(std::string_view id, long samples, std::uint64_t seed, const VerifyOptions& opts) {
  if (samples < 1) throw Error(ErrorKind::InvalidInput, "samples must be positive");
  for (const auto& c : catalog())
    if (c.id == id) return run_case(c, samples, seed, opts);
  throw Error(ErrorKind::UnknownIdentity, "unknown identity '" + std::string(id) + "'");
}

std::vector<IdentityReport> verify_all(long samples, std::uint64_t seed, const VerifyOptions& opts,
                                       std::string_view filter) {
  if (samples < 1) throw Error(ErrorKind::InvalidInput, "samples must be positive");
  std::vector<IdentityReport> out;
  for (const auto& c : catalog()) {
    if (!filter.empty() && c.id.rfind(filter, 0) != 0) continue;
    try {
      out.push_back(run_case(c, samples, seed, opts));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SamplerExhausted) throw;
      IdentityReport rep;
      rep.id = c.id;
      rep.paths = c.paths;
      rep.samples = samples;
      rep.tol = c.tol;
      rep.max_rel_residual = rep.mean_rel_residual = std::numeric_limits<double>::infinity();
      rep.failures.push_back({seed, std::numeric_limits<double>::infinity(), e.what()});
      out.push_back(rep);
    }
  }
  return out;
}

}  // namespace kmf
