#include "catalan/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "catalan/bigcount.hpp"

namespace catalan {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double log_sum_exp(double a, double b) {
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

// ln of sqrt(pi n^3).
double log_sqrt_pi_n3(unsigned n) {
  return 0.5 * (std::log(std::numbers::pi) + 3.0 * std::log(static_cast<double>(n)));
}

double log_estimate(SeqKind kind, unsigned n) {
  const double dn = static_cast<double>(n);
  switch (kind) {
    case SeqKind::C:
      return 2.0 * dn * kLn2 - log_sqrt_pi_n3(n);
    case SeqKind::A: {
      const double catalan_part = 2.0 * dn * kLn2;
      const double index_part =
          2.0 * std::log(dn) + 0.5 * (std::log(std::numbers::pi) + std::log(dn));
      return log_sum_exp(catalan_part, index_part) - log_sqrt_pi_n3(n);
    }
    case SeqKind::F:
      return std::log((3.0 - std::numbers::sqrt3) / 6.0) + (3.0 * dn - 2.0) * kLn2 -
             log_sqrt_pi_n3(n);
    case SeqKind::T:
      return std::log((3.0 + std::numbers::sqrt3) / 6.0) + (3.0 * dn - 2.0) * kLn2 -
             log_sqrt_pi_n3(n);
    default:
      throw std::invalid_argument("estimate: no growth formula for this kind");
  }
}

double log_exact(SeqKind kind, unsigned n) { return log_value(seq_value(kind, n)); }

}  // namespace

AsymptoticEstimate estimate(SeqKind kind, unsigned n) {
  if (n == 0) throw std::domain_error("estimate: n must be at least 1");
  const double ln_est = log_estimate(kind, n);
  AsymptoticEstimate out;
  out.kind = kind;
  out.n = n;
  out.estimate = std::exp(ln_est);
  out.exact_ratio = std::exp(log_exact(kind, n) - ln_est);
  return out;
}

RatioDiagnostics ratio_diagnostics(unsigned n) {
  if (n < 2) throw std::domain_error("ratio_diagnostics: n must be at least 2");
  RatioDiagnostics out;
  out.n = n;
  out.growth_c = std::exp(log_exact(SeqKind::C, n) - log_exact(SeqKind::C, n - 1));
  out.growth_f = std::exp(log_exact(SeqKind::F, n) - log_exact(SeqKind::F, n - 1));
  out.growth_t = std::exp(log_exact(SeqKind::T, n) - log_exact(SeqKind::T, n - 1));
  out.t_over_f = std::exp(log_exact(SeqKind::T, n) - log_exact(SeqKind::F, n));
  return out;
}

}  // namespace catalan
