#pragma once

#include "catalan/seq.hpp"

namespace catalan {

// Closed-form growth estimate next to the exact value. `estimate` can
// overflow to infinity for large n; `exact_ratio` (exact / estimate) is
// always computed in log space and stays finite.
struct AsymptoticEstimate {
  SeqKind kind = SeqKind::C;
  unsigned n = 0;
  double estimate = 0.0;
  double exact_ratio = 0.0;
};

// Supported kinds and their estimates:
//   C: 4^n / sqrt(pi n^3)                    (exact/estimate tends to 1/4)
//   A: (4^n + n^2 sqrt(pi n)) / sqrt(pi n^3)
//   F: (3 - sqrt(3))/6 * 2^(3n-2) / sqrt(pi n^3)
//   T: (3 + sqrt(3))/6 * 2^(3n-2) / sqrt(pi n^3)
// Other kinds raise std::invalid_argument; n = 0 raises std::domain_error.
AsymptoticEstimate estimate(SeqKind kind, unsigned n);

// Consecutive-term growth factors and the t/f ratio at n. growth_f and
// growth_t approach 8, growth_c approaches 4, t_over_f climbs toward
// 2 + sqrt(3).
struct RatioDiagnostics {
  unsigned n = 0;
  double growth_c = 0.0;
  double growth_f = 0.0;
  double growth_t = 0.0;
  double t_over_f = 0.0;
};

// Requires n >= 2 (growth factors need the previous term).
RatioDiagnostics ratio_diagnostics(unsigned n);

}  // namespace catalan
