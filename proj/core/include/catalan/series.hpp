#pragma once

#include <initializer_list>
#include <vector>

#include "catalan/seq.hpp"

namespace catalan {

using Rational = mpq_class;

// Truncated formal power series over exact rationals. coeff(k) is the
// coefficient of x^k for k = 0..order(); arithmetic truncates, never rounds.
class Series {
 public:
  explicit Series(unsigned order) : coeffs_(static_cast<std::size_t>(order) + 1) {}

  // Polynomial constructor: listed coefficients from x^0 up, padded with
  // zeros to the requested order (excess coefficients are truncated away).
  Series(std::initializer_list<long> poly, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const Rational& coeff(unsigned k) const { return coeffs_.at(k); }
  Rational& coeff(unsigned k) { return coeffs_.at(k); }

  // True iff every coefficient has denominator 1.
  bool integral() const;

  bool operator==(const Series& other) const;

 private:
  std::vector<Rational> coeffs_;
};

// Ring operations on series of equal order (std::invalid_argument otherwise).
// Division requires a nonzero constant term in the divisor
// (std::domain_error otherwise).
Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);
Series series_div(const Series& a, const Series& b);

// sqrt(1 - 4x) to the given order, via the self-convolution recurrence
// s*s = 1 - 4x with s_0 = 1. Every coefficient is an integer:
// 1, -2, -2, -4, -10, -28, ... Throws std::domain_error for order 0.
Series sqrt_one_minus_4x(unsigned order);

// C(x) = (1 - sqrt(1 - 4x)) / 2 = x + x^2 + 2x^3 + 5x^4 + ...
Series expand_catalan_gf(unsigned order);

// N(x) = x / (1 - x)^2 = x + 2x^2 + 3x^3 + ...
Series expand_index_gf(unsigned order);

// The closed form
//   A(x) = [2x^2(2 - x) + (1 - x)^2 (1 - sqrt(1 - 4x))] / [2 (1 - x)^2]
// assembled exactly as written. Coefficient k equals a_k; any non-integral
// coefficient indicates a bug and raises std::logic_error.
Series expand_A_closed_form(unsigned order);

struct CoeffMatch {
  unsigned k = 0;
  bool match = false;
};

// Coefficient-by-coefficient referee against the memoized sequence values.
std::vector<CoeffMatch> compare_with_sequence(const Series& s, SeqKind kind);

}  // namespace catalan
