#include "catalan/series.hpp"

#include <stdexcept>

namespace catalan {

namespace {

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series: operands must have equal truncation order");
  }
}

}  // namespace

Series::Series(std::initializer_list<long> poly, unsigned order) : Series(order) {
  unsigned k = 0;
  for (long c : poly) {
    if (k > order) break;
    coeffs_[k++] = c;
  }
}

bool Series::integral() const {
  for (const Rational& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool Series::operator==(const Series& other) const { return coeffs_ == other.coeffs_; }

Series series_add(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series out(a.order());
  for (unsigned k = 0; k <= a.order(); ++k) {
    out.coeff(k) = a.coeff(k) + b.coeff(k);
  }
  return out;
}

Series series_sub(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series out(a.order());
  for (unsigned k = 0; k <= a.order(); ++k) {
    out.coeff(k) = a.coeff(k) - b.coeff(k);
  }
  return out;
}

Series series_mul(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series out(a.order());
  for (unsigned k = 0; k <= a.order(); ++k) {
    Rational acc = 0;
    for (unsigned j = 0; j <= k; ++j) {
      acc += a.coeff(j) * b.coeff(k - j);
    }
    out.coeff(k) = acc;
  }
  return out;
}

Series series_div(const Series& a, const Series& b) {
  require_same_order(a, b);
  if (b.coeff(0) == 0) {
    throw std::domain_error("series_div: divisor must have a nonzero constant term");
  }
  Series out(a.order());
  for (unsigned k = 0; k <= a.order(); ++k) {
    Rational acc = a.coeff(k);
    for (unsigned j = 0; j < k; ++j) {
      acc -= out.coeff(j) * b.coeff(k - j);
    }
    out.coeff(k) = acc / b.coeff(0);
  }
  return out;
}

Series sqrt_one_minus_4x(unsigned order) {
  if (order == 0) {
    throw std::domain_error("sqrt_one_minus_4x: order must be at least 1");
  }
  Series s(order);
  s.coeff(0) = 1;
  for (unsigned k = 1; k <= order; ++k) {
    // [x^k](s*s) = 2 s_0 s_k + sum_{0<j<k} s_j s_{k-j} must match 1 - 4x.
    Rational acc = 0;
    for (unsigned j = 1; j < k; ++j) {
      acc += s.coeff(j) * s.coeff(k - j);
    }
    Rational target = k == 1 ? Rational(-4) : Rational(0);
    s.coeff(k) = (target - acc) / 2;
  }
  return s;
}

Series expand_catalan_gf(unsigned order) {
  Series one({1}, order);
  return series_div(series_sub(one, sqrt_one_minus_4x(order)), Series({2}, order));
}

Series expand_index_gf(unsigned order) {
  Series one_minus_x({1, -1}, order);
  return series_div(Series({0, 1}, order), series_mul(one_minus_x, one_minus_x));
}

Series expand_A_closed_form(unsigned order) {
  if (order == 0) {
    throw std::domain_error("expand_A_closed_form: order must be at least 1");
  }
  Series one_minus_x({1, -1}, order);
  Series one_minus_x_sq = series_mul(one_minus_x, one_minus_x);
  Series radical_part = series_sub(Series({1}, order), sqrt_one_minus_4x(order));
  Series numerator = series_add(series_mul(Series({0, 0, 2}, order), Series({2, -1}, order)),
                                series_mul(one_minus_x_sq, radical_part));
  Series denominator = series_mul(Series({2}, order), one_minus_x_sq);
  Series a = series_div(numerator, denominator);
  if (!a.integral()) {
    throw std::logic_error("expand_A_closed_form: non-integral coefficient");
  }
  return a;
}

std::vector<CoeffMatch> compare_with_sequence(const Series& s, SeqKind kind) {
  std::vector<CoeffMatch> out;
  out.reserve(s.order() + 1);
  for (unsigned k = 0; k <= s.order(); ++k) {
    const Rational& c = s.coeff(k);
    bool match = c.get_den() == 1 && c.get_num() == seq_value(kind, k);
    out.push_back({k, match});
  }
  return out;
}

}  // namespace catalan
