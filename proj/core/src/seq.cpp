#include "catalan/seq.hpp"

#include <stdexcept>

namespace catalan {

std::string_view to_string(SeqKind kind) {
  switch (kind) {
    case SeqKind::C: return "c";
    case SeqKind::G: return "g";
    case SeqKind::F: return "f";
    case SeqKind::T: return "t";
    case SeqKind::A: return "a";
    case SeqKind::AF: return "af";
    case SeqKind::AT: return "at";
  }
  throw std::invalid_argument("to_string: unknown SeqKind");
}

std::optional<SeqKind> seq_kind_from_string(std::string_view tag) {
  for (SeqKind kind : kAllSeqKinds) {
    if (tag == to_string(kind)) return kind;
  }
  return std::nullopt;
}

BigCount TriangleRow::sum() const {
  BigCount total = 0;
  for (const BigCount& term : terms) total += term;
  return total;
}

// Extends the catalan memo to index n. Pairs (i, n-i) contribute equal
// products, so only half the convolution is multiplied out.
void SeqEngine::ensure_catalan(unsigned n) {
  if (c_.empty()) {
    c_.push_back(0);
    c_.push_back(1);
  }
  BigCount product;
  for (unsigned m = static_cast<unsigned>(c_.size()); m <= n; ++m) {
    BigCount acc = 0;
    for (unsigned i = 1; 2 * i < m; ++i) {
      mpz_addmul(acc.get_mpz_t(), c_[i].get_mpz_t(), c_[m - i].get_mpz_t());
    }
    acc *= 2;
    if (m % 2 == 0) {
      mpz_addmul(acc.get_mpz_t(), c_[m / 2].get_mpz_t(), c_[m / 2].get_mpz_t());
    }
    c_.push_back(std::move(acc));
  }
}

void SeqEngine::ensure_false(unsigned n) {
  ensure_catalan(n);
  if (f_.empty()) {
    f_.push_back(0);  // f_0 := 0, see class comment
    f_.push_back(1);
    t_.push_back(0);
    t_.push_back(1);  // t_1 = 2 C_1 - f_1
  }
  for (unsigned m = static_cast<unsigned>(f_.size()); m <= n; ++m) {
    BigCount acc = 0;
    for (unsigned i = 1; i < m; ++i) {
      mpz_addmul(acc.get_mpz_t(), t_[i].get_mpz_t(), f_[m - i].get_mpz_t());
    }
    // t_m = 2^m C_m - f_m
    BigCount tm = c_[m] << m;
    tm -= acc;
    f_.push_back(std::move(acc));
    t_.push_back(std::move(tm));
  }
}

BigCount SeqEngine::catalan_binomial(unsigned n) {
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), 2ul * n - 2, n - 1);
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), n);
  return out;
}

BigCount SeqEngine::catalan(unsigned n) {
  std::lock_guard lock(mu_);
  ensure_catalan(n);
  return c_[n];
}

BigCount SeqEngine::catalan_explicit(unsigned n) {
  if (n == 0) {
    throw std::domain_error("catalan_explicit: undefined for n = 0");
  }
  return catalan_binomial(n);
}

BigCount SeqEngine::g_total(unsigned n) {
  std::lock_guard lock(mu_);
  ensure_catalan(n);
  return c_[n] << n;
}

BigCount SeqEngine::f_false(unsigned n) {
  std::lock_guard lock(mu_);
  ensure_false(n);
  return f_[n];
}

BigCount SeqEngine::t_true(unsigned n) {
  std::lock_guard lock(mu_);
  ensure_false(n);
  return t_[n];
}

BigCount SeqEngine::a_total(unsigned n) {
  if (n <= 1) return n;
  std::lock_guard lock(mu_);
  ensure_catalan(n);
  return c_[n] + n;
}

BigCount SeqEngine::a_explicit(unsigned n) {
  if (n <= 1) {
    throw std::domain_error("a_explicit: defined only for n > 1");
  }
  return catalan_binomial(n) + n;
}

BigCount SeqEngine::fruitful_total(unsigned n, SeqKind kind) {
  if (kind != SeqKind::F && kind != SeqKind::T) {
    throw std::invalid_argument("fruitful_total: fruit sequence must be F or T");
  }
  if (n == 0) return 0;
  if (n == 1) return 2;
  std::lock_guard lock(mu_);
  ensure_false(n);
  const BigCount& mu = kind == SeqKind::F ? f_[n] : t_[n];
  return mu + c_[n] + n;
}

BigCount SeqEngine::triangle_term(unsigned n, unsigned i) {
  if (i < 1 || n < 2 || i > n - 1) {
    throw std::out_of_range("triangle_term: need 1 <= i <= n-1");
  }
  std::lock_guard lock(mu_);
  ensure_false(n);
  BigCount ti = c_[i] << i;  // 2^i C_i - f_i
  ti -= f_[i];
  return ti * f_[n - i];
}

TriangleRow SeqEngine::triangle_row(unsigned n) {
  if (n < 2) {
    throw std::domain_error("triangle_row: rows start at n = 2");
  }
  std::lock_guard lock(mu_);
  ensure_false(n);
  TriangleRow row{n, {}};
  row.terms.reserve(n - 1);
  for (unsigned i = 1; i < n; ++i) {
    row.terms.push_back(t_[i] * f_[n - i]);
  }
  return row;
}

BigCount SeqEngine::value(SeqKind kind, unsigned n) {
  switch (kind) {
    case SeqKind::C: return catalan(n);
    case SeqKind::G: return g_total(n);
    case SeqKind::F: return f_false(n);
    case SeqKind::T: return t_true(n);
    case SeqKind::A: return a_total(n);
    case SeqKind::AF: return fruitful_total(n, SeqKind::F);
    case SeqKind::AT: return fruitful_total(n, SeqKind::T);
  }
  throw std::invalid_argument("value: unknown SeqKind");
}

std::vector<std::pair<unsigned, BigCount>> SeqEngine::table(SeqKind kind, unsigned from,
                                                            unsigned to) {
  if (from > to) {
    throw std::invalid_argument("table: range must satisfy from <= to");
  }
  std::vector<std::pair<unsigned, BigCount>> out;
  out.reserve(to - from + 1);
  for (unsigned n = from; n <= to; ++n) {
    out.emplace_back(n, value(kind, n));
  }
  return out;
}

SeqEngine& default_engine() {
  static SeqEngine engine;
  return engine;
}

BigCount catalan(unsigned n) { return default_engine().catalan(n); }
BigCount catalan_explicit(unsigned n) { return default_engine().catalan_explicit(n); }
BigCount g_total(unsigned n) { return default_engine().g_total(n); }
BigCount f_false(unsigned n) { return default_engine().f_false(n); }
BigCount t_true(unsigned n) { return default_engine().t_true(n); }
BigCount a_total(unsigned n) { return default_engine().a_total(n); }
BigCount a_explicit(unsigned n) { return default_engine().a_explicit(n); }
BigCount fruitful_total(unsigned n, SeqKind kind) {
  return default_engine().fruitful_total(n, kind);
}
BigCount triangle_term(unsigned n, unsigned i) { return default_engine().triangle_term(n, i); }
TriangleRow triangle_row(unsigned n) { return default_engine().triangle_row(n); }
BigCount seq_value(SeqKind kind, unsigned n) { return default_engine().value(kind, n); }
std::vector<std::pair<unsigned, BigCount>> seq_table(SeqKind kind, unsigned from, unsigned to) {
  return default_engine().table(kind, from, to);
}

}  // namespace catalan
