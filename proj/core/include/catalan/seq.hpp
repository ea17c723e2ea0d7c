#pragma once

#include <mutex>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "catalan/bigcount.hpp"

namespace catalan {

// Which sequence an operation addresses. Serialized as the lowercase tag.
enum class SeqKind { C, G, F, T, A, AF, AT };

inline constexpr SeqKind kAllSeqKinds[] = {SeqKind::C,  SeqKind::G, SeqKind::F, SeqKind::T,
                                           SeqKind::A,  SeqKind::AF, SeqKind::AT};

std::string_view to_string(SeqKind kind);
std::optional<SeqKind> seq_kind_from_string(std::string_view tag);

// One row of the false-row triangle: terms[i-1] = (2^i C_i - f_i) f_{n-i}
// for i = 1..n-1. The terms add up to f_n.
struct TriangleRow {
  unsigned n = 0;
  std::vector<BigCount> terms;

  BigCount sum() const;
};

// Memoized exact evaluation of the Catalan-related sequences.
//
// Indexing follows the shifted convention C_1 = C_2 = 1, C_3 = 2, ...
// (one index ahead of the common one), with C_0 = 0. Derived sequences:
//
//   g_n = 2^n C_n                        total truth-table rows
//   f_n = sum_{i<n} (2^i C_i - f_i) f_{n-i},  f_1 = 1   false rows
//   t_n = g_n - f_n                      true rows
//   a_n = C_n + n (n > 1), a_0 = 0, a_1 = 1   catalan-tree components
//   a_n(f_n) = f_n + C_n + n, a_n(t_n) = t_n + C_n + n  (n > 1; both 2 at n = 1)
//
// f_0 is not covered by the recurrence; it is defined as 0 so that
// g_0 = t_0 = 0 stays consistent.
//
// The memo only grows and entries never change. All methods are safe to call
// from multiple threads; returned values are independent copies.
class SeqEngine {
 public:
  BigCount catalan(unsigned n);

  // binom(2n-2, n-1) / n by exact integer arithmetic; equals catalan(n).
  // Throws std::domain_error for n = 0.
  BigCount catalan_explicit(unsigned n);

  BigCount g_total(unsigned n);
  BigCount f_false(unsigned n);
  BigCount t_true(unsigned n);
  BigCount a_total(unsigned n);

  // binom(2n-2, n-1) / n + n; equals a_total(n). Throws std::domain_error
  // for n <= 1.
  BigCount a_explicit(unsigned n);

  // Component total of the fruitful tree: mu_n + C_n + n for n > 1 with mu
  // given by kind (F or T), 2 for n = 1, 0 for n = 0. The n = 1 value does
  // not extend the n > 1 formula. Throws std::invalid_argument for kinds
  // other than F and T.
  BigCount fruitful_total(unsigned n, SeqKind kind);

  // (2^i C_i - f_i) f_{n-i}, equivalently t_i f_{n-i}.
  // Throws std::out_of_range unless 1 <= i <= n-1.
  BigCount triangle_term(unsigned n, unsigned i);

  // All terms of row n in ascending i. Throws std::domain_error for n < 2.
  TriangleRow triangle_row(unsigned n);

  // Dispatch by kind; every sequence is total on n >= 0.
  BigCount value(SeqKind kind, unsigned n);

  // Inclusive range [from, to]. Throws std::invalid_argument if from > to.
  std::vector<std::pair<unsigned, BigCount>> table(SeqKind kind, unsigned from, unsigned to);

 private:
  void ensure_catalan(unsigned n);
  void ensure_false(unsigned n);
  BigCount catalan_binomial(unsigned n);

  std::mutex mu_;
  std::vector<BigCount> c_;
  std::vector<BigCount> f_;
  std::vector<BigCount> t_;
};

// Process-wide engine shared by the free functions below.
SeqEngine& default_engine();

BigCount catalan(unsigned n);
BigCount catalan_explicit(unsigned n);
BigCount g_total(unsigned n);
BigCount f_false(unsigned n);
BigCount t_true(unsigned n);
BigCount a_total(unsigned n);
BigCount a_explicit(unsigned n);
BigCount fruitful_total(unsigned n, SeqKind kind);
BigCount triangle_term(unsigned n, unsigned i);
TriangleRow triangle_row(unsigned n);
BigCount seq_value(SeqKind kind, unsigned n);
std::vector<std::pair<unsigned, BigCount>> seq_table(SeqKind kind, unsigned from, unsigned to);

}  // namespace catalan
