#pragma once

#include <memory>
#include <string>
#include <vector>

#include "catalan/seq.hpp"

namespace catalan {

struct ImplTree;
using ImplTreePtr = std::shared_ptr<const ImplTree>;

// One full parenthesization of the implication chain p_lo -> ... -> p_hi.
// A leaf has no children; an inner node is the implication of its two
// subtrees over adjacent spans. Enumerated subtrees are shared, so nodes are
// immutable.
struct ImplTree {
  unsigned lo = 0;  // 1-based, inclusive
  unsigned hi = 0;
  ImplTreePtr left;
  ImplTreePtr right;

  bool is_leaf() const { return left == nullptr; }
  unsigned variables() const { return hi - lo + 1; }
};

ImplTreePtr leaf(unsigned variable);

// Joins adjacent spans; throws std::invalid_argument if right does not start
// at left.hi + 1.
ImplTreePtr implication(ImplTreePtr left, ImplTreePtr right);

// Rendering such as "(p1->p2)->p3", mostly for diagnostics and tests.
std::string to_formula(const ImplTree& tree);

struct TreeCount {
  ImplTreePtr tree;
  BigCount false_rows;
  BigCount true_rows;
};

struct CensusGroup {
  unsigned split = 0;  // root splits after variable `split`
  std::vector<TreeCount> trees;
};

struct CensusTotals {
  BigCount f;
  BigCount t;
  BigCount g;
};

// Per-tree, per-root-split counts for all parenthesizations on n variables.
// For n = 1 the single leaf tree contributes to the totals only (there is no
// root split). Group i holds C_i * C_{n-i} trees and its false rows sum to
// t_i * f_{n-i}.
struct Census {
  unsigned n = 0;
  std::vector<CensusGroup> groups;
  CensusTotals totals;
};

enum class CountMode { TruthTable, Product };

// Exhaustive truth-table evaluation never runs beyond this many variables.
inline constexpr unsigned kRowEnumerationCap = 20;

// Census caps: truth-table mode 10, product mode 14 by default. The
// CATALAN_MAX_N environment variable raises them (truth-table mode stays
// clamped to kRowEnumerationCap); raising the caps is unsafe in the sense
// that runtime and memory grow with C_n.
unsigned truth_table_cap();
unsigned product_cap();

// All C_n parenthesizations in canonical order: root splits ascending, and
// within a split the right subtree varies fastest. Rejects n = 0 and n above
// product_cap() with std::out_of_range.
std::vector<ImplTreePtr> enumerate_trees(unsigned n);

// Counts false/true rows by evaluating the formula under all 2^n variable
// assignments. p1 is the most significant bit of the assignment index.
// Rejects trees beyond kRowEnumerationCap variables.
TreeCount truth_table_counts(const ImplTreePtr& tree);

// Counts rows structurally: a leaf is (1, 1); for T = L -> R the only false
// case is L true and R false, and the variable sets are disjoint, so
// false(T) = true(L) * false(R) and true(T) = 2^n - false(T).
TreeCount product_counts(const ImplTreePtr& tree);

// Full census in the chosen mode; aggregation is plain summation and thus
// order-independent. Rejects n outside [1, cap] for the mode.
Census census(unsigned n, CountMode mode);

// Header n,split_i,tree_index,false_rows,true_rows; tree_index counts
// through the canonical enumeration from 0.
std::string census_to_csv(const Census& census);

// JSON document mirroring the Census structure, serialized.
std::string census_to_json(const Census& census);

}  // namespace catalan
