#pragma once

#include <string>
#include <vector>

#include "catalan/bigcount.hpp"

namespace catalan {

// Rooted three-level tree realizing the count C_n + n: one root, n - 1 main
// branches, and C_i * C_{n-i} sub-branches on main branch i (which total
// C_n). For n = 1 the tree is the bare root.
struct CatalanTreeShape {
  unsigned n = 0;
  unsigned main_branches = 0;
  std::vector<BigCount> sub_branch_group_sizes;  // entry i-1 belongs to main branch i
};

enum class FruitKind { False, True, Custom };

// Shape with one fruit bundle per sub-branch; bundle values are drawn as a
// single labeled node but count with their multiplicity. For n = 1 the
// single bundle hangs off the root.
struct FruitfulTree {
  CatalanTreeShape shape;
  FruitKind fruit_kind = FruitKind::Custom;
  std::vector<std::vector<BigCount>> fruit_groups;
};

// Rejects n = 0 (there is no empty tree) with std::domain_error.
CatalanTreeShape build_shape(unsigned n);

// Root + main branches + sub-branches; equals C_n + n.
BigCount component_count(const CatalanTreeShape& shape);

// Shape components plus the sum of all fruit values.
BigCount component_count(const FruitfulTree& tree);

// Hangs fruit off every sub-branch from the parenthesization census on n
// variables: FruitKind::False uses each tree's false rows (totals f_n),
// FruitKind::True its true rows (totals t_n). Sub-branch j of main branch i
// corresponds to the j-th tree of census group i in canonical order.
// FruitKind::Custom is rejected here; use decorate_custom.
FruitfulTree decorate(const CatalanTreeShape& shape, FruitKind kind);

// Attaches caller-provided bundles; group count and sizes must match the
// shape (std::invalid_argument otherwise).
FruitfulTree decorate_custom(const CatalanTreeShape& shape,
                             std::vector<std::vector<BigCount>> fruit_groups);

// Rows from the outermost level down, one tuple entry per main branch:
// for the shape on n = 4,
//   (2,1,2)
//   (1,1,1)
//   (1)
// and a fruitful tree gains a top row of per-group fruit tuples (in census
// order), e.g. ((1,3,3,7,5),(3,9),(7,5),(15,13,13,9,11)) on n = 5.
std::string symbolic_repr(const CatalanTreeShape& shape);
std::string symbolic_repr(const FruitfulTree& tree);

// Deterministic Graphviz text: nodes root, m<i>, s<i>_<j>, fruit<i>_<j>
// (fruit nodes carry [label="<value>"]), one declaration or edge per line.
// Throws std::domain_error if a group is too large to enumerate nodes for.
std::string to_dot(const CatalanTreeShape& shape);
std::string to_dot(const FruitfulTree& tree);

}  // namespace catalan
