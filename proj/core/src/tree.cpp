#include "catalan/tree.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catalan/logic.hpp"
#include "catalan/seq.hpp"

namespace catalan {

CatalanTreeShape build_shape(unsigned n) {
  if (n == 0) throw std::domain_error("build_shape: there is no tree for n = 0");
  CatalanTreeShape shape;
  shape.n = n;
  shape.main_branches = n - 1;
  shape.sub_branch_group_sizes.reserve(n - 1);
  for (unsigned i = 1; i < n; ++i)
    shape.sub_branch_group_sizes.push_back(catalan(i) * catalan(n - i));
  return shape;
}

BigCount component_count(const CatalanTreeShape& shape) {
  BigCount total = 1 + shape.main_branches;
  for (const auto& size : shape.sub_branch_group_sizes) total += size;
  return total;
}

BigCount component_count(const FruitfulTree& tree) {
  BigCount total = component_count(tree.shape);
  for (const auto& group : tree.fruit_groups)
    for (const auto& fruit : group) total += fruit;
  return total;
}

FruitfulTree decorate(const CatalanTreeShape& shape, FruitKind kind) {
  if (kind == FruitKind::Custom)
    throw std::invalid_argument("decorate: custom fruit needs decorate_custom");
  FruitfulTree tree;
  tree.shape = shape;
  tree.fruit_kind = kind;
  const Census counts = census(shape.n, CountMode::Product);
  if (shape.n == 1) {
    tree.fruit_groups.push_back(
        {kind == FruitKind::False ? counts.totals.f : counts.totals.t});
    return tree;
  }
  tree.fruit_groups.reserve(counts.groups.size());
  for (const auto& group : counts.groups) {
    std::vector<BigCount> fruit;
    fruit.reserve(group.trees.size());
    for (const auto& counted : group.trees)
      fruit.push_back(kind == FruitKind::False ? counted.false_rows : counted.true_rows);
    tree.fruit_groups.push_back(std::move(fruit));
  }
  return tree;
}

FruitfulTree decorate_custom(const CatalanTreeShape& shape,
                             std::vector<std::vector<BigCount>> fruit_groups) {
  const std::size_t expected_groups = shape.n == 1 ? 1 : shape.main_branches;
  if (fruit_groups.size() != expected_groups)
    throw std::invalid_argument("decorate_custom: expected " +
                                std::to_string(expected_groups) + " fruit groups");
  for (std::size_t i = 0; i < fruit_groups.size(); ++i) {
    const BigCount expected = shape.n == 1 ? BigCount(1) : shape.sub_branch_group_sizes[i];
    if (BigCount(static_cast<unsigned long>(fruit_groups[i].size())) != expected)
      throw std::invalid_argument("decorate_custom: group " + std::to_string(i + 1) +
                                  " must hold one fruit per sub-branch");
  }
  FruitfulTree tree;
  tree.shape = shape;
  tree.fruit_kind = FruitKind::Custom;
  tree.fruit_groups = std::move(fruit_groups);
  return tree;
}

namespace {

std::string tuple_row(const std::vector<std::string>& entries) {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i != 0) out += ',';
    out += entries[i];
  }
  out += ')';
  return out;
}

std::string ones_row(unsigned count) {
  std::vector<std::string> entries(count, "1");
  return tuple_row(entries);
}

unsigned long drawable_size(const BigCount& size) {
  if (!size.fits_ulong_p())
    throw std::domain_error("to_dot: sub-branch group too large to draw");
  return size.get_ui();
}

}  // namespace

std::string symbolic_repr(const CatalanTreeShape& shape) {
  std::string out;
  if (shape.n > 1) {
    std::vector<std::string> sizes;
    sizes.reserve(shape.sub_branch_group_sizes.size());
    for (const auto& size : shape.sub_branch_group_sizes) sizes.push_back(to_decimal(size));
    out += tuple_row(sizes);
    out += '\n';
    out += ones_row(shape.main_branches);
    out += '\n';
  }
  out += "(1)\n";
  return out;
}

std::string symbolic_repr(const FruitfulTree& tree) {
  std::vector<std::string> groups;
  groups.reserve(tree.fruit_groups.size());
  for (const auto& group : tree.fruit_groups) {
    std::vector<std::string> fruit;
    fruit.reserve(group.size());
    for (const auto& value : group) fruit.push_back(to_decimal(value));
    groups.push_back(tuple_row(fruit));
  }
  return tuple_row(groups) + '\n' + symbolic_repr(tree.shape);
}

namespace {

void append_shape_nodes(const CatalanTreeShape& shape, std::string& out) {
  out += "  root;\n";
  for (unsigned i = 1; i <= shape.main_branches; ++i)
    out += "  m" + std::to_string(i) + ";\n";
  for (unsigned i = 1; i <= shape.main_branches; ++i) {
    const unsigned long size = drawable_size(shape.sub_branch_group_sizes[i - 1]);
    for (unsigned long j = 1; j <= size; ++j)
      out += "  s" + std::to_string(i) + "_" + std::to_string(j) + ";\n";
  }
}

void append_shape_edges(const CatalanTreeShape& shape, std::string& out) {
  for (unsigned i = 1; i <= shape.main_branches; ++i)
    out += "  root -> m" + std::to_string(i) + ";\n";
  for (unsigned i = 1; i <= shape.main_branches; ++i) {
    const unsigned long size = drawable_size(shape.sub_branch_group_sizes[i - 1]);
    for (unsigned long j = 1; j <= size; ++j)
      out += "  m" + std::to_string(i) + " -> s" + std::to_string(i) + "_" +
             std::to_string(j) + ";\n";
  }
}

}  // namespace

std::string to_dot(const CatalanTreeShape& shape) {
  std::string out = "digraph catalan_tree_" + std::to_string(shape.n) + " {\n";
  append_shape_nodes(shape, out);
  append_shape_edges(shape, out);
  out += "}\n";
  return out;
}

std::string to_dot(const FruitfulTree& tree) {
  const char* suffix = tree.fruit_kind == FruitKind::False  ? "_f"
                       : tree.fruit_kind == FruitKind::True ? "_t"
                                                            : "_custom";
  std::string out =
      "digraph catalan_tree_" + std::to_string(tree.shape.n) + suffix + " {\n";
  append_shape_nodes(tree.shape, out);
  for (std::size_t g = 0; g < tree.fruit_groups.size(); ++g) {
    for (std::size_t j = 0; j < tree.fruit_groups[g].size(); ++j)
      out += "  fruit" + std::to_string(g + 1) + "_" + std::to_string(j + 1) +
             " [label=\"" + to_decimal(tree.fruit_groups[g][j]) + "\"];\n";
  }
  append_shape_edges(tree.shape, out);
  if (tree.shape.n == 1) {
    out += "  root -> fruit1_1;\n";
  } else {
    for (std::size_t g = 0; g < tree.fruit_groups.size(); ++g) {
      for (std::size_t j = 0; j < tree.fruit_groups[g].size(); ++j)
        out += "  s" + std::to_string(g + 1) + "_" + std::to_string(j + 1) +
               " -> fruit" + std::to_string(g + 1) + "_" + std::to_string(j + 1) +
               ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace catalan
