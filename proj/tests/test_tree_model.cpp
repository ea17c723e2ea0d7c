#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "catalan/seq.hpp"
#include "catalan/tree.hpp"

using namespace catalan;

TEST_CASE("shape construction") {
  const CatalanTreeShape four = build_shape(4);
  CHECK(four.n == 4);
  CHECK(four.main_branches == 3);
  REQUIRE(four.sub_branch_group_sizes.size() == 3);
  CHECK(four.sub_branch_group_sizes[0] == 2);
  CHECK(four.sub_branch_group_sizes[1] == 1);
  CHECK(four.sub_branch_group_sizes[2] == 2);
  CHECK(component_count(four) == 9);

  const CatalanTreeShape one = build_shape(1);
  CHECK(one.main_branches == 0);
  CHECK(one.sub_branch_group_sizes.empty());
  CHECK(component_count(one) == 1);

  CHECK_THROWS_AS(build_shape(0), std::domain_error);
}

TEST_CASE("component totals match the sequence across the sweep") {
  for (unsigned n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const CatalanTreeShape shape = build_shape(n);
    BigCount subs(0);
    for (const auto& size : shape.sub_branch_group_sizes) subs += size;
    if (n > 1) CHECK(subs == catalan::catalan(n));
    CHECK(component_count(shape) == a_total(n));
    CHECK(component_count(decorate(shape, FruitKind::False)) == fruitful_total(n, SeqKind::F));
    CHECK(component_count(decorate(shape, FruitKind::True)) == fruitful_total(n, SeqKind::T));
  }
}

TEST_CASE("decoration carries the census counts") {
  const FruitfulTree five = decorate(build_shape(5), FruitKind::False);
  REQUIRE(five.fruit_groups.size() == 4);
  BigCount total(0);
  for (const auto& group : five.fruit_groups)
    for (const auto& fruit : group) total += fruit;
  CHECK(total == f_false(5));

  const std::vector<std::vector<long>> sums_by_group = {{19}, {12}, {12}, {61}};
  for (std::size_t g = 0; g < five.fruit_groups.size(); ++g) {
    BigCount group_sum(0);
    for (const auto& fruit : five.fruit_groups[g]) group_sum += fruit;
    CHECK(group_sum == sums_by_group[g][0]);
  }

  const FruitfulTree tiny = decorate(build_shape(1), FruitKind::True);
  REQUIRE(tiny.fruit_groups.size() == 1);
  REQUIRE(tiny.fruit_groups[0].size() == 1);
  CHECK(tiny.fruit_groups[0][0] == 1);
  CHECK(component_count(tiny) == 2);

  CHECK_THROWS_AS(decorate(build_shape(3), FruitKind::Custom), std::invalid_argument);
}

TEST_CASE("custom fruit") {
  const CatalanTreeShape two = build_shape(2);
  const FruitfulTree custom = decorate_custom(two, {{BigCount(7)}});
  CHECK(component_count(custom) == 3 + 7);
  CHECK(custom.fruit_kind == FruitKind::Custom);

  CHECK_THROWS_AS(decorate_custom(two, {}), std::invalid_argument);
  CHECK_THROWS_AS(decorate_custom(two, {{BigCount(1), BigCount(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(decorate_custom(build_shape(4), {{BigCount(1)}, {BigCount(2)}}),
                  std::invalid_argument);
}

TEST_CASE("symbolic representation") {
  CHECK(symbolic_repr(build_shape(4)) == "(2,1,2)\n(1,1,1)\n(1)\n");
  CHECK(symbolic_repr(build_shape(1)) == "(1)\n");
  CHECK(symbolic_repr(build_shape(2)) == "(1)\n(1)\n(1)\n");

  const FruitfulTree five = decorate(build_shape(5), FruitKind::False);
  CHECK(symbolic_repr(five) ==
        "((1,3,3,7,5),(3,9),(7,5),(15,13,13,9,11))\n(5,2,2,5)\n(1,1,1,1)\n(1)\n");

  const FruitfulTree tiny = decorate(build_shape(1), FruitKind::False);
  CHECK(symbolic_repr(tiny) == "((1))\n(1)\n");
}

TEST_CASE("dot output is deterministic and exact") {
  CHECK(to_dot(build_shape(2)) ==
        "digraph catalan_tree_2 {\n"
        "  root;\n"
        "  m1;\n"
        "  s1_1;\n"
        "  root -> m1;\n"
        "  m1 -> s1_1;\n"
        "}\n");

  CHECK(to_dot(build_shape(1)) == "digraph catalan_tree_1 {\n  root;\n}\n");

  CHECK(to_dot(decorate(build_shape(1), FruitKind::False)) ==
        "digraph catalan_tree_1_f {\n"
        "  root;\n"
        "  fruit1_1 [label=\"1\"];\n"
        "  root -> fruit1_1;\n"
        "}\n");

  const std::string twice_a = to_dot(decorate(build_shape(6), FruitKind::True));
  const std::string twice_b = to_dot(decorate(build_shape(6), FruitKind::True));
  CHECK(twice_a == twice_b);
  CHECK(twice_a.find("digraph catalan_tree_6_t {") == 0);

  const std::string custom = to_dot(decorate_custom(build_shape(2), {{BigCount(7)}}));
  CHECK(custom.find("digraph catalan_tree_2_custom {") == 0);
  CHECK(custom.find("fruit1_1 [label=\"7\"];") != std::string::npos);
}

TEST_CASE("dot shape-node count equals the component total") {
  for (unsigned n : {1u, 4u, 5u, 8u}) {
    CAPTURE(n);
    const std::string dot = to_dot(build_shape(n));
    long declarations = 0;
    std::size_t pos = 0;
    for (std::size_t eol = dot.find('\n'); eol != std::string::npos;
         pos = eol + 1, eol = dot.find('\n', pos)) {
      const std::string line = dot.substr(pos, eol - pos);
      if (line.size() > 3 && line.back() == ';' && line.find("->") == std::string::npos)
        ++declarations;
    }
    CHECK(BigCount(declarations) == a_total(n));
  }
}
