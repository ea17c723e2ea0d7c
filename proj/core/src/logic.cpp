#include "catalan/logic.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catalan/bigcount.hpp"

namespace catalan {

namespace {

unsigned env_cap(unsigned dflt) {
  const char* raw = std::getenv("CATALAN_MAX_N");
  if (raw == nullptr || *raw == '\0') return dflt;
  char* end = nullptr;
  unsigned long parsed = std::strtoul(raw, &end, 10);
  if (end == nullptr || *end != '\0') return dflt;
  if (parsed > dflt) return static_cast<unsigned>(parsed);
  return dflt;
}

}  // namespace

unsigned truth_table_cap() {
  unsigned cap = env_cap(10);
  return cap > kRowEnumerationCap ? kRowEnumerationCap : cap;
}

unsigned product_cap() { return env_cap(14); }

ImplTreePtr leaf(unsigned variable) {
  if (variable == 0) throw std::invalid_argument("leaf: variables are numbered from 1");
  auto node = std::make_shared<ImplTree>();
  node->lo = node->hi = variable;
  return node;
}

ImplTreePtr implication(ImplTreePtr left, ImplTreePtr right) {
  if (!left || !right) throw std::invalid_argument("implication: null subtree");
  if (right->lo != left->hi + 1)
    throw std::invalid_argument("implication: subtrees must cover adjacent variable spans");
  auto node = std::make_shared<ImplTree>();
  node->lo = left->lo;
  node->hi = right->hi;
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

namespace {

void format_into(const ImplTree& tree, std::string& out, bool top) {
  if (tree.is_leaf()) {
    out += 'p';
    out += std::to_string(tree.lo);
    return;
  }
  if (!top) out += '(';
  format_into(*tree.left, out, false);
  out += "->";
  format_into(*tree.right, out, false);
  if (!top) out += ')';
}

}  // namespace

std::string to_formula(const ImplTree& tree) {
  std::string out;
  format_into(tree, out, true);
  return out;
}

namespace {

// span_table[len][lo-1] lists every parenthesization of p_lo..p_{lo+len-1}
// in canonical order: splits ascending, right subtree varying fastest.
// Subtrees are shared between entries.
using SpanTable = std::vector<std::vector<std::vector<ImplTreePtr>>>;

SpanTable build_span_table(unsigned n) {
  SpanTable table(n + 1);
  table[1].resize(n);
  for (unsigned lo = 1; lo <= n; ++lo) table[1][lo - 1] = {leaf(lo)};
  for (unsigned len = 2; len <= n; ++len) {
    table[len].resize(n - len + 1);
    for (unsigned lo = 1; lo + len - 1 <= n; ++lo) {
      auto& out = table[len][lo - 1];
      for (unsigned llen = 1; llen < len; ++llen) {
        for (const auto& l : table[llen][lo - 1])
          for (const auto& r : table[len - llen][lo + llen - 1])
            out.push_back(implication(l, r));
      }
    }
  }
  return table;
}

// Truth rows for the span [lo, lo+n-1], packed 64 per word; row r assigns
// p_lo from the most significant of the n index bits.
struct TruthContext {
  unsigned n = 0;
  unsigned lo = 0;
  std::size_t words = 0;
  std::uint64_t tail_mask = 0;
  std::vector<std::vector<std::uint64_t>> leaves;
};

std::vector<std::uint64_t> make_leaf_bits(unsigned n, unsigned position, std::size_t words) {
  const unsigned shift = n - position;  // p_position is true iff bit `shift` of the row index
  std::vector<std::uint64_t> bits(words);
  if (shift >= 6) {
    for (std::size_t w = 0; w < words; ++w)
      bits[w] = ((w >> (shift - 6)) & 1u) ? ~std::uint64_t{0} : 0;
  } else {
    std::uint64_t word = 0;
    for (unsigned b = 0; b < 64; ++b)
      if ((b >> shift) & 1u) word |= std::uint64_t{1} << b;
    for (auto& w : bits) w = word;
  }
  return bits;
}

TruthContext make_truth_context(unsigned n, unsigned lo) {
  TruthContext ctx;
  ctx.n = n;
  ctx.lo = lo;
  const std::uint64_t rows = std::uint64_t{1} << n;
  ctx.words = static_cast<std::size_t>((rows + 63) / 64);
  const unsigned tail = static_cast<unsigned>(rows % 64);
  ctx.tail_mask = tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  ctx.leaves.reserve(n);
  for (unsigned q = 1; q <= n; ++q) ctx.leaves.push_back(make_leaf_bits(n, q, ctx.words));
  return ctx;
}

std::vector<std::uint64_t> truth_bits(const ImplTree& tree, const TruthContext& ctx) {
  if (tree.is_leaf()) return ctx.leaves[tree.lo - ctx.lo];
  auto acc = truth_bits(*tree.left, ctx);
  const auto rhs = truth_bits(*tree.right, ctx);
  for (std::size_t w = 0; w < acc.size(); ++w) acc[w] = ~acc[w] | rhs[w];
  return acc;
}

TreeCount count_truth(const ImplTreePtr& tree, const TruthContext& ctx) {
  auto bits = truth_bits(*tree, ctx);
  bits.back() &= ctx.tail_mask;
  unsigned long trues = 0;
  for (auto w : bits) trues += static_cast<unsigned long>(std::popcount(w));
  const unsigned long rows = 1ul << ctx.n;
  return TreeCount{tree, BigCount(rows - trues), BigCount(trues)};
}

BigCount product_false_rows(const ImplTree& tree) {
  if (tree.is_leaf()) return BigCount(1);
  BigCount left_false = product_false_rows(*tree.left);
  BigCount left_true = (BigCount(1) << tree.left->variables()) - left_false;
  return left_true * product_false_rows(*tree.right);
}

}  // namespace

std::vector<ImplTreePtr> enumerate_trees(unsigned n) {
  if (n == 0) throw std::out_of_range("enumerate_trees: n must be at least 1");
  const unsigned cap = product_cap();
  if (n > cap)
    throw std::out_of_range("enumerate_trees: n exceeds cap " + std::to_string(cap) +
                            " (raise CATALAN_MAX_N to override)");
  return build_span_table(n)[n][0];
}

TreeCount truth_table_counts(const ImplTreePtr& tree) {
  if (!tree) throw std::invalid_argument("truth_table_counts: null tree");
  const unsigned n = tree->variables();
  if (n > kRowEnumerationCap)
    throw std::out_of_range("truth_table_counts: more than " +
                            std::to_string(kRowEnumerationCap) + " variables");
  return count_truth(tree, make_truth_context(n, tree->lo));
}

TreeCount product_counts(const ImplTreePtr& tree) {
  if (!tree) throw std::invalid_argument("product_counts: null tree");
  BigCount falses = product_false_rows(*tree);
  BigCount trues = (BigCount(1) << tree->variables()) - falses;
  return TreeCount{tree, std::move(falses), std::move(trues)};
}

Census census(unsigned n, CountMode mode) {
  if (n == 0) throw std::out_of_range("census: n must be at least 1");
  const unsigned cap = mode == CountMode::TruthTable ? truth_table_cap() : product_cap();
  if (n > cap)
    throw std::out_of_range("census: n exceeds cap " + std::to_string(cap) +
                            " (raise CATALAN_MAX_N to override)");

  Census out;
  out.n = n;
  out.totals = CensusTotals{BigCount(0), BigCount(0), BigCount(0)};

  const auto table = build_span_table(n);
  TruthContext ctx;
  if (mode == CountMode::TruthTable) ctx = make_truth_context(n, 1);

  auto tally = [&](const ImplTreePtr& tree) {
    TreeCount counted =
        mode == CountMode::TruthTable ? count_truth(tree, ctx) : product_counts(tree);
    out.totals.f += counted.false_rows;
    out.totals.t += counted.true_rows;
    return counted;
  };

  if (n == 1) {
    // Single leaf: contributes to the totals, but there is no root split.
    TreeCount counted = tally(table[1][0][0]);
    (void)counted;
  } else {
    for (const auto& tree : table[n][0]) {
      const unsigned split = tree->left->hi;
      if (out.groups.empty() || out.groups.back().split != split)
        out.groups.push_back(CensusGroup{split, {}});
      out.groups.back().trees.push_back(tally(tree));
    }
  }
  out.totals.g = out.totals.f + out.totals.t;
  return out;
}

std::string census_to_csv(const Census& census) {
  std::string out = "n,split_i,tree_index,false_rows,true_rows\n";
  std::size_t index = 0;
  for (const auto& group : census.groups) {
    for (const auto& tree : group.trees) {
      out += std::to_string(census.n);
      out += ',';
      out += std::to_string(group.split);
      out += ',';
      out += std::to_string(index++);
      out += ',';
      out += to_decimal(tree.false_rows);
      out += ',';
      out += to_decimal(tree.true_rows);
      out += '\n';
    }
  }
  return out;
}

std::string census_to_json(const Census& census) {
  nlohmann::json doc;
  doc["n"] = census.n;
  doc["totals"] = {{"f", to_decimal(census.totals.f)},
                   {"t", to_decimal(census.totals.t)},
                   {"g", to_decimal(census.totals.g)}};
  auto groups = nlohmann::json::array();
  for (const auto& group : census.groups) {
    auto trees = nlohmann::json::array();
    for (const auto& tree : group.trees) {
      trees.push_back({{"formula", to_formula(*tree.tree)},
                       {"false_rows", to_decimal(tree.false_rows)},
                       {"true_rows", to_decimal(tree.true_rows)}});
    }
    groups.push_back({{"split", group.split}, {"trees", std::move(trees)}});
  }
  doc["groups"] = std::move(groups);
  return doc.dump(2) + "\n";
}

}  // namespace catalan
