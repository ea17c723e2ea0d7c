#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "catalan/asymptotics.hpp"
#include "catalan/logic.hpp"
#include "catalan/parity.hpp"
#include "catalan/series.hpp"
#include "render.hpp"

namespace catalan::cli {

namespace {

class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& name, const std::string& range) {
    std::string verdict = ok ? "[ok]" : "[FAIL]";
    verdict.resize(7, ' ');
    std::string padded = name;
    if (padded.size() < 56) padded.resize(56, ' ');
    out_ << verdict << padded << range << "\n";
    ok ? ++passed_ : ++failed_;
  }

  bool summarize() {
    out_ << "verify: " << passed_ << "/" << (passed_ + failed_) << " checks passed\n";
    return failed_ == 0;
  }

 private:
  std::ostream& out_;
  unsigned passed_ = 0;
  unsigned failed_ = 0;
};

bool odd(const BigCount& value) { return mpz_odd_p(value.get_mpz_t()) != 0; }

void suite_oracle(Reporter& rep, std::optional<unsigned> max_n) {
  const unsigned truth_n = std::min(max_n.value_or(8), truth_table_cap());
  const unsigned prod_n = std::min(max_n.value_or(13), product_cap());

  bool totals_ok = true, groups_ok = true;
  std::vector<Census> truth_censuses;
  for (unsigned n = 1; n <= truth_n; ++n) {
    Census c = census(n, CountMode::TruthTable);
    totals_ok = totals_ok && c.totals.f == f_false(n) && c.totals.t == t_true(n) &&
                c.totals.g == g_total(n);
    for (const auto& group : c.groups) {
      BigCount falses(0);
      for (const auto& tree : group.trees) falses += tree.false_rows;
      groups_ok = groups_ok && falses == triangle_term(n, group.split);
    }
    truth_censuses.push_back(std::move(c));
  }
  const std::string truth_range = "n <= " + std::to_string(truth_n);
  rep.check(totals_ok, "truth-table census totals equal f_n and t_n", truth_range);
  rep.check(groups_ok, "truth-table group sums equal triangle terms", truth_range);

  totals_ok = groups_ok = true;
  bool per_tree_ok = true;
  for (unsigned n = 1; n <= prod_n; ++n) {
    Census c = census(n, CountMode::Product);
    totals_ok = totals_ok && c.totals.f == f_false(n) && c.totals.t == t_true(n) &&
                c.totals.g == g_total(n);
    for (const auto& group : c.groups) {
      BigCount falses(0);
      for (const auto& tree : group.trees) falses += tree.false_rows;
      groups_ok = groups_ok && falses == triangle_term(n, group.split);
    }
    if (n <= truth_n) {
      const Census& full = truth_censuses[n - 1];
      for (std::size_t g = 0; g < c.groups.size(); ++g) {
        for (std::size_t j = 0; j < c.groups[g].trees.size(); ++j) {
          per_tree_ok = per_tree_ok &&
                        c.groups[g].trees[j].false_rows == full.groups[g].trees[j].false_rows &&
                        c.groups[g].trees[j].true_rows == full.groups[g].trees[j].true_rows;
        }
      }
    }
  }
  const std::string prod_range = "n <= " + std::to_string(prod_n);
  rep.check(totals_ok, "product-rule census totals equal f_n and t_n", prod_range);
  rep.check(groups_ok, "product-rule group sums equal triangle terms", prod_range);
  rep.check(per_tree_ok, "per-tree product counts equal exhaustive counts", truth_range);
}

void suite_parity(Reporter& rep, std::optional<unsigned> max_n) {
  const unsigned n_max = max_n.value_or(4096);
  const unsigned cross_max = std::min(n_max, 512u);
  const Mod2Table table = mod2_engine(n_max);
  const std::string range = "n <= " + std::to_string(n_max);

  auto all_agree = [&](SeqKind kind) {
    for (const auto& v : verify_parity(table, kind))
      if (!v.agrees) return false;
    return true;
  };

  rep.check(all_agree(SeqKind::C) && all_agree(SeqKind::F) && all_agree(SeqKind::T),
            "c, f, t odd exactly at n = 1 and powers of two", range);
  rep.check(all_agree(SeqKind::G), "g stays even", range);
  rep.check(all_agree(SeqKind::A), "a odd exactly at odd n and powers of two", range);
  rep.check(all_agree(SeqKind::AF) && all_agree(SeqKind::AT),
            "fruitful totals odd exactly at odd n", "2 <= n <= " + std::to_string(n_max));

  bool shared = true;
  for (unsigned n = 1; n <= n_max; ++n)
    shared = shared && table.residue(SeqKind::F, n) == table.residue(SeqKind::C, n) &&
             table.residue(SeqKind::T, n) == table.residue(SeqKind::C, n);
  rep.check(shared, "f and t preserve the parity of c", range);

  bool cross = true;
  for (unsigned n = 1; n <= cross_max; ++n) {
    for (SeqKind kind : kAllSeqKinds)
      cross = cross && (table.residue(kind, n) == 1) == odd(seq_value(kind, n));
  }
  rep.check(cross, "mod-2 recurrences match the full values",
            "n <= " + std::to_string(cross_max));
}

void suite_series(Reporter& rep, std::optional<unsigned> max_n) {
  const unsigned order = max_n.value_or(64);
  const std::string range = "k <= " + std::to_string(order);

  bool integral = true;
  bool matches = true;
  bool assembled = true;
  try {
    const Series a = expand_A_closed_form(order);
    integral = a.integral();
    for (const auto& m : compare_with_sequence(a, SeqKind::A)) matches = matches && m.match;
    const Series rebuilt =
        series_sub(series_add(expand_catalan_gf(order), expand_index_gf(order)),
                   Series({0, 1}, order));
    assembled = a == rebuilt;
  } catch (const std::exception&) {
    integral = matches = assembled = false;
  }
  rep.check(integral, "closed form expands with integer coefficients", range);
  rep.check(matches, "closed-form coefficients equal a_n", range);
  rep.check(assembled, "closed form equals catalan gf + index gf - x", range);
}

void suite_asymptotics(Reporter& rep, std::optional<unsigned> max_n) {
  const unsigned n_max = max_n.value_or(400);
  if (n_max < 50) throw UsageError("asymptotics suite needs --max-n >= 50");
  const double target = 2.0 + std::numbers::sqrt3;

  bool below = true, increasing = true;
  double prev = 0.0, last = 0.0;
  for (unsigned n = 6; n <= n_max; ++n) {
    const double ratio = ratio_diagnostics(n).t_over_f;
    below = below && ratio < target;
    if (n > 6) increasing = increasing && ratio > prev;
    prev = ratio;
    last = ratio;
  }
  rep.check(below && increasing, "t_n/f_n climbs toward 2+sqrt(3) from below",
            "6 <= n <= " + std::to_string(n_max));
  rep.check(std::abs(last - target) / target < 0.005,
            "t_n/f_n within 0.5% of 2+sqrt(3)", "n = " + std::to_string(n_max));

  const RatioDiagnostics d = ratio_diagnostics(n_max);
  rep.check(std::abs(d.growth_f - 8.0) / 8.0 < 0.01, "f growth factor within 1% of 8",
            "n = " + std::to_string(n_max));
  rep.check(std::abs(d.growth_c - 4.0) / 4.0 < 0.01, "c growth factor within 1% of 4",
            "n = " + std::to_string(n_max));

  bool banded = true;
  for (unsigned n = 50; n <= n_max; ++n) {
    const double ratio = estimate(SeqKind::F, n).exact_ratio;
    banded = banded && ratio > 0.8 && ratio < 1.2;
  }
  rep.check(banded, "f estimate ratio stays inside (0.8, 1.2)",
            "50 <= n <= " + std::to_string(n_max));

  bool drifting = true;
  double prev_gap = -1.0;
  for (unsigned n : {n_max / 8, n_max / 4, n_max / 2, n_max}) {
    const double gap = std::abs(estimate(SeqKind::F, n).exact_ratio - 1.0);
    if (prev_gap >= 0.0) drifting = drifting && gap < prev_gap;
    prev_gap = gap;
  }
  rep.check(drifting, "f estimate ratio drifts toward 1 on sampled points",
            "n in {" + std::to_string(n_max / 8) + ", " + std::to_string(n_max / 4) + ", " +
                std::to_string(n_max / 2) + ", " + std::to_string(n_max) + "}");
}

}  // namespace

bool run_verify(const std::string& suite, std::optional<unsigned> max_n, std::ostream& out) {
  Reporter rep(out);
  bool known = false;
  if (suite == "oracle" || suite == "all") {
    suite_oracle(rep, max_n);
    known = true;
  }
  if (suite == "parity" || suite == "all") {
    suite_parity(rep, max_n);
    known = true;
  }
  if (suite == "series" || suite == "all") {
    suite_series(rep, max_n);
    known = true;
  }
  if (suite == "asymptotics" || suite == "all") {
    suite_asymptotics(rep, max_n);
    known = true;
  }
  if (!known) throw UsageError("unknown suite: " + suite);
  return rep.summarize();
}

}  // namespace catalan::cli
