#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "catalan/seq.hpp"
#include "catalan/tree.hpp"
#include "render.hpp"
#include "verify.hpp"

namespace {

using catalan::SeqKind;
using catalan::cli::UsageError;

SeqKind parse_kind(const std::string& tag) {
  const auto kind = catalan::seq_kind_from_string(tag);
  if (!kind) throw UsageError("unknown kind: " + tag + " (expected c, g, f, t, a, af or at)");
  return *kind;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for bracketed-implication counting sequences"};
  app.require_subcommand(1);
  const std::vector<std::string> table_formats{"table", "csv", "json", "markdown"};
  const std::vector<std::string> data_formats{"table", "csv", "json"};

  std::string seq_kind = "c";
  unsigned seq_from = 0, seq_to = 0;
  std::string seq_format = "table";
  auto* seq = app.add_subcommand("seq", "Print a range of one sequence");
  seq->add_option("--kind", seq_kind, "c, g, f, t, a, af or at")->required();
  seq->add_option("--from", seq_from, "first index (default 0)");
  seq->add_option("--to", seq_to, "last index")->required();
  seq->add_option("--format", seq_format, "table, csv, json or markdown")
      ->check(CLI::IsMember(table_formats));

  unsigned triangle_rows = 0;
  std::string triangle_format = "table";
  auto* triangle = app.add_subcommand("triangle", "Print the false-row triangle f_2..f_rows");
  triangle->add_option("--rows", triangle_rows, "last row index (>= 2)")->required();
  triangle->add_option("--format", triangle_format, "table, csv, json or markdown")
      ->check(CLI::IsMember(table_formats));

  unsigned tree_n = 0;
  std::string tree_fruit;
  std::string tree_format = "dot";
  auto* tree = app.add_subcommand("tree", "Draw the catalan tree for n");
  tree->add_option("n", tree_n, "tree index (>= 1)")->required();
  tree->add_option("--fruit", tree_fruit, "decorate sub-branches: f (false rows) or t (true rows)")
      ->check(CLI::IsMember(std::vector<std::string>{"f", "t"}));
  tree->add_option("--format", tree_format, "dot or text")
      ->check(CLI::IsMember(std::vector<std::string>{"dot", "text"}));

  std::string verify_suite;
  unsigned verify_max_n = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", verify_suite, "oracle, parity, series, asymptotics or all")
      ->required()
      ->check(CLI::IsMember(
          std::vector<std::string>{"oracle", "parity", "series", "asymptotics", "all"}));
  auto* verify_max_opt =
      verify->add_option("--max-n", verify_max_n, "override the suite's sweep bound");

  std::string series_gf = "a";
  unsigned series_order = 64;
  std::string series_format = "table";
  auto* series = app.add_subcommand("series", "Expand a generating function");
  series->add_option("--gf", series_gf, "a (closed form), c, n or sqrt");
  series->add_option("--order", series_order, "highest power to expand (default 64)");
  series->add_option("--format", series_format, "table, csv or json")
      ->check(CLI::IsMember(data_formats));

  std::string parity_kind = "c";
  unsigned parity_max_n = 64;
  std::string parity_format = "table";
  auto* parity = app.add_subcommand("parity", "Parity verdicts for one sequence");
  parity->add_option("--kind", parity_kind, "c, g, f, t, a, af or at")->required();
  parity->add_option("--max-n", parity_max_n, "last index (default 64)");
  parity->add_option("--format", parity_format, "table, csv or json")
      ->check(CLI::IsMember(data_formats));

  std::string asymp_kind = "c";
  unsigned asymp_from = 1, asymp_to = 10;
  bool asymp_diag = false;
  std::string asymp_format = "table";
  auto* asymp = app.add_subcommand("asymp", "Growth estimates and ratio diagnostics");
  asymp->add_option("--kind", asymp_kind, "c, a, f or t");
  auto* asymp_from_opt = asymp->add_option("--from", asymp_from, "first index");
  asymp->add_option("--to", asymp_to, "last index (default 10)");
  asymp->add_flag("--diag", asymp_diag, "print growth factors and t/f instead of estimates");
  asymp->add_option("--format", asymp_format, "table, csv or json")
      ->check(CLI::IsMember(data_formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*seq) {
      std::cout << catalan::cli::render_seq(parse_kind(seq_kind), seq_from, seq_to, seq_format);
    } else if (*triangle) {
      std::cout << catalan::cli::render_triangle(triangle_rows, triangle_format);
    } else if (*tree) {
      std::optional<catalan::FruitKind> fruit;
      if (tree_fruit == "f") fruit = catalan::FruitKind::False;
      if (tree_fruit == "t") fruit = catalan::FruitKind::True;
      std::cout << catalan::cli::render_tree(tree_n, fruit, tree_format);
    } else if (*verify) {
      std::optional<unsigned> max_n;
      if (verify_max_opt->count() > 0) max_n = verify_max_n;
      if (!catalan::cli::run_verify(verify_suite, max_n, std::cout)) return 1;
    } else if (*series) {
      std::cout << catalan::cli::render_series(series_gf, series_order, series_format);
    } else if (*parity) {
      std::cout << catalan::cli::render_parity(parse_kind(parity_kind), parity_max_n,
                                               parity_format);
    } else if (*asymp) {
      if (asymp_diag) {
        if (asymp_from_opt->count() == 0) asymp_from = 2;
        std::cout << catalan::cli::render_asymp_diag(asymp_from, asymp_to, asymp_format);
      } else {
        std::cout << catalan::cli::render_asymp(parse_kind(asymp_kind), asymp_from, asymp_to,
                                                asymp_format);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
