#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

namespace {

std::string g_cli;

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {};
  CliResult result;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::vector<std::string> csv_column(const std::string& csv, std::size_t column) {
  std::vector<std::string> values;
  std::size_t pos = 0;
  bool header = true;
  for (std::size_t eol = csv.find('\n'); eol != std::string::npos;
       pos = eol + 1, eol = csv.find('\n', pos)) {
    const std::string line = csv.substr(pos, eol - pos);
    if (header) {
      header = false;
      continue;
    }
    std::size_t start = 0;
    for (std::size_t c = 0; c < column; ++c) start = line.find(',', start) + 1;
    std::size_t end = line.find(',', start);
    if (end == std::string::npos) end = line.size();
    values.push_back(line.substr(start, end - start));
  }
  return values;
}

}  // namespace

TEST_CASE("seq emits the golden component-total table") {
  const auto csv = run_cli("seq --kind a --from 0 --to 10 --format csv");
  REQUIRE(csv.status == 0);
  CHECK(csv.out ==
        "kind,n,value\n"
        "a,0,0\na,1,1\na,2,3\na,3,5\na,4,9\na,5,19\na,6,48\na,7,139\na,8,437\na,9,1439\na,10,"
        "4872\n");

  const auto table = run_cli("seq --kind a --from 0 --to 10 --format table");
  REQUIRE(table.status == 0);
  CHECK(table.out ==
        "n    0  1  2  3  4   5   6    7    8     9    10\n"
        "a_n  0  1  3  5  9  19  48  139  437  1439  4872\n");
}

TEST_CASE("seq emits the fruitful totals") {
  const auto af = run_cli("seq --kind af --from 0 --to 10 --format csv");
  REQUIRE(af.status == 0);
  const std::vector<std::string> expected = {"0",    "2",     "4",     "9",     "28",   "123",
                                             "662",  "3955",  "25032", "164335", "1106794"};
  CHECK(csv_column(af.out, 2) == expected);

  const auto at = run_cli("seq --kind at --from 0 --to 10 --format csv");
  REQUIRE(at.status == 0);
  const std::vector<std::string> at_expected = {"0",     "2",     "6",     "17",    "70",
                                                "363",   "2122",  "13219", "85666", "570703",
                                                "3881638"};
  CHECK(csv_column(at.out, 2) == at_expected);
}

TEST_CASE("seq json matches the record schema byte for byte") {
  const auto json = run_cli("seq --kind c --from 0 --to 0 --format json");
  REQUIRE(json.status == 0);
  CHECK(json.out == "[{\"kind\":\"c\",\"n\":0,\"value\":\"0\"}]\n");

  const auto markdown = run_cli("seq --kind f --from 1 --to 3 --format markdown");
  REQUIRE(markdown.status == 0);
  CHECK(markdown.out == "| n | f_n |\n| --- | --- |\n| 1 | 1 |\n| 2 | 1 |\n| 3 | 4 |\n");
}

TEST_CASE("seq rejects bad arguments") {
  CHECK(run_cli("seq --kind x --to 3").status == 2);
  CHECK(run_cli("seq --kind c --from 5 --to 3").status == 2);
  CHECK(run_cli("seq --kind c --to 3 --format yaml").status == 2);
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("triangle layouts") {
  const auto table = run_cli("triangle --rows 6");
  REQUIRE(table.status == 0);
  CHECK(table.out ==
        "f_2 = 1   | 1\n"
        "f_3 = 4   | 1 3\n"
        "f_4 = 19  | 4 3 12\n"
        "f_5 = 104 | 19 12 12 61\n"
        "f_6 = 614 | 104 57 48 61 344\n");

  const auto tiny = run_cli("triangle --rows 2");
  REQUIRE(tiny.status == 0);
  CHECK(tiny.out == "f_2 = 1 | 1\n");

  const auto csv = run_cli("triangle --rows 8 --format csv");
  REQUIRE(csv.status == 0);
  CHECK(csv.out.find("n,i,term,row_sum\n") == 0);
  CHECK(csv.out.find("8,1,3816,24595\n") != std::string::npos);

  CHECK(run_cli("triangle --rows 1").status == 2);
}

TEST_CASE("tree output") {
  const auto text = run_cli("tree 4 --format text");
  REQUIRE(text.status == 0);
  CHECK(text.out == "(2,1,2)\n(1,1,1)\n(1)\n");

  const auto single = run_cli("tree 1 --format dot");
  REQUIRE(single.status == 0);
  CHECK(single.out == "digraph catalan_tree_1 {\n  root;\n}\n");

  const auto fruity = run_cli("tree 5 --fruit f");
  REQUIRE(fruity.status == 0);
  CHECK(fruity.out.find("digraph catalan_tree_5_f {") == 0);
  long label_sum = 0;
  std::size_t pos = 0;
  while ((pos = fruity.out.find("[label=\"", pos)) != std::string::npos) {
    pos += 8;
    label_sum += std::atol(fruity.out.c_str() + pos);
  }
  CHECK(label_sum == 104);

  CHECK(run_cli("tree 5 --fruit f").out == fruity.out);  // byte-identical rerun
  CHECK(run_cli("tree 0").status == 2);
  CHECK(run_cli("tree 15 --fruit f").status == 2);  // beyond the census cap
}

TEST_CASE("series subcommand") {
  const auto sqrt_csv = run_cli("series --order 6 --gf sqrt --format csv");
  REQUIRE(sqrt_csv.status == 0);
  CHECK(sqrt_csv.out == "k,coeff\n0,1\n1,-2\n2,-2\n3,-4\n4,-10\n5,-28\n6,-84\n");

  const auto a_table = run_cli("series --order 5 --gf a");
  REQUIRE(a_table.status == 0);
  CHECK(a_table.out == "a_0 = 0\na_1 = 1\na_2 = 3\na_3 = 5\na_4 = 9\na_5 = 19\n");

  CHECK(run_cli("series --gf nope --order 4").status == 2);
}

TEST_CASE("parity subcommand") {
  const auto csv = run_cli("parity --kind f --max-n 16 --format csv");
  REQUIRE(csv.status == 0);
  CHECK(csv.out.find("kind,n,observed,predicted,agrees\n") == 0);
  CHECK(csv.out.find("f,1,odd,odd,true\n") != std::string::npos);
  CHECK(csv.out.find("f,3,even,even,true\n") != std::string::npos);
  CHECK(csv.out.find("f,16,odd,odd,true\n") != std::string::npos);
  CHECK(csv.out.find("false") == std::string::npos);

  const auto af = run_cli("parity --kind af --max-n 8 --format csv");
  REQUIRE(af.status == 0);
  CHECK(af.out.find("af,1,") == std::string::npos);  // prediction starts at n = 2
  CHECK(af.out.find("af,2,even,even,true\n") != std::string::npos);
}

TEST_CASE("asymp subcommand") {
  const auto csv = run_cli("asymp --kind f --from 6 --to 6 --format csv");
  REQUIRE(csv.status == 0);
  const auto fields = csv_column(csv.out, 2);
  REQUIRE(fields.size() == 1);
  CHECK(std::stod(fields[0]) == doctest::Approx(531.65).epsilon(1e-3));
  const auto ratios = csv_column(csv.out, 3);
  CHECK(std::stod(ratios[0]) == doctest::Approx(1.1549).epsilon(1e-3));

  const auto diag = run_cli("asymp --diag --from 6 --to 6 --format csv");
  REQUIRE(diag.status == 0);
  CHECK(diag.out.find("n,growth_c,growth_f,growth_t,t_over_f\n") == 0);
  CHECK(std::stod(csv_column(diag.out, 4)[0]) == doctest::Approx(3.37785).epsilon(1e-4));

  CHECK(run_cli("asymp --kind g --from 1 --to 3").status == 2);
}

TEST_CASE("verify suites pass and fail loudly") {
  const auto series = run_cli("verify --suite series --max-n 64");
  REQUIRE(series.status == 0);
  CHECK(series.out.find("[ok]") != std::string::npos);
  CHECK(series.out.find("[FAIL]") == std::string::npos);
  CHECK(series.out.find("verify: 3/3 checks passed\n") != std::string::npos);

  const auto oracle = run_cli("verify --suite oracle --max-n 6");
  REQUIRE(oracle.status == 0);
  CHECK(oracle.out.find("verify: 5/5 checks passed\n") != std::string::npos);

  const auto parity = run_cli("verify --suite parity --max-n 256");
  REQUIRE(parity.status == 0);
  CHECK(parity.out.find("verify: 6/6 checks passed\n") != std::string::npos);

  CHECK(run_cli("verify --suite bogus").status == 2);
  CHECK(run_cli("verify").status == 2);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string cmds[] = {"seq --kind t --from 0 --to 12 --format table",
                              "triangle --rows 7 --format json",
                              "series --order 16 --gf c --format json",
                              "asymp --kind c --from 2 --to 12 --format csv"};
  for (const auto& cmd : cmds) {
    CAPTURE(cmd);
    const auto first = run_cli(cmd);
    const auto second = run_cli(cmd);
    REQUIRE(first.status == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
    CHECK(first.out.back() == '\n');
  }
}

int main(int argc, char** argv) {
  std::vector<char*> pass;
  for (int i = 0; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg.rfind("--cli=", 0) == 0) {
      g_cli = std::string(arg.substr(6));
    } else {
      pass.push_back(argv[i]);
    }
  }
  if (g_cli.empty()) {
    if (const char* env = std::getenv("CATALAN_CLI")) g_cli = env;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "test_cli: pass --cli=<path-to-catalan-binary>\n");
    return 1;
  }
  doctest::Context context(static_cast<int>(pass.size()), pass.data());
  return context.run();
}
