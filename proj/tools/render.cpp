#include "render.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catalan/asymptotics.hpp"
#include "catalan/logic.hpp"
#include "catalan/parity.hpp"
#include "catalan/series.hpp"

namespace catalan::cli {

namespace {

using nlohmann::json;

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string seq_label(SeqKind kind) {
  switch (kind) {
    case SeqKind::C: return "C_n";
    case SeqKind::G: return "g_n";
    case SeqKind::F: return "f_n";
    case SeqKind::T: return "t_n";
    case SeqKind::A: return "a_n";
    case SeqKind::AF: return "a_n(f_n)";
    case SeqKind::AT: return "a_n(t_n)";
  }
  return "?";
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

[[noreturn]] void bad_format(const std::string& format) {
  throw UsageError("unsupported format: " + format);
}

}  // namespace

std::string fmt_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string render_seq(SeqKind kind, unsigned from, unsigned to, const std::string& format) {
  const auto values = seq_table(kind, from, to);
  const std::string tag(to_string(kind));

  if (format == "table") {
    const std::string label = seq_label(kind);
    std::string top = pad_right("n", label.size());
    std::string bottom = label;
    for (const auto& [n, value] : values) {
      const std::string ns = std::to_string(n);
      const std::string vs = to_decimal(value);
      const std::size_t width = ns.size() > vs.size() ? ns.size() : vs.size();
      top += "  " + pad_left(ns, width);
      bottom += "  " + pad_left(vs, width);
    }
    return top + "\n" + bottom + "\n";
  }
  if (format == "csv") {
    std::string out = "kind,n,value\n";
    for (const auto& [n, value] : values)
      out += tag + "," + std::to_string(n) + "," + to_decimal(value) + "\n";
    return out;
  }
  if (format == "json") {
    json doc = json::array();
    for (const auto& [n, value] : values)
      doc.push_back({{"kind", tag}, {"n", n}, {"value", to_decimal(value)}});
    return doc.dump() + "\n";
  }
  if (format == "markdown") {
    std::string out = "| n | " + seq_label(kind) + " |\n| --- | --- |\n";
    for (const auto& [n, value] : values)
      out += "| " + std::to_string(n) + " | " + to_decimal(value) + " |\n";
    return out;
  }
  bad_format(format);
}

std::string render_triangle(unsigned rows, const std::string& format) {
  if (rows < 2) throw UsageError("triangle rows start at 2");
  std::vector<TriangleRow> triangle;
  triangle.reserve(rows - 1);
  for (unsigned n = 2; n <= rows; ++n) triangle.push_back(triangle_row(n));

  if (format == "table") {
    // Row sums sit in the leftmost column, mirroring the triangular table.
    const std::string last_label = "f_" + std::to_string(rows);
    std::size_t sum_width = 0;
    for (const auto& row : triangle) {
      const std::size_t len = to_decimal(row.sum()).size();
      if (len > sum_width) sum_width = len;
    }
    std::string out;
    for (const auto& row : triangle) {
      out += pad_right("f_" + std::to_string(row.n), last_label.size());
      out += " = " + pad_right(to_decimal(row.sum()), sum_width) + " |";
      for (const auto& term : row.terms) out += " " + to_decimal(term);
      out += "\n";
    }
    return out;
  }
  if (format == "csv") {
    std::string out = "n,i,term,row_sum\n";
    for (const auto& row : triangle) {
      const std::string sum = to_decimal(row.sum());
      for (std::size_t i = 0; i < row.terms.size(); ++i)
        out += std::to_string(row.n) + "," + std::to_string(i + 1) + "," +
               to_decimal(row.terms[i]) + "," + sum + "\n";
    }
    return out;
  }
  if (format == "json") {
    json doc = json::array();
    for (const auto& row : triangle) {
      json terms = json::array();
      for (const auto& term : row.terms) terms.push_back(to_decimal(term));
      doc.push_back({{"n", row.n}, {"sum", to_decimal(row.sum())}, {"terms", std::move(terms)}});
    }
    return doc.dump() + "\n";
  }
  if (format == "markdown") {
    std::string out = "| n | sum | terms |\n| --- | --- | --- |\n";
    for (const auto& row : triangle) {
      out += "| " + std::to_string(row.n) + " | " + to_decimal(row.sum()) + " | ";
      for (std::size_t i = 0; i < row.terms.size(); ++i) {
        if (i != 0) out += " ";
        out += to_decimal(row.terms[i]);
      }
      out += " |\n";
    }
    return out;
  }
  bad_format(format);
}

std::string render_tree(unsigned n, std::optional<FruitKind> fruit, const std::string& format) {
  const CatalanTreeShape shape = build_shape(n);
  if (format == "text") {
    return fruit ? symbolic_repr(decorate(shape, *fruit)) : symbolic_repr(shape);
  }
  if (format == "dot") {
    return fruit ? to_dot(decorate(shape, *fruit)) : to_dot(shape);
  }
  bad_format(format);
}

std::string render_series(const std::string& gf, unsigned order, const std::string& format) {
  Series series(0);
  std::string label;
  if (gf == "a") {
    series = expand_A_closed_form(order);
    label = "a";
  } else if (gf == "c") {
    series = expand_catalan_gf(order);
    label = "c";
  } else if (gf == "n") {
    series = expand_index_gf(order);
    label = "n";
  } else if (gf == "sqrt") {
    series = sqrt_one_minus_4x(order);
    label = "s";
  } else {
    throw UsageError("unknown generating function: " + gf + " (expected a, c, n or sqrt)");
  }

  if (format == "table") {
    std::string out;
    for (unsigned k = 0; k <= series.order(); ++k)
      out += label + "_" + std::to_string(k) + " = " + rational_to_string(series.coeff(k)) + "\n";
    return out;
  }
  if (format == "csv") {
    std::string out = "k,coeff\n";
    for (unsigned k = 0; k <= series.order(); ++k)
      out += std::to_string(k) + "," + rational_to_string(series.coeff(k)) + "\n";
    return out;
  }
  if (format == "json") {
    json doc = json::array();
    for (unsigned k = 0; k <= series.order(); ++k)
      doc.push_back({{"kind", gf}, {"n", k}, {"value", rational_to_string(series.coeff(k))}});
    return doc.dump() + "\n";
  }
  bad_format(format);
}

std::string render_parity(SeqKind kind, unsigned max_n, const std::string& format) {
  const auto verdicts = verify_parity(kind, max_n);
  const std::string tag(to_string(kind));

  if (format == "table") {
    const std::size_t n_width = std::to_string(max_n).size();
    std::string out = pad_left("n", n_width) + "  observed  predicted  agree\n";
    for (const auto& v : verdicts) {
      out += pad_left(std::to_string(v.n), n_width);
      out += "  " + pad_right(std::string(to_string(v.observed)), 8);
      out += "  " + pad_right(std::string(to_string(v.predicted)), 9);
      out += "  ";
      out += v.agrees ? "yes" : "no";
      out += "\n";
    }
    return out;
  }
  if (format == "csv") {
    std::string out = "kind,n,observed,predicted,agrees\n";
    for (const auto& v : verdicts) {
      out += tag + "," + std::to_string(v.n) + "," + std::string(to_string(v.observed)) + "," +
             std::string(to_string(v.predicted)) + "," + (v.agrees ? "true" : "false") + "\n";
    }
    return out;
  }
  if (format == "json") {
    json doc = json::array();
    for (const auto& v : verdicts) {
      doc.push_back({{"agrees", v.agrees},
                     {"kind", tag},
                     {"n", v.n},
                     {"observed", std::string(to_string(v.observed))},
                     {"predicted", std::string(to_string(v.predicted))}});
    }
    return doc.dump() + "\n";
  }
  bad_format(format);
}

std::string render_asymp(SeqKind kind, unsigned from, unsigned to, const std::string& format) {
  if (from > to) throw UsageError("--from must not exceed --to");
  std::vector<AsymptoticEstimate> estimates;
  estimates.reserve(to - from + 1);
  for (unsigned n = from; n <= to; ++n) estimates.push_back(estimate(kind, n));
  const std::string tag(to_string(kind));

  if (format == "table") {
    const std::size_t n_width = std::to_string(to).size();
    std::string out = pad_left("n", n_width) + "  estimate  exact_ratio\n";
    for (const auto& e : estimates)
      out += pad_left(std::to_string(e.n), n_width) + "  " + fmt_double(e.estimate) + "  " +
             fmt_double(e.exact_ratio) + "\n";
    return out;
  }
  if (format == "csv") {
    std::string out = "kind,n,estimate,exact_ratio\n";
    for (const auto& e : estimates)
      out += tag + "," + std::to_string(e.n) + "," + fmt_double(e.estimate) + "," +
             fmt_double(e.exact_ratio) + "\n";
    return out;
  }
  if (format == "json") {
    json doc = json::array();
    for (const auto& e : estimates)
      doc.push_back({{"estimate", e.estimate},
                     {"exact_ratio", e.exact_ratio},
                     {"kind", tag},
                     {"n", e.n}});
    return doc.dump() + "\n";
  }
  bad_format(format);
}

std::string render_asymp_diag(unsigned from, unsigned to, const std::string& format) {
  if (from > to) throw UsageError("--from must not exceed --to");
  std::vector<RatioDiagnostics> diags;
  diags.reserve(to - from + 1);
  for (unsigned n = from; n <= to; ++n) diags.push_back(ratio_diagnostics(n));

  if (format == "table") {
    const std::size_t n_width = std::to_string(to).size();
    std::string out = pad_left("n", n_width) + "  growth_c  growth_f  growth_t  t_over_f\n";
    for (const auto& d : diags)
      out += pad_left(std::to_string(d.n), n_width) + "  " + fmt_double(d.growth_c) + "  " +
             fmt_double(d.growth_f) + "  " + fmt_double(d.growth_t) + "  " +
             fmt_double(d.t_over_f) + "\n";
    return out;
  }
  if (format == "csv") {
    std::string out = "n,growth_c,growth_f,growth_t,t_over_f\n";
    for (const auto& d : diags)
      out += std::to_string(d.n) + "," + fmt_double(d.growth_c) + "," + fmt_double(d.growth_f) +
             "," + fmt_double(d.growth_t) + "," + fmt_double(d.t_over_f) + "\n";
    return out;
  }
  if (format == "json") {
    json doc = json::array();
    for (const auto& d : diags)
      doc.push_back({{"growth_c", d.growth_c},
                     {"growth_f", d.growth_f},
                     {"growth_t", d.growth_t},
                     {"n", d.n},
                     {"t_over_f", d.t_over_f}});
    return doc.dump() + "\n";
  }
  bad_format(format);
}

}  // namespace catalan::cli
