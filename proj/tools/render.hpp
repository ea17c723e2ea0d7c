#pragma once

#include <optional>
#include <string>

#include "catalan/seq.hpp"
#include "catalan/tree.hpp"

namespace catalan::cli {

// Bad arguments that CLI11 cannot catch itself (unknown kind names, inverted
// ranges, ...). main() maps this to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed-precision, locale-independent double rendering shared by every
// format so identical queries stay byte-identical.
std::string fmt_double(double value);

std::string render_seq(SeqKind kind, unsigned from, unsigned to, const std::string& format);
std::string render_triangle(unsigned rows, const std::string& format);
std::string render_tree(unsigned n, std::optional<FruitKind> fruit, const std::string& format);
std::string render_series(const std::string& gf, unsigned order, const std::string& format);
std::string render_parity(SeqKind kind, unsigned max_n, const std::string& format);
std::string render_asymp(SeqKind kind, unsigned from, unsigned to, const std::string& format);
std::string render_asymp_diag(unsigned from, unsigned to, const std::string& format);

}  // namespace catalan::cli
