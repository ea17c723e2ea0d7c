#include "catalan/parity.hpp"

#include <bit>
#include <stdexcept>

namespace catalan {

std::string_view to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

std::uint8_t Mod2Table::residue(SeqKind kind, unsigned n) const {
  if (n > max_n) {
    throw std::out_of_range("Mod2Table::residue: index beyond max_n");
  }
  switch (kind) {
    case SeqKind::C: return c[n];
    case SeqKind::G: return 0;  // 2^n C_n for n >= 1, and C_0 = 0
    case SeqKind::F: return f[n];
    case SeqKind::T: return t[n];
    case SeqKind::A: return a[n];
    case SeqKind::AF: return af[n];
    case SeqKind::AT: return at[n];
  }
  throw std::invalid_argument("Mod2Table::residue: unknown SeqKind");
}

Parity Mod2Table::parity(SeqKind kind, unsigned n) const {
  return residue(kind, n) ? Parity::Odd : Parity::Even;
}

bool is_power_of_two(unsigned n) {
  if (n == 0) {
    throw std::domain_error("is_power_of_two: n must be positive");
  }
  return n > 1 && std::has_single_bit(n);
}

Parity predicted_parity(SeqKind kind, unsigned n) {
  if (n == 0) {
    throw std::domain_error("predicted_parity: n must be positive");
  }
  switch (kind) {
    case SeqKind::C:
    case SeqKind::F:
    case SeqKind::T:
      return (n == 1 || is_power_of_two(n)) ? Parity::Odd : Parity::Even;
    case SeqKind::G:
      return Parity::Even;
    case SeqKind::A:
      return (n % 2 == 1 || is_power_of_two(n)) ? Parity::Odd : Parity::Even;
    case SeqKind::AF:
    case SeqKind::AT:
      if (n == 1) {
        // Both totals are 2 at n = 1; the odd-iff-n-odd rule starts at 2.
        throw std::domain_error("predicted_parity: af/at prediction starts at n = 2");
      }
      return n % 2 == 1 ? Parity::Odd : Parity::Even;
  }
  throw std::invalid_argument("predicted_parity: unknown SeqKind");
}

Mod2Table mod2_engine(unsigned max_n) {
  if (max_n == 0) {
    throw std::domain_error("mod2_engine: max_n must be positive");
  }
  Mod2Table out;
  out.max_n = max_n;
  const std::size_t len = static_cast<std::size_t>(max_n) + 1;
  out.c.assign(len, 0);
  out.f.assign(len, 0);
  out.t.assign(len, 0);
  out.a.assign(len, 0);
  out.af.assign(len, 0);
  out.at.assign(len, 0);

  out.c[1] = 1;
  out.f[1] = 1;
  out.t[1] = 1;  // 2 C_1 - f_1
  out.a[1] = 1;
  // af[1] = at[1] = 0: both totals equal 2 at n = 1.

  for (unsigned n = 2; n <= max_n; ++n) {
    std::uint8_t cbit = 0;
    std::uint8_t fbit = 0;
    for (unsigned i = 1; i < n; ++i) {
      cbit ^= out.c[i] & out.c[n - i];
      fbit ^= out.t[i] & out.f[n - i];
    }
    out.c[n] = cbit;
    out.f[n] = fbit;
    out.t[n] = fbit;  // g_n = 2^n C_n is even here, so t_n = g_n - f_n = f_n mod 2
    out.a[n] = cbit ^ static_cast<std::uint8_t>(n & 1u);
    out.af[n] = out.f[n] ^ out.a[n];
    out.at[n] = out.t[n] ^ out.a[n];
  }
  return out;
}

std::vector<ParityVerdict> verify_parity(const Mod2Table& table, SeqKind kind) {
  const unsigned first = (kind == SeqKind::AF || kind == SeqKind::AT) ? 2 : 1;
  std::vector<ParityVerdict> verdicts;
  if (table.max_n < first) return verdicts;
  verdicts.reserve(table.max_n - first + 1);
  for (unsigned n = first; n <= table.max_n; ++n) {
    ParityVerdict v;
    v.n = n;
    v.kind = kind;
    v.observed = table.parity(kind, n);
    v.predicted = predicted_parity(kind, n);
    v.agrees = v.observed == v.predicted;
    verdicts.push_back(v);
  }
  return verdicts;
}

std::vector<ParityVerdict> verify_parity(SeqKind kind, unsigned max_n) {
  return verify_parity(mod2_engine(max_n), kind);
}

}  // namespace catalan
