#pragma once

#include <cstdint>
#include <vector>

#include "catalan/seq.hpp"

namespace catalan {

enum class Parity { Even, Odd };

std::string_view to_string(Parity p);

struct ParityVerdict {
  unsigned n = 0;
  SeqKind kind = SeqKind::C;
  Parity observed = Parity::Even;
  Parity predicted = Parity::Even;
  bool agrees = false;
};

// Residues mod 2 of the six nontrivial sequences, indexed 0..max_n, obtained
// by running the defining recurrences with every add/multiply reduced mod 2.
// g_n = 2^n C_n is identically even and derived on demand.
struct Mod2Table {
  unsigned max_n = 0;
  std::vector<std::uint8_t> c, f, t, a, af, at;

  std::uint8_t residue(SeqKind kind, unsigned n) const;
  Parity parity(SeqKind kind, unsigned n) const;
};

// True iff n = 2^i with i >= 1; in particular false for n = 1.
// Throws std::domain_error for n = 0.
bool is_power_of_two(unsigned n);

// Parity each sequence is claimed to have:
//   c, f, t : odd iff n = 1 or n = 2^i
//   a       : odd iff n is odd or n = 2^i
//   g       : even for all n >= 1
//   af, at  : odd iff n is odd, stated for n >= 2 only
// Throws std::domain_error for n = 0, and for af/at at n = 1 (the n = 1
// totals are both 2, so the odd-index rule does not cover them).
Parity predicted_parity(SeqKind kind, unsigned n);

// O(max_n^2) word operations; no big-integer arithmetic involved.
Mod2Table mod2_engine(unsigned max_n);

// One verdict per index n where the prediction is defined (n >= 1, or n >= 2
// for af/at), comparing predicted_parity against the mod-2 recurrences.
std::vector<ParityVerdict> verify_parity(SeqKind kind, unsigned max_n);
std::vector<ParityVerdict> verify_parity(const Mod2Table& table, SeqKind kind);

}  // namespace catalan
