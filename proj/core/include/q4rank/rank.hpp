#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "q4rank/quarticfield.hpp"

namespace q4rank {

/// One entry of the norm-residue symbol matrix.
///
/// OppositePair marks the two columns of a split pair whose conjugate
/// ideals are known to carry opposite signs; which conjugate carries which
/// sign is an arbitrary labeling, so only the labeling-free fact is stored.
/// Unknown appears only at the 2-adic pair in the unit row when delta = 1,
/// where no rule pins the entry down (and none is ever needed).
enum class Entry : std::int8_t { Plus, Minus, OppositePair, Unknown };

/// Local norm-residue symbols of the units -1 and eps0 at every ramified
/// place, one column per prime ideal (pairs expand to two equal-role
/// columns).  The -eps0 row is the entrywise product of the two stored rows.
struct SymbolMatrix {
  std::vector<RamifiedPlace> columns;
  std::vector<Entry> row_minus_one;
  std::vector<Entry> row_eps;

  std::vector<Entry> row_minus_eps() const;
};

enum class RankPath { Generic, ClosedForm };

struct RankResult {
  int mu = 0;
  int r_star = 0;  // in {0, 1, 2}
  int rank = 0;    // mu + r_star - 3, always >= 0
  std::string case_id;
  RankPath path = RankPath::Generic;
};

/// Fills the matrix by the local evaluation rules; see rank.cpp for the
/// per-place table.
SymbolMatrix symbol_matrix(const QuarticField& K);

/// How many of the unit classes {-1, eps0, -eps0} are norms: a row counts
/// as a norm only when every entry is +1.  A row that is all +1 except for
/// Unknown entries cannot be decided and throws std::logic_error; valid
/// inputs never produce that pattern.
int r_star(const SymbolMatrix& m);

/// Rank via the ambiguous-class-number formula mu + r* - 3, with mu from
/// the ramification profile and r* from the symbol matrix.
RankResult rank_generic(const QuarticField& K);

/// Rank via the closed-form case dispatch over n's factorization shape.
/// Total over valid shapes; case_id names the matched branch.
RankResult rank_closed_form(const QuarticField& K);

/// One enumerated shape with a given 2-rank: structural requirements plus
/// the symbol conditions as an evaluable predicate.  delta = 0 means
/// "either 1 or 2".
struct ShapeDescriptor {
  std::string id;          // stable identifier, e.g. "L1/r3/c7"
  int rank = 0;
  int delta = 0;
  int num_p = 0;           // primes = 1 (mod 4) in the odd part of n
  int num_q = 0;           // primes = 3 (mod 4)
  std::string form;        // e.g. "n = 2*q1*q2"
  std::string conditions;  // human-readable symbol conditions
  std::function<bool(const QuarticField&)> matches;
};

/// The complete list of shapes with 2-rank equal to target_rank (0..3),
/// for the congruence class of k.l.
std::vector<ShapeDescriptor> classify_shapes(const BaseField& k,
                                             int target_rank);

/// Whether n's shape satisfies the descriptor's structural and symbol
/// conditions.
bool match_shape(const Int& n, const BaseField& k, const ShapeDescriptor& d);
bool match_shape(const QuarticField& K, const ShapeDescriptor& d);

/// Shared symbol helpers (also used by the descriptors' conditions).
/// unit_symbol_at_split_p: (p/l)_4 (l/p)_4 for l = 1 (mod 8), or
/// (2/p)_4 (p/2)_4 for l = 2, at a split p = 1 (mod 4).
int unit_symbol_at_split_p(const BaseField& k, const Int& p);
/// two_adic_unit_symbol: (2/l)_4 * (-1)^((l-1)/8), the unit row entry at
/// the 2-adic pair when n is even (l = 1 (mod 8) only).
int two_adic_unit_symbol(const BaseField& k);

}  // namespace q4rank
