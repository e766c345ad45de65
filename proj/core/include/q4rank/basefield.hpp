#pragma once

#include <optional>

#include "q4rank/arith.hpp"

namespace q4rank {

enum class SplittingKind { Ramified, Split, Inert };

/// The quadratic field k = Q(sqrt(l)) for l = 2 or a prime l = 1 (mod 8).
///
/// Two standing facts about these fields are assumed, not recomputed: the
/// class number of k is odd, and the fundamental unit has norm -1 (the Pell
/// data below asserts the latter on construction).
struct BaseField {
  Int l;
  PellUnit unit;
  TwoSquares squares;
  std::optional<int> eighth;       // (-1)^((l-1)/8); only for l = 1 (mod 8)
  std::optional<int> two_quartic;  // (2/l)_4;        only for l = 1 (mod 8)
};

/// Validates l and assembles the field data.  Rejections are distinguished:
/// composite l, the deferred class l = 5 (mod 8), and other odd primes.
BaseField make_basefield(const Int& l);

/// Behavior of a rational prime p in k.  For l = 1 (mod 8) the prime 2
/// always splits; an odd p != l splits iff (l/p) = +1.
SplittingKind splitting_in_k(const Int& p, const BaseField& k);

}  // namespace q4rank
