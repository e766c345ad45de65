#pragma once

#include <vector>

#include "q4rank/basefield.hpp"

namespace q4rank {

/// Squarefree factorization of n, partitioned by congruence class mod 4 and
/// splitting behavior in k.  delta is the factor 2 of n.
struct FactorizationShape {
  int delta = 1;
  std::vector<Int> ones_split;    // p = 1 (mod 4), split in k
  std::vector<Int> ones_inert;    // p = 1 (mod 4), inert in k
  std::vector<Int> threes_split;  // q = 3 (mod 4), split in k
  std::vector<Int> threes_inert;  // q = 3 (mod 4), inert in k

  int t1() const { return static_cast<int>(ones_inert.size()); }
  int t2() const { return static_cast<int>(ones_split.size()); }
  int s1() const { return static_cast<int>(threes_inert.size()); }
  int s2() const { return static_cast<int>(threes_split.size()); }
  int t() const { return t1() + t2(); }
  int s() const { return s1() + s2(); }
  // Prime ideals of k above the p = 1 (mod 4) factors.
  int h() const { return t1() + 2 * t2(); }
};

/// K = Q(sqrt(n*eps0*sqrt(l))), stored in Williams canonical form
/// Q(sqrt(a(l + b_used*sqrt(l)))) with conductor 2^e * a * l.
///
/// For even n the identity Q(sqrt(2a(l+b sqrt l))) = Q(sqrt(a(l+c sqrt l)))
/// is applied eagerly: a = n/2 and b_used = c (odd), so the conductor rule
/// is evaluated in one uniform code path.
struct QuarticField {
  BaseField k;
  Int n;
  FactorizationShape shape;
  Int a;       // odd squarefree coefficient: n, or n/2 when n is even
  Int b_used;  // b for odd n, c after the even-n swap
  int e = 0;   // conductor exponent, in {0, 2, 3}
  Int conductor;
  bool real = true;
};

/// Validates n (squarefree, coprime to l, odd when l = 2) and assembles the
/// canonical form, conductor and shape.
QuarticField make_quarticfield(const Int& n, const BaseField& k);

/// Conductor exponent e for conductor 2^e * |a| * l:
///   e = 3 if l = 2 (mod 8), or l = 1 (mod 4) with b_used odd;
///   e = 2 if l = 1 (mod 4), b_used even, a + b_used = 3 (mod 4);
///   e = 0 if l = 1 (mod 4), b_used even, a + b_used = 1 (mod 4).
int conductor_exponent(const Int& a, const Int& b_used, const Int& l);

/// Whether K is real.  When the conductor is divisible by 8 real and
/// imaginary fields occur in equal numbers and n > 0 picks the real one;
/// otherwise the sign product S = s_2 * s_l * prod s_p decides, and must
/// be +1.
bool reality_check(const QuarticField& K);

enum class PlaceKind {
  SqrtL,        // the ideal (sqrt l); for l = 2 it is also the 2-adic place
  TwoAdicPair,  // the two primes of k above 2, l = 1 (mod 8) only
  InertPrime,   // p | n inert in k
  SplitPair,    // p | n split in k
};

struct RamifiedPlace {
  PlaceKind kind;
  Int p;
};

/// Prime ideals of k that ramify in K.  Pair kinds contribute 2 to mu,
/// the others 1.  K is totally real, so no infinite places enter.
struct RamificationProfile {
  std::vector<RamifiedPlace> places;
  int mu = 0;
};

RamificationProfile ramification_profile(const QuarticField& K);

}  // namespace q4rank
