#pragma once

#include <vector>

#include "q4rank/errors.hpp"
#include "q4rank/integer.hpp"

namespace q4rank {

/// The fundamental unit eps0 = u + v*sqrt(l) of Q(sqrt(l)).
///
/// Invariants: u^2 - l*v^2 = -1 and v is minimal among all units.  For
/// l = 1 (mod 8) a unit (u + v*sqrt(l))/2 with u, v odd would need
/// u^2 - l*v^2 = +-4, impossible mod 8, so the minimal solution over
/// Z[sqrt(l)] really is the fundamental unit of the full ring of integers.
struct PellUnit {
  Int u;
  Int v;
};

/// l = b^2 + c^2 with c odd.  For l = 1 (mod 8) this forces b = 0 (mod 4);
/// for l = 2 it is (1, 1).
struct TwoSquares {
  Int b;
  Int c;
};

/// Primality: deterministic Miller-Rabin witness set below 2^64,
/// probabilistic (BPSW + random rounds) above.
bool is_prime(const Int& n);

/// Legendre symbol (a/p) for an odd prime p: +1, -1, or 0 when p | a.
int legendre(const Int& a, const Int& p);

/// Jacobi symbol (a/m) for odd positive m.
int jacobi(const Int& a, const Int& m);

/// Rational 4-th power residue symbol (a/p)_4 = a^((p-1)/4) mod p for a
/// prime p = 1 (mod 4).  Only defined when (a/p) = +1; anything else is an
/// input error, not a silent 0.
int quartic_symbol(const Int& a, const Int& p);

/// (-1)^((l-1)/8) for a prime l = 1 (mod 8).
int eighth_character(const Int& l);

/// Two-squares decomposition of l = 2 or a prime l = 1 (mod 4), normalized
/// so c is odd.  Cornacchia seeded by a square root of -1 mod l.
TwoSquares two_squares(const Int& l);

/// Fundamental unit of Q(sqrt(l)) for l = 2 or a prime l = 1 (mod 8), via
/// the continued fraction of sqrt(l).  For these l the norm is always -1;
/// hitting a norm +1 convergent first would be an internal invariant
/// violation and throws std::logic_error.
PellUnit pell_fundamental_unit(const Int& l);

/// Distinct sorted prime factors of a squarefree n >= 1.  A repeated prime
/// is reported in the error message.
std::vector<Int> factor_squarefree(const Int& n);

/// Whether eps0*sqrt(l) = 1 (mod 4) holds in the ring of integers
/// Z[(1+sqrt(l))/2] of Q(sqrt(l)), for a prime l = 1 (mod 8).
bool unit_congruence_check(const Int& l);

}  // namespace q4rank
