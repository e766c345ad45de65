#include "q4rank/basefield.hpp"

namespace q4rank {

BaseField make_basefield(const Int& l) {
  if (l < 2 || !is_prime(l)) {
    throw input_error(errc::not_prime,
                      "l must be 2 or a prime = 1 (mod 8); " + l.get_str() +
                          " is not prime");
  }
  BaseField k;
  k.l = l;
  if (l == 2) {
    k.unit = pell_fundamental_unit(l);
    k.squares = two_squares(l);
    return k;
  }
  if (l % 8 == 5) {
    throw input_error(errc::deferred_modulus,
                      "l = " + l.get_str() +
                          " is congruent to 5 (mod 8); that family needs "
                          "different machinery and is not handled here");
  }
  if (l % 8 != 1) {
    throw input_error(errc::unsupported_modulus,
                      "l must be 2 or a prime = 1 (mod 8), got " +
                          l.get_str());
  }
  k.unit = pell_fundamental_unit(l);
  k.squares = two_squares(l);
  k.eighth = eighth_character(l);
  k.two_quartic = quartic_symbol(2, l);
  return k;
}

SplittingKind splitting_in_k(const Int& p, const BaseField& k) {
  if (!is_prime(p)) {
    throw input_error(errc::not_prime,
                      "splitting_in_k needs a prime, got " + p.get_str());
  }
  if (p == k.l) return SplittingKind::Ramified;
  if (k.l == 2) {
    return legendre(2, p) == 1 ? SplittingKind::Split : SplittingKind::Inert;
  }
  if (p == 2) return SplittingKind::Split;  // l = 1 (mod 8)
  return legendre(k.l, p) == 1 ? SplittingKind::Split : SplittingKind::Inert;
}

}  // namespace q4rank
