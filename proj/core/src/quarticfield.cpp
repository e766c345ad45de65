#include "q4rank/quarticfield.hpp"

#include <stdexcept>

namespace q4rank {

int conductor_exponent(const Int& a, const Int& b_used, const Int& l) {
  if (a % 2 == 0) {
    throw input_error(errc::bad_argument,
                      "conductor exponent needs odd a, got " + a.get_str());
  }
  if (l % 8 == 2) return 3;
  if (l % 4 == 1) {
    if (b_used % 2 != 0) return 3;
    Int r = (a + b_used) % 4;
    if (r < 0) r += 4;
    if (r == 3) return 2;
    if (r == 1) return 0;
  }
  throw input_error(errc::bad_argument,
                    "conductor exponent undefined for a=" + a.get_str() +
                        ", b=" + b_used.get_str() + ", l=" + l.get_str());
}

QuarticField make_quarticfield(const Int& n, const BaseField& k) {
  if (n < 1) {
    throw input_error(errc::bad_argument,
                      "n must be a positive integer, got " + n.get_str());
  }
  const std::vector<Int> factors = factor_squarefree(n);
  if (k.l == 2 && n % 2 == 0) {
    throw input_error(errc::even_n_with_sqrt2,
                      "n must be odd when l = 2, got " + n.get_str());
  }
  if (gcd(n, k.l) != 1) {
    throw input_error(errc::not_coprime,
                      "n = " + n.get_str() + " is not coprime to l = " +
                          k.l.get_str());
  }

  QuarticField K;
  K.k = k;
  K.n = n;
  K.shape.delta = (n % 2 == 0) ? 2 : 1;
  for (const Int& p : factors) {
    if (p == 2) continue;
    const bool split = splitting_in_k(p, k) == SplittingKind::Split;
    if (p % 4 == 1) {
      (split ? K.shape.ones_split : K.shape.ones_inert).push_back(p);
    } else {
      (split ? K.shape.threes_split : K.shape.threes_inert).push_back(p);
    }
  }

  K.a = n / K.shape.delta;
  K.b_used = (K.shape.delta == 2) ? k.squares.c : k.squares.b;
  K.e = conductor_exponent(K.a, K.b_used, k.l);
  K.conductor = (Int(1) << K.e) * K.a * k.l;
  K.real = reality_check(K);
  if (!K.real) {
    throw std::logic_error("quartic field with n = " + n.get_str() +
                           ", l = " + k.l.get_str() +
                           " failed the reality check; n > 0 must always "
                           "give a real field");
  }
  return K;
}

bool reality_check(const QuarticField& K) {
  // Conductor divisible by 8: equal numbers of real and imaginary fields
  // share this conductor, and n > 0 selects a real one.
  if (K.e == 3) return true;
  int S = 1;
  if (K.e != 0) S = -S;  // s_2 = -1 whenever 2 divides the conductor
  // s_l = (-1)^((l-1)/4) with ramification index 4; +1 for l = 1 (mod 8).
  if (((K.k.l - 1) / 4) % 2 != 0) S = -S;
  // s_p = (-1)^((p-1)/2) for the odd primes dividing n (index 2).
  auto flip_for = [&S](const std::vector<Int>& ps) {
    for (const Int& p : ps) {
      if (((p - 1) / 2) % 2 != 0) S = -S;
    }
  };
  flip_for(K.shape.ones_split);
  flip_for(K.shape.ones_inert);
  flip_for(K.shape.threes_split);
  flip_for(K.shape.threes_inert);
  return S == 1;
}

RamificationProfile ramification_profile(const QuarticField& K) {
  RamificationProfile prof;
  prof.places.push_back({PlaceKind::SqrtL, K.k.l});
  prof.mu = 1;
  if (K.k.l != 2 && K.e >= 2) {
    // 2 splits in k for l = 1 (mod 8); both primes above it ramify in K
    // exactly when 2 divides the conductor.
    prof.places.push_back({PlaceKind::TwoAdicPair, 2});
    prof.mu += 2;
  }
  auto add_odd = [&](const std::vector<Int>& ps, bool split) {
    for (const Int& p : ps) {
      if (split) {
        prof.places.push_back({PlaceKind::SplitPair, p});
        prof.mu += 2;
      } else {
        prof.places.push_back({PlaceKind::InertPrime, p});
        prof.mu += 1;
      }
    }
  };
  add_odd(K.shape.ones_inert, false);
  add_odd(K.shape.ones_split, true);
  add_odd(K.shape.threes_inert, false);
  add_odd(K.shape.threes_split, true);
  return prof;
}

}  // namespace q4rank
