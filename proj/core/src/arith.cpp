#include "q4rank/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

namespace q4rank {
namespace {

const std::array<long, 12> kMrWitnesses = {2,  3,  5,  7,  11, 13,
                                           17, 19, 23, 29, 31, 37};

Int powmod(const Int& base, const Int& exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// One Miller-Rabin round; n odd >= 3, 1 < a < n-1.
bool mr_witness_passes(const Int& n, const Int& a) {
  Int d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  d >>= r;
  Int x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle-finding variant of Pollard rho; n odd composite.
Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, saved_x = 2, d = 1;
    unsigned long power = 1, lam = 0;
    while (d == 1) {
      x = (x * x + c) % n;
      ++lam;
      d = gcd(x - saved_x, n);
      if (lam == power) {
        saved_x = x;
        power *= 2;
        lam = 0;
      }
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::vector<Int>& out) {
  for (long d : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % d == 0) {
      out.emplace_back(d);
      n /= d;
    }
  }
  for (Int d = 17; d * d <= n && d < 100000; d += 2) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

void require_odd_prime(const Int& p, const char* sym) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw input_error(errc::bad_argument,
                      std::string(sym) + " needs an odd prime, got " +
                          p.get_str());
  }
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (long p : kMrWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  static const Int kTwo64 = Int(1) << 64;
  if (n < kTwo64) {
    // Deterministic for every n below 2^64 with this witness set.
    for (long a : kMrWitnesses) {
      if (!mr_witness_passes(n, a)) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

int legendre(const Int& a, const Int& p) {
  require_odd_prime(p, "legendre symbol (a/p)");
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

int jacobi(const Int& a, const Int& m) {
  if (m < 1 || m % 2 == 0) {
    throw input_error(errc::bad_argument,
                      "jacobi symbol (a/m) needs odd positive m, got " +
                          m.get_str());
  }
  return mpz_jacobi(a.get_mpz_t(), m.get_mpz_t());
}

int quartic_symbol(const Int& a, const Int& p) {
  require_odd_prime(p, "quartic symbol (a/p)_4");
  if (p % 4 != 1) {
    throw input_error(errc::bad_argument,
                      "quartic symbol (a/p)_4 needs p = 1 (mod 4), got " +
                          p.get_str());
  }
  if (legendre(a, p) != 1) {
    throw input_error(errc::bad_argument,
                      "quartic symbol (" + a.get_str() + "/" + p.get_str() +
                          ")_4 requires (a/p) = +1");
  }
  Int r = powmod(a, (p - 1) / 4, p);
  if (r == 1) return 1;
  if (r == p - 1) return -1;
  throw std::logic_error("quartic_symbol: a^((p-1)/4) is not a square root "
                         "of 1 although (a/p) = +1");
}

int eighth_character(const Int& l) {
  if (l % 8 != 1 || !is_prime(l)) {
    throw input_error(errc::bad_argument,
                      "eighth character needs a prime l = 1 (mod 8), got " +
                          l.get_str());
  }
  return ((l - 1) / 8) % 2 == 0 ? 1 : -1;
}

TwoSquares two_squares(const Int& l) {
  if (l == 2) return {1, 1};
  if (!is_prime(l) || l % 4 != 1) {
    throw input_error(errc::bad_argument,
                      "two-squares decomposition needs l = 2 or a prime "
                      "l = 1 (mod 4), got " + l.get_str());
  }
  // Square root of -1 mod l from a quadratic non-residue.
  Int g = 2;
  while (mpz_legendre(g.get_mpz_t(), l.get_mpz_t()) != -1) ++g;
  Int x = powmod(g, (l - 1) / 4, l);
  // Cornacchia: descend the Euclid remainders of (l, x) below sqrt(l).
  Int a = l, b = x;
  while (b * b > l) {
    Int r = a % b;
    a = b;
    b = r;
  }
  Int c = sqrt(l - b * b);
  if (b * b + c * c != l) {
    throw std::logic_error("two_squares: Cornacchia descent failed for " +
                           l.get_str());
  }
  if (b % 2 == 0) return {b, c};
  return {c, b};
}

PellUnit pell_fundamental_unit(const Int& l) {
  if (l != 2 && (l % 8 != 1 || !is_prime(l))) {
    throw input_error(errc::bad_argument,
                      "Pell unit computed only for l = 2 or a prime "
                      "l = 1 (mod 8), got " + l.get_str());
  }
  const Int a0 = sqrt(l);
  // Continued fraction of sqrt(l); convergents u/v give the fundamental
  // solution of u^2 - l*v^2 = -1 at the end of the (odd) period.
  Int m = 0, d = 1, ai = a0;
  Int u_prev = 1, u = a0;
  Int v_prev = 0, v = 1;
  while (true) {
    Int norm = u * u - l * v * v;
    if (norm == -1) return {u, v};
    if (norm == 1) {
      throw std::logic_error("pell_fundamental_unit: norm +1 reached first; "
                             "the negative Pell equation must be solvable "
                             "for l = " + l.get_str());
    }
    m = d * ai - m;
    d = (l - m * m) / d;
    ai = (a0 + m) / d;
    Int u_next = ai * u + u_prev;
    Int v_next = ai * v + v_prev;
    u_prev = u;
    v_prev = v;
    u = u_next;
    v = v_next;
  }
}

std::vector<Int> factor_squarefree(const Int& n) {
  if (n < 1) {
    throw input_error(errc::bad_argument,
                      "factor_squarefree needs n >= 1, got " + n.get_str());
  }
  std::vector<Int> fs;
  if (n > 1) factor_into(n, fs);
  std::sort(fs.begin(), fs.end());
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (fs[i] == fs[i - 1]) {
      throw input_error(errc::not_squarefree,
                        n.get_str() + " is not squarefree (repeated prime " +
                            fs[i].get_str() + ")");
    }
  }
  return fs;
}

bool unit_congruence_check(const Int& l) {
  if (l % 8 != 1 || !is_prime(l)) {
    throw input_error(errc::bad_argument,
                      "unit congruence check needs a prime l = 1 (mod 8), "
                      "got " + l.get_str());
  }
  const PellUnit e0 = pell_fundamental_unit(l);
  // eps0*sqrt(l) - 1 = A + B*sqrt(l) with A = v*l - 1, B = u.  Over the
  // basis {1, (1+sqrt(l))/2} its coordinates are (A - B, 2B), and
  // membership in 4*O_k is divisibility of both coordinates by 4.
  const Int A = e0.v * l - 1;
  const Int B = e0.u;
  return (2 * B) % 4 == 0 && (A - B) % 4 == 0;
}

}  // namespace q4rank
