#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "q4rank/arith.hpp"

using namespace q4rank;

// ---------------------------------------------------------------- oracles
// Brute-force reference implementations, independent of the library code.

namespace {

int legendre_oracle(long a, long p) {
  long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (long x = 1; x <= p / 2; ++x) {
    if ((x * x) % p == r) return 1;
  }
  return -1;
}

bool fourth_power_oracle(long a, long p) {
  long r = ((a % p) + p) % p;
  for (long x = 1; x < p; ++x) {
    if ((((x * x) % p) * ((x * x) % p)) % p == r) return true;
  }
  return false;
}

std::vector<long> small_primes(long bound) {
  std::vector<long> ps;
  for (long n = 2; n <= bound; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ps.push_back(n);
  }
  return ps;
}

long isqrt_oracle(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::pair<long, long> two_squares_oracle(long l) {
  for (long b = 1; b * b * 2 <= l; ++b) {
    const long c2 = l - b * b;
    const long c = isqrt_oracle(c2);
    if (c * c == c2) {
      return (c % 2 == 1) ? std::make_pair(b, c) : std::make_pair(c, b);
    }
  }
  FAIL("no two-squares decomposition for ", l);
  return {0, 0};
}

// Smallest v > 0 with l*v^2 -+ 1 a perfect square, together with the norm.
std::pair<std::pair<long, long>, int> pell_oracle(long l) {
  for (long v = 1;; ++v) {
    const long um = isqrt_oracle(l * v * v - 1);
    if (um * um == l * v * v - 1) return {{um, v}, -1};
    const long up = isqrt_oracle(l * v * v + 1);
    if (up * up == l * v * v + 1) return {{up, v}, +1};
  }
}

std::vector<long> trial_division_oracle(long n) {
  std::vector<long> fs;
  for (long d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      fs.push_back(d);
      n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

// ------------------------------------------------------------------ tests

TEST_CASE("legendre: fixed values") {
  CHECK(legendre(-1, 13) == 1);
  CHECK(legendre(89, 41) == -1);
  CHECK(legendre(79, 97) == 1);
  CHECK(legendre(41, 41) == 0);
}

TEST_CASE("legendre agrees with square search") {
  for (long p : small_primes(300)) {
    if (p == 2) continue;
    for (long a = -10; a <= p; ++a) {
      CAPTURE(a);
      CAPTURE(p);
      CHECK(legendre(a, p) == legendre_oracle(a, p));
    }
  }
}

TEST_CASE("legendre rejects bad moduli") {
  CHECK_THROWS_AS((void)legendre(3, 2), input_error);
  CHECK_THROWS_AS((void)legendre(3, 9), input_error);
  CHECK_THROWS_AS((void)legendre(3, 1), input_error);
}

TEST_CASE("jacobi: fixed values and multiplicativity") {
  // (2/15) = (2/3)(2/5) = (-1)(-1)
  CHECK(legendre_oracle(2, 3) * legendre_oracle(2, 5) == 1);
  CHECK(jacobi(2, 15) == 1);
  for (long m = 1; m < 60; m += 2) CHECK(jacobi(1, m) == 1);
  CHECK(jacobi(Int(89) * 97, 41) ==
        legendre_oracle(89, 41) * legendre_oracle(97, 41));

  for (long m1 = 3; m1 <= 31; m1 += 2) {
    for (long m2 = 3; m2 <= 31; m2 += 2) {
      for (long a = -6; a <= 6; ++a) {
        CHECK(jacobi(a, Int(m1) * m2) == jacobi(a, m1) * jacobi(a, m2));
        CHECK(jacobi(Int(a) * m2, m1) == jacobi(a, m1) * jacobi(m2, m1));
      }
    }
  }
}

TEST_CASE("jacobi rejects even or nonpositive moduli") {
  CHECK_THROWS_AS((void)jacobi(3, 8), input_error);
  CHECK_THROWS_AS((void)jacobi(3, 0), input_error);
  CHECK_THROWS_AS((void)jacobi(3, -5), input_error);
}

TEST_CASE("quartic symbol: fixed values") {
  CHECK(quartic_symbol(2, 1913) == 1);
  CHECK(quartic_symbol(2, 1889) == 1);
  CHECK(eighth_character(1889) == 1);
  for (long p : {13L, 17L, 29L, 101L, 257L}) {
    CHECK(quartic_symbol(16, p) == 1);
  }
}

TEST_CASE("quartic symbol detects 4-th power residues") {
  for (long p : small_primes(5000)) {
    if (p % 4 != 1) continue;
    for (long a : {2L, 3L, 5L, 7L, 11L}) {
      if (a % p == 0 || legendre(a, p) != 1) continue;
      CAPTURE(a);
      CAPTURE(p);
      CHECK((quartic_symbol(a, p) == 1) == fourth_power_oracle(a, p));
    }
  }
}

TEST_CASE("quartic symbol rejects invalid inputs") {
  CHECK_THROWS_AS((void)quartic_symbol(2, 13), input_error);  // (2/13) = -1
  CHECK_THROWS_AS((void)quartic_symbol(5, 7), input_error);   // p = 3 (mod 4)
  CHECK_THROWS_AS((void)quartic_symbol(2, 21), input_error);  // composite
}

TEST_CASE("eighth character") {
  CHECK(eighth_character(17) == 1);
  CHECK(eighth_character(1913) == -1);
  CHECK(eighth_character(41) == -1);
  CHECK_THROWS_AS((void)eighth_character(7), input_error);
  CHECK_THROWS_AS((void)eighth_character(5), input_error);
  CHECK_THROWS_AS((void)eighth_character(33), input_error);  // 33 = 1 (mod 8)
}

TEST_CASE("two squares: fixed values") {
  const TwoSquares s2 = two_squares(2);
  CHECK(s2.b == 1);
  CHECK(s2.c == 1);
  CHECK(two_squares_oracle(41) == std::make_pair(4L, 5L));
  const TwoSquares s41 = two_squares(41);
  CHECK(s41.b == 4);
  CHECK(s41.c == 5);
  CHECK(two_squares_oracle(257) == std::make_pair(16L, 1L));
  const TwoSquares s257 = two_squares(257);
  CHECK(s257.b == 16);
  CHECK(s257.c == 1);
}

TEST_CASE("two squares matches exhaustive search below 2000") {
  for (long l : small_primes(2000)) {
    if (l % 4 != 1) continue;
    const auto [b, c] = two_squares_oracle(l);
    const TwoSquares got = two_squares(l);
    CAPTURE(l);
    CHECK(got.b == b);
    CHECK(got.c == c);
    CHECK(got.b * got.b + got.c * got.c == l);
    CHECK(got.c % 2 == 1);
    if (l % 8 == 1) CHECK(got.b % 4 == 0);
  }
}

TEST_CASE("two squares rejects unsupported l") {
  CHECK_THROWS_AS((void)two_squares(3), input_error);
  CHECK_THROWS_AS((void)two_squares(15), input_error);
  CHECK_THROWS_AS((void)two_squares(21), input_error);
}

TEST_CASE("pell unit: fixed values") {
  const PellUnit u2 = pell_fundamental_unit(2);
  CHECK(u2.u == 1);
  CHECK(u2.v == 1);
  CHECK(pell_oracle(17) == std::make_pair(std::make_pair(4L, 1L), -1));
  const PellUnit u17 = pell_fundamental_unit(17);
  CHECK(u17.u == 4);
  CHECK(u17.v == 1);
  CHECK(pell_oracle(41) == std::make_pair(std::make_pair(32L, 5L), -1));
  const PellUnit u41 = pell_fundamental_unit(41);
  CHECK(u41.u == 32);
  CHECK(u41.v == 5);
}

TEST_CASE("pell unit is the minimal solution and has norm -1") {
  for (long l : {2L, 17L, 41L, 73L, 89L, 97L, 113L, 137L, 257L}) {
    const auto [uv, norm] = pell_oracle(l);
    const PellUnit got = pell_fundamental_unit(l);
    CAPTURE(l);
    CHECK(norm == -1);
    CHECK(got.u == uv.first);
    CHECK(got.v == uv.second);
    CHECK(got.u * got.u - l * got.v * got.v == -1);
  }
}

TEST_CASE("pell unit rejects unsupported l") {
  CHECK_THROWS_AS((void)pell_fundamental_unit(5), input_error);
  CHECK_THROWS_AS((void)pell_fundamental_unit(3), input_error);
  CHECK_THROWS_AS((void)pell_fundamental_unit(33), input_error);
}

TEST_CASE("factor_squarefree: fixed values") {
  CHECK(factor_squarefree(1).empty());
  const Int n = Int(2) * 89 * 97;
  CHECK(trial_division_oracle(2 * 89 * 97) ==
        std::vector<long>({2, 89, 97}));
  CHECK(factor_squarefree(n) == std::vector<Int>({2, 89, 97}));
  CHECK_THROWS_WITH_AS((void)factor_squarefree(12),
                       doctest::Contains("repeated prime 2"), input_error);
  CHECK_THROWS_WITH_AS((void)factor_squarefree(45),
                       doctest::Contains("repeated prime 3"), input_error);
  CHECK_THROWS_AS((void)factor_squarefree(0), input_error);
}

TEST_CASE("factor_squarefree matches trial division") {
  for (long n : {1L, 2L, 3L, 30L, 1001L, 9999L, 30030L, 104729L, 722111L}) {
    const auto oracle = trial_division_oracle(n);
    if (n == 1) {
      CHECK(factor_squarefree(n).empty());
      continue;
    }
    std::vector<Int> expected(oracle.begin(), oracle.end());
    CHECK(factor_squarefree(n) == expected);
  }
}

TEST_CASE("factor_squarefree handles large prime factors") {
  const Int p = 1000003, q = 1000033;
  REQUIRE(is_prime(p));
  REQUIRE(is_prime(q));
  CHECK(factor_squarefree(p * q) == std::vector<Int>({p, q}));
  CHECK_THROWS_WITH_AS((void)factor_squarefree(p * p),
                       doctest::Contains("repeated prime 1000003"),
                       input_error);
}

TEST_CASE("unit congruence: fixed values") {
  CHECK(unit_congruence_check(17));
  CHECK(unit_congruence_check(41));

  // Direct expansion for l = 97: eps0*sqrt(l) = v*l + u*sqrt(l),
  // coordinates over {1, (1+sqrt l)/2} checked by hand.
  const auto [uv, norm] = pell_oracle(97);
  REQUIRE(norm == -1);
  const long A = uv.second * 97 - 1;
  const long B = uv.first;
  CHECK((2 * B) % 4 == 0);
  CHECK((A - B) % 4 == 0);
  CHECK(unit_congruence_check(97));

  CHECK_THROWS_AS((void)unit_congruence_check(7), input_error);
  CHECK_THROWS_AS((void)unit_congruence_check(5), input_error);
}

TEST_CASE("is_prime spot checks") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(1913));
  CHECK(is_prime(Int("2305843009213693951")));  // 2^61 - 1
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(21));
  CHECK_FALSE(is_prime(Int("147573952589676412927")));  // 2^67 - 1
  const std::vector<long> ps = small_primes(2000);
  long idx = 0;
  for (long n = 2; n <= 2000; ++n) {
    const bool expect = idx < static_cast<long>(ps.size()) && ps[idx] == n;
    if (expect) ++idx;
    CHECK(is_prime(n) == expect);
  }
}
