#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "fracpart/arith.hpp"

using namespace fracpart;

namespace {

BigRational q(long n, long d) { return make_rational(n, d); }

// Squares mod p by enumeration.
int legendre_by_squares(long a, long p) {
  const long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (long x = 1; x < p; ++x)
    if ((x * x) % p == r) return 1;
  return -1;
}

long powmod(long b, long e, long m) {
  long out = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) out = out * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return out;
}

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 3000);
  return make_rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("padic_ord examples") {
  CHECK(padic_ord(q(-49, 8), 7) == 2);
  CHECK(padic_ord(BigRational(q(-1, 8) - 6), 7) == 2);
  CHECK(padic_ord(BigRational(0), 5).is_infinite());
  CHECK(padic_ord(BigRational(24), 2) == 3);
  CHECK(padic_ord(q(3, 250), 5) == -3);
  CHECK_THROWS_AS(padic_ord(BigRational(10), 6), PreconditionError);
}

TEST_CASE("extended valuation ordering") {
  const auto inf = ExtendedValuation::infinity();
  CHECK(inf > ExtendedValuation(1000000));
  CHECK(inf > 5);
  CHECK(ExtendedValuation(2) < ExtendedValuation(3));
  CHECK((inf + ExtendedValuation(1)).is_infinite());
  CHECK(ExtendedValuation(2) + ExtendedValuation(-5) == -3);
  CHECK_THROWS_AS(inf.value(), InvariantViolation);
  CHECK(to_string(inf) == "INFINITY");
}

TEST_CASE("padic_ord is a valuation") {
  std::mt19937_64 rng(12345);
  for (std::uint64_t ell : {2, 3, 5, 7, 13}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto x = random_rational(rng);
      const auto y = random_rational(rng);
      if (sgn(x) == 0 || sgn(y) == 0) continue;
      const auto ox = padic_ord(x, ell);
      const auto oy = padic_ord(y, ell);
      CHECK(padic_ord(BigRational(x * y), ell) == ox + oy);
      const auto osum = padic_ord(BigRational(x + y), ell);
      CHECK(osum >= std::min(ox, oy));
      if (ox != oy) CHECK(osum == std::min(ox, oy));
    }
  }
}

TEST_CASE("legendre_symbol examples and errors") {
  CHECK(legendre_symbol(1, 7) == 1);
  CHECK(legendre_symbol(2, 5) == -1);
  CHECK(legendre_symbol(73, 5) == -1);
  CHECK(legendre_symbol(-35, 7) == 0);
  CHECK_THROWS_AS(legendre_symbol(3, 2), PreconditionError);
  CHECK_THROWS_AS(legendre_symbol(3, 9), PreconditionError);
}

TEST_CASE("legendre_symbol matches Euler's criterion and enumeration for primes below 50") {
  for (std::uint64_t p : primes_below(50)) {
    if (p == 2) continue;
    const long lp = static_cast<long>(p);
    for (long a = -2 * lp; a <= 2 * lp; ++a) {
      const int sym = legendre_symbol(a, p);
      CHECK(sym == legendre_by_squares(a, lp));
      if (a % lp != 0) {
        const long euler = powmod(((a % lp) + lp) % lp, (lp - 1) / 2, lp);
        CHECK(sym == (euler == 1 ? 1 : -1));
      }
      for (long b = 1; b < lp; ++b) CHECK(legendre_symbol(a * b, p) == sym * legendre_symbol(b, p));
    }
  }
}

TEST_CASE("kronecker_symbol examples") {
  CHECK(kronecker_symbol(-1, 13) == 1);
  CHECK(kronecker_symbol(-1, 7) == -1);
  for (long a = -20; a <= 20; ++a) CHECK(kronecker_symbol(a, 1) == 1);
  // (a/2) by a mod 8, zero for even a
  CHECK(kronecker_symbol(1, 2) == 1);
  CHECK(kronecker_symbol(7, 2) == 1);
  CHECK(kronecker_symbol(3, 2) == -1);
  CHECK(kronecker_symbol(5, 2) == -1);
  CHECK(kronecker_symbol(6, 2) == 0);
  // (a/-1) is the sign of a
  CHECK(kronecker_symbol(-3, -1) == -1);
  CHECK(kronecker_symbol(3, -1) == 1);
  CHECK_THROWS_AS(kronecker_symbol(3, 0), PreconditionError);
}

TEST_CASE("kronecker_symbol is multiplicative in the odd modulus") {
  for (long a = -30; a <= 30; ++a) {
    for (long m1 = 1; m1 < 200; m1 += 2) {
      const int k1 = kronecker_symbol(a, m1);
      for (long m2 = 1; m2 < 200; m2 += 2)
        REQUIRE(kronecker_symbol(a, m1 * m2) == k1 * kronecker_symbol(a, m2));
    }
  }
}

TEST_CASE("chi_eta follows the eta character case split") {
  CHECK(chi_eta(2, 13) == 1);
  CHECK(chi_eta(2, 7) == -1);
  for (long m = 1; m < 100; ++m)
    if (m % 2 != 0) CHECK(chi_eta(4, m) == 1);
  CHECK(eta_character_numerator(1) == 12);
  CHECK(eta_character_numerator(5) == 12);
  CHECK(eta_character_numerator(3) == -4);
  CHECK(eta_character_numerator(9) == -4);
  CHECK(eta_character_numerator(6) == -1);
  CHECK(eta_character_numerator(8) == 1);
  CHECK(chi_eta(1, 5) == kronecker_symbol(12, 5));
  CHECK_THROWS_AS(chi_eta(2, 0), PreconditionError);
}

TEST_CASE("reduce_mod_prime_power") {
  CHECK(reduce_mod_prime_power(q(55615, 262144), 7, 2) == 0);
  CHECK(reduce_mod_prime_power(q(55615, 262144), 7, 3) != 0);
  CHECK(reduce_mod_prime_power(BigRational(3), 5, 1) == 3);
  CHECK(reduce_mod_prime_power(BigRational(-1), 5, 2) == 24);
  CHECK_THROWS_AS(reduce_mod_prime_power(q(1, 5), 5, 1), NotLIntegral);

  std::mt19937_64 rng(99);
  for (std::uint64_t ell : {2, 3, 7, 11}) {
    for (unsigned k = 1; k <= 4; ++k) {
      const BigInt modulus = ipow(ell, k);
      for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_rational(rng);
        if (x.get_den() % static_cast<unsigned long>(ell) == 0) continue;
        const BigInt res = reduce_mod_prime_power(x, ell, k);
        CHECK(res >= 0);
        CHECK(res < modulus);
        CHECK((res * x.get_den() - x.get_num()) % modulus == 0);
      }
    }
  }
}

TEST_CASE("rational serialization") {
  CHECK(to_string(q(-3395395, 62748517)) == "-3395395/62748517");
  CHECK(to_string(BigRational(7)) == "7/1");
  CHECK(to_string(q(6, -4)) == "-3/2");
  CHECK(parse_rational("-1/8") == q(-1, 8));
  CHECK(parse_rational("+12/8") == q(3, 2));
  CHECK(parse_rational("-1") == -1);
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("1/-2"), PreconditionError);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_rational(rng);
    CHECK(parse_rational(to_string(x)) == x);
  }
}

TEST_CASE("primality") {
  const std::set<std::uint64_t> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  for (std::uint64_t n = 0; n < 30; ++n) CHECK(is_prime(n) == (small.count(n) == 1));
  CHECK(primes_below(30) == std::vector<std::uint64_t>(small.begin(), small.end()));
  CHECK_THROWS_AS(require_prime(4), PreconditionError);
}

TEST_CASE("QuadRational arithmetic") {
  const QuadRational w = QuadRational::sqrt_minus3();
  CHECK(w * w == QuadRational(-3));
  const QuadRational x(q(1, 2), q(3, 4));
  CHECK(x * x.inverse() == QuadRational(1));
  CHECK(QuadRational(q(2, 3)).is_rational());
  CHECK(QuadRational(q(2, 3)).im() == 0);
  CHECK(to_string(QuadRational(q(1, 2), q(-3, 1))) == "1/2+-3/1*sqrt(-3)");
  CHECK_THROWS_AS(QuadRational(0).inverse(), PreconditionError);
}

TEST_CASE("QuadRational norm is multiplicative") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const QuadRational x(random_rational(rng), random_rational(rng));
    const QuadRational y(random_rational(rng), random_rational(rng));
    REQUIRE((x * y).norm() == x.norm() * y.norm());
  }
}
