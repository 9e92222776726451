#include <doctest.h>

#include <numeric>

#include "caperiod/errors.hpp"
#include "caperiod/numtheory.hpp"

using namespace caperiod;

namespace {

// Counts words of length sigma whose smallest rotation-period is sigma.
Int aperiodic_brute(int sigma, Int n) {
  Int total = 1;
  for (int i = 0; i < sigma; ++i) total *= n;
  Int count = 0;
  std::vector<Int> w(static_cast<std::size_t>(sigma));
  for (Int idx = 0; idx < total; ++idx) {
    Int v = idx;
    for (int i = sigma - 1; i >= 0; --i) {
      w[static_cast<std::size_t>(i)] = v % n;
      v /= n;
    }
    bool periodic = false;
    for (int d = 1; d < sigma && !periodic; ++d) {
      if (sigma % d) continue;
      bool same = true;
      for (int i = 0; i + d < sigma && same; ++i) same = w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(i + d)];
      periodic = same;
    }
    if (!periodic) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("factorize recombines and yields primes") {
  for (Int n = 1; n <= 2000; ++n) {
    Int product = 1;
    Int last = 1;
    for (const auto& [p, m] : factorize(n)) {
      CHECK(is_prime(p));
      CHECK(p > last);
      last = p;
      for (int i = 0; i < m; ++i) product *= p;
    }
    CHECK(product == n);
  }
  CHECK(factorize(360) == Factorization{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("divisors and mobius") {
  CHECK(divisors(12) == std::vector<Int>{1, 2, 3, 4, 6, 12});
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  for (Int n = 2; n <= 300; ++n) {
    int sum = 0;
    for (Int d : divisors(n)) sum += mobius(d);
    CHECK(sum == 0);
  }
}

TEST_CASE("aperiodic_count matches brute-force word enumeration") {
  for (Int n = 2; n <= 4; ++n)
    for (int sigma = 1; sigma <= 8; ++sigma) CHECK(aperiodic_count(sigma, n) == aperiodic_brute(sigma, n));
  CHECK(aperiodic_count(7, 3) == 2184);
  CHECK(aperiodic_count(10, 3) == 58800);
}

TEST_CASE("multiplicative order") {
  for (Int sigma = 2; sigma <= 60; ++sigma)
    for (Int p = 2; p <= 60; ++p) {
      if (std::gcd(p, sigma) != 1) {
        CHECK_THROWS_AS(mult_order_mod(p, sigma), UsageError);
        continue;
      }
      Int t = 1, v = p % sigma;
      while (v != 1 % sigma) {
        v = v * p % sigma;
        ++t;
      }
      CHECK(mult_order_mod(p, sigma) == t);
    }
}

TEST_CASE("checked arithmetic throws instead of wrapping") {
  CHECK(checked_pow(3, 20) == 3486784401);
  CHECK_THROWS_AS(checked_pow(10, 19), OverflowError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), OverflowError);
  CHECK(checked_lcm(4, 6) == 12);
  CHECK(powmod(3, 200, 1000003) == [] {
    Int v = 1;
    for (int i = 0; i < 200; ++i) v = v * 3 % 1000003;
    return v;
  }());
}

TEST_CASE("Euler polynomial values") {
  // E_1(x) = x - 1/2, E_2(x) = x^2 - x.
  const Rational x(3, 7);
  CHECK(euler_polynomial_value(0, x) == 1);
  CHECK(euler_polynomial_value(1, x) == x - Rational(1, 2));
  CHECK(euler_polynomial_value(2, x) == x * x - x);
  CHECK(euler_sequence(0) == 1);
  CHECK(euler_sequence(1) == 12);
  CHECK(euler_sequence(2) == 732);
  CHECK(euler_sequence(3) == 109332);
}
