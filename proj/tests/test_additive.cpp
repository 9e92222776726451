#include <doctest.h>

#include <numeric>
#include <random>

#include "caperiod/additive.hpp"
#include "caperiod/engine.hpp"
#include "caperiod/errors.hpp"

using namespace caperiod;

namespace {

// Schoolbook product with explicit wraparound.
QuotientPoly naive_mul(const QuotientPoly& u, const QuotientPoly& v) {
  auto out = QuotientPoly::zero(u.modulus, u.sigma);
  for (int i = 0; i < u.sigma; ++i)
    for (int j = 0; j < u.sigma; ++j) {
      auto& c = out.coeffs[static_cast<std::size_t>((i + j) % u.sigma)];
      c = (c + u.coeffs[static_cast<std::size_t>(i)] * v.coeffs[static_cast<std::size_t>(j)]) % u.modulus;
    }
  return out;
}

}  // namespace

TEST_CASE("poly_mul against schoolbook product") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Int n = static_cast<Int>(rng() % 20) + 2;
    const int sigma = static_cast<int>(rng() % 7) + 1;
    auto u = QuotientPoly::zero(n, sigma), v = QuotientPoly::zero(n, sigma);
    for (auto& c : u.coeffs) c = static_cast<Int>(rng() % static_cast<std::uint64_t>(n));
    for (auto& c : v.coeffs) c = static_cast<Int>(rng() % static_cast<std::uint64_t>(n));
    CHECK(poly_mul(u, v) == naive_mul(u, v));
  }
  CHECK(poly_pow(QuotientPoly::monomial(5, 3, 1), 3) == QuotientPoly::one(5, 3));
}

TEST_CASE("explicit_power equals iterated multiplication") {
  std::mt19937_64 rng(11);
  for (int sigma : {2, 3, 4, 6})
    for (int trial = 0; trial < 150; ++trial) {
      const Int n = static_cast<Int>(rng() % 25) + 2;
      const Int a = static_cast<Int>(rng() % static_cast<std::uint64_t>(n));
      const Int b = static_cast<Int>(rng() % static_cast<std::uint64_t>(n));
      const std::uint64_t t = rng() % 30;
      auto expected = QuotientPoly::one(n, sigma);
      const auto base = AdditiveRule{n, sigma, a, b}.polynomial();
      for (std::uint64_t i = 0; i < t; ++i) expected = naive_mul(expected, base);
      CHECK(explicit_power(sigma, n, a, b, t) == expected);
    }
  // t = 1 recovers a + b x in every case.
  CHECK(explicit_power(4, 7, 2, 3, 1) == AdditiveRule{7, 4, 2, 3}.polynomial());
  CHECK_THROWS_AS(explicit_power(5, 7, 1, 1, 2), UsageError);
}

TEST_CASE("additive_period matches orbit of a single seed under the rule table") {
  for (Int n = 2; n <= 9; ++n)
    for (int sigma = 1; sigma <= 5; ++sigma)
      for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b) {
          RingConfig seed{std::vector<State>(static_cast<std::size_t>(sigma), 0)};
          seed.word[0] = 1;
          const auto o = orbit(RuleTable::additive(n, a, b), seed);
          const auto p = additive_period({n, sigma, a, b});
          CHECK(p.period == o.period);
          CHECK(p.preperiod == o.preperiod);
        }
}

TEST_CASE("additive period examples") {
  CHECK(additive_period({3, 4, 1, 1}).period == 8);
  CHECK(additive_period({2, 3, 1, 1}).period == 3);
}

TEST_CASE("period at coprime moduli is the lcm") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int sigma = static_cast<int>(rng() % 6) + 1;
    const Int n1 = static_cast<Int>(rng() % 11) + 2;
    Int n2 = static_cast<Int>(rng() % 11) + 2;
    if (std::gcd(n1, n2) != 1) continue;
    const Int a = static_cast<Int>(rng() % 500), b = static_cast<Int>(rng() % 500);
    const auto whole = additive_period({n1 * n2, sigma, a % (n1 * n2), b % (n1 * n2)}).period;
    CHECK(whole == std::lcm(additive_period({n1, sigma, a % n1, b % n1}).period,
                            additive_period({n2, sigma, a % n2, b % n2}).period));
  }
}

TEST_CASE("pi closed forms") {
  CHECK(pi_formula(3, 11) == 120);
  CHECK(pi_formula(4, 2) == 4);
  CHECK(pi_formula(3, 2) == 3);
  CHECK(pi_formula(6, 2) == 6);
  for (Int n = 2; n <= 14; ++n) {
    CHECK(pi_brute(2, n).value == pi_formula(2, n));
    CHECK(pi_brute(3, n).value == pi_formula(3, n));
  }
  for (Int n = 2; n <= 9; ++n) {
    CHECK(pi_brute(4, n).value == pi_formula(4, n));
    CHECK(pi_brute(6, n).value == pi_formula(6, n));
  }
  CHECK_THROWS_AS(pi_formula(5, 7), UsageError);
}

TEST_CASE("pi_brute is bounded and thread independent") {
  for (int sigma = 2; sigma <= 5; ++sigma)
    for (Int n = 2; n <= 7; ++n) {
      const auto one = pi_brute(sigma, n, 1);
      const auto many = pi_brute(sigma, n, 4);
      CHECK(one.value == many.value);
      CHECK(one.a == many.a);
      CHECK(one.b == many.b);
      CHECK(one.value <= checked_pow(n, sigma - 1));
      CHECK(additive_period({n, sigma, one.a, one.b}).period == static_cast<std::uint64_t>(one.value));
    }
}

TEST_CASE("ub recursion") {
  CHECK(ub(1, 5, 1) == 4);
  CHECK(ub(7, 3, 1) == 728);   // 3^6 - 1
  CHECK(ub(13, 2, 1) == 4095);  // 2^12 - 1
  CHECK(ub(4, 2, 1) == 4);      // 2^2 * ub_1(2)
  CHECK(ub(4, 2, 3) == 2 * pi_brute(4, 4).value);
  // Bound holds.
  for (int sigma = 1; sigma <= 8; ++sigma)
    for (Int p : {2, 3, 5})
      for (int m = 1; m <= 2; ++m) CHECK(pi_brute(sigma, checked_pow(p, m)).value <= ub(sigma, p, m));
}
