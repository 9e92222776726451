#pragma once

// Additive rules f(c0, c1) = b*c0 + a*c1 viewed as multiplication by T(x) = a + b*x
// in Z_n[x] / (x^sigma - 1).

#include <cstdint>
#include <vector>

#include "caperiod/numtheory.hpp"

namespace caperiod {

// Element of Z_n[x]/(x^sigma - 1); coeffs[j] is the coefficient of x^j.
struct QuotientPoly {
  Int modulus = 2;
  int sigma = 1;
  std::vector<Int> coeffs;

  static QuotientPoly zero(Int modulus, int sigma);
  static QuotientPoly one(Int modulus, int sigma);
  static QuotientPoly monomial(Int modulus, int sigma, int degree, Int coefficient = 1);

  friend bool operator==(const QuotientPoly&, const QuotientPoly&) = default;
};

QuotientPoly poly_mul(const QuotientPoly& u, const QuotientPoly& v);
QuotientPoly poly_pow(const QuotientPoly& u, std::uint64_t exponent);

struct AdditiveRule {
  Int n = 2;
  int sigma = 1;
  Int a = 0;
  Int b = 0;

  QuotientPoly polynomial() const;  // a + b*x
};

struct EventualPeriod {
  std::uint64_t period = 1;
  std::uint64_t preperiod = 0;

  friend bool operator==(const EventualPeriod&, const EventualPeriod&) = default;
};

// Eventual period and preperiod of t -> T(x)^t * 1.
EventualPeriod additive_period(const AdditiveRule& rule);

struct PiBruteResult {
  Int value = 1;
  Int a = 0;
  Int b = 0;
};

// max over (a, b) of the eventual period; ties resolved to the smallest (a, b).
PiBruteResult pi_brute(int sigma, Int n, unsigned threads = 0);

// Closed form for sigma in {2, 3, 4, 6}: lambda_sigma(sigma n) for 2 and 3,
// lambda_4(n) for 4, lambda_3(6n) for 6, with pi_3(2) = 3 and pi_4(2) = 4.
Int pi_formula(int sigma, Int n);

// (a + b*x)^t computed from sums over the sigma-th roots of unity in Z_{sigma*n}[i]
// or Z_{sigma*n}[w], divided by sigma and reduced mod n.
QuotientPoly explicit_power(int sigma, Int n, Int a, Int b, std::uint64_t t);

// Recursive divisibility bound ub_sigma(p^m). For m >= 2 it calls pi_brute on p^(m-1).
Int ub(int sigma, Int p, int m);

}  // namespace caperiod
