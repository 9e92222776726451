#pragma once

// Exact integer number theory shared by the rest of the library.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace caperiod {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct PrimePower {
  Int prime = 0;
  int multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing, multiplicities >= 1.
using Factorization = std::vector<PrimePower>;

Factorization factorize(Int n);
bool is_prime(Int n);
std::vector<Int> divisors(Int n);  // ascending
int mobius(Int n);

// Overflow-checked helpers; throw OverflowError instead of wrapping.
Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);
Int checked_pow(Int base, Int exponent);
Int checked_lcm(Int a, Int b);

Int powmod(Int base, std::uint64_t exponent, Int modulus);

// Number of aperiodic words of length sigma over an n-letter alphabet,
// sum over d | sigma of n^d * mu(sigma / d).
Int aperiodic_count(Int sigma, Int n);

// Smallest t >= 1 with p^t = 1 (mod sigma). Requires gcd(p, sigma) = 1.
Int mult_order_mod(Int p, Int sigma);

// E_degree(x) via E_n(x) = x^n - 1/2 sum_{j<n} C(n, j) E_j(x).
Rational euler_polynomial_value(int degree, const Rational& x);

// (-1)^k 7^(2k) E_{2k}(3/7), exactly.
BigInt euler_sequence(int k);

}  // namespace caperiod
