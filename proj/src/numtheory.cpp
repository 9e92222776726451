#include "caperiod/numtheory.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "caperiod/errors.hpp"

namespace caperiod {

namespace {

void require_positive(Int n, const char* what) {
  if (n < 1) throw UsageError(std::string(what) + " must be >= 1, got " + std::to_string(n));
}

}  // namespace

Factorization factorize(Int n) {
  require_positive(n, "factorize: n");
  Factorization out;
  for (Int p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    out.push_back({p, m});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Int> divisors(Int n) {
  require_positive(n, "divisors: n");
  std::vector<Int> small, large;
  for (Int d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(Int n) {
  int mu = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.multiplicity > 1) return 0;
    mu = -mu;
  }
  return mu;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_pow(Int base, Int exponent) {
  if (exponent < 0) throw UsageError("checked_pow: negative exponent");
  Int r = 1;
  for (Int i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

Int checked_lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

Int powmod(Int base, std::uint64_t exponent, Int modulus) {
  using u128 = unsigned __int128;
  if (modulus == 1) return 0;
  Int b = ((base % modulus) + modulus) % modulus;
  Int r = 1;
  while (exponent > 0) {
    if (exponent & 1u) r = static_cast<Int>(static_cast<u128>(r) * static_cast<u128>(b) % modulus);
    b = static_cast<Int>(static_cast<u128>(b) * static_cast<u128>(b) % modulus);
    exponent >>= 1;
  }
  return r;
}

Int aperiodic_count(Int sigma, Int n) {
  require_positive(sigma, "aperiodic_count: sigma");
  if (n < 2) throw UsageError("aperiodic_count: n must be >= 2");
  // Each term is bounded by n^sigma, so accumulating in 128 bits cannot wrap
  // once the individual powers are checked.
  __int128 total = 0;
  for (Int d : divisors(sigma)) {
    int mu = mobius(sigma / d);
    if (mu == 0) continue;
    total += static_cast<__int128>(mu) * checked_pow(n, d);
  }
  if (total > std::numeric_limits<Int>::max() || total < 0)
    throw OverflowError("aperiodic_count: result does not fit in 64 bits");
  return static_cast<Int>(total);
}

Int mult_order_mod(Int p, Int sigma) {
  if (sigma < 2) throw UsageError("mult_order_mod: sigma must be >= 2");
  Int base = ((p % sigma) + sigma) % sigma;
  if (std::gcd(base, sigma) != 1)
    throw UsageError("mult_order_mod: " + std::to_string(p) + " is not invertible modulo " +
                     std::to_string(sigma));
  Int x = base;
  Int t = 1;
  while (x != 1) {
    x = static_cast<Int>(static_cast<__int128>(x) * base % sigma);
    ++t;
  }
  return t;
}

Rational euler_polynomial_value(int degree, const Rational& x) {
  if (degree < 0) throw UsageError("euler_polynomial_value: negative degree");
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(degree) + 1);
  std::vector<BigInt> binom{1};  // row n of Pascal's triangle
  Rational x_pow = 1;
  for (int n = 0; n <= degree; ++n) {
    if (n > 0) {
      std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, 1);
      for (int j = 1; j < n; ++j) next[j] = binom[j - 1] + binom[j];
      binom = std::move(next);
      x_pow *= x;
    }
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += Rational(binom[j]) * values[j];
    values.push_back(x_pow - acc / 2);
  }
  return values.back();
}

BigInt euler_sequence(int k) {
  if (k < 0) throw UsageError("euler_sequence: k must be >= 0");
  Rational value = euler_polynomial_value(2 * k, Rational(3, 7));
  BigInt seven_pow = boost::multiprecision::pow(BigInt(7), static_cast<unsigned>(2 * k));
  Rational scaled = value * Rational(seven_pow);
  if (k % 2 == 1) scaled = -scaled;
  if (boost::multiprecision::denominator(scaled) != 1)
    throw std::logic_error("euler_sequence: non-integral value for k = " + std::to_string(k));
  return boost::multiprecision::numerator(scaled);
}

}  // namespace caperiod
