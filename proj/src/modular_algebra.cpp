#include "caperiod/modular_algebra.hpp"

#include <numeric>
#include <string>

#include "caperiod/errors.hpp"

namespace caperiod {

namespace {

using u128 = unsigned __int128;

Int reduce(Int v, Int n) {
  v %= n;
  return v < 0 ? v + n : v;
}

Int mulmod(Int x, Int y, Int n) {
  return static_cast<Int>(static_cast<u128>(x) * static_cast<u128>(y) % static_cast<u128>(n));
}

void check_compatible(const KummerElement& x, const KummerElement& y) {
  if (x.ring != y.ring || x.modulus != y.modulus)
    throw UsageError("KummerElement: mismatched ring or modulus");
}

// Iterate x, x^2, ... until reaching 1. Only called on units.
Int order_by_iteration(const KummerElement& x) {
  const KummerElement unit = KummerElement::one(x.ring, x.modulus);
  KummerElement y = x;
  Int k = 1;
  while (!(y == unit)) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

// Number of residues (a, b) mod p with norm form divisible by p.
Int zero_norm_count_mod_p(Ring ring, Int p) {
  switch (ring) {
    case Ring::Integers:
      return 1;
    case Ring::Gaussian:
      if (p == 2) return 2;
      return p % 4 == 1 ? 2 * p - 1 : 1;
    case Ring::Eisenstein:
      if (p == 3) return 3;
      return p % 3 == 1 ? 2 * p - 1 : 1;
  }
  return 1;
}

}  // namespace

std::string_view to_string(Ring ring) {
  switch (ring) {
    case Ring::Integers: return "integers";
    case Ring::Gaussian: return "gaussian";
    case Ring::Eisenstein: return "eisenstein";
  }
  return "?";
}

KummerElement KummerElement::make(Ring ring, Int modulus, Int a, Int b) {
  if (modulus < 1) throw UsageError("KummerElement: modulus must be >= 1");
  if (ring == Ring::Integers) b = 0;
  return {ring, modulus, reduce(a, modulus), reduce(b, modulus)};
}

KummerElement KummerElement::one(Ring ring, Int modulus) { return make(ring, modulus, 1, 0); }

KummerElement operator+(const KummerElement& x, const KummerElement& y) {
  check_compatible(x, y);
  return KummerElement::make(x.ring, x.modulus, x.a + y.a, x.b + y.b);
}

KummerElement operator-(const KummerElement& x, const KummerElement& y) {
  check_compatible(x, y);
  return KummerElement::make(x.ring, x.modulus, x.a - y.a, x.b - y.b);
}

KummerElement operator-(const KummerElement& x) {
  return KummerElement::make(x.ring, x.modulus, -x.a, -x.b);
}

KummerElement mul(const KummerElement& x, const KummerElement& y) {
  check_compatible(x, y);
  const Int n = x.modulus;
  const Int ac = mulmod(x.a, y.a, n);
  switch (x.ring) {
    case Ring::Integers:
      return {x.ring, n, ac, 0};
    case Ring::Gaussian: {
      // i^2 = -1
      const Int bd = mulmod(x.b, y.b, n);
      const Int cross = (mulmod(x.a, y.b, n) + mulmod(x.b, y.a, n)) % n;
      return {x.ring, n, reduce(ac - bd, n), cross};
    }
    case Ring::Eisenstein: {
      // w^2 = -1 - w
      const Int bd = mulmod(x.b, y.b, n);
      const Int cross = (mulmod(x.a, y.b, n) + mulmod(x.b, y.a, n)) % n;
      return {x.ring, n, reduce(ac - bd, n), reduce(cross - bd, n)};
    }
  }
  return x;
}

KummerElement power(const KummerElement& x, std::uint64_t exponent) {
  KummerElement result = KummerElement::one(x.ring, x.modulus);
  KummerElement base = x;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Int norm_form(const KummerElement& x) {
  const Int n = x.modulus;
  switch (x.ring) {
    case Ring::Integers:
      return x.a % n;
    case Ring::Gaussian:
      return (mulmod(x.a, x.a, n) + mulmod(x.b, x.b, n)) % n;
    case Ring::Eisenstein:
      return reduce(mulmod(x.a, x.a, n) + mulmod(x.b, x.b, n) - mulmod(x.a, x.b, n), n);
  }
  return 0;
}

bool is_unit(const KummerElement& x) {
  if (x.modulus == 1) return true;
  return std::gcd(norm_form(x), x.modulus) == 1;
}

Int unit_group_order(Ring ring, Int n) {
  if (n < 1) throw UsageError("unit_group_order: n must be >= 1");
  Int total = 1;
  for (const auto& [p, m] : factorize(n)) {
    if (ring == Ring::Integers) {
      total = checked_mul(total, checked_mul(checked_pow(p, m - 1), p - 1));
    } else {
      const Int units_mod_p = p * p - zero_norm_count_mod_p(ring, p);
      total = checked_mul(total, checked_mul(checked_pow(p, 2 * (m - 1)), units_mod_p));
    }
  }
  return total;
}

Int order(const KummerElement& x) {
  if (!is_unit(x)) return 1;
  // The order divides |R^x|; strip prime factors while the power stays 1.
  Int ord = unit_group_order(x.ring, x.modulus);
  const KummerElement unit = KummerElement::one(x.ring, x.modulus);
  for (const auto& [q, m] : factorize(ord)) {
    for (int i = 0; i < m; ++i) {
      if (power(x, static_cast<std::uint64_t>(ord / q)) == unit)
        ord /= q;
      else
        break;
    }
  }
  return ord;
}

GroupExponentResult exponent_brute(Ring ring, Int n) {
  if (n < 2) throw UsageError("exponent_brute: n must be >= 2");
  const Int b_range = ring == Ring::Integers ? 1 : n;
  Int exponent = 1;
  for (Int a = 0; a < n; ++a)
    for (Int b = 0; b < b_range; ++b) {
      const auto x = KummerElement::make(ring, n, a, b);
      if (is_unit(x)) exponent = checked_lcm(exponent, order_by_iteration(x));
    }
  for (Int a = 0; a < n; ++a)
    for (Int b = 0; b < b_range; ++b) {
      const auto x = KummerElement::make(ring, n, a, b);
      if (is_unit(x) && order_by_iteration(x) == exponent) return {exponent, x};
    }
  // Finite abelian groups always contain an element whose order is the exponent.
  throw std::logic_error("exponent_brute: no element attains the exponent");
}

Int lambda_prime_power(int sigma, Int p, int m) {
  if (m < 1 || !is_prime(p)) throw UsageError("lambda_prime_power: need prime p and m >= 1");
  const Int lift = checked_pow(p, m - 1);
  switch (sigma) {
    case 2:
      if (p == 2) return m <= 2 ? checked_pow(2, m - 1) : checked_pow(2, m - 2);
      return checked_mul(lift, p - 1);
    case 3:
      if (p == 3) return m == 1 ? 6 : checked_mul(2, lift);
      if (p % 3 == 1) return checked_mul(lift, p - 1);
      return checked_mul(lift, checked_mul(p, p) - 1);
    case 4:
      if (p == 2) return m <= 2 ? checked_pow(2, m) : checked_pow(2, m - 1);
      if (p % 4 == 1) return checked_mul(lift, p - 1);
      return checked_mul(lift, checked_mul(p, p) - 1);
    default:
      throw UsageError("lambda_formula: sigma must be 2, 3 or 4, got " + std::to_string(sigma));
  }
}

Int lambda_formula(int sigma, Int n) {
  if (sigma < 2 || sigma > 4) throw UsageError("lambda_formula: sigma must be 2, 3 or 4");
  if (n < 2) throw UsageError("lambda_formula: n must be >= 2");
  Int result = 1;
  for (const auto& [p, m] : factorize(n)) result = checked_lcm(result, lambda_prime_power(sigma, p, m));
  return result;
}

Int unity_root_census(Ring ring, Int n, Int e) {
  if (n < 1 || e < 1) throw UsageError("unity_root_census: need n >= 1 and e >= 1");
  const Int b_range = ring == Ring::Integers ? 1 : n;
  const auto unit = KummerElement::one(ring, n);
  Int count = 0;
  for (Int a = 0; a < n; ++a)
    for (Int b = 0; b < b_range; ++b)
      if (power(KummerElement::make(ring, n, a, b), static_cast<std::uint64_t>(e)) == unit) ++count;
  return count;
}

}  // namespace caperiod
