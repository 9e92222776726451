#pragma once

// Arithmetic in Z_n, Z_n[i] and Z_n[w] (w^2 = -1 - w), element orders and
// exponents of the unit groups.

#include <cstdint>
#include <string_view>

#include "caperiod/numtheory.hpp"

namespace caperiod {

enum class Ring { Integers, Gaussian, Eisenstein };

std::string_view to_string(Ring ring);

// a + b*i or a + b*w modulo n. For Ring::Integers b is always 0.
struct KummerElement {
  Ring ring = Ring::Integers;
  Int modulus = 2;
  Int a = 0;
  Int b = 0;

  // Reduces a, b into [0, modulus).
  static KummerElement make(Ring ring, Int modulus, Int a, Int b = 0);
  static KummerElement one(Ring ring, Int modulus);

  friend bool operator==(const KummerElement&, const KummerElement&) = default;
};

KummerElement operator+(const KummerElement& x, const KummerElement& y);
KummerElement operator-(const KummerElement& x, const KummerElement& y);
KummerElement operator-(const KummerElement& x);
KummerElement mul(const KummerElement& x, const KummerElement& y);
inline KummerElement operator*(const KummerElement& x, const KummerElement& y) { return mul(x, y); }
KummerElement power(const KummerElement& x, std::uint64_t exponent);

// a (Integers), a^2 + b^2 (Gaussian), a^2 - ab + b^2 (Eisenstein), reduced mod n.
Int norm_form(const KummerElement& x);
bool is_unit(const KummerElement& x);

// |R^x| for R = Z_n, Z_n[i], Z_n[w].
Int unit_group_order(Ring ring, Int n);

// Multiplicative order of a unit; 1 for non-units.
Int order(const KummerElement& x);

struct GroupExponentResult {
  Int value = 1;
  KummerElement witness;
};

// Exponent of R^x by enumerating every element and iterating powers.
// The witness is the lexicographically first (a, b) whose order equals the exponent.
GroupExponentResult exponent_brute(Ring ring, Int n);

// lambda_sigma(n) for sigma in {2, 3, 4}, assembled as an lcm over prime powers.
Int lambda_prime_power(int sigma, Int p, int m);
Int lambda_formula(int sigma, Int n);

// Number of x in R with x^e = 1.
Int unity_root_census(Ring ring, Int n, Int e);

}  // namespace caperiod
