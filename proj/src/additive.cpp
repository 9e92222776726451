#include "caperiod/additive.hpp"

#include <string>

#include "caperiod/errors.hpp"
#include "caperiod/modular_algebra.hpp"
#include "caperiod/parallel.hpp"

namespace caperiod {

namespace {

void check_shape(Int modulus, int sigma) {
  if (modulus < 2) throw UsageError("QuotientPoly: modulus must be >= 2");
  if (sigma < 1) throw UsageError("QuotientPoly: sigma must be >= 1");
}

// out = (a + b x) * in, all coefficients already reduced mod n.
void multiply_by_linear(const std::vector<Int>& in, std::vector<Int>& out, Int a, Int b, Int n) {
  const std::size_t s = in.size();
  for (std::size_t j = 0; j < s; ++j) {
    const Int prev = in[j == 0 ? s - 1 : j - 1];
    out[j] = static_cast<Int>((static_cast<__int128>(a) * in[j] + static_cast<__int128>(b) * prev) % n);
  }
}

}  // namespace

QuotientPoly QuotientPoly::zero(Int modulus, int sigma) {
  check_shape(modulus, sigma);
  return {modulus, sigma, std::vector<Int>(static_cast<std::size_t>(sigma), 0)};
}

QuotientPoly QuotientPoly::one(Int modulus, int sigma) { return monomial(modulus, sigma, 0, 1); }

QuotientPoly QuotientPoly::monomial(Int modulus, int sigma, int degree, Int coefficient) {
  QuotientPoly p = zero(modulus, sigma);
  const int d = ((degree % sigma) + sigma) % sigma;
  p.coeffs[static_cast<std::size_t>(d)] = ((coefficient % modulus) + modulus) % modulus;
  return p;
}

QuotientPoly poly_mul(const QuotientPoly& u, const QuotientPoly& v) {
  if (u.modulus != v.modulus || u.sigma != v.sigma)
    throw UsageError("poly_mul: mismatched modulus or sigma");
  QuotientPoly out = QuotientPoly::zero(u.modulus, u.sigma);
  const auto s = static_cast<std::size_t>(u.sigma);
  for (std::size_t i = 0; i < s; ++i) {
    if (u.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < s; ++j) {
      auto& c = out.coeffs[(i + j) % s];
      c = static_cast<Int>((c + static_cast<__int128>(u.coeffs[i]) * v.coeffs[j]) % u.modulus);
    }
  }
  return out;
}

QuotientPoly poly_pow(const QuotientPoly& u, std::uint64_t exponent) {
  QuotientPoly result = QuotientPoly::one(u.modulus, u.sigma);
  QuotientPoly base = u;
  while (exponent > 0) {
    if (exponent & 1u) result = poly_mul(result, base);
    base = poly_mul(base, base);
    exponent >>= 1;
  }
  return result;
}

QuotientPoly AdditiveRule::polynomial() const {
  QuotientPoly p = QuotientPoly::monomial(n, sigma, 0, a);
  auto& c1 = p.coeffs[static_cast<std::size_t>(1 % sigma)];
  c1 = (c1 + ((b % n) + n) % n) % n;
  return p;
}

EventualPeriod additive_period(const AdditiveRule& rule) {
  check_shape(rule.n, rule.sigma);
  const Int n = rule.n;
  const Int a = ((rule.a % n) + n) % n;
  const Int b = ((rule.b % n) + n) % n;
  const auto start = QuotientPoly::one(n, rule.sigma).coeffs;
  std::vector<Int> scratch(start.size());
  auto advance = [&](std::vector<Int>& state) {
    multiply_by_linear(state, scratch, a, b, n);
    state.swap(scratch);
  };

  // Brent: find the cycle length first, then the first index on the cycle.
  std::uint64_t power = 1, lambda = 1;
  std::vector<Int> tortoise = start;
  std::vector<Int> hare = start;
  advance(hare);
  while (tortoise != hare) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    advance(hare);
    ++lambda;
  }

  tortoise = start;
  hare = start;
  for (std::uint64_t i = 0; i < lambda; ++i) advance(hare);
  std::uint64_t mu = 0;
  while (tortoise != hare) {
    advance(tortoise);
    advance(hare);
    ++mu;
  }
  return {lambda, mu};
}

PiBruteResult pi_brute(int sigma, Int n, unsigned threads) {
  check_shape(n, sigma);
  struct Best {
    Int value = 0;
    std::uint64_t index = 0;
  };
  const auto total = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  std::vector<Best> partial(resolve_threads(threads));
  parallel_chunks(total, threads, 16, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    Best& best = partial[w];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const AdditiveRule rule{n, sigma, static_cast<Int>(idx / n), static_cast<Int>(idx % n)};
      const auto value = static_cast<Int>(additive_period(rule).period);
      if (value > best.value || (value == best.value && idx < best.index)) best = {value, idx};
    }
  });
  Best best = partial.front();
  for (const auto& p : partial)
    if (p.value > best.value || (p.value == best.value && p.value > 0 && p.index < best.index)) best = p;
  return {best.value, static_cast<Int>(best.index / n), static_cast<Int>(best.index % n)};
}

Int pi_formula(int sigma, Int n) {
  if (n < 2) throw UsageError("pi_formula: n must be >= 2");
  switch (sigma) {
    case 2: return lambda_formula(2, checked_mul(2, n));
    // Z_2[x]/(x^3 - 1) is F_2 x F_4, so no period exceeds 3 although lambda_3(6) = 6.
    case 3: return n == 2 ? 3 : lambda_formula(3, checked_mul(3, n));
    case 4: return n == 2 ? 4 : lambda_formula(4, n);
    case 6: return lambda_formula(3, checked_mul(6, n));
    default:
      throw UsageError("pi_formula: closed form exists only for sigma in {2, 3, 4, 6}, got " +
                       std::to_string(sigma));
  }
}

QuotientPoly explicit_power(int sigma, Int n, Int a, Int b, std::uint64_t t) {
  check_shape(n, sigma);
  Ring ring = Ring::Integers;
  Int zeta_a = 0, zeta_b = 0;  // primitive sigma-th root of unity
  switch (sigma) {
    case 2: ring = Ring::Integers; zeta_a = -1; break;
    case 3: ring = Ring::Eisenstein; zeta_b = 1; break;       // w
    case 4: ring = Ring::Gaussian; zeta_b = 1; break;         // i
    case 6: ring = Ring::Eisenstein; zeta_a = 1; zeta_b = 1; break;  // 1 + w = -w^2
    default:
      throw UsageError("explicit_power: sigma must be 2, 3, 4 or 6");
  }
  const Int big = checked_mul(static_cast<Int>(sigma), n);
  const auto zeta = KummerElement::make(ring, big, zeta_a, zeta_b);

  std::vector<KummerElement> roots;  // zeta^k, k = 0..sigma-1
  roots.push_back(KummerElement::one(ring, big));
  for (int k = 1; k < sigma; ++k) roots.push_back(mul(roots.back(), zeta));

  // Evaluations (a + b z)^t at every root z.
  std::vector<KummerElement> evaluations;
  const auto a_elem = KummerElement::make(ring, big, a);
  const auto b_elem = KummerElement::make(ring, big, b);
  for (const auto& z : roots) evaluations.push_back(power(a_elem + mul(b_elem, z), t));

  QuotientPoly out = QuotientPoly::zero(n, sigma);
  for (int j = 0; j < sigma; ++j) {
    // sigma * c_j = sum_k z_k^(-j) (a + b z_k)^t
    KummerElement bracket = KummerElement::make(ring, big, 0);
    for (int k = 0; k < sigma; ++k) {
      const int exponent = ((-j * k) % sigma + sigma) % sigma;
      bracket = bracket + mul(roots[static_cast<std::size_t>(exponent)], evaluations[static_cast<std::size_t>(k)]);
    }
    if (bracket.b != 0 || bracket.a % sigma != 0)
      throw std::logic_error("explicit_power: bracket for x^" + std::to_string(j) +
                             " is not an integer multiple of sigma");
    out.coeffs[static_cast<std::size_t>(j)] = (bracket.a / sigma) % n;
  }
  return out;
}

Int ub(int sigma, Int p, int m) {
  if (sigma < 1) throw UsageError("ub: sigma must be >= 1");
  if (!is_prime(p)) throw UsageError("ub: p must be prime, got " + std::to_string(p));
  if (m < 1) throw UsageError("ub: m must be >= 1");
  if (m >= 2) return checked_mul(p, pi_brute(sigma, checked_pow(p, m - 1)).value);
  if (sigma == 1) return p - 1;
  if (sigma % p != 0) return checked_pow(p, mult_order_mod(p, sigma)) - 1;
  Int pk = 1;
  int rest = sigma;
  while (rest % p == 0) {
    rest /= static_cast<int>(p);
    pk *= p;
  }
  return checked_mul(pk, ub(rest, p, 1));
}

}  // namespace caperiod
