#include "caperiod/verify.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "caperiod/additive.hpp"
#include "caperiod/constructions.hpp"
#include "caperiod/modular_algebra.hpp"
#include "caperiod/search.hpp"

namespace caperiod {

namespace {

// n = 2..20; rows rho_2, pi_2, rho_3, pi_3.
constexpr std::array<std::array<Int, 19>, 4> kAdditiveTable{{
    {2, 2, 2, 4, 2, 6, 2, 2, 4, 10, 2, 12, 6, 4, 2, 16, 2, 18, 4},
    {2, 2, 2, 4, 2, 6, 4, 6, 4, 10, 2, 12, 6, 4, 8, 16, 6, 18, 4},
    {3, 6, 3, 24, 6, 6, 3, 6, 24, 120, 6, 12, 6, 24, 3, 288, 6, 18, 24},
    {3, 6, 6, 24, 6, 6, 12, 18, 24, 120, 6, 12, 6, 24, 24, 288, 18, 18, 24},
}};

// n = 3; sigma, maxX, N_X, maxY, N_Y, T.
constexpr std::array<std::array<Int, 6>, 7> kTernaryTable{{
    {1, 3, 1458, 3, 1458, 3},
    {2, 6, 216, 6, 216, 6},
    {3, 24, 12, 24, 12, 24},
    {4, 40, 12, 32, 72, 72},
    {5, 120, 2, 120, 2, 240},
    {6, 111, 6, 84, 42, 696},
    {7, 1967, 12, 546, 2, 2184},
}};

// sigma = 8, 9, 10.
constexpr std::array<std::array<Int, 2>, 3> kTernaryMaxXLong{{{8, 904}, {9, 9207}, {10, 10490}}};

// sigma, p, m_lo, m_hi, pi, ub.
struct DiscrepancyRow {
  int sigma;
  Int p;
  int m_lo;
  int m_hi;
  Int pi;
  Int ub;
};
constexpr std::array<DiscrepancyRow, 14> kDiscrepancies{{
    {2, 2, 2, 2, 2, 4},       {4, 2, 2, 3, 4, 8},       {7, 3, 1, 1, 364, 728},   {8, 2, 2, 4, 8, 16},
    {11, 2, 1, 1, 341, 1023}, {13, 2, 1, 1, 819, 4095}, {14, 3, 1, 1, 364, 728},  {16, 2, 2, 5, 16, 32},
    {21, 3, 1, 1, 1092, 2184}, {22, 2, 1, 1, 682, 2046}, {26, 2, 1, 1, 1638, 8190}, {32, 2, 2, 6, 32, 64},
    {42, 3, 1, 1, 1092, 2184}, {44, 2, 1, 1, 1364, 4092},
}};

constexpr std::array<Int, 3> kMclCounts{1, 12, 732};  // sigma = 3, n = 2, 3, 4
constexpr std::array<Int, 4> kEulerSequence{1, 12, 732, 109332};

// Collects mismatches; the criterion passes when none were recorded.
class Checker {
 public:
  template <typename A, typename B>
  void equal(const std::string& what, const A& got, const B& want) {
    ++checks_;
    if (got == want) return;
    std::ostringstream out;
    out << what << ": got " << got << ", expected " << want;
    failures_.push_back(out.str());
  }
  void that(const std::string& what, bool ok) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }

  void finish(CriterionResult& r) const {
    r.passed = failures_.empty();
    std::ostringstream out;
    if (r.passed) {
      out << checks_ << " checks";
    } else {
      out << failures_.size() << "/" << checks_ << " checks failed; ";
      for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out << (i ? "; " : "") << failures_[i];
      if (failures_.size() > 5) out << "; ...";
    }
    r.detail = out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::string label(std::initializer_list<std::pair<const char*, Int>> fields, const char* prefix = "") {
  std::ostringstream out;
  out << prefix << '(';
  bool first = true;
  for (const auto& [k, v] : fields) {
    out << (first ? "" : ", ") << k << '=' << v;
    first = false;
  }
  out << ')';
  return out.str();
}

void additive_table(Checker& check, unsigned threads) {
  const auto s2 = additive_extremal_table(2, 2, 20, threads);
  const auto s3 = additive_extremal_table(3, 2, 20, threads);
  for (std::size_t i = 0; i < 19; ++i) {
    const Int n = static_cast<Int>(i) + 2;
    check.equal(label({{"n", n}}, "rho_2"), s2[i].value("rho"), kAdditiveTable[0][i]);
    check.equal(label({{"n", n}}, "pi_2"), s2[i].value("pi"), kAdditiveTable[1][i]);
    check.equal(label({{"n", n}}, "rho_3"), s3[i].value("rho"), kAdditiveTable[2][i]);
    check.equal(label({{"n", n}}, "pi_3"), s3[i].value("pi"), kAdditiveTable[3][i]);
  }
}

void ternary_table(Checker& check, Suite suite, unsigned threads) {
  const auto rows = extremal_table(3, 1, 7, UINT64_MAX, threads);
  const char* columns[] = {"maxX", "N_X", "maxY", "N_Y", "T"};
  for (std::size_t i = 0; i < kTernaryTable.size(); ++i)
    for (std::size_t c = 0; c < 5; ++c)
      check.equal(label({{"sigma", kTernaryTable[i][0]}}, columns[c]), rows[i].value(columns[c]),
                  kTernaryTable[i][c + 1]);
  if (suite == Suite::Full) {
    const auto long_rows = extremal_table(3, 8, 10, UINT64_MAX, threads);
    for (std::size_t i = 0; i < kTernaryMaxXLong.size(); ++i)
      check.equal(label({{"sigma", kTernaryMaxXLong[i][0]}}, "maxX"), long_rows[i].value("maxX"),
                  kTernaryMaxXLong[i][1]);
  }
}

void mcl_counts(Checker& check) {
  for (std::size_t i = 0; i < kMclCounts.size(); ++i) {
    const Int n = static_cast<Int>(i) + 2;
    const auto r = mcl_count(3, n, UINT64_MAX);
    check.equal(label({{"sigma", 3}, {"n", n}}, "mcl"), r.count, BigInt(kMclCounts[i]));
    check.equal(label({{"n", n}}, "mcl total"), r.total_rules, boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n * n)));
  }
  for (std::size_t k = 0; k < kEulerSequence.size(); ++k)
    check.equal(label({{"k", static_cast<Int>(k)}}, "euler_sequence"), euler_sequence(static_cast<int>(k)),
                BigInt(kEulerSequence[k]));
}

void pi_closed_forms(Checker& check, unsigned threads) {
  const std::array<std::pair<int, Int>, 4> ranges{{{2, 20}, {3, 20}, {4, 12}, {6, 10}}};
  for (const auto& [sigma, n_max] : ranges)
    for (Int n = 2; n <= n_max; ++n)
      check.equal(label({{"sigma", sigma}, {"n", n}}, "pi"), pi_brute(sigma, n, threads).value, pi_formula(sigma, n));
  check.equal("pi_4(2)", pi_brute(4, 2, threads).value, Int{4});
}

void discrepancy_table(Checker& check, unsigned threads) {
  for (const auto& row : kDiscrepancies)
    for (int m = row.m_lo; m <= row.m_hi; ++m) {
      const auto got = pi_ub_rows({{row.sigma, row.p, m}}, threads).front();
      const auto where = label({{"sigma", row.sigma}, {"p", row.p}, {"m", m}});
      check.equal("pi" + where, got.value("pi"), row.pi);
      check.equal("ub" + where, got.value("ub"), row.ub);
    }
}

void powers_of_two(Checker& check, unsigned threads) {
  for (int k = 1; k <= 3; ++k) {
    const int sigma = 1 << k;
    for (int m = 1; m <= k + 1; ++m)
      check.equal(label({{"sigma", sigma}, {"m", m}}, "pi(2^m)"), pi_brute(sigma, Int{1} << m, threads).value,
                  Int{sigma});
    check.equal(label({{"sigma", sigma}, {"m", k + 2}}, "pi(2^m)"), pi_brute(sigma, Int{1} << (k + 2), threads).value,
                Int{2 * sigma});
  }
}

void constructions(Checker& check) {
  {
    const auto o = orbit(odometer_rule(3, 10), odometer_start(3, 10));
    check.equal("odometer(sigma=3, k=10) period", o.period, std::uint64_t{1199});
    check.equal("odometer(sigma=3, k=10) preperiod", o.preperiod, std::uint64_t{0});
  }
  {
    const auto [rule, spec] = prime_partition_rule(2, 6);
    const auto e = extremal_periods(rule, 2);
    check.that("prime partition (2, 6): X defined", e.X.has_value());
    if (e.X) check.equal("prime partition (2, 6) X", *e.X, std::uint64_t{6});
    if (e.Y) check.equal("prime partition (2, 6) Y", *e.Y, std::uint64_t{6});
    const RingConfig zero{std::vector<State>(2, 0)};
    check.that("prime partition (2, 6): all-zero is fixed", step(rule, zero) == zero);
    for (std::uint64_t i = 0; i < config_count(2, 6); ++i) {
      RingConfig c = decode(i, 2, 6);
      if (is_regular(c, spec)) continue;
      for (int t = 0; t < 36 && !(c == zero); ++t) c = step(rule, c);
      check.that("prime partition (2, 6): config " + std::to_string(i) + " reaches all-zero", c == zero);
    }
  }
  {
    const auto census = cycle_census(odometer_automata_rule(2, 4, 513), 2, UINT64_MAX);
    std::set<std::uint64_t> lengths;
    for (const auto& r : census.records)
      if (r.spatial_period == 2) lengths.insert(r.length);
    check.equal("odometer-automata (2, 4, 513): distinct exact-period lengths", lengths.size(), std::size_t{1});
    if (!lengths.empty()) check.that("odometer-automata (2, 4, 513): length >= 16", *lengths.begin() >= 16);
  }
}

void property_suites(Checker& check, unsigned threads) {
  std::mt19937_64 rng(20240521);
  auto uniform = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };

  // Shift equivariance and spatial-period divisibility on random rules.
  for (int trial = 0; trial < 200; ++trial) {
    const Int n = uniform(2, 5);
    const int sigma = static_cast<int>(uniform(1, 8));
    RuleTable rule{n, trial % 2 ? Orientation::Left : Orientation::Right, {}};
    for (Int i = 0; i < n * n; ++i) rule.table.push_back(static_cast<State>(uniform(0, n - 1)));
    RingConfig c;
    for (int x = 0; x < sigma; ++x) c.word.push_back(static_cast<State>(uniform(0, n - 1)));
    const int shift = static_cast<int>(uniform(0, sigma - 1));
    check.that("shift equivariance", step(rule, rotate(c, shift)) == rotate(step(rule, c), shift));
    check.that("spatial period divides", spatial_period(c) % spatial_period(step(rule, c)) == 0);
  }

  // Census conservation.
  for (int trial = 0; trial < 40; ++trial) {
    const Int n = uniform(2, 4);
    const int sigma = static_cast<int>(uniform(1, 6));
    RuleTable rule{n, Orientation::Left, {}};
    for (Int i = 0; i < n * n; ++i) rule.table.push_back(static_cast<State>(uniform(0, n - 1)));
    const auto census = cycle_census(rule, sigma);
    std::uint64_t sum = census.transient;
    for (const auto& r : census.records) sum += r.count * r.length;
    check.equal("census conservation", sum, config_count(sigma, n));
  }

  // Exponent of the unit group.
  for (Int n = 2; n <= 200; ++n)
    check.equal(label({{"n", n}}, "lambda_2"), lambda_formula(2, n), exponent_brute(Ring::Integers, n).value);
  for (Int n = 2; n <= 60; ++n) {
    check.equal(label({{"n", n}}, "lambda_3"), lambda_formula(3, n), exponent_brute(Ring::Eisenstein, n).value);
    check.equal(label({{"n", n}}, "lambda_4"), lambda_formula(4, n), exponent_brute(Ring::Gaussian, n).value);
  }

  // Root-of-unity sums against repeated multiplication.
  for (int sigma : {2, 3, 4, 6}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Int n = uniform(2, 30);
      const Int a = uniform(0, n - 1), b = uniform(0, n - 1);
      const auto t = static_cast<std::uint64_t>(uniform(0, 40));
      QuotientPoly expected = QuotientPoly::one(n, sigma);
      const auto base = AdditiveRule{n, sigma, a, b}.polynomial();
      for (std::uint64_t i = 0; i < t; ++i) expected = poly_mul(expected, base);
      check.that(label({{"sigma", sigma}, {"n", n}, {"a", a}, {"b", b}, {"t", static_cast<Int>(t)}}, "explicit_power"),
                 explicit_power(sigma, n, a, b, t) == expected);
    }
  }

  // Period at coprime moduli is the lcm.
  for (int trial = 0; trial < 100; ++trial) {
    const int sigma = static_cast<int>(uniform(1, 6));
    Int n1 = uniform(2, 12), n2 = uniform(2, 12);
    while (std::gcd(n1, n2) != 1) n2 = uniform(2, 12);
    const Int a = uniform(0, n1 * n2 - 1), b = uniform(0, n1 * n2 - 1);
    const auto whole = additive_period({n1 * n2, sigma, a, b}).period;
    const auto p1 = additive_period({n1, sigma, a % n1, b % n1}).period;
    const auto p2 = additive_period({n2, sigma, a % n2, b % n2}).period;
    check.equal(label({{"sigma", sigma}, {"n1", n1}, {"n2", n2}, {"a", a}, {"b", b}}, "crt lcm"), whole,
                std::lcm(p1, p2));
  }

  // pi_sigma(n) <= n^(sigma - 1).
  for (int sigma = 2; sigma <= 6; ++sigma)
    for (Int n = 2; n <= 8; ++n)
      check.that(label({{"sigma", sigma}, {"n", n}}, "pi <= n^(sigma-1)"),
                 pi_brute(sigma, n, threads).value <= checked_pow(n, sigma - 1));

  // Square roots of unity in Z_{2^m}[w].
  for (int m = 3; m <= 5; ++m)
    check.equal(label({{"m", m}}, "sqrt(1) in Z_2^m[w]"), unity_root_census(Ring::Eisenstein, Int{1} << m, 2), Int{8});
}

const char* kTitles[kCriterionCount] = {
    "additive rho/pi table, n = 2..20",
    "extremal X/Y over all rules, n = 3",
    "MCL counts and Euler sequence",
    "pi brute force equals closed form",
    "pi versus ub discrepancy table",
    "pi at powers of two",
    "odometer, prime partition and automata constructions",
    "property suites",
};

}  // namespace

CriterionResult run_criterion(int id, Suite suite, unsigned threads) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id out of range");
  CriterionResult result;
  result.id = id;
  result.title = kTitles[id - 1];
  const auto start = std::chrono::steady_clock::now();
  Checker check;
  try {
    switch (id) {
      case 1: additive_table(check, threads); break;
      case 2: ternary_table(check, suite, threads); break;
      case 3: mcl_counts(check); break;
      case 4: pi_closed_forms(check, threads); break;
      case 5: discrepancy_table(check, threads); break;
      case 6: powers_of_two(check, threads); break;
      case 7: constructions(check); break;
      case 8: property_suites(check, threads); break;
    }
    check.finish(result);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_criteria(Suite suite, unsigned threads,
                                          const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, suite, threads));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.1fs", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + ": " + r.title + " [" +
         r.detail + "] (" + seconds + ")";
}

}  // namespace caperiod
