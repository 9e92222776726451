#pragma once

// Evaluation of arbitrary two-neighbour rules on a ring of sigma sites and the
// cycle census of the induced functional graph on all n^sigma configurations.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "caperiod/numtheory.hpp"

namespace caperiod {

using State = std::uint32_t;

// Left:  xi_{t+1}(x) = f(xi_t(x-1), xi_t(x))
// Right: xi_{t+1}(x) = f(xi_t(x), xi_t(x+1))
enum class Orientation { Left, Right };

struct RuleTable {
  Int n = 2;
  Orientation orientation = Orientation::Left;
  std::vector<State> table;  // table[c0 * n + c1] = f(c0, c1)

  State operator()(State c0, State c1) const { return table[c0 * static_cast<std::size_t>(n) + c1]; }

  static RuleTable identity(Int n);                    // f(c0, c1) = c1
  static RuleTable additive(Int n, Int a, Int b);      // f(c0, c1) = b c0 + a c1
  static RuleTable from_index(Int n, std::uint64_t index);  // base-n digits, entry 0 most significant

  void validate() const;

  friend bool operator==(const RuleTable&, const RuleTable&) = default;
};

struct RingConfig {
  std::vector<State> word;

  int sigma() const { return static_cast<int>(word.size()); }
  friend bool operator==(const RingConfig&, const RingConfig&) = default;
};

// Base-n index with word[0] as the most significant digit.
std::uint64_t encode(std::span<const State> word, Int n);
RingConfig decode(std::uint64_t index, int sigma, Int n);
std::uint64_t config_count(int sigma, Int n);  // n^sigma, throws OverflowError

RingConfig step(const RuleTable& rule, const RingConfig& c);
RingConfig rotate(const RingConfig& c, int shift);  // result[i] = c[(i + shift) mod sigma]

int spatial_period(std::span<const State> word);
inline int spatial_period(const RingConfig& c) { return spatial_period(c.word); }

RuleTable mirror(const RuleTable& rule);

struct CycleRecord {
  std::uint64_t length = 0;
  int spatial_period = 0;
  RingConfig representative;  // smallest-index configuration among cycles of this kind
  std::uint64_t count = 0;
};

struct CycleCensus {
  int sigma = 0;
  Int n = 0;
  std::vector<CycleRecord> records;  // sorted by (length, spatial_period)
  std::uint64_t transient = 0;       // configurations not on any cycle
  std::uint64_t total = 0;           // n^sigma
};

struct ExtremalPeriods {
  std::optional<std::uint64_t> X;
  std::optional<std::uint64_t> Y;

  friend bool operator==(const ExtremalPeriods&, const ExtremalPeriods&) = default;
};

// Node-visit budget, 2^31 unless CA_PERIODS_BUDGET is set.
std::uint64_t default_budget();

CycleCensus cycle_census(const RuleTable& rule, int sigma, std::uint64_t budget = default_budget());
ExtremalPeriods extremal_periods(const CycleCensus& census);
ExtremalPeriods extremal_periods(const RuleTable& rule, int sigma, std::uint64_t budget = default_budget());

// Length of the cycle eventually reached from `start`, and steps spent before it.
struct OrbitSummary {
  std::uint64_t period = 0;
  std::uint64_t preperiod = 0;
};
OrbitSummary orbit(const RuleTable& rule, const RingConfig& start);

// Reusable scanner for X/Y over many rules with the same (n, sigma). Only walks
// configurations of exact spatial period sigma, which is closed under preimage
// of the cycles that matter. Not thread safe; use one per worker.
class ExactPeriodScanner {
 public:
  ExactPeriodScanner(Int n, int sigma);

  ExtremalPeriods scan(const RuleTable& rule);

  Int n() const { return n_; }
  int sigma() const { return sigma_; }
  std::uint64_t aperiodic_nodes() const { return aperiodic_; }

 private:
  std::uint64_t successor(const RuleTable& rule, std::uint64_t index);

  Int n_;
  int sigma_;
  std::uint64_t total_;
  std::uint64_t aperiodic_ = 0;
  std::vector<std::uint8_t> periodic_;  // 1 if spatial period < sigma
  std::vector<std::uint8_t> mark_;
  std::vector<std::uint64_t> path_;
  std::vector<State> digits_;
  std::vector<State> next_digits_;
};

}  // namespace caperiod
