#include "caperiod/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

#include "caperiod/errors.hpp"

namespace caperiod {

namespace {

constexpr std::uint8_t kUnvisited = 0;
constexpr std::uint8_t kInProgress = 1;
constexpr std::uint8_t kDone = 2;

void step_digits(const RuleTable& rule, std::span<const State> in, std::span<State> out) {
  const std::size_t s = in.size();
  if (rule.orientation == Orientation::Left) {
    for (std::size_t x = 0; x < s; ++x) out[x] = rule(in[x == 0 ? s - 1 : x - 1], in[x]);
  } else {
    for (std::size_t x = 0; x < s; ++x) out[x] = rule(in[x], in[x + 1 == s ? 0 : x + 1]);
  }
}

void decode_into(std::uint64_t index, Int n, std::span<State> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<State>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
}

void check_budget(std::uint64_t nodes, std::uint64_t budget) {
  if (nodes > budget)
    throw BudgetExceeded("census needs " + std::to_string(nodes) + " node visits, budget is " +
                         std::to_string(budget));
}

}  // namespace

RuleTable RuleTable::identity(Int n) {
  RuleTable r{n, Orientation::Left, std::vector<State>(static_cast<std::size_t>(n * n))};
  for (Int c0 = 0; c0 < n; ++c0)
    for (Int c1 = 0; c1 < n; ++c1) r.table[static_cast<std::size_t>(c0 * n + c1)] = static_cast<State>(c1);
  return r;
}

RuleTable RuleTable::additive(Int n, Int a, Int b) {
  RuleTable r{n, Orientation::Left, std::vector<State>(static_cast<std::size_t>(n * n))};
  a = ((a % n) + n) % n;
  b = ((b % n) + n) % n;
  for (Int c0 = 0; c0 < n; ++c0)
    for (Int c1 = 0; c1 < n; ++c1)
      r.table[static_cast<std::size_t>(c0 * n + c1)] = static_cast<State>((b * c0 + a * c1) % n);
  return r;
}

RuleTable RuleTable::from_index(Int n, std::uint64_t index) {
  RuleTable r{n, Orientation::Left, std::vector<State>(static_cast<std::size_t>(n * n))};
  decode_into(index, n, r.table);
  return r;
}

void RuleTable::validate() const {
  if (n < 2) throw UsageError("rule: n must be >= 2");
  if (table.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw UsageError("rule: table must have n^2 = " + std::to_string(n * n) + " entries, got " +
                     std::to_string(table.size()));
  for (State v : table)
    if (v >= static_cast<std::uint64_t>(n)) throw UsageError("rule: table entry " + std::to_string(v) + " >= n");
}

std::uint64_t config_count(int sigma, Int n) {
  return static_cast<std::uint64_t>(checked_pow(n, sigma));
}

std::uint64_t encode(std::span<const State> word, Int n) {
  std::uint64_t index = 0;
  for (State s : word) index = index * static_cast<std::uint64_t>(n) + s;
  return index;
}

RingConfig decode(std::uint64_t index, int sigma, Int n) {
  RingConfig c{std::vector<State>(static_cast<std::size_t>(sigma))};
  decode_into(index, n, c.word);
  return c;
}

RingConfig step(const RuleTable& rule, const RingConfig& c) {
  for (State s : c.word)
    if (s >= static_cast<std::uint64_t>(rule.n))
      throw UsageError("step: configuration uses state " + std::to_string(s) + " outside Z_" +
                       std::to_string(rule.n));
  RingConfig out{std::vector<State>(c.word.size())};
  step_digits(rule, c.word, out.word);
  return out;
}

RingConfig rotate(const RingConfig& c, int shift) {
  const int s = c.sigma();
  RingConfig out{std::vector<State>(c.word.size())};
  for (int i = 0; i < s; ++i) out.word[static_cast<std::size_t>(i)] = c.word[static_cast<std::size_t>(((i + shift) % s + s) % s)];
  return out;
}

int spatial_period(std::span<const State> word) {
  const int s = static_cast<int>(word.size());
  for (int d = 1; d < s; ++d) {
    if (s % d != 0) continue;
    bool invariant = true;
    for (int i = 0; i + d < s && invariant; ++i) invariant = word[static_cast<std::size_t>(i)] == word[static_cast<std::size_t>(i + d)];
    if (invariant) return d;
  }
  return s;
}

RuleTable mirror(const RuleTable& rule) {
  RuleTable out{rule.n,
                rule.orientation == Orientation::Left ? Orientation::Right : Orientation::Left,
                std::vector<State>(rule.table.size())};
  const auto n = static_cast<std::size_t>(rule.n);
  for (std::size_t c0 = 0; c0 < n; ++c0)
    for (std::size_t c1 = 0; c1 < n; ++c1) out.table[c0 * n + c1] = rule.table[c1 * n + c0];
  return out;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CA_PERIODS_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 31;
}

CycleCensus cycle_census(const RuleTable& rule, int sigma, std::uint64_t budget) {
  rule.validate();
  if (sigma < 1) throw UsageError("cycle_census: sigma must be >= 1");
  const std::uint64_t total = config_count(sigma, rule.n);
  check_budget(total, budget);

  std::vector<std::uint8_t> mark(total, kUnvisited);
  std::vector<std::uint64_t> path;
  std::vector<State> digits(static_cast<std::size_t>(sigma));
  std::vector<State> next(static_cast<std::size_t>(sigma));
  auto successor = [&](std::uint64_t index) {
    decode_into(index, rule.n, digits);
    step_digits(rule, digits, next);
    return encode(next, rule.n);
  };

  std::map<std::pair<std::uint64_t, int>, CycleRecord> grouped;
  std::map<std::pair<std::uint64_t, int>, std::uint64_t> rep_index;
  std::uint64_t on_cycles = 0;

  for (std::uint64_t start = 0; start < total; ++start) {
    if (mark[start] != kUnvisited) continue;
    path.clear();
    std::uint64_t v = start;
    while (mark[v] == kUnvisited) {
      mark[v] = kInProgress;
      path.push_back(v);
      v = successor(v);
    }
    if (mark[v] == kInProgress) {
      const auto pos = static_cast<std::size_t>(std::find(path.rbegin(), path.rend(), v) - path.rbegin());
      const std::size_t first = path.size() - 1 - pos;
      const std::uint64_t length = path.size() - first;
      decode_into(path[first], rule.n, digits);
      const int sp = spatial_period(digits);
      std::uint64_t min_index = path[first];
      for (std::size_t i = first; i < path.size(); ++i) {
        decode_into(path[i], rule.n, digits);
        if (spatial_period(digits) != sp)
          throw std::logic_error("cycle_census: spatial period changes along a cycle");
        min_index = std::min(min_index, path[i]);
      }
      const auto key = std::make_pair(length, sp);
      auto [it, inserted] = grouped.try_emplace(key, CycleRecord{length, sp, {}, 0});
      ++it->second.count;
      auto [rit, rinserted] = rep_index.try_emplace(key, min_index);
      if (!rinserted) rit->second = std::min(rit->second, min_index);
      on_cycles += length;
    }
    for (std::uint64_t u : path) mark[u] = kDone;
  }

  CycleCensus census{sigma, rule.n, {}, total - on_cycles, total};
  for (auto& [key, record] : grouped) {
    record.representative = decode(rep_index.at(key), sigma, rule.n);
    census.records.push_back(std::move(record));
  }
  return census;
}

ExtremalPeriods extremal_periods(const CycleCensus& census) {
  ExtremalPeriods out;
  for (const auto& r : census.records) {
    if (r.spatial_period != census.sigma) continue;
    if (!out.X || r.length > *out.X) out.X = r.length;
    if (!out.Y || r.length < *out.Y) out.Y = r.length;
  }
  return out;
}

ExtremalPeriods extremal_periods(const RuleTable& rule, int sigma, std::uint64_t budget) {
  return extremal_periods(cycle_census(rule, sigma, budget));
}

OrbitSummary orbit(const RuleTable& rule, const RingConfig& start) {
  // Brent on configurations; avoids materialising n^sigma marks.
  auto advance = [&](RingConfig& c) { c = step(rule, c); };
  std::uint64_t power = 1, lambda = 1;
  RingConfig tortoise = start;
  RingConfig hare = step(rule, start);
  while (!(tortoise == hare)) {
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
  while (!(tortoise == hare)) {
    advance(tortoise);
    advance(hare);
    ++mu;
  }
  return {lambda, mu};
}

ExactPeriodScanner::ExactPeriodScanner(Int n, int sigma)
    : n_(n),
      sigma_(sigma),
      total_(config_count(sigma, n)),
      periodic_(total_, 0),
      mark_(total_, kUnvisited),
      digits_(static_cast<std::size_t>(sigma)),
      next_digits_(static_cast<std::size_t>(sigma)) {
  for (std::uint64_t i = 0; i < total_; ++i) {
    decode_into(i, n_, digits_);
    periodic_[i] = spatial_period(digits_) < sigma_ ? 1 : 0;
    if (!periodic_[i]) ++aperiodic_;
  }
}

std::uint64_t ExactPeriodScanner::successor(const RuleTable& rule, std::uint64_t index) {
  decode_into(index, n_, digits_);
  step_digits(rule, digits_, next_digits_);
  return encode(next_digits_, n_);
}

ExtremalPeriods ExactPeriodScanner::scan(const RuleTable& rule) {
  if (rule.n != n_) throw UsageError("ExactPeriodScanner: rule alphabet does not match");
  std::fill(mark_.begin(), mark_.end(), kUnvisited);
  ExtremalPeriods out;
  for (std::uint64_t start = 0; start < total_; ++start) {
    if (periodic_[start] || mark_[start] != kUnvisited) continue;
    path_.clear();
    std::uint64_t v = start;
    // Configurations of smaller spatial period never lead back to period sigma.
    while (!periodic_[v] && mark_[v] == kUnvisited) {
      mark_[v] = kInProgress;
      path_.push_back(v);
      v = successor(rule, v);
    }
    if (!periodic_[v] && mark_[v] == kInProgress) {
      const auto pos = static_cast<std::uint64_t>(std::find(path_.rbegin(), path_.rend(), v) - path_.rbegin());
      const std::uint64_t length = pos + 1;
      if (!out.X || length > *out.X) out.X = length;
      if (!out.Y || length < *out.Y) out.Y = length;
    }
    for (std::uint64_t u : path_) mark_[u] = kDone;
  }
  return out;
}

}  // namespace caperiod
