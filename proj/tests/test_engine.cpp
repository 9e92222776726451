#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "caperiod/engine.hpp"
#include "caperiod/errors.hpp"

using namespace caperiod;

namespace {

RuleTable random_rule(std::mt19937_64& rng, Int n, Orientation o = Orientation::Left) {
  RuleTable r{n, o, {}};
  for (Int i = 0; i < n * n; ++i) r.table.push_back(static_cast<State>(rng() % static_cast<std::uint64_t>(n)));
  return r;
}

RingConfig reversed(RingConfig c) {
  std::reverse(c.word.begin(), c.word.end());
  return c;
}

// Cycle lengths keyed by (length, spatial period) via a plain hash-map walk.
std::map<std::pair<std::uint64_t, int>, std::uint64_t> census_naive(const RuleTable& rule, int sigma) {
  std::map<std::pair<std::uint64_t, int>, std::uint64_t> out;
  const auto total = config_count(sigma, rule.n);
  for (std::uint64_t i = 0; i < total; ++i) {
    // i is on a cycle iff iterating total steps returns to it.
    RingConfig c = decode(i, sigma, rule.n);
    RingConfig v = step(rule, c);
    std::uint64_t len = 1;
    while (!(v == c) && len <= total) {
      v = step(rule, v);
      ++len;
    }
    if (!(v == c)) continue;
    ++out[{len, spatial_period(c)}];
  }
  for (auto& [key, count] : out) count /= key.first;
  return out;
}

}  // namespace

TEST_CASE("encode/decode round trip with most significant first") {
  const RingConfig c{{1, 0, 2}};
  CHECK(encode(c.word, 3) == 1 * 9 + 0 * 3 + 2);
  for (std::uint64_t i = 0; i < 81; ++i) CHECK(encode(decode(i, 4, 3).word, 3) == i);
}

TEST_CASE("rotate and spatial period") {
  const RingConfig c{{1, 2, 3, 4}};
  CHECK(rotate(c, 1).word == std::vector<State>{2, 3, 4, 1});
  CHECK(rotate(c, -1).word == std::vector<State>{4, 1, 2, 3});
  CHECK(spatial_period(RingConfig{{1, 2, 1, 2}}) == 2);
  CHECK(spatial_period(RingConfig{{1, 1, 1}}) == 1);
  CHECK(spatial_period(RingConfig{{1, 1, 2}}) == 3);
}

TEST_CASE("step follows the orientation") {
  const auto rule = RuleTable::additive(5, 1, 2);  // 2 c0 + c1
  CHECK(step(rule, RingConfig{{1, 0, 0}}).word == std::vector<State>{1, 2, 0});
  const auto right = mirror(rule);
  CHECK(right.orientation == Orientation::Right);
  CHECK(step(right, RingConfig{{1, 0, 0}}).word == std::vector<State>{1, 0, 2});
  CHECK_THROWS_AS(step(rule, RingConfig{{7, 0, 0}}), UsageError);
}

TEST_CASE("shift equivariance and spatial-period divisibility") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Int n = static_cast<Int>(rng() % 4) + 2;
    const int sigma = static_cast<int>(rng() % 8) + 1;
    const auto rule = random_rule(rng, n, trial % 2 ? Orientation::Left : Orientation::Right);
    RingConfig c;
    for (int x = 0; x < sigma; ++x) c.word.push_back(static_cast<State>(rng() % static_cast<std::uint64_t>(n)));
    const int s = static_cast<int>(rng() % static_cast<std::uint64_t>(sigma));
    CHECK(step(rule, rotate(c, s)) == rotate(step(rule, c), s));
    CHECK(spatial_period(c) % spatial_period(step(rule, c)) == 0);
  }
}

TEST_CASE("census matches naive cycle detection and conserves configurations") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const Int n = static_cast<Int>(rng() % 3) + 2;
    const int sigma = static_cast<int>(rng() % 5) + 1;
    const auto rule = random_rule(rng, n);
    const auto census = cycle_census(rule, sigma);
    std::map<std::pair<std::uint64_t, int>, std::uint64_t> got;
    std::uint64_t sum = census.transient;
    for (const auto& r : census.records) {
      got[{r.length, r.spatial_period}] = r.count;
      sum += r.length * r.count;
      CHECK(r.representative.sigma() == sigma);
    }
    CHECK(sum == census.total);
    CHECK(got == census_naive(rule, sigma));
  }
}

TEST_CASE("mirror gives the same cycle multiset on reversed rings") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Int n = static_cast<Int>(rng() % 3) + 2;
    const int sigma = static_cast<int>(rng() % 5) + 2;
    const auto rule = random_rule(rng, n);
    const auto m = mirror(rule);
    const auto a = cycle_census(rule, sigma), b = cycle_census(m, sigma);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].length == b.records[i].length);
      CHECK(a.records[i].count == b.records[i].count);
    }
    RingConfig c = decode(rng() % config_count(sigma, n), sigma, n);
    CHECK(reversed(step(rule, c)) == step(m, reversed(c)));
  }
}

TEST_CASE("identity rule: every configuration is a fixed point") {
  const auto census = cycle_census(RuleTable::identity(3), 4);
  CHECK(census.transient == 0);
  const auto e = extremal_periods(census);
  REQUIRE(e.X);
  CHECK(*e.X == 1);
  CHECK(*e.Y == 1);
}

TEST_CASE("X and Y are absent when no exact-period cycle exists") {
  // Constant rule: everything collapses to the all-zero ring.
  RuleTable zero{3, Orientation::Left, std::vector<State>(9, 0)};
  const auto e = extremal_periods(zero, 4);
  CHECK_FALSE(e.X);
  CHECK_FALSE(e.Y);
}

TEST_CASE("ExactPeriodScanner agrees with the full census") {
  std::mt19937_64 rng(17);
  for (int sigma = 1; sigma <= 6; ++sigma) {
    ExactPeriodScanner scanner(3, sigma);
    for (int trial = 0; trial < 40; ++trial) {
      const auto rule = random_rule(rng, 3);
      CHECK(scanner.scan(rule) == extremal_periods(rule, sigma));
    }
  }
}

TEST_CASE("orbit finds period and preperiod") {
  // Additive rule b = 1, a = 0 is a rotation; the seed has period sigma.
  const auto shift = RuleTable::additive(2, 0, 1);
  const auto o = orbit(shift, RingConfig{{1, 0, 0, 0, 0}});
  CHECK(o.period == 5);
  CHECK(o.preperiod == 0);
  RuleTable zero{2, Orientation::Left, std::vector<State>(4, 0)};
  const auto z = orbit(zero, RingConfig{{1, 1, 0}});
  CHECK(z.period == 1);
  CHECK(z.preperiod == 1);
}

TEST_CASE("budget and validation errors") {
  CHECK_THROWS_AS(cycle_census(RuleTable::identity(4), 8, 1000), BudgetExceeded);
  RuleTable bad{3, Orientation::Left, std::vector<State>(8, 0)};
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad.table.push_back(3);
  CHECK_THROWS_AS(bad.validate(), UsageError);
  CHECK(RuleTable::from_index(2, 1).table == std::vector<State>{0, 0, 0, 1});
}
