#include <doctest.h>

#include <random>
#include <set>

#include "caperiod/constructions.hpp"
#include "caperiod/errors.hpp"

using namespace caperiod;

namespace {

OdometerCell plain(Int d) { return {d, false, false, false}; }
OdometerCell arrow(Int d) { return {d, true, false, false}; }
OdometerCell arrow_star(Int d) { return {d, true, true, false}; }
OdometerCell arrow_end(Int d) { return {d, true, false, true}; }
OdometerCell end_only(Int d) { return {d, false, false, true}; }

std::vector<OdometerCell> cells_of(const RingConfig& c, Int k) {
  std::vector<OdometerCell> out;
  for (State s : c.word) out.push_back(decode_cell(s, k));
  return out;
}

RingConfig ring(std::initializer_list<OdometerCell> cells, Int k) {
  RingConfig c;
  for (const auto& cell : cells) c.word.push_back(static_cast<State>(encode_cell(cell, k)));
  return c;
}

}  // namespace

TEST_CASE("cell encoding") {
  CHECK(encode_cell({3, true, true, true}, 10) == 3 + 10 * 7);
  for (Int i = 0; i < 80; ++i) CHECK(encode_cell(decode_cell(i, 10), 10) == i);
}

TEST_CASE("odometer assignments on representative pairs") {
  const Int k = 10;
  CHECK(odometer_update(plain(4), arrow(7), k) == arrow(4));
  CHECK(odometer_assignment(plain(4), arrow(7), k) == 2);
  CHECK(odometer_update(plain(4), arrow_star(3), k) == arrow(4));
  CHECK(odometer_update(plain(4), arrow_star(9), k) == arrow_star(4));
  CHECK(odometer_update(arrow_star(9), plain(0), k) == plain(0));
  CHECK(odometer_update(arrow(5), plain(0), k) == plain(5));
  CHECK(odometer_update(plain(2), arrow_end(9), k) == arrow_star(2));
  CHECK(odometer_update(arrow_end(3), plain(0), k) == arrow_end(4));
  CHECK(odometer_update(arrow_end(9), plain(0), k) == end_only(0));
  CHECK(odometer_update(end_only(6), arrow_star(1), k) == arrow_end(0));
  CHECK(odometer_update(end_only(6), arrow(1), k) == arrow_end(0));
  CHECK(odometer_update(plain(1), end_only(2), k) == plain(1));
  CHECK(odometer_update(plain(1), arrow_end(2), k) == plain(1));
  // Uncovered pair: identity default.
  CHECK_FALSE(odometer_assignment(end_only(1), end_only(2), k).has_value());
}

TEST_CASE("odometer assignments never overlap") {
  for (Int k : {2, 3, 10})
    for (Int c0 = 0; c0 < 8 * k; ++c0)
      for (Int c1 = 0; c1 < 8 * k; ++c1) CHECK_NOTHROW(odometer_assignment(decode_cell(c0, k), decode_cell(c1, k), k));
}

TEST_CASE("odometer reproduces the opening rows of the worked example") {
  const Int k = 10;
  const auto rule = odometer_rule(3, k);
  CHECK(rule.n == 80);
  CHECK(rule.orientation == Orientation::Right);
  RingConfig c = odometer_start(3, k);
  CHECK(c == ring({plain(0), plain(0), arrow_end(0)}, k));
  for (Int d = 1; d <= 9; ++d) {
    c = step(rule, c);
    CHECK(c == ring({plain(0), plain(0), arrow_end(d)}, k));
  }
  c = step(rule, c);
  CHECK(c == ring({plain(0), arrow_star(0), end_only(0)}, k));
  c = step(rule, c);
  CHECK(c == ring({arrow(0), plain(1), end_only(0)}, k));
  c = step(rule, c);
  CHECK(c == ring({plain(0), plain(1), arrow_end(0)}, k));
}

TEST_CASE("odometer period from the canonical start") {
  // k digits on the E site, then sigma - 1 steps to return the arrow, per increment of the rest.
  for (int sigma = 2; sigma <= 4; ++sigma)
    for (Int k : {2, 3, 5}) {
      const auto o = orbit(odometer_rule(sigma, k), odometer_start(sigma, k));
      Int expected = k + sigma - 1;
      for (int i = 1; i < sigma; ++i) expected *= k;
      CHECK(o.period == static_cast<std::uint64_t>(expected));
      CHECK(o.period >= static_cast<std::uint64_t>(checked_pow(k, sigma)));
    }
  CHECK(orbit(odometer_rule(3, 10), odometer_start(3, 10)).period == 1200);
}

TEST_CASE("legitimate configurations enter the odometer cycle up to rotation") {
  const int sigma = 2;
  const Int k = 3;
  const auto rule = odometer_rule(sigma, k);
  const auto start = odometer_start(sigma, k);
  std::set<std::uint64_t> cycle;
  RingConfig c = start;
  std::size_t length = 0;
  do {
    // The PS lives on the infinite lattice, so every rotation belongs to it.
    for (int s = 0; s < sigma; ++s) cycle.insert(encode(rotate(c, s).word, rule.n));
    c = step(rule, c);
    ++length;
  } while (!(c == start));
  CHECK(length >= 9);
  std::size_t legit = 0;
  for (std::uint64_t i = 0; i < config_count(sigma, rule.n); ++i) {
    RingConfig x = decode(i, sigma, rule.n);
    if (!is_legitimate(cells_of(x, k))) continue;
    ++legit;
    bool entered = false;
    for (std::size_t t = 0; t <= 4 * length && !entered; ++t) {
      entered = cycle.count(encode(x.word, rule.n)) > 0;
      x = step(rule, x);
    }
    CHECK(entered);
  }
  CHECK(legit > 0);
}

TEST_CASE("legitimacy predicate") {
  CHECK(is_legitimate(odometer_start_cells(3)));
  CHECK_FALSE(is_legitimate(std::vector<OdometerCell>{arrow(0), arrow_end(0)}));
  CHECK_FALSE(is_legitimate(std::vector<OdometerCell>{plain(0), {0, true, true, true}}));
  CHECK_FALSE(is_legitimate(std::vector<OdometerCell>{{0, false, true, false}, arrow_end(0)}));
  CHECK_FALSE(is_legitimate(std::vector<OdometerCell>{plain(0), arrow(0)}));
}

TEST_CASE("END-READER transitions") {
  const int sigma = 3;
  using S = EndReaderState;
  CHECK(end_reader_step(S{0, false, false}, false, sigma) == S{1, false, false});
  CHECK(end_reader_step(S{0, false, false}, true, sigma) == S{1, true, false});
  CHECK(end_reader_step(S{2, false, false}, true, sigma) == S{0, false, false});
  CHECK(end_reader_step(S{2, false, false}, false, sigma) == S::t1());
  CHECK(end_reader_step(S{1, true, false}, false, sigma) == S{2, true, false});
  CHECK(end_reader_step(S{2, true, false}, false, sigma) == S{0, false, false});
  CHECK(end_reader_step(S{2, true, false}, true, sigma) == S::t1());
  CHECK(end_reader_step(S::t1(), false, sigma) == S::t1());
  std::set<int> indices;
  for (int i = 0; i < 2 * sigma; ++i) {
    CHECK(end_reader_index(end_reader_from_index(i, sigma), sigma) == i);
    indices.insert(i);
  }
  CHECK(indices.size() == 2 * sigma);
}

TEST_CASE("ARROW-READER transitions") {
  const int sigma = 3;
  using A = ArrowReaderState;
  CHECK(arrow_reader_step(A{0, false}, false, true, sigma) == A{1, false});
  CHECK(arrow_reader_step(A{3, false}, false, true, sigma) == A::t2());
  CHECK(arrow_reader_step(A{3, false}, true, true, sigma) == A{0, false});
  CHECK(arrow_reader_step(A{2, false}, false, false, sigma) == A{0, false});
  CHECK(arrow_reader_step(A::t2(), false, true, sigma) == A::t2());
  for (int i = 0; i < sigma + 2; ++i) CHECK(arrow_reader_index(arrow_reader_from_index(i, sigma), sigma) == i);
}

TEST_CASE("automata state space") {
  CHECK(automata_state_count(2, 4) == 513);
  const AutomataEncoding enc(2, 4, 513);
  CHECK(enc.terminator() == 512);
  CHECK_FALSE(enc.decode(512).has_value());
  for (Int i = 0; i < 512; ++i) CHECK(enc.encode(*enc.decode(i)) == i);
  CHECK_THROWS_AS(AutomataEncoding(2, 4, 400), UsageError);
  CHECK_THROWS_AS(odometer_automata_rule(3, 3), UsageError);
}

TEST_CASE("odometer with automata: terminated rings collapse, start follows the odometer") {
  const int sigma = 2;
  const Int k = 4;
  const Int n = 520;  // leftover states 513..519
  const auto rule = odometer_automata_rule(sigma, k, n);
  const AutomataEncoding enc(sigma, k, n);
  const auto T = static_cast<State>(enc.terminator());
  const RingConfig all_t{std::vector<State>(2, T)};
  CHECK(step(rule, all_t) == all_t);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    RingConfig c{{static_cast<State>(rng() % n), static_cast<State>(rng() % n)}};
    if (!is_terminated(c, enc)) continue;
    for (int t = 0; t < 2 * sigma; ++t) c = step(rule, c);
    CHECK(c == all_t);
  }
  // First layer of the canonical start tracks the plain odometer and is never terminated.
  const auto odo = odometer_rule(sigma, k);
  RingConfig a = odometer_automata_start(enc);
  RingConfig o = odometer_start(sigma, k);
  for (int t = 0; t < 100; ++t) {
    CHECK_FALSE(is_terminated(a, enc));
    const auto layer = first_layer(a, enc);
    REQUIRE(layer.has_value());
    CHECK(*layer == cells_of(o, k));
    a = step(rule, a);
    o = step(odo, o);
  }
}

TEST_CASE("odometer with automata: single exact-period cycle length") {
  const auto census = cycle_census(odometer_automata_rule(2, 4, 513), 2);
  std::set<std::uint64_t> lengths;
  for (const auto& r : census.records)
    if (r.spatial_period == 2) lengths.insert(r.length);
  REQUIRE(lengths.size() == 1);
  CHECK(*lengths.begin() >= 16);
  const auto e = extremal_periods(census);
  CHECK(e.X == e.Y);
}

TEST_CASE("prime selection") {
  PrimeSelection how{};
  CHECK(select_partition_primes(2, 6, &how) == std::vector<Int>{2, 3});
  CHECK(how == PrimeSelection::MaxProduct);
  CHECK(select_partition_primes(3, 16, &how) == std::vector<Int>{3, 5, 7});
  CHECK(how == PrimeSelection::MaxProduct);
  // (n - 1) / 6 = 10 .. (n - 1) / 3 = 20 holds 11, 13, 17, 19.
  CHECK(select_partition_primes(3, 61, &how) == std::vector<Int>{13, 17, 19});
  CHECK(how == PrimeSelection::Interval);
  CHECK_THROWS_AS(select_partition_primes(5, 7), InfeasibleError);
}

TEST_CASE("prime partition rule") {
  for (auto [sigma, n] : {std::pair{2, Int{6}}, std::pair{3, Int{16}}, std::pair{2, Int{12}}}) {
    const auto [rule, spec] = prime_partition_rule(sigma, n);
    Int product = 1, sum = 0;
    for (Int p : spec.primes) {
      product *= p;
      sum += p;
    }
    CHECK(sum <= n - 1);
    const auto census = cycle_census(rule, sigma);
    const auto e = extremal_periods(census);
    REQUIRE(e.X);
    CHECK(*e.X == static_cast<std::uint64_t>(product));
    CHECK(*e.Y == static_cast<std::uint64_t>(product));
    const RingConfig zero{std::vector<State>(static_cast<std::size_t>(sigma), 0)};
    for (std::uint64_t i = 0; i < census.total; ++i) {
      RingConfig c = decode(i, sigma, n);
      const bool regular = is_regular(c, spec);
      const RingConfig next = step(rule, c);
      if (regular) {
        CHECK(is_regular(next, spec));
      } else {
        for (int t = 0; t < sigma && !(c == zero); ++t) c = step(rule, c);
        CHECK(c == zero);
      }
    }
  }
}

TEST_CASE("sidecars describe the encoding") {
  const auto odo = odometer_sidecar(3, 10);
  CHECK(odo["n"] == 80);
  CHECK(odo["states"].size() == 80);
  const auto [rule, spec] = prime_partition_rule(2, 6);
  const auto pp = prime_partition_sidecar(spec);
  CHECK(pp["primes"] == nlohmann::json::array({2, 3}));
  CHECK(pp["selection"] == "max-product");
  const auto au = automata_sidecar(AutomataEncoding(2, 4, 513));
  CHECK(au["terminator"] == 512);
  CHECK(au["states"].size() == 512);
}
