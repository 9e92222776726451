#include "caperiod/constructions.hpp"

#include <algorithm>
#include <string>

#include "caperiod/errors.hpp"

namespace caperiod {

namespace {

bool plain(const OdometerCell& c) { return !c.arrow && !c.star && !c.end; }
bool end_only(const OdometerCell& c) { return c.end && !c.arrow && !c.star; }

struct Assignment {
  int number;
  bool (*matches)(const OdometerCell& c0, const OdometerCell& c1, Int k);
  OdometerCell (*result)(const OdometerCell& c0, const OdometerCell& c1, Int k);
};

// The fourteen odometer assignments; c0 is the updating site, c1 its right neighbour.
// Upper-case digits range over Z_k, lower-case over Z_k \ {k-1}.
const Assignment kAssignments[] = {
    {1,  // I <-i*  ->  <-I
     [](const OdometerCell& c0, const OdometerCell& c1, Int k) {
       return plain(c0) && c1.arrow && c1.star && !c1.end && c1.digit != k - 1;
     },
     [](const OdometerCell& c0, const OdometerCell&, Int) { return OdometerCell{c0.digit, true, false, false}; }},
    {2,  // I <-J  ->  <-I
     [](const OdometerCell& c0, const OdometerCell& c1, Int) { return plain(c0) && c1.arrow && !c1.star && !c1.end; },
     [](const OdometerCell& c0, const OdometerCell&, Int) { return OdometerCell{c0.digit, true, false, false}; }},
    {3,  // I <-(k-1)*  ->  <-I*
     [](const OdometerCell& c0, const OdometerCell& c1, Int k) {
       return plain(c0) && c1.arrow && c1.star && !c1.end && c1.digit == k - 1;
     },
     [](const OdometerCell& c0, const OdometerCell&, Int) { return OdometerCell{c0.digit, true, true, false}; }},
    {4,  // <-I* any  ->  I+1
     [](const OdometerCell& c0, const OdometerCell&, Int) { return c0.arrow && c0.star && !c0.end; },
     [](const OdometerCell& c0, const OdometerCell&, Int k) { return OdometerCell{(c0.digit + 1) % k, false, false, false}; }},
    {5,  // <-I any  ->  I
     [](const OdometerCell& c0, const OdometerCell&, Int) { return c0.arrow && !c0.star && !c0.end; },
     [](const OdometerCell& c0, const OdometerCell&, Int) { return OdometerCell{c0.digit, false, false, false}; }},
    {6,  // I <-_E(k-1)  ->  <-I*
     [](const OdometerCell& c0, const OdometerCell& c1, Int k) {
       return plain(c0) && c1.arrow && !c1.star && c1.end && c1.digit == k - 1;
     },
     [](const OdometerCell& c0, const OdometerCell&, Int) { return OdometerCell{c0.digit, true, true, false}; }},
    {7,  // <-_Ei any  ->  <-_E(i+1)
     [](const OdometerCell& c0, const OdometerCell&, Int k) {
       return c0.arrow && !c0.star && c0.end && c0.digit != k - 1;
     },
     [](const OdometerCell& c0, const OdometerCell&, Int) { return OdometerCell{c0.digit + 1, true, false, true}; }},
    {8,  // <-_E(k-1) any  ->  _E0
     [](const OdometerCell& c0, const OdometerCell&, Int k) {
       return c0.arrow && !c0.star && c0.end && c0.digit == k - 1;
     },
     [](const OdometerCell&, const OdometerCell&, Int) { return OdometerCell{0, false, false, true}; }},
    {9,  // _EI <-J*  ->  <-_E0
     [](const OdometerCell& c0, const OdometerCell& c1, Int) { return end_only(c0) && c1.arrow && c1.star && !c1.end; },
     [](const OdometerCell&, const OdometerCell&, Int) { return OdometerCell{0, true, false, true}; }},
    {10,  // _EI <-J  ->  <-_E0
     [](const OdometerCell& c0, const OdometerCell& c1, Int) { return end_only(c0) && c1.arrow && !c1.star && !c1.end; },
     [](const OdometerCell&, const OdometerCell&, Int) { return OdometerCell{0, true, false, true}; }},
    {11,  // I J  ->  I
     [](const OdometerCell& c0, const OdometerCell& c1, Int) { return plain(c0) && plain(c1); },
     [](const OdometerCell& c0, const OdometerCell&, Int) { return c0; }},
    {12,  // _EI J  ->  _EI
     [](const OdometerCell& c0, const OdometerCell& c1, Int) { return end_only(c0) && plain(c1); },
     [](const OdometerCell& c0, const OdometerCell&, Int) { return c0; }},
    {13,  // I _EJ  ->  I
     [](const OdometerCell& c0, const OdometerCell& c1, Int) { return plain(c0) && end_only(c1); },
     [](const OdometerCell& c0, const OdometerCell&, Int) { return c0; }},
    {14,  // I <-_Ej  ->  I
     [](const OdometerCell& c0, const OdometerCell& c1, Int k) {
       return plain(c0) && c1.arrow && !c1.star && c1.end && c1.digit != k - 1;
     },
     [](const OdometerCell& c0, const OdometerCell&, Int) { return c0; }},
};

void require_construction_params(int sigma, Int k) {
  if (sigma < 2) throw UsageError("construction: sigma must be >= 2");
  if (k < 2) throw UsageError("construction: k must be >= 2");
}

std::vector<Int> primes_up_to(Int limit) {
  std::vector<Int> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (Int p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (Int q = p * p; q <= limit; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

// Branch and bound over descending primes: pick `need` distinct primes with
// sum <= budget maximising the product.
void best_product(const std::vector<Int>& primes_desc, std::size_t from, int need, Int budget,
                  std::vector<Int>& chosen, BigInt product, BigInt& best, std::vector<Int>& best_set) {
  if (need == 0) {
    if (product > best) {
      best = product;
      best_set = chosen;
    }
    return;
  }
  for (std::size_t i = from; i < primes_desc.size(); ++i) {
    const Int p = primes_desc[i];
    if (primes_desc.size() - i < static_cast<std::size_t>(need)) break;
    // The `need - 1` smallest primes must still fit after p.
    Int min_rest = 0;
    for (int r = 0; r < need - 1; ++r) min_rest += primes_desc[primes_desc.size() - 1 - r];
    if (p + min_rest > budget) continue;
    // Upper bound: p and the next need-1 primes below it.
    BigInt bound = product;
    for (int r = 0; r < need; ++r) bound *= primes_desc[i + r];
    if (bound <= best) break;
    chosen.push_back(p);
    best_product(primes_desc, i + 1, need - 1, budget - p, chosen, product * p, best, best_set);
    chosen.pop_back();
  }
}

}  // namespace

Int encode_cell(const OdometerCell& cell, Int k) {
  return cell.digit + k * ((cell.arrow ? 1 : 0) + 2 * (cell.star ? 1 : 0) + 4 * (cell.end ? 1 : 0));
}

OdometerCell decode_cell(Int index, Int k) {
  const Int flags = index / k;
  return {index % k, (flags & 1) != 0, (flags & 2) != 0, (flags & 4) != 0};
}

std::optional<int> odometer_assignment(const OdometerCell& current, const OdometerCell& right, Int k) {
  std::optional<int> found;
  for (const auto& a : kAssignments) {
    if (!a.matches(current, right, k)) continue;
    if (found)
      throw std::logic_error("odometer assignments " + std::to_string(*found) + " and " + std::to_string(a.number) +
                             " overlap");
    found = a.number;
  }
  return found;
}

OdometerCell odometer_update(const OdometerCell& current, const OdometerCell& right, Int k) {
  const auto number = odometer_assignment(current, right, k);
  if (!number) return current;
  const auto& a = kAssignments[*number - 1];
  return a.result(current, right, k);
}

RuleTable odometer_rule(int sigma, Int k) {
  require_construction_params(sigma, k);
  const Int n = 8 * k;
  RuleTable rule{n, Orientation::Right, std::vector<State>(static_cast<std::size_t>(n * n))};
  for (Int c0 = 0; c0 < n; ++c0)
    for (Int c1 = 0; c1 < n; ++c1)
      rule.table[static_cast<std::size_t>(c0 * n + c1)] =
          static_cast<State>(encode_cell(odometer_update(decode_cell(c0, k), decode_cell(c1, k), k), k));
  return rule;
}

std::vector<OdometerCell> odometer_start_cells(int sigma) {
  std::vector<OdometerCell> cells(static_cast<std::size_t>(sigma));
  cells.back() = {0, true, false, true};
  return cells;
}

RingConfig odometer_start(int sigma, Int k) {
  RingConfig c;
  for (const auto& cell : odometer_start_cells(sigma)) c.word.push_back(static_cast<State>(encode_cell(cell, k)));
  return c;
}

bool is_legitimate(std::span<const OdometerCell> cells) {
  int arrows = 0, ends = 0;
  for (const auto& c : cells) {
    arrows += c.arrow ? 1 : 0;
    ends += c.end ? 1 : 0;
    if (c.star && (!c.arrow || c.end)) return false;
  }
  return arrows == 1 && ends == 1;
}

EndReaderState end_reader_step(const EndReaderState& state, bool end_symbol, int sigma) {
  if (state.terminal) return state;
  const bool last = state.count == sigma - 1;
  if (!state.seen) {
    if (!last) return {state.count + 1, end_symbol, false};
    return end_symbol ? EndReaderState{} : EndReaderState::t1();
  }
  if (end_symbol) return EndReaderState::t1();
  return last ? EndReaderState{} : EndReaderState{state.count + 1, true, false};
}

int end_reader_index(const EndReaderState& state, int sigma) {
  if (state.terminal) return 2 * sigma - 1;
  return state.seen ? sigma + state.count - 1 : state.count;
}

EndReaderState end_reader_from_index(int index, int sigma) {
  if (index == 2 * sigma - 1) return EndReaderState::t1();
  if (index < sigma) return {index, false, false};
  return {index - sigma + 1, true, false};
}

ArrowReaderState arrow_reader_step(const ArrowReaderState& state, bool arrow, bool end, int sigma) {
  if (state.terminal) return state;
  if (arrow || !end) return {};
  return state.count == sigma ? ArrowReaderState::t2() : ArrowReaderState{state.count + 1, false};
}

int arrow_reader_index(const ArrowReaderState& state, int sigma) { return state.terminal ? sigma + 1 : state.count; }

ArrowReaderState arrow_reader_from_index(int index, int sigma) {
  return index == sigma + 1 ? ArrowReaderState::t2() : ArrowReaderState{index, false};
}

Int automata_state_count(int sigma, Int k) { return 16 * static_cast<Int>(sigma) * (sigma + 2) * k + 1; }

AutomataEncoding::AutomataEncoding(int sigma, Int k, Int n)
    : sigma_(sigma), k_(k), n_(n), product_states_(automata_state_count(sigma, k) - 1) {
  require_construction_params(sigma, k);
  if (n < product_states_ + 1)
    throw UsageError("odometer-automata: n must be >= " + std::to_string(product_states_ + 1));
}

Int AutomataEncoding::encode(const AutomataCell& cell) const {
  const Int layer = 8 * k_;
  const Int er = end_reader_index(cell.end_reader, sigma_);
  const Int ar = arrow_reader_index(cell.arrow_reader, sigma_);
  return encode_cell(cell.first, k_) + layer * (er + 2 * sigma_ * ar);
}

std::optional<AutomataCell> AutomataEncoding::decode(Int index) const {
  if (index < 0 || index >= product_states_) return std::nullopt;
  const Int layer = 8 * k_;
  const Int second = index / layer;
  return AutomataCell{decode_cell(index % layer, k_),
                      end_reader_from_index(static_cast<int>(second % (2 * sigma_)), sigma_),
                      arrow_reader_from_index(static_cast<int>(second / (2 * sigma_)), sigma_)};
}

RuleTable odometer_automata_rule(int sigma, Int k, std::optional<Int> n_opt) {
  require_construction_params(sigma, k);
  if (k <= sigma) throw UsageError("odometer-automata: k must exceed sigma");
  const Int n = n_opt.value_or(automata_state_count(sigma, k));
  const AutomataEncoding enc(sigma, k, n);
  const auto T = static_cast<State>(enc.terminator());

  std::vector<std::optional<AutomataCell>> cells(static_cast<std::size_t>(n));
  for (Int i = 0; i < n; ++i) cells[static_cast<std::size_t>(i)] = enc.decode(i);

  // Memoised first-layer update; 8k x 8k pairs.
  const Int layer = 8 * k;
  std::vector<OdometerCell> first_update(static_cast<std::size_t>(layer * layer));
  for (Int c0 = 0; c0 < layer; ++c0)
    for (Int c1 = 0; c1 < layer; ++c1)
      first_update[static_cast<std::size_t>(c0 * layer + c1)] =
          odometer_update(decode_cell(c0, k), decode_cell(c1, k), k);

  RuleTable rule{n, Orientation::Right, std::vector<State>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), T)};
  for (Int i = 0; i < n; ++i) {
    const auto& s = cells[static_cast<std::size_t>(i)];
    if (!s) continue;  // T and leftovers
    for (Int j = 0; j < n; ++j) {
      const auto& r = cells[static_cast<std::size_t>(j)];
      if (!r) continue;
      // Terminator propagation.
      if (s->end_reader.terminal || s->arrow_reader.terminal || r->end_reader.terminal || r->arrow_reader.terminal)
        continue;
      // Star without arrow, or star on the E site; neither occurs on the odometer PS.
      if (s->first.star && (!s->first.arrow || s->first.end)) continue;
      // Two adjacent arrows.
      if (s->first.arrow && r->first.arrow) continue;
      AutomataCell next;
      next.first = first_update[static_cast<std::size_t>(encode_cell(s->first, k) * layer + encode_cell(r->first, k))];
      next.end_reader = end_reader_step(r->end_reader, r->first.end, sigma);
      next.arrow_reader = arrow_reader_step(s->arrow_reader, s->first.arrow, s->first.end, sigma);
      rule.table[static_cast<std::size_t>(i * n + j)] = static_cast<State>(enc.encode(next));
    }
  }
  return rule;
}

RingConfig odometer_automata_start(const AutomataEncoding& encoding) {
  RingConfig c;
  for (const auto& cell : odometer_start_cells(encoding.sigma()))
    c.word.push_back(static_cast<State>(encoding.encode({cell, {}, {}})));
  return c;
}

std::optional<std::vector<OdometerCell>> first_layer(const RingConfig& c, const AutomataEncoding& encoding) {
  std::vector<OdometerCell> out;
  for (State s : c.word) {
    const auto cell = encoding.decode(s);
    if (!cell) return std::nullopt;
    out.push_back(cell->first);
  }
  return out;
}

bool is_terminated(const RingConfig& c, const AutomataEncoding& encoding) {
  for (State s : c.word) {
    const auto cell = encoding.decode(s);
    if (!cell || cell->end_reader.terminal || cell->arrow_reader.terminal) return true;
  }
  return false;
}

std::vector<Int> select_partition_primes(int sigma, Int n, PrimeSelection* selection) {
  if (sigma < 2) throw UsageError("prime-partition: sigma must be >= 2");
  if (n < 2) throw UsageError("prime-partition: n must be >= 2");
  const Int budget = n - 1;
  const auto all = primes_up_to(budget);

  // Primes p with (n-1)/(2 sigma) <= p <= (n-1)/sigma.
  std::vector<Int> interval;
  for (Int p : all)
    if (2 * sigma * p >= budget && sigma * p <= budget) interval.push_back(p);
  if (interval.size() >= static_cast<std::size_t>(sigma)) {
    if (selection) *selection = PrimeSelection::Interval;
    return {interval.end() - sigma, interval.end()};
  }

  std::vector<Int> desc(all.rbegin(), all.rend());
  std::vector<Int> chosen, best_set;
  BigInt best = 0;
  best_product(desc, 0, sigma, budget, chosen, BigInt(1), best, best_set);
  if (best_set.empty())
    throw InfeasibleError("prime-partition: no " + std::to_string(sigma) + " distinct primes have sum <= " +
                          std::to_string(budget));
  std::sort(best_set.begin(), best_set.end());
  if (selection) *selection = PrimeSelection::MaxProduct;
  return best_set;
}

std::pair<RuleTable, PrimePartitionSpec> prime_partition_rule(int sigma, Int n) {
  PrimePartitionSpec spec{sigma, n, {}, {}, PrimeSelection::Interval};
  spec.primes = select_partition_primes(sigma, n, &spec.selection);

  // block_of[s] = j for s in P_j, -1 for 0 and unused states.
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  std::vector<Int> next_in_block(static_cast<std::size_t>(n), 0);
  Int state = 1;
  for (int j = 0; j < sigma; ++j) {
    std::vector<Int> block;
    for (Int i = 0; i < spec.primes[static_cast<std::size_t>(j)]; ++i) block.push_back(state++);
    for (std::size_t i = 0; i < block.size(); ++i) {
      block_of[static_cast<std::size_t>(block[i])] = j;
      next_in_block[static_cast<std::size_t>(block[i])] = block[(i + 1) % block.size()];
    }
    spec.blocks.push_back(std::move(block));
  }

  RuleTable rule{n, Orientation::Right, std::vector<State>(static_cast<std::size_t>(n * n), 0)};
  for (Int s = 1; s < n; ++s) {
    const int j = block_of[static_cast<std::size_t>(s)];
    if (j < 0) continue;
    for (Int t = 1; t < n; ++t)
      if (block_of[static_cast<std::size_t>(t)] == (j + 1) % sigma)
        rule.table[static_cast<std::size_t>(s * n + t)] = static_cast<State>(next_in_block[static_cast<std::size_t>(s)]);
  }
  return {std::move(rule), std::move(spec)};
}

bool is_regular(const RingConfig& c, const PrimePartitionSpec& spec) {
  if (c.sigma() != spec.sigma) return false;
  auto block_index = [&](State s) {
    for (std::size_t j = 0; j < spec.blocks.size(); ++j)
      if (std::binary_search(spec.blocks[j].begin(), spec.blocks[j].end(), static_cast<Int>(s))) return static_cast<int>(j);
    return -1;
  };
  const int first = block_index(c.word.front());
  if (first < 0) return false;
  for (int x = 1; x < spec.sigma; ++x)
    if (block_index(c.word[static_cast<std::size_t>(x)]) != (first + x) % spec.sigma) return false;
  return true;
}

nlohmann::json odometer_sidecar(int sigma, Int k) {
  nlohmann::json states = nlohmann::json::array();
  for (Int i = 0; i < 8 * k; ++i) {
    const auto c = decode_cell(i, k);
    states.push_back({{"index", i}, {"digit", c.digit}, {"arrow", c.arrow}, {"star", c.star}, {"end", c.end}});
  }
  return {{"kind", "odometer"}, {"sigma", sigma}, {"k", k}, {"n", 8 * k},
          {"orientation", "right"}, {"start", odometer_start(sigma, k).word}, {"states", states}};
}

nlohmann::json automata_sidecar(const AutomataEncoding& enc) {
  const int sigma = enc.sigma();
  nlohmann::json states = nlohmann::json::array();
  for (Int i = 0; i < enc.product_states(); ++i) {
    const auto c = *enc.decode(i);
    nlohmann::json er = c.end_reader.terminal
                            ? nlohmann::json("T1")
                            : nlohmann::json::array({c.end_reader.count, c.end_reader.seen ? 1 : 0});
    nlohmann::json ar = c.arrow_reader.terminal ? nlohmann::json("T2") : nlohmann::json(c.arrow_reader.count);
    states.push_back({{"index", i}, {"digit", c.first.digit}, {"arrow", c.first.arrow}, {"star", c.first.star},
                      {"end", c.first.end}, {"end_reader", er}, {"arrow_reader", ar}});
  }
  return {{"kind", "odometer-automata"},
          {"sigma", sigma},
          {"k", enc.k()},
          {"n", enc.n()},
          {"orientation", "right"},
          {"terminator", enc.terminator()},
          {"leftover", {enc.used_states(), enc.n()}},
          {"start", odometer_automata_start(enc).word},
          {"states", states}};
}

nlohmann::json prime_partition_sidecar(const PrimePartitionSpec& spec) {
  return {{"kind", "prime-partition"},
          {"sigma", spec.sigma},
          {"n", spec.n},
          {"orientation", "right"},
          {"terminator", 0},
          {"primes", spec.primes},
          {"blocks", spec.blocks},
          {"selection", spec.selection == PrimeSelection::Interval ? "interval" : "max-product"}};
}

}  // namespace caperiod
