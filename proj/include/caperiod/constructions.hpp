#pragma once

// Explicit long-period rules: the base-k odometer, the odometer guarded by the
// END-READER / ARROW-READER automata, and the prime partition rule. All tables
// are emitted in right orientation; use mirror() for the left-sided form.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "caperiod/engine.hpp"

namespace caperiod {

// (digit, particle, asterisk, end) with index digit + k * (arrow + 2 star + 4 end).
struct OdometerCell {
  Int digit = 0;
  bool arrow = false;
  bool star = false;
  bool end = false;

  friend bool operator==(const OdometerCell&, const OdometerCell&) = default;
};

Int encode_cell(const OdometerCell& cell, Int k);
OdometerCell decode_cell(Int index, Int k);

// Number (1..14) of the odometer assignment matching the pair, or nullopt for
// the identity default. Throws std::logic_error if two assignments match.
std::optional<int> odometer_assignment(const OdometerCell& current, const OdometerCell& right, Int k);
OdometerCell odometer_update(const OdometerCell& current, const OdometerCell& right, Int k);

RuleTable odometer_rule(int sigma, Int k);

// (sigma - 1) zeros followed by a cell holding digit 0, an arrow and the E mark.
std::vector<OdometerCell> odometer_start_cells(int sigma);
RingConfig odometer_start(int sigma, Int k);

// Exactly one arrow, exactly one E, and every star sits on an arrow away from E.
bool is_legitimate(std::span<const OdometerCell> cells);

// END-READER: (count, seen) with count in [0, sigma), seen only for count >= 1, or T1.
struct EndReaderState {
  int count = 0;
  bool seen = false;
  bool terminal = false;

  static EndReaderState t1() { return {0, false, true}; }
  friend bool operator==(const EndReaderState&, const EndReaderState&) = default;
};

EndReaderState end_reader_step(const EndReaderState& state, bool end_symbol, int sigma);
int end_reader_index(const EndReaderState& state, int sigma);  // [0, 2 sigma)
EndReaderState end_reader_from_index(int index, int sigma);

// ARROW-READER: count in [0, sigma] or T2.
struct ArrowReaderState {
  int count = 0;
  bool terminal = false;

  static ArrowReaderState t2() { return {0, true}; }
  friend bool operator==(const ArrowReaderState&, const ArrowReaderState&) = default;
};

ArrowReaderState arrow_reader_step(const ArrowReaderState& state, bool arrow, bool end, int sigma);
int arrow_reader_index(const ArrowReaderState& state, int sigma);  // [0, sigma + 2)
ArrowReaderState arrow_reader_from_index(int index, int sigma);

struct AutomataCell {
  OdometerCell first;
  EndReaderState end_reader;
  ArrowReaderState arrow_reader;

  friend bool operator==(const AutomataCell&, const AutomataCell&) = default;
};

// State layout for the odometer with automata: product states first, then the
// terminator T, then leftover states of Z_n that immediately become T.
class AutomataEncoding {
 public:
  AutomataEncoding(int sigma, Int k, Int n);

  int sigma() const { return sigma_; }
  Int k() const { return k_; }
  Int n() const { return n_; }
  Int product_states() const { return product_states_; }  // 16 sigma (sigma + 2) k
  Int terminator() const { return product_states_; }
  Int used_states() const { return product_states_ + 1; }

  Int encode(const AutomataCell& cell) const;
  std::optional<AutomataCell> decode(Int index) const;  // nullopt for T and leftovers

 private:
  int sigma_;
  Int k_;
  Int n_;
  Int product_states_;
};

Int automata_state_count(int sigma, Int k);  // 16 sigma (sigma + 2) k + 1

RuleTable odometer_automata_rule(int sigma, Int k, std::optional<Int> n = std::nullopt);
RingConfig odometer_automata_start(const AutomataEncoding& encoding);

// First layer of every site, or nullopt if some site is T or a leftover state.
std::optional<std::vector<OdometerCell>> first_layer(const RingConfig& c, const AutomataEncoding& encoding);
bool is_terminated(const RingConfig& c, const AutomataEncoding& encoding);

enum class PrimeSelection { Interval, MaxProduct };

struct PrimePartitionSpec {
  int sigma = 0;
  Int n = 0;
  std::vector<Int> primes;               // ascending, distinct
  std::vector<std::vector<Int>> blocks;  // blocks[j] sorted, |blocks[j]| = primes[j]
  PrimeSelection selection = PrimeSelection::Interval;
};

// Prefers sigma primes in [(n-1)/(2 sigma), (n-1)/sigma]; otherwise the sigma
// distinct primes with sum <= n-1 and largest product. Throws InfeasibleError.
std::vector<Int> select_partition_primes(int sigma, Int n, PrimeSelection* selection = nullptr);

std::pair<RuleTable, PrimePartitionSpec> prime_partition_rule(int sigma, Int n);

// s_j in P_{(j + l) mod sigma} for some l.
bool is_regular(const RingConfig& c, const PrimePartitionSpec& spec);

nlohmann::json odometer_sidecar(int sigma, Int k);
nlohmann::json automata_sidecar(const AutomataEncoding& encoding);
nlohmann::json prime_partition_sidecar(const PrimePartitionSpec& spec);

}  // namespace caperiod
