#pragma once

// Exhaustive and structured searches over rule spaces: MCL rule counts,
// extremal X/Y over all rules, additive rho/pi, and the pi versus ub scan.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "caperiod/engine.hpp"

namespace caperiod {

enum class Provenance { Computed, SkippedBudget };

struct TableRow {
  std::vector<std::pair<std::string, Int>> params;
  std::vector<std::pair<std::string, Int>> values;
  Provenance provenance = Provenance::Computed;
  std::string reason;  // set for skipped rows

  Int param(const std::string& name) const;
  Int value(const std::string& name) const;
};

struct MclCount {
  BigInt count;
  BigInt total_rules;  // n^(n^2)
};

// Number of rules whose longest exact-sigma cycle has length T(sigma, n).
// Such a cycle passes through every aperiodic word, so the search follows the
// orbit of one seed word and assigns table entries only when first consulted.
// `budget` bounds the number of search nodes; exceeding it throws BudgetExceeded.
MclCount mcl_count(int sigma, Int n, std::uint64_t budget = default_budget());

// Reference count by scanning every rule; only for tiny n.
MclCount mcl_count_brute(int sigma, Int n, unsigned threads = 0);

// Rows for sigma = 1..sigma_max with columns maxX, N_X, maxY, N_Y, T. A row whose
// n^(n^2) * n^sigma node visits exceed `budget` is marked skipped.
std::vector<TableRow> extremal_table(Int n, int sigma_min, int sigma_max, std::uint64_t budget = default_budget(),
                                     unsigned threads = 0);

// One row per n with columns rho and pi.
std::vector<TableRow> additive_extremal_table(int sigma, Int n_min, Int n_max, unsigned threads = 0);

struct PrimePowerCase {
  int sigma;
  Int p;
  int m;
};

// pi_brute and ub for each case, in order.
std::vector<TableRow> pi_ub_rows(const std::vector<PrimePowerCase>& cases, unsigned threads = 0);

// All (sigma, p^m) with sigma in range, p <= p_max and ub <= ub_max where pi < ub.
std::vector<TableRow> pi_ub_scan(int sigma_min, int sigma_max, Int p_max, Int ub_max, unsigned threads = 0);

// The (sigma, p^m) set listed in the discrepancy table.
std::vector<PrimePowerCase> table4_cases();

// CSV text: header row, one line per computed row, "# ..." comment per skipped row.
std::string to_csv(const std::vector<std::string>& header, const std::vector<TableRow>& rows);

// Table renderings with their canonical headers.
std::string table2_csv(const std::vector<TableRow>& rows);
std::string table3_csv(const std::vector<TableRow>& sigma2, const std::vector<TableRow>& sigma3);
std::string table4_csv(const std::vector<TableRow>& rows);

}  // namespace caperiod
