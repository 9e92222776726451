#include "caperiod/search.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "caperiod/additive.hpp"
#include "caperiod/errors.hpp"
#include "caperiod/parallel.hpp"

namespace caperiod {

namespace {

Int lookup(const std::vector<std::pair<std::string, Int>>& fields, const std::string& name) {
  for (const auto& [key, v] : fields)
    if (key == name) return v;
  throw std::out_of_range("TableRow: no column '" + name + "'");
}

bool has(const std::vector<std::pair<std::string, Int>>& fields, const std::string& name) {
  return std::any_of(fields.begin(), fields.end(), [&](const auto& f) { return f.first == name; });
}

std::uint64_t rule_count(Int n) { return static_cast<std::uint64_t>(checked_pow(n, n * n)); }

class MclSearch {
 public:
  MclSearch(int sigma, Int n, std::uint64_t budget)
      : sigma_(sigma), n_(n), budget_(budget), T_(static_cast<std::uint64_t>(aperiodic_count(sigma, n))),
        total_(config_count(sigma, n)), periodic_(total_), on_path_(total_, 0),
        table_(static_cast<std::size_t>(n * n), -1), keys_(total_ * static_cast<std::size_t>(sigma)) {
    for (std::uint64_t i = 0; i < total_; ++i) {
      const auto word = decode(i, sigma, n).word;
      periodic_[i] = spatial_period(word) < sigma ? 1 : 0;
      for (int x = 0; x < sigma; ++x)
        keys_[i * static_cast<std::size_t>(sigma) + static_cast<std::size_t>(x)] =
            static_cast<std::uint32_t>(word[static_cast<std::size_t>((x + sigma - 1) % sigma)] * n + word[static_cast<std::size_t>(x)]);
    }
  }

  BigInt run() {
    std::vector<State> seed(static_cast<std::size_t>(sigma_), 0);
    seed.back() = 1;
    seed_ = encode(seed, n_);
    on_path_[seed_] = 1;
    explore(seed_, 0);
    return count_;
  }

 private:
  void explore(std::uint64_t current, std::uint64_t steps) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("mcl search exceeded " + std::to_string(budget_) + " nodes");
    // Left orientation: site x reads (x - 1, x).
    const std::uint32_t* keys = &keys_[current * static_cast<std::size_t>(sigma_)];
    std::uint64_t following = 0;
    for (int x = 0; x < sigma_; ++x) {
      const std::uint32_t key = keys[x];
      if (table_[key] < 0) {
        for (Int v = 0; v < n_; ++v) {
          table_[key] = static_cast<int>(v);
          ++assigned_;
          explore(current, steps);
          --assigned_;
        }
        table_[key] = -1;
        return;
      }
      following = following * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(table_[key]);
    }
    if (periodic_[following]) return;
    if (following == seed_) {
      if (steps + 1 == T_) count_ += boost::multiprecision::pow(BigInt(n_), static_cast<unsigned>(n_ * n_ - assigned_));
      return;
    }
    if (on_path_[following]) return;
    on_path_[following] = 1;
    explore(following, steps + 1);
    on_path_[following] = 0;
  }

  int sigma_;
  Int n_;
  std::uint64_t budget_;
  std::uint64_t T_;
  std::uint64_t total_;
  std::vector<std::uint8_t> periodic_;
  std::vector<std::uint8_t> on_path_;
  std::vector<int> table_;
  std::vector<std::uint32_t> keys_;  // table key of each site of each configuration
  Int assigned_ = 0;
  std::uint64_t seed_ = 0;
  std::uint64_t nodes_ = 0;
  BigInt count_ = 0;
};

struct Extremes {
  std::uint64_t max_x = 0, n_x = 0, max_y = 0, n_y = 0;

  void add_x(std::uint64_t v, std::uint64_t count) {
    if (v > max_x) {
      max_x = v;
      n_x = count;
    } else if (v == max_x) {
      n_x += count;
    }
  }
  void add_y(std::uint64_t v, std::uint64_t count) {
    if (v > max_y) {
      max_y = v;
      n_y = count;
    } else if (v == max_y) {
      n_y += count;
    }
  }
};

}  // namespace

Int TableRow::param(const std::string& name) const { return lookup(params, name); }
Int TableRow::value(const std::string& name) const { return lookup(values, name); }

MclCount mcl_count(int sigma, Int n, std::uint64_t budget) {
  if (sigma < 1) throw UsageError("mcl: sigma must be >= 1");
  if (n < 2) throw UsageError("mcl: n must be >= 2");
  MclSearch search(sigma, n, budget);
  return {search.run(), boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n * n))};
}

MclCount mcl_count_brute(int sigma, Int n, unsigned threads) {
  const std::uint64_t rules = rule_count(n);
  const auto T = static_cast<std::uint64_t>(aperiodic_count(sigma, n));
  threads = resolve_threads(threads);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::unique_ptr<ExactPeriodScanner>> scanners(threads);
  parallel_chunks(rules, threads, 256, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    if (!scanners[w]) scanners[w] = std::make_unique<ExactPeriodScanner>(n, sigma);
    for (std::uint64_t r = begin; r < end; ++r) {
      const auto e = scanners[w]->scan(RuleTable::from_index(n, r));
      if (e.X && *e.X == T) ++partial[w];
    }
  });
  BigInt count = 0;
  for (auto v : partial) count += v;
  return {count, BigInt(rules)};
}

std::vector<TableRow> extremal_table(Int n, int sigma_min, int sigma_max, std::uint64_t budget, unsigned threads) {
  if (n < 2) throw UsageError("table: n must be >= 2");
  if (sigma_min < 1 || sigma_max < sigma_min) throw UsageError("table: bad sigma range");
  threads = resolve_threads(threads);
  std::vector<TableRow> rows;
  for (int sigma = sigma_min; sigma <= sigma_max; ++sigma) {
    TableRow row;
    row.params = {{"sigma", sigma}, {"n", n}};
    std::uint64_t rules = 0, visits = 0;
    try {
      rules = rule_count(n);
      visits = static_cast<std::uint64_t>(checked_mul(static_cast<Int>(rules), static_cast<Int>(config_count(sigma, n))));
    } catch (const OverflowError&) {
      visits = UINT64_MAX;
    }
    if (visits > budget) {
      row.provenance = Provenance::SkippedBudget;
      row.reason = "needs " + (visits == UINT64_MAX ? std::string("> 2^63") : std::to_string(visits)) +
                   " node visits, budget is " + std::to_string(budget);
      rows.push_back(std::move(row));
      continue;
    }

    std::vector<Extremes> partial(threads);
    std::vector<std::unique_ptr<ExactPeriodScanner>> scanners(threads);
    parallel_chunks(rules, threads, 64, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
      if (!scanners[w]) scanners[w] = std::make_unique<ExactPeriodScanner>(n, sigma);
      for (std::uint64_t r = begin; r < end; ++r) {
        const auto e = scanners[w]->scan(RuleTable::from_index(n, r));
        if (e.X) partial[w].add_x(*e.X, 1);
        if (e.Y) partial[w].add_y(*e.Y, 1);
        if (e.X && e.Y && *e.Y > *e.X) throw std::logic_error("extremal_table: Y > X");
      }
    });
    Extremes total;
    for (const auto& p : partial) {
      if (p.n_x) total.add_x(p.max_x, p.n_x);
      if (p.n_y) total.add_y(p.max_y, p.n_y);
    }
    row.values = {{"maxX", static_cast<Int>(total.max_x)},
                  {"N_X", static_cast<Int>(total.n_x)},
                  {"maxY", static_cast<Int>(total.max_y)},
                  {"N_Y", static_cast<Int>(total.n_y)},
                  {"T", aperiodic_count(sigma, n)}};
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> additive_extremal_table(int sigma, Int n_min, Int n_max, unsigned threads) {
  if (sigma < 1) throw UsageError("table: sigma must be >= 1");
  if (n_min < 2 || n_max < n_min) throw UsageError("table: bad n range");
  std::vector<TableRow> rows;
  for (Int n = n_min; n <= n_max; ++n) {
    std::uint64_t rho = 0;
    for (Int a = 0; a < n; ++a)
      for (Int b = 0; b < n; ++b) {
        const auto e = extremal_periods(RuleTable::additive(n, a, b), sigma);
        if (e.Y) rho = std::max(rho, *e.Y);
      }
    TableRow row;
    row.params = {{"sigma", sigma}, {"n", n}};
    row.values = {{"rho", static_cast<Int>(rho)}, {"pi", pi_brute(sigma, n, threads).value}};
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> pi_ub_rows(const std::vector<PrimePowerCase>& cases, unsigned threads) {
  std::vector<TableRow> rows;
  for (const auto& c : cases) {
    TableRow row;
    row.params = {{"sigma", c.sigma}, {"p", c.p}, {"m", c.m}};
    row.values = {{"pi", pi_brute(c.sigma, checked_pow(c.p, c.m), threads).value}, {"ub", ub(c.sigma, c.p, c.m)}};
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> pi_ub_scan(int sigma_min, int sigma_max, Int p_max, Int ub_max, unsigned threads) {
  if (sigma_min < 1 || sigma_max < sigma_min) throw UsageError("scan: bad sigma range");
  std::vector<TableRow> rows;
  for (int sigma = sigma_min; sigma <= sigma_max; ++sigma) {
    for (Int p = 2; p <= p_max; ++p) {
      if (!is_prime(p)) continue;
      for (int m = 1;; ++m) {
        Int bound = 0;
        try {
          bound = ub(sigma, p, m);
        } catch (const OverflowError&) {
          break;
        }
        if (bound > ub_max) break;
        const Int pi = pi_brute(sigma, checked_pow(p, m), threads).value;
        if (pi < bound) {
          TableRow row;
          row.params = {{"sigma", sigma}, {"p", p}, {"m", m}};
          row.values = {{"pi", pi}, {"ub", bound}};
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::vector<PrimePowerCase> table4_cases() {
  std::vector<PrimePowerCase> cases;
  auto range = [&](int sigma, Int p, int m_lo, int m_hi) {
    for (int m = m_lo; m <= m_hi; ++m) cases.push_back({sigma, p, m});
  };
  range(2, 2, 2, 2);
  range(4, 2, 2, 3);
  range(7, 3, 1, 1);
  range(8, 2, 2, 4);
  range(11, 2, 1, 1);
  range(13, 2, 1, 1);
  range(14, 3, 1, 1);
  range(16, 2, 2, 5);
  range(21, 3, 1, 1);
  range(22, 2, 1, 1);
  range(26, 2, 1, 1);
  range(32, 2, 2, 6);
  range(42, 3, 1, 1);
  range(44, 2, 1, 1);
  return cases;
}

std::string to_csv(const std::vector<std::string>& header, const std::vector<TableRow>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    if (row.provenance == Provenance::SkippedBudget) {
      out << "#";
      for (const auto& [key, v] : row.params) out << ' ' << key << '=' << v;
      out << " skipped: " << row.reason << '\n';
      continue;
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
      const auto& h = header[i];
      out << (i ? "," : "") << (has(row.params, h) ? row.param(h) : row.value(h));
    }
    out << '\n';
  }
  return out.str();
}

std::string table2_csv(const std::vector<TableRow>& rows) {
  return to_csv({"sigma", "maxX", "N_X", "maxY", "N_Y", "T"}, rows);
}

std::string table3_csv(const std::vector<TableRow>& sigma2, const std::vector<TableRow>& sigma3) {
  std::map<Int, TableRow> joined;
  for (const auto& r : sigma2) {
    auto& row = joined[r.param("n")];
    row.params = {{"n", r.param("n")}};
    row.values.emplace_back("rho_2", r.value("rho"));
    row.values.emplace_back("pi_2", r.value("pi"));
  }
  for (const auto& r : sigma3) {
    auto& row = joined[r.param("n")];
    row.params = {{"n", r.param("n")}};
    row.values.emplace_back("rho_3", r.value("rho"));
    row.values.emplace_back("pi_3", r.value("pi"));
  }
  std::vector<TableRow> rows;
  for (auto& [n, row] : joined) rows.push_back(std::move(row));
  return to_csv({"n", "rho_2", "pi_2", "rho_3", "pi_3"}, rows);
}

std::string table4_csv(const std::vector<TableRow>& rows) { return to_csv({"sigma", "p", "m", "pi", "ub"}, rows); }

}  // namespace caperiod
