// ca_periods: command-line front end for the caperiod library.
//
// Exit codes: 0 ok, 1 usage, 2 infeasible parameters, 3 budget exceeded,
// 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "caperiod/additive.hpp"
#include "caperiod/constructions.hpp"
#include "caperiod/errors.hpp"
#include "caperiod/modular_algebra.hpp"
#include "caperiod/rule_io.hpp"
#include "caperiod/search.hpp"
#include "caperiod/verify.hpp"

using namespace caperiod;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInfeasible = 2, kBudget = 3, kVerification = 4 };

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(out_path, text);
  }
}

std::string sidecar_path(const std::string& out) {
  std::filesystem::path p(out);
  return (p.parent_path() / (p.stem().string() + ".encoding.json")).string();
}

struct Options {
  unsigned threads = 0;
  std::string out;

  // period
  std::string rule_file;
  // shared numeric flags
  int sigma = 0;
  Int n = 0;
  Int a = 0, b = 0;
  Int p = 0;
  int m = 0;
  std::optional<Int> k;
  std::optional<Int> n_opt;
  std::string method = "both";
  std::string which;
  std::string kind;
  std::string suite = "quick";
  bool long_run = false;
  bool scan = false;
  int sigma_min = 2;
  int sigma_max = 50;
  Int p_max = 50;
  Int ub_max = 100000;
};

int run_period(const Options& o) {
  const auto rule = read_rule_file(o.rule_file);
  const auto census = cycle_census(rule, o.sigma);
  const auto e = extremal_periods(census);
  json cycles = json::array();
  for (const auto& r : census.records)
    cycles.push_back({{"length", r.length}, {"spatial_period", r.spatial_period}, {"count", r.count}});
  json out = {{"X", e.X ? json(*e.X) : json(nullptr)},
              {"Y", e.Y ? json(*e.Y) : json(nullptr)},
              {"cycles", cycles},
              {"transient", census.transient}};
  emit(o.out, out.dump());
  return kOk;
}

int run_additive(const Options& o) {
  if (o.n < 2 || o.sigma < 1) throw UsageError("additive: need n >= 2 and sigma >= 1");
  const auto r = additive_period({o.n, o.sigma, o.a, o.b});
  emit(o.out, json{{"period", r.period}, {"preperiod", r.preperiod}}.dump());
  return kOk;
}

int run_pi(const Options& o) {
  if (o.method == "formula") {
    emit(o.out, std::to_string(pi_formula(o.sigma, o.n)));
    return kOk;
  }
  if (o.method == "brute") {
    emit(o.out, std::to_string(pi_brute(o.sigma, o.n, o.threads).value));
    return kOk;
  }
  const Int formula = pi_formula(o.sigma, o.n);
  const Int brute = pi_brute(o.sigma, o.n, o.threads).value;
  if (formula != brute) {
    emit(o.out, json{{"brute", brute}, {"formula", formula}}.dump());
    throw VerificationFailed("pi: formula " + std::to_string(formula) + " != brute force " + std::to_string(brute));
  }
  emit(o.out, std::to_string(brute));
  return kOk;
}

int run_table(const Options& o) {
  if (o.which == "2") {
    emit(o.out, table2_csv(extremal_table(3, 1, o.long_run ? 10 : 7, o.long_run ? UINT64_MAX : default_budget(),
                                          o.threads)));
  } else if (o.which == "3") {
    emit(o.out, table3_csv(additive_extremal_table(2, 2, 20, o.threads), additive_extremal_table(3, 2, 20, o.threads)));
  } else if (o.scan) {
    emit(o.out, table4_csv(pi_ub_scan(o.sigma_min, o.sigma_max, o.p_max, o.ub_max, o.threads)));
  } else {
    emit(o.out, table4_csv(pi_ub_rows(table4_cases(), o.threads)));
  }
  return kOk;
}

int run_mcl(const Options& o) {
  const auto r = mcl_count(o.sigma, o.n, o.long_run ? UINT64_MAX : default_budget());
  // Counts can exceed 64 bits; JSON numbers carry them verbatim.
  std::ostringstream out;
  out << "{\"count\":" << r.count << ",\"total_rules\":" << r.total_rules << "}";
  emit(o.out, out.str());
  return kOk;
}

int run_construct(const Options& o) {
  if (o.out.empty() || o.out == "-") throw UsageError("construct: --out <file> is required");
  RuleTable rule;
  json sidecar;
  if (o.kind == "odometer") {
    if (!o.k) throw UsageError("construct odometer: --k is required");
    if (o.n_opt && *o.n_opt != 8 * *o.k) throw UsageError("construct odometer: n is fixed at 8k");
    rule = odometer_rule(o.sigma, *o.k);
    sidecar = odometer_sidecar(o.sigma, *o.k);
  } else if (o.kind == "odometer-automata") {
    if (!o.k) throw UsageError("construct odometer-automata: --k is required");
    rule = odometer_automata_rule(o.sigma, *o.k, o.n_opt);
    sidecar = automata_sidecar(AutomataEncoding(o.sigma, *o.k, rule.n));
  } else {
    if (!o.n_opt) throw UsageError("construct prime-partition: --n is required");
    auto [table, spec] = prime_partition_rule(o.sigma, *o.n_opt);
    rule = std::move(table);
    sidecar = prime_partition_sidecar(spec);
  }
  write_text_file(o.out, dump_rule(rule));
  write_text_file(sidecar_path(o.out), sidecar.dump());
  return kOk;
}

int run_verify(const Options& o) {
  const Suite suite = o.suite == "full" ? Suite::Full : Suite::Quick;
  std::ostringstream log;
  bool all = true;
  run_criteria(suite, o.threads, [&](const CriterionResult& r) {
    const auto line = format_result(r);
    all = all && r.passed;
    if (o.out.empty() || o.out == "-")
      std::cout << line << std::endl;
    else
      log << line << '\n';
  });
  if (!o.out.empty() && o.out != "-") write_text_file(o.out, log.str());
  if (!all) throw VerificationFailed("verify: at least one criterion failed");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal periods of two-neighbour cellular automata on rings"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "worker threads (0 = hardware)");
    sub->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* period = app.add_subcommand("period", "cycle census of a rule on a ring of sigma sites");
  period->add_option("--rule", o.rule_file, "rule JSON file")->required();
  period->add_option("--sigma", o.sigma)->required()->check(CLI::PositiveNumber);
  common(period);

  auto* additive = app.add_subcommand("additive", "eventual period of the additive rule b*c0 + a*c1");
  additive->add_option("--n", o.n)->required();
  additive->add_option("--sigma", o.sigma)->required();
  additive->add_option("--a", o.a)->required();
  additive->add_option("--b", o.b)->required();
  common(additive);

  auto* pi = app.add_subcommand("pi", "maximum additive period");
  pi->add_option("--sigma", o.sigma)->required();
  pi->add_option("--n", o.n)->required();
  pi->add_option("--method", o.method)->check(CLI::IsMember({"formula", "brute", "both"}));
  common(pi);

  auto* lambda = app.add_subcommand("lambda", "exponent of the unit group");
  lambda->add_option("--sigma", o.sigma)->required()->check(CLI::IsMember({2, 3, 4}));
  lambda->add_option("--n", o.n)->required();
  common(lambda);

  auto* ubcmd = app.add_subcommand("ub", "recursive upper bound at a prime power");
  ubcmd->add_option("--sigma", o.sigma)->required();
  ubcmd->add_option("--p", o.p)->required();
  ubcmd->add_option("--m", o.m)->required();
  common(ubcmd);

  auto* table = app.add_subcommand("table", "reproduce a results table as CSV");
  table->add_option("--which", o.which)->required()->check(CLI::IsMember({"2", "3", "4"}));
  table->add_flag("--long-run", o.long_run, "table 2: include sigma = 8..10");
  table->add_flag("--scan", o.scan, "table 4: scan instead of the listed cases");
  table->add_option("--sigma-min", o.sigma_min, "table 4 scan: smallest sigma");
  table->add_option("--sigma-max", o.sigma_max, "table 4 scan: largest sigma");
  table->add_option("--p-max", o.p_max, "table 4 scan: largest prime");
  table->add_option("--ub-max", o.ub_max, "table 4 scan: largest ub");
  common(table);

  auto* mcl = app.add_subcommand("mcl", "count rules attaining the maximum cycle length");
  mcl->add_option("--sigma", o.sigma)->required();
  mcl->add_option("--n", o.n)->required();
  mcl->add_flag("--long-run", o.long_run, "lift the search budget");
  common(mcl);

  auto* construct = app.add_subcommand("construct", "emit a constructed rule and its encoding sidecar");
  construct->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"odometer", "odometer-automata", "prime-partition"}));
  construct->add_option("--sigma", o.sigma)->required();
  construct->add_option("--k", o.k);
  construct->add_option("--n", o.n_opt);
  common(construct);

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember({"quick", "full"}));
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*period) return run_period(o);
    if (*additive) return run_additive(o);
    if (*pi) return run_pi(o);
    if (*lambda) {
      emit(o.out, std::to_string(lambda_formula(o.sigma, o.n)));
      return kOk;
    }
    if (*ubcmd) {
      emit(o.out, std::to_string(ub(o.sigma, o.p, o.m)));
      return kOk;
    }
    if (*table) return run_table(o);
    if (*mcl) return run_mcl(o);
    if (*construct) return run_construct(o);
    if (*verify) return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const OverflowError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const VerificationFailed& e) {
    std::cerr << e.what() << '\n';
    return kVerification;
  }
  return kUsage;
}
