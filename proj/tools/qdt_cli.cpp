// Command-line front end: evaluate scenario files, run paradox checks,
// calibrate attraction targets, and sample the dual-evaluation suite.
//
// Exit codes: 0 success, 2 scenario parse/schema error, 3 infeasible
// numbers, 4 bad request. Check verdicts are data, not process failures: a
// check that "fails" still exits 0.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdt/qdt.hpp"

namespace {

struct Options {
  std::string scenario_path;
  std::string builtin_name;
  std::string out_path;
  std::string format = "table";
  std::vector<std::string> prop_filter;
  std::vector<int> props;
  std::vector<std::size_t> modes = {2, 2};
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  double q_scale = 1.0;
  double tol_identity = qdt::kIdentityTol;
  double tol_aggregate = qdt::kAggregateTol;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

qdt::Scenario load(const Options& opt) {
  if (!opt.builtin_name.empty())
    return qdt::scenario_from_json(qdt::builtin_scenario(opt.builtin_name));
  if (!opt.scenario_path.empty()) return qdt::load_scenario(opt.scenario_path);
  throw qdt::MissingScenarioField("give a scenario with --scenario FILE or --builtin NAME");
}

void emit(const nlohmann::json& result, const Options& opt, const std::string& table) {
  const std::string text = qdt::canonical_text(result);
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw qdt::ParseError("cannot open output file '" + opt.out_path + "'");
    out << text;
  }
  if (opt.format == "raw")
    std::cout << text;
  else
    std::cout << table;
}

nlohmann::json provenance_json(const qdt::Scenario* s, const Options& opt,
                               std::optional<std::uint64_t> seed = std::nullopt) {
  qdt::Provenance p;
  p.scenario_hash = s ? s->hash : 0;
  p.seed = seed;
  p.tol_identity = opt.tol_identity;
  p.tol_aggregate = opt.tol_aggregate;
  return p.to_json();
}

std::string provenance_line(const qdt::Scenario* s, const Options& opt) {
  std::string line = "engine " + std::string(qdt::kEngineVersion);
  if (s) line += "  scenario " + qdt::hash_hex(s->hash);
  line += "  tol_identity " + fmt(opt.tol_identity) + "  tol_aggregate " +
          fmt(opt.tol_aggregate) + "\n";
  return line;
}

nlohmann::json report_json(const qdt::ParadoxReport& r) {
  nlohmann::json j;
  j["proposition"] = r.proposition;
  j["verdict"] = qdt::to_string(r.verdict);
  j["margin"] = r.margin;
  if (r.witness >= 0) j["witness"] = r.witness;
  nlohmann::json details = nlohmann::json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = details;
  return j;
}

std::string report_line(const qdt::ParadoxReport& r) {
  std::string line = r.proposition + ": " + qdt::to_string(r.verdict) + " (margin " +
                     fmt(r.margin) + ")";
  if (r.witness >= 0) line += " witness " + std::to_string(r.witness);
  for (const auto& [k, v] : r.details) line += "  " + k + "=" + fmt(v);
  line += "\n";
  return line;
}

int cmd_evaluate(const Options& opt) {
  const qdt::Scenario s = load(opt);
  const auto [psi, lattice] = qdt::scenario_states(s);
  const qdt::LatticeReport report = qdt::lattice_report(lattice, psi, opt.tol_aggregate);
  const qdt::ProspectOrdering ordering = qdt::order_prospects(report.reports, opt.tol_identity);

  nlohmann::json j;
  j["kind"] = "evaluate";
  j["name"] = s.name;
  j["provenance"] = provenance_json(&s, opt);
  j["reports"] = nlohmann::json::array();
  for (const auto& r : report.reports)
    j["reports"].push_back({{"label", r.label},
                            {"probability", r.probability},
                            {"utility_factor", r.utility_factor},
                            {"attraction", r.attraction}});
  j["probability_sum"] = report.probability_sum;
  j["alternation_sum"] = report.alternation_sum;
  j["joint_sum"] = report.joint_sum;
  j["normalized"] = report.normalized;
  j["ranking"] = ordering.ranking;
  j["optimal"] = ordering.optimal;

  std::string table;
  table += "scenario " + (s.name.empty() ? std::string("(unnamed)") : s.name) + "\n";
  table += "prospect      probability              utility_factor           attraction\n";
  for (const auto& r : report.reports) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-12s  %-23s  %-23s  %s\n", r.label.c_str(),
                  fmt(r.probability).c_str(), fmt(r.utility_factor).c_str(),
                  fmt(r.attraction).c_str());
    table += line;
  }
  table += "sum p = " + fmt(report.probability_sum) + "  sum q = " + fmt(report.alternation_sum) +
           "  normalized = " + (report.normalized ? "yes" : "no") + "\n";
  std::string ranking = "ranking: ";
  for (std::size_t i = 0; i < ordering.ranking.size(); ++i) {
    if (i) {
      const bool tie =
          ordering.indifferent(ordering.ranking[i - 1], ordering.ranking[i], report.reports);
      ranking += tie ? " = " : " > ";
    }
    ranking += report.reports[ordering.ranking[i]].label;
  }
  table += ranking + "\n";
  std::string optimal = "optimal:";
  for (std::size_t i : ordering.optimal) optimal += " " + report.reports[i].label;
  table += optimal + "\n";
  table += provenance_line(&s, opt);
  emit(j, opt, table);
  return 0;
}

int cmd_check(const Options& opt) {
  const qdt::Scenario s = load(opt);
  std::vector<qdt::CheckSpec> specs = s.checks;
  if (!opt.prop_filter.empty()) {
    std::vector<qdt::CheckSpec> filtered;
    for (std::string id : opt.prop_filter) {
      if (!id.empty() && id.find_first_not_of("0123456789") == std::string::npos)
        id = "prop" + id;
      bool matched = false;
      for (const auto& spec : specs)
        if (spec.proposition == id) {
          filtered.push_back(spec);
          matched = true;
        }
      if (!matched) filtered.push_back(qdt::CheckSpec{id, nlohmann::json::object()});
    }
    specs = std::move(filtered);
  }
  if (specs.empty())
    throw qdt::MissingScenarioField("scenario lists no checks; name one with --prop");

  nlohmann::json j;
  j["kind"] = "check";
  j["name"] = s.name;
  j["provenance"] = provenance_json(&s, opt);
  j["paradoxes"] = nlohmann::json::array();
  std::string table;
  for (const auto& spec : specs) {
    const qdt::ParadoxReport r = qdt::run_check(s, spec);
    j["paradoxes"].push_back(report_json(r));
    table += report_line(r);
  }
  table += provenance_line(&s, opt);
  emit(j, opt, table);
  return 0;
}

int cmd_calibrate(const Options& opt) {
  const qdt::Scenario s = load(opt);
  if (!s.target)
    throw qdt::MissingScenarioField("calibration needs a scenario with 'targets'");
  const auto [psi, lattice] = qdt::calibrate_lattice(*s.target, s.frame);

  // Emitted in scenario form, so the result is itself a loadable scenario.
  nlohmann::json j;
  j["kind"] = "calibrate";
  j["name"] = s.name;
  j["frame"] = s.raw.at("frame");
  j["provenance"] = provenance_json(&s, opt);
  nlohmann::json strategic = nlohmann::json::array();
  for (std::size_t flat = 0; flat < psi.coefficients().size(); ++flat) {
    const qdt::Cx c = psi.coefficient(flat);
    strategic.push_back({{"index", flat}, {"re", c.real()}, {"im", c.imag()}});
  }
  nlohmann::json prospects = nlohmann::json::array();

  std::string table;
  table += "prospect      q_target                 q_achieved               residual\n";
  double max_residual = 0.0;
  nlohmann::json achieved = nlohmann::json::array();
  for (std::size_t n = 0; n < lattice.size(); ++n) {
    const auto& prospect = lattice.at(n);
    const qdt::ProspectReport r = qdt::decompose(prospect, psi);
    const double residual = std::abs(r.attraction - s.target->q[n]);
    max_residual = std::max(max_residual, residual);
    nlohmann::json entry;
    entry["label"] = prospect.label();
    entry["support"] = nlohmann::json::array();
    for (std::size_t flat : prospect.support()) {
      const qdt::Cx c = prospect.coefficient(flat);
      entry["support"].push_back({{"index", flat}, {"re", c.real()}, {"im", c.imag()}});
    }
    prospects.push_back(std::move(entry));
    achieved.push_back({{"label", prospect.label()},
                        {"q_target", s.target->q[n]},
                        {"q_achieved", r.attraction},
                        {"residual", residual}});
    char line[160];
    std::snprintf(line, sizeof(line), "%-12s  %-23s  %-23s  %s\n", prospect.label().c_str(),
                  fmt(s.target->q[n]).c_str(), fmt(r.attraction).c_str(), fmt(residual).c_str());
    table += line;
  }
  j["amplitudes"] = {{"strategic", strategic}, {"prospects", prospects}};
  j["achieved"] = achieved;
  j["max_residual"] = max_residual;
  table += "max residual " + fmt(max_residual) + "\n";
  table += provenance_line(&s, opt);
  emit(j, opt, table);
  return 0;
}

int cmd_sample(const Options& opt) {
  qdt::SampleConfig config;
  config.mode_counts = opt.modes;
  config.sample_count = opt.samples;
  config.seed = opt.seed;
  config.workers = opt.workers;
  config.constraints.q_scale = opt.q_scale;
  std::vector<int> props = opt.props;
  if (props.empty()) props = {8, 10, 11, 12, 13, 14, 15, 16};

  const qdt::SampleSummary summary = qdt::run_suite(config, props);

  nlohmann::json j;
  j["kind"] = "sample";
  j["provenance"] = provenance_json(nullptr, opt, opt.seed);
  j["propositions"] = nlohmann::json::array();
  std::string table;
  table +=
      "prop  samples  evaluated  boundary  agreements  effects  agreement_rate  effect_frequency\n";
  for (const auto& stats : summary.propositions) {
    j["propositions"].push_back({{"proposition", stats.proposition},
                                 {"samples", stats.samples},
                                 {"evaluated", stats.evaluated},
                                 {"boundary", stats.boundary},
                                 {"agreements", stats.agreements},
                                 {"effects", stats.effects},
                                 {"agreement_rate", stats.agreement_rate()},
                                 {"effect_frequency", stats.effect_frequency()}});
    char line[200];
    std::snprintf(line, sizeof(line), "%-4d  %-7zu  %-9zu  %-8zu  %-10zu  %-7zu  %-14s  %s\n",
                  stats.proposition, stats.samples, stats.evaluated, stats.boundary,
                  stats.agreements, stats.effects, fmt(stats.agreement_rate()).c_str(),
                  fmt(stats.effect_frequency()).c_str());
    table += line;
  }
  j["max_alternation_residual"] = summary.max_alternation_residual;
  j["max_decomposition_residual"] = summary.max_decomposition_residual;
  j["sample_count"] = summary.sample_count;
  j["seed"] = summary.seed;
  table += "max alternation residual " + fmt(summary.max_alternation_residual) +
           "  max decomposition residual " + fmt(summary.max_decomposition_residual) + "\n";
  table += "seed " + std::to_string(summary.seed) + "  samples " +
           std::to_string(summary.sample_count) + "\n";
  emit(j, opt, table);
  return 0;
}

int cmd_feasible_range(const Options& opt) {
  const qdt::Scenario s = load(opt);
  if (!s.target)
    throw qdt::MissingScenarioField("feasible ranges need a scenario with 'targets'");

  nlohmann::json j;
  j["kind"] = "feasible-range";
  j["name"] = s.name;
  j["provenance"] = provenance_json(&s, opt);
  j["ranges"] = nlohmann::json::array();
  std::string table;
  table += "row   q_target                 q_min                    q_max\n";
  for (std::size_t n = 0; n < s.target->partials.size(); ++n) {
    const qdt::QRange range = qdt::feasible_q_range(s.target->partials[n]);
    j["ranges"].push_back({{"min", range.min}, {"max", range.max}});
    char line[160];
    std::snprintf(line, sizeof(line), "%-4zu  %-23s  %-23s  %s\n", n + 1,
                  fmt(s.target->q[n]).c_str(), fmt(range.min).c_str(), fmt(range.max).c_str());
    table += line;
  }
  table += provenance_line(&s, opt);
  emit(j, opt, table);
  return 0;
}

int cmd_builtin(const Options& opt, const std::string& name) {
  if (name.empty()) {
    for (const auto& n : qdt::builtin_names()) std::cout << n << "\n";
    return 0;
  }
  const nlohmann::json j = qdt::builtin_scenario(name);
  const std::string text = qdt::canonical_text(j);
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw qdt::ParseError("cannot open output file '" + opt.out_path + "'");
    out << text;
  } else {
    std::cout << text;
  }
  return 0;
}

void add_source_options(CLI::App* sub, Options& opt) {
  auto* scenario = sub->add_option("--scenario", opt.scenario_path, "scenario JSON file");
  auto* builtin = sub->add_option("--builtin", opt.builtin_name, "builtin scenario name");
  scenario->excludes(builtin);
  builtin->excludes(scenario);
}

void add_output_options(CLI::App* sub, Options& opt) {
  sub->add_option("--out", opt.out_path, "write the JSON result to this file");
  sub->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "raw"}))
      ->capture_default_str();
}

void add_tolerance_options(CLI::App* sub, Options& opt) {
  sub->add_option("--tol-identity", opt.tol_identity,
                  "per-quantity tolerance (ordering ties)")
      ->capture_default_str();
  sub->add_option("--tol-aggregate", opt.tol_aggregate,
                  "tolerance on normalization sums")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum decision engine"};
  app.require_subcommand(1);
  Options opt;
  std::string builtin_positional;

  auto* evaluate = app.add_subcommand("evaluate", "prospect probabilities and ordering");
  add_source_options(evaluate, opt);
  add_output_options(evaluate, opt);
  add_tolerance_options(evaluate, opt);

  auto* check = app.add_subcommand("check", "run the scenario's paradox checks");
  add_source_options(check, opt);
  add_output_options(check, opt);
  add_tolerance_options(check, opt);
  check->add_option("--prop", opt.prop_filter, "run only these checks (names or numbers)")
      ->delimiter(',');

  auto* calibrate = app.add_subcommand("calibrate", "realize the scenario's attraction targets");
  add_source_options(calibrate, opt);
  add_output_options(calibrate, opt);
  add_tolerance_options(calibrate, opt);

  auto* sample = app.add_subcommand("sample", "dual-evaluation sampling suite");
  add_output_options(sample, opt);
  sample->add_option("--prop", opt.props, "propositions to sample (default: 8 10-16)")
      ->delimiter(',');
  sample->add_option("--samples", opt.samples, "draws per proposition")->capture_default_str();
  sample->add_option("--seed", opt.seed, "seed for the deterministic draw streams")
      ->capture_default_str();
  sample->add_option("--modes", opt.modes, "factor mode counts (first factor = prospects)")
      ->delimiter(',');
  sample->add_option("--q-scale", opt.q_scale, "scale drawn attraction targets by this factor")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sample->add_option("--workers", opt.workers)->group("");  // results never depend on it

  auto* builtin = app.add_subcommand("builtin", "print a builtin scenario (no name: list them)");
  builtin->add_option("name", builtin_positional, "builtin scenario name");
  builtin->add_option("--out", opt.out_path, "write the scenario to this file");

  auto* feasible = app.add_subcommand("feasible-range", "attraction ranges reachable per row");
  add_source_options(feasible, opt);
  add_output_options(feasible, opt);
  add_tolerance_options(feasible, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }

  try {
    if (app.got_subcommand(evaluate)) return cmd_evaluate(opt);
    if (app.got_subcommand(check)) return cmd_check(opt);
    if (app.got_subcommand(calibrate)) return cmd_calibrate(opt);
    if (app.got_subcommand(sample)) return cmd_sample(opt);
    if (app.got_subcommand(builtin)) return cmd_builtin(opt, builtin_positional);
    if (app.got_subcommand(feasible)) return cmd_feasible_range(opt);
  } catch (const qdt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qdt::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qdt::TargetInfeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qdt::InfeasibleTarget& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qdt::NoBracket& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qdt::AllZeroRow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qdt::OverlappingSupports& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qdt::JointNormalizationViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qdt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
