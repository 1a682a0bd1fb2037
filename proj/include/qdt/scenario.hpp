#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qdt/calibration.hpp"
#include "qdt/mindspace.hpp"
#include "qdt/paradox.hpp"
#include "qdt/probability.hpp"
#include "qdt/tolerances.hpp"
#include "qdt/version.hpp"

namespace qdt {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Canonical serialization: sorted keys, floats printed with %.17g (enough
// digits to round-trip any double), a single trailing newline. Two scenarios
// hash equal iff their parsed values are equal, whatever the file formatting.
// ---------------------------------------------------------------------------

namespace detail {

inline void canonical_number(double v, std::string& out) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

inline void canonical_write(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        canonical_write(it.value(), out);
      }
      out += '}';
      return;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        canonical_write(j[i], out);
      }
      out += ']';
      return;
    }
    case json::value_t::string:
      out += j.dump();
      return;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      return;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      return;
    case json::value_t::number_float:
      canonical_number(j.get<double>(), out);
      return;
    default:
      out += "null";
      return;
  }
}

}  // namespace detail

inline std::string canonical_text(const json& j) {
  std::string out;
  detail::canonical_write(j, out);
  out += '\n';
  return out;
}

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline std::uint64_t scenario_hash(const json& j) { return fnv1a64(canonical_text(j)); }

inline std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Run metadata attached to every emitted result.
struct Provenance {
  std::uint64_t scenario_hash = 0;
  std::string engine_version = kEngineVersion;
  std::optional<std::uint64_t> seed;
  double tol_identity = kIdentityTol;
  double tol_aggregate = kAggregateTol;

  json to_json() const {
    json j;
    j["scenario_hash"] = hash_hex(scenario_hash);
    j["engine_version"] = engine_version;
    if (seed) j["seed"] = *seed;
    j["tol_identity"] = tol_identity;
    j["tol_aggregate"] = tol_aggregate;
    return j;
  }
};

// ---------------------------------------------------------------------------
// Scenario files: an action frame plus at most one state description (either
// a calibration target or explicit amplitudes), optional classical context
// (weights / conditional rows / utilities / outcome distributions), and a
// list of checks to run.
// ---------------------------------------------------------------------------

struct CheckSpec {
  std::string proposition;  // "prop5".."prop16", "combined", or "classical"
  json params = json::object();
};

struct Scenario {
  std::string name;
  ActionFrame frame;
  std::optional<CalibrationTarget> target;
  std::optional<std::pair<StrategicState, ProspectLattice>> states;
  std::vector<double> weights;
  std::vector<std::vector<double>> conditionals;
  std::vector<double> utilities;
  std::vector<std::vector<double>> outcome_probabilities;
  std::vector<CheckSpec> checks;
  json raw;  // the parsed scenario tree, for hashing and echoing
  std::uint64_t hash = 0;
};

namespace detail {

inline const json& require_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

inline double as_number(const json& j, const char* where) {
  if (!j.is_number()) throw SchemaError(std::string(where) + " must be a number");
  return j.get<double>();
}

inline std::vector<double> as_vector(const json& j, const char* where) {
  if (!j.is_array()) throw SchemaError(std::string(where) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_number(v, where));
  return out;
}

inline std::vector<std::vector<double>> as_matrix(const json& j, const char* where) {
  if (!j.is_array()) throw SchemaError(std::string(where) + " must be an array of rows");
  std::vector<std::vector<double>> out;
  out.reserve(j.size());
  for (const auto& row : j) out.push_back(as_vector(row, where));
  return out;
}

inline Cx as_complex(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2)
    throw SchemaError(std::string(where) + " must be a [re, im] pair");
  return Cx{as_number(j[0], where), as_number(j[1], where)};
}

inline ActionFrame parse_frame(const json& j) {
  if (!j.is_object()) throw SchemaError("'frame' must be an object with a 'factors' array");
  const json& factors_json = require_field(j, "factors");
  if (!factors_json.is_array() || factors_json.empty())
    throw SchemaError("'frame.factors' must be a non-empty array");
  std::vector<ActionFrame::Factor> factors;
  for (const auto& f : factors_json) {
    if (!f.is_object()) throw SchemaError("each frame factor must be an object");
    ActionFrame::Factor factor;
    const json& label = require_field(f, "label");
    if (!label.is_string()) throw SchemaError("factor 'label' must be a string");
    factor.label = label.get<std::string>();
    const json& modes = require_field(f, "modes");
    if (modes.is_number_unsigned() || modes.is_number_integer()) {
      const std::int64_t count = modes.get<std::int64_t>();
      if (count <= 0) throw SchemaError("'modes' must be a positive count or a label array");
      for (std::int64_t m = 0; m < count; ++m) factor.modes.push_back(std::to_string(m));
    } else if (modes.is_array()) {
      for (const auto& m : modes) {
        if (!m.is_string()) throw SchemaError("mode labels must be strings");
        factor.modes.push_back(m.get<std::string>());
      }
    } else {
      throw SchemaError("'modes' must be a positive count or a label array");
    }
    factors.push_back(std::move(factor));
  }
  try {
    return ActionFrame(std::move(factors));
  } catch (const Error& e) {
    throw SchemaError(std::string("'frame': ") + e.what());
  }
}

// A basic-state reference: either a flat index or a per-factor mode tuple.
inline std::size_t parse_state_index(const json& v, const ActionFrame& frame, const char* where) {
  if (v.is_number_integer() || v.is_number_unsigned()) {
    const std::int64_t flat = v.get<std::int64_t>();
    if (flat < 0 || static_cast<std::size_t>(flat) >= frame.dimension())
      throw SchemaError(std::string(where) + ": state index out of range");
    return static_cast<std::size_t>(flat);
  }
  if (v.is_array()) {
    BasicStateIndex idx;
    for (const auto& m : v) {
      if (!m.is_number_integer() && !m.is_number_unsigned())
        throw SchemaError(std::string(where) + ": mode indices must be integers");
      const std::int64_t mode = m.get<std::int64_t>();
      if (mode < 0) throw SchemaError(std::string(where) + ": mode indices must be nonnegative");
      idx.modes.push_back(static_cast<std::size_t>(mode));
    }
    try {
      return frame.flat_index(idx);
    } catch (const Error& e) {
      throw SchemaError(std::string(where) + ": " + e.what());
    }
  }
  throw SchemaError(std::string(where) + ": 'index' must be a flat integer or a mode tuple");
}

inline CalibrationTarget parse_target(const json& j) {
  if (!j.is_object()) throw SchemaError("'targets' must be an object");
  CalibrationTarget target;
  target.partials = as_matrix(require_field(j, "partials"), "'targets.partials'");
  target.q = as_vector(require_field(j, "q"), "'targets.q'");
  if (j.contains("labels")) {
    const json& labels = j["labels"];
    if (!labels.is_array()) throw SchemaError("'targets.labels' must be an array of strings");
    for (const auto& l : labels) {
      if (!l.is_string()) throw SchemaError("'targets.labels' must be an array of strings");
      target.labels.push_back(l.get<std::string>());
    }
  }
  if (j.contains("supports")) {
    const json& supports = j["supports"];
    if (!supports.is_array()) throw SchemaError("'targets.supports' must be an array of rows");
    for (const auto& row : supports) {
      if (!row.is_array()) throw SchemaError("'targets.supports' must be an array of rows");
      std::vector<std::size_t> indices;
      for (const auto& v : row) {
        if (!v.is_number_unsigned() && !v.is_number_integer())
          throw SchemaError("'targets.supports' entries must be nonnegative integers");
        const std::int64_t flat = v.get<std::int64_t>();
        if (flat < 0) throw SchemaError("'targets.supports' entries must be nonnegative integers");
        indices.push_back(static_cast<std::size_t>(flat));
      }
      target.supports.push_back(std::move(indices));
    }
  }
  return target;
}

// Sparse complex entries {index, re, im}; unlisted states stay zero.
inline void parse_entries(const json& j, const ActionFrame& frame, const char* where,
                          std::vector<Cx>& coeffs) {
  if (!j.is_array())
    throw SchemaError(std::string(where) + " must be an array of {index, re, im} entries");
  for (const auto& e : j) {
    if (!e.is_object())
      throw SchemaError(std::string(where) + " must be an array of {index, re, im} entries");
    const std::size_t flat = parse_state_index(require_field(e, "index"), frame, where);
    coeffs[flat] = Cx{as_number(require_field(e, "re"), where),
                      as_number(require_field(e, "im"), where)};
  }
}

inline std::pair<StrategicState, ProspectLattice> parse_amplitudes(const json& j,
                                                                   const ActionFrame& frame) {
  if (!j.is_object()) throw SchemaError("'amplitudes' must be an object");
  std::vector<Cx> strategic(frame.dimension(),
                            Cx{1.0 / std::sqrt(static_cast<double>(frame.dimension())), 0.0});
  if (j.contains("strategic")) {
    std::fill(strategic.begin(), strategic.end(), Cx{0.0, 0.0});
    parse_entries(j["strategic"], frame, "'amplitudes.strategic'", strategic);
  }
  const json& prospects = require_field(j, "prospects");
  if (!prospects.is_array() || prospects.empty())
    throw SchemaError("'amplitudes.prospects' must be a non-empty array");
  std::vector<ProspectState> states;
  std::size_t counter = 0;
  for (const auto& p : prospects) {
    ++counter;
    if (!p.is_object()) throw SchemaError("each prospect must be an object");
    std::string label = "pi" + std::to_string(counter);
    if (p.contains("label")) {
      if (!p["label"].is_string()) throw SchemaError("'label' must be a string");
      label = p["label"].get<std::string>();
    }
    std::vector<Cx> coeffs(frame.dimension(), Cx{0.0, 0.0});
    parse_entries(require_field(p, "support"), frame, "'amplitudes.prospects.support'", coeffs);
    states.emplace_back(std::move(label), frame, std::move(coeffs));
  }
  try {
    return {StrategicState(frame, std::move(strategic)), ProspectLattice(frame, std::move(states))};
  } catch (const NotNormalized& e) {
    throw SchemaError(std::string("'amplitudes.strategic': ") + e.what());
  }
}

}  // namespace detail

inline Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("scenario root must be an object");
  Scenario s;
  s.raw = j;
  s.hash = scenario_hash(j);
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError("'name' must be a string");
    s.name = j["name"].get<std::string>();
  }
  s.frame = detail::parse_frame(detail::require_field(j, "frame"));

  if (j.contains("targets") && j.contains("amplitudes"))
    throw SchemaError("give either 'targets' or 'amplitudes', not both");
  if (j.contains("targets")) {
    s.target = detail::parse_target(j["targets"]);
    try {
      validate_target(*s.target, s.frame);
    } catch (const LengthMismatch& e) {  // shape problems are schema problems
      throw SchemaError(std::string("'targets': ") + e.what());
    } catch (const FrameMismatch& e) {
      throw SchemaError(std::string("'targets': ") + e.what());
    } catch (const EmptyLattice& e) {
      throw SchemaError(std::string("'targets': ") + e.what());
    } catch (const Error& e) {
      throw TargetInfeasible(e.what());
    }
  }
  if (j.contains("amplitudes")) s.states = detail::parse_amplitudes(j["amplitudes"], s.frame);

  if (j.contains("weights")) s.weights = detail::as_vector(j["weights"], "'weights'");
  if (j.contains("conditionals"))
    s.conditionals = detail::as_matrix(j["conditionals"], "'conditionals'");
  if (j.contains("utilities")) s.utilities = detail::as_vector(j["utilities"], "'utilities'");
  if (j.contains("outcome_probabilities"))
    s.outcome_probabilities =
        detail::as_matrix(j["outcome_probabilities"], "'outcome_probabilities'");

  if (j.contains("checks")) {
    const json& checks = j["checks"];
    if (!checks.is_array()) throw SchemaError("'checks' must be an array");
    for (const auto& c : checks) {
      if (!c.is_object()) throw SchemaError("each check must be an object");
      CheckSpec spec;
      const json& prop = detail::require_field(c, "proposition");
      if (prop.is_string()) {
        spec.proposition = prop.get<std::string>();
      } else if (prop.is_number_integer() || prop.is_number_unsigned()) {
        spec.proposition = "prop" + std::to_string(prop.get<std::int64_t>());
      } else {
        throw SchemaError("'proposition' must be a name or a number");
      }
      if (c.contains("params")) {
        if (!c["params"].is_object()) throw SchemaError("'params' must be an object");
        spec.params = c["params"];
      }
      s.checks.push_back(std::move(spec));
    }
  }
  return s;
}

inline Scenario scenario_from_text(const std::string& text) {
  try {
    return scenario_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());  // carries the line/column position
  }
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_text(buf.str());
}

// States implied by the scenario: explicit amplitudes win, otherwise the
// calibration target is realized.
inline std::pair<StrategicState, ProspectLattice> scenario_states(const Scenario& s) {
  if (s.states) return *s.states;
  if (s.target) return calibrate_lattice(*s.target, s.frame);
  throw MissingScenarioField("scenario carries no 'targets' or 'amplitudes' to evaluate");
}

// ---------------------------------------------------------------------------
// Check dispatch
// ---------------------------------------------------------------------------

namespace detail {

// Prospect-by-outcome table for a check, in precedence order: table pieces in
// the check params, then the scenario target, then explicit amplitudes, then
// scenario-level conditionals and weights (attractions from params).
inline ProspectTable table_for_check(const Scenario& s, const CheckSpec& spec) {
  const json& params = spec.params;
  if (params.contains("joints")) {
    if (!params.contains("q"))
      throw MissingScenarioField("check params with 'joints' also need 'q'");
    return ProspectTable::from_joints(as_matrix(params["joints"], "'joints'"),
                                      as_vector(params["q"], "'q'"));
  }
  if (params.contains("conditionals")) {
    if (!params.contains("weights") || !params.contains("q"))
      throw MissingScenarioField("check params with 'conditionals' also need 'weights' and 'q'");
    return ProspectTable::from_conditionals(as_matrix(params["conditionals"], "'conditionals'"),
                                            as_vector(params["weights"], "'weights'"),
                                            as_vector(params["q"], "'q'"));
  }
  if (s.target) {
    std::vector<double> q = s.target->q;
    if (params.contains("q")) q = as_vector(params["q"], "'q'");
    return ProspectTable::from_joints(s.target->partials, std::move(q));
  }
  if (s.states) {
    const auto& [psi, lattice] = *s.states;
    const std::size_t rows = lattice.size();
    if (s.frame.mode_count(0) != rows)
      throw MissingScenarioField(
          "derived tables need the first factor to index the prospects");
    const std::size_t slice = s.frame.dimension() / rows;
    std::vector<std::vector<double>> joints(rows, std::vector<double>(slice, 0.0));
    std::vector<double> q(rows, 0.0);
    for (std::size_t n = 0; n < rows; ++n) {
      for (std::size_t k = 0; k < slice; ++k)
        joints[n][k] = elementary_probability(lattice.at(n), psi, n * slice + k);
      q[n] = decompose(lattice.at(n), psi).attraction;
    }
    return ProspectTable::from_joints(std::move(joints), std::move(q));
  }
  if (!s.conditionals.empty() && !s.weights.empty()) {
    if (!params.contains("q"))
      throw MissingScenarioField("scenario-level conditionals need attraction values 'q' "
                                 "in the check params");
    return ProspectTable::from_conditionals(s.conditionals, s.weights,
                                            as_vector(params["q"], "'q'"));
  }
  throw MissingScenarioField("no table data for check '" + spec.proposition + "'");
}

}  // namespace detail

inline ParadoxReport run_check(const Scenario& s, const CheckSpec& spec) {
  const json& params = spec.params;
  const std::string& id = spec.proposition;

  if (id == "classical" || id == "allais-classical") {
    std::vector<std::vector<double>> probs = s.outcome_probabilities;
    if (params.contains("outcome_probabilities"))
      probs = detail::as_matrix(params["outcome_probabilities"], "'outcome_probabilities'");
    std::vector<double> utilities = s.utilities;
    if (params.contains("utilities"))
      utilities = detail::as_vector(params["utilities"], "'utilities'");
    if (probs.empty() || utilities.empty())
      throw MissingScenarioField(
          "the classical contradiction needs 'outcome_probabilities' and 'utilities'");
    const auto [s12, s34] = allais_classical_contradiction(probs, utilities);
    ParadoxReport r;
    r.proposition = "classical";
    r.details["s12"] = s12;
    r.details["s34"] = s34;
    r.margin = std::min(-s12, s34);  // > 0 iff the stated pattern defeats expected utility
    r.verdict = strict_verdict(r.margin);
    return r;
  }
  if (id == "prop5") {
    if (params.contains("joint_gap") || params.contains("q_gap")) {
      const double joint_gap = detail::as_number(detail::require_field(params, "joint_gap"),
                                                 "'joint_gap'");
      const double q_gap = detail::as_number(detail::require_field(params, "q_gap"), "'q_gap'");
      return check_allais_compatibility(joint_gap, q_gap);
    }
    return check_allais_compatibility(detail::table_for_check(s, spec));
  }
  if (id == "prop6") {
    const double q13 = detail::as_number(detail::require_field(params, "q13"), "'q13'");
    const double q24 = detail::as_number(detail::require_field(params, "q24"), "'q24'");
    std::vector<double> p;
    if (params.contains("p")) {
      p = detail::as_vector(params["p"], "'p'");
    } else {
      const ProspectTable table = detail::table_for_check(s, spec);
      for (std::size_t n = 0; n < table.rows(); ++n) p.push_back(table.probability(n));
    }
    return check_independence(p, q13, q24);
  }
  if (id == "prop7") return check_ellsberg(detail::table_for_check(s, spec));
  if (id == "prop8") return check_inversion(detail::table_for_check(s, spec));
  if (id == "prop9") return check_kahneman_tversky(detail::table_for_check(s, spec));
  if (id == "prop10") return check_certainty(detail::table_for_check(s, spec));
  if (id == "prop11") return check_disjunction(detail::table_for_check(s, spec));
  if (id == "prop12") return check_conjunction(detail::table_for_check(s, spec));
  if (id == "prop13") return check_isolation(detail::table_for_check(s, spec));
  if (id == "prop14" || id == "prop15" || id == "prop16" || id == "combined")
    return check_combined(detail::table_for_check(s, spec));
  throw MissingScenarioField("unknown check '" + id + "'");
}

inline std::vector<ParadoxReport> run_checks(const Scenario& s) {
  std::vector<ParadoxReport> out;
  out.reserve(s.checks.size());
  for (const auto& spec : s.checks) out.push_back(run_check(s, spec));
  return out;
}

// ---------------------------------------------------------------------------
// Builtin scenarios
// ---------------------------------------------------------------------------

namespace detail {

inline json frame_json(const std::string& first_label, std::size_t prospects,
                       const std::string& second_label, std::size_t outcomes) {
  const auto mode_labels = [](const char* stem, std::size_t count) {
    json modes = json::array();
    for (std::size_t m = 1; m <= count; ++m) modes.push_back(stem + std::to_string(m));
    return modes;
  };
  json factors = json::array();
  factors.push_back({{"label", first_label}, {"modes", mode_labels("a", prospects)}});
  factors.push_back({{"label", second_label}, {"modes", mode_labels("x", outcomes)}});
  return json{{"factors", factors}};
}

}  // namespace detail

inline json builtin_scenario(const std::string& name) {
  json j;
  if (name == "allais") {
    j["name"] = "allais";
    j["frame"] = detail::frame_json("A", 4, "X", 3);
    j["targets"] = {
        {"labels", {"pi1", "pi2", "pi3", "pi4"}},
        {"partials",
         {{0.0, 0.25, 0.0},
          {0.0025, 0.2225, 0.025},
          {0.225, 0.0, 0.025},
          {0.2225, 0.0275, 0.0}}},
        {"q", {0.0, -0.15, 0.075, 0.075}},
    };
    j["outcome_probabilities"] = {{0.0, 1.0, 0.0},
                                  {0.01, 0.89, 0.10},
                                  {0.90, 0.0, 0.10},
                                  {0.89, 0.11, 0.0}};
    j["utilities"] = {0.0, 1.0, 2.0};
    j["checks"] = json::array(
        {json{{"proposition", "classical"}},
         json{{"proposition", "prop5"},
              {"params", json{{"joint_gap", 0.05}, {"q_gap", 0.2}}}}});
    return j;
  }
  if (name == "ellsberg") {
    j["name"] = "ellsberg";
    j["frame"] = detail::frame_json("A", 2, "X", 2);
    j["targets"] = {
        {"labels", {"pi1", "pi2"}},
        {"partials", {{0.25, 0.25}, {0.25, 0.25}}},
        {"q", {0.1, -0.1}},
    };
    j["weights"] = {0.5, 0.5};
    j["conditionals"] = {{0.5, 0.5}, {0.5, 0.5}};
    j["checks"] = json::array({json{{"proposition", "prop7"}}});
    return j;
  }
  if (name == "kahneman-tversky") {
    j["name"] = "kahneman-tversky";
    j["frame"] = detail::frame_json("A", 4, "X", 3);
    j["targets"] = {
        {"labels", {"pi1", "pi2", "pi3", "pi4"}},
        {"partials",
         {{0.125, 0.0, 0.125}, {0.0, 0.25, 0.0}, {0.125, 0.0, 0.125}, {0.0, 0.25, 0.0}}},
        {"q", {-0.1, 0.0, 0.1, 0.0}},
    };
    j["outcome_probabilities"] = {{0.5, 0.0, 0.5}, {0.0, 1.0, 0.0},
                                  {0.5, 0.0, 0.5}, {0.0, 1.0, 0.0}};
    j["checks"] = json::array({json{{"proposition", "prop9"}}});
    return j;
  }
  if (name == "disjunction-template") {
    j["name"] = "disjunction-template";
    j["frame"] = detail::frame_json("A", 2, "X", 2);
    j["targets"] = {
        {"labels", {"pi1", "pi2"}},
        {"partials", {{0.3, 0.3}, {0.2, 0.2}}},
        {"q", {-0.15, 0.15}},
    };
    j["checks"] = json::array({json{{"proposition", "prop11"}}});
    return j;
  }
  if (name == "conjunction-template") {
    j["name"] = "conjunction-template";
    j["frame"] = detail::frame_json("A", 2, "X", 2);
    j["targets"] = {
        {"labels", {"pi1", "pi2"}},
        {"partials", {{0.4, 0.1}, {0.25, 0.25}}},
        {"q", {-0.2, 0.2}},
    };
    j["checks"] = json::array(
        {json{{"proposition", "prop12"}}, json{{"proposition", "prop14"}}});
    return j;
  }
  throw UnknownBuiltin("no builtin scenario named '" + name +
                       "'; available: allais, ellsberg, kahneman-tversky, "
                       "disjunction-template, conjunction-template");
}

inline std::vector<std::string> builtin_names() {
  return {"allais", "ellsberg", "kahneman-tversky", "disjunction-template",
          "conjunction-template"};
}

}  // namespace qdt
