#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qdt/calibration.hpp"
#include "qdt/mindspace.hpp"
#include "qdt/probability.hpp"
#include "qdt/rng.hpp"

namespace qdt {

struct SampleConstraints {
  // Rebalance phases through calibration so the attraction terms sum to 0.
  bool enforce_alternation = true;
  // Make the first prospect dominate the second outcome-by-outcome (binary).
  bool enforce_majorization = false;
  // Give both prospects identical conditional rows (binary).
  bool enforce_equal_conditionals = false;
  // Scale factor in [0, 1] applied to the drawn attraction targets; 0 is the
  // classical limit. Scaling never changes the underlying draw stream, so
  // effect frequencies are pointwise monotone in it.
  double q_scale = 1.0;
};

struct SampleConfig {
  // Factor mode counts; the first factor indexes the prospects.
  std::vector<std::size_t> mode_counts = {2, 2};
  std::size_t sample_count = 1;
  std::uint64_t seed = 0;
  SampleConstraints constraints;
  unsigned workers = 0;  // 0 = hardware concurrency; results never depend on it
};

struct PropositionStats {
  int proposition = 0;
  std::size_t samples = 0;    // indices drawn
  std::size_t evaluated = 0;  // non-boundary, constraint-satisfying samples
  std::size_t boundary = 0;   // skipped: some governing margin inside the band
  std::size_t agreements = 0; // inequality route and direct route concur
  std::size_t effects = 0;    // the effect occurred (among evaluated)

  double agreement_rate() const {
    return evaluated ? static_cast<double>(agreements) / static_cast<double>(evaluated) : 0.0;
  }
  double effect_frequency() const {
    return evaluated ? static_cast<double>(effects) / static_cast<double>(evaluated) : 0.0;
  }

  friend bool operator==(const PropositionStats&, const PropositionStats&) = default;
};

struct SampleSummary {
  std::vector<PropositionStats> propositions;
  double max_alternation_residual = 0.0;    // max |sum_n q_n| over drawn states
  double max_decomposition_residual = 0.0;  // max |p - sum partials - q_cross| over prospects
  std::uint64_t seed = 0;
  std::size_t sample_count = 0;

  friend bool operator==(const SampleSummary&, const SampleSummary&) = default;
};

namespace detail {

struct Draw {
  std::vector<std::vector<double>> joints;  // per prospect over its slice
  std::vector<double> q;                    // attraction per prospect
  std::vector<double> p;                    // probability per prospect
  double alternation_residual = 0.0;
  double decomposition_residual = 0.0;
  std::optional<StrategicState> psi;
  std::optional<ProspectLattice> lattice;
};

inline void check_constraints(const SampleConfig& config) {
  const auto& c = config.constraints;
  if (config.mode_counts.empty())
    throw ConstraintInfeasible("sample frame needs at least one factor");
  if (c.enforce_equal_conditionals && c.enforce_majorization)
    throw ConstraintInfeasible(
        "equal conditional rows cannot strictly dominate each other; drop one constraint");
  if ((c.enforce_equal_conditionals || c.enforce_majorization) && config.mode_counts[0] != 2)
    throw ConstraintInfeasible("row constraints are defined for two prospects");
  if (c.q_scale < 0.0 || c.q_scale > 1.0)
    throw ConstraintInfeasible("q_scale must lie in [0, 1]");
}

// Partial-probability matrix from an isotropic unit vector, with the row
// constraints applied. Returns false if this draw should be rejected.
inline bool draw_partials(Rng& rng, std::size_t rows, std::size_t slice,
                          const SampleConstraints& constraints,
                          std::vector<std::vector<double>>& partials) {
  const auto z = rng.unit_complex_vector(rows * slice);
  partials.assign(rows, std::vector<double>(slice, 0.0));
  for (std::size_t n = 0; n < rows; ++n)
    for (std::size_t k = 0; k < slice; ++k) partials[n][k] = std::norm(z[n * slice + k]);

  if (constraints.enforce_equal_conditionals) {
    double total = 0.0;
    for (std::size_t k = 0; k < slice; ++k) total += 2.0 * partials[0][k];
    if (total <= 0.0) return false;
    for (std::size_t k = 0; k < slice; ++k) {
      partials[0][k] /= total;
      partials[1][k] = partials[0][k];
    }
  }
  if (constraints.enforce_majorization) {
    bool first_dominates = true, second_dominates = true;
    for (std::size_t k = 0; k < slice; ++k) {
      if (partials[0][k] <= partials[1][k]) first_dominates = false;
      if (partials[1][k] <= partials[0][k]) second_dominates = false;
    }
    if (second_dominates) std::swap(partials[0], partials[1]);
    else if (!first_dominates) return false;
  }
  return true;
}

// Attraction targets summing to exactly zero, every row inside its feasible
// range. The draw stream never depends on q_scale: targets are drawn and
// accepted at full scale, then multiplied down.
inline bool draw_attractions(Rng& rng, const std::vector<std::vector<double>>& partials,
                             double q_scale, std::vector<double>& q) {
  const std::size_t rows = partials.size();
  constexpr double kShrink = 0.9;  // stay clear of the range edges
  std::vector<QRange> ranges(rows);
  for (std::size_t n = 0; n < rows; ++n) ranges[n] = feasible_q_range(partials[n]);

  q.assign(rows, 0.0);
  if (rows == 1) return true;  // q = 0 is always feasible
  if (rows == 2) {
    const double lo = std::max(ranges[0].min, -ranges[1].max) * kShrink;
    const double hi = std::min(ranges[0].max, -ranges[1].min) * kShrink;
    const double q0 = rng.uniform(lo, hi);
    q[0] = q_scale * q0;
    q[1] = -q[0];
    return true;
  }
  double sum = 0.0;
  for (std::size_t n = 0; n + 1 < rows; ++n) {
    const double u = rng.uniform(-1.0, 1.0);
    q[n] = kShrink * (u >= 0.0 ? u * ranges[n].max : -u * ranges[n].min);
    sum += q[n];
  }
  q[rows - 1] = -sum;
  if (q[rows - 1] < ranges[rows - 1].min * 0.98 || q[rows - 1] > ranges[rows - 1].max * 0.98)
    return false;
  for (double& q_n : q) q_n *= q_scale;
  return true;
}

inline Draw make_draw(const ActionFrame& frame, const SampleConfig& config, Rng& rng,
                      bool rescale_first_cell_to_half) {
  const std::size_t rows = config.mode_counts[0];
  const std::size_t slice = frame.dimension() / rows;

  std::vector<std::vector<double>> partials;
  std::vector<double> q;
  constexpr int kMaxAttempts = 10000;
  int attempt = 0;
  for (;; ++attempt) {
    if (attempt >= kMaxAttempts)
      throw ConstraintInfeasible("sampling constraints rejected every draw");
    if (!draw_partials(rng, rows, slice, config.constraints, partials)) continue;

    if (rescale_first_cell_to_half) {
      // Put the first row's max in the first column, then pin it to 1/2.
      std::size_t j0 = 0;
      for (std::size_t j = 1; j < slice; ++j)
        if (partials[0][j] > partials[0][j0]) j0 = j;
      for (auto& row : partials) std::swap(row[0], row[j0]);
      const double rest = 1.0 - partials[0][0];
      if (rest <= 0.0) continue;
      const double scale = 0.5 / rest;
      partials[0][0] = 0.5;
      for (std::size_t j = 1; j < slice; ++j) partials[0][j] *= scale;
      for (std::size_t j = 0; j < slice; ++j) partials[1][j] *= scale;
    }

    if (!config.constraints.enforce_alternation) {
      // Keep the raw phases: re-draw the vector with the accepted moduli.
      break;
    }
    if (draw_attractions(rng, partials, config.constraints.q_scale, q)) break;
  }

  Draw draw;
  draw.joints = partials;

  if (config.constraints.enforce_alternation) {
    CalibrationTarget target;
    target.partials = partials;
    target.q = q;
    auto [psi, lattice] = calibrate_lattice(target, frame);
    draw.psi.emplace(std::move(psi));
    draw.lattice.emplace(std::move(lattice));
  } else {
    std::vector<std::string> labels;
    std::vector<std::vector<std::pair<std::size_t, Cx>>> amplitudes(rows);
    for (std::size_t n = 0; n < rows; ++n) {
      labels.push_back("pi" + std::to_string(n + 1));
      for (std::size_t k = 0; k < slice; ++k) {
        const double phase = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
        const Cx zv = std::sqrt(partials[n][k]) * Cx{std::cos(phase), std::sin(phase)};
        amplitudes[n].emplace_back(n * slice + k, zv);
      }
    }
    auto [psi, lattice] = lattice_from_combined(frame, labels, amplitudes);
    draw.psi.emplace(std::move(psi));
    draw.lattice.emplace(std::move(lattice));
  }

  const auto& prospects = draw.lattice->prospects();
  draw.q.resize(rows);
  draw.p.resize(rows);
  double q_sum = 0.0;
  for (std::size_t n = 0; n < rows; ++n) {
    const ProspectReport report = decompose(prospects[n], *draw.psi);
    draw.p[n] = report.probability;
    draw.q[n] = report.attraction;
    q_sum += report.attraction;
    for (std::size_t k = 0; k < slice; ++k)
      draw.joints[n][k] = elementary_probability(prospects[n], *draw.psi, n * slice + k);
    const double residual = std::abs(report.probability - report.utility_factor -
                                     interference_double_sum(prospects[n], *draw.psi));
    draw.decomposition_residual = std::max(draw.decomposition_residual, residual);
  }
  draw.alternation_residual = std::abs(q_sum);
  return draw;
}

inline ActionFrame sample_frame(const SampleConfig& config) {
  std::vector<std::pair<std::string, std::size_t>> factors;
  factors.emplace_back("A", config.mode_counts[0]);
  for (std::size_t i = 1; i < config.mode_counts.size(); ++i)
    factors.emplace_back("X" + (config.mode_counts.size() > 2 ? std::to_string(i) : ""),
                         config.mode_counts[i]);
  return build_frame(factors);
}

struct Outcome {
  bool skipped = true;
  bool agree = false;
  bool effect = false;
};

inline double row_sum(const std::vector<double>& row) {
  double s = 0.0;
  for (double v : row) s += v;
  return s;
}

// Dual evaluation of one proposition on one draw: the attraction-inequality
// route against the direct probability comparison.
inline Outcome evaluate_proposition(int prop, Draw draw) {
  Outcome out;
  const auto in_band = [](double m) { return std::abs(m) <= kBoundaryBand; };
  const std::size_t rows = draw.joints.size();

  switch (prop) {
    case 8: {  // inversion: q gap vs partial-sum gap, first row on top
      if (row_sum(draw.joints[0]) < row_sum(draw.joints[1])) {
        std::swap(draw.joints[0], draw.joints[1]);
        std::swap(draw.q[0], draw.q[1]);
        std::swap(draw.p[0], draw.p[1]);
      }
      const double cond = (draw.q[1] - draw.q[0]) - (row_sum(draw.joints[0]) - row_sum(draw.joints[1]));
      const double direct = draw.p[1] - draw.p[0];
      if (in_band(cond) || in_band(direct)) return out;
      out.skipped = false;
      out.agree = (cond > 0.0) == (direct > 0.0);
      out.effect = direct > 0.0;
      return out;
    }
    case 10: {  // certainty: first prospect carries the lower attraction
      if (draw.q[0] > draw.q[1]) {
        std::swap(draw.joints[0], draw.joints[1]);
        std::swap(draw.q[0], draw.q[1]);
        std::swap(draw.p[0], draw.p[1]);
      }
      const double gap = draw.q[1] - draw.q[0];
      if (gap <= kBoundaryBand) return out;  // no uncertainty contrast to test
      const double cond = (row_sum(draw.joints[0]) - row_sum(draw.joints[1])) - gap;
      const double direct = draw.p[0] - draw.p[1];
      if (in_band(cond) || in_band(direct)) return out;
      out.skipped = false;
      out.agree = (cond > 0.0) == (direct > 0.0);
      out.effect = direct > 0.0;  // chosen against the attraction ordering
      return out;
    }
    case 11: {  // disjunction: dominated prospect wins iff q2 > gap/2
      const double cond = draw.q[1] - 0.5 * (row_sum(draw.joints[0]) - row_sum(draw.joints[1]));
      const double direct = draw.p[1] - draw.p[0];
      if (in_band(cond) || in_band(direct)) return out;
      out.skipped = false;
      out.agree = (cond > 0.0) == (direct > 0.0);
      out.effect = direct > 0.0;
      return out;
    }
    case 12: {  // conjunction fallacy, rowwise
      bool effect = false, agree = true;
      for (std::size_t n = 0; n < rows; ++n) {
        std::size_t j0 = 0;
        for (std::size_t j = 1; j < draw.joints[n].size(); ++j)
          if (draw.joints[n][j] > draw.joints[n][j0]) j0 = j;
        const double rest = row_sum(draw.joints[n]) - draw.joints[n][j0];
        const double cond = -rest - draw.q[n];
        const double direct = draw.joints[n][j0] - draw.p[n];
        if (in_band(cond) || in_band(direct)) return out;
        agree = agree && ((cond > 0.0) == (direct > 0.0));
        effect = effect || direct > 0.0;
      }
      out.skipped = false;
      out.agree = agree;
      out.effect = effect;
      return out;
    }
    case 13: {  // isolation: anyone outranking the classical leader
      std::size_t leader = 0;
      for (std::size_t n = 1; n < rows; ++n)
        if (row_sum(draw.joints[n]) > row_sum(draw.joints[leader])) leader = n;
      bool effect = false, agree = true;
      for (std::size_t n = 0; n < rows; ++n) {
        if (n == leader) continue;
        const double cond = (draw.q[n] + row_sum(draw.joints[n]) - row_sum(draw.joints[leader])) -
                            draw.q[leader];
        const double direct = draw.p[n] - draw.p[leader];
        if (in_band(cond) || in_band(direct)) return out;
        agree = agree && ((cond > 0.0) == (direct > 0.0));
        effect = effect || direct > 0.0;
      }
      out.skipped = false;
      out.agree = agree;
      out.effect = effect;
      return out;
    }
    case 14: {  // fallacy forces reversal when the leading cell is below 1/2
      const double a = std::max(draw.joints[0][0], draw.joints[0][1]);
      if (a >= 0.5 - kBoundaryBand) return out;
      const double fallacy = a - draw.p[0];
      if (fallacy <= kBoundaryBand) return out;  // only fallacy samples count
      out.skipped = false;
      out.effect = draw.p[1] - draw.p[0] > 0.0;
      out.agree = out.effect;  // the implication's conclusion
      return out;
    }
    case 15: {  // reversal forces fallacy when the leading cell is above 1/2
      const double a = std::max(draw.joints[0][0], draw.joints[0][1]);
      if (a <= 0.5 + kBoundaryBand) return out;
      const double reversal = draw.p[1] - draw.p[0];
      if (reversal <= kBoundaryBand) return out;
      out.skipped = false;
      out.effect = a - draw.p[0] > 0.0;
      out.agree = out.effect;
      return out;
    }
    case 16: {  // at a leading cell of exactly 1/2, fallacy <=> reversal
      const double fallacy_cond = -draw.joints[0][1] - draw.q[0];
      const double reversal_direct = draw.p[1] - draw.p[0];
      if (in_band(fallacy_cond) || in_band(reversal_direct)) return out;
      out.skipped = false;
      out.agree = (fallacy_cond > 0.0) == (reversal_direct > 0.0);
      out.effect = fallacy_cond > 0.0;
      return out;
    }
    default:
      throw ConstraintInfeasible("proposition " + std::to_string(prop) +
                                 " is not samplable; supported: 8, 10-16");
  }
}

// Per-proposition sampling requirements layered onto the caller's config.
// Rejects unsupported propositions here, before any worker threads exist.
inline SampleConfig config_for(int prop, SampleConfig config) {
  if (prop < 8 || prop == 9 || prop > 16)
    throw ConstraintInfeasible("proposition " + std::to_string(prop) +
                               " is not samplable; supported: 8, 10-16");
  config.constraints.enforce_alternation = true;
  switch (prop) {
    case 11:
      config.constraints.enforce_majorization = true;
      break;
    case 14:
    case 15:
    case 16:
      config.mode_counts = {2, 2};
      break;
    default:
      break;
  }
  if (prop >= 8 && prop != 12 && prop != 13 && config.mode_counts[0] != 2)
    throw ConstraintInfeasible("proposition " + std::to_string(prop) + " needs two prospects");
  if (config.mode_counts.size() < 2 || config.mode_counts[1] < 2)
    throw ConstraintInfeasible("sampling needs at least two outcome modes");
  return config;
}

}  // namespace detail

// One deterministic lattice draw for (config, sample index): an isotropic
// unit vector split over the prospect slices, with phases rebalanced through
// calibration when alternation enforcement is on.
inline std::pair<StrategicState, ProspectLattice> random_lattice_state(const SampleConfig& config,
                                                                       std::uint64_t sample_index = 0) {
  detail::check_constraints(config);
  const ActionFrame frame = detail::sample_frame(config);
  Rng rng(mix_seed(config.seed, 0, sample_index));
  detail::Draw draw = detail::make_draw(frame, config, rng, false);
  return {std::move(*draw.psi), std::move(*draw.lattice)};
}

// Deterministic dual-evaluation suite. Every (proposition, sample index)
// pair owns an independent substream, so the result is byte-identical for a
// given seed no matter how many workers share the index range.
inline SampleSummary run_suite(const SampleConfig& config, const std::vector<int>& propositions) {
  detail::check_constraints(config);
  SampleSummary summary;
  summary.seed = config.seed;
  summary.sample_count = config.sample_count;

  unsigned workers = config.workers ? config.workers : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(config.sample_count, 1)));

  for (int prop : propositions) {
    const SampleConfig prop_config = detail::config_for(prop, config);
    detail::check_constraints(prop_config);
    const ActionFrame frame = detail::sample_frame(prop_config);
    const bool rescale_half = (prop == 16);

    struct Partial {
      PropositionStats stats;
      double max_alt = 0.0;
      double max_dec = 0.0;
    };
    std::vector<Partial> partials(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (config.sample_count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min<std::size_t>(config.sample_count, w * chunk);
      const std::size_t end = std::min<std::size_t>(config.sample_count, begin + chunk);
      pool.emplace_back([&, w, begin, end]() {
        Partial& local = partials[w];
        local.stats.proposition = prop;
        for (std::size_t i = begin; i < end; ++i) {
          Rng rng(mix_seed(prop_config.seed, static_cast<std::uint64_t>(prop), i));
          const detail::Draw draw = detail::make_draw(frame, prop_config, rng, rescale_half);
          local.max_alt = std::max(local.max_alt, draw.alternation_residual);
          local.max_dec = std::max(local.max_dec, draw.decomposition_residual);
          local.stats.samples += 1;
          const detail::Outcome outcome = detail::evaluate_proposition(prop, draw);
          if (outcome.skipped) {
            local.stats.boundary += 1;
            continue;
          }
          local.stats.evaluated += 1;
          local.stats.agreements += outcome.agree ? 1 : 0;
          local.stats.effects += outcome.effect ? 1 : 0;
        }
      });
    }
    for (auto& t : pool) t.join();

    PropositionStats merged;
    merged.proposition = prop;
    for (const auto& part : partials) {
      merged.samples += part.stats.samples;
      merged.evaluated += part.stats.evaluated;
      merged.boundary += part.stats.boundary;
      merged.agreements += part.stats.agreements;
      merged.effects += part.stats.effects;
      summary.max_alternation_residual = std::max(summary.max_alternation_residual, part.max_alt);
      summary.max_decomposition_residual =
          std::max(summary.max_decomposition_residual, part.max_dec);
    }
    summary.propositions.push_back(merged);
  }
  return summary;
}

}  // namespace qdt
