#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdt/mindspace.hpp"
#include "qdt/tolerances.hpp"

namespace qdt {

// Attraction value produced by a row of partial probabilities once each
// support state carries the given phase: |sum_k sqrt(p_k) e^{i phi_k}|^2 - sum_k p_k.
inline double interference_from_phases(std::span<const double> partials,
                                       std::span<const double> phases) {
  if (partials.size() != phases.size())
    throw LengthMismatch("partials and phases differ in length");
  Cx sum{0.0, 0.0};
  double total = 0.0;
  for (std::size_t k = 0; k < partials.size(); ++k) {
    if (partials[k] < 0.0)
      throw InfeasibleTarget("partial probabilities must be nonnegative");
    sum += std::sqrt(partials[k]) * Cx{std::cos(phases[k]), std::sin(phases[k])};
    total += partials[k];
  }
  return std::norm(sum) - total;
}

struct QRange {
  double min = 0.0;
  double max = 0.0;
};

namespace detail {

// Positions of the positive entries of a row.
inline std::vector<std::size_t> positive_support(std::span<const double> partials) {
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < partials.size(); ++k) {
    if (partials[k] < 0.0)
      throw InfeasibleTarget("partial probabilities must be nonnegative");
    if (partials[k] > 0.0) support.push_back(k);
  }
  return support;
}

// One-parameter phase family phi_k = k * theta over the positive entries:
// the attraction it produces, as a function of theta.
inline double family_value(std::span<const double> roots, double theta, double total) {
  Cx sum{0.0, 0.0};
  for (std::size_t k = 0; k < roots.size(); ++k)
    sum += roots[k] * Cx{std::cos(static_cast<double>(k) * theta),
                         std::sin(static_cast<double>(k) * theta)};
  return std::norm(sum) - total;
}

// Golden-section minimization of the family value on [lo, hi].
inline double family_minimize(std::span<const double> roots, double total, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498948482;
  double a = lo, b = hi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = family_value(roots, c, total);
  double fd = family_value(roots, d, total);
  while (b - a > 1.0e-12) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = family_value(roots, c, total);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = family_value(roots, d, total);
    }
  }
  return 0.5 * (a + b);
}

struct FamilyScan {
  double theta_min = 0.0;  // argmin of the family value on [0, pi]
  double q_min = 0.0;
};

inline FamilyScan family_scan(std::span<const double> roots, double total) {
  constexpr std::size_t kGrid = 4096;
  constexpr double pi = 3.14159265358979323846;
  double best_theta = 0.0;
  double best = family_value(roots, 0.0, total);
  for (std::size_t i = 1; i < kGrid; ++i) {
    const double theta = pi * static_cast<double>(i) / static_cast<double>(kGrid - 1);
    const double v = family_value(roots, theta, total);
    if (v < best) {
      best = v;
      best_theta = theta;
    }
  }
  const double step = pi / static_cast<double>(kGrid - 1);
  const double lo = std::max(0.0, best_theta - step);
  const double hi = std::min(pi, best_theta + step);
  FamilyScan out;
  out.theta_min = family_minimize(roots, total, lo, hi);
  out.q_min = family_value(roots, out.theta_min, total);
  if (best < out.q_min) {
    out.q_min = best;
    out.theta_min = best_theta;
  }
  return out;
}

}  // namespace detail

// Attraction values reachable by phase choice for a fixed row of partials.
// The maximum (all phases aligned) is exact; for rows with more than two
// positive entries the minimum is taken over the one-parameter family
// phi_k = k * theta, which is also the family the calibration solver uses.
inline QRange feasible_q_range(std::span<const double> partials) {
  const auto support = detail::positive_support(partials);
  if (support.empty()) throw AllZeroRow("partials row has no positive entry");

  double total = 0.0;
  double root_sum = 0.0;
  std::vector<double> roots;
  roots.reserve(support.size());
  for (std::size_t k : support) {
    total += partials[k];
    roots.push_back(std::sqrt(partials[k]));
    root_sum += roots.back();
  }

  QRange range;
  range.max = root_sum * root_sum - total;
  if (support.size() == 1) {
    range.max = 0.0;
    return range;  // single support pins q to 0
  }
  if (support.size() == 2) {
    range.min = -2.0 * std::sqrt(partials[support[0]] * partials[support[1]]);
    return range;
  }
  range.min = std::min(detail::family_scan(roots, total).q_min, 0.0);
  return range;
}

// Phases realizing the requested attraction for one row. Two positive
// entries admit the closed form delta = arccos(q / (2 sqrt(p1 p2))); longer
// rows bracket q(theta) on a grid over the one-parameter family and bisect.
// The returned vector has one phase per row entry (zero where p = 0).
inline std::vector<double> calibrate_prospect(std::span<const double> partials, double q_target) {
  const auto support = detail::positive_support(partials);
  if (support.empty()) throw AllZeroRow("partials row has no positive entry");

  const QRange range = feasible_q_range(partials);
  if (q_target < range.min - kIdentityTol || q_target > range.max + kIdentityTol)
    throw InfeasibleTarget("attraction target " + std::to_string(q_target) +
                           " outside the feasible range [" + std::to_string(range.min) + ", " +
                           std::to_string(range.max) + "]");

  std::vector<double> phases(partials.size(), 0.0);
  if (support.size() == 1) return phases;  // q is pinned to 0; nothing to rotate

  if (support.size() == 2) {
    const double denom = 2.0 * std::sqrt(partials[support[0]] * partials[support[1]]);
    const double x = std::clamp(q_target / denom, -1.0, 1.0);
    phases[support[1]] = std::acos(x);
    return phases;
  }

  double total = 0.0;
  std::vector<double> roots;
  roots.reserve(support.size());
  for (std::size_t k : support) {
    total += partials[k];
    roots.push_back(std::sqrt(partials[k]));
  }

  // Grid over [0, pi] plus the family minimizer, so every value between
  // q_min and q_max is bracketed by some adjacent pair.
  constexpr std::size_t kGrid = 2048;
  constexpr double pi = 3.14159265358979323846;
  const auto scan = detail::family_scan(roots, total);
  std::vector<double> nodes;
  nodes.reserve(kGrid + 1);
  for (std::size_t i = 0; i < kGrid; ++i)
    nodes.push_back(pi * static_cast<double>(i) / static_cast<double>(kGrid - 1));
  nodes.insert(std::upper_bound(nodes.begin(), nodes.end(), scan.theta_min), scan.theta_min);

  const auto f = [&](double theta) {
    return detail::family_value(roots, theta, total) - q_target;
  };
  double theta_hat = -1.0;
  double fa = f(nodes[0]);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double fb = f(nodes[i]);
    if (fa == 0.0) {
      theta_hat = nodes[i - 1];
      break;
    }
    if ((fa > 0.0) != (fb > 0.0)) {
      double a = nodes[i - 1], b = nodes[i];
      while (b - a > 1.0e-15) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fm > 0.0) == (fa > 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      theta_hat = 0.5 * (a + b);
      break;
    }
    fa = fb;
  }
  if (theta_hat < 0.0) {
    if (std::abs(f(0.0)) <= kCalibrationTol) {
      theta_hat = 0.0;  // target at the aligned maximum
    } else {
      throw NoBracket("no phase bracket for attraction target " + std::to_string(q_target) +
                      "; achieved range [" + std::to_string(scan.q_min) + ", " +
                      std::to_string(range.max) + "]");
    }
  }
  for (std::size_t k = 0; k < support.size(); ++k)
    phases[support[k]] = static_cast<double>(k) * theta_hat;
  return phases;
}

// Full lattice target: per-prospect partial rows with attraction values.
// Supports hold flat basis indices; when left empty the first factor is
// taken to index the prospects and each row occupies its contiguous slice.
struct CalibrationTarget {
  std::vector<std::string> labels;  // optional; defaults to pi1, pi2, ...
  std::vector<std::vector<double>> partials;
  std::vector<double> q;
  std::vector<std::vector<std::size_t>> supports;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> resolve_supports(const CalibrationTarget& target,
                                                              const ActionFrame& frame) {
  const std::size_t rows = target.partials.size();
  if (!target.supports.empty()) {
    if (target.supports.size() != rows)
      throw LengthMismatch("need exactly one support list per partials row");
    std::vector<bool> used(frame.dimension(), false);
    for (std::size_t n = 0; n < rows; ++n) {
      if (target.supports[n].size() != target.partials[n].size())
        throw LengthMismatch("support list and partials row differ in length");
      for (std::size_t flat : target.supports[n]) {
        if (flat >= frame.dimension()) throw FrameMismatch("support index out of range");
        if (used[flat])
          throw OverlappingSupports("basic state " + std::to_string(flat) +
                                    " is claimed by more than one prospect");
        used[flat] = true;
      }
    }
    return target.supports;
  }
  if (frame.mode_count(0) != rows)
    throw FrameMismatch("first factor has " + std::to_string(frame.mode_count(0)) +
                        " modes but the target has " + std::to_string(rows) + " rows");
  const std::size_t slice = frame.dimension() / rows;
  std::vector<std::vector<std::size_t>> supports(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    if (target.partials[n].size() != slice)
      throw LengthMismatch("partials row " + std::to_string(n) + " has " +
                           std::to_string(target.partials[n].size()) + " entries; the frame slice holds " +
                           std::to_string(slice));
    supports[n].resize(slice);
    for (std::size_t k = 0; k < slice; ++k) supports[n][k] = n * slice + k;
  }
  return supports;
}

}  // namespace detail

inline void validate_target(const CalibrationTarget& target, const ActionFrame& frame) {
  const std::size_t rows = target.partials.size();
  if (rows == 0) throw EmptyLattice("calibration target needs at least one prospect row");
  if (target.q.size() != rows)
    throw LengthMismatch("need exactly one attraction value per partials row");
  if (!target.labels.empty() && target.labels.size() != rows)
    throw LengthMismatch("need exactly one label per partials row");
  detail::resolve_supports(target, frame);

  double joint = 0.0;
  for (const auto& row : target.partials)
    for (double p : row) {
      if (!(p >= 0.0) || !std::isfinite(p))
        throw InfeasibleTarget("partial probabilities must be finite and nonnegative");
      joint += p;
    }
  if (std::abs(joint - 1.0) > kIdentityTol)
    throw InfeasibleTarget("joint partial probabilities sum to " + std::to_string(joint) +
                           "; must sum to 1");
  double q_sum = 0.0;
  for (double q_n : target.q) q_sum += q_n;
  if (std::abs(q_sum) > kAggregateTol)
    throw InfeasibleTarget("attraction targets sum to " + std::to_string(q_sum) +
                           "; must sum to 0");
  for (std::size_t n = 0; n < rows; ++n) {
    const QRange range = feasible_q_range(target.partials[n]);
    if (target.q[n] < range.min - kIdentityTol || target.q[n] > range.max + kIdentityTol)
      throw InfeasibleTarget("attraction target " + std::to_string(target.q[n]) + " for row " +
                             std::to_string(n) + " outside its feasible range [" +
                             std::to_string(range.min) + ", " + std::to_string(range.max) + "]");
  }
}

// Realize a target as an explicit state pair: uniform strategic coefficients
// c = 1/sqrt(dim) and prospect amplitudes b = sqrt(dim p) e^{-i phi}, so the
// combined amplitude at each support state is sqrt(p) e^{i phi}.
inline std::pair<StrategicState, ProspectLattice> calibrate_lattice(const CalibrationTarget& target,
                                                                    const ActionFrame& frame) {
  validate_target(target, frame);
  const auto supports = detail::resolve_supports(target, frame);
  const std::size_t rows = target.partials.size();
  const double root_dim = std::sqrt(static_cast<double>(frame.dimension()));

  std::vector<ProspectState> prospects;
  prospects.reserve(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    const auto phases = calibrate_prospect(target.partials[n], target.q[n]);
    std::vector<Cx> coeffs(frame.dimension(), Cx{0.0, 0.0});
    for (std::size_t k = 0; k < supports[n].size(); ++k) {
      const double mag = root_dim * std::sqrt(target.partials[n][k]);
      coeffs[supports[n][k]] = mag * Cx{std::cos(phases[k]), -std::sin(phases[k])};
    }
    const std::string label =
        target.labels.empty() ? "pi" + std::to_string(n + 1) : target.labels[n];
    prospects.emplace_back(label, frame, std::move(coeffs));
  }
  return {StrategicState::uniform(frame), ProspectLattice(frame, std::move(prospects))};
}

}  // namespace qdt
