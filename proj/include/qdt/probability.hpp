#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdt/mindspace.hpp"

namespace qdt {

// p(prospect) split into its classical utility factor (sum of elementary
// probabilities) and the attraction term q carrying the interference.
struct ProspectReport {
  std::string label;
  double probability = 0.0;
  double utility_factor = 0.0;
  double attraction = 0.0;

  friend bool operator==(const ProspectReport&, const ProspectReport&) = default;
};

// |conj(b_alpha) c_alpha|^2 for one basic state.
inline double elementary_probability(const ProspectState& prospect, const StrategicState& psi,
                                     std::size_t flat) {
  return std::norm(combined_amplitude(prospect, psi, flat));
}

inline double elementary_probability(const ProspectState& prospect, const StrategicState& psi,
                                     const BasicStateIndex& alpha) {
  return std::norm(combined_amplitude(prospect, psi, alpha));
}

// p = |<prospect|psi>|^2
inline double prospect_probability(const ProspectState& prospect, const StrategicState& psi) {
  return std::norm(prospect_overlap(prospect, psi));
}

// Classical part: the sum of elementary probabilities over the support.
inline double utility_factor(const ProspectState& prospect, const StrategicState& psi) {
  detail::require_same_frame(prospect.frame(), psi.frame());
  double sum = 0.0;
  for (std::size_t i : prospect.support())
    sum += std::norm(std::conj(prospect.coefficient(i)) * psi.coefficient(i));
  return sum;
}

// Attraction term, computed as the difference p - sum of partials. O(M) and
// exactly consistent with the decomposition identity by construction.
inline double interference_term(const ProspectState& prospect, const StrategicState& psi) {
  return prospect_probability(prospect, psi) - utility_factor(prospect, psi);
}

// Attraction term via the explicit cross-term sum over ordered pairs of
// support states. O(M^2); the independent second route used for residual
// checks and oracles.
inline double interference_double_sum(const ProspectState& prospect, const StrategicState& psi) {
  detail::require_same_frame(prospect.frame(), psi.frame());
  const auto& support = prospect.support();
  std::vector<Cx> z(support.size());
  for (std::size_t k = 0; k < support.size(); ++k)
    z[k] = std::conj(prospect.coefficient(support[k])) * psi.coefficient(support[k]);
  double q = 0.0;
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = a + 1; b < z.size(); ++b)
      q += 2.0 * (z[a].real() * z[b].real() + z[a].imag() * z[b].imag());  // 2 Re(z_a conj(z_b))
  return q;
}

inline ProspectReport decompose(const ProspectState& prospect, const StrategicState& psi) {
  ProspectReport r;
  r.label = prospect.label();
  r.probability = prospect_probability(prospect, psi);
  r.utility_factor = utility_factor(prospect, psi);
  r.attraction = r.probability - r.utility_factor;
  return r;
}

// Whole-lattice evaluation. The joint normalization (all partials summing to
// 1) is a hard requirement; the prospect-probability normalization and the
// vanishing of the attraction sum are equivalent under it and are reported,
// not enforced.
struct LatticeReport {
  std::vector<ProspectReport> reports;
  double probability_sum = 0.0;
  double alternation_sum = 0.0;  // sum of attractions
  double joint_sum = 0.0;        // sum of all elementary probabilities
  bool normalized = false;
};

inline LatticeReport lattice_report(const ProspectLattice& lattice, const StrategicState& psi,
                                    double aggregate_tol = kAggregateTol) {
  LatticeReport out;
  out.reports.reserve(lattice.size());
  for (const auto& prospect : lattice.prospects()) {
    out.reports.push_back(decompose(prospect, psi));
    out.probability_sum += out.reports.back().probability;
    out.alternation_sum += out.reports.back().attraction;
    out.joint_sum += out.reports.back().utility_factor;
  }
  if (std::abs(out.joint_sum - 1.0) > aggregate_tol)
    throw JointNormalizationViolated("elementary probabilities sum to " +
                                     std::to_string(out.joint_sum) + "; must sum to 1");
  out.normalized = std::abs(out.probability_sum - 1.0) <= aggregate_tol &&
                   std::abs(out.alternation_sum) <= aggregate_tol;
  return out;
}

// Total preorder of prospects by probability, ties resolved to tolerance and
// reported (never broken silently).
struct ProspectOrdering {
  std::vector<std::size_t> ranking;  // indices, descending probability, stable
  std::vector<std::size_t> optimal;  // every index within tolerance of the max
  double tolerance = kIdentityTol;

  bool indifferent(std::size_t i, std::size_t j, const std::vector<ProspectReport>& reports) const {
    return std::abs(reports[i].probability - reports[j].probability) <= tolerance;
  }
};

inline ProspectOrdering order_prospects(const std::vector<ProspectReport>& reports,
                                        double tol = kIdentityTol) {
  ProspectOrdering out;
  out.tolerance = tol;
  out.ranking.resize(reports.size());
  std::iota(out.ranking.begin(), out.ranking.end(), std::size_t{0});
  std::stable_sort(out.ranking.begin(), out.ranking.end(), [&](std::size_t a, std::size_t b) {
    return reports[a].probability > reports[b].probability + tol;
  });
  if (!reports.empty()) {
    const double best = reports[out.ranking.front()].probability;
    for (std::size_t i : out.ranking)
      if (reports[i].probability >= best - tol) out.optimal.push_back(i);
    std::sort(out.optimal.begin(), out.optimal.end());
  }
  return out;
}

// Union prospect: coefficients add (the two should not share support if they
// represent exclusive alternatives, but addition itself is unconditional).
inline ProspectState add_prospects(const ProspectState& a, const ProspectState& b) {
  detail::require_same_frame(a.frame(), b.frame());
  std::vector<Cx> coeffs = a.coefficients();
  const auto& bc = b.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += bc[i];
  return ProspectState(a.label() + "+" + b.label(), a.frame(), std::move(coeffs));
}

// Interference of a union prospect against its parts:
// p(a+b) - p(a) - p(b) = 2 Re(<a|psi> conj(<b|psi>)).
inline double compound_interference(const ProspectState& a, const ProspectState& b,
                                    const StrategicState& psi) {
  const Cx u = prospect_overlap(a, psi);
  const Cx v = prospect_overlap(b, psi);
  return 2.0 * (u.real() * v.real() + u.imag() * v.imag());
}

// Classical conditional machinery. Weights are the outcome probabilities the
// joints are conditioned on; both live in [0,1] and the weights sum to 1.
struct ConditionalTable {
  std::vector<double> weights;       // p(X_j)
  std::vector<double> conditionals;  // p(A|X_j)

  ConditionalTable(std::vector<double> w, std::vector<double> c)
      : weights(std::move(w)), conditionals(std::move(c)) {
    if (weights.size() != conditionals.size())
      throw LengthMismatch("weights and conditionals differ in length");
    if (weights.empty()) throw LengthMismatch("conditional table needs at least one outcome");
    double sum = 0.0;
    for (double w_j : weights) {
      if (w_j < 0.0 || w_j > 1.0)
        throw ConditionalNotNormalized("outcome weight " + std::to_string(w_j) +
                                       " outside [0, 1]");
      sum += w_j;
    }
    if (std::abs(sum - 1.0) > kIdentityTol)
      throw ConditionalNotNormalized("outcome weights sum to " + std::to_string(sum) +
                                     "; must sum to 1");
    for (double c_j : conditionals)
      if (c_j < 0.0 || c_j > 1.0)
        throw ConditionalNotNormalized("conditional " + std::to_string(c_j) + " outside [0, 1]");
  }

  std::size_t size() const { return weights.size(); }
  double joint(std::size_t j) const { return conditionals.at(j) * weights.at(j); }
  double classical_total() const {
    double s = 0.0;
    for (std::size_t j = 0; j < size(); ++j) s += joint(j);
    return s;
  }
};

// p(A|X_j) = p(A X_j) / p(X_j)
inline double conditional_probability(double joint, double weight) {
  if (weight <= 0.0) throw ZeroConditioningEvent("cannot condition on an outcome of weight 0");
  return joint / weight;
}

// p(X_j|A) = p(X_j A) / p(A X); the composite probability p(A X) includes the
// attraction term and therefore need not equal the classical mixture.
inline double inverse_conditional_probability(double joint, double composite_probability) {
  if (composite_probability <= 0.0)
    throw ZeroConditioningEvent("cannot condition on a composite event of probability 0");
  return joint / composite_probability;
}

// Bayes rule with an interference offset in the denominator:
// p(X_j|A) = p(X_j A) / (sum_k p(A|X_k) p(X_k) + q). Reduces to the classical
// rule at q = 0.
inline double qdt_bayes(std::span<const double> conditionals, std::span<const double> weights,
                        double q_composite, double joint) {
  if (conditionals.size() != weights.size())
    throw LengthMismatch("weights and conditionals differ in length");
  double wsum = 0.0;
  double denom = q_composite;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    wsum += weights[j];
    denom += conditionals[j] * weights[j];
  }
  if (std::abs(wsum - 1.0) > kIdentityTol)
    throw ConditionalNotNormalized("outcome weights sum to " + std::to_string(wsum) +
                                   "; must sum to 1");
  if (denom <= kDenominatorFloor)
    throw DegenerateDenominator("composite probability " + std::to_string(denom) +
                                " too small to condition on");
  return joint / denom;
}

// Order dependence of composite events: p(X A) = p(A X) + q(X A). The two
// orders coincide exactly when the attraction term vanishes.
struct ReverseOrderResult {
  double probability = 0.0;               // p(X A)
  bool order_indifferent = false;         // p(X A) == p(A X) within tolerance
  std::optional<bool> alternation_consistent;  // q(A X) == -q(X A), when both given
};

inline ReverseOrderResult reverse_order_probability(double p_ax,
                                                    std::span<const double> reverse_conditionals,
                                                    double q_xa,
                                                    std::optional<double> q_ax = std::nullopt) {
  double sum = 0.0;
  for (double c : reverse_conditionals) sum += c;
  if (std::abs(sum - 1.0) > kIdentityTol)
    throw ConditionalNotNormalized("reverse conditionals sum to " + std::to_string(sum) +
                                   "; must sum to 1");
  ReverseOrderResult out;
  out.probability = p_ax + q_xa;
  out.order_indifferent = std::abs(q_xa) <= kIdentityTol;
  if (q_ax) out.alternation_consistent = std::abs(*q_ax + q_xa) <= kIdentityTol;
  return out;
}

}  // namespace qdt
