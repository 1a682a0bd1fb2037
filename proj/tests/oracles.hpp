// Reference implementations used as oracles by the test suites. Everything
// here is written the long way, directly from the definitions, on purpose:
// no calls into the library's own decomposition or calibration code paths,
// so an error there cannot cancel against itself in a test.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qdt/mindspace.hpp"

namespace oracle {

// Attraction term from the raw double sum over basic states:
//   q = 2 sum_{a<b} Re(z_a conj(z_b)),  z_i = conj(b_i) c_i.
// Complex products are expanded into real arithmetic by hand and the sum
// runs over the full basis (entries outside the support contribute zero),
// so this shares nothing with the support bookkeeping under test.
inline double attraction_double_sum(const qdt::ProspectState& prospect,
                                    const qdt::StrategicState& psi) {
  const auto& b = prospect.coefficients();
  const auto& c = psi.coefficients();
  const std::size_t dim = b.size();
  std::vector<double> zr(dim), zi(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double br = b[i].real(), bi = b[i].imag();
    const double cr = c[i].real(), ci = c[i].imag();
    // conj(b) * c = (br - i bi)(cr + i ci)
    zr[i] = br * cr + bi * ci;
    zi[i] = br * ci - bi * cr;
  }
  double q = 0.0;
  for (std::size_t a = 0; a + 1 < dim; ++a)
    for (std::size_t b2 = a + 1; b2 < dim; ++b2)
      q += 2.0 * (zr[a] * zr[b2] + zi[a] * zi[b2]);
  return q;
}

// |<pi_n|psi>|^2 computed as an explicit inner product.
inline double prospect_probability(const qdt::ProspectState& prospect,
                                   const qdt::StrategicState& psi) {
  const auto& b = prospect.coefficients();
  const auto& c = psi.coefficients();
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double br = b[i].real(), bi = b[i].imag();
    const double cr = c[i].real(), ci = c[i].imag();
    re += br * cr + bi * ci;
    im += br * ci - bi * cr;
  }
  return re * re + im * im;
}

// Sum of |conj(b_i) c_i|^2 over the whole basis (zero terms are harmless).
inline double utility_factor(const qdt::ProspectState& prospect,
                             const qdt::StrategicState& psi) {
  const auto& b = prospect.coefficients();
  const auto& c = psi.coefficients();
  double s = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) s += std::norm(b[i]) * std::norm(c[i]);
  return s;
}

// Classical Bayes posterior p(A|B) = p(A and B) / p(B), with p(B) expanded
// as the total probability sum.
inline double classical_posterior(const std::vector<double>& conditionals,
                                  const std::vector<double>& weights, std::size_t j) {
  double total = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) total += conditionals[k] * weights[k];
  return conditionals[j] * weights[j] / total;
}

// Largest attraction value reachable over phases for fixed partials:
// q_max = (sum_i sqrt(p_i))^2 - sum_i p_i, attained with all phases aligned.
inline double q_upper_bound(const std::vector<double>& partials) {
  double root_sum = 0.0, sum = 0.0;
  for (double p : partials) {
    root_sum += std::sqrt(p);
    sum += p;
  }
  return root_sum * root_sum - sum;
}

// Interference for given phases, straight from the cross-term formula.
inline double attraction_from_phases(const std::vector<double>& partials,
                                     const std::vector<double>& phases) {
  double q = 0.0;
  for (std::size_t a = 0; a + 1 < partials.size(); ++a)
    for (std::size_t b = a + 1; b < partials.size(); ++b)
      q += 2.0 * std::sqrt(partials[a] * partials[b]) * std::cos(phases[a] - phases[b]);
  return q;
}

// Expected utility as a plain weighted sum.
inline double expected_utility(const std::vector<double>& outcome_probabilities,
                               const std::vector<double>& utilities) {
  double s = 0.0;
  for (std::size_t j = 0; j < utilities.size(); ++j)
    s += outcome_probabilities[j] * utilities[j];
  return s;
}

}  // namespace oracle
