#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qdt/errors.hpp"
#include "qdt/tolerances.hpp"

namespace qdt {

using Cx = std::complex<double>;

// One basic state of the combined basis: a mode choice per factor.
struct BasicStateIndex {
  std::vector<std::size_t> modes;

  friend bool operator==(const BasicStateIndex&, const BasicStateIndex&) = default;
};

// Tensor-product structure of the decision space: an ordered list of factors,
// each contributing a fixed set of modes. The combined basis is enumerated
// lexicographically (first factor slowest), and its size is the product of
// the per-factor mode counts.
class ActionFrame {
 public:
  struct Factor {
    std::string label;
    std::vector<std::string> modes;

    friend bool operator==(const Factor&, const Factor&) = default;
  };

  ActionFrame() = default;

  explicit ActionFrame(std::vector<Factor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw EmptyFrame("action frame needs at least one factor");
    std::set<std::string> seen;
    dim_ = 1;
    for (const auto& f : factors_) {
      if (f.modes.empty())
        throw ZeroModes("factor '" + f.label + "' needs at least one mode");
      if (!seen.insert(f.label).second)
        throw DuplicateFactorLabel("factor label '" + f.label + "' appears twice");
      dim_ *= f.modes.size();
    }
  }

  std::size_t factor_count() const { return factors_.size(); }
  std::size_t mode_count(std::size_t factor) const { return factors_.at(factor).modes.size(); }
  const Factor& factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t dimension() const { return dim_; }

  std::size_t flat_index(const BasicStateIndex& idx) const {
    if (idx.modes.size() != factors_.size())
      throw FrameMismatch("basic state index has " + std::to_string(idx.modes.size()) +
                          " entries for a frame with " + std::to_string(factors_.size()) +
                          " factors");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (idx.modes[i] >= factors_[i].modes.size())
        throw FrameMismatch("mode " + std::to_string(idx.modes[i]) + " out of range for factor '" +
                            factors_[i].label + "'");
      flat = flat * factors_[i].modes.size() + idx.modes[i];
    }
    return flat;
  }

  BasicStateIndex state_at(std::size_t flat) const {
    if (flat >= dim_) throw FrameMismatch("flat index out of range");
    BasicStateIndex idx;
    idx.modes.resize(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      idx.modes[i] = flat % factors_[i].modes.size();
      flat /= factors_[i].modes.size();
    }
    return idx;
  }

  friend bool operator==(const ActionFrame&, const ActionFrame&) = default;

 private:
  std::vector<Factor> factors_;
  std::size_t dim_ = 0;
};

// Frame from (label, mode count) pairs; mode labels default to "0", "1", ...
inline ActionFrame build_frame(const std::vector<std::pair<std::string, std::size_t>>& factors) {
  std::vector<ActionFrame::Factor> out;
  out.reserve(factors.size());
  for (const auto& [label, count] : factors) {
    ActionFrame::Factor f;
    f.label = label;
    for (std::size_t m = 0; m < count; ++m) f.modes.push_back(std::to_string(m));
    out.push_back(std::move(f));
  }
  return ActionFrame(std::move(out));
}

namespace detail {
inline void require_same_frame(const ActionFrame& a, const ActionFrame& b) {
  if (!(a == b)) throw FrameMismatch("states live over different action frames");
}
}  // namespace detail

// Strategic state: the unit-norm coefficient vector the prospects are
// evaluated against.
class StrategicState {
 public:
  StrategicState(ActionFrame frame, std::vector<Cx> coefficients, bool auto_normalize = false)
      : frame_(std::move(frame)), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() != frame_.dimension())
      throw FrameMismatch("coefficient vector length " + std::to_string(coeffs_.size()) +
                          " does not match frame dimension " +
                          std::to_string(frame_.dimension()));
    double n2 = 0.0;
    for (const auto& c : coeffs_) n2 += std::norm(c);
    if (auto_normalize) {
      if (n2 <= 0.0) throw NotNormalized("cannot normalize the zero vector");
      const double s = 1.0 / std::sqrt(n2);
      for (auto& c : coeffs_) c *= s;
    } else if (std::abs(n2 - 1.0) > kIdentityTol) {
      throw NotNormalized("strategic state norm^2 is " + std::to_string(n2) +
                          "; coefficients must be unit-norm");
    }
  }

  static StrategicState uniform(const ActionFrame& frame) {
    const double c = 1.0 / std::sqrt(static_cast<double>(frame.dimension()));
    return StrategicState(frame, std::vector<Cx>(frame.dimension(), Cx{c, 0.0}));
  }

  const ActionFrame& frame() const { return frame_; }
  const std::vector<Cx>& coefficients() const { return coeffs_; }
  Cx coefficient(std::size_t flat) const { return coeffs_.at(flat); }
  Cx coefficient(const BasicStateIndex& idx) const { return coeffs_[frame_.flat_index(idx)]; }

  double norm_squared() const {
    double n2 = 0.0;
    for (const auto& c : coeffs_) n2 += std::norm(c);
    return n2;
  }

 private:
  ActionFrame frame_;
  std::vector<Cx> coeffs_;
};

// Prospect state: a labelled coefficient vector over the same basis. Neither
// normalized nor orthogonal to anything; its support is the set of basic
// states with nonzero amplitude.
class ProspectState {
 public:
  ProspectState(std::string label, ActionFrame frame, std::vector<Cx> coefficients)
      : label_(std::move(label)), frame_(std::move(frame)), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() != frame_.dimension())
      throw FrameMismatch("prospect '" + label_ + "': coefficient vector length does not match frame dimension");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != Cx{0.0, 0.0}) support_.push_back(i);
  }

  static ProspectState from_entries(std::string label, const ActionFrame& frame,
                                    const std::vector<std::pair<BasicStateIndex, Cx>>& entries) {
    std::vector<Cx> coeffs(frame.dimension(), Cx{0.0, 0.0});
    for (const auto& [idx, amp] : entries) coeffs[frame.flat_index(idx)] = amp;
    return ProspectState(std::move(label), frame, std::move(coeffs));
  }

  const std::string& label() const { return label_; }
  const ActionFrame& frame() const { return frame_; }
  const std::vector<Cx>& coefficients() const { return coeffs_; }
  Cx coefficient(std::size_t flat) const { return coeffs_.at(flat); }
  const std::vector<std::size_t>& support() const { return support_; }

 private:
  std::string label_;
  ActionFrame frame_;
  std::vector<Cx> coeffs_;
  std::vector<std::size_t> support_;
};

// The family of prospects under joint consideration, all over one frame.
class ProspectLattice {
 public:
  ProspectLattice(ActionFrame frame, std::vector<ProspectState> prospects)
      : frame_(std::move(frame)), prospects_(std::move(prospects)) {
    if (prospects_.empty()) throw EmptyLattice("prospect lattice needs at least one prospect");
    for (const auto& p : prospects_) detail::require_same_frame(p.frame(), frame_);
  }

  const ActionFrame& frame() const { return frame_; }
  const std::vector<ProspectState>& prospects() const { return prospects_; }
  std::size_t size() const { return prospects_.size(); }
  const ProspectState& at(std::size_t n) const { return prospects_.at(n); }

 private:
  ActionFrame frame_;
  std::vector<ProspectState> prospects_;
};

// <prospect|strategic>: the amplitude whose squared modulus is the prospect
// probability.
inline Cx prospect_overlap(const ProspectState& prospect, const StrategicState& psi) {
  detail::require_same_frame(prospect.frame(), psi.frame());
  Cx sum{0.0, 0.0};
  for (std::size_t i : prospect.support())
    sum += std::conj(prospect.coefficient(i)) * psi.coefficient(i);
  return sum;
}

// Per-basic-state term of the overlap sum.
inline Cx combined_amplitude(const ProspectState& prospect, const StrategicState& psi,
                             std::size_t flat) {
  detail::require_same_frame(prospect.frame(), psi.frame());
  if (flat >= psi.frame().dimension()) throw FrameMismatch("flat index out of range");
  return std::conj(prospect.coefficient(flat)) * psi.coefficient(flat);
}

inline Cx combined_amplitude(const ProspectState& prospect, const StrategicState& psi,
                             const BasicStateIndex& alpha) {
  return combined_amplitude(prospect, psi, psi.frame().flat_index(alpha));
}

// Convenience factorization: given the combined amplitudes z directly (one
// list per prospect over disjoint supports), pick the uniform strategic state
// c = 1/sqrt(dim) and set b = conj(z) * sqrt(dim) so that conj(b) c = z.
inline std::pair<StrategicState, ProspectLattice> lattice_from_combined(
    const ActionFrame& frame, const std::vector<std::string>& labels,
    const std::vector<std::vector<std::pair<std::size_t, Cx>>>& amplitudes) {
  if (labels.size() != amplitudes.size())
    throw LengthMismatch("need exactly one label per prospect amplitude list");
  const double root_dim = std::sqrt(static_cast<double>(frame.dimension()));
  std::vector<bool> used(frame.dimension(), false);
  std::vector<ProspectState> prospects;
  prospects.reserve(amplitudes.size());
  for (std::size_t n = 0; n < amplitudes.size(); ++n) {
    std::vector<Cx> coeffs(frame.dimension(), Cx{0.0, 0.0});
    for (const auto& [flat, z] : amplitudes[n]) {
      if (flat >= frame.dimension()) throw FrameMismatch("flat index out of range");
      if (used[flat])
        throw OverlappingSupports("basic state " + std::to_string(flat) +
                                  " is claimed by more than one prospect");
      used[flat] = true;
      coeffs[flat] = std::conj(z) * root_dim;
    }
    prospects.emplace_back(labels[n], frame, std::move(coeffs));
  }
  return {StrategicState::uniform(frame), ProspectLattice(frame, std::move(prospects))};
}

}  // namespace qdt
