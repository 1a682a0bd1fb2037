#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdt/errors.hpp"
#include "qdt/tolerances.hpp"

namespace qdt {

// Three-valued outcome of an inequality check: values inside the boundary
// band are reported as such instead of being forced to one side.
enum class Verdict { holds, fails, boundary };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::boundary: return "boundary";
  }
  return "boundary";
}

inline Verdict strict_verdict(double margin, double band = kBoundaryBand) {
  if (std::abs(margin) <= band) return Verdict::boundary;
  return margin > 0.0 ? Verdict::holds : Verdict::fails;
}

struct ParadoxReport {
  std::string proposition;
  Verdict verdict = Verdict::fails;
  double margin = 0.0;  // signed slack of the governing inequality
  int witness = -1;     // prospect index for existence-style checks
  std::map<std::string, double> details;

  friend bool operator==(const ParadoxReport&, const ParadoxReport&) = default;
};

// Prospect-by-outcome table feeding the checkers: joint probabilities
// p(A_n X_j) with per-prospect attraction values, plus the conditional /
// weight split when the caller has it (derived from column sums otherwise).
class ProspectTable {
 public:
  static ProspectTable from_conditionals(std::vector<std::vector<double>> conditionals,
                                         std::vector<double> weights, std::vector<double> q,
                                         std::vector<double> utilities = {}) {
    ProspectTable t;
    t.conditionals_ = std::move(conditionals);
    t.weights_ = std::move(weights);
    t.q_ = std::move(q);
    t.utilities_ = std::move(utilities);
    t.validate_shape(t.conditionals_, t.weights_.size());
    double wsum = 0.0;
    for (double w : t.weights_) {
      if (w < 0.0 || w > 1.0)
        throw PreconditionViolated("outcome weight " + std::to_string(w) + " outside [0, 1]");
      wsum += w;
    }
    if (std::abs(wsum - 1.0) > kIdentityTol)
      throw PreconditionViolated("outcome weights sum to " + std::to_string(wsum) +
                                 "; must sum to 1");
    for (const auto& row : t.conditionals_)
      for (double c : row)
        if (c < -kIdentityTol || c > 1.0 + kIdentityTol)
          throw PreconditionViolated("conditional " + std::to_string(c) + " outside [0, 1]");
    t.joints_.resize(t.conditionals_.size());
    for (std::size_t n = 0; n < t.conditionals_.size(); ++n) {
      t.joints_[n].resize(t.conditionals_[n].size());
      for (std::size_t j = 0; j < t.conditionals_[n].size(); ++j)
        t.joints_[n][j] = t.conditionals_[n][j] * t.weights_[j];
    }
    return t;
  }

  static ProspectTable from_joints(std::vector<std::vector<double>> joints, std::vector<double> q,
                                   std::vector<double> utilities = {}) {
    ProspectTable t;
    t.joints_ = std::move(joints);
    t.q_ = std::move(q);
    t.utilities_ = std::move(utilities);
    t.validate_shape(t.joints_, 0);
    for (const auto& row : t.joints_)
      for (double p : row)
        if (p < 0.0)
          throw PreconditionViolated("joint probability " + std::to_string(p) + " is negative");
    t.weights_.assign(t.cols(), 0.0);
    for (std::size_t j = 0; j < t.cols(); ++j)
      for (std::size_t n = 0; n < t.rows(); ++n) t.weights_[j] += t.joints_[n][j];
    t.conditionals_.resize(t.rows());
    for (std::size_t n = 0; n < t.rows(); ++n) {
      t.conditionals_[n].resize(t.cols());
      for (std::size_t j = 0; j < t.cols(); ++j)
        t.conditionals_[n][j] = t.weights_[j] > 0.0 ? t.joints_[n][j] / t.weights_[j] : 0.0;
    }
    return t;
  }

  std::size_t rows() const { return joints_.size(); }
  std::size_t cols() const { return joints_.empty() ? 0 : joints_.front().size(); }
  double joint(std::size_t n, std::size_t j) const { return joints_.at(n).at(j); }
  double conditional(std::size_t n, std::size_t j) const { return conditionals_.at(n).at(j); }
  double weight(std::size_t j) const { return weights_.at(j); }
  double q(std::size_t n) const { return q_.at(n); }
  const std::vector<double>& attractions() const { return q_; }
  const std::vector<double>& utilities() const { return utilities_; }
  const std::vector<std::vector<double>>& joints() const { return joints_; }

  double partial_sum(std::size_t n) const {
    double s = 0.0;
    for (double p : joints_.at(n)) s += p;
    return s;
  }
  double probability(std::size_t n) const { return partial_sum(n) + q_.at(n); }

 private:
  void validate_shape(const std::vector<std::vector<double>>& rows_in,
                      std::size_t expect_cols) const {
    if (rows_in.empty()) throw LengthMismatch("prospect table needs at least one row");
    const std::size_t cols = expect_cols ? expect_cols : rows_in.front().size();
    if (cols == 0) throw LengthMismatch("prospect table needs at least one outcome column");
    for (const auto& row : rows_in)
      if (row.size() != cols) throw LengthMismatch("prospect table rows differ in length");
    if (q_.size() != rows_in.size())
      throw LengthMismatch("need exactly one attraction value per prospect row");
    if (!utilities_.empty() && utilities_.size() != cols)
      throw LengthMismatch("need exactly one utility per outcome column");
  }

  std::vector<std::vector<double>> joints_;
  std::vector<std::vector<double>> conditionals_;
  std::vector<double> weights_;
  std::vector<double> q_;
  std::vector<double> utilities_;
};

// sum_j p_n(X_j) U(X_j)
inline double classical_expected_utility(std::span<const double> outcome_probabilities,
                                         std::span<const double> utilities) {
  if (outcome_probabilities.size() != utilities.size())
    throw LengthMismatch("probabilities and utilities differ in length");
  double u = 0.0;
  for (std::size_t j = 0; j < utilities.size(); ++j)
    u += outcome_probabilities[j] * utilities[j];
  return u;
}

// Expected-utility differences (U(pi1)-U(pi2), U(pi3)-U(pi4)) for four
// outcome distributions obeying the balance condition
// p1(X_j) + p3(X_j) = p2(X_j) + p4(X_j). Under balance the two differences
// are exact negatives, which is what makes the joint preference pattern
// classically impossible.
inline std::pair<double, double> allais_classical_contradiction(
    const std::vector<std::vector<double>>& outcome_probabilities,
    std::span<const double> utilities, double balance_tol = kIdentityTol) {
  if (outcome_probabilities.size() != 4)
    throw LengthMismatch("the classical contradiction needs exactly four prospects");
  const std::size_t cols = utilities.size();
  for (const auto& row : outcome_probabilities)
    if (row.size() != cols) throw LengthMismatch("probabilities and utilities differ in length");
  for (std::size_t j = 0; j < cols; ++j) {
    const double residual = outcome_probabilities[0][j] + outcome_probabilities[2][j] -
                            outcome_probabilities[1][j] - outcome_probabilities[3][j];
    if (std::abs(residual) > balance_tol)
      throw BalanceViolated("balance condition fails at outcome " + std::to_string(j) +
                            " by " + std::to_string(residual));
  }
  double s12 = 0.0, s34 = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    s12 += (outcome_probabilities[0][j] - outcome_probabilities[1][j]) * utilities[j];
    s34 += (outcome_probabilities[2][j] - outcome_probabilities[3][j]) * utilities[j];
  }
  return {s12, s34};
}

namespace detail {

// Premises written as strict inequalities tolerate equality inside the
// boundary band (the classical limit); only violations beyond the band in
// the wrong direction abort the check.
inline void require_not_below(double lhs, double rhs, const char* what) {
  if (lhs < rhs - kBoundaryBand)
    throw PreconditionViolated(std::string(what) + " (" + std::to_string(lhs) + " < " +
                               std::to_string(rhs) + ")");
}

inline void require_rows(const ProspectTable& t, std::size_t n, const char* who) {
  if (t.rows() != n)
    throw LengthMismatch(std::string(who) + " needs exactly " + std::to_string(n) +
                         " prospects, got " + std::to_string(t.rows()));
}

}  // namespace detail

// Reduced compatibility check on the two governing numbers: the summed joint
// gap sum_j [p(A2 X_j) - p(A1 X_j)] and the attraction gap q1 - q2. The
// stated preference pair is realizable iff 0 <= joint_gap < q_gap.
inline ParadoxReport check_allais_compatibility(double joint_gap, double q_gap) {
  if (q_gap < -kBoundaryBand)
    throw PreconditionViolated(
        "uncertainty ordering: the second prospect must carry the lower attraction (q gap " +
        std::to_string(q_gap) + ")");
  ParadoxReport r;
  r.proposition = "prop5";
  const double right_slack = q_gap - joint_gap;  // strict side
  r.margin = std::min(joint_gap, right_slack);
  r.details["joint_gap"] = joint_gap;
  r.details["q_gap"] = q_gap;
  r.details["right_slack"] = right_slack;
  if (joint_gap < -kBoundaryBand || right_slack < -kBoundaryBand)
    r.verdict = Verdict::fails;
  else if (std::abs(right_slack) <= kBoundaryBand)
    r.verdict = Verdict::boundary;
  else
    r.verdict = Verdict::holds;
  return r;
}

// Full-table compatibility check for the four-prospect choice pattern.
inline ParadoxReport check_allais_compatibility(const ProspectTable& quad) {
  detail::require_rows(quad, 4, "compatibility check");
  for (std::size_t j = 0; j < quad.cols(); ++j) {
    const double residual = quad.conditional(0, j) + quad.conditional(2, j) -
                            quad.conditional(1, j) - quad.conditional(3, j);
    if (std::abs(residual) > kIdentityTol)
      throw PreconditionViolated("balance condition fails at outcome " + std::to_string(j) +
                                 " by " + std::to_string(residual));
  }
  detail::require_not_below(quad.q(0), quad.q(1),
                            "uncertainty ordering: second prospect must carry the lower attraction");
  if (std::abs(quad.q(2) - quad.q(3)) > kIdentityTol)
    throw PreconditionViolated("third and fourth attraction values must match (" +
                               std::to_string(quad.q(2)) + " vs " + std::to_string(quad.q(3)) + ")");
  double joint_gap = 0.0;
  for (std::size_t j = 0; j < quad.cols(); ++j)
    joint_gap += quad.joint(1, j) - quad.joint(0, j);
  ParadoxReport r = check_allais_compatibility(joint_gap, quad.q(0) - quad.q(1));
  r.details["p1"] = quad.probability(0);
  r.details["p2"] = quad.probability(1);
  return r;
}

// Additivity of preference across a shared-part decomposition: with
// p1 > p2, p3 >= p4 and the compound attraction of (pi2+pi4) not above that
// of (pi1+pi3), the union preference p(pi1+pi3) > p(pi2+pi4) follows.
inline ParadoxReport check_independence(std::span<const double> p, double q13, double q24) {
  if (p.size() != 4) throw LengthMismatch("independence check needs exactly four probabilities");
  detail::require_not_below(p[0], p[1], "first prospect must outrank the second");
  detail::require_not_below(p[2], p[3], "third prospect must not trail the fourth");
  detail::require_not_below(q13, q24, "compound attraction ordering");
  ParadoxReport r;
  r.proposition = "prop6";
  const double lhs = p[0] + p[2] + q13;
  const double rhs = p[1] + p[3] + q24;
  r.margin = lhs - rhs;
  r.verdict = strict_verdict(r.margin);
  r.details["p_union_13"] = lhs;
  r.details["p_union_24"] = rhs;
  r.details["q_union_13"] = q13;
  r.details["q_union_24"] = q24;
  return r;
}

// Two prospects with identical action-conditional rows: every preference is
// carried by the attraction terms alone, with margin p1 - p2 = q1 - q2.
inline ParadoxReport check_ellsberg(const ProspectTable& pair) {
  detail::require_rows(pair, 2, "ambiguity check");
  for (std::size_t j = 0; j < pair.cols(); ++j)
    if (std::abs(pair.conditional(0, j) - pair.conditional(1, j)) > kIdentityTol)
      throw PreconditionViolated("action-conditional rows must match at outcome " +
                                 std::to_string(j));
  detail::require_not_below(pair.q(0), pair.q(1),
                            "uncertainty ordering: second prospect must carry the lower attraction");
  ParadoxReport r;
  r.proposition = "prop7";
  const double p1 = pair.probability(0);
  const double p2 = pair.probability(1);
  r.margin = p1 - p2;
  r.verdict = strict_verdict(r.margin);
  r.details["p1"] = p1;
  r.details["p2"] = p2;
  r.details["q_gap"] = pair.q(0) - pair.q(1);
  return r;
}

// Preference inversion: with the first row dominating by summed partials,
// the second prospect still wins iff its attraction advantage exceeds the
// partial-sum gap.
inline ParadoxReport check_inversion(const ProspectTable& pair) {
  detail::require_rows(pair, 2, "inversion check");
  const double s1 = pair.partial_sum(0);
  const double s2 = pair.partial_sum(1);
  detail::require_not_below(s1, s2, "majorization by partial sums");
  ParadoxReport r;
  r.proposition = "prop8";
  const double partial_gap = s1 - s2;
  const double q_gap = pair.q(1) - pair.q(0);
  r.margin = q_gap - partial_gap;
  r.verdict = strict_verdict(r.margin);
  r.details["partial_gap"] = partial_gap;
  r.details["q_gap"] = q_gap;
  r.details["p1"] = pair.probability(0);
  r.details["p2"] = pair.probability(1);
  return r;
}

// Equal classical parts across four prospects: preferences within each pair
// are set purely by the attraction pattern q1 < q2, q4 < q3.
inline ParadoxReport check_kahneman_tversky(const ProspectTable& quad) {
  detail::require_rows(quad, 4, "invariance check");
  const double s1 = quad.partial_sum(0);
  for (std::size_t n = 1; n < 4; ++n)
    if (std::abs(quad.partial_sum(n) - s1) > kIdentityTol)
      throw InvarianceViolated("partial sums differ between prospects 1 and " +
                               std::to_string(n + 1));
  if (quad.q(0) > quad.q(1) + kBoundaryBand)
    throw UncertaintyPatternViolated("first pair: q1 must not exceed q2");
  if (quad.q(3) > quad.q(2) + kBoundaryBand)
    throw UncertaintyPatternViolated("second pair: q4 must not exceed q3");
  ParadoxReport r;
  r.proposition = "prop9";
  const double m1 = quad.probability(1) - quad.probability(0);
  const double m2 = quad.probability(2) - quad.probability(3);
  r.margin = std::min(m1, m2);
  const Verdict v1 = strict_verdict(m1);
  const Verdict v2 = strict_verdict(m2);
  if (v1 == Verdict::holds && v2 == Verdict::holds)
    r.verdict = Verdict::holds;
  else if (v1 == Verdict::fails || v2 == Verdict::fails)
    r.verdict = Verdict::fails;
  else
    r.verdict = Verdict::boundary;
  r.details["pair1_margin"] = m1;
  r.details["pair2_margin"] = m2;
  r.details["q_gap_12"] = quad.q(1) - quad.q(0);
  r.details["q_gap_34"] = quad.q(2) - quad.q(3);
  return r;
}

// Certainty preference against the utility ordering: with q1 < q2, the first
// prospect is still chosen iff its partial-sum advantage exceeds the
// attraction gap (holds = reversed effect; fails = the plain effect).
inline ParadoxReport check_certainty(const ProspectTable& pair) {
  detail::require_rows(pair, 2, "certainty check");
  detail::require_not_below(pair.q(1), pair.q(0), "uncertainty ordering: q1 must not exceed q2");
  ParadoxReport r;
  r.proposition = "prop10";
  const double partial_gap = pair.partial_sum(0) - pair.partial_sum(1);
  const double q_gap = pair.q(1) - pair.q(0);
  r.margin = partial_gap - q_gap;
  r.verdict = q_gap <= kBoundaryBand ? Verdict::boundary : strict_verdict(r.margin);
  r.details["partial_gap"] = partial_gap;
  r.details["q_gap"] = q_gap;
  r.details["p1"] = pair.probability(0);
  r.details["p2"] = pair.probability(1);
  return r;
}

// Disjunction effect: the first row dominates outcome-by-outcome, yet the
// second prospect wins iff its attraction exceeds half the summed gap.
inline ParadoxReport check_disjunction(const ProspectTable& pair) {
  detail::require_rows(pair, 2, "disjunction check");
  for (std::size_t j = 0; j < pair.cols(); ++j)
    if (pair.joint(0, j) < pair.joint(1, j) - kBoundaryBand)
      throw MajorizationViolated("first row must dominate at outcome " + std::to_string(j));
  if (std::abs(pair.q(0) + pair.q(1)) > kIdentityTol)
    throw PreconditionViolated("binary alternation: attractions must be exact opposites");
  detail::require_not_below(pair.q(1), pair.q(0), "uncertainty ordering: q1 must not exceed q2");
  ParadoxReport r;
  r.proposition = "prop11";
  const double partial_gap = pair.partial_sum(0) - pair.partial_sum(1);
  r.margin = pair.q(1) - 0.5 * partial_gap;
  r.verdict = strict_verdict(r.margin);
  r.details["partial_gap"] = partial_gap;
  r.details["threshold"] = 0.5 * partial_gap;
  r.details["q2"] = pair.q(1);
  r.details["p1"] = pair.probability(0);
  r.details["p2"] = pair.probability(1);
  return r;
}

// Conjunction fallacy: some prospect is less probable than its own largest
// cell, which happens iff its attraction drops below minus the sum of its
// remaining cells. Reports the witnessing prospect and cell.
inline ParadoxReport check_conjunction(const ProspectTable& table) {
  ParadoxReport r;
  r.proposition = "prop12";
  double best_slack = 0.0;
  std::size_t best_n = 0, best_j = 0;
  bool first = true;
  for (std::size_t n = 0; n < table.rows(); ++n) {
    std::size_t j0 = 0;
    for (std::size_t j = 1; j < table.cols(); ++j)
      if (table.joint(n, j) > table.joint(n, j0)) j0 = j;
    const double rest = table.partial_sum(n) - table.joint(n, j0);
    const double slack = -rest - table.q(n);  // > 0 iff the fallacy occurs for n
    if (first || slack > best_slack) {
      best_slack = slack;
      best_n = n;
      best_j = j0;
      first = false;
    }
  }
  r.margin = best_slack;
  r.verdict = strict_verdict(r.margin);
  r.witness = static_cast<int>(best_n);
  r.details["cell"] = static_cast<double>(best_j);
  r.details["cell_joint"] = table.joint(best_n, best_j);
  r.details["p_witness"] = table.probability(best_n);
  return r;
}

// Isolation failure: taking the prospect with the largest classical part as
// the leader, some other prospect still outranks it iff the leader's
// attraction falls below the rival's attraction plus the partial-sum
// deficit. Prospects are reordered internally if the leader is not first.
inline ParadoxReport check_isolation(const ProspectTable& table) {
  ParadoxReport r;
  r.proposition = "prop13";
  std::size_t leader = 0;
  for (std::size_t n = 1; n < table.rows(); ++n)
    if (table.partial_sum(n) > table.partial_sum(leader)) leader = n;
  double best_margin = 0.0;
  int witness = -1;
  for (std::size_t n = 0; n < table.rows(); ++n) {
    if (n == leader) continue;
    const double margin =
        (table.q(n) + table.partial_sum(n) - table.partial_sum(leader)) - table.q(leader);
    if (witness < 0 || margin > best_margin) {
      best_margin = margin;
      witness = static_cast<int>(n);
    }
  }
  if (witness < 0) {  // single-prospect table: nothing can outrank the leader
    r.margin = 0.0;
    r.verdict = Verdict::fails;
    return r;
  }
  r.margin = best_margin;
  r.verdict = strict_verdict(r.margin);
  r.witness = witness;
  r.details["leader"] = static_cast<double>(leader);
  r.details["p_leader"] = table.probability(leader);
  r.details["p_witness"] = table.probability(static_cast<std::size_t>(witness));
  return r;
}

// Combined conjunction/disjunction analysis of a 2x2 table under binary
// alternation, with the first row's larger cell in the first column. The
// governing cell p(A1 X1) selects the branch:
//   below 1/2: a conjunction fallacy forces the preference reversal;
//   above 1/2: a preference reversal forces the fallacy;
//   at 1/2:    fallacy and reversal occur together or not at all.
inline ParadoxReport check_combined(const ProspectTable& pair) {
  detail::require_rows(pair, 2, "combined check");
  if (pair.cols() != 2) throw LengthMismatch("combined check needs exactly two outcomes");
  if (std::abs(pair.q(0) + pair.q(1)) > kIdentityTol)
    throw PreconditionViolated("binary alternation: attractions must be exact opposites");
  if (pair.joint(0, 0) < pair.joint(0, 1) - kBoundaryBand)
    throw NotationViolated("first outcome must carry the first row's maximum");

  const double a = pair.joint(0, 0);
  const double p1 = pair.probability(0);
  const double p2 = pair.probability(1);
  const double fallacy_margin = a - p1;    // > 0 iff p(pi1) < its largest cell
  const double reversal_margin = p2 - p1;  // > 0 iff the second prospect wins
  const Verdict fallacy = strict_verdict(fallacy_margin);
  const Verdict reversal = strict_verdict(reversal_margin);

  ParadoxReport r;
  r.details["cell"] = a;
  r.details["p1"] = p1;
  r.details["p2"] = p2;
  r.details["fallacy_margin"] = fallacy_margin;
  r.details["reversal_margin"] = reversal_margin;
  r.details["fallacy_condition"] = -pair.joint(0, 1) - pair.q(0);  // same sign as fallacy_margin
  const double half_margin = a - 0.5;
  if (half_margin < -kBoundaryBand) {
    r.proposition = "prop14";  // fallacy implies reversal
    if (fallacy == Verdict::boundary) {
      r.verdict = Verdict::boundary;
      r.margin = fallacy_margin;
    } else if (fallacy == Verdict::fails) {
      r.verdict = Verdict::holds;  // vacuous: no fallacy to propagate
      r.margin = -fallacy_margin;
    } else {
      r.verdict = reversal;
      r.margin = reversal_margin;
    }
  } else if (half_margin > kBoundaryBand) {
    r.proposition = "prop15";  // reversal implies fallacy
    if (reversal == Verdict::boundary) {
      r.verdict = Verdict::boundary;
      r.margin = reversal_margin;
    } else if (reversal == Verdict::fails) {
      r.verdict = Verdict::holds;  // vacuous: no reversal to propagate
      r.margin = -reversal_margin;
    } else {
      r.verdict = fallacy;
      r.margin = fallacy_margin;
    }
  } else {
    r.proposition = "prop16";  // fallacy and reversal are equivalent
    if (fallacy == Verdict::boundary || reversal == Verdict::boundary) {
      r.verdict = Verdict::boundary;
      r.margin = std::min(std::abs(fallacy_margin), std::abs(reversal_margin));
    } else {
      const bool agree = (fallacy == reversal);
      r.verdict = agree ? Verdict::holds : Verdict::fails;
      r.margin = (agree ? 1.0 : -1.0) *
                 std::min(std::abs(fallacy_margin), std::abs(reversal_margin));
    }
  }
  return r;
}

}  // namespace qdt
