#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oracles.hpp"
#include "qdt/qdt.hpp"

using qdt::ParadoxReport;
using qdt::ProspectTable;
using qdt::Verdict;
using Catch::Matchers::WithinAbs;

namespace {

// The four-lottery choice fixture: outcome distributions over
// (nothing, small win, large win) with the balance property
// p1(X_j) + p3(X_j) = p2(X_j) + p4(X_j).
const std::vector<std::vector<double>> kLotteries = {{0.00, 1.00, 0.00},
                                                     {0.01, 0.89, 0.10},
                                                     {0.90, 0.00, 0.10},
                                                     {0.89, 0.11, 0.00}};
const std::vector<double> kUtilities = {0.0, 1.0, 2.0};

}  // namespace

TEST_CASE("balanced lotteries force opposite expected-utility gaps", "[paradox]") {
  const auto [s12, s34] = qdt::allais_classical_contradiction(kLotteries, kUtilities);
  REQUIRE_THAT(s12, WithinAbs(-0.09, 1e-15));
  REQUIRE_THAT(s34, WithinAbs(0.09, 1e-15));
  REQUIRE_THAT(s12 + s34, WithinAbs(0.0, 1e-15));  // exact negatives under balance

  for (std::size_t j = 0; j < 3; ++j) {
    const double lhs = kLotteries[0][j] + kLotteries[2][j];
    const double rhs = kLotteries[1][j] + kLotteries[3][j];
    REQUIRE_THAT(lhs - rhs, WithinAbs(0.0, 1e-15));
  }
  REQUIRE_THAT(kLotteries[0][0] + kLotteries[2][0], WithinAbs(0.9, 1e-15));
  REQUIRE_THAT(kLotteries[0][1] + kLotteries[2][1], WithinAbs(1.0, 1e-15));
  REQUIRE_THAT(kLotteries[0][2] + kLotteries[2][2], WithinAbs(0.1, 1e-15));

  auto broken = kLotteries;
  broken[3][1] = 0.12;
  REQUIRE_THROWS_AS(qdt::allais_classical_contradiction(broken, kUtilities),
                    qdt::BalanceViolated);
  REQUIRE_THROWS_AS(
      qdt::allais_classical_contradiction({kLotteries[0], kLotteries[1]}, kUtilities),
      qdt::LengthMismatch);
}

TEST_CASE("expected utility matches the plain weighted sum", "[paradox]") {
  for (const auto& row : kLotteries)
    REQUIRE_THAT(qdt::classical_expected_utility(row, kUtilities),
                 WithinAbs(oracle::expected_utility(row, kUtilities), 1e-15));
  REQUIRE_THROWS_AS(qdt::classical_expected_utility(kLotteries[0], std::vector<double>{1.0}),
                    qdt::LengthMismatch);
}

TEST_CASE("choice-pattern compatibility is an open interval in the joint gap", "[paradox]") {
  // Realizable iff 0 <= joint_gap < q_gap.
  const ParadoxReport inside = qdt::check_allais_compatibility(0.05, 0.2);
  REQUIRE(inside.verdict == Verdict::holds);
  REQUIRE_THAT(inside.margin, WithinAbs(0.05, 1e-15));

  const ParadoxReport classical = qdt::check_allais_compatibility(0.05, 0.0);
  REQUIRE(classical.verdict == Verdict::fails);  // positive gap, no attraction to buy it

  const ParadoxReport negative = qdt::check_allais_compatibility(-0.02, 0.2);
  REQUIRE(negative.verdict == Verdict::fails);

  const ParadoxReport edge = qdt::check_allais_compatibility(0.2, 0.2);
  REQUIRE(edge.verdict == Verdict::boundary);

  REQUIRE_THROWS_AS(qdt::check_allais_compatibility(0.05, -0.2), qdt::PreconditionViolated);
}

TEST_CASE("full-table compatibility derives its gaps from the table", "[paradox]") {
  // One outcome column keeps the balance condition trivial.
  const ProspectTable quad = ProspectTable::from_joints(
      {{0.24}, {0.26}, {0.26}, {0.24}}, {0.05, -0.05, 0.0, 0.0});
  const ParadoxReport r = qdt::check_allais_compatibility(quad);
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE_THAT(r.margin, WithinAbs(0.02, 1e-12));
  REQUIRE_THAT(r.details.at("joint_gap"), WithinAbs(0.02, 1e-15));

  const ProspectTable unmatched = ProspectTable::from_joints(
      {{0.24}, {0.26}, {0.26}, {0.24}}, {0.05, -0.05, 0.01, -0.01});
  REQUIRE_THROWS_AS(qdt::check_allais_compatibility(unmatched), qdt::PreconditionViolated);
}

TEST_CASE("union preference follows the pairwise order", "[paradox]") {
  const std::vector<double> p = {0.4, 0.3, 0.2, 0.1};
  const ParadoxReport r = qdt::check_independence(p, 0.05, 0.0);
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE_THAT(r.margin, WithinAbs(0.25, 1e-15));
  REQUIRE_THROWS_AS(qdt::check_independence(std::vector<double>{0.3, 0.4, 0.2, 0.1}, 0.0, 0.0),
                    qdt::PreconditionViolated);
  REQUIRE_THROWS_AS(qdt::check_independence(p, -0.1, 0.1), qdt::PreconditionViolated);
  REQUIRE_THROWS_AS(qdt::check_independence(std::vector<double>{0.5, 0.5}, 0.0, 0.0),
                    qdt::LengthMismatch);
}

TEST_CASE("equal conditional rows put the whole preference on attraction", "[paradox]") {
  const ProspectTable pair = ProspectTable::from_conditionals(
      {{0.5, 0.5}, {0.5, 0.5}}, {0.5, 0.5}, {0.1, -0.1});
  const ParadoxReport r = qdt::check_ellsberg(pair);
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE_THAT(r.margin, WithinAbs(0.2, 1e-15));
  REQUIRE_THAT(r.details.at("p1"), WithinAbs(0.6, 1e-15));
  REQUIRE_THAT(r.details.at("p2"), WithinAbs(0.4, 1e-15));

  // Classical limit: identical rows and no attraction leave indifference.
  const ProspectTable flat = ProspectTable::from_conditionals(
      {{0.5, 0.5}, {0.5, 0.5}}, {0.5, 0.5}, {0.0, 0.0});
  const ParadoxReport c = qdt::check_ellsberg(flat);
  REQUIRE(c.verdict == Verdict::boundary);
  REQUIRE_THAT(c.margin, WithinAbs(0.0, 1e-15));

  const ProspectTable skew = ProspectTable::from_conditionals(
      {{0.6, 0.4}, {0.5, 0.5}}, {0.5, 0.5}, {0.1, -0.1});
  REQUIRE_THROWS_AS(qdt::check_ellsberg(skew), qdt::PreconditionViolated);
}

TEST_CASE("preference inversion needs the attraction gap to beat the partial gap",
          "[paradox]") {
  const ProspectTable pair = ProspectTable::from_joints(
      {{0.3, 0.3}, {0.2, 0.2}}, {-0.15, 0.15});
  const ParadoxReport r = qdt::check_inversion(pair);
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE_THAT(r.margin, WithinAbs(0.1, 1e-15));
  REQUIRE_THAT(r.details.at("p2") - r.details.at("p1"), WithinAbs(0.1, 1e-15));

  const ProspectTable classical = ProspectTable::from_joints(
      {{0.3, 0.3}, {0.2, 0.2}}, {0.0, 0.0});
  REQUIRE(qdt::check_inversion(classical).verdict == Verdict::fails);

  const ProspectTable reversed = ProspectTable::from_joints(
      {{0.2, 0.2}, {0.3, 0.3}}, {0.15, -0.15});
  REQUIRE_THROWS_AS(qdt::check_inversion(reversed), qdt::PreconditionViolated);
}

TEST_CASE("equal classical parts rank purely by attraction pattern", "[paradox]") {
  const ProspectTable quad = ProspectTable::from_joints(
      {{0.125, 0.0, 0.125}, {0.0, 0.25, 0.0}, {0.125, 0.0, 0.125}, {0.0, 0.25, 0.0}},
      {-0.1, 0.0, 0.1, 0.0});
  const ParadoxReport r = qdt::check_kahneman_tversky(quad);
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE_THAT(r.margin, WithinAbs(0.1, 1e-15));
  REQUIRE_THAT(r.details.at("pair1_margin"), WithinAbs(0.1, 1e-15));
  REQUIRE_THAT(r.details.at("pair2_margin"), WithinAbs(0.1, 1e-15));

  const ProspectTable classical = ProspectTable::from_joints(
      {{0.125, 0.0, 0.125}, {0.0, 0.25, 0.0}, {0.125, 0.0, 0.125}, {0.0, 0.25, 0.0}},
      {0.0, 0.0, 0.0, 0.0});
  const ParadoxReport c = qdt::check_kahneman_tversky(classical);
  REQUIRE(c.verdict == Verdict::boundary);
  REQUIRE_THAT(c.details.at("pair1_margin"), WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(c.details.at("pair2_margin"), WithinAbs(0.0, 1e-15));

  const ProspectTable uneven = ProspectTable::from_joints(
      {{0.2, 0.0, 0.125}, {0.0, 0.175, 0.0}, {0.125, 0.0, 0.125}, {0.0, 0.25, 0.0}},
      {-0.1, 0.0, 0.1, 0.0});
  REQUIRE_THROWS_AS(qdt::check_kahneman_tversky(uneven), qdt::InvarianceViolated);

  const ProspectTable wrong_pattern = ProspectTable::from_joints(
      {{0.125, 0.0, 0.125}, {0.0, 0.25, 0.0}, {0.125, 0.0, 0.125}, {0.0, 0.25, 0.0}},
      {0.1, -0.1, 0.1, -0.1});
  REQUIRE_THROWS_AS(qdt::check_kahneman_tversky(wrong_pattern),
                    qdt::UncertaintyPatternViolated);
}

TEST_CASE("certainty preference survives while the partial gap dominates", "[paradox]") {
  const ProspectTable kept = ProspectTable::from_joints(
      {{0.3, 0.3}, {0.2, 0.2}}, {-0.05, 0.05});
  const ParadoxReport r = qdt::check_certainty(kept);
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE_THAT(r.margin, WithinAbs(0.1, 1e-15));

  const ProspectTable lost = ProspectTable::from_joints(
      {{0.3, 0.3}, {0.2, 0.2}}, {-0.15, 0.15});
  REQUIRE(qdt::check_certainty(lost).verdict == Verdict::fails);

  // No attraction gap: the comparison degenerates to the classical order.
  const ProspectTable classical = ProspectTable::from_joints(
      {{0.3, 0.3}, {0.2, 0.2}}, {0.0, 0.0});
  REQUIRE(qdt::check_certainty(classical).verdict == Verdict::boundary);
}

TEST_CASE("disjunction effect threshold is half the summed gap", "[paradox]") {
  const ProspectTable pair = ProspectTable::from_joints(
      {{0.3, 0.3}, {0.2, 0.2}}, {-0.15, 0.15});
  const ParadoxReport r = qdt::check_disjunction(pair);
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE_THAT(r.margin, WithinAbs(0.05, 1e-15));
  REQUIRE_THAT(r.details.at("p1"), WithinAbs(0.45, 1e-15));
  REQUIRE_THAT(r.details.at("p2"), WithinAbs(0.55, 1e-15));

  const ProspectTable classical = ProspectTable::from_joints(
      {{0.3, 0.3}, {0.2, 0.2}}, {0.0, 0.0});
  REQUIRE(qdt::check_disjunction(classical).verdict == Verdict::fails);

  const ProspectTable undominated = ProspectTable::from_joints(
      {{0.2, 0.3}, {0.25, 0.25}}, {-0.15, 0.15});
  REQUIRE_THROWS_AS(qdt::check_disjunction(undominated), qdt::MajorizationViolated);

  const ProspectTable unbalanced = ProspectTable::from_joints(
      {{0.3, 0.3}, {0.2, 0.2}}, {-0.1, 0.15});
  REQUIRE_THROWS_AS(qdt::check_disjunction(unbalanced), qdt::PreconditionViolated);
}

TEST_CASE("conjunction fallacy needs attraction below minus the remainder", "[paradox]") {
  const ProspectTable table = ProspectTable::from_joints(
      {{0.4, 0.1}, {0.25, 0.25}}, {-0.2, 0.2});
  const ParadoxReport r = qdt::check_conjunction(table);
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE(r.witness == 0);
  REQUIRE_THAT(r.margin, WithinAbs(0.1, 1e-15));
  REQUIRE_THAT(r.details.at("cell_joint"), WithinAbs(0.4, 1e-15));
  // The witnessing prospect really is less probable than its largest cell.
  REQUIRE(r.details.at("p_witness") < r.details.at("cell_joint"));

  const ProspectTable classical = ProspectTable::from_joints(
      {{0.4, 0.1}, {0.25, 0.25}}, {0.0, 0.0});
  REQUIRE(qdt::check_conjunction(classical).verdict == Verdict::fails);
}

TEST_CASE("isolation failure compares rivals against the classical leader", "[paradox]") {
  const ProspectTable table = ProspectTable::from_joints(
      {{0.4, 0.2}, {0.2, 0.2}}, {-0.25, 0.25});
  const ParadoxReport r = qdt::check_isolation(table);
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE(r.witness == 1);
  REQUIRE_THAT(r.margin, WithinAbs(0.3, 1e-15));
  REQUIRE(r.details.at("p_witness") > r.details.at("p_leader"));

  const ProspectTable classical = ProspectTable::from_joints(
      {{0.4, 0.2}, {0.2, 0.2}}, {0.0, 0.0});
  REQUIRE(qdt::check_isolation(classical).verdict == Verdict::fails);
}

TEST_CASE("below one half, a conjunction fallacy forces the reversal", "[paradox]") {
  const ProspectTable table = ProspectTable::from_joints(
      {{0.4, 0.1}, {0.25, 0.25}}, {-0.2, 0.2});
  const ParadoxReport r = qdt::check_combined(table);
  REQUIRE(r.proposition == "prop14");
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE_THAT(r.margin, WithinAbs(0.4, 1e-15));

  // No fallacy: the implication holds vacuously.
  const ProspectTable calm = ProspectTable::from_joints(
      {{0.3, 0.15}, {0.3, 0.25}}, {0.05, -0.05});
  const ParadoxReport v = qdt::check_combined(calm);
  REQUIRE(v.proposition == "prop14");
  REQUIRE(v.verdict == Verdict::holds);

  const ProspectTable misnamed = ProspectTable::from_joints(
      {{0.1, 0.4}, {0.25, 0.25}}, {-0.2, 0.2});
  REQUIRE_THROWS_AS(qdt::check_combined(misnamed), qdt::NotationViolated);
}

TEST_CASE("above one half, a preference reversal forces the fallacy", "[paradox]") {
  const ProspectTable table = ProspectTable::from_joints(
      {{0.55, 0.05}, {0.2, 0.2}}, {-0.2, 0.2});
  const ParadoxReport r = qdt::check_combined(table);
  REQUIRE(r.proposition == "prop15");
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE_THAT(r.margin, WithinAbs(0.15, 1e-15));

  // No reversal: vacuously true.
  const ProspectTable v = ProspectTable::from_joints(
      {{0.6, 0.1}, {0.1, 0.2}}, {-0.05, 0.05});
  const ParadoxReport vr = qdt::check_combined(v);
  REQUIRE(vr.proposition == "prop15");
  REQUIRE(vr.verdict == Verdict::holds);
}

TEST_CASE("at exactly one half, fallacy and reversal are the same event", "[paradox]") {
  const ProspectTable table = ProspectTable::from_joints(
      {{0.5, 0.1}, {0.15, 0.25}}, {-0.15, 0.15});
  const ParadoxReport r = qdt::check_combined(table);
  REQUIRE(r.proposition == "prop16");
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE_THAT(r.margin, WithinAbs(0.05, 1e-15));
  REQUIRE_THAT(r.details.at("fallacy_margin"), WithinAbs(0.05, 1e-15));
  REQUIRE_THAT(r.details.at("reversal_margin"), WithinAbs(0.1, 1e-15));
  // The closed-form condition -p(A1 X2) - q1 carries the fallacy's sign.
  REQUIRE_THAT(r.details.at("fallacy_condition"), WithinAbs(0.05, 1e-15));

  const ProspectTable quiet = ProspectTable::from_joints(
      {{0.5, 0.1}, {0.15, 0.25}}, {0.05, -0.05});
  const ParadoxReport s = qdt::check_combined(quiet);
  REQUIRE(s.proposition == "prop16");
  REQUIRE(s.verdict == Verdict::holds);  // neither fallacy nor reversal

  REQUIRE_THROWS_AS(qdt::check_combined(ProspectTable::from_joints(
                        {{0.5, 0.1}, {0.15, 0.25}}, {-0.15, 0.1})),
                    qdt::PreconditionViolated);
}

TEST_CASE("prospect tables validate shape and mass", "[paradox]") {
  REQUIRE_THROWS_AS(ProspectTable::from_joints({{0.5, 0.5}, {0.5}}, {0.0, 0.0}),
                    qdt::LengthMismatch);
  REQUIRE_THROWS_AS(ProspectTable::from_joints({{0.5, 0.5}}, {0.0, 0.0}),
                    qdt::LengthMismatch);
  REQUIRE_THROWS_AS(ProspectTable::from_joints({{-0.1, 0.5}}, {0.0}),
                    qdt::PreconditionViolated);
  REQUIRE_THROWS_AS(
      ProspectTable::from_conditionals({{0.5, 0.5}}, {0.7, 0.7}, {0.0}),
      qdt::PreconditionViolated);

  const ProspectTable t = ProspectTable::from_conditionals(
      {{0.6, 0.2}}, {0.5, 0.5}, {0.1});
  REQUIRE_THAT(t.joint(0, 0), WithinAbs(0.3, 1e-15));
  REQUIRE_THAT(t.partial_sum(0), WithinAbs(0.4, 1e-15));
  REQUIRE_THAT(t.probability(0), WithinAbs(0.5, 1e-15));

  const ProspectTable back = ProspectTable::from_joints({{0.3, 0.1}, {0.2, 0.4}}, {0.0, 0.0});
  REQUIRE_THAT(back.weight(0), WithinAbs(0.5, 1e-15));
  REQUIRE_THAT(back.conditional(0, 0), WithinAbs(0.6, 1e-15));
}
