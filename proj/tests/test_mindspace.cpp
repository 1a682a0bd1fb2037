#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <vector>

#include "qdt/qdt.hpp"

using qdt::ActionFrame;
using qdt::BasicStateIndex;
using qdt::Cx;
using qdt::ProspectLattice;
using qdt::ProspectState;
using qdt::StrategicState;
using Catch::Matchers::WithinAbs;

TEST_CASE("frame dimension is the product of the factor mode counts", "[mindspace]") {
  const ActionFrame frame = qdt::build_frame({{"action", 4}, {"outcome", 3}, {"context", 2}});
  REQUIRE(frame.dimension() == 24);
  REQUIRE(frame.factors().size() == 3);
  REQUIRE(frame.mode_count(0) == 4);
  REQUIRE(frame.mode_count(2) == 2);
}

TEST_CASE("flat index round-trips through multi-indices, first factor slowest", "[mindspace]") {
  const ActionFrame frame = qdt::build_frame({{"action", 3}, {"outcome", 4}});
  // With the first factor slowest, (a, x) maps to a * 4 + x.
  REQUIRE(frame.flat_index(BasicStateIndex{{2, 1}}) == 9);
  REQUIRE(frame.flat_index(BasicStateIndex{{0, 3}}) == 3);
  for (std::size_t flat = 0; flat < frame.dimension(); ++flat) {
    const BasicStateIndex idx = frame.state_at(flat);
    REQUIRE(frame.flat_index(idx) == flat);
  }
}

TEST_CASE("degenerate frames are rejected", "[mindspace]") {
  REQUIRE_THROWS_AS(qdt::build_frame({}), qdt::EmptyFrame);
  REQUIRE_THROWS_AS(qdt::build_frame({{"action", 0}}), qdt::ZeroModes);
  REQUIRE_THROWS_AS(qdt::build_frame({{"action", 2}, {"action", 2}}),
                    qdt::DuplicateFactorLabel);
}

TEST_CASE("strategic states must be unit norm unless asked to normalize", "[mindspace]") {
  const ActionFrame frame = qdt::build_frame({{"action", 2}, {"outcome", 2}});
  std::vector<Cx> half(frame.dimension(), Cx{0.5, 0.0});
  REQUIRE_NOTHROW(StrategicState(frame, half));

  std::vector<Cx> off(frame.dimension(), Cx{0.6, 0.0});
  REQUIRE_THROWS_AS(StrategicState(frame, off), qdt::NotNormalized);

  const StrategicState fixed(frame, off, /*auto_normalize=*/true);
  REQUIRE_THAT(fixed.norm_squared(), WithinAbs(1.0, 1e-15));

  std::vector<Cx> zero(frame.dimension(), Cx{0.0, 0.0});
  REQUIRE_THROWS_AS(StrategicState(frame, zero, true), qdt::NotNormalized);
  REQUIRE_THROWS_AS(StrategicState(frame, std::vector<Cx>(3, Cx{1.0, 0.0})),
                    qdt::FrameMismatch);
}

TEST_CASE("uniform strategic state spreads weight evenly", "[mindspace]") {
  const ActionFrame frame = qdt::build_frame({{"action", 2}, {"outcome", 3}});
  const StrategicState psi = StrategicState::uniform(frame);
  REQUIRE_THAT(psi.norm_squared(), WithinAbs(1.0, 1e-15));
  for (std::size_t i = 0; i < frame.dimension(); ++i)
    REQUIRE_THAT(std::norm(psi.coefficient(i)), WithinAbs(1.0 / 6.0, 1e-15));
}

TEST_CASE("prospect support lists exactly the nonzero amplitudes", "[mindspace]") {
  const ActionFrame frame = qdt::build_frame({{"action", 2}, {"outcome", 2}});
  std::vector<Cx> coeffs(4, Cx{0.0, 0.0});
  coeffs[1] = Cx{0.3, -0.4};
  coeffs[3] = Cx{0.0, 1.0};
  const ProspectState pi("pi1", frame, coeffs);
  REQUIRE(pi.support() == std::vector<std::size_t>{1, 3});

  const ProspectState sparse = ProspectState::from_entries(
      "pi2", frame, {{BasicStateIndex{{1, 0}}, Cx{1.0, 0.0}}});
  REQUIRE(sparse.support() == std::vector<std::size_t>{2});
  REQUIRE(sparse.coefficient(2) == Cx{1.0, 0.0});
}

TEST_CASE("lattice construction guards the shared frame", "[mindspace]") {
  const ActionFrame frame = qdt::build_frame({{"action", 2}, {"outcome", 2}});
  const ActionFrame other = qdt::build_frame({{"action", 2}, {"outcome", 3}});
  REQUIRE_THROWS_AS(ProspectLattice(frame, {}), qdt::EmptyLattice);

  std::vector<Cx> a(4, Cx{0.0, 0.0});
  a[0] = Cx{1.0, 0.0};
  std::vector<Cx> b(6, Cx{0.0, 0.0});
  b[5] = Cx{1.0, 0.0};
  REQUIRE_THROWS_AS(
      ProspectLattice(frame, {ProspectState("pi1", frame, a), ProspectState("pi2", other, b)}),
      qdt::FrameMismatch);
}

TEST_CASE("combined amplitude is the entrywise product conj(b) c", "[mindspace]") {
  const ActionFrame frame = qdt::build_frame({{"action", 2}, {"outcome", 2}});
  qdt::Rng rng(11);
  const StrategicState psi(frame, rng.unit_complex_vector(frame.dimension()));
  std::vector<Cx> coeffs = rng.unit_complex_vector(frame.dimension());
  const ProspectState pi("pi1", frame, coeffs);

  Cx overlap{0.0, 0.0};
  for (std::size_t i = 0; i < frame.dimension(); ++i) {
    const Cx z = qdt::combined_amplitude(pi, psi, i);
    REQUIRE_THAT(std::abs(z - std::conj(coeffs[i]) * psi.coefficient(i)),
                 WithinAbs(0.0, 1e-15));
    overlap += z;
  }
  REQUIRE_THAT(std::abs(overlap - qdt::prospect_overlap(pi, psi)), WithinAbs(0.0, 1e-14));
}

TEST_CASE("a lattice can be rebuilt from its combined amplitudes", "[mindspace]") {
  const ActionFrame frame = qdt::build_frame({{"action", 2}, {"outcome", 2}});
  qdt::Rng rng(23);
  const std::vector<Cx> z = rng.unit_complex_vector(frame.dimension());
  const std::vector<std::vector<std::pair<std::size_t, Cx>>> amplitudes = {
      {{0, z[0]}, {1, z[1]}},
      {{2, z[2]}, {3, z[3]}}};

  const auto [psi, lattice] = qdt::lattice_from_combined(frame, {"pi1", "pi2"}, amplitudes);
  REQUIRE(lattice.size() == 2);
  for (std::size_t n = 0; n < 2; ++n)
    for (const auto& [flat, amp] : amplitudes[n])
      REQUIRE_THAT(std::abs(qdt::combined_amplitude(lattice.at(n), psi, flat) - amp),
                   WithinAbs(0.0, 1e-14));

  const std::vector<std::vector<std::pair<std::size_t, Cx>>> clash = {
      {{0, z[0]}, {1, z[1]}},
      {{1, z[2]}, {3, z[3]}}};
  REQUIRE_THROWS_AS(qdt::lattice_from_combined(frame, {"pi1", "pi2"}, clash),
                    qdt::OverlappingSupports);
}

TEST_CASE("random unit vectors are unit norm and seed-stable", "[mindspace]") {
  qdt::Rng a(42), b(42);
  const auto u = a.unit_complex_vector(16);
  const auto v = b.unit_complex_vector(16);
  REQUIRE(u == v);
  double n2 = 0.0;
  for (const auto& c : u) n2 += std::norm(c);
  REQUIRE_THAT(n2, WithinAbs(1.0, 1e-12));
  REQUIRE(qdt::mix_seed(7, 1, 0) != qdt::mix_seed(7, 2, 0));
  REQUIRE(qdt::mix_seed(7, 1, 5) != qdt::mix_seed(7, 1, 6));
}
