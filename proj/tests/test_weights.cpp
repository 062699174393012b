#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "rta/exact_cover.hpp"
#include "rta/weights.hpp"

using namespace rta;

namespace {
const TileShape kL{TileFamily::LTromino};
}

TEST_CASE("phase wrapping lands in (-pi, pi]") {
    CHECK(wrap_phase(0.0) == 0.0);
    CHECK(wrap_phase(kPi) == doctest::Approx(kPi));
    CHECK(wrap_phase(-kPi) == doctest::Approx(kPi));  // open end folds up
    CHECK(wrap_phase(3.0 * kPi) == doctest::Approx(kPi));
    CHECK(wrap_phase(2.5 * kPi) == doctest::Approx(0.5 * kPi));
    CHECK(wrap_phase(-2.5 * kPi) == doctest::Approx(-0.5 * kPi));
}

TEST_CASE("taper generators") {
    const GridSpec g(8, 12);
    const WeightSet u = WeightSet::uniform(g);
    CHECK(u.size() == 96);
    CHECK(u.amplitude[0] == 1.0);
    CHECK(u.phase[50] == 0.0);

    const WeightSet rc = WeightSet::raised_cosine(g, 2.0, 0.2);
    for (double a : rc.amplitude) CHECK(a > 0.0);
    // Separable and symmetric along both axes.
    for (int m = 0; m < g.rows; ++m)
        for (int n = 0; n < g.cols; ++n)
            CHECK(rc.amplitude[m * g.cols + n] ==
                  doctest::Approx(rc.amplitude[(g.rows - 1 - m) * g.cols + (g.cols - 1 - n)]));
    // Edges sit at the pedestal level squared (both axes at chi = 1).
    CHECK(rc.amplitude[0] == doctest::Approx(0.2 * 0.2));
    CHECK_THROWS_AS(WeightSet::raised_cosine(g, -1.0, 0.2), std::invalid_argument);
}

TEST_CASE("steering phases") {
    const GridSpec g(4, 4);
    const auto zero = steering_phases(g, 0.0, 0.0);
    for (double p : zero) CHECK(p == 0.0);

    // Small steering: doubling the direction doubles every phase.
    const auto p1 = steering_phases(g, 0.02, 0.01);
    const auto p2 = steering_phases(g, 0.04, 0.02);
    for (std::size_t i = 0; i < p1.size(); ++i) CHECK(p2[i] == doctest::Approx(2.0 * p1[i]));

    CHECK_THROWS_AS(steering_phases(g, 0.9, 0.9), std::invalid_argument);
}

TEST_CASE("excitation matching takes member means") {
    // 2x3 grid, two trominoes; first tile holds amplitudes {1, 1, 4}.
    const GridSpec g(2, 3);
    const Clustering c(g, {TilePlacement(kL, 1, 0, {0, 0}), TilePlacement(kL, 1, 2, {0, 1})});
    REQUIRE(validate_clustering(c).valid);
    WeightSet ref = WeightSet::uniform(g);
    // tile 1 cells: (0,0), (1,0), (1,1)
    ref.amplitude[g.cell_index({0, 0})] = 1.0;
    ref.amplitude[g.cell_index({1, 0})] = 1.0;
    ref.amplitude[g.cell_index({1, 1})] = 4.0;
    const ClusterWeights w = cluster_excitations(ref, c);
    CHECK(w.amplitude[0] == doctest::Approx(2.0));
    CHECK(w.phase[0] == doctest::Approx(0.0));

    // Uniform reference clusters to unit weights everywhere.
    const ClusterWeights wu = cluster_excitations(WeightSet::uniform(g), c);
    for (int q = 0; q < wu.size(); ++q) {
        CHECK(wu.amplitude[q] == doctest::Approx(1.0));
        CHECK(wu.phase[q] == doctest::Approx(0.0));
    }
}

TEST_CASE("single tile takes the global amplitude mean") {
    const GridSpec g(2, 2);
    const Clustering c(g, {TilePlacement(TileShape(TileFamily::Square), 1, 0, {0, 0})});
    WeightSet ref = WeightSet::uniform(g);
    ref.amplitude = {1.0, 2.0, 3.0, 6.0};
    const ClusterWeights w = cluster_excitations(ref, c);
    CHECK(w.amplitude[0] == doctest::Approx(3.0));
}

TEST_CASE("arithmetic vs circular phase averaging at the branch cut") {
    const GridSpec g(2, 3);
    const Clustering c(g, {TilePlacement(kL, 1, 0, {0, 0}), TilePlacement(kL, 1, 2, {0, 1})});
    WeightSet ref = WeightSet::uniform(g);
    // Tile 1 phases straddle the cut: mean should be +-pi, not 0.
    ref.phase[g.cell_index({0, 0})] = kPi - 0.1;
    ref.phase[g.cell_index({1, 0})] = -kPi + 0.1;
    ref.phase[g.cell_index({1, 1})] = kPi - 0.1;
    const ClusterWeights arit = cluster_excitations(ref, c, PhaseAveraging::Arithmetic);
    const ClusterWeights circ = cluster_excitations(ref, c, PhaseAveraging::Circular);
    CHECK(arit.phase[0] == doctest::Approx((kPi - 0.1) / 3.0));  // literal mean
    CHECK(std::abs(circ.phase[0]) == doctest::Approx(kPi - 0.0333333).epsilon(1e-3));
}

TEST_CASE("effective weights and residual") {
    const GridSpec g(2, 3);
    const Clustering c(g, {TilePlacement(kL, 1, 0, {0, 0}), TilePlacement(kL, 1, 2, {0, 1})});
    const WeightSet ref = WeightSet::uniform(g);
    const ClusterWeights w = cluster_excitations(ref, c);
    const auto eff = effective_element_weights(c, w);
    REQUIRE(eff.size() == 6);
    for (const auto& e : eff) CHECK(std::abs(e - std::complex<double>{1.0, 0.0}) < 1e-15);
    CHECK(excitation_residual(ref, c, w) == doctest::Approx(0.0));
}

TEST_CASE("excitation csv round-trip") {
    const GridSpec g(3, 4);
    WeightSet w = WeightSet::raised_cosine(g, 2.0, 0.15);
    w.steer(g, 0.2, -0.1);
    const auto path = std::filesystem::temp_directory_path() / "rta_test_excitations.csv";
    write_excitations_csv(g, w, path);
    const WeightSet back = read_excitations_csv(g, path);
    REQUIRE(back.size() == w.size());
    for (int i = 0; i < w.size(); ++i) {
        CHECK(back.amplitude[i] == w.amplitude[i]);
        CHECK(back.phase[i] == doctest::Approx(w.phase[i]).epsilon(1e-14));
    }
    std::filesystem::remove(path);
}
