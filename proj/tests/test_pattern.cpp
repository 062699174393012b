#include <doctest.h>

#include <cmath>
#include <complex>

#include "rta/exact_cover.hpp"
#include "rta/pattern.hpp"
#include "rta/rng.hpp"

using namespace rta;

namespace {

const TileShape kL{TileFamily::LTromino};

Clustering first_cover(const GridSpec& g, std::set<int> orders) {
    const CoverInstance inst = build_cover_instance(g, kL, orders);
    std::optional<Clustering> first;
    EnumerationLimits one;
    one.max_solutions = 1;
    enumerate_exact_covers(inst, one, [&](std::span<const int> rows) {
        first = clustering_from_solution(inst, rows);
    });
    REQUIRE(first.has_value());
    return *first;
}

// Synthetic grid with constant power everywhere visible.
PatternGrid constant_grid(int res, double value) {
    PatternGrid g;
    g.resolution = res;
    g.u.resize(res);
    g.v.resize(res);
    for (int i = 0; i < res; ++i) g.u[i] = g.v[i] = -1.0 + 2.0 * i / (res - 1);
    g.power.assign(static_cast<std::size_t>(res) * res, value);
    g.visible.assign(static_cast<std::size_t>(res) * res, 0);
    for (int iv = 0; iv < res; ++iv)
        for (int iu = 0; iu < res; ++iu)
            g.visible[static_cast<std::size_t>(iv) * res + iu] = (g.u[iu] * g.u[iu] + g.v[iv] * g.v[iv] <= 1.0);
    g.raw_peak = value;
    return g;
}

}  // namespace

TEST_CASE("space factor basics") {
    const GridSpec g(8, 8);
    for (int r : {1, 2}) {
        const TilePlacement tile(kL, r, 1, {2, 3});
        const auto at_origin = tile_space_factor(tile, g, 0.0, 0.0);
        CHECK(at_origin.real() == doctest::Approx(kL.cells_of_order(r)));
        CHECK(at_origin.imag() == doctest::Approx(0.0));

        const auto val = tile_space_factor(tile, g, 1.0, 0.0);
        CHECK(std::abs(val) <= kL.cells_of_order(r) + 1e-12);

        // Conjugate symmetry from real positions.
        const auto a = tile_space_factor(tile, g, 0.37, -0.21);
        const auto b = tile_space_factor(tile, g, -0.37, 0.21);
        CHECK(std::abs(a - std::conj(b)) < 1e-12);
    }
}

TEST_CASE("array factor collapses to the element count at broadside") {
    const GridSpec g(4, 6);
    const Clustering c = first_cover(g, {1});
    ClusterWeights w;
    w.amplitude.assign(c.tile_count(), 1.0);
    w.phase.assign(c.tile_count(), 0.0);
    const auto af = array_factor_tiles(c, w, 0.0, 0.0);
    CHECK(af.real() == doctest::Approx(24.0));
    CHECK(af.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("regrouping identity: tile route equals element route") {
    const GridSpec g(4, 6);
    const Clustering c = first_cover(g, {1, 2});
    WeightSet ref = WeightSet::raised_cosine(g, 2.0, 0.3);
    ref.steer(g, 0.15, -0.2);
    const ClusterWeights w = cluster_excitations(ref, c);
    const auto eff = effective_element_weights(c, w);
    double weight_scale = 0.0;
    for (const auto& e : eff) weight_scale += std::abs(e);

    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const double u = rng.real(-1.0, 1.0);
        const double v = rng.real(-1.0, 1.0);
        const auto tiles = array_factor_tiles(c, w, u, v);
        const auto elems = array_factor_elements(g, eff, u, v);
        CHECK(std::abs(tiles - elems) <= 1e-12 * weight_scale);
    }
}

TEST_CASE("single element array factor is its weight everywhere") {
    const GridSpec g(1, 1);
    const std::vector<std::complex<double>> w{{0.7, 0.3}};
    CHECK(std::abs(array_factor_elements(g, w, 0.4, -0.6) - w[0]) < 1e-15);
    CHECK(std::abs(array_factor_elements(g, w, 0.0, 0.0) - w[0]) < 1e-15);
}

TEST_CASE("sampled grid matches pointwise evaluation") {
    const GridSpec g(4, 6);
    const Clustering c = first_cover(g, {1});
    WeightSet ref = WeightSet::raised_cosine(g, 1.5, 0.25);
    ref.steer(g, 0.1, 0.05);
    const ClusterWeights w = cluster_excitations(ref, c);
    const ElementPattern iso = ElementPattern::isotropic();
    const PatternEvaluator eval(c, w, iso);
    const PatternGrid pg = eval.sample(65);
    for (int iv : {0, 13, 32, 50, 64}) {
        for (int iu : {0, 7, 32, 41, 64}) {
            if (!pg.is_visible(iu, iv)) continue;
            const double direct = eval.power(pg.u[iu], pg.v[iv]) / pg.raw_peak;
            CHECK(pg.at(iu, iv) == doctest::Approx(direct).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(eval.sample(63), std::invalid_argument);
}

TEST_CASE("broadside uniform pattern peaks at the origin and is symmetric") {
    const GridSpec g(8, 8);
    std::vector<std::complex<double>> w(64, {1.0, 0.0});
    const ElementPattern iso = ElementPattern::isotropic();
    const PatternEvaluator eval(g, w, iso);
    const PatternGrid pg = eval.sample(129);
    CHECK(pg.peak_u == doctest::Approx(0.0));
    CHECK(pg.peak_v == doctest::Approx(0.0));
    // P(u, v) = P(-u, -v) for real excitations.
    for (int iv : {3, 40, 77}) {
        for (int iu : {5, 44, 90}) {
            if (!pg.is_visible(iu, iv)) continue;
            const int ru = pg.resolution - 1 - iu;
            const int rv = pg.resolution - 1 - iv;
            CHECK(pg.at(iu, iv) == doctest::Approx(pg.at(ru, rv)).epsilon(1e-9));
        }
    }
}

TEST_CASE("constant element scaling drops out after normalization") {
    const GridSpec g(4, 4);
    std::vector<std::complex<double>> w(16, {1.0, 0.0});
    const ElementPattern iso = ElementPattern::isotropic();
    const ElementPattern half =
        ElementPattern::tabulated({0.0, 90.0}, {0.0}, {0.5, 0.5});
    const PatternGrid a = PatternEvaluator(g, w, iso).sample(65);
    const PatternGrid b = PatternEvaluator(g, w, half).sample(65);
    for (std::size_t i = 0; i < a.power.size(); ++i) CHECK(a.power[i] == doctest::Approx(b.power[i]));
}

TEST_CASE("all-zero weights are rejected") {
    const GridSpec g(2, 2);
    const ElementPattern iso = ElementPattern::isotropic();
    CHECK_THROWS_AS(PatternEvaluator(g, std::vector<std::complex<double>>(4, {0.0, 0.0}), iso),
                    std::invalid_argument);
}

TEST_CASE("gamma arithmetic on synthetic grids") {
    // P == mask everywhere: equality is not a violation.
    const PatternGrid ones = constant_grid(65, 1.0);
    const Mask at_level = Mask::simple(10.0, 10.0, 0.01, 0.01, 0.0);  // mainlobe out of view, default 0 dB
    CHECK(gamma_index(ones, at_level) == 0.0);

    // P == 2 * mask everywhere: gamma is exactly 1.
    const Mask half = Mask::simple(10.0, 10.0, 0.01, 0.01, 10.0 * std::log10(0.5));
    CHECK(gamma_index(ones, half) == doctest::Approx(1.0));

    // P below the mask: zero.
    const PatternGrid dim = constant_grid(65, 0.25);
    CHECK(gamma_index(dim, half) == 0.0);
}

TEST_CASE("uniform reference against a mask 3 dB above its sidelobes") {
    const GridSpec g(8, 12);
    std::vector<std::complex<double>> w(96, {1.0, 0.0});
    const ElementPattern iso = ElementPattern::isotropic();
    const PatternEvaluator eval(g, w, iso);
    const PatternGrid pg = eval.sample(181);
    // Mainlobe spans the first nulls (2/N in u, 2/M in v); put the bound
    // 3 dB above the worst sidelobe so nothing violates.
    const Mask probe = Mask::simple(0.0, 0.0, 4.0 / 12, 4.0 / 8, -60.0);
    const auto sll = sidelobe_level_db(pg, probe);
    REQUIRE(sll.has_value());
    const Mask mask = Mask::simple(0.0, 0.0, 4.0 / 12, 4.0 / 8, *sll + 3.0);
    CHECK(gamma_index(pg, mask) == 0.0);
}

TEST_CASE("gamma is zero iff no sampled violation") {
    const GridSpec g(4, 6);
    const Clustering c = first_cover(g, {1});
    Rng rng(11);
    const ElementPattern iso = ElementPattern::isotropic();
    for (int trial = 0; trial < 20; ++trial) {
        WeightSet ref = WeightSet::uniform(g);
        for (double& a : ref.amplitude) a = rng.real(0.2, 1.0);
        const ClusterWeights w = cluster_excitations(ref, c);
        const PatternEvaluator eval(c, w, iso);
        const PatternGrid pg = eval.sample(65);
        const Mask mask = Mask::simple(0.0, 0.0, 0.5, 0.5, -30.0 + 25.0 * rng.real01());
        const double gamma = gamma_index(pg, mask);
        bool violated = false;
        for (int iv = 0; iv < pg.resolution && !violated; ++iv)
            for (int iu = 0; iu < pg.resolution; ++iu)
                if (pg.is_visible(iu, iv) && pg.at(iu, iv) > mask.value(pg.u[iu], pg.v[iv])) {
                    violated = true;
                    break;
                }
        CHECK((gamma > 0.0) == violated);
    }
}
