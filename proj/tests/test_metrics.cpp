#include <doctest.h>

#include <cmath>
#include <complex>

#include "rta/metrics.hpp"

using namespace rta;

namespace {

PatternEvaluator uniform_array(const GridSpec& g) {
    static const ElementPattern iso = ElementPattern::isotropic();
    return PatternEvaluator(g, std::vector<std::complex<double>>(g.cell_count(), {1.0, 0.0}), iso);
}

}  // namespace

TEST_CASE("single isotropic element reports 0 dB exactly") {
    const PatternEvaluator eval = uniform_array(GridSpec(1, 1));
    const PatternGrid pg = eval.sample(101);
    CHECK(eval.directivity(pg) == 1.0);
    const Mask mask = Mask::simple(0.0, 0.0, 0.5, 0.5, -20.0);
    CHECK(pattern_metrics(eval, pg, mask).directivity_db == 0.0);
}

TEST_CASE("uniform broadside directivity approaches pi * M * N") {
    for (auto [m, n] : {std::pair{4, 4}, {8, 8}, {12, 12}, {4, 12}, {8, 12}}) {
        const PatternEvaluator eval = uniform_array(GridSpec(m, n));
        const PatternGrid pg = eval.sample(301);
        const double d = eval.directivity(pg);
        const double expect = kPi * m * n;
        INFO("grid ", m, "x", n, " D=", d, " piMN=", expect);
        CHECK(std::abs(d - expect) / expect < 0.05);
    }
}

TEST_CASE("directivity integral agrees with an independent quadrature") {
    // Midpoint samples, offset from the grid nodes, over the same flat
    // disc measure.
    const GridSpec g(8, 8);
    const PatternEvaluator eval = uniform_array(g);
    const PatternGrid pg = eval.sample(301);
    const double from_grid = eval.directivity(pg);

    const int n = 400;
    const double h = 2.0 / n;
    double sum = 0.0, peak = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double u = -1.0 + (i + 0.5) * h;
            const double v = -1.0 + (j + 0.5) * h;
            if (u * u + v * v > 1.0) continue;
            const double p = eval.power(u, v);
            sum += p;
            peak = std::max(peak, p);
        }
    }
    const double reference = 4.0 * kPi * peak / (sum * h * h);
    CHECK(from_grid == doctest::Approx(reference).epsilon(0.01));
}

TEST_CASE("uniform line hpbw matches the classic width") {
    // 12 elements along x at half wavelength: full -3 dB width is about
    // 0.886 * lambda / (N d) radians.
    const PatternEvaluator eval = uniform_array(GridSpec(1, 12));
    const PatternGrid pg = eval.sample(301);
    const auto az = hpbw_deg(eval, pg, true);
    REQUIRE(az.has_value());
    const double expect_deg = 0.886 * (2.0 / 12.0) * 180.0 / kPi;
    CHECK(std::abs(*az - expect_deg) / expect_deg < 0.03);
    // The elevation cut of a single-row array never drops 3 dB.
    CHECK_FALSE(hpbw_deg(eval, pg, false).has_value());
}

TEST_CASE("steered peak lands within one grid step") {
    const GridSpec g(8, 8);
    WeightSet ref = WeightSet::uniform(g);
    const double us = 0.3, vs = -0.2;
    ref.steer(g, us, vs);
    std::vector<std::complex<double>> w;
    for (int i = 0; i < ref.size(); ++i) w.push_back(ref.weight(i));
    static const ElementPattern iso = ElementPattern::isotropic();
    const PatternEvaluator eval(g, w, iso);
    const PatternGrid pg = eval.sample(201);
    CHECK(std::abs(pg.peak_u - us) <= pg.step() + 1e-12);
    CHECK(std::abs(pg.peak_v - vs) <= pg.step() + 1e-12);
}

TEST_CASE("uniform array sidelobe level matches line-array theory") {
    // First sidelobe of a uniform aperture sits near -13.26 dB.
    const PatternEvaluator eval = uniform_array(GridSpec(8, 12));
    const PatternGrid pg = eval.sample(301);
    const Mask mask = Mask::simple(0.0, 0.0, 4.0 / 12.0, 4.0 / 8.0, -30.0);
    const auto sll = sidelobe_level_db(pg, mask);
    REQUIRE(sll.has_value());
    CHECK(*sll == doctest::Approx(-13.26).epsilon(0.03));
}

TEST_CASE("sll is unavailable when the mainlobe covers the entire disc") {
    const PatternEvaluator eval = uniform_array(GridSpec(4, 4));
    const PatternGrid pg = eval.sample(101);
    const Mask mask = Mask::simple(0.0, 0.0, 4.0, 4.0, -20.0);
    CHECK_FALSE(sidelobe_level_db(pg, mask).has_value());
}

TEST_CASE("assembled metrics") {
    const PatternEvaluator eval = uniform_array(GridSpec(8, 12));
    const PatternGrid pg = eval.sample(201);
    const Mask mask = Mask::simple(0.0, 0.0, 4.0 / 12.0, 4.0 / 8.0, -12.0);
    const PatternMetrics m = pattern_metrics(eval, pg, mask);
    CHECK(m.peak_in_mainlobe);
    REQUIRE(m.sll_db.has_value());
    REQUIRE(m.hpbw_az_deg.has_value());
    REQUIRE(m.hpbw_el_deg.has_value());
    CHECK(*m.hpbw_az_deg < *m.hpbw_el_deg);  // 12 columns beat 8 rows in u
    CHECK(m.gamma == doctest::Approx(gamma_index(pg, mask)));
    CHECK(m.directivity_db > 20.0);
}
