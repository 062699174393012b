#include "rta/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace rta {

std::optional<double> sidelobe_level_db(const PatternGrid& p, const Mask& mask) {
    double worst = -1.0;
    for (int iv = 0; iv < p.resolution; ++iv) {
        for (int iu = 0; iu < p.resolution; ++iu) {
            if (!p.is_visible(iu, iv)) continue;
            if (mask.in_mainlobe(p.u[iu], p.v[iv])) continue;
            worst = std::max(worst, p.at(iu, iv));
        }
    }
    if (worst <= 0.0) return std::nullopt;
    return 10.0 * std::log10(worst);
}

namespace {

// Refine the half-power crossing between cut positions a (power above
// half) and b (below); returns the crossing coordinate along the cut.
double bisect_crossing(const std::function<double(double)>& cut_power, double half, double a, double b) {
    for (int it = 0; it < 60 && std::abs(b - a) > 1e-12; ++it) {
        const double mid = 0.5 * (a + b);
        (cut_power(mid) >= half ? a : b) = mid;
    }
    return 0.5 * (a + b);
}

std::optional<double> hpbw_along(const std::function<double(double)>& cut_power, double peak_pos, double step) {
    const double peak_power = cut_power(peak_pos);
    if (peak_power <= 0.0) return std::nullopt;
    const double half = 0.5 * peak_power;

    // March outward from the peak to bracket the first drop below half.
    auto bracket = [&](double dir) -> std::optional<double> {
        double prev = peak_pos;
        for (double x = peak_pos + dir * step;; x += dir * step) {
            if (std::abs(x) > 1.0) return std::nullopt;  // fell off the visible cut
            if (cut_power(x) < half) return bisect_crossing(cut_power, half, prev, x);
            prev = x;
        }
    };
    const auto hi = bracket(+1.0);
    const auto lo = bracket(-1.0);
    if (!hi || !lo) return std::nullopt;
    // Width in polar angle, degrees.
    return (std::asin(std::clamp(*hi, -1.0, 1.0)) - std::asin(std::clamp(*lo, -1.0, 1.0))) * 180.0 / kPi;
}

}  // namespace

std::optional<double> hpbw_deg(const PatternEvaluator& eval, const PatternGrid& p, bool azimuth) {
    const double fixed = azimuth ? p.peak_v : p.peak_u;
    const double peak_pos = azimuth ? p.peak_u : p.peak_v;
    auto cut_power = [&](double x) {
        const double u = azimuth ? x : fixed;
        const double v = azimuth ? fixed : x;
        if (u * u + v * v > 1.0) return 0.0;
        return eval.power(u, v);
    };
    return hpbw_along(cut_power, peak_pos, p.step());
}

PatternMetrics pattern_metrics(const PatternEvaluator& eval, const PatternGrid& p, const Mask& mask) {
    PatternMetrics m;
    m.sll_db = sidelobe_level_db(p, mask);
    m.directivity_db = 10.0 * std::log10(eval.directivity(p));
    m.hpbw_az_deg = hpbw_deg(eval, p, true);
    m.hpbw_el_deg = hpbw_deg(eval, p, false);
    m.gamma = gamma_index(p, mask);
    m.peak_in_mainlobe = mask.in_mainlobe(p.peak_u, p.peak_v);
    return m;
}

}  // namespace rta
