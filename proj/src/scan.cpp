#include "rta/scan.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rta/metrics.hpp"
#include "rta/parallel.hpp"
#include "rta/pattern.hpp"

namespace rta {

namespace {

double quiet_nan() {
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

double ScanResult::sll_max(double theta_query_deg) const {
    double best = quiet_nan();
    for (std::size_t it = 0; it < theta_s_deg.size(); ++it) {
        if (theta_s_deg[it] > theta_query_deg + 1e-12) continue;
        for (std::size_t ip = 0; ip < phi_s_deg.size(); ++ip) {
            const double s = at(static_cast<int>(it), static_cast<int>(ip));
            if (std::isnan(s)) continue;
            if (std::isnan(best) || s > best) best = s;
        }
    }
    return best;
}

double ScanResult::sll_avg(double theta_query_deg) const {
    double sum = 0.0;
    int n = 0;
    for (std::size_t it = 0; it < theta_s_deg.size(); ++it) {
        if (theta_s_deg[it] > theta_query_deg + 1e-12) continue;
        for (std::size_t ip = 0; ip < phi_s_deg.size(); ++ip) {
            const double s = at(static_cast<int>(it), static_cast<int>(ip));
            if (std::isnan(s)) continue;
            sum += s;
            ++n;
        }
    }
    return n > 0 ? sum / n : quiet_nan();
}

ScanResult scan_sll_map(const Clustering& c, const std::vector<double>& ref_amplitude, const ElementPattern& ep,
                        const Mask& mask, const ScanGrid& scan, int resolution, int threads,
                        PhaseAveraging averaging) {
    const GridSpec& grid = c.grid();
    if (static_cast<int>(ref_amplitude.size()) != grid.cell_count())
        throw std::invalid_argument("scan_sll_map: amplitude count != element count");
    if (scan.theta_steps < 1 || scan.phi_steps < 1)
        throw std::invalid_argument("scan_sll_map: step counts must be >= 1");

    ScanResult res;
    res.theta_s_deg.resize(scan.theta_steps);
    for (int i = 0; i < scan.theta_steps; ++i)
        res.theta_s_deg[i] = scan.theta_steps > 1 ? scan.theta_max_deg * i / (scan.theta_steps - 1) : 0.0;
    res.phi_s_deg.resize(scan.phi_steps);
    for (int i = 0; i < scan.phi_steps; ++i) res.phi_s_deg[i] = 360.0 * i / scan.phi_steps;
    res.sll_db.assign(static_cast<std::size_t>(scan.theta_steps) * scan.phi_steps, quiet_nan());

    const double deg = kPi / 180.0;
    parallel_for(res.sll_db.size(), threads, [&](std::size_t idx) {
        const int it = static_cast<int>(idx) / scan.phi_steps;
        const int ip = static_cast<int>(idx) % scan.phi_steps;
        const double theta = (scan.theta0_deg + res.theta_s_deg[it]) * deg;
        const double phi = (scan.phi0_deg + res.phi_s_deg[ip]) * deg;
        const double us = std::sin(theta) * std::cos(phi);
        const double vs = std::sin(theta) * std::sin(phi);
        if (us * us + vs * vs > 1.0) return;  // outside visible space, leave NaN

        WeightSet ref;
        ref.amplitude = ref_amplitude;
        ref.phase = steering_phases(grid, us, vs);
        const ClusterWeights w = cluster_excitations(ref, c, averaging);
        const PatternEvaluator eval(c, w, ep);
        const PatternGrid pg = eval.sample(resolution, 1);
        const auto sll = sidelobe_level_db(pg, mask.recentered(us, vs));
        if (sll) res.sll_db[idx] = *sll;
    });
    return res;
}

}  // namespace rta
