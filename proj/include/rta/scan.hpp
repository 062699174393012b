#pragma once

#include <vector>

#include "rta/clustering.hpp"
#include "rta/element_pattern.hpp"
#include "rta/mask.hpp"
#include "rta/weights.hpp"

namespace rta {

// Scan cone around the nominal pointing direction (theta0, phi0):
// theta_s in [0, theta_max] over theta_steps samples (0 included),
// phi_s in [0, 360) over phi_steps samples.
struct ScanGrid {
    double theta0_deg = 0.0;
    double phi0_deg = 0.0;
    double theta_max_deg = 30.0;
    int theta_steps = 7;
    int phi_steps = 24;
};

struct ScanResult {
    std::vector<double> theta_s_deg;  // size theta_steps
    std::vector<double> phi_s_deg;    // size phi_steps
    std::vector<double> sll_db;       // row-major [theta][phi]; NaN where SLL undefined

    double at(int it, int ip) const { return sll_db[static_cast<std::size_t>(it) * phi_s_deg.size() + ip]; }

    // Max / average SLL over the sub-cone theta_s <= theta_query.
    double sll_max(double theta_query_deg) const;
    double sll_avg(double theta_query_deg) const;
};

// For each scan offset: rebuild the reference phases as the steering
// front toward (theta0+theta_s, phi0+phi_s), recluster the phases by
// excitation matching over the fixed layout, and measure the SLL against
// the mask mainlobe recentered at the scanned direction.
ScanResult scan_sll_map(const Clustering& c, const std::vector<double>& ref_amplitude, const ElementPattern& ep,
                        const Mask& mask, const ScanGrid& scan, int resolution, int threads = 1,
                        PhaseAveraging averaging = PhaseAveraging::Arithmetic);

}  // namespace rta
