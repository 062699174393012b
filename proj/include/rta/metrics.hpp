#pragma once

#include <optional>

#include "rta/mask.hpp"
#include "rta/pattern.hpp"

namespace rta {

// Standard pattern descriptors. HPBW entries are empty when a cut has no
// -3 dB crossing; SLL is empty when every visible sample sits inside the
// mask mainlobe.
struct PatternMetrics {
    std::optional<double> sll_db;
    double directivity_db = 0.0;
    std::optional<double> hpbw_az_deg;
    std::optional<double> hpbw_el_deg;
    double gamma = 0.0;
    bool peak_in_mainlobe = false;
};

// Sidelobe level: max sampled power outside the mask mainlobe rectangle,
// in dB relative to the pattern peak.
std::optional<double> sidelobe_level_db(const PatternGrid& p, const Mask& mask);

// Half-power beamwidth along a principal cut through the beam peak
// (azimuth: v fixed at the peak, u varies; elevation: the converse).
// Crossings are refined by bisection on the continuous pattern and the
// width is reported in degrees of the polar angle.
std::optional<double> hpbw_deg(const PatternEvaluator& eval, const PatternGrid& p, bool azimuth);

PatternMetrics pattern_metrics(const PatternEvaluator& eval, const PatternGrid& p, const Mask& mask);

}  // namespace rta
