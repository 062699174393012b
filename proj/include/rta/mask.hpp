#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace rta {

// One sidelobe-bound region in (u, v) space, with a linear power level.
struct MaskRegion {
    enum class Shape { Rect, Annulus } shape = Shape::Rect;
    // Rect bounds.
    double u_min = 0.0, u_max = 0.0, v_min = 0.0, v_max = 0.0;
    // Annulus radii, centered on the mask center.
    double r_min = 0.0, r_max = 0.0;
    double level = 1.0;  // linear, in (0, 1]

    bool contains(double u, double v, double cu, double cv) const;
};

// Piecewise-constant upper power mask over the visible region: the
// mainlobe rectangle sits at level 1 (0 dB), then the first matching
// region wins, then the default level.
class Mask {
public:
    Mask(double center_u, double center_v, double bw_u, double bw_v, std::vector<MaskRegion> regions,
         double default_level);

    double value(double u, double v) const;
    bool in_mainlobe(double u, double v) const;

    double center_u() const { return center_u_; }
    double center_v() const { return center_v_; }
    double bw_u() const { return bw_u_; }
    double bw_v() const { return bw_v_; }

    // Same mask with the mainlobe (and annuli) recentered; used when the
    // beam is scanned away from the nominal pointing direction.
    Mask recentered(double u0, double v0) const;

    // Mainlobe at (u0, v0) with a single flat sidelobe bound everywhere else.
    static Mask simple(double u0, double v0, double bw_u, double bw_v, double sll_db);

    static Mask from_json_file(const std::filesystem::path& path);
    static Mask from_json_text(const std::string& text);

private:
    double center_u_, center_v_, bw_u_, bw_v_;
    std::vector<MaskRegion> regions_;
    double default_level_;
};

}  // namespace rta
