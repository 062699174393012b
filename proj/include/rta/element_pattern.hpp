#pragma once

#include <complex>
#include <filesystem>
#include <vector>

namespace rta {

// Embedded/active element pattern. Isotropic returns 1 everywhere;
// Tabulated bilinearly interpolates samples on a (theta, phi) grid that
// must cover theta in [0, 90] deg and phi in [0, 360) deg (phi wraps).
class ElementPattern {
public:
    static ElementPattern isotropic();

    // Samples are row-major over (theta, phi). Phases in radians.
    static ElementPattern tabulated(std::vector<double> theta_deg, std::vector<double> phi_deg,
                                    std::vector<double> magnitude, std::vector<double> phase_rad = {});

    // CSV "theta_deg,phi_deg,magnitude[,phase_deg]"; samples must form a
    // complete grid.
    static ElementPattern from_csv(const std::filesystem::path& path);

    bool is_isotropic() const { return iso_; }

    // Complex element response toward the visible direction (u, v).
    std::complex<double> value(double u, double v) const;

private:
    ElementPattern() = default;

    bool iso_ = true;
    std::vector<double> theta_;  // ascending, degrees
    std::vector<double> phi_;    // ascending, degrees, [0, 360)
    std::vector<double> mag_;    // theta-major
    std::vector<double> phase_;  // empty = magnitude only
};

}  // namespace rta
