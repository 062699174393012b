#pragma once

#include <complex>
#include <filesystem>
#include <span>
#include <vector>

#include "rta/clustering.hpp"
#include "rta/geometry.hpp"

namespace rta {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kWavenumber = 2.0 * kPi;  // k = 2*pi/lambda with lambda = 1

// Wrap an angle into (-pi, pi].
double wrap_phase(double rad);

// Per-element reference excitations w_mn = alpha_mn * exp(j*beta_mn),
// row-major storage. Amplitudes are >= 0, phases live in (-pi, pi].
struct WeightSet {
    std::vector<double> amplitude;
    std::vector<double> phase;

    int size() const { return static_cast<int>(amplitude.size()); }
    std::complex<double> weight(int idx) const { return std::polar(amplitude[idx], phase[idx]); }

    static WeightSet uniform(const GridSpec& grid);

    // Separable raised-cosine-power taper: along each axis
    // t(chi) = pedestal + (1 - pedestal) * cos(pi*chi/2)^power with
    // chi in [-1, 1] across the aperture; amplitude = t_row * t_col.
    static WeightSet raised_cosine(const GridSpec& grid, double power = 2.0, double pedestal = 0.2);

    // Overwrite phases with the linear steering front toward (us, vs).
    void steer(const GridSpec& grid, double us, double vs);
};

// beta_mn = -k (x_mn us + y_mn vs), wrapped. (us, vs) must lie inside the
// unit disc.
std::vector<double> steering_phases(const GridSpec& grid, double us, double vs);

enum class PhaseAveraging {
    Arithmetic,  // literal per-cluster mean of wrapped phases
    Circular,    // arg of the summed unit phasors
};

// Per-cluster weights w_q = alpha_q * exp(j*beta_q).
struct ClusterWeights {
    std::vector<double> amplitude;
    std::vector<double> phase;

    int size() const { return static_cast<int>(amplitude.size()); }
    std::complex<double> weight(int q) const { return std::polar(amplitude[q], phase[q]); }
};

// Excitation matching: alpha_q is the mean member amplitude, beta_q the
// mean member phase (arithmetic by default; the circular variant is the
// wrap-robust alternative).
ClusterWeights cluster_excitations(const WeightSet& ref, const Clustering& c,
                                   PhaseAveraging averaging = PhaseAveraging::Arithmetic);

// Per-element effective weights w_{c_mn} of a clustered layout.
std::vector<std::complex<double>> effective_element_weights(const Clustering& c, const ClusterWeights& w);

// Matching residual sum |w_ref_mn - w_{c_mn}|^2 over all elements.
double excitation_residual(const WeightSet& ref, const Clustering& c, const ClusterWeights& w);

// CSV with header "m,n,amplitude,phase_deg", 1-based m,n, row-major.
void write_excitations_csv(const GridSpec& grid, const WeightSet& w, const std::filesystem::path& path);
WeightSet read_excitations_csv(const GridSpec& grid, const std::filesystem::path& path);

}  // namespace rta
