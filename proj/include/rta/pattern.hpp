#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rta/clustering.hpp"
#include "rta/element_pattern.hpp"
#include "rta/geometry.hpp"
#include "rta/mask.hpp"
#include "rta/weights.hpp"

namespace rta {

// Space factor of one tile: sum of member-element phasors with element
// coordinates taken relative to the tile phase center (the centroid of
// the member positions).
std::complex<double> tile_space_factor(const TilePlacement& tile, const GridSpec& grid, double u, double v);

// Array factor in cluster form, sum_q w_q S_q(u,v) exp(jk(x_q u + y_q v));
// algebraically equal to the element-level sum below.
std::complex<double> array_factor_tiles(const Clustering& c, const ClusterWeights& w, double u, double v);

// Element-level array factor, sum_mn w_mn exp(jk(x_mn u + y_mn v)).
std::complex<double> array_factor_elements(const GridSpec& grid, std::span<const std::complex<double>> weights,
                                           double u, double v);

// Power pattern sampled on a uniform (u, v) grid, peak-normalized over
// the visible disc.
struct PatternGrid {
    int resolution = 0;
    std::vector<double> u;        // axis, size = resolution
    std::vector<double> v;        // axis, size = resolution
    std::vector<double> power;    // normalized, row-major [iv][iu]
    std::vector<char> visible;    // u^2 + v^2 <= 1
    double peak_u = 0.0, peak_v = 0.0;
    double raw_peak = 0.0;  // pre-normalization peak value

    double at(int iu, int iv) const { return power[static_cast<std::size_t>(iv) * resolution + iu]; }
    bool is_visible(int iu, int iv) const { return visible[static_cast<std::size_t>(iv) * resolution + iu] != 0; }
    double step() const { return 2.0 / (resolution - 1); }
};

// Bundles a fixed aperture + per-element weights + element pattern and
// evaluates the power pattern pointwise or over grids. Read-only once
// built, so concurrent evaluation over disjoint sample blocks is safe.
class PatternEvaluator {
public:
    PatternEvaluator(const GridSpec& grid, std::vector<std::complex<double>> element_weights,
                     const ElementPattern& ep);

    // From a clustered layout (per-tile weights expanded to elements).
    PatternEvaluator(const Clustering& c, const ClusterWeights& w, const ElementPattern& ep);

    const GridSpec& grid() const { return grid_; }

    std::complex<double> array_factor(double u, double v) const;
    double power(double u, double v) const;  // |e(u,v) * A(u,v)|^2, unnormalized

    // Sample over [-1, 1]^2 with `resolution` points per axis (>= 64) and
    // normalize to the visible peak. The inner sums factor per row of the
    // aperture, so a full grid costs O(M (N + res) res) instead of
    // O(M N res^2).
    PatternGrid sample(int resolution, int threads = 1) const;

    // Directivity 4*pi*Pmax / integral of P over the visible disc (flat
    // (u,v) measure). A constant pattern is isotropic by convention and
    // reports exactly 1.
    double directivity(const PatternGrid& grid) const;

private:
    GridSpec grid_;
    std::vector<std::complex<double>> weights_;
    const ElementPattern* ep_;
};

// Mask-matching index: Riemann sum over visible grid samples of
// (P - mask)+ divided by the mask integral. Zero iff no sampled visible
// point exceeds the mask (equality does not count as a violation).
double gamma_index(const PatternGrid& p, const Mask& mask);

}  // namespace rta
