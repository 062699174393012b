#include "rta/pattern.hpp"

#include <cmath>
#include <stdexcept>

#include "rta/parallel.hpp"

namespace rta {

std::complex<double> tile_space_factor(const TilePlacement& tile, const GridSpec& grid, double u, double v) {
    const auto [xq, yq] = tile.centroid(grid);
    std::complex<double> acc{0.0, 0.0};
    for (const Cell& c : tile.cells()) {
        const double phase = kWavenumber * ((grid.x(c.col) - xq) * u + (grid.y(c.row) - yq) * v);
        acc += std::polar(1.0, phase);
    }
    return acc;
}

std::complex<double> array_factor_tiles(const Clustering& c, const ClusterWeights& w, double u, double v) {
    if (w.size() != c.tile_count()) throw std::invalid_argument("array_factor_tiles: weight count != tile count");
    std::complex<double> acc{0.0, 0.0};
    for (int q = 0; q < c.tile_count(); ++q) {
        const TilePlacement& tile = c.tiles()[q];
        const auto [xq, yq] = tile.centroid(c.grid());
        const std::complex<double> shift = std::polar(1.0, kWavenumber * (xq * u + yq * v));
        acc += w.weight(q) * tile_space_factor(tile, c.grid(), u, v) * shift;
    }
    return acc;
}

std::complex<double> array_factor_elements(const GridSpec& grid, std::span<const std::complex<double>> weights,
                                           double u, double v) {
    if (static_cast<int>(weights.size()) != grid.cell_count())
        throw std::invalid_argument("array_factor_elements: weight count != element count");
    std::complex<double> acc{0.0, 0.0};
    for (int m = 0; m < grid.rows; ++m) {
        for (int n = 0; n < grid.cols; ++n) {
            const double phase = kWavenumber * (grid.x(n) * u + grid.y(m) * v);
            acc += weights[static_cast<std::size_t>(m) * grid.cols + n] * std::polar(1.0, phase);
        }
    }
    return acc;
}

PatternEvaluator::PatternEvaluator(const GridSpec& grid, std::vector<std::complex<double>> element_weights,
                                   const ElementPattern& ep)
    : grid_(grid), weights_(std::move(element_weights)), ep_(&ep) {
    if (static_cast<int>(weights_.size()) != grid_.cell_count())
        throw std::invalid_argument("PatternEvaluator: weight count != element count");
    double total = 0.0;
    for (const auto& w : weights_) total += std::abs(w);
    if (total <= 0.0) throw std::invalid_argument("PatternEvaluator: all-zero weights cannot be normalized");
}

PatternEvaluator::PatternEvaluator(const Clustering& c, const ClusterWeights& w, const ElementPattern& ep)
    : PatternEvaluator(c.grid(), effective_element_weights(c, w), ep) {}

std::complex<double> PatternEvaluator::array_factor(double u, double v) const {
    return array_factor_elements(grid_, weights_, u, v);
}

double PatternEvaluator::power(double u, double v) const {
    return std::norm(ep_->value(u, v) * array_factor(u, v));
}

PatternGrid PatternEvaluator::sample(int resolution, int threads) const {
    if (resolution < 64) throw std::invalid_argument("PatternEvaluator::sample: resolution must be >= 64");
    PatternGrid g;
    g.resolution = resolution;
    g.u.resize(resolution);
    g.v.resize(resolution);
    for (int i = 0; i < resolution; ++i) {
        g.u[i] = -1.0 + 2.0 * i / (resolution - 1);
        g.v[i] = g.u[i];
    }
    const std::size_t total = static_cast<std::size_t>(resolution) * resolution;
    g.power.assign(total, 0.0);
    g.visible.assign(total, 0);

    // Per-axis phasor tables; e^{jk x_n u} and e^{jk y_m v}.
    const int M = grid_.rows, N = grid_.cols;
    std::vector<std::complex<double>> ex(static_cast<std::size_t>(N) * resolution);
    std::vector<std::complex<double>> ey(static_cast<std::size_t>(M) * resolution);
    for (int n = 0; n < N; ++n)
        for (int i = 0; i < resolution; ++i)
            ex[static_cast<std::size_t>(n) * resolution + i] = std::polar(1.0, kWavenumber * grid_.x(n) * g.u[i]);
    for (int m = 0; m < M; ++m)
        for (int i = 0; i < resolution; ++i)
            ey[static_cast<std::size_t>(m) * resolution + i] = std::polar(1.0, kWavenumber * grid_.y(m) * g.v[i]);

    // Row transforms: row_ft[m][iu] = sum_n w_mn e^{jk x_n u}.
    std::vector<std::complex<double>> row_ft(static_cast<std::size_t>(M) * resolution);
    parallel_for(M, threads, [&](std::size_t m) {
        for (int i = 0; i < resolution; ++i) {
            std::complex<double> acc{0.0, 0.0};
            for (int n = 0; n < N; ++n)
                acc += weights_[m * N + n] * ex[static_cast<std::size_t>(n) * resolution + i];
            row_ft[m * resolution + i] = acc;
        }
    });

    parallel_for(resolution, threads, [&](std::size_t iv) {
        const double vv = g.v[iv];
        for (int iu = 0; iu < resolution; ++iu) {
            const double uu = g.u[iu];
            std::complex<double> acc{0.0, 0.0};
            for (int m = 0; m < M; ++m)
                acc += row_ft[static_cast<std::size_t>(m) * resolution + iu] *
                       ey[static_cast<std::size_t>(m) * resolution + iv];
            double p = 0.0;
            const bool vis = uu * uu + vv * vv <= 1.0;
            if (vis) {
                const std::complex<double> e = ep_->value(uu, vv);
                p = std::norm(e * acc);
            }
            g.power[iv * resolution + iu] = p;
            g.visible[iv * resolution + iu] = vis ? 1 : 0;
        }
    });

    double peak = 0.0;
    int peak_iu = 0, peak_iv = 0;
    for (int iv = 0; iv < resolution; ++iv) {
        for (int iu = 0; iu < resolution; ++iu) {
            const std::size_t idx = static_cast<std::size_t>(iv) * resolution + iu;
            if (g.visible[idx] && g.power[idx] > peak) {
                peak = g.power[idx];
                peak_iu = iu;
                peak_iv = iv;
            }
        }
    }
    if (peak <= 0.0) throw std::runtime_error("PatternEvaluator::sample: degenerate pattern, peak is zero");
    for (double& p : g.power) p /= peak;
    g.raw_peak = peak;
    g.peak_u = g.u[peak_iu];
    g.peak_v = g.v[peak_iv];
    return g;
}

double PatternEvaluator::directivity(const PatternGrid& g) const {
    double sum = 0.0;
    double pmin = 1.0, pmax = 0.0;
    // Accumulate per grid row; row order is fixed, so the reduction is
    // deterministic regardless of threading elsewhere.
    for (int iv = 0; iv < g.resolution; ++iv) {
        double row = 0.0;
        for (int iu = 0; iu < g.resolution; ++iu) {
            if (!g.is_visible(iu, iv)) continue;
            const double p = g.at(iu, iv);
            row += p;
            pmin = std::min(pmin, p);
            pmax = std::max(pmax, p);
        }
        sum += row;
    }
    if (pmax - pmin <= 1e-12 * pmax) return 1.0;  // constant pattern: isotropic radiator
    const double h = g.step();
    return 4.0 * kPi / (sum * h * h);
}

double gamma_index(const PatternGrid& p, const Mask& mask) {
    double violation = 0.0;
    double mask_mass = 0.0;
    for (int iv = 0; iv < p.resolution; ++iv) {
        double vrow = 0.0, mrow = 0.0;
        for (int iu = 0; iu < p.resolution; ++iu) {
            if (!p.is_visible(iu, iv)) continue;
            const double psi = mask.value(p.u[iu], p.v[iv]);
            const double excess = p.at(iu, iv) - psi;
            if (excess > 0.0) vrow += excess;
            mrow += psi;
        }
        violation += vrow;
        mask_mass += mrow;
    }
    return violation / mask_mass;
}

}  // namespace rta
