#include "rta/weights.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rta {

double wrap_phase(double rad) {
    double w = std::remainder(rad, 2.0 * kPi);
    if (w <= -kPi) w = kPi;  // remainder returns [-pi, pi]; fold the open end
    return w;
}

WeightSet WeightSet::uniform(const GridSpec& grid) {
    WeightSet w;
    w.amplitude.assign(static_cast<std::size_t>(grid.cell_count()), 1.0);
    w.phase.assign(static_cast<std::size_t>(grid.cell_count()), 0.0);
    return w;
}

WeightSet WeightSet::raised_cosine(const GridSpec& grid, double power, double pedestal) {
    if (power < 0.0 || pedestal < 0.0 || pedestal > 1.0)
        throw std::invalid_argument("raised_cosine: power must be >= 0 and pedestal in [0, 1]");
    auto axis_taper = [&](int i, int n) {
        const double chi = n > 1 ? (2.0 * i / (n - 1) - 1.0) : 0.0;
        return pedestal + (1.0 - pedestal) * std::pow(std::cos(kPi * chi / 2.0), power);
    };
    WeightSet w;
    w.amplitude.reserve(grid.cell_count());
    w.phase.assign(static_cast<std::size_t>(grid.cell_count()), 0.0);
    for (int m = 0; m < grid.rows; ++m) {
        const double tm = axis_taper(m, grid.rows);
        for (int n = 0; n < grid.cols; ++n) w.amplitude.push_back(tm * axis_taper(n, grid.cols));
    }
    return w;
}

void WeightSet::steer(const GridSpec& grid, double us, double vs) {
    phase = steering_phases(grid, us, vs);
}

std::vector<double> steering_phases(const GridSpec& grid, double us, double vs) {
    if (us * us + vs * vs > 1.0)
        throw std::invalid_argument("steering_phases: (us, vs) must lie inside the unit disc");
    std::vector<double> phases;
    phases.reserve(grid.cell_count());
    for (int m = 0; m < grid.rows; ++m)
        for (int n = 0; n < grid.cols; ++n)
            phases.push_back(wrap_phase(-kWavenumber * (grid.x(n) * us + grid.y(m) * vs)));
    return phases;
}

ClusterWeights cluster_excitations(const WeightSet& ref, const Clustering& c, PhaseAveraging averaging) {
    const GridSpec& grid = c.grid();
    if (ref.size() != grid.cell_count())
        throw std::invalid_argument("cluster_excitations: reference does not cover the grid");
    ClusterWeights w;
    w.amplitude.resize(c.tile_count(), 0.0);
    w.phase.resize(c.tile_count(), 0.0);
    std::vector<std::complex<double>> phasor(c.tile_count(), {0.0, 0.0});
    std::vector<int> members(c.tile_count(), 0);
    for (int i = 0; i < grid.cell_count(); ++i) {
        const int q = c.vector()[i] - 1;
        if (q < 0) throw std::logic_error("cluster_excitations: clustering has a gap");
        w.amplitude[q] += ref.amplitude[i];
        w.phase[q] += ref.phase[i];
        phasor[q] += std::polar(1.0, ref.phase[i]);
        ++members[q];
    }
    for (int q = 0; q < c.tile_count(); ++q) {
        if (members[q] == 0) throw std::logic_error("cluster_excitations: empty cluster");
        w.amplitude[q] /= members[q];
        if (averaging == PhaseAveraging::Arithmetic) {
            w.phase[q] /= members[q];
        } else {
            w.phase[q] = std::abs(phasor[q]) > 0.0 ? std::arg(phasor[q]) : 0.0;
        }
    }
    return w;
}

std::vector<std::complex<double>> effective_element_weights(const Clustering& c, const ClusterWeights& w) {
    if (w.size() != c.tile_count())
        throw std::invalid_argument("effective_element_weights: weight count != tile count");
    std::vector<std::complex<double>> out;
    out.reserve(c.vector().size());
    for (int q1 : c.vector()) {
        if (q1 <= 0) throw std::logic_error("effective_element_weights: clustering has a gap");
        out.push_back(w.weight(q1 - 1));
    }
    return out;
}

double excitation_residual(const WeightSet& ref, const Clustering& c, const ClusterWeights& w) {
    const auto eff = effective_element_weights(c, w);
    double acc = 0.0;
    for (int i = 0; i < ref.size(); ++i) {
        const std::complex<double> d = ref.weight(i) - eff[i];
        acc += std::norm(d);
    }
    return acc;
}

void write_excitations_csv(const GridSpec& grid, const WeightSet& w, const std::filesystem::path& path) {
    if (w.size() != grid.cell_count())
        throw std::invalid_argument("write_excitations_csv: weight set does not match grid");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "m,n,amplitude,phase_deg\n";
    char buf[96];
    for (int m = 0; m < grid.rows; ++m) {
        for (int n = 0; n < grid.cols; ++n) {
            const int i = m * grid.cols + n;
            std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g\n", m + 1, n + 1, w.amplitude[i],
                          w.phase[i] * 180.0 / kPi);
            out << buf;
        }
    }
}

WeightSet read_excitations_csv(const GridSpec& grid, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty excitation file " + path.string());
    WeightSet w;
    w.amplitude.assign(static_cast<std::size_t>(grid.cell_count()), -1.0);
    w.phase.assign(static_cast<std::size_t>(grid.cell_count()), 0.0);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int m = 0, n = 0;
        double amp = 0.0, phase_deg = 0.0;
        if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &m, &n, &amp, &phase_deg) != 4)
            throw std::runtime_error("malformed excitation row: " + line);
        Cell c{m - 1, n - 1};
        if (!grid.contains(c)) throw std::runtime_error("excitation cell out of bounds: " + line);
        if (amp < 0.0) throw std::runtime_error("negative amplitude: " + line);
        const int i = grid.cell_index(c);
        w.amplitude[i] = amp;
        w.phase[i] = wrap_phase(phase_deg * kPi / 180.0);
    }
    for (double a : w.amplitude) {
        if (a < 0.0) throw std::runtime_error("excitation file misses elements: " + path.string());
    }
    return w;
}

}  // namespace rta
