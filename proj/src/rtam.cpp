#include "rta/rtam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <string>

#include "rta/cardinality.hpp"
#include "rta/parallel.hpp"
#include "rta/pattern.hpp"
#include "rta/rng.hpp"

namespace rta {

double stm(const TilePlacement& tile, const GridSpec& grid, const WeightSet& ref, std::complex<double> w_q) {
    double acc = 0.0;
    for (const Cell& c : tile.cells()) acc += std::abs(ref.weight(grid.cell_index(c)) - w_q);
    return acc;
}

std::vector<double> stm_all(const Clustering& c, const WeightSet& ref, const ClusterWeights& w) {
    std::vector<double> xi(c.tile_count(), 0.0);
    const GridSpec& grid = c.grid();
    for (int i = 0; i < grid.cell_count(); ++i) {
        const int q = c.vector()[i] - 1;
        xi[q] += std::abs(ref.weight(i) - w.weight(q));
    }
    return xi;
}

int select_tile(const Clustering& c, const std::vector<double>& stm_values) {
    int best = -1;
    for (int q = 0; q < c.tile_count(); ++q) {
        if (c.tiles()[q].order < 2) continue;
        if (best < 0 || stm_values[q] > stm_values[best]) best = q;
    }
    return best;
}

namespace {

double evaluate_gamma(const Clustering& c, const ClusterWeights& w, const ElementPattern& ep, const Mask& mask,
                      int resolution, int threads = 1) {
    PatternEvaluator eval(c, w, ep);
    return gamma_index(eval.sample(resolution, threads), mask);
}

// Count of full order-R tilings; the transfer-matrix formula for
// L-trominoes, trivially 1 for equal squares (the regular lattice).
std::uint64_t tiling_count(const GridSpec& grid, TileShape shape, int order) {
    if (shape.family == TileFamily::Square) return 1;
    const int side = shape.side_of_order(order);
    const BigUint t = count_tilings_formula(grid.rows / side, grid.cols / side);
    if (!t.fits_u64()) return std::numeric_limits<std::uint64_t>::max();
    return t.as_u64();
}

// First-uncovered-cell backtracking with the candidate order shuffled per
// cell: draws one pseudo-random full tiling. Stands in for the paper's
// global-optimization escape hatch, which is out of scope.
class RandomTiler {
public:
    RandomTiler(const CoverInstance& inst, Rng& rng) : inst_(inst), rng_(rng) {
        const GridSpec& grid = inst.grid;
        by_cell_.resize(grid.cell_count());
        for (int r = 0; r < inst.row_count(); ++r)
            for (int col : inst.row_columns[r]) by_cell_[col].push_back(r);
    }

    std::optional<std::vector<int>> draw() {
        covered_.assign(inst_.grid.cell_count(), 0);
        chosen_.clear();
        return descend(0) ? std::optional(chosen_) : std::nullopt;
    }

private:
    bool descend(int from_cell) {
        int cell = from_cell;
        while (cell < inst_.grid.cell_count() && covered_[cell]) ++cell;
        if (cell == inst_.grid.cell_count()) return true;
        std::vector<int> cands;
        for (int r : by_cell_[cell]) {
            bool free = true;
            for (int col : inst_.row_columns[r])
                if (covered_[col]) {
                    free = false;
                    break;
                }
            if (free) cands.push_back(r);
        }
        // Fisher-Yates with the shared RNG keeps draws seed-deterministic.
        for (std::size_t i = cands.size(); i > 1; --i) std::swap(cands[i - 1], cands[rng_.below(i)]);
        for (int r : cands) {
            for (int col : inst_.row_columns[r]) covered_[col] = 1;
            chosen_.push_back(r);
            if (descend(cell + 1)) return true;
            chosen_.pop_back();
            for (int col : inst_.row_columns[r]) covered_[col] = 0;
        }
        return false;
    }

    const CoverInstance& inst_;
    Rng& rng_;
    std::vector<std::vector<int>> by_cell_;
    std::vector<char> covered_;
    std::vector<int> chosen_;
};

int argmin_gamma(const std::vector<Clustering>& candidates, const Mask& mask, const WeightSet& ref,
                 const ElementPattern& ep, const RtamConfig& cfg, double* best_gamma) {
    std::vector<double> gammas(candidates.size(), 0.0);
    parallel_for(candidates.size(), cfg.threads, [&](std::size_t i) {
        const ClusterWeights w = cluster_excitations(ref, candidates[i], cfg.phase_averaging);
        gammas[i] = evaluate_gamma(candidates[i], w, ep, mask, cfg.resolution);
    });
    int best = 0;
    for (std::size_t i = 1; i < gammas.size(); ++i)
        if (gammas[i] < gammas[best]) best = static_cast<int>(i);
    *best_gamma = gammas[best];
    return best;
}

}  // namespace

InitialTilingResult initial_tiling(const GridSpec& grid, TileShape shape, const Mask& mask, const WeightSet& ref,
                                   const ElementPattern& ep, const RtamConfig& cfg) {
    int order = cfg.max_order;
    const auto verdict = check_tileability(grid, order, shape);
    if (!verdict.tileable) {
        throw InfeasibleTilingError(std::string("aperture is not fully tileable with order-") +
                                    std::to_string(order) + " tiles (" + to_string(verdict.reason) +
                                    "); change the tile order or the grid");
    }

    std::uint64_t t = tiling_count(grid, shape, order);
    if (cfg.prefer_order_increase) {
        // The cardinality-reduction branch: raise the order while the
        // aperture stays tileable and the solution space stays too big.
        while (t > cfg.enumeration_threshold && order < TileShape::kMaxOrder &&
               shape.box_of_order(order + 1) <= std::min(grid.rows, grid.cols) &&
               check_tileability(grid, order + 1, shape).tileable) {
            ++order;
            t = tiling_count(grid, shape, order);
        }
    }

    CoverInstance inst = build_cover_instance(grid, shape, {order});

    if (t <= cfg.enumeration_threshold) {
        std::vector<Clustering> candidates;
        candidates.reserve(t);
        enumerate_exact_covers(inst, EnumerationLimits{}, [&](std::span<const int> rows) {
            candidates.push_back(clustering_from_solution(inst, rows));
        });
        double best_gamma = 0.0;
        const int best = argmin_gamma(candidates, mask, ref, ep, cfg, &best_gamma);
        return {std::move(candidates[best]), best_gamma, candidates.size(), true, order};
    }

    // Sampling fallback: draw seeded random tilings, dedup, keep the best.
    Rng rng(cfg.seed);
    RandomTiler tiler(inst, rng);
    std::vector<Clustering> candidates;
    std::set<std::vector<int>> signatures;
    for (std::uint64_t s = 0; s < cfg.sampling_budget; ++s) {
        auto rows = tiler.draw();
        if (!rows) break;  // cannot happen on a tileable grid
        std::vector<int> sig = *rows;
        std::sort(sig.begin(), sig.end());
        if (!signatures.insert(std::move(sig)).second) continue;
        candidates.push_back(clustering_from_solution(inst, *rows));
    }
    double best_gamma = 0.0;
    const int best = argmin_gamma(candidates, mask, ref, ep, cfg, &best_gamma);
    return {std::move(candidates[best]), best_gamma, cfg.sampling_budget, false, order};
}

SynthesisTrace run_rtam(const GridSpec& grid, TileShape shape, const Mask& mask, const WeightSet& ref,
                        const ElementPattern& ep, const RtamConfig& cfg) {
    if (ref.size() != grid.cell_count()) throw std::invalid_argument("run_rtam: reference does not cover the grid");
    const long cells = static_cast<long>(grid.cell_count());
    if (cfg.q_max > cells / shape.base_cells())
        throw std::invalid_argument("run_rtam: q_max exceeds (M*N)/I^(1)");

    InitialTilingResult init = initial_tiling(grid, shape, mask, ref, ep, cfg);

    SynthesisTrace trace;
    trace.step1_candidates = init.candidates;
    trace.step1_exhaustive = init.exhaustive;
    trace.order_used = init.order;
    Clustering current = std::move(init.clustering);

    auto record = [&](int h, double gamma, int split_tile) {
        TraceIteration it(current);
        it.h = h;
        it.weights = cluster_excitations(ref, current, cfg.phase_averaging);
        it.stm = stm_all(current, ref, it.weights);
        it.tile_count = current.tile_count();
        it.order_histogram = current.order_histogram();
        it.gamma = gamma;
        it.split_tile = split_tile;
        it.delta_trm = 1.0 - static_cast<double>(current.tile_count()) / cells;
        trace.iterations.push_back(std::move(it));
    };

    double gamma = init.gamma;
    record(0, gamma, -1);

    const int split_growth = shape.split_factor() - 1;
    for (int h = 1;; ++h) {
        TraceIteration& prev = trace.iterations.back();
        if (gamma < cfg.convergence_gamma) break;  // mask already fulfilled
        if (current.tile_count() + split_growth > cfg.q_max) break;
        const int pick = select_tile(current, prev.stm);
        if (pick < 0) break;  // only order-1 tiles remain
        prev.split_tile = pick + 1;

        current.split_tile(pick);
        const ClusterWeights w = cluster_excitations(ref, current, cfg.phase_averaging);
        gamma = evaluate_gamma(current, w, ep, mask, cfg.resolution, cfg.threads);
        record(h, gamma, -1);
    }
    return trace;
}

}  // namespace rta
