#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rta/clustering.hpp"
#include "rta/element_pattern.hpp"
#include "rta/exact_cover.hpp"
#include "rta/geometry.hpp"
#include "rta/mask.hpp"
#include "rta/weights.hpp"

namespace rta {

struct InfeasibleTilingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Knobs of the split-based synthesis loop.
struct RtamConfig {
    int max_order = 2;  // R
    int q_max = 0;
    std::uint64_t enumeration_threshold = 100000;  // exhaustive step-1 limit on T
    std::uint64_t sampling_budget = 10000;         // random tilings when T exceeds the threshold
    std::uint64_t seed = 0;
    int resolution = 301;
    int threads = 1;
    PhaseAveraging phase_averaging = PhaseAveraging::Arithmetic;
    // When T exceeds the threshold, first try raising the order while the
    // aperture stays tileable instead of sampling.
    bool prefer_order_increase = false;
    double convergence_gamma = 1e-12;  // "mask perfectly fulfilled" test
};

// Substitution tiling metric of one tile: summed modulus of the member
// elements' deviation from the cluster weight.
double stm(const TilePlacement& tile, const GridSpec& grid, const WeightSet& ref, std::complex<double> w_q);

// STM of every tile of a clustering.
std::vector<double> stm_all(const Clustering& c, const WeightSet& ref, const ClusterWeights& w);

// Index (0-based) of the split candidate: maximum STM among tiles of
// order >= 2, ties to the lowest tile id; -1 when no tile can split.
int select_tile(const Clustering& c, const std::vector<double>& stm_values);

struct InitialTilingResult {
    Clustering clustering;
    double gamma = 0.0;
    std::uint64_t candidates = 0;  // tilings evaluated
    bool exhaustive = true;        // false when the sampling fallback ran
    int order = 0;                 // order actually used (>= R with prefer_order_increase)
};

// Step 1: choose the best full order-R tiling by mask matching. All T
// candidates are enumerated and evaluated when T fits the threshold;
// otherwise a seeded random sample of tilings stands in for the global
// search. Ties go to the first candidate in enumeration order. Throws
// InfeasibleTilingError when the aperture is not order-R tileable.
InitialTilingResult initial_tiling(const GridSpec& grid, TileShape shape, const Mask& mask, const WeightSet& ref,
                                   const ElementPattern& ep, const RtamConfig& cfg);

// One recorded state of the loop: the layout after h splits, its matched
// weights, mask mismatch, the per-tile STM, and the tile picked for the
// next split (-1 on the final record).
struct TraceIteration {
    explicit TraceIteration(Clustering layout_) : layout(std::move(layout_)) {}

    int h = 0;
    Clustering layout;
    ClusterWeights weights;
    std::vector<double> stm;
    int tile_count = 0;
    std::map<int, int> order_histogram;
    double gamma = 0.0;
    int split_tile = -1;   // 1-based id within this layout
    double delta_trm = 0.0;  // 1 - Q/(M*N)
};

// The full (Q, Gamma) trade-off ledger produced by the loop.
struct SynthesisTrace {
    std::vector<TraceIteration> iterations;
    std::uint64_t step1_candidates = 0;
    bool step1_exhaustive = true;
    int order_used = 0;

    int H() const { return static_cast<int>(iterations.size()) - 1; }
    const TraceIteration& final() const { return iterations.back(); }
    const Clustering& optimal_clustering() const { return iterations.back().layout; }
};

// Full synthesis: Step 1 then the split loop until the mask is met
// (gamma below the convergence threshold), the next split would exceed
// q_max, or nothing is splittable. Deterministic for fixed inputs.
SynthesisTrace run_rtam(const GridSpec& grid, TileShape shape, const Mask& mask, const WeightSet& ref,
                        const ElementPattern& ep, const RtamConfig& cfg);

}  // namespace rta
