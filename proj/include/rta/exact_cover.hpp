#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "rta/clustering.hpp"
#include "rta/geometry.hpp"

namespace rta {

// Exact-cover instance for tiling a grid: one column per grid cell, one
// candidate row per in-bounds tile placement. Rows are ordered by tile
// order (ascending), then anchor row-major, then orientation; that order
// fixes the enumeration order everywhere downstream.
struct CoverInstance {
    GridSpec grid;
    TileShape shape;
    std::vector<TilePlacement> placements;       // row id -> placement
    std::vector<std::vector<int>> row_columns;   // row id -> covered cell indices

    int column_count() const { return grid.cell_count(); }
    int row_count() const { return static_cast<int>(placements.size()); }
};

CoverInstance build_cover_instance(const GridSpec& grid, TileShape shape, const std::set<int>& allowed_orders);

// Search budgets and the optional per-order composition constraint
// (order -> exact tile count; when set it must list every allowed order).
struct EnumerationLimits {
    std::optional<std::uint64_t> max_solutions;
    std::optional<std::uint64_t> max_nodes;
    std::map<int, int> composition;
};

struct EnumerationResult {
    std::uint64_t solutions = 0;
    std::uint64_t nodes = 0;
    bool truncated = false;  // a budget stopped the search early
};

// Visits the chosen placement row ids of one exact cover. The span is
// only valid during the call; ids arrive in search order.
using SolutionVisitor = std::function<void(std::span<const int>)>;

// Algorithm-X over dancing-links state. Column choice is the column with
// the fewest remaining candidates (ties to the lowest column id), rows are
// tried in instance order, so two runs with identical inputs visit
// solutions identically. Composition constraints prune on per-order
// counters and remaining-area feasibility; solutions stream to the
// visitor and are never materialized.
EnumerationResult enumerate_exact_covers(const CoverInstance& inst, const EnumerationLimits& limits,
                                         const SolutionVisitor& visit = nullptr);

// Count-only variant. With threads > 1 and no budgets set, the search
// branches on the first chosen column's candidates and the sub-counts are
// combined in candidate order, so the total stays deterministic.
EnumerationResult count_exact_covers(const CoverInstance& inst, const EnumerationLimits& limits, int threads = 1);

// Total number of exact tilings of the grid with tiles of the allowed
// orders in any mix.
EnumerationResult count_all_mixed_tilings(const GridSpec& grid, TileShape shape, const std::set<int>& allowed_orders,
                                          int threads = 1);

// Build the clustering for one visited solution, tiles renumbered by
// first row-major member cell.
Clustering clustering_from_solution(const CoverInstance& inst, std::span<const int> rows);

}  // namespace rta
