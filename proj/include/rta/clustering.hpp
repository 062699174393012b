#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rta/geometry.hpp"

namespace rta {

// Validation report for a clustering: exact-partition status, per-tile
// shape issues, and the per-order tile histogram. Problems are listed,
// not thrown.
struct ClusteringReport {
    bool valid = false;
    std::vector<int> gap_cells;       // cell indices owned by no tile
    std::vector<int> overlap_cells;   // cell indices owned by > 1 tile
    std::vector<int> out_of_bounds_tiles;
    std::map<int, int> order_histogram;  // order -> tile count (Q_r)

    bool exact_partition() const { return gap_cells.empty() && overlap_cells.empty() && out_of_bounds_tiles.empty(); }
};

// A partition of the grid into Q placed rep-tiles plus the clustering
// vector c (cell -> 1-based tile id, row-major; 0 marks a gap).
class Clustering {
public:
    Clustering(GridSpec grid, std::vector<TilePlacement> tiles);

    const GridSpec& grid() const { return grid_; }
    const std::vector<TilePlacement>& tiles() const { return tiles_; }
    int tile_count() const { return static_cast<int>(tiles_.size()); }

    // Row-major clustering vector with 1-based tile ids; 0 = gap.
    const std::vector<int>& vector() const { return vec_; }

    // 0-based id of the tile owning the cell, or -1 for a gap.
    int owner(Cell c) const { return vec_[grid_.cell_index(c)] - 1; }

    std::map<int, int> order_histogram() const;

    // Replace tile `index` (0-based) by its four children, children in
    // canonical split order taking the slot in place. Q grows by 3.
    void split_tile(int index);

    // Reorder tiles so ids increase with each tile's first row-major
    // member cell; the vector's first occurrences then read 1, 2, 3, ...
    Clustering normalized() const;

    friend bool operator==(const Clustering&, const Clustering&) = default;

private:
    void rebuild_vector();

    GridSpec grid_;
    std::vector<TilePlacement> tiles_;
    std::vector<int> vec_;
};

// Exact-partition and shape check; never throws on bad layouts.
ClusteringReport validate_clustering(const Clustering& c);

// Validate a raw clustering vector: zero entries are reported as gaps and
// id groups that fail to form a rep-tile land in malformed_tiles.
struct VectorReport {
    bool valid = false;
    std::vector<int> gap_cells;
    std::vector<int> malformed_tiles;  // 1-based ids
    std::map<int, int> order_histogram;
};
VectorReport validate_vector(const GridSpec& grid, const std::vector<int>& vec);

// Reconstruct placements from a clustering vector (1-based ids, 0 = gap).
// Each id's cell set must be a valid rep-tile; the family is inferred from
// the cell count (3*4^k vs 4^k never collide). Returns the error message
// instead of a clustering when reconstruction fails.
struct ClusteringParse {
    std::optional<Clustering> clustering;
    std::string error;
};
ClusteringParse clustering_from_vector(const GridSpec& grid, const std::vector<int>& vec);

// CSV with header "m,n,q": 1-based m,n in row-major order, 1-based q,
// q = 0 reserved for gaps.
void write_clustering_csv(const Clustering& c, const std::filesystem::path& path);
std::string clustering_to_csv(const Clustering& c);
ClusteringParse read_clustering_csv(const GridSpec& grid, const std::filesystem::path& path);

}  // namespace rta
