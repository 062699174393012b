#include "rta/clustering.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace rta {

Clustering::Clustering(GridSpec grid, std::vector<TilePlacement> tiles)
    : grid_(grid), tiles_(std::move(tiles)) {
    rebuild_vector();
}

void Clustering::rebuild_vector() {
    vec_.assign(static_cast<std::size_t>(grid_.cell_count()), 0);
    for (std::size_t t = 0; t < tiles_.size(); ++t) {
        for (const Cell& c : tiles_[t].cells()) {
            if (!grid_.contains(c)) continue;
            int& slot = vec_[grid_.cell_index(c)];
            if (slot == 0) slot = static_cast<int>(t) + 1;  // first owner wins; overlaps surface in validation
        }
    }
}

std::map<int, int> Clustering::order_histogram() const {
    std::map<int, int> h;
    for (const TilePlacement& t : tiles_) ++h[t.order];
    return h;
}

void Clustering::split_tile(int index) {
    if (index < 0 || index >= static_cast<int>(tiles_.size()))
        throw std::out_of_range("Clustering::split_tile: bad tile index");
    auto children = subdivide(tiles_[index]);
    tiles_[index] = children[0];
    tiles_.insert(tiles_.begin() + index + 1, children.begin() + 1, children.end());
    rebuild_vector();
}

Clustering Clustering::normalized() const {
    std::vector<std::pair<int, int>> first_cell(tiles_.size());  // (first row-major cell index, tile)
    for (std::size_t t = 0; t < tiles_.size(); ++t) {
        const auto cs = tiles_[t].cells();
        int best = grid_.cell_count();
        for (const Cell& c : cs)
            if (grid_.contains(c)) best = std::min(best, grid_.cell_index(c));
        first_cell[t] = {best, static_cast<int>(t)};
    }
    std::sort(first_cell.begin(), first_cell.end());
    std::vector<TilePlacement> ordered;
    ordered.reserve(tiles_.size());
    for (const auto& [_, t] : first_cell) ordered.push_back(tiles_[t]);
    return Clustering(grid_, std::move(ordered));
}

ClusteringReport validate_clustering(const Clustering& c) {
    const GridSpec& grid = c.grid();
    ClusteringReport report;
    std::vector<int> owners(static_cast<std::size_t>(grid.cell_count()), 0);
    for (std::size_t t = 0; t < c.tiles().size(); ++t) {
        const TilePlacement& tile = c.tiles()[t];
        if (!tile.fits(grid)) {
            report.out_of_bounds_tiles.push_back(static_cast<int>(t));
            continue;
        }
        for (const Cell& cell : tile.cells()) ++owners[grid.cell_index(cell)];
    }
    for (int i = 0; i < grid.cell_count(); ++i) {
        if (owners[i] == 0) report.gap_cells.push_back(i);
        if (owners[i] > 1) report.overlap_cells.push_back(i);
    }
    report.order_histogram = c.order_histogram();
    report.valid = report.exact_partition();

    if (report.valid) {
        // Round-trip: the derived vector must reconstruct the same partition.
        auto back = clustering_from_vector(grid, c.vector());
        if (!back.clustering) report.valid = false;
    }
    return report;
}

namespace {

// Try to identify a cell group as a single placed tile.
std::optional<TilePlacement> identify_tile(const std::vector<Cell>& cells) {
    const std::size_t n = cells.size();
    TileShape shape;
    int order = 0;
    for (TileFamily fam : {TileFamily::LTromino, TileFamily::Square}) {
        TileShape s(fam);
        for (int r = 1; r <= TileShape::kMaxOrder; ++r) {
            if (s.cells_of_order(r) == static_cast<long>(n)) {
                shape = s;
                order = r;
            }
        }
        if (order != 0) break;
    }
    if (order == 0) return std::nullopt;

    int rmin = cells[0].row, cmin = cells[0].col;
    for (const Cell& c : cells) {
        rmin = std::min(rmin, c.row);
        cmin = std::min(cmin, c.col);
    }
    std::vector<Cell> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    const Cell anchor{rmin, cmin};
    for (int b = 0; b < shape.orientations(); ++b) {
        TilePlacement cand(shape, order, b, anchor);
        if (cand.cells() == sorted) return cand;
    }
    return std::nullopt;
}

}  // namespace

VectorReport validate_vector(const GridSpec& grid, const std::vector<int>& vec) {
    VectorReport report;
    if (static_cast<int>(vec.size()) != grid.cell_count()) {
        report.valid = false;
        return report;
    }
    std::map<int, std::vector<Cell>> groups;
    for (int i = 0; i < grid.cell_count(); ++i) {
        if (vec[i] == 0) {
            report.gap_cells.push_back(i);
        } else if (vec[i] > 0) {
            groups[vec[i]].push_back(grid.cell_at(i));
        } else {
            report.malformed_tiles.push_back(vec[i]);
        }
    }
    for (const auto& [q, cells] : groups) {
        std::vector<Cell> sorted = cells;
        std::sort(sorted.begin(), sorted.end());
        const auto tile = identify_tile(sorted);
        if (tile) {
            ++report.order_histogram[tile->order];
        } else {
            report.malformed_tiles.push_back(q);
        }
    }
    report.valid = report.gap_cells.empty() && report.malformed_tiles.empty();
    return report;
}

ClusteringParse clustering_from_vector(const GridSpec& grid, const std::vector<int>& vec) {
    if (static_cast<int>(vec.size()) != grid.cell_count())
        return {std::nullopt, "clustering vector length does not match grid"};
    std::map<int, std::vector<Cell>> groups;
    for (int i = 0; i < grid.cell_count(); ++i) {
        const int q = vec[i];
        if (q < 0) return {std::nullopt, "negative tile id at cell " + std::to_string(i)};
        if (q == 0) continue;  // gap; surfaces in validation
        groups[q].push_back(grid.cell_at(i));
    }
    if (groups.empty()) return {std::nullopt, "clustering vector holds no tiles"};
    std::vector<TilePlacement> tiles;
    tiles.reserve(groups.size());
    int expected = 1;
    for (const auto& [q, cells] : groups) {
        if (q != expected)
            return {std::nullopt, "tile ids are not contiguous 1..Q (missing id " + std::to_string(expected) + ")"};
        ++expected;
        auto tile = identify_tile(cells);
        if (!tile)
            return {std::nullopt, "cells of tile " + std::to_string(q) + " do not form a known rep-tile"};
        tiles.push_back(*tile);
    }
    return {Clustering(grid, std::move(tiles)), ""};
}

std::string clustering_to_csv(const Clustering& c) {
    std::ostringstream out;
    out << "m,n,q\n";
    const GridSpec& grid = c.grid();
    for (int m = 0; m < grid.rows; ++m)
        for (int n = 0; n < grid.cols; ++n)
            out << m + 1 << ',' << n + 1 << ',' << c.vector()[grid.cell_index({m, n})] << '\n';
    return out.str();
}

void write_clustering_csv(const Clustering& c, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << clustering_to_csv(c);
}

ClusteringParse read_clustering_csv(const GridSpec& grid, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return {std::nullopt, "cannot open " + path.string()};
    std::string line;
    if (!std::getline(in, line)) return {std::nullopt, "empty clustering file"};
    std::vector<int> vec(static_cast<std::size_t>(grid.cell_count()), -1);
    int seen = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int m = 0, n = 0, q = 0;
        if (std::sscanf(line.c_str(), "%d,%d,%d", &m, &n, &q) != 3)
            return {std::nullopt, "malformed clustering row: " + line};
        Cell c{m - 1, n - 1};
        if (!grid.contains(c)) return {std::nullopt, "cell out of bounds: " + line};
        vec[grid.cell_index(c)] = q;
        ++seen;
    }
    if (seen != grid.cell_count()) return {std::nullopt, "clustering file does not cover the grid"};
    return clustering_from_vector(grid, vec);
}

}  // namespace rta
