#include "rta/geometry.hpp"

#include <algorithm>

namespace rta {

namespace {

// Rotate a cell 90 degrees clockwise within a box of side `side`.
inline Cell rotate_cw(Cell c, int side) {
    return {c.col, side - 1 - c.row};
}

}  // namespace

std::vector<Cell> tromino_cells(int order, int orientation, Cell anchor) {
    if (order < 1 || order > TileShape::kMaxOrder)
        throw std::invalid_argument("tromino_cells: order must be in [1, 6]");
    if (orientation < 0 || orientation > 3)
        throw std::invalid_argument("tromino_cells: orientation must be in [0, 3]");
    const int l = 1 << (order - 1);
    const int box = 2 * l;
    std::vector<Cell> cells;
    cells.reserve(3 * static_cast<std::size_t>(l) * l);
    for (int i = 0; i < box; ++i) {
        for (int j = 0; j < box; ++j) {
            if (i < l && j >= l) continue;  // missing top-right quadrant
            Cell c{i, j};
            for (int k = 0; k < orientation; ++k) c = rotate_cw(c, box);
            cells.push_back({anchor.row + c.row, anchor.col + c.col});
        }
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

TilePlacement::TilePlacement(TileShape shape_, int order_, int orientation_, Cell anchor_)
    : shape(shape_), order(order_), orientation(orientation_), anchor(anchor_) {
    if (order < 1 || order > TileShape::kMaxOrder)
        throw std::invalid_argument("TilePlacement: order must be in [1, 6]");
    if (orientation < 0 || orientation >= shape.orientations())
        throw std::invalid_argument("TilePlacement: orientation out of range for shape");
}

std::vector<Cell> TilePlacement::cells() const {
    if (shape.family == TileFamily::LTromino) return tromino_cells(order, orientation, anchor);
    const int side = box_side();
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(side) * side);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) cells.push_back({anchor.row + i, anchor.col + j});
    return cells;
}

std::array<double, 2> TilePlacement::centroid(const GridSpec& grid) const {
    double sx = 0.0, sy = 0.0;
    const auto cs = cells();
    for (const Cell& c : cs) {
        sx += grid.x(c.col);
        sy += grid.y(c.row);
    }
    const double n = static_cast<double>(cs.size());
    return {sx / n, sy / n};
}

std::array<TilePlacement, 4> subdivide(const TilePlacement& parent) {
    if (parent.order < 2) throw CannotSplitError("subdivide: order-1 tiles cannot be split");

    const int child_order = parent.order - 1;

    if (parent.shape.family == TileFamily::Square) {
        const int s = parent.shape.box_of_order(child_order);
        const Cell a = parent.anchor;
        return {
            TilePlacement(parent.shape, child_order, 0, {a.row, a.col}),
            TilePlacement(parent.shape, child_order, 0, {a.row, a.col + s}),
            TilePlacement(parent.shape, child_order, 0, {a.row + s, a.col}),
            TilePlacement(parent.shape, child_order, 0, {a.row + s, a.col + s}),
        };
    }

    // L-tromino. For an orientation-0 parent the children sit at fixed
    // offsets inside the parent box (side L = 2*lp, child box side lp):
    // an orientation-1 child at the top-left, orientation-0 children at
    // the box center and bottom-left, and an orientation-3 child at the
    // bottom-right. Rotating the parent rotates the whole table with it.
    const int lc = 1 << (child_order - 1);  // child quadrant side
    const int child_box = 2 * lc;
    const int parent_box = parent.box_side();

    struct RelChild {
        int orientation;
        Cell offset;
    };
    RelChild rel[4] = {
        {1, {0, 0}},
        {0, {lc, lc}},
        {0, {2 * lc, 0}},
        {3, {2 * lc, 2 * lc}},
    };
    for (RelChild& ch : rel) {
        for (int k = 0; k < parent.orientation; ++k) {
            // Rotating the placement box CW: new top-left comes from the
            // old box's bottom-left corner column.
            ch.offset = {ch.offset.col, parent_box - child_box - ch.offset.row};
            ch.orientation = (ch.orientation + 1) % 4;
        }
    }
    return {
        TilePlacement(parent.shape, child_order, rel[0].orientation,
                      {parent.anchor.row + rel[0].offset.row, parent.anchor.col + rel[0].offset.col}),
        TilePlacement(parent.shape, child_order, rel[1].orientation,
                      {parent.anchor.row + rel[1].offset.row, parent.anchor.col + rel[1].offset.col}),
        TilePlacement(parent.shape, child_order, rel[2].orientation,
                      {parent.anchor.row + rel[2].offset.row, parent.anchor.col + rel[2].offset.col}),
        TilePlacement(parent.shape, child_order, rel[3].orientation,
                      {parent.anchor.row + rel[3].offset.row, parent.anchor.col + rel[3].offset.col}),
    };
}

const char* to_string(TileabilityReason reason) {
    switch (reason) {
        case TileabilityReason::ThreeByEven: return "ThreeByEven";
        case TileabilityReason::DivisibleCase: return "DivisibleCase";
        case TileabilityReason::NotDivisibleBySide: return "NotDivisibleBySide";
        case TileabilityReason::ThreeByOdd: return "ThreeByOdd";
        case TileabilityReason::AreaNotDivisible: return "AreaNotDivisible";
        case TileabilityReason::TooSmall: return "TooSmall";
    }
    return "?";
}

TileabilityVerdict check_tileability(const GridSpec& grid, int order, TileShape shape) {
    const int side = shape.side_of_order(order);

    if (shape.family == TileFamily::Square) {
        if (grid.rows % side != 0 || grid.cols % side != 0)
            return {false, TileabilityReason::NotDivisibleBySide};
        return {true, TileabilityReason::DivisibleCase};
    }

    if (grid.rows % side != 0 || grid.cols % side != 0)
        return {false, TileabilityReason::NotDivisibleBySide};
    int mhat = grid.rows / side;
    int nhat = grid.cols / side;
    if (mhat > nhat) std::swap(mhat, nhat);
    if (mhat < 2) return {false, TileabilityReason::TooSmall};
    if (mhat == 3) {
        return nhat % 2 == 0 ? TileabilityVerdict{true, TileabilityReason::ThreeByEven}
                             : TileabilityVerdict{false, TileabilityReason::ThreeByOdd};
    }
    const long cells = static_cast<long>(grid.rows) * grid.cols;
    return cells % shape.cells_of_order(order) == 0
               ? TileabilityVerdict{true, TileabilityReason::DivisibleCase}
               : TileabilityVerdict{false, TileabilityReason::AreaNotDivisible};
}

}  // namespace rta
