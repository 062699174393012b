#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rta {

// Grid cell, (row, col), row 0 at the top.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    auto operator<=>(const Cell&) const = default;
};

// Regular M x N element lattice. Spacings dx, dy are in wavelengths;
// element (m, n) sits at x = n*dx, y = m*dy (x along columns, y along rows).
struct GridSpec {
    int rows = 0;
    int cols = 0;
    double dx = 0.5;
    double dy = 0.5;

    GridSpec() = default;
    GridSpec(int rows_, int cols_, double dx_ = 0.5, double dy_ = 0.5)
        : rows(rows_), cols(cols_), dx(dx_), dy(dy_) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("GridSpec: rows and cols must be >= 1");
        if (dx <= 0.0 || dy <= 0.0) throw std::invalid_argument("GridSpec: spacings must be > 0");
    }

    int cell_count() const { return rows * cols; }
    int cell_index(Cell c) const { return c.row * cols + c.col; }
    Cell cell_at(int index) const { return {index / cols, index % cols}; }
    bool contains(Cell c) const { return c.row >= 0 && c.row < rows && c.col >= 0 && c.col < cols; }

    double x(int col) const { return col * dx; }
    double y(int row) const { return row * dy; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

enum class TileFamily : std::uint8_t { LTromino, Square };

// Rep-tile family descriptor. Both families split 4-for-1; the L-tromino
// has 4 distinct orientations, the square 1.
struct TileShape {
    TileFamily family = TileFamily::LTromino;

    constexpr TileShape() = default;
    constexpr explicit TileShape(TileFamily f) : family(f) {}

    constexpr int base_cells() const { return family == TileFamily::LTromino ? 3 : 4; }
    constexpr int split_factor() const { return 4; }
    constexpr int orientations() const { return family == TileFamily::LTromino ? 4 : 1; }

    // Elements in an order-r tile: I^(r) = 4^(r-1) * I^(1).
    long cells_of_order(int r) const {
        require_order(r);
        return static_cast<long>(base_cells()) << (2 * (r - 1));
    }

    // Side length of the self-similar unit: L-tromino l^(r) = 2^(r-1)
    // (quadrant side), square 2^r (full side).
    int side_of_order(int r) const {
        require_order(r);
        return family == TileFamily::LTromino ? (1 << (r - 1)) : (1 << r);
    }

    // Bounding-box side of an order-r tile; 2^r for both families.
    int box_of_order(int r) const {
        require_order(r);
        return 1 << r;
    }

    static constexpr int kMaxOrder = 6;

    friend bool operator==(const TileShape&, const TileShape&) = default;

private:
    static void require_order(int r) {
        if (r < 1 || r > kMaxOrder) throw std::invalid_argument("TileShape: order must be in [1, 6]");
    }
};

// Cells of an order-r L-tromino: orientation b = 0 occupies the 2l x 2l
// bounding box minus its top-right l x l quadrant (l = 2^(r-1)); b counts
// 90-degree clockwise rotations. Cells are anchored at the bounding-box
// top-left and listed in row-major order.
std::vector<Cell> tromino_cells(int order, int orientation, Cell anchor);

// One placed rep-tile: family, order, orientation, bounding-box top-left.
struct TilePlacement {
    TileShape shape;
    int order = 1;
    int orientation = 0;
    Cell anchor;

    TilePlacement() = default;
    TilePlacement(TileShape shape_, int order_, int orientation_, Cell anchor_);

    int cell_count() const { return static_cast<int>(shape.cells_of_order(order)); }
    int box_side() const { return shape.box_of_order(order); }

    // Member cells in row-major order.
    std::vector<Cell> cells() const;

    bool fits(const GridSpec& grid) const {
        return anchor.row >= 0 && anchor.col >= 0 && anchor.row + box_side() <= grid.rows &&
               anchor.col + box_side() <= grid.cols;
    }

    // Centroid of member cell centers in grid coordinates (x, y), in
    // wavelengths. Used as the tile phase center.
    std::array<double, 2> centroid(const GridSpec& grid) const;

    friend bool operator==(const TilePlacement&, const TilePlacement&) = default;
    auto operator<=>(const TilePlacement&) const = default;
};

struct CannotSplitError : std::logic_error {
    using std::logic_error::logic_error;
};

// Rep-4 split of an order >= 2 tile into its four order-(r-1) children.
// The children partition the parent cell set exactly; their orientations
// and anchors follow a fixed table that rotates with the parent, so the
// split is deterministic. Throws CannotSplitError for order-1 tiles.
std::array<TilePlacement, 4> subdivide(const TilePlacement& parent);

enum class TileabilityReason : std::uint8_t {
    ThreeByEven,         // reduced 3 x even rectangle
    DivisibleCase,       // reduced sides != 3 and area divisible by I^(R)
    NotDivisibleBySide,  // M or N not a multiple of the tile side
    ThreeByOdd,          // reduced 3 x odd rectangle
    AreaNotDivisible,    // cell count not a multiple of I^(R)
    TooSmall,            // reduced min side < 2
};

const char* to_string(TileabilityReason reason);

struct TileabilityVerdict {
    bool tileable = false;
    TileabilityReason reason = TileabilityReason::TooSmall;
};

// Covering test for a full tessellation of the grid with order-R tiles.
// L-tromino: with l = l^(R), Mhat = M/l, Nhat = N/l reordered so
// Mhat <= Nhat, the grid is tileable iff both sides divide by l,
// min >= 2, and either (Mhat == 3 and Nhat even) or (Mhat != 3 and
// M*N divisible by I^(R)). Squares: plain divisibility of both sides
// by the order-R square side.
TileabilityVerdict check_tileability(const GridSpec& grid, int order, TileShape shape);

}  // namespace rta
