#include "rta/exact_cover.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <stdexcept>
#include <thread>

namespace rta {

CoverInstance build_cover_instance(const GridSpec& grid, TileShape shape, const std::set<int>& allowed_orders) {
    if (allowed_orders.empty()) throw std::invalid_argument("build_cover_instance: allowed_orders is empty");
    for (int r : allowed_orders) {
        if (r < 1 || r > TileShape::kMaxOrder)
            throw std::invalid_argument("build_cover_instance: order out of range");
    }
    CoverInstance inst{grid, shape, {}, {}};
    for (int r : allowed_orders) {  // std::set iterates ascending
        const int box = shape.box_of_order(r);
        for (int i = 0; i + box <= grid.rows; ++i) {
            for (int j = 0; j + box <= grid.cols; ++j) {
                for (int b = 0; b < shape.orientations(); ++b) {
                    TilePlacement p(shape, r, b, {i, j});
                    std::vector<int> cols;
                    cols.reserve(p.cell_count());
                    for (const Cell& c : p.cells()) cols.push_back(grid.cell_index(c));
                    inst.placements.push_back(p);
                    inst.row_columns.push_back(std::move(cols));
                }
            }
        }
    }
    return inst;
}

namespace {

// Dancing-links matrix over flat arrays. Nodes 0..C-1 are column headers,
// node C is the root; data nodes follow.
struct Dlx {
    std::vector<int> left, right, up, down;
    std::vector<int> col;     // owning column header of a node
    std::vector<int> row_id;  // placement row of a data node
    std::vector<int> size;    // per-column candidate count

    int root = 0;
    int num_cols = 0;

    explicit Dlx(const CoverInstance& inst) {
        num_cols = inst.column_count();
        root = num_cols;
        std::size_t nodes = static_cast<std::size_t>(num_cols) + 1;
        for (const auto& cols : inst.row_columns) nodes += cols.size();
        left.resize(nodes);
        right.resize(nodes);
        up.resize(nodes);
        down.resize(nodes);
        col.resize(nodes);
        row_id.assign(nodes, -1);
        size.assign(num_cols, 0);

        for (int c = 0; c <= num_cols; ++c) {
            left[c] = c == 0 ? num_cols : c - 1;
            right[c] = c == num_cols ? 0 : c + 1;
            up[c] = c;
            down[c] = c;
            col[c] = c;
        }
        int next = num_cols + 1;
        for (int r = 0; r < inst.row_count(); ++r) {
            int first = -1;
            for (int c : inst.row_columns[r]) {
                const int n = next++;
                col[n] = c;
                row_id[n] = r;
                up[n] = up[c];  // insert above the header: row order stays top-down
                down[n] = c;
                down[up[c]] = n;
                up[c] = n;
                ++size[c];
                if (first < 0) {
                    first = n;
                    left[n] = right[n] = n;
                } else {
                    left[n] = left[first];
                    right[n] = first;
                    right[left[first]] = n;
                    left[first] = n;
                }
            }
        }
    }

    void cover(int c) {
        right[left[c]] = right[c];
        left[right[c]] = left[c];
        for (int i = down[c]; i != c; i = down[i]) {
            for (int j = right[i]; j != i; j = right[j]) {
                down[up[j]] = down[j];
                up[down[j]] = up[j];
                --size[col[j]];
            }
        }
    }

    void uncover(int c) {
        for (int i = up[c]; i != c; i = up[i]) {
            for (int j = left[i]; j != i; j = left[j]) {
                ++size[col[j]];
                up[down[j]] = j;
                down[up[j]] = j;
            }
        }
        right[left[c]] = c;
        left[right[c]] = c;
    }

    // Fewest remaining candidates; ties go to the lowest column id since
    // the root ring is walked in ascending order.
    int choose_column() const {
        int best = -1, best_size = INT_MAX;
        for (int c = right[root]; c != root; c = right[c]) {
            if (size[c] < best_size) {
                best_size = size[c];
                best = c;
                if (best_size == 0) break;
            }
        }
        return best;
    }

    bool exhausted() const { return right[root] == root; }
};

class Searcher {
public:
    Searcher(const CoverInstance& inst, const EnumerationLimits& limits, const SolutionVisitor& visit)
        : inst_(inst), dlx_(inst), visit_(visit), limits_(limits) {
        if (!limits.composition.empty()) {
            comp_active_ = true;
            remaining_.fill(-1);
            long capacity = 0;
            for (const auto& [order, count] : limits.composition) {
                if (order < 1 || order > TileShape::kMaxOrder || count < 0)
                    throw std::invalid_argument("composition: bad order or count");
                remaining_[order] = count;
                capacity += count * inst.shape.cells_of_order(order);
            }
            for (const TilePlacement& p : inst.placements) {
                if (remaining_[p.order] < 0)
                    throw std::invalid_argument("composition: must list every allowed order");
            }
            // With every order constrained, per-branch area feasibility
            // reduces to this root identity plus the counter caps below.
            comp_feasible_ = capacity == inst.grid.cell_count();
        }
        stack_.reserve(64);
    }

    EnumerationResult run() {
        if (comp_active_ && !comp_feasible_) return {};
        search();
        return {solutions_, nodes_, truncated_};
    }

private:
    bool budget_exceeded() const {
        if (limits_.max_solutions && solutions_ >= *limits_.max_solutions) return true;
        if (limits_.max_nodes && nodes_ >= *limits_.max_nodes) return true;
        return false;
    }

    void search() {
        if (dlx_.exhausted()) {
            ++solutions_;
            if (visit_) visit_(std::span<const int>(stack_.data(), stack_.size()));
            return;
        }
        if (budget_exceeded()) {
            truncated_ = true;
            return;
        }
        const int c = dlx_.choose_column();
        if (dlx_.size[c] == 0) return;
        dlx_.cover(c);
        for (int i = dlx_.down[c]; i != c; i = dlx_.down[i]) {
            const int row = dlx_.row_id[i];
            const int order = inst_.placements[row].order;
            if (comp_active_ && remaining_[order] == 0) continue;
            ++nodes_;
            stack_.push_back(row);
            if (comp_active_) --remaining_[order];
            for (int j = dlx_.right[i]; j != i; j = dlx_.right[j]) dlx_.cover(dlx_.col[j]);
            search();
            for (int j = dlx_.left[i]; j != i; j = dlx_.left[j]) dlx_.uncover(dlx_.col[j]);
            if (comp_active_) ++remaining_[order];
            stack_.pop_back();
            if (truncated_) break;
        }
        dlx_.uncover(c);
    }

    const CoverInstance& inst_;
    Dlx dlx_;
    const SolutionVisitor& visit_;
    EnumerationLimits limits_;
    bool comp_active_ = false;
    bool comp_feasible_ = true;
    std::array<int, TileShape::kMaxOrder + 1> remaining_{};
    std::vector<int> stack_;
    std::uint64_t solutions_ = 0;
    std::uint64_t nodes_ = 0;
    bool truncated_ = false;
};

}  // namespace

EnumerationResult enumerate_exact_covers(const CoverInstance& inst, const EnumerationLimits& limits,
                                         const SolutionVisitor& visit) {
    Searcher s(inst, limits, visit);
    return s.run();
}

EnumerationResult count_exact_covers(const CoverInstance& inst, const EnumerationLimits& limits, int threads) {
    if (threads <= 1 || limits.max_solutions || limits.max_nodes) {
        return enumerate_exact_covers(inst, limits, nullptr);
    }
    // Branch-split: each candidate covering cell 0 becomes an independent
    // sub-search with that row forced; sub-counts are summed in candidate
    // order, so the total matches the single-threaded run.
    std::vector<int> first_rows;
    for (int r = 0; r < inst.row_count(); ++r) {
        const auto& cols = inst.row_columns[r];
        if (std::find(cols.begin(), cols.end(), 0) != cols.end()) first_rows.push_back(r);
    }
    std::vector<EnumerationResult> partial(first_rows.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= first_rows.size()) return;
            const int forced = first_rows[idx];
            CoverInstance sub{inst.grid, inst.shape, {}, {}};
            for (int r = 0; r < inst.row_count(); ++r) {
                const auto& cols = inst.row_columns[r];
                const bool covers0 = std::find(cols.begin(), cols.end(), 0) != cols.end();
                if (covers0 && r != forced) continue;  // cell 0 keeps a single candidate
                sub.placements.push_back(inst.placements[r]);
                sub.row_columns.push_back(cols);
            }
            partial[idx] = enumerate_exact_covers(sub, limits, nullptr);
        }
    };
    std::vector<std::thread> pool;
    const int n = static_cast<int>(std::min<std::size_t>(threads, first_rows.size()));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    EnumerationResult total;
    for (const auto& p : partial) {
        total.solutions += p.solutions;
        total.nodes += p.nodes;
        total.truncated = total.truncated || p.truncated;
    }
    return total;
}

EnumerationResult count_all_mixed_tilings(const GridSpec& grid, TileShape shape, const std::set<int>& allowed_orders,
                                          int threads) {
    CoverInstance inst = build_cover_instance(grid, shape, allowed_orders);
    return count_exact_covers(inst, EnumerationLimits{}, threads);
}

Clustering clustering_from_solution(const CoverInstance& inst, std::span<const int> rows) {
    std::vector<TilePlacement> tiles;
    tiles.reserve(rows.size());
    for (int r : rows) tiles.push_back(inst.placements[r]);
    return Clustering(inst.grid, std::move(tiles)).normalized();
}

}  // namespace rta
