#include <doctest.h>

#include <algorithm>
#include <set>

#include "rta/cardinality.hpp"
#include "rta/exact_cover.hpp"

using namespace rta;

namespace {

const TileShape kL{TileFamily::LTromino};

// Brute-force reference: all 3-cell subsets of a 2x2 box are L-trominoes,
// so placements = (#2x2 boxes) * 4. Counts in-bounds order-1 placements
// without touching the instance builder.
int brute_force_order1_placements(int rows, int cols) {
    int count = 0;
    for (int i = 0; i + 2 <= rows; ++i)
        for (int j = 0; j + 2 <= cols; ++j) count += 4;
    return count;
}

// Brute-force exact-cover counter over explicit cell sets; first
// uncovered cell drives the recursion. Independent of the solver.
struct BruteForce {
    int rows, cols;
    std::vector<std::vector<int>> sets;

    std::uint64_t count() {
        std::vector<char> covered(static_cast<std::size_t>(rows) * cols, 0);
        return recurse(covered);
    }

    std::uint64_t recurse(std::vector<char>& covered) {
        int cell = -1;
        for (std::size_t i = 0; i < covered.size(); ++i)
            if (!covered[i]) {
                cell = static_cast<int>(i);
                break;
            }
        if (cell < 0) return 1;
        std::uint64_t total = 0;
        for (const auto& s : sets) {
            if (std::find(s.begin(), s.end(), cell) == s.end()) continue;
            if (std::any_of(s.begin(), s.end(), [&](int c) { return covered[c]; })) continue;
            for (int c : s) covered[c] = 1;
            total += recurse(covered);
            for (int c : s) covered[c] = 0;
        }
        return total;
    }
};

BruteForce brute_force_from(const CoverInstance& inst) {
    return {inst.grid.rows, inst.grid.cols, inst.row_columns};
}

}  // namespace

TEST_CASE("instance rows enumerate every in-bounds placement") {
    const CoverInstance small = build_cover_instance(GridSpec(2, 3), kL, {1});
    CHECK(small.column_count() == 6);
    CHECK(small.row_count() == brute_force_order1_placements(2, 3));
    CHECK(small.row_count() == 8);
    for (const auto& cols : small.row_columns) CHECK(cols.size() == 3);

    const CoverInstance o2 = build_cover_instance(GridSpec(4, 4), kL, {2});
    CHECK(o2.row_count() == 4);
    for (const auto& cols : o2.row_columns) CHECK(cols.size() == 12);

    const CoverInstance mixed = build_cover_instance(GridSpec(8, 12), kL, {1, 2});
    CHECK(mixed.row_count() == brute_force_order1_placements(8, 12) + 4 * 5 * 9);
    for (int r = 0; r < mixed.row_count(); ++r)
        CHECK(mixed.row_columns[r].size() ==
              static_cast<std::size_t>(kL.cells_of_order(mixed.placements[r].order)));

    CHECK_THROWS_AS(build_cover_instance(GridSpec(4, 4), kL, {}), std::invalid_argument);
}

TEST_CASE("published solution counts") {
    auto count = [](int rows, int cols, std::set<int> orders) {
        return enumerate_exact_covers(build_cover_instance(GridSpec(rows, cols), kL, orders), {}).solutions;
    };
    CHECK(count(2, 3, {1}) == 2);
    CHECK(count(2, 2, {1}) == 0);
    CHECK(count(4, 6, {1}) == 18);
    CHECK(count(4, 6, {2}) == 2);  // reduced 2 x 3 at order 2
    CHECK(count(3, 4, {1}) == 4);
    CHECK(count(6, 6, {1}) == 162);
}

TEST_CASE("solver agrees with the brute-force counter on mixed instances") {
    for (auto [rows, cols] : {std::pair{4, 6}, {2, 6}, {4, 4}, {3, 4}, {4, 5}}) {
        const CoverInstance inst = build_cover_instance(GridSpec(rows, cols), kL, {1, 2});
        auto bf = brute_force_from(inst);
        INFO("grid ", rows, "x", cols);
        CHECK(enumerate_exact_covers(inst, {}).solutions == bf.count());
    }
}

TEST_CASE("every visited solution is an exact partition") {
    for (auto [rows, cols] : {std::pair{4, 6}, {5, 6}, {6, 6}, {3, 4}}) {
        const CoverInstance inst = build_cover_instance(GridSpec(rows, cols), kL, {1, 2});
        std::uint64_t seen = 0;
        enumerate_exact_covers(inst, {}, [&](std::span<const int> rows_) {
            const Clustering c = clustering_from_solution(inst, rows_);
            REQUIRE(validate_clustering(c).valid);
            ++seen;
        });
        CHECK(seen > 0);
    }
}

TEST_CASE("enumeration count equals the closed-form count for full-order tilings") {
    for (int mhat = 2; mhat <= 5; ++mhat) {
        for (int nhat = 2; nhat <= 5; ++nhat) {
            const auto res = enumerate_exact_covers(build_cover_instance(GridSpec(mhat, nhat), kL, {1}), {});
            const BigUint formula = count_tilings_formula(mhat, nhat);
            INFO("mhat=", mhat, " nhat=", nhat);
            REQUIRE(formula.fits_u64());
            CHECK(res.solutions == formula.as_u64());
        }
    }
}

TEST_CASE("deterministic visiting order and unique signatures") {
    const CoverInstance inst = build_cover_instance(GridSpec(4, 6), kL, {1, 2});
    std::vector<std::vector<int>> first, second;
    std::set<std::vector<int>> signatures;
    enumerate_exact_covers(inst, {}, [&](std::span<const int> rows) {
        std::vector<int> sig(rows.begin(), rows.end());
        first.push_back(sig);
        std::sort(sig.begin(), sig.end());
        CHECK(signatures.insert(sig).second);  // no duplicates
    });
    enumerate_exact_covers(inst, {}, [&](std::span<const int> rows) {
        second.emplace_back(rows.begin(), rows.end());
    });
    CHECK(first == second);
}

TEST_CASE("budgets truncate and flag") {
    const CoverInstance inst = build_cover_instance(GridSpec(4, 6), kL, {1});
    EnumerationLimits limits;
    limits.max_solutions = 5;
    const auto res = enumerate_exact_covers(inst, limits);
    CHECK(res.solutions == 5);
    CHECK(res.truncated);

    EnumerationLimits node_limits;
    node_limits.max_nodes = 3;
    const auto res2 = enumerate_exact_covers(inst, node_limits);
    CHECK(res2.truncated);
    CHECK(res2.nodes <= 4);

    // A budget larger than the search never flags.
    EnumerationLimits loose;
    loose.max_solutions = 1000;
    CHECK_FALSE(enumerate_exact_covers(inst, loose).truncated);
}

TEST_CASE("composition constraints") {
    const GridSpec g(8, 12);
    const CoverInstance inst = build_cover_instance(g, kL, {1, 2});

    EnumerationLimits limits;
    limits.composition = {{2, 6}, {1, 8}};
    CHECK(enumerate_exact_covers(inst, limits).solutions == 6248);

    // Infeasible area split: no solutions, no search.
    EnumerationLimits bad;
    bad.composition = {{2, 8}, {1, 1}};
    CHECK(enumerate_exact_covers(inst, bad).solutions == 0);

    // The constraint must cover every order present in the instance.
    EnumerationLimits partial;
    partial.composition = {{2, 8}};
    CHECK_THROWS_AS(enumerate_exact_covers(inst, partial), std::invalid_argument);

    // Composition counts must sum consistently with brute force on a
    // small grid: 4x6 with exactly one order-2 tile.
    const CoverInstance small = build_cover_instance(GridSpec(4, 6), kL, {1, 2});
    EnumerationLimits one2;
    one2.composition = {{2, 1}, {1, 4}};
    std::uint64_t by_comp = enumerate_exact_covers(small, one2).solutions;
    auto bf = brute_force_from(small);
    std::uint64_t total = bf.count();
    EnumerationLimits all1, all2;
    all1.composition = {{2, 0}, {1, 8}};
    all2.composition = {{2, 2}, {1, 0}};
    CHECK(enumerate_exact_covers(small, all1).solutions + by_comp + enumerate_exact_covers(small, all2).solutions ==
          total);
}

TEST_CASE("parallel count matches serial") {
    const GridSpec g(4, 6);
    const auto serial = count_all_mixed_tilings(g, kL, {1, 2}, 1);
    const auto parallel = count_all_mixed_tilings(g, kL, {1, 2}, 4);
    CHECK(serial.solutions == parallel.solutions);
    CHECK(serial.solutions == 24);
}

TEST_CASE("squares tile a divisible grid exactly one way") {
    const TileShape sq{TileFamily::Square};
    const auto res = enumerate_exact_covers(build_cover_instance(GridSpec(8, 8), sq, {2}), {});
    CHECK(res.solutions == 1);
}
