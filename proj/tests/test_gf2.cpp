#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cobordia/fixtures.hpp"
#include "cobordia/gf2.hpp"
#include "test_support.hpp"

using namespace cobordia;

namespace {

SparseGF2Matrix from_columns(std::size_t n_rows, std::vector<std::vector<RowIndex>> cols) {
    return SparseGF2Matrix(n_rows, std::move(cols));
}

bool is_unit_upper_triangular(const SparseGF2Matrix& v) {
    for (ColIndex j = 0; j < v.n_cols(); ++j) {
        const auto& col = v.column(j);
        if (col.empty() || col.back() != j) return false;  // unit diagonal
        for (RowIndex i : col)
            if (i > j) return false;  // nothing below the diagonal
    }
    return true;
}

bool lows_distinct(const SparseGF2Matrix& r) {
    std::set<RowIndex> seen;
    for (ColIndex j = 0; j < r.n_cols(); ++j) {
        const auto low = r.low(j);
        if (!low) continue;
        if (!seen.insert(*low).second) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("low under identity and reversed row orders") {
    auto m = from_columns(8, {{}, {0, 3, 7}});
    CHECK(!m.low(0).has_value());
    CHECK(m.low(1) == RowIndex{7});

    RowOrder reversed;
    reversed.rank_of = {7, 6, 5, 4, 3, 2, 1, 0};
    m.set_row_order(reversed);
    CHECK(m.low(1) == RowIndex{0});
}

TEST_CASE("add_column is symmetric difference") {
    auto m = from_columns(6, {{1, 2}, {2, 3}});
    m.add_column(1, 0);
    CHECK(m.column(0) == std::vector<RowIndex>{1, 3});

    auto m2 = from_columns(6, {{4, 5}, {4, 5}});
    m2.add_column(0, 1);
    CHECK(m2.column_empty(1));

    auto m3 = from_columns(6, {{5}, {}});
    m3.add_column(0, 1);
    CHECK(m3.column(1) == std::vector<RowIndex>{5});

    CHECK_THROWS_AS(m3.add_column(1, 1), std::invalid_argument);
}

TEST_CASE("single edge boundary reduces to itself") {
    // columns: two vertices and one edge {v0, v1}
    auto d = from_columns(3, {{}, {}, {0, 1}});
    const auto res = reduce(d);
    CHECK(res.R == d);
    for (ColIndex j = 0; j < 3; ++j)
        CHECK(res.V.column(j) == std::vector<RowIndex>{j});
}

TEST_CASE("hollow triangle: third edge column cancels") {
    // rows/cols: v0 v1 v2 e01 e02 e12
    auto d = from_columns(6, {{}, {}, {}, {0, 1}, {0, 2}, {1, 2}});
    const auto res = reduce(d);
    CHECK(res.R.column_empty(5));
    CHECK(res.V.column(5) == std::vector<RowIndex>{3, 4, 5});
    CHECK(test::dense_multiply(d, res.V) == res.R);
    CHECK(is_unit_upper_triangular(res.V));
}

TEST_CASE("200 random matrices: R = DV, unit upper V, distinct lows") {
    fixtures::Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const SparseGF2Matrix d = fixtures::random_sparse_matrix(rng, 64, 64, 0.2);
        const auto res = reduce(d);
        REQUIRE(test::dense_multiply(d, res.V) == res.R);
        REQUIRE(is_unit_upper_triangular(res.V));
        REQUIRE(lows_distinct(res.R));
        // a reduced matrix is a fixpoint of reduction
        const auto again = reduce(res.R);
        REQUIRE(again.R == res.R);
        for (ColIndex j = 0; j < again.V.n_cols(); ++j)
            REQUIRE(again.V.column(j) == std::vector<RowIndex>{j});
    }
}

TEST_CASE("reduction respects a block row order") {
    // Under the block order rows 2,3 come first, so both columns end at
    // row 0 and the second gets reduced; in storage order their lows would
    // have differed and no addition would fire.
    auto d = from_columns(4, {{0, 2}, {0, 3}});
    RowOrder order;
    order.rank_of = {2, 3, 0, 1};
    order.block_size = 2;
    d.set_row_order(order);
    const auto res = reduce(d);
    CHECK(res.R.column(0) == std::vector<RowIndex>{0, 2});
    CHECK(res.R.column(1) == std::vector<RowIndex>{2, 3});
    CHECK(res.R.low(0) == RowIndex{0});
    CHECK(res.R.low(1) == RowIndex{3});
    CHECK(res.V.column(1) == std::vector<RowIndex>{0, 1});
}

TEST_CASE("debug dump format") {
    auto d = from_columns(6, {{}, {}, {}, {0, 1}, {0, 2}, {1, 2}});
    CHECK(debug_dump(d) == "-\n-\n-\n0 1\n0 2\n1 2\n");
}
