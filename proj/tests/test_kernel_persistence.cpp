#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cobordia/fixtures.hpp"
#include "cobordia/kernel_persistence.hpp"
#include "cobordia/oracle.hpp"
#include "test_support.hpp"

using namespace cobordia;

namespace {

Cell make_cell(CellId id, int dim, std::vector<CellId> boundary, double f,
               Label label = Label::Interior) {
    Cell c;
    c.id = id;
    c.dim = dim;
    c.boundary = std::move(boundary);
    c.filtration = f;
    c.in_a = label == Label::A;
    c.in_b = label == Label::B;
    return c;
}

/// a1, a2 in A; b in B; edges a1-b @1, a2-b @2, optionally a1-a2 @3 in A.
FilteredComplex wedge(bool close_inside_a) {
    std::vector<Cell> cells = {
        make_cell(0, 0, {}, 0.0, Label::A), make_cell(1, 0, {}, 0.0, Label::A),
        make_cell(2, 0, {}, 0.0, Label::B), make_cell(3, 1, {0, 2}, 1.0),
        make_cell(4, 1, {1, 2}, 2.0),
    };
    if (close_inside_a) cells.push_back(make_cell(5, 1, {0, 1}, 3.0, Label::A));
    return totalize_filtration(FilteredComplex(cells));
}

}  // namespace

TEST_CASE("build_d_im keeps columns, reorders rows only") {
    const auto cyl = fixtures::cylinder();
    const auto d = boundary_matrix(cyl);
    const auto d_im = build_d_im(cyl, Block::A);
    for (ColIndex j = 0; j < d.n_cols(); ++j) CHECK(d.column(j) == d_im.column(j));
    CHECK(d_im.row_order().block_size == 6);

    const auto d_ab = build_d_im(cyl, Block::AB);
    CHECK(d_ab.row_order().block_size == 12);
}

TEST_CASE("no kernel births on the plain cylinder for S = A") {
    const auto kp = kernel_pairs(fixtures::cylinder(), Block::A);
    CHECK(kp.pairs.empty());
}

TEST_CASE("an edge into the block is not a birth") {
    // low of the edge column is the b-row, outside the A-block
    std::vector<Cell> cells = {
        make_cell(0, 0, {}, 0.0, Label::A),
        make_cell(1, 0, {}, 0.0, Label::B),
        make_cell(2, 1, {0, 1}, 1.0),
    };
    const auto complex = totalize_filtration(FilteredComplex(cells));
    const auto kp = kernel_pairs(complex, Block::A);
    CHECK(kp.pairs.empty());
}

TEST_CASE("wedge: one degree-0 kernel class, infinite without the A-edge") {
    const auto kp = kernel_pairs(wedge(false), Block::A);
    REQUIRE(kp.pairs.size() == 1);
    CHECK(kp.pairs[0].birth.degree == 0);
    CHECK(kp.pairs[0].birth.time == 2.0);
    CHECK(kp.pairs[0].birth.cell == 4);
    CHECK(!kp.pairs[0].death.has_value());
}

TEST_CASE("wedge: the A-edge kills the class") {
    const auto kp = kernel_pairs(wedge(true), Block::A);
    REQUIRE(kp.pairs.size() == 1);
    CHECK(kp.pairs[0].birth.time == 2.0);
    REQUIRE(kp.pairs[0].death.has_value());
    CHECK(kp.pairs[0].death->time == 3.0);
    CHECK(kp.pairs[0].death->cell == 5);
    CHECK(kp.pairs[0].death->degree == 0);
}

TEST_CASE("cylinder with middle triangle: one infinite degree-1 bar for S = A") {
    const auto complex = fixtures::cylinder_with_middle();
    const auto kp = kernel_pairs(complex, Block::A);
    REQUIRE(kp.pairs.size() == 1);
    CHECK(kp.pairs[0].birth.degree == 1);
    CHECK(kp.pairs[0].birth.time == 3.0);  // the appended middle triangle
    CHECK(kp.pairs[0].birth.cell == 42);
    CHECK(!kp.pairs[0].death.has_value());

    // the representative is a 2-chain whose boundary lies in A
    const auto boundary = test::chain_boundary(complex, kp.pairs[0].birth_representative);
    for (CellId c : boundary) CHECK(complex.cell(c).in_a);
    CHECK(!boundary.empty());
}

TEST_CASE("birth cells lie outside the block, death cells inside") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto complex = fixtures::random_labeled_complex(seed);
        for (Block block : {Block::A, Block::B, Block::AB}) {
            const auto kp = kernel_pairs(complex, block);
            for (const auto& pair : kp.pairs) {
                REQUIRE(!complex.cell(pair.birth.cell).in_block(block));
                if (pair.death) {
                    REQUIRE(complex.cell(pair.death->cell).in_block(block));
                    REQUIRE(pair.death->position > pair.birth.position);
                    REQUIRE(pair.death->degree == pair.birth.degree);
                }
                // the stored representative is a relative cycle: its
                // boundary lies inside the block
                for (CellId c : test::chain_boundary(complex, pair.birth_representative))
                    REQUIRE(complex.cell(c).in_block(block));
            }
        }
    }
}

TEST_CASE("d_ker columns are the cycle columns") {
    // hollow triangle with one vertex in the block: cycle columns are the
    // three vertices plus the full edge cycle
    const auto tri = fixtures::hollow_triangle();
    auto kp = kernel_pairs(tri, Block::A);
    CHECK(kp.cycle_columns.size() == 4);
    CHECK(kp.r_ker.n_cols() == 4);

    // acyclic complex: only the trivial vertex cycles remain
    std::vector<Cell> tree = {
        make_cell(0, 0, {}, 0.0, Label::A),
        make_cell(1, 0, {}, 0.0, Label::B),
        make_cell(2, 0, {}, 0.0),
        make_cell(3, 1, {0, 2}, 1.0),
        make_cell(4, 1, {1, 2}, 1.0),
    };
    const auto tree_complex = totalize_filtration(FilteredComplex(tree));
    auto kp_tree = kernel_pairs(tree_complex, Block::A);
    CHECK(kp_tree.cycle_columns.size() == 3);
    for (ColIndex c : kp_tree.cycle_columns) CHECK(tree_complex.cell_at(c).dim == 0);

    // cylinder, S = A: 9 vertex cycles + 13 edge cycles + 0 triangle cycles
    const auto cyl = fixtures::cylinder();
    auto kp_cyl = kernel_pairs(cyl, Block::A);
    CHECK(kp_cyl.cycle_columns.size() == 22);
    std::size_t degree1 = 0, degree2 = 0;
    for (ColIndex c : kp_cyl.cycle_columns) {
        if (cyl.cell_at(c).dim == 1) ++degree1;
        if (cyl.cell_at(c).dim == 2) ++degree2;
    }
    CHECK(degree1 == 13);  // 21 edges minus rank of d1 (= 9 - 1)
    CHECK(degree2 == 0);
}

TEST_CASE("living kernel bars match the dense oracle at every step") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto complex = fixtures::random_labeled_complex(seed);
        const int top = complex.max_dim();
        for (Block block : {Block::A, Block::B, Block::AB}) {
            const auto kp = kernel_pairs(complex, block);
            for (std::uint32_t step = 1; step <= complex.size(); ++step) {
                const auto dims = oracle::kernel_dims(complex, step, block);
                for (int k = 0; k < top; ++k) {
                    REQUIRE(kp.living_bars(k, step - 1) == dims[k]);
                }
            }
        }
    }
}

TEST_CASE("the three block runs share the zero-column set") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto complex = fixtures::random_labeled_complex(seed);
        const auto a = kernel_pairs(complex, Block::A);
        const auto b = kernel_pairs(complex, Block::B);
        const auto ab = kernel_pairs(complex, Block::AB);
        REQUIRE(a.cycle_columns == b.cycle_columns);
        REQUIRE(a.cycle_columns == ab.cycle_columns);
    }
}
