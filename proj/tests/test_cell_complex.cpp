#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobordia/cell_complex.hpp"
#include "cobordia/fixtures.hpp"
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

bool has_issue(const ValidationReport& report, ValidationIssue::Kind kind) {
    for (const auto& issue : report.issues)
        if (issue.kind == kind) return true;
    return false;
}

}  // namespace

TEST_CASE("the cylinder fixture is valid") {
    const FilteredComplex cyl = fixtures::cylinder();
    CHECK(cyl.size() == 42);
    CHECK(cyl.count_in_block(Block::A) == 6);
    CHECK(cyl.count_in_block(Block::B) == 6);
    CHECK(validate(cyl).valid());
}

TEST_CASE("label violations are reported") {
    // a vertex claimed by both subcomplexes
    std::vector<Cell> cells = {make_cell(0, 0, {}, 0.0)};
    cells[0].in_a = cells[0].in_b = true;
    auto report = validate(FilteredComplex(cells));
    CHECK(has_issue(report, ValidationIssue::Kind::LabelsNotDisjoint));

    // an A-labeled edge with an interior endpoint
    std::vector<Cell> open_label = {
        make_cell(0, 0, {}, 0.0, Label::A),
        make_cell(1, 0, {}, 0.0, Label::B),
        make_cell(2, 1, {0, 1}, 1.0, Label::A),
    };
    report = validate(FilteredComplex(open_label));
    CHECK(has_issue(report, ValidationIssue::Kind::LabelNotFaceClosed));
}

TEST_CASE("structural violations are reported") {
    // boundary of boundary not zero: a triangle missing one edge reference
    std::vector<Cell> cells = {
        make_cell(0, 0, {}, 0.0, Label::A), make_cell(1, 0, {}, 0.0, Label::B),
        make_cell(2, 0, {}, 0.0),           make_cell(3, 1, {0, 1}, 1.0),
        make_cell(4, 1, {0, 2}, 1.0),       make_cell(5, 1, {1, 2}, 1.0),
        make_cell(6, 2, {3, 4}, 2.0),
    };
    auto report = validate(FilteredComplex(cells));
    CHECK(has_issue(report, ValidationIssue::Kind::BoundaryNotClosed));

    // non-monotone filtration
    std::vector<Cell> non_monotone = {
        make_cell(0, 0, {}, 2.0, Label::A),
        make_cell(1, 0, {}, 0.0, Label::B),
        make_cell(2, 1, {0, 1}, 1.0),
    };
    report = validate(FilteredComplex(non_monotone));
    CHECK(has_issue(report, ValidationIssue::Kind::FiltrationNotMonotone));

    // empty subcomplexes
    std::vector<Cell> unlabeled = {make_cell(0, 0, {}, 0.0)};
    report = validate(FilteredComplex(unlabeled));
    CHECK(has_issue(report, ValidationIssue::Kind::EmptyA));
    CHECK(has_issue(report, ValidationIssue::Kind::EmptyB));
    CHECK(report.structurally_valid());
}

TEST_CASE("random mutations of valid complexes are caught") {
    int caught = 0, trials = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        FilteredComplex complex = fixtures::random_labeled_complex(seed);
        REQUIRE(validate(complex).valid());
        fixtures::Rng rng(seed + 1000);

        std::vector<Cell> cells = complex.cells();
        const int mutation = rng.below(3);
        if (mutation == 0) {
            // drop one edge from a triangle: the two remaining edges share
            // only one vertex, so the boundary no longer closes up
            std::vector<CellId> candidates;
            for (const auto& c : cells)
                if (c.dim == 2) candidates.push_back(c.id);
            if (candidates.empty()) continue;
            cells[candidates[rng.below(candidates.size())]].boundary.pop_back();
        } else if (mutation == 1) {
            // push a face above its coface in f
            std::vector<CellId> candidates;
            for (const auto& c : cells)
                if (!c.boundary.empty()) candidates.push_back(c.id);
            if (candidates.empty()) continue;
            const Cell& coface = cells[candidates[rng.below(candidates.size())]];
            cells[coface.boundary.front()].filtration = coface.filtration + 1.0;
        } else {
            // break face-closure of a label
            std::vector<CellId> candidates;
            for (const auto& c : cells)
                if (c.dim == 0 && (c.in_a || c.in_b)) candidates.push_back(c.id);
            if (candidates.empty()) continue;
            Cell& victim = cells[candidates[rng.below(candidates.size())]];
            bool is_face_of_labeled = false;
            for (const auto& c : cells)
                if ((c.in_a || c.in_b) &&
                    std::find(c.boundary.begin(), c.boundary.end(), victim.id) !=
                        c.boundary.end())
                    is_face_of_labeled = true;
            if (!is_face_of_labeled) continue;
            victim.in_a = victim.in_b = false;
        }
        ++trials;
        const auto report = validate(FilteredComplex(cells));
        if (!report.valid()) ++caught;
    }
    CHECK(trials > 10);
    CHECK(caught == trials);
}

TEST_CASE("totalize orders by f, dimension, then input index") {
    // a triangle with every cell at f = 0: vertices, then edges, then the
    // 2-cell
    std::vector<Cell> cells = {
        make_cell(0, 0, {}, 0.0, Label::A), make_cell(1, 0, {}, 0.0, Label::B),
        make_cell(2, 0, {}, 0.0),           make_cell(3, 1, {0, 1}, 0.0),
        make_cell(4, 1, {0, 2}, 0.0),       make_cell(5, 1, {1, 2}, 0.0),
        make_cell(6, 2, {3, 4, 5}, 0.0),
    };
    const auto complex = totalize_filtration(FilteredComplex(cells));
    const std::vector<CellId> expected = {0, 1, 2, 3, 4, 5, 6};
    CHECK(complex.order() == expected);

    // ties at equal f and dim go to the earlier input index
    std::vector<Cell> tied = {
        make_cell(0, 0, {}, 0.0, Label::A),
        make_cell(1, 0, {}, 0.0, Label::B),
        make_cell(2, 1, {0, 1}, 1.0),
        make_cell(3, 1, {0, 1}, 1.0),
    };
    const auto tied_complex = totalize_filtration(FilteredComplex(tied));
    CHECK(tied_complex.position_of(2) < tied_complex.position_of(3));

    // idempotent and (cell, f) preserving
    const auto twice = totalize_filtration(complex);
    CHECK(twice.order() == complex.order());
    for (CellId id = 0; id < complex.size(); ++id)
        CHECK(twice.cell(id).filtration == complex.cell(id).filtration);

    // distinct f values sort by f
    std::vector<Cell> distinct = {
        make_cell(0, 0, {}, 0.3, Label::A),
        make_cell(1, 0, {}, 0.1, Label::B),
        make_cell(2, 0, {}, 0.2),
    };
    const auto sorted = totalize_filtration(FilteredComplex(distinct));
    CHECK(sorted.order() == std::vector<CellId>{1, 2, 0});
}

TEST_CASE("boundary matrix of small fixtures") {
    // single edge
    std::vector<Cell> cells = {
        make_cell(0, 0, {}, 0.0, Label::A),
        make_cell(1, 0, {}, 0.0, Label::B),
        make_cell(2, 1, {0, 1}, 1.0),
    };
    const auto complex = totalize_filtration(FilteredComplex(cells));
    const auto d = boundary_matrix(complex);
    CHECK(d.column_empty(0));
    CHECK(d.column_empty(1));
    CHECK(d.column(2) == std::vector<RowIndex>{0, 1});

    // hollow triangle: three weight-2 edge columns
    const auto tri = fixtures::hollow_triangle();
    const auto dt = boundary_matrix(tri);
    CHECK(dt.n_cols() == 6);
    for (ColIndex j = 3; j < 6; ++j) CHECK(dt.column(j).size() == 2);

    // cylinder: 42 columns, triangle columns have exactly 3 entries
    const auto cyl = fixtures::cylinder();
    const auto dc = boundary_matrix(cyl);
    CHECK(dc.n_cols() == 42);
    int triangles = 0;
    for (ColIndex j = 0; j < dc.n_cols(); ++j) {
        if (cyl.cell_at(j).dim == 2) {
            ++triangles;
            CHECK(dc.column(j).size() == 3);
        }
    }
    CHECK(triangles == 12);
}

TEST_CASE("boundary matrix squares to zero") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto complex = fixtures::random_labeled_complex(seed);
        const auto d = boundary_matrix(complex);
        const auto square = test::dense_multiply(d, d);
        for (ColIndex j = 0; j < square.n_cols(); ++j) REQUIRE(square.column_empty(j));
    }
}

TEST_CASE("block row order puts the block first, by filtration") {
    const auto cyl = fixtures::cylinder();
    const auto order_a = block_row_order(cyl, Block::A);
    CHECK(order_a.block_size == 6);
    // block ranks 0..2 are the A vertices, 3..5 the A edges, in filtration order
    std::uint32_t expected_rank = 0;
    for (std::uint32_t p = 0; p < cyl.size(); ++p) {
        if (cyl.cell_at(p).in_a) {
            CHECK(order_a.rank_of[p] == expected_rank);
            ++expected_rank;
        } else {
            CHECK(order_a.rank_of[p] >= order_a.block_size);
        }
    }

    const auto order_ab = block_row_order(cyl, Block::AB);
    CHECK(order_ab.block_size == 12);

    // a complex that is all block: the order equals the filtration order
    std::vector<Cell> all_a = {
        make_cell(0, 0, {}, 0.0, Label::A),
        make_cell(1, 0, {}, 0.5, Label::B),
    };
    const auto small = totalize_filtration(FilteredComplex(all_a));
    const auto order = block_row_order(small, Block::AB);
    CHECK(order.rank_of == std::vector<std::uint32_t>{0, 1});
}
