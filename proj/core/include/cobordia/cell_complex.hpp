// Filtered regular cell complexes with two marked disjoint subcomplexes.

#ifndef COBORDIA_CELL_COMPLEX_HPP
#define COBORDIA_CELL_COMPLEX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobordia/gf2.hpp"

namespace cobordia {

using CellId = std::uint32_t;

enum class Label : std::uint8_t { Interior, A, B };

/// The block of rows moved to the front when reducing: one of the marked
/// subcomplexes or their union.
enum class Block : std::uint8_t { A, B, AB };

std::string to_string(Label label);
std::string to_string(Block block);

struct Cell {
    CellId id = 0;
    int dim = 0;
    std::vector<CellId> boundary;  // sorted ids of the (dim-1)-faces
    double filtration = 0.0;
    // Membership flags rather than a single enum so that validation can
    // report a cell claimed by both subcomplexes.
    bool in_a = false;
    bool in_b = false;

    Label label() const {
        if (in_a) return Label::A;
        if (in_b) return Label::B;
        return Label::Interior;
    }
    bool in_block(Block s) const {
        switch (s) {
            case Block::A: return in_a;
            case Block::B: return in_b;
            default: return in_a || in_b;
        }
    }
};

struct ValidationIssue {
    enum class Kind {
        IdsNotDense,
        DuplicateBoundaryEntry,
        BoundaryOutOfRange,
        BoundaryDimension,
        VertexWithBoundary,
        BoundaryNotClosed,   // d of d != 0
        FiltrationNotMonotone,
        LabelsNotDisjoint,
        LabelNotFaceClosed,
        EmptyA,
        EmptyB,
    };
    Kind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const { return issues.empty(); }
    /// True when only the label non-emptiness checks failed; used for
    /// intermediate complexes that have not been labeled yet.
    bool structurally_valid() const;
    std::string to_string() const;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const ValidationReport& report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Ordered cells with GF(2) boundaries, filtration values and A/B labels.
/// Cells are stored by id; a totalized complex additionally carries a strict
/// total order (positions) refining the filtration.
class FilteredComplex {
public:
    FilteredComplex() = default;
    explicit FilteredComplex(std::vector<Cell> cells);

    std::size_t size() const { return cells_.size(); }
    const Cell& cell(CellId id) const { return cells_[id]; }
    const std::vector<Cell>& cells() const { return cells_; }

    bool is_totalized() const { return order_.size() == cells_.size() && !cells_.empty(); }
    /// position -> id
    const std::vector<CellId>& order() const { return order_; }
    CellId id_at(std::uint32_t position) const { return order_[position]; }
    std::uint32_t position_of(CellId id) const { return position_of_[id]; }
    const Cell& cell_at(std::uint32_t position) const { return cells_[order_[position]]; }

    int max_dim() const;
    std::size_t count_in_block(Block s) const;

    void set_order(std::vector<CellId> order);  // used by totalize_filtration

private:
    std::vector<Cell> cells_;
    std::vector<CellId> order_;
    std::vector<std::uint32_t> position_of_;
};

/// Tie resolution for equal filtration values.
enum class TiePolicy {
    /// (f value, dimension, input id) — the default and only policy.
    FilterDimIndex,
};

/// Checks every structural invariant and returns the full list of
/// violations; an empty report means the complex is valid.
ValidationReport validate(const FilteredComplex& complex);

/// Refines f into a strict total order (a position for every cell).
/// Reported times stay the original f values, so tied cells may later
/// produce diagonal points in diagrams. Idempotent.
FilteredComplex totalize_filtration(const FilteredComplex& complex,
                                    TiePolicy policy = TiePolicy::FilterDimIndex);

/// The boundary matrix with rows and columns in filtration (position)
/// order: column j holds the positions of the boundary of the cell at
/// position j.
SparseGF2Matrix boundary_matrix(const FilteredComplex& complex);

/// Row order putting the cells of the block first (by filtration within the
/// block), followed by the remaining cells by filtration. Ranks are over
/// positions, matching boundary_matrix storage.
RowOrder block_row_order(const FilteredComplex& complex, Block block);

}  // namespace cobordia

#endif
