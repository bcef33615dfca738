#include "cobordia/cell_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cobordia {

std::string to_string(Label label) {
    switch (label) {
        case Label::A: return "A";
        case Label::B: return "B";
        default: return "I";
    }
}

std::string to_string(Block block) {
    switch (block) {
        case Block::A: return "A";
        case Block::B: return "B";
        default: return "AB";
    }
}

bool ValidationReport::structurally_valid() const {
    for (const auto& issue : issues) {
        if (issue.kind != ValidationIssue::Kind::EmptyA &&
            issue.kind != ValidationIssue::Kind::EmptyB)
            return false;
    }
    return true;
}

namespace {

const char* kind_name(ValidationIssue::Kind kind) {
    using K = ValidationIssue::Kind;
    switch (kind) {
        case K::IdsNotDense: return "ids not dense";
        case K::DuplicateBoundaryEntry: return "duplicate boundary entry";
        case K::BoundaryOutOfRange: return "boundary id out of range";
        case K::BoundaryDimension: return "boundary cell dimension mismatch";
        case K::VertexWithBoundary: return "vertex with non-empty boundary";
        case K::BoundaryNotClosed: return "boundary of boundary not zero";
        case K::FiltrationNotMonotone: return "filtration not monotone on faces";
        case K::LabelsNotDisjoint: return "labels not disjoint";
        case K::LabelNotFaceClosed: return "label not face-closed";
        case K::EmptyA: return "subcomplex A empty";
        case K::EmptyB: return "subcomplex B empty";
    }
    return "unknown";
}

}  // namespace

std::string ValidationReport::to_string() const {
    if (issues.empty()) return "valid";
    std::ostringstream out;
    for (const auto& issue : issues) {
        out << kind_name(issue.kind);
        if (!issue.detail.empty()) out << ": " << issue.detail;
        out << '\n';
    }
    return out.str();
}

ValidationError::ValidationError(const ValidationReport& report)
    : std::runtime_error("invalid complex\n" + report.to_string()), report_(report) {}

FilteredComplex::FilteredComplex(std::vector<Cell> cells) : cells_(std::move(cells)) {
    for (auto& cell : cells_) {
        std::sort(cell.boundary.begin(), cell.boundary.end());
    }
}

int FilteredComplex::max_dim() const {
    int d = 0;
    for (const auto& cell : cells_) d = std::max(d, cell.dim);
    return d;
}

std::size_t FilteredComplex::count_in_block(Block s) const {
    std::size_t n = 0;
    for (const auto& cell : cells_)
        if (cell.in_block(s)) ++n;
    return n;
}

void FilteredComplex::set_order(std::vector<CellId> order) {
    order_ = std::move(order);
    position_of_.assign(cells_.size(), 0);
    for (std::uint32_t p = 0; p < order_.size(); ++p) position_of_[order_[p]] = p;
}

ValidationReport validate(const FilteredComplex& complex) {
    ValidationReport report;
    const auto& cells = complex.cells();
    const std::size_t n = cells.size();
    using K = ValidationIssue::Kind;

    for (std::size_t i = 0; i < n; ++i) {
        if (cells[i].id != i) {
            report.issues.push_back({K::IdsNotDense,
                                     "cell at index " + std::to_string(i) + " has id " +
                                         std::to_string(cells[i].id)});
            return report;  // indexing is unreliable; stop here
        }
    }

    for (const auto& cell : cells) {
        bool boundary_ok = true;
        for (std::size_t k = 0; k + 1 < cell.boundary.size(); ++k) {
            if (cell.boundary[k] == cell.boundary[k + 1]) {
                report.issues.push_back({K::DuplicateBoundaryEntry,
                                         "cell " + std::to_string(cell.id)});
                boundary_ok = false;
                break;
            }
        }
        for (CellId b : cell.boundary) {
            if (b >= n) {
                report.issues.push_back({K::BoundaryOutOfRange,
                                         "cell " + std::to_string(cell.id) + " -> " +
                                             std::to_string(b)});
                boundary_ok = false;
            }
        }
        if (!boundary_ok) continue;

        if (cell.dim == 0 && !cell.boundary.empty()) {
            report.issues.push_back({K::VertexWithBoundary, "cell " + std::to_string(cell.id)});
            continue;
        }
        for (CellId b : cell.boundary) {
            if (cells[b].dim != cell.dim - 1) {
                report.issues.push_back({K::BoundaryDimension,
                                         "cell " + std::to_string(cell.id) + " has face " +
                                             std::to_string(b) + " of dim " +
                                             std::to_string(cells[b].dim)});
            }
            if (cells[b].filtration > cell.filtration) {
                report.issues.push_back({K::FiltrationNotMonotone,
                                         "f(" + std::to_string(b) + ") > f(" +
                                             std::to_string(cell.id) + ")"});
            }
        }

        // d(d(cell)) over GF(2)
        std::vector<RowIndex> square;
        for (CellId b : cell.boundary) {
            std::vector<RowIndex> face(cells[b].boundary.begin(), cells[b].boundary.end());
            square = symmetric_difference(square, face);
        }
        if (!square.empty()) {
            report.issues.push_back({K::BoundaryNotClosed, "cell " + std::to_string(cell.id)});
        }
    }

    bool any_a = false, any_b = false;
    for (const auto& cell : cells) {
        if (cell.in_a && cell.in_b) {
            report.issues.push_back({K::LabelsNotDisjoint, "cell " + std::to_string(cell.id)});
        }
        any_a |= cell.in_a;
        any_b |= cell.in_b;
        for (CellId b : cell.boundary) {
            if (b >= n) continue;
            if (cell.in_a && !cells[b].in_a) {
                report.issues.push_back({K::LabelNotFaceClosed,
                                         "A not face-closed at cell " + std::to_string(cell.id)});
            }
            if (cell.in_b && !cells[b].in_b) {
                report.issues.push_back({K::LabelNotFaceClosed,
                                         "B not face-closed at cell " + std::to_string(cell.id)});
            }
        }
    }
    if (!any_a) report.issues.push_back({K::EmptyA, ""});
    if (!any_b) report.issues.push_back({K::EmptyB, ""});

    return report;
}

FilteredComplex totalize_filtration(const FilteredComplex& complex, TiePolicy) {
    FilteredComplex out = complex;
    std::vector<CellId> order(out.size());
    std::iota(order.begin(), order.end(), 0u);
    const auto& cells = out.cells();
    std::stable_sort(order.begin(), order.end(), [&](CellId a, CellId b) {
        if (cells[a].filtration != cells[b].filtration)
            return cells[a].filtration < cells[b].filtration;
        if (cells[a].dim != cells[b].dim) return cells[a].dim < cells[b].dim;
        return a < b;
    });
    out.set_order(std::move(order));
    return out;
}

SparseGF2Matrix boundary_matrix(const FilteredComplex& complex) {
    if (!complex.is_totalized())
        throw std::logic_error("boundary_matrix requires a totalized complex");
    const std::size_t n = complex.size();
    SparseGF2Matrix D(n, n);
    for (std::uint32_t j = 0; j < n; ++j) {
        const Cell& cell = complex.cell_at(j);
        std::vector<RowIndex> rows;
        rows.reserve(cell.boundary.size());
        for (CellId b : cell.boundary) rows.push_back(complex.position_of(b));
        D.set_column(j, std::move(rows));
    }
    return D;
}

RowOrder block_row_order(const FilteredComplex& complex, Block block) {
    if (!complex.is_totalized())
        throw std::logic_error("block_row_order requires a totalized complex");
    const std::size_t n = complex.size();
    RowOrder order;
    order.rank_of.assign(n, 0);
    std::uint32_t next = 0;
    for (std::uint32_t p = 0; p < n; ++p)
        if (complex.cell_at(p).in_block(block)) order.rank_of[p] = next++;
    order.block_size = next;
    for (std::uint32_t p = 0; p < n; ++p)
        if (!complex.cell_at(p).in_block(block)) order.rank_of[p] = next++;
    return order;
}

}  // namespace cobordia
