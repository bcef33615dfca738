#include "cobordia/voronoi_dual.hpp"

#include <algorithm>
#include <set>

#include "cobordia/errors.hpp"

namespace cobordia {

DualComplex dualize(const FilteredComplex& complex, int ambient_dim) {
    if (!complex.is_totalized())
        throw std::logic_error("dualize requires a totalized complex");
    {
        bool full = false;
        for (const auto& cell : complex.cells()) full |= cell.dim == ambient_dim;
        if (!full)
            throw NotFullDimensional("no cells of dimension " + std::to_string(ambient_dim));
    }

    const std::size_t n = complex.size();
    DualComplex dual;
    dual.ambient_dim = ambient_dim;
    dual.primal_of.resize(n);
    dual.dual_of.resize(n);

    // The dual cell of the primal cell at position j sits at dual position
    // N-1-j; boundaries in the dual are cofaces in the primal.
    std::vector<Cell> cells(n);
    for (std::uint32_t j = 0; j < n; ++j) {
        const Cell& primal = complex.cell_at(j);
        const CellId dual_id = static_cast<CellId>(n - 1 - j);
        dual.primal_of[dual_id] = primal.id;
        dual.dual_of[primal.id] = dual_id;
        cells[dual_id].id = dual_id;
        cells[dual_id].dim = ambient_dim - primal.dim;
        cells[dual_id].filtration = -primal.filtration;
    }
    for (std::uint32_t j = 0; j < n; ++j) {
        const Cell& primal = complex.cell_at(j);
        for (CellId face : primal.boundary) {
            // primal face -> the dual of the coface bounds the dual of the face
            cells[dual.dual_of[face]].boundary.push_back(dual.dual_of[primal.id]);
        }
    }

    dual.complex = FilteredComplex(std::move(cells));
    std::vector<CellId> order(n);
    for (std::uint32_t p = 0; p < n; ++p) order[p] = p;
    dual.complex.set_order(std::move(order));

    const auto report = validate(dual.complex);
    if (!report.structurally_valid()) throw ValidationError(report);
    return dual;
}

namespace {

/// Dual vertices (dimension-0 dual cells) in the boundary closure of a cell.
void collect_dual_vertices(const FilteredComplex& complex, CellId id, std::set<CellId>& out) {
    const Cell& cell = complex.cell(id);
    if (cell.dim == 0) {
        out.insert(id);
        return;
    }
    for (CellId b : cell.boundary) collect_dual_vertices(complex, b, out);
}

}  // namespace

DualTunnels dual_tunnels(const DualComplex& dual, const std::vector<CellId>& a_star,
                         const std::vector<CellId>& b_star) {
    const std::set<CellId> set_a(a_star.begin(), a_star.end());
    const std::set<CellId> set_b(b_star.begin(), b_star.end());

    std::vector<Cell> cells = dual.complex.cells();
    for (auto& cell : cells) {
        std::set<CellId> vertices;
        collect_dual_vertices(dual.complex, cell.id, vertices);
        cell.in_a = !vertices.empty() &&
                    std::all_of(vertices.begin(), vertices.end(),
                                [&](CellId v) { return set_a.count(v) > 0; });
        cell.in_b = !vertices.empty() &&
                    std::all_of(vertices.begin(), vertices.end(),
                                [&](CellId v) { return set_b.count(v) > 0; });
    }

    FilteredComplex labeled = totalize_filtration(FilteredComplex(std::move(cells)));
    const auto report = validate(labeled);
    if (!report.valid()) throw ValidationError(report);

    DualTunnels out;
    out.result = compute_cobordisms(labeled);
    for (const auto& pair : out.result.pairs) {
        if (pair.degree != 0) continue;
        CobordismPair bar = pair;
        bar.birth_time = -bar.birth_time;
        if (bar.death_time) bar.death_time = -*bar.death_time;
        out.bars.push_back(std::move(bar));
    }
    return out;
}

}  // namespace cobordia
