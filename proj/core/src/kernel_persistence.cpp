#include "cobordia/kernel_persistence.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "cobordia/errors.hpp"

namespace cobordia {

std::size_t KernelPairs::living_bars(int degree, std::uint32_t position) const {
    std::size_t n = 0;
    for (const auto& pair : pairs) {
        if (pair.birth.degree != degree) continue;
        if (pair.birth.position > position) continue;
        if (pair.death && pair.death->position <= position) continue;
        ++n;
    }
    return n;
}

SparseGF2Matrix build_d_im(const FilteredComplex& complex, Block block) {
    SparseGF2Matrix d = boundary_matrix(complex);
    d.set_row_order(block_row_order(complex, block));
    return d;
}

namespace {

KernelEvent make_event(KernelEvent::Kind kind, const FilteredComplex& complex,
                       std::uint32_t position) {
    const Cell& cell = complex.cell_at(position);
    return KernelEvent{kind, cell.dim - 1, cell.filtration, cell.id, position};
}

std::vector<CellId> chain_cells(const std::vector<RowIndex>& positions,
                                const FilteredComplex& complex) {
    std::vector<CellId> out;
    out.reserve(positions.size());
    for (RowIndex p : positions) out.push_back(complex.id_at(p));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<KernelPair> kernel_births(const SparseGF2Matrix& r_im,
                                      const SparseGF2Matrix& v_im,
                                      const FilteredComplex& complex, Block block) {
    const RowOrder& order = r_im.row_order();
    std::vector<KernelPair> births;
    for (ColIndex j = 0; j < r_im.n_cols(); ++j) {
        if (complex.cell_at(j).in_block(block)) continue;
        const auto low = r_im.low(j);
        if (!low || !order.in_block(*low)) continue;
        KernelPair pair;
        pair.birth = make_event(KernelEvent::Kind::Birth, complex, j);
        pair.birth_representative = chain_cells(v_im.column(j), complex);
        births.push_back(std::move(pair));
    }
    return births;
}

SparseGF2Matrix build_d_ker(const SparseGF2Matrix& r_im, const SparseGF2Matrix& v_im,
                            const FilteredComplex& complex, Block block,
                            std::vector<std::uint32_t>& column_cells) {
    column_cells.clear();
    std::vector<std::vector<RowIndex>> columns;
    for (ColIndex j = 0; j < r_im.n_cols(); ++j) {
        if (!r_im.column_empty(j)) continue;
        columns.push_back(v_im.column(j));
        column_cells.push_back(j);
    }
    SparseGF2Matrix d_ker(complex.size(), std::move(columns));
    d_ker.set_row_order(block_row_order(complex, block));
    return d_ker;
}

KernelPairs kernel_pairs(const FilteredComplex& complex, Block block) {
    if (!complex.is_totalized())
        throw std::logic_error("kernel_pairs requires a totalized complex");

    KernelPairs result;
    result.block = block;
    result.row_order = block_row_order(complex, block);

    SparseGF2Matrix d_im = boundary_matrix(complex);
    d_im.set_row_order(result.row_order);
    auto reduced_im = reduce(d_im);
    result.r_im = std::move(reduced_im.R);
    result.v_im = std::move(reduced_im.V);

    result.column_degree.resize(complex.size());
    for (std::uint32_t p = 0; p < complex.size(); ++p)
        result.column_degree[p] = complex.cell_at(p).dim - 1;

    result.pairs = kernel_births(result.r_im, result.v_im, complex, block);

    SparseGF2Matrix d_ker =
        build_d_ker(result.r_im, result.v_im, complex, block, result.ker_column_cells);
    result.cycle_columns = result.ker_column_cells;
    auto reduced_ker = reduce(d_ker);
    result.r_ker = std::move(reduced_ker.R);
    result.v_ker = std::move(reduced_ker.V);

    // Deaths: a D_ker column of a cell tau inside the block whose reduced low
    // cannot be pushed into the block closes the relative cycle born at the
    // low row's cell.
    std::unordered_map<std::uint32_t, std::size_t> birth_index;
    for (std::size_t i = 0; i < result.pairs.size(); ++i)
        birth_index.emplace(result.pairs[i].birth.position, i);

    for (ColIndex c = 0; c < result.r_ker.n_cols(); ++c) {
        const std::uint32_t tau_pos = result.ker_column_cells[c];
        if (!complex.cell_at(tau_pos).in_block(block)) continue;
        const auto low = result.r_ker.low(c);
        if (!low || result.row_order.in_block(*low)) continue;

        const auto it = birth_index.find(*low);
        if (it == birth_index.end())
            throw PairingMismatch("kernel death at cell " +
                                  std::to_string(complex.cell_at(tau_pos).id) +
                                  " pairs a row that is not a recorded birth");
        KernelPair& pair = result.pairs[it->second];
        if (pair.death)
            throw PairingMismatch("kernel birth paired twice");
        pair.death = make_event(KernelEvent::Kind::Death, complex, tau_pos);
        if (pair.death->degree != pair.birth.degree)
            throw PairingMismatch("kernel pair degrees disagree");
        if (pair.death->position <= pair.birth.position)
            throw PairingMismatch("kernel death does not follow its birth");
    }

    return result;
}

}  // namespace cobordia
