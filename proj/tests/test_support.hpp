// Shared helpers for the suites. The dense GF(2) product below is the
// independent check for R = D * V; it deliberately avoids the library's
// sparse arithmetic.

#ifndef COBORDIA_TEST_SUPPORT_HPP
#define COBORDIA_TEST_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "cobordia/cell_complex.hpp"
#include "cobordia/gf2.hpp"

namespace cobordia::test {

/// Dense word-packed GF(2) product of two sparse matrices.
inline SparseGF2Matrix dense_multiply(const SparseGF2Matrix& a, const SparseGF2Matrix& b) {
    const std::size_t rows = a.n_rows();
    const std::size_t words = (rows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> a_cols(a.n_cols(),
                                                   std::vector<std::uint64_t>(words, 0));
    for (ColIndex j = 0; j < a.n_cols(); ++j)
        for (RowIndex i : a.column(j)) a_cols[j][i >> 6] |= std::uint64_t{1} << (i & 63);

    SparseGF2Matrix out(rows, b.n_cols());
    std::vector<std::uint64_t> acc(words);
    for (ColIndex j = 0; j < b.n_cols(); ++j) {
        std::fill(acc.begin(), acc.end(), 0);
        for (RowIndex k : b.column(j))
            for (std::size_t w = 0; w < words; ++w) acc[w] ^= a_cols[k][w];
        std::vector<RowIndex> col;
        for (std::size_t i = 0; i < rows; ++i)
            if ((acc[i >> 6] >> (i & 63)) & 1) col.push_back(static_cast<RowIndex>(i));
        out.set_column(j, std::move(col));
    }
    return out;
}

/// Boundary of a chain given as cell ids, as sorted cell ids.
inline std::vector<CellId> chain_boundary(const FilteredComplex& complex,
                                          const std::vector<CellId>& chain) {
    std::vector<RowIndex> acc;
    for (CellId c : chain) {
        std::vector<RowIndex> faces(complex.cell(c).boundary.begin(),
                                    complex.cell(c).boundary.end());
        acc = symmetric_difference(acc, faces);
    }
    return {acc.begin(), acc.end()};
}

/// Finds the unique cell with the given vertex set in a simplicial fixture
/// (vertex sets recovered through boundaries).
inline std::vector<std::vector<CellId>> vertex_sets(const FilteredComplex& complex) {
    std::vector<std::vector<CellId>> sets(complex.size());
    for (const auto& cell : complex.cells()) {
        if (cell.dim == 0) {
            sets[cell.id] = {cell.id};
            continue;
        }
        std::vector<CellId> acc;
        for (CellId f : cell.boundary)
            for (CellId v : sets[f])
                if (std::find(acc.begin(), acc.end(), v) == acc.end()) acc.push_back(v);
        std::sort(acc.begin(), acc.end());
        sets[cell.id] = std::move(acc);
    }
    return sets;
}

inline CellId cell_by_vertices(const FilteredComplex& complex, std::vector<CellId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    const auto sets = vertex_sets(complex);
    for (CellId id = 0; id < complex.size(); ++id)
        if (sets[id] == vertices) return id;
    throw std::logic_error("no cell with the requested vertex set");
}

}  // namespace cobordia::test

#endif
