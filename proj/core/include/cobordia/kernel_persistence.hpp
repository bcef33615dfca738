// Kernel persistence: births, deaths and pairings of Ker(H_*(S_r) -> H_*(X_r))
// for a block S in {A, B, A union B}, via two block-ordered reductions.

#ifndef COBORDIA_KERNEL_PERSISTENCE_HPP
#define COBORDIA_KERNEL_PERSISTENCE_HPP

#include <optional>
#include <vector>

#include "cobordia/cell_complex.hpp"
#include "cobordia/gf2.hpp"

namespace cobordia {

struct KernelEvent {
    enum class Kind : std::uint8_t { Birth, Death };
    Kind kind;
    int degree;              // a (k+1)-cell triggers a degree-k event
    double time;             // original f value of the triggering cell
    CellId cell;
    std::uint32_t position;  // totalized position of the triggering cell
};

struct KernelPair {
    KernelEvent birth;
    std::optional<KernelEvent> death;  // nullopt = infinite bar
    /// The V_im column of the birth cell: a (k+1)-chain with boundary in S,
    /// as cell ids.
    std::vector<CellId> birth_representative;
};

/// Full output of the kernel persistence run for one block, with the
/// matrices retained for the cobordism pairing stage.
struct KernelPairs {
    Block block = Block::A;
    std::vector<KernelPair> pairs;

    SparseGF2Matrix r_im;
    SparseGF2Matrix v_im;
    SparseGF2Matrix r_ker;
    SparseGF2Matrix v_ker;
    RowOrder row_order;  // block-first order shared by r_im and r_ker rows

    /// Column positions of D^X whose reduced columns are zero (the cells
    /// that create cycles in X); block-independent.
    std::vector<ColIndex> cycle_columns;
    /// cell position of each D_ker column.
    std::vector<std::uint32_t> ker_column_cells;
    /// degree of the kernel event a column contributes to, per D^X column
    /// (dim of the cell minus one).
    std::vector<int> column_degree;

    std::size_t living_bars(int degree, std::uint32_t position) const;
};

/// Boundary matrix of the complex with its rows read in the block-first
/// order; columns stay in filtration order. The stored entries are not
/// permuted, only the attached row order changes.
SparseGF2Matrix build_d_im(const FilteredComplex& complex, Block block);

/// Scans reduced (r_im, v_im) for columns of cells outside the block whose
/// low falls inside the block: each is a birth, and the v_im column stores
/// its relative-cycle representative.
std::vector<KernelPair> kernel_births(const SparseGF2Matrix& r_im,
                                      const SparseGF2Matrix& v_im,
                                      const FilteredComplex& complex, Block block);

/// The matrix whose columns are the v_im columns at zero columns of r_im
/// (these store cycles of X), rows read block-first. column_cells receives
/// the cell position owning each column.
SparseGF2Matrix build_d_ker(const SparseGF2Matrix& r_im, const SparseGF2Matrix& v_im,
                            const FilteredComplex& complex, Block block,
                            std::vector<std::uint32_t>& column_cells);

/// The whole pipeline for one block: reduce D_im, collect births, reduce
/// D_ker, collect deaths and pair them with births by the low rows.
KernelPairs kernel_pairs(const FilteredComplex& complex, Block block);

}  // namespace cobordia

#endif
