// Sparse GF(2) column matrices and the left-to-right column reduction
// producing R = D * V.

#ifndef COBORDIA_GF2_HPP
#define COBORDIA_GF2_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cobordia {

using RowIndex = std::uint32_t;
using ColIndex = std::uint32_t;

/// A permutation of the row indices together with a block prefix.
///
/// Matrices keep their rows in storage order; a RowOrder is carried as
/// metadata so the same stored matrix can be read under different block
/// orders without permuting entries. rank_of[r] is the position of storage
/// row r in the order; ranks below block_size form the designated block.
struct RowOrder {
    std::vector<std::uint32_t> rank_of;
    std::uint32_t block_size = 0;

    static RowOrder identity(std::size_t n_rows);

    std::size_t size() const { return rank_of.size(); }
    bool in_block(RowIndex r) const { return rank_of[r] < block_size; }
};

/// Column-major sparse matrix over GF(2). Each column is a strictly
/// increasing list of storage row indices.
class SparseGF2Matrix {
public:
    SparseGF2Matrix() = default;
    SparseGF2Matrix(std::size_t n_rows, std::size_t n_cols);
    SparseGF2Matrix(std::size_t n_rows, std::vector<std::vector<RowIndex>> columns);

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return cols_.size(); }

    const std::vector<RowIndex>& column(ColIndex j) const { return cols_[j]; }
    bool column_empty(ColIndex j) const { return cols_[j].empty(); }
    void set_column(ColIndex j, std::vector<RowIndex> entries);
    bool get(RowIndex i, ColIndex j) const;

    /// dst <- dst XOR src (symmetric difference of the row sets).
    void add_column(ColIndex src, ColIndex dst);

    const RowOrder& row_order() const;
    void set_row_order(RowOrder order);
    bool has_row_order() const { return !row_order_.rank_of.empty(); }

    /// The entry of column j with maximal rank in the row order, or nullopt
    /// for an empty column. Returns the storage row index.
    std::optional<RowIndex> low(ColIndex j) const;

    bool operator==(const SparseGF2Matrix& other) const;

private:
    std::size_t n_rows_ = 0;
    std::vector<std::vector<RowIndex>> cols_;
    RowOrder row_order_;  // empty rank_of means identity
};

/// Result of the standard column reduction: R = D * V with V invertible,
/// unit upper-triangular, and the lows of non-zero columns of R pairwise
/// distinct with respect to D's row order.
struct ReductionResult {
    SparseGF2Matrix R;
    SparseGF2Matrix V;
};

/// Standard left-to-right column reduction. For each column j, while some
/// j' < j has low(R, j') == low(R, j), add column j' of R into j (and the
/// same in V). Lows are taken with respect to D's row order.
ReductionResult reduce(const SparseGF2Matrix& D);

/// XOR of two strictly increasing index lists.
std::vector<RowIndex> symmetric_difference(const std::vector<RowIndex>& a,
                                           const std::vector<RowIndex>& b);

/// Debug dump: one line per column, space-separated storage row indices,
/// `-` for an empty column.
std::string debug_dump(const SparseGF2Matrix& m);

}  // namespace cobordia

#endif
