#include "cobordia/gf2.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cobordia {

RowOrder RowOrder::identity(std::size_t n_rows) {
    RowOrder order;
    order.rank_of.resize(n_rows);
    std::iota(order.rank_of.begin(), order.rank_of.end(), 0u);
    order.block_size = 0;
    return order;
}

SparseGF2Matrix::SparseGF2Matrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows), cols_(n_cols) {}

SparseGF2Matrix::SparseGF2Matrix(std::size_t n_rows,
                                 std::vector<std::vector<RowIndex>> columns)
    : n_rows_(n_rows), cols_(std::move(columns)) {
    for (auto& col : cols_) {
        assert(std::is_sorted(col.begin(), col.end()));
        assert(col.empty() || col.back() < n_rows_);
    }
}

void SparseGF2Matrix::set_column(ColIndex j, std::vector<RowIndex> entries) {
    std::sort(entries.begin(), entries.end());
    assert(std::adjacent_find(entries.begin(), entries.end()) == entries.end());
    assert(entries.empty() || entries.back() < n_rows_);
    cols_[j] = std::move(entries);
}

bool SparseGF2Matrix::get(RowIndex i, ColIndex j) const {
    const auto& col = cols_[j];
    return std::binary_search(col.begin(), col.end(), i);
}

void SparseGF2Matrix::add_column(ColIndex src, ColIndex dst) {
    if (src == dst) throw std::invalid_argument("add_column: src == dst");
    cols_[dst] = symmetric_difference(cols_[dst], cols_[src]);
}

const RowOrder& SparseGF2Matrix::row_order() const { return row_order_; }

void SparseGF2Matrix::set_row_order(RowOrder order) {
    if (order.rank_of.size() != n_rows_)
        throw std::invalid_argument("row order size does not match n_rows");
    row_order_ = std::move(order);
}

std::optional<RowIndex> SparseGF2Matrix::low(ColIndex j) const {
    const auto& col = cols_[j];
    if (col.empty()) return std::nullopt;
    if (row_order_.rank_of.empty()) return col.back();
    RowIndex best = col.front();
    std::uint32_t best_rank = row_order_.rank_of[best];
    for (RowIndex r : col) {
        if (row_order_.rank_of[r] > best_rank) {
            best = r;
            best_rank = row_order_.rank_of[r];
        }
    }
    return best;
}

bool SparseGF2Matrix::operator==(const SparseGF2Matrix& other) const {
    return n_rows_ == other.n_rows_ && cols_ == other.cols_;
}

std::vector<RowIndex> symmetric_difference(const std::vector<RowIndex>& a,
                                           const std::vector<RowIndex>& b) {
    std::vector<RowIndex> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

ReductionResult reduce(const SparseGF2Matrix& D) {
    const std::size_t n_rows = D.n_rows();
    const std::size_t n_cols = D.n_cols();
    const bool permuted = D.has_row_order();
    const auto& order = D.row_order();

    // Work in rank space so each column's low is its back() entry.
    auto to_rank = [&](RowIndex r) -> std::uint32_t {
        return permuted ? order.rank_of[r] : r;
    };
    std::vector<RowIndex> row_of_rank(n_rows);
    for (RowIndex r = 0; r < n_rows; ++r) row_of_rank[to_rank(r)] = r;

    std::vector<std::vector<std::uint32_t>> r_cols(n_cols);
    std::vector<std::vector<ColIndex>> v_cols(n_cols);
    // pivot_of_rank[p] = column whose reduced low sits at rank p.
    std::vector<std::int64_t> pivot_of_rank(n_rows, -1);

    std::vector<std::uint32_t> scratch;
    for (ColIndex j = 0; j < n_cols; ++j) {
        auto& col = r_cols[j];
        col.reserve(D.column(j).size());
        for (RowIndex r : D.column(j)) col.push_back(to_rank(r));
        std::sort(col.begin(), col.end());
        v_cols[j] = {j};

        while (!col.empty()) {
            const std::uint32_t p = col.back();
            const std::int64_t other = pivot_of_rank[p];
            if (other < 0) {
                pivot_of_rank[p] = j;
                break;
            }
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(),
                                          r_cols[other].begin(), r_cols[other].end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
            v_cols[j] = symmetric_difference(v_cols[j], v_cols[static_cast<std::size_t>(other)]);
        }
    }

    SparseGF2Matrix R(n_rows, n_cols);
    for (ColIndex j = 0; j < n_cols; ++j) {
        std::vector<RowIndex> rows;
        rows.reserve(r_cols[j].size());
        for (std::uint32_t p : r_cols[j]) rows.push_back(row_of_rank[p]);
        std::sort(rows.begin(), rows.end());
        R.set_column(j, std::move(rows));
    }
    if (permuted) R.set_row_order(order);

    SparseGF2Matrix V(n_cols, std::move(v_cols));
    return ReductionResult{std::move(R), std::move(V)};
}

std::string debug_dump(const SparseGF2Matrix& m) {
    std::ostringstream out;
    for (ColIndex j = 0; j < m.n_cols(); ++j) {
        const auto& col = m.column(j);
        if (col.empty()) {
            out << '-';
        } else {
            for (std::size_t i = 0; i < col.size(); ++i) {
                if (i) out << ' ';
                out << col[i];
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace cobordia
