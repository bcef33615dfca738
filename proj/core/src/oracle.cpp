#include "cobordia/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <unordered_map>

#include "cobordia/errors.hpp"

namespace cobordia::oracle {

void BitVec::operator^=(const BitVec& other) {
    assert(n_ == other.n_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

bool BitVec::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVec::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
    return n_;
}

std::vector<std::uint32_t> BitVec::set_bits() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < n_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

std::size_t rank(std::vector<BitVec> vectors) {
    std::unordered_map<std::size_t, BitVec> basis;  // leading bit -> vector
    std::size_t r = 0;
    for (auto& v : vectors) {
        while (v.any()) {
            const std::size_t lead = v.first_set();
            auto it = basis.find(lead);
            if (it == basis.end()) {
                basis.emplace(lead, std::move(v));
                ++r;
                break;
            }
            v ^= it->second;
        }
    }
    return r;
}

std::vector<BitVec> nullspace_combinations(const std::vector<BitVec>& vectors) {
    struct Row {
        BitVec value;
        BitVec combo;
    };
    std::unordered_map<std::size_t, Row> basis;  // leading bit -> row
    std::vector<BitVec> null_combos;

    for (std::size_t j = 0; j < vectors.size(); ++j) {
        BitVec value = vectors[j];
        BitVec combo(vectors.size());
        combo.set(j);
        while (value.any()) {
            const std::size_t lead = value.first_set();
            auto it = basis.find(lead);
            if (it == basis.end()) break;
            value ^= it->second.value;
            combo ^= it->second.combo;
        }
        if (value.any())
            basis.emplace(value.first_set(), Row{std::move(value), std::move(combo)});
        else
            null_combos.push_back(std::move(combo));
    }
    return null_combos;
}

namespace {

bool in_relative(const Cell& cell, RelativeTo rel) {
    switch (rel) {
        case RelativeTo::A: return cell.in_a;
        case RelativeTo::B: return cell.in_b;
        case RelativeTo::AB: return cell.in_a || cell.in_b;
        default: return false;
    }
}

/// Boundary of the cell at `position`, as a vector over cell positions with
/// rows outside `row_mask` dropped (row_mask empty = keep everything).
BitVec boundary_vec(const FilteredComplex& complex, std::uint32_t position,
                    const std::vector<bool>& row_mask) {
    BitVec v(complex.size());
    const Cell& cell = complex.cell_at(position);
    for (CellId b : cell.boundary) {
        const std::uint32_t p = complex.position_of(b);
        if (row_mask.empty() || row_mask[p]) v.set(p);
    }
    return v;
}

std::vector<std::uint32_t> cells_of_dim(const FilteredComplex& complex, std::uint32_t step,
                                        int dim, RelativeTo within, bool complement = false) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 0; p < step; ++p) {
        const Cell& cell = complex.cell_at(p);
        if (cell.dim != dim) continue;
        const bool member = within == RelativeTo::None ? true : in_relative(cell, within);
        if (complement ? member : !member) continue;
        out.push_back(p);
    }
    return out;
}

/// Chains supported on the degree-(dim) cells of X_step whose boundary lies
/// in the subcomplex `rel` (rel = None: actual cycles). Returned as vectors
/// over cell positions.
std::vector<BitVec> relative_cycles(const FilteredComplex& complex, std::uint32_t step, int dim,
                                    RelativeTo rel) {
    std::vector<bool> keep_row(complex.size(), true);
    if (rel != RelativeTo::None)
        for (std::uint32_t p = 0; p < complex.size(); ++p)
            if (in_relative(complex.cell_at(p), rel)) keep_row[p] = false;

    std::vector<std::uint32_t> cols;
    for (std::uint32_t p = 0; p < step; ++p)
        if (complex.cell_at(p).dim == dim) cols.push_back(p);

    std::vector<BitVec> vectors;
    vectors.reserve(cols.size());
    for (std::uint32_t p : cols)
        vectors.push_back(boundary_vec(complex, p, rel == RelativeTo::None
                                                       ? std::vector<bool>{}
                                                       : keep_row));
    std::vector<BitVec> combos = nullspace_combinations(vectors);

    std::vector<BitVec> chains;
    chains.reserve(combos.size());
    for (const auto& combo : combos) {
        BitVec chain(complex.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (combo.get(j)) chain.set(cols[j]);
        chains.push_back(std::move(chain));
    }
    return chains;
}

RelativeTo to_relative(Block block) {
    switch (block) {
        case Block::A: return RelativeTo::A;
        case Block::B: return RelativeTo::B;
        default: return RelativeTo::AB;
    }
}

/// Cycle basis of the `block` subcomplex at `step` in the given degree, as
/// vectors over the ambient cell positions.
std::vector<BitVec> subcomplex_cycles(const FilteredComplex& complex, std::uint32_t step,
                                      int dim, Block block) {
    std::vector<std::uint32_t> cols;
    for (std::uint32_t p = 0; p < step; ++p) {
        const Cell& cell = complex.cell_at(p);
        if (cell.dim == dim && cell.in_block(block)) cols.push_back(p);
    }
    std::vector<BitVec> vectors;
    vectors.reserve(cols.size());
    for (std::uint32_t p : cols) vectors.push_back(boundary_vec(complex, p, {}));
    std::vector<BitVec> combos = nullspace_combinations(vectors);
    std::vector<BitVec> chains;
    for (const auto& combo : combos) {
        BitVec chain(complex.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (combo.get(j)) chain.set(cols[j]);
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::vector<BitVec> subcomplex_boundaries(const FilteredComplex& complex, std::uint32_t step,
                                          int dim, std::optional<Block> block) {
    std::vector<BitVec> out;
    for (std::uint32_t p = 0; p < step; ++p) {
        const Cell& cell = complex.cell_at(p);
        if (cell.dim != dim + 1) continue;
        if (block && !cell.in_block(*block)) continue;
        out.push_back(boundary_vec(complex, p, {}));
    }
    return out;
}

}  // namespace

std::vector<std::size_t> homology_dims(const FilteredComplex& complex, std::uint32_t step,
                                       RelativeTo rel) {
    const int top = complex.max_dim();
    std::vector<bool> keep_row(complex.size(), true);
    for (std::uint32_t p = 0; p < complex.size(); ++p)
        if (in_relative(complex.cell_at(p), rel)) keep_row[p] = false;

    // rank of the relative boundary operator per degree
    std::vector<std::size_t> boundary_rank(top + 2, 0);
    std::vector<std::size_t> chains(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        std::vector<BitVec> vectors;
        for (std::uint32_t p = 0; p < step; ++p) {
            const Cell& cell = complex.cell_at(p);
            if (cell.dim != k || in_relative(cell, rel)) continue;
            ++chains[k];
            vectors.push_back(boundary_vec(complex, p, keep_row));
        }
        boundary_rank[k] = rank(std::move(vectors));
    }

    std::vector<std::size_t> dims(top + 1, 0);
    for (int k = 0; k <= top; ++k)
        dims[k] = chains[k] - boundary_rank[k] - boundary_rank[k + 1];
    return dims;
}

std::vector<std::size_t> kernel_dims(const FilteredComplex& complex, std::uint32_t step,
                                     Block block) {
    const int top = complex.max_dim();
    std::vector<std::size_t> dims(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        std::vector<BitVec> cycles_s = subcomplex_cycles(complex, step, k, block);
        const std::size_t boundaries_s =
            rank(subcomplex_boundaries(complex, step, k, block));
        const std::size_t h_s = cycles_s.size() - boundaries_s;

        std::vector<BitVec> boundaries_x = subcomplex_boundaries(complex, step, k, std::nullopt);
        const std::size_t rank_bx = rank(boundaries_x);

        std::vector<BitVec> joint = std::move(boundaries_x);
        joint.insert(joint.end(), cycles_s.begin(), cycles_s.end());
        const std::size_t rank_map = rank(std::move(joint)) - rank_bx;

        dims[k] = h_s - rank_map;
    }
    return dims;
}

std::vector<std::size_t> cok_phi_dims(const FilteredComplex& complex, std::uint32_t step) {
    const auto ka = kernel_dims(complex, step, Block::A);
    const auto kb = kernel_dims(complex, step, Block::B);
    const auto kab = kernel_dims(complex, step, Block::AB);
    std::vector<std::size_t> dims(kab.size(), 0);
    for (std::size_t k = 0; k < dims.size(); ++k) dims[k] = kab[k] - ka[k] - kb[k];
    return dims;
}

RankTable build_rank_table(const FilteredComplex& complex, std::size_t max_cells) {
    if (!complex.is_totalized())
        throw std::logic_error("build_rank_table requires a totalized complex");
    if (complex.size() > max_cells)
        throw SizeLimitExceeded("oracle limited to " + std::to_string(max_cells) + " cells");

    const std::uint32_t n = static_cast<std::uint32_t>(complex.size());
    const int top = complex.max_dim();
    RankTable table;
    table.n_steps = n;
    table.max_degree = top - 1;
    if (top == 0) return table;

    table.ranks.resize(top);
    table.dims.resize(top);

    for (int k = 0; k < top; ++k) {
        // Cok Phi_k(i) = Z^{AB}_{k+1}(X_i) / (Z^A_{k+1}(X_i) + Z^B_{k+1}(X_i)).
        std::vector<std::vector<BitVec>> z_ab(n + 1), denom(n + 1);
        std::vector<std::size_t> denom_rank(n + 1, 0);
        for (std::uint32_t i = 0; i <= n; ++i) {
            z_ab[i] = relative_cycles(complex, i, k + 1, RelativeTo::AB);
            auto z_a = relative_cycles(complex, i, k + 1, RelativeTo::A);
            auto z_b = relative_cycles(complex, i, k + 1, RelativeTo::B);
            denom[i] = std::move(z_a);
            denom[i].insert(denom[i].end(), z_b.begin(), z_b.end());
            denom_rank[i] = rank(denom[i]);
        }

        table.dims[k].resize(n + 1, 0);
        for (std::uint32_t i = 0; i <= n; ++i)
            table.dims[k][i] = z_ab[i].size() - denom_rank[i];

        table.ranks[k].assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
        for (std::uint32_t i = 0; i <= n; ++i) {
            for (std::uint32_t j = i; j <= n; ++j) {
                std::vector<BitVec> joint = denom[j];
                joint.insert(joint.end(), z_ab[i].begin(), z_ab[i].end());
                table.ranks[k][i * (n + 1) + j] = rank(std::move(joint)) - denom_rank[j];
            }
        }
    }
    return table;
}

std::vector<Bar> barcode(const FilteredComplex& complex, std::size_t max_cells) {
    const RankTable table = build_rank_table(complex, max_cells);
    std::vector<Bar> bars;
    const std::uint32_t n = table.n_steps;
    for (int k = 0; k <= table.max_degree; ++k) {
        auto rk = [&](std::uint32_t i, std::uint32_t j) { return table.rank_at(k, i, j); };
        for (std::uint32_t b = 1; b <= n; ++b) {
            for (std::uint32_t d = b + 1; d <= n; ++d) {
                const std::int64_t mult = static_cast<std::int64_t>(rk(b, d - 1)) -
                                          static_cast<std::int64_t>(rk(b, d)) -
                                          static_cast<std::int64_t>(rk(b - 1, d - 1)) +
                                          static_cast<std::int64_t>(rk(b - 1, d));
                for (std::int64_t m = 0; m < mult; ++m)
                    bars.push_back(Bar{k, b - 1, d - 1});
            }
            const std::size_t inf = rk(b, n) - rk(b - 1, n);
            for (std::size_t m = 0; m < inf; ++m) bars.push_back(Bar{k, b - 1, std::nullopt});
        }
    }
    std::sort(bars.begin(), bars.end(), [](const Bar& x, const Bar& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        if (x.birth_position != y.birth_position) return x.birth_position < y.birth_position;
        if (x.death_position.has_value() != y.death_position.has_value())
            return y.death_position.has_value();
        if (x.death_position && y.death_position) return *x.death_position < *y.death_position;
        return false;
    });
    return bars;
}

}  // namespace cobordia::oracle
