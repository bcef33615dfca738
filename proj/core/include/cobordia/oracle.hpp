// Independent verification path: dense GF(2) linear algebra computing
// homology, kernel and cokernel dimensions, and rank-function barcodes on
// small complexes. Shares no matrix code with the reduction pipeline.

#ifndef COBORDIA_ORACLE_HPP
#define COBORDIA_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cobordia/cell_complex.hpp"

namespace cobordia::oracle {

/// Dense bit vector over cell positions.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n_bits) : n_(n_bits), words_((n_bits + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void operator^=(const BitVec& other);
    bool any() const;
    /// Index of the lowest set bit; undefined when empty.
    std::size_t first_set() const;
    std::vector<std::uint32_t> set_bits() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Rank of a list of vectors by destructive Gaussian elimination.
std::size_t rank(std::vector<BitVec> vectors);

/// Basis of the combinations of the given vectors that sum to zero. Each
/// returned vector has one bit per input vector.
std::vector<BitVec> nullspace_combinations(const std::vector<BitVec>& vectors);

/// Which subcomplex to quotient by (or none).
enum class RelativeTo : std::uint8_t { None, A, B, AB };

/// dim H_k(X_i, S_i) for every degree k, where X_i is the complex after the
/// first `step` cells of the totalized order (step ranges 0..N).
std::vector<std::size_t> homology_dims(const FilteredComplex& complex, std::uint32_t step,
                                       RelativeTo rel = RelativeTo::None);

/// dim Ker(H_k(S_i) -> H_k(X_i)) per degree, computed from explicit cycle
/// bases and the rank of the induced map.
std::vector<std::size_t> kernel_dims(const FilteredComplex& complex, std::uint32_t step,
                                     Block block);

/// dim Cok Phi_k per degree; Phi is injective, so this equals
/// Ker(A union B) minus Ker(A) minus Ker(B).
std::vector<std::size_t> cok_phi_dims(const FilteredComplex& complex, std::uint32_t step);

/// Ranks of the maps Cok Phi_k(i) -> Cok Phi_k(j) for all step pairs, plus
/// the per-step dimensions they are built from.
struct RankTable {
    std::uint32_t n_steps = 0;  // maps indexed by steps 0..n_steps
    int max_degree = -1;
    /// rank[k][i * (n_steps + 1) + j] for i <= j.
    std::vector<std::vector<std::size_t>> ranks;
    /// per degree, per step: dim Cok Phi_k at that step.
    std::vector<std::vector<std::size_t>> dims;

    std::size_t rank_at(int degree, std::uint32_t i, std::uint32_t j) const {
        return ranks[degree][i * (n_steps + 1) + j];
    }
};

RankTable build_rank_table(const FilteredComplex& complex, std::size_t max_cells = 64);

struct Bar {
    int degree = 0;
    std::uint32_t birth_position = 0;                 // cell position of the birth step
    std::optional<std::uint32_t> death_position;      // nullopt = infinite
};

/// Ground-truth barcode of Cok Phi from the rank function by
/// inclusion-exclusion. Throws SizeLimitExceeded above max_cells.
std::vector<Bar> barcode(const FilteredComplex& complex, std::size_t max_cells = 64);

}  // namespace cobordia::oracle

#endif
