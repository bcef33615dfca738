// Event classification across the three kernel modules, the D^Phi pairing
// matrix, and extraction of cobordism (tunnel) representatives.

#ifndef COBORDIA_COBORDISM_HPP
#define COBORDIA_COBORDISM_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cobordia/cell_complex.hpp"
#include "cobordia/gf2.hpp"
#include "cobordia/kernel_persistence.hpp"

namespace cobordia {

/// The admissible simultaneous birth/death patterns across Ker A, Ker B and
/// Ker (A union B). F births a cobordism class; C, G and H kill one; the
/// rest leave the cokernel untouched.
enum class CaseLabel : std::uint8_t { A, B, C, D, E, F, G, H, None };

std::string to_string(CaseLabel c);

struct StepEvent {
    std::uint32_t position = 0;
    double time = 0.0;
    CellId cell = 0;
    int degree = 0;  // degree of the kernel events at this step; 0 when None
    CaseLabel label = CaseLabel::None;
};

/// Matches every filtration step's event triple against the admissible
/// patterns. Steps without kernel events get CaseLabel::None. Throws
/// InvalidEventTriple when a triple matches no pattern.
std::vector<StepEvent> classify_events(const KernelPairs& kp_a, const KernelPairs& kp_b,
                                       const KernelPairs& kp_ab,
                                       const FilteredComplex& complex);

struct DPhiColumn {
    enum class Source : std::uint8_t { Cycle, FromA, FromB };
    std::uint32_t cell_position = 0;
    Source source = Source::Cycle;
    std::vector<RowIndex> chain;  // cell positions of the stored (k+1)-chain
};

/// The pairing matrix for one homological degree k: cycle columns plus the
/// block-birth columns of (k+1)-cells, ordered by the filtration position of
/// the indexing cell, double columns ordered by the insertion rule.
struct DPhi {
    int degree = 0;
    std::vector<DPhiColumn> columns;
    RowOrder row_order;  // A-union-B-first order over cell positions
    std::size_t n_rows = 0;

    SparseGF2Matrix matrix() const;
    /// Column indices of the two columns of a double cell, in matrix order.
    std::optional<std::pair<ColIndex, ColIndex>> double_columns(std::uint32_t cell_position) const;
};

DPhi build_d_phi(const KernelPairs& kp_a, const KernelPairs& kp_b,
                 const FilteredComplex& complex, int degree);

struct CobordismPair {
    int degree = 0;
    double birth_time = 0.0;
    CellId birth_cell = 0;
    std::uint32_t birth_position = 0;
    std::optional<double> death_time;  // nullopt = infinite bar
    std::optional<CellId> death_cell;
    std::optional<std::uint32_t> death_position;
    std::vector<CellId> representative_at_birth;
    std::vector<CellId> representative_before_death;  // empty for infinite bars
    CaseLabel case_at_birth = CaseLabel::F;
    CaseLabel case_at_death = CaseLabel::None;

    bool finite() const { return death_position.has_value(); }
};

/// Corollary rule 1: the GF(2) sum of the two tau-columns of D^Phi, the
/// class that is alive just before the death at tau. Throws NotADeath when
/// tau is not a double column.
std::vector<CellId> representative_before_death(const DPhi& dphi, const FilteredComplex& complex,
                                                CellId tau);

/// Corollary rule 2: the reduced second tau-column of R^Phi; its low row is
/// the birth cell.
std::vector<CellId> representative_at_birth(const DPhi& dphi, const ReductionResult& reduced,
                                            const FilteredComplex& complex, CellId tau);

/// Corollary rule 3: the V_im column of an unmatched birth in the A-union-B
/// run; a relative cycle whose boundary lies in A union B and meets both.
/// Throws NotInfinite when the cell is not the birth of an infinite bar.
std::vector<CellId> representative_infinite(const KernelPairs& kp_ab,
                                            const FilteredComplex& complex, CellId birth_cell,
                                            std::span<const CobordismPair> pairs);

/// Reduces D^Phi and pairs double-column deaths with births; unmatched
/// Case-F births become infinite bars. Cross-checked against the event
/// classification; disagreement throws PairingMismatch.
std::vector<CobordismPair> pair_cobordisms(const DPhi& dphi, const std::vector<StepEvent>& events,
                                           const KernelPairs& kp_ab,
                                           const FilteredComplex& complex);

struct CobordismResult {
    std::vector<CobordismPair> pairs;   // all degrees, in (degree, birth) order
    std::vector<StepEvent> events;      // every step incl. None, and D/E for audit
    KernelPairs kernels_a;
    KernelPairs kernels_b;
    KernelPairs kernels_ab;

    std::size_t living_bars(int degree, std::uint32_t position) const;
};

/// Full pipeline: the three kernel runs (concurrently when the thread budget
/// allows), event classification, and per-degree pairing.
CobordismResult compute_cobordisms(const FilteredComplex& complex);

}  // namespace cobordia

#endif
