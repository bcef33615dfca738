#include "cobordia/cobordism.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "cobordia/errors.hpp"
#include "cobordia/threading.hpp"

namespace cobordia {

std::string to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::A: return "A";
        case CaseLabel::B: return "B";
        case CaseLabel::C: return "C";
        case CaseLabel::D: return "D";
        case CaseLabel::E: return "E";
        case CaseLabel::F: return "F";
        case CaseLabel::G: return "G";
        case CaseLabel::H: return "H";
        default: return "none";
    }
}

namespace {

enum class Ev : std::uint8_t { None, Birth, Death };

struct Triple {
    Ev a = Ev::None;
    Ev b = Ev::None;
    Ev ab = Ev::None;
    int degree = 0;
    bool any() const { return a != Ev::None || b != Ev::None || ab != Ev::None; }
};

void record_events(const KernelPairs& kp, std::vector<Triple>& steps, Ev Triple::*slot) {
    for (const auto& pair : kp.pairs) {
        Triple& at_birth = steps[pair.birth.position];
        at_birth.*slot = Ev::Birth;
        at_birth.degree = pair.birth.degree;
        if (pair.death) {
            Triple& at_death = steps[pair.death->position];
            at_death.*slot = Ev::Death;
            at_death.degree = pair.death->degree;
        }
    }
}

CaseLabel match_triple(const Triple& t) {
    const Ev a = t.a, b = t.b, ab = t.ab;
    if (a == Ev::Birth && b == Ev::None && ab == Ev::Birth) return CaseLabel::A;
    if (a == Ev::None && b == Ev::Birth && ab == Ev::Birth) return CaseLabel::B;
    if (a == Ev::Birth && b == Ev::Birth && ab == Ev::Birth) return CaseLabel::C;
    if (a == Ev::Death && b == Ev::None && ab == Ev::Death) return CaseLabel::D;
    if (a == Ev::None && b == Ev::Death && ab == Ev::Death) return CaseLabel::E;
    if (a == Ev::None && b == Ev::None && ab == Ev::Birth) return CaseLabel::F;
    if (a == Ev::Birth && b == Ev::None && ab == Ev::None) return CaseLabel::G;
    if (a == Ev::None && b == Ev::Birth && ab == Ev::None) return CaseLabel::H;
    if (!t.any()) return CaseLabel::None;
    const char* names[] = {"-", "b", "d"};
    throw InvalidEventTriple(std::string("event triple (") + names[static_cast<int>(a)] + ", " +
                             names[static_cast<int>(b)] + ", " + names[static_cast<int>(ab)] +
                             ") matches no admissible case");
}

}  // namespace

std::vector<StepEvent> classify_events(const KernelPairs& kp_a, const KernelPairs& kp_b,
                                       const KernelPairs& kp_ab,
                                       const FilteredComplex& complex) {
    std::vector<Triple> steps(complex.size());
    record_events(kp_a, steps, &Triple::a);
    record_events(kp_b, steps, &Triple::b);
    record_events(kp_ab, steps, &Triple::ab);

    std::vector<StepEvent> out(complex.size());
    for (std::uint32_t p = 0; p < complex.size(); ++p) {
        const Cell& cell = complex.cell_at(p);
        StepEvent& ev = out[p];
        ev.position = p;
        ev.time = cell.filtration;
        ev.cell = cell.id;
        ev.degree = steps[p].degree;
        try {
            ev.label = match_triple(steps[p]);
        } catch (const InvalidEventTriple& e) {
            throw InvalidEventTriple(std::string(e.what()) + " at cell " +
                                     std::to_string(cell.id));
        }
    }
    return out;
}

SparseGF2Matrix DPhi::matrix() const {
    std::vector<std::vector<RowIndex>> cols;
    cols.reserve(columns.size());
    for (const auto& col : columns) cols.push_back(col.chain);
    SparseGF2Matrix m(n_rows, std::move(cols));
    m.set_row_order(row_order);
    return m;
}

std::optional<std::pair<ColIndex, ColIndex>> DPhi::double_columns(
    std::uint32_t cell_position) const {
    std::optional<ColIndex> first;
    for (ColIndex j = 0; j < columns.size(); ++j) {
        if (columns[j].cell_position != cell_position) continue;
        if (first) return std::make_pair(*first, j);
        first = j;
    }
    return std::nullopt;
}

DPhi build_d_phi(const KernelPairs& kp_a, const KernelPairs& kp_b,
                 const FilteredComplex& complex, int degree) {
    DPhi dphi;
    dphi.degree = degree;
    dphi.row_order = block_row_order(complex, Block::AB);
    dphi.n_rows = complex.size();

    const RowOrder& order_a = kp_a.r_im.row_order();
    const RowOrder& order_b = kp_b.r_im.row_order();

    for (std::uint32_t tau = 0; tau < complex.size(); ++tau) {
        const Cell& cell = complex.cell_at(tau);
        if (cell.dim != degree + 1) continue;

        if (kp_a.r_im.column_empty(tau)) {
            // tau creates a cycle in X; the zero columns of the A and B runs
            // coincide, so this excludes the block-birth branches below.
            if (!kp_b.r_im.column_empty(tau))
                throw PairingMismatch("zero columns of the A and B reductions differ at cell " +
                                      std::to_string(cell.id));
            dphi.columns.push_back(
                {tau, DPhiColumn::Source::Cycle, kp_a.v_im.column(tau)});
            continue;
        }

        const auto low_a = kp_a.r_im.low(tau);
        const auto low_b = kp_b.r_im.low(tau);
        const bool from_a = low_a && order_a.in_block(*low_a);
        const bool from_b = low_b && order_b.in_block(*low_b);

        DPhiColumn col_a{tau, DPhiColumn::Source::FromA, kp_a.v_im.column(tau)};
        DPhiColumn col_b{tau, DPhiColumn::Source::FromB, kp_b.v_im.column(tau)};
        if (from_a && from_b) {
            // B-column after the A-column iff tau lies in A, before it
            // otherwise.
            if (cell.in_a) {
                dphi.columns.push_back(std::move(col_a));
                dphi.columns.push_back(std::move(col_b));
            } else {
                dphi.columns.push_back(std::move(col_b));
                dphi.columns.push_back(std::move(col_a));
            }
        } else if (from_a) {
            dphi.columns.push_back(std::move(col_a));
        } else if (from_b) {
            dphi.columns.push_back(std::move(col_b));
        }
    }
    return dphi;
}

namespace {

std::vector<CellId> to_cells(const std::vector<RowIndex>& positions,
                             const FilteredComplex& complex) {
    std::vector<CellId> out;
    out.reserve(positions.size());
    for (RowIndex p : positions) out.push_back(complex.id_at(p));
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<ColIndex, ColIndex> require_double(const DPhi& dphi, const FilteredComplex& complex,
                                             CellId tau) {
    const auto cols = dphi.double_columns(complex.position_of(tau));
    if (!cols)
        throw NotADeath("cell " + std::to_string(tau) + " is not a double column of D^Phi");
    return *cols;
}

}  // namespace

std::vector<CellId> representative_before_death(const DPhi& dphi, const FilteredComplex& complex,
                                                CellId tau) {
    const auto [first, second] = require_double(dphi, complex, tau);
    return to_cells(symmetric_difference(dphi.columns[first].chain, dphi.columns[second].chain),
                    complex);
}

std::vector<CellId> representative_at_birth(const DPhi& dphi, const ReductionResult& reduced,
                                            const FilteredComplex& complex, CellId tau) {
    const auto [first, second] = require_double(dphi, complex, tau);
    (void)first;
    return to_cells(reduced.R.column(second), complex);
}

std::vector<CellId> representative_infinite(const KernelPairs& kp_ab,
                                            const FilteredComplex& complex, CellId birth_cell,
                                            std::span<const CobordismPair> pairs) {
    const auto it = std::find_if(pairs.begin(), pairs.end(), [&](const CobordismPair& p) {
        return p.birth_cell == birth_cell;
    });
    if (it == pairs.end() || it->finite())
        throw NotInfinite("cell " + std::to_string(birth_cell) +
                          " is not the birth of an infinite cobordism bar");
    return to_cells(kp_ab.v_im.column(complex.position_of(birth_cell)), complex);
}

std::vector<CobordismPair> pair_cobordisms(const DPhi& dphi, const std::vector<StepEvent>& events,
                                           const KernelPairs& kp_ab,
                                           const FilteredComplex& complex) {
    SparseGF2Matrix m = dphi.matrix();
    const ReductionResult reduced = reduce(m);

    // Deaths are detected structurally: cells owning two columns.
    std::map<std::uint32_t, std::vector<ColIndex>> by_cell;
    for (ColIndex j = 0; j < dphi.columns.size(); ++j)
        by_cell[dphi.columns[j].cell_position].push_back(j);

    std::set<std::uint32_t> death_cells;
    for (const auto& [cell_pos, cols] : by_cell) {
        if (cols.size() > 2)
            throw PairingMismatch("more than two D^Phi columns at one cell");
        if (cols.size() == 2) death_cells.insert(cell_pos);
    }

    // Cross-check against the classified events for this degree.
    std::set<std::uint32_t> expected_deaths;
    std::vector<const StepEvent*> expected_births;
    for (const auto& ev : events) {
        if (ev.label == CaseLabel::None || ev.degree != dphi.degree) continue;
        if (ev.label == CaseLabel::F) expected_births.push_back(&ev);
        if (ev.label == CaseLabel::C || ev.label == CaseLabel::G || ev.label == CaseLabel::H)
            expected_deaths.insert(ev.position);
    }
    if (expected_deaths != death_cells)
        throw PairingMismatch("double columns disagree with the classified death events");

    std::map<std::uint32_t, const StepEvent*> birth_by_position;
    for (const StepEvent* ev : expected_births) birth_by_position.emplace(ev->position, ev);

    std::vector<CobordismPair> out;
    std::set<std::uint32_t> matched_births;

    for (std::uint32_t death_pos : death_cells) {
        const Cell& death = complex.cell_at(death_pos);
        const auto [first, second] = *dphi.double_columns(death_pos);
        (void)first;
        const auto& col = reduced.R.column(second);
        const auto low = reduced.R.low(second);
        if (col.empty() || !low || dphi.row_order.in_block(*low))
            throw PairingMismatch("reduced second column of cell " + std::to_string(death.id) +
                                  " has no low outside the A-union-B block");
        const auto birth_it = birth_by_position.find(*low);
        if (birth_it == birth_by_position.end())
            throw PairingMismatch("death at cell " + std::to_string(death.id) +
                                  " pairs a row that is not a Case-F birth");
        matched_births.insert(*low);

        const StepEvent& birth = *birth_it->second;
        CobordismPair pair;
        pair.degree = dphi.degree;
        pair.birth_time = birth.time;
        pair.birth_cell = birth.cell;
        pair.birth_position = birth.position;
        pair.death_time = death.filtration;
        pair.death_cell = death.id;
        pair.death_position = death_pos;
        pair.representative_at_birth = to_cells(col, complex);
        pair.representative_before_death = representative_before_death(dphi, complex, death.id);
        pair.case_at_birth = CaseLabel::F;
        pair.case_at_death = events[death_pos].label;
        out.push_back(std::move(pair));
    }

    for (const StepEvent* ev : expected_births) {
        if (matched_births.count(ev->position)) continue;
        CobordismPair pair;
        pair.degree = dphi.degree;
        pair.birth_time = ev->time;
        pair.birth_cell = ev->cell;
        pair.birth_position = ev->position;
        pair.case_at_birth = CaseLabel::F;
        pair.representative_at_birth =
            to_cells(kp_ab.v_im.column(ev->position), complex);
        out.push_back(std::move(pair));
    }

    if (out.size() != expected_births.size())
        throw PairingMismatch("pairing count disagrees with the event counts");

    std::sort(out.begin(), out.end(), [](const CobordismPair& x, const CobordismPair& y) {
        return x.birth_position < y.birth_position;
    });
    return out;
}

std::size_t CobordismResult::living_bars(int degree, std::uint32_t position) const {
    std::size_t n = 0;
    for (const auto& pair : pairs) {
        if (pair.degree != degree) continue;
        if (pair.birth_position > position) continue;
        if (pair.death_position && *pair.death_position <= position) continue;
        ++n;
    }
    return n;
}

CobordismResult compute_cobordisms(const FilteredComplex& complex) {
    if (!complex.is_totalized())
        throw std::logic_error("compute_cobordisms requires a totalized complex");

    CobordismResult result;
    if (thread_budget() >= 2) {
        auto fa = std::async(std::launch::async, kernel_pairs, std::cref(complex), Block::A);
        auto fb = std::async(std::launch::async, kernel_pairs, std::cref(complex), Block::B);
        result.kernels_ab = kernel_pairs(complex, Block::AB);
        result.kernels_a = fa.get();
        result.kernels_b = fb.get();
    } else {
        result.kernels_a = kernel_pairs(complex, Block::A);
        result.kernels_b = kernel_pairs(complex, Block::B);
        result.kernels_ab = kernel_pairs(complex, Block::AB);
    }

    // The cells creating cycles in X do not depend on the block order.
    if (result.kernels_a.cycle_columns != result.kernels_b.cycle_columns ||
        result.kernels_a.cycle_columns != result.kernels_ab.cycle_columns)
        throw PairingMismatch("cycle columns differ between block runs");

    result.events = classify_events(result.kernels_a, result.kernels_b, result.kernels_ab,
                                    complex);

    const int max_degree = complex.max_dim() - 1;
    for (int k = 0; k <= max_degree; ++k) {
        DPhi dphi = build_d_phi(result.kernels_a, result.kernels_b, complex, k);
        auto pairs = pair_cobordisms(dphi, result.events, result.kernels_ab, complex);
        result.pairs.insert(result.pairs.end(), std::make_move_iterator(pairs.begin()),
                            std::make_move_iterator(pairs.end()));
    }
    std::sort(result.pairs.begin(), result.pairs.end(),
              [](const CobordismPair& x, const CobordismPair& y) {
                  if (x.degree != y.degree) return x.degree < y.degree;
                  return x.birth_position < y.birth_position;
              });
    return result;
}

}  // namespace cobordia
