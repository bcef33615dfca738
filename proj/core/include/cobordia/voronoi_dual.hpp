// The dual filtered Voronoi complex, obtained by anti-transposing the
// primal boundary matrix, and degree-0 tunnel detection on the dual.

#ifndef COBORDIA_VORONOI_DUAL_HPP
#define COBORDIA_VORONOI_DUAL_HPP

#include <vector>

#include "cobordia/cell_complex.hpp"
#include "cobordia/cobordism.hpp"

namespace cobordia {

/// Dual filtered complex: the cell dual to a primal k-cell has dimension
/// d - k and filtration value -f. Its boundary matrix is the anti-transpose
/// of the primal one (transpose plus reversal of row and column order).
struct DualComplex {
    FilteredComplex complex;          // totalized; unlabeled until dual_tunnels
    std::vector<CellId> primal_of;    // dual cell id -> primal cell id
    std::vector<CellId> dual_of;      // primal cell id -> dual cell id
    int ambient_dim = 3;
};

/// Throws NotFullDimensional when the primal has no cells of the ambient
/// dimension.
DualComplex dualize(const FilteredComplex& complex, int ambient_dim);

/// Bars of a cobordism pairing run restricted to degree 0 on the dual,
/// reported in r = -f* units so that a finite death time is the bottleneck
/// radius. Cells refer to the dual complex.
struct DualTunnels {
    CobordismResult result;           // times in f* units
    std::vector<CobordismPair> bars;  // degree-0 bars with times negated to r units
};

/// Labels the dual vertices in a_star / b_star (with their label-closed
/// hulls) as A / B, validates, and runs the full pairing pipeline.
DualTunnels dual_tunnels(const DualComplex& dual, const std::vector<CellId>& a_star,
                         const std::vector<CellId>& b_star);

}  // namespace cobordia

#endif
