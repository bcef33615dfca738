// Alpha-filtered Delaunay complexes of small point clouds in the unit box,
// with slab subcomplexes marking the top and bottom.

#ifndef COBORDIA_ALPHA_HPP
#define COBORDIA_ALPHA_HPP

#include <array>
#include <vector>

#include "cobordia/cell_complex.hpp"

namespace cobordia {

/// Points in [0,1]^d for d in {2, 3}; the third coordinate is zero in 2D.
struct PointCloud {
    int dim = 3;
    std::vector<std::array<double, 3>> points;

    std::size_t size() const { return points.size(); }
};

/// The eps-slabs defining the marked subcomplexes: top slab is
/// coordinate >= 1 - eps, bottom slab is coordinate <= eps (closed slabs).
struct SliceSpec {
    int axis = 2;
    double epsilon = 0.1;
};

/// A simplex as a sorted list of point indices.
using Simplex = std::vector<std::uint32_t>;

/// All Delaunay d-simplices (empty open circumsphere) plus their faces,
/// found by brute-force enumeration over (d+1)-subsets. Vertices are always
/// included. Throws DegeneratePosition when d+2 points are cospherical
/// beyond tolerance.
std::vector<Simplex> delaunay(const PointCloud& cloud);

/// The alpha complex over a Delaunay simplex set together with the map from
/// cell ids back to simplices.
struct AlphaComplex {
    FilteredComplex complex;                 // validated and totalized, unlabeled
    std::vector<Simplex> simplex_of_cell;    // indexed by cell id
};

/// Alpha filtration values in the radius convention: f = circumradius when
/// the simplex is Gabriel, otherwise the minimum over cofacets; vertices
/// enter at f = 0.
AlphaComplex alpha_filtration(const std::vector<Simplex>& simplices, const PointCloud& cloud);

/// Labels a simplex A when all its vertices lie in the top slab and B when
/// all lie in the bottom slab; labels are face-closed by construction.
/// Throws EmptySlice when a slab contains no points.
AlphaComplex label_slices(const AlphaComplex& alpha, const SliceSpec& spec,
                          const PointCloud& cloud);

/// Optional preprocessing for thick slabs: removes the cells of dimension
/// `cell_dim` labeled A or B (their closures lie inside a slab) together
/// with all their cofaces, then renumbers and re-validates.
FilteredComplex strip_slab_interiors(const FilteredComplex& complex, int cell_dim);

/// Circumcenter and radius of the simplex within its affine hull; used by
/// both the Delaunay predicate and the filtration values.
struct Circumsphere {
    std::array<double, 3> center;
    double radius = 0.0;
    bool degenerate = false;  // affinely dependent vertices
};
Circumsphere circumsphere(const PointCloud& cloud, const Simplex& simplex);

}  // namespace cobordia

#endif
