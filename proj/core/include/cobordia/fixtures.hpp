// Reference complexes and generators used by the CLI `fixtures` subcommand,
// the verification suites and the benchmarks. All generators are
// deterministic for a fixed seed.

#ifndef COBORDIA_FIXTURES_HPP
#define COBORDIA_FIXTURES_HPP

#include <cstdint>

#include "cobordia/alpha.hpp"
#include "cobordia/cell_complex.hpp"
#include "cobordia/gf2.hpp"

namespace cobordia::fixtures {

/// Deterministic RNG with platform-independent helpers (distributions in
/// the standard library are not portable across implementations).
struct Rng {
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    double uniform();                       // [0, 1)
    std::uint32_t below(std::uint32_t n);   // [0, n)
    std::uint64_t state;
};

/// The triangulated cylinder: 9 vertices, 21 edges, 12 triangles; A is the
/// open top triangle, B the open bottom one; dimension-major filtration
/// (f = 0, 1, 2).
FilteredComplex cylinder();

/// The cylinder with the filled top triangle v0v1v2 appended at f = 3
/// (labeled A): the tunnel is closed from inside the top subcomplex.
FilteredComplex cylinder_with_top();

/// The cylinder with the filled middle triangle v3v4v5 appended at f = 3:
/// both boundary circles become trivial at once.
FilteredComplex cylinder_with_middle();

/// Two vertices in A, two in B, bridges a1b1 @ 1 and a2b2 @ 2, then the
/// B-edge b1b2 @ 3 merging the two bridges.
FilteredComplex two_tunnel();

/// A tunnel whose mouth gets sealed mid-filtration by a 2-cell lying inside
/// the top slab and later re-joined through a second slab cycle: the slab
/// 2-cell splits the bar. Used to exercise strip_slab_interiors.
FilteredComplex degenerate_tunnel();

/// Three vertices and the three edges of a triangle, no 2-cell.
FilteredComplex hollow_triangle();

/// Small random labeled simplicial complex (at most max_cells cells, with
/// 2-cells when room allows), valid by construction. Ties in f are injected
/// occasionally to exercise the tie-break.
FilteredComplex random_labeled_complex(std::uint64_t seed, std::size_t max_cells = 30);

/// Random sparse GF(2) matrix, entries i.i.d. with the given density.
SparseGF2Matrix random_sparse_matrix(Rng& rng, std::size_t max_rows = 64,
                                     std::size_t max_cols = 64, double density = 0.2);

/// Points on a vertical cylindrical shell (rings of 6 around the channel
/// axis) inside the unit box, with a small deterministic jitter.
struct LatticeCloud {
    PointCloud cloud;
    double channel_radius = 0.15;
    double spacing = 0.0;   // max of ring arc spacing and vertical spacing
    double epsilon = 0.08;  // slab thickness capturing exactly one ring
    int axis = 2;
};
LatticeCloud lattice_cloud(std::uint64_t seed = 7);

/// Brute-force bottleneck radius of the vertical channel: the max over a
/// grid of vertical lines through the lateral window of the min distance to
/// the cloud along the line.
double brute_force_bottleneck(const PointCloud& cloud, int axis, double center_u = 0.5,
                              double center_v = 0.5, double window = 0.15);

}  // namespace cobordia::fixtures

#endif
