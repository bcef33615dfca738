#include "cobordia/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cobordia::fixtures {

std::uint64_t Rng::next() {
    // splitmix64
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint32_t Rng::below(std::uint32_t n) {
    return static_cast<std::uint32_t>(next() % n);
}

namespace {

/// Helper assembling simplicial fixtures by vertex lists.
class Builder {
public:
    CellId vertex(double f, Label label = Label::Interior) {
        return add({}, 0, f, label);
    }
    CellId simplex(std::vector<CellId> vertex_ids, double f, Label label = Label::Interior) {
        std::sort(vertex_ids.begin(), vertex_ids.end());
        const int dim = static_cast<int>(vertex_ids.size()) - 1;
        std::vector<CellId> boundary;
        if (dim > 0) {
            for (std::size_t drop = 0; drop < vertex_ids.size(); ++drop) {
                std::vector<CellId> face;
                for (std::size_t i = 0; i < vertex_ids.size(); ++i)
                    if (i != drop) face.push_back(vertex_ids[i]);
                boundary.push_back(by_vertices_.at(face));
            }
        }
        return add(std::move(boundary), dim, f, label, vertex_ids);
    }
    bool has(std::vector<CellId> vertex_ids) const {
        std::sort(vertex_ids.begin(), vertex_ids.end());
        return by_vertices_.count(vertex_ids) > 0;
    }
    FilteredComplex build() { return totalize_filtration(FilteredComplex(cells_)); }
    std::size_t size() const { return cells_.size(); }

private:
    CellId add(std::vector<CellId> boundary, int dim, double f, Label label,
               std::vector<CellId> vertex_ids = {}) {
        Cell cell;
        cell.id = static_cast<CellId>(cells_.size());
        cell.dim = dim;
        cell.boundary = std::move(boundary);
        cell.filtration = f;
        cell.in_a = label == Label::A;
        cell.in_b = label == Label::B;
        if (dim == 0) vertex_ids = {cell.id};
        by_vertices_[vertex_ids] = cell.id;
        cells_.push_back(std::move(cell));
        return cells_.back().id;
    }

    std::vector<Cell> cells_;
    std::map<std::vector<CellId>, CellId> by_vertices_;
};

Builder cylinder_builder() {
    Builder b;
    // vertices 0..8: top ring {0,1,2} = A, middle {3,4,5}, bottom {6,7,8} = B
    for (CellId v = 0; v < 9; ++v) {
        Label label = v <= 2 ? Label::A : (v >= 6 ? Label::B : Label::Interior);
        b.vertex(0.0, label);
    }
    const std::vector<std::pair<CellId, CellId>> ring_edges = {
        {0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {6, 7}, {6, 8}, {7, 8}};
    for (auto [u, v] : ring_edges) {
        Label label = v <= 2 ? Label::A : (u >= 6 ? Label::B : Label::Interior);
        b.simplex({u, v}, 1.0, label);
    }
    const std::vector<std::pair<CellId, CellId>> wall_edges = {
        {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8},
        {0, 4}, {0, 5}, {1, 5}, {3, 7}, {3, 8}, {4, 8}};
    for (auto [u, v] : wall_edges) b.simplex({u, v}, 1.0);
    const std::vector<std::array<CellId, 3>> triangles = {
        {0, 1, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 5}, {1, 4, 5},
        {3, 4, 7}, {3, 5, 8}, {3, 6, 7}, {3, 6, 8}, {4, 5, 8}, {4, 7, 8}};
    for (const auto& t : triangles) b.simplex({t[0], t[1], t[2]}, 2.0);
    return b;
}

}  // namespace

FilteredComplex cylinder() { return cylinder_builder().build(); }

FilteredComplex cylinder_with_top() {
    Builder b = cylinder_builder();
    b.simplex({0, 1, 2}, 3.0, Label::A);
    return b.build();
}

FilteredComplex cylinder_with_middle() {
    Builder b = cylinder_builder();
    b.simplex({3, 4, 5}, 3.0);
    return b.build();
}

FilteredComplex two_tunnel() {
    Builder b;
    const CellId a1 = b.vertex(0.0, Label::A);
    const CellId a2 = b.vertex(0.0, Label::A);
    const CellId b1 = b.vertex(0.0, Label::B);
    const CellId b2 = b.vertex(0.0, Label::B);
    b.simplex({a1, b1}, 1.0);
    b.simplex({a2, b2}, 2.0);
    b.simplex({b1, b2}, 3.0, Label::B);
    return b.build();
}

FilteredComplex degenerate_tunnel() {
    // The cylinder, then: the top lid @3 (inside the slab, kills the
    // tunnel), a second A-ring w0w1w2 (@4, edges @5), and a band joining it
    // to the middle ring (@6/@7). Stripping the lid restores the single
    // infinite tunnel bar.
    Builder b = cylinder_builder();
    b.simplex({0, 1, 2}, 3.0, Label::A);                     // lid
    std::vector<CellId> w;
    for (int i = 0; i < 3; ++i) w.push_back(b.vertex(4.0, Label::A));
    b.simplex({w[0], w[1]}, 5.0, Label::A);
    b.simplex({w[0], w[2]}, 5.0, Label::A);
    b.simplex({w[1], w[2]}, 5.0, Label::A);
    // band w-ring -> middle ring {3,4,5}
    b.simplex({w[0], 3}, 6.0);
    b.simplex({w[0], 4}, 6.0);
    b.simplex({w[1], 4}, 6.0);
    b.simplex({w[1], 5}, 6.0);
    b.simplex({w[2], 5}, 6.0);
    b.simplex({w[2], 3}, 6.0);
    b.simplex({w[0], 3, 4}, 7.0);
    b.simplex({w[0], w[1], 4}, 7.0);
    b.simplex({w[1], 4, 5}, 7.0);
    b.simplex({w[1], w[2], 5}, 7.0);
    b.simplex({w[2], 5, 3}, 7.0);
    b.simplex({w[2], w[0], 3}, 7.0);
    return b.build();
}

FilteredComplex hollow_triangle() {
    Builder b;
    const CellId v0 = b.vertex(0.0, Label::A);
    const CellId v1 = b.vertex(0.0);
    const CellId v2 = b.vertex(0.0, Label::B);
    b.simplex({v0, v1}, 1.0);
    b.simplex({v0, v2}, 1.0);
    b.simplex({v1, v2}, 1.0);
    return b.build();
}

FilteredComplex random_labeled_complex(std::uint64_t seed, std::size_t max_cells) {
    Rng rng(seed * 2654435761u + 1);
    const std::uint32_t n_vertices = 4 + rng.below(4);  // 4..7

    Builder b;
    double clock = 0.0;
    auto tick = [&]() {
        // occasional exact ties exercise the tie-break policy
        if (rng.uniform() < 0.25) return clock;
        clock += 0.25 + rng.uniform();
        return clock;
    };

    std::vector<CellId> vertices;
    for (std::uint32_t v = 0; v < n_vertices; ++v) vertices.push_back(b.vertex(tick()));

    std::vector<std::pair<CellId, CellId>> edges;
    for (std::uint32_t i = 0; i < n_vertices; ++i)
        for (std::uint32_t j = i + 1; j < n_vertices; ++j)
            if (rng.uniform() < 0.55) edges.push_back({vertices[i], vertices[j]});
    for (std::uint32_t k = static_cast<std::uint32_t>(edges.size()); k-- > 1;)
        std::swap(edges[k], edges[rng.below(k + 1)]);
    for (auto [u, v] : edges) {
        if (b.size() >= max_cells) break;
        b.simplex({u, v}, tick());
    }

    std::vector<std::array<CellId, 3>> triangles;
    for (std::uint32_t i = 0; i < n_vertices; ++i)
        for (std::uint32_t j = i + 1; j < n_vertices; ++j)
            for (std::uint32_t k = j + 1; k < n_vertices; ++k) {
                if (!b.has({vertices[i], vertices[j]}) || !b.has({vertices[i], vertices[k]}) ||
                    !b.has({vertices[j], vertices[k]}))
                    continue;
                if (rng.uniform() < 0.55)
                    triangles.push_back({vertices[i], vertices[j], vertices[k]});
            }
    for (const auto& t : triangles) {
        if (b.size() >= max_cells) break;
        b.simplex({t[0], t[1], t[2]}, tick());
    }

    FilteredComplex complex = b.build();

    // Disjoint non-empty vertex sets induce the labels; every cell with all
    // vertices in a set joins the corresponding subcomplex.
    std::vector<CellId> shuffled = vertices;
    for (std::uint32_t k = n_vertices; k-- > 1;) std::swap(shuffled[k], shuffled[rng.below(k + 1)]);
    const std::uint32_t n_a = 1 + rng.below(2);
    const std::uint32_t n_b = 1 + rng.below(2);
    const std::set<CellId> set_a(shuffled.begin(), shuffled.begin() + n_a);
    const std::set<CellId> set_b(shuffled.begin() + n_a, shuffled.begin() + n_a + n_b);

    // Recover vertex sets of each cell through boundaries.
    std::vector<Cell> cells = complex.cells();
    std::vector<std::set<CellId>> vertex_sets(cells.size());
    for (auto& cell : cells) {
        if (cell.dim == 0) {
            vertex_sets[cell.id] = {cell.id};
            continue;
        }
        for (CellId f : cell.boundary)
            vertex_sets[cell.id].insert(vertex_sets[f].begin(), vertex_sets[f].end());
    }
    for (auto& cell : cells) {
        const auto& vs = vertex_sets[cell.id];
        cell.in_a = std::all_of(vs.begin(), vs.end(), [&](CellId v) { return set_a.count(v); });
        cell.in_b = std::all_of(vs.begin(), vs.end(), [&](CellId v) { return set_b.count(v); });
    }
    return totalize_filtration(FilteredComplex(std::move(cells)));
}

SparseGF2Matrix random_sparse_matrix(Rng& rng, std::size_t max_rows, std::size_t max_cols,
                                     double density) {
    const std::size_t n_rows = 1 + rng.below(static_cast<std::uint32_t>(max_rows));
    const std::size_t n_cols = 1 + rng.below(static_cast<std::uint32_t>(max_cols));
    SparseGF2Matrix m(n_rows, n_cols);
    for (ColIndex j = 0; j < n_cols; ++j) {
        std::vector<RowIndex> col;
        for (RowIndex i = 0; i < n_rows; ++i)
            if (rng.uniform() < density) col.push_back(i);
        m.set_column(j, std::move(col));
    }
    return m;
}

LatticeCloud lattice_cloud(std::uint64_t seed) {
    LatticeCloud out;
    Rng rng(seed);
    const int n_rings = 10;
    const int per_ring = 6;
    const double jitter = 0.005;
    out.cloud.dim = 3;
    for (int ring = 0; ring < n_rings; ++ring) {
        const double z = static_cast<double>(ring) / (n_rings - 1);
        const double phase = (ring % 2) * 3.14159265358979323846 / per_ring;
        for (int s = 0; s < per_ring; ++s) {
            const double angle = phase + 2.0 * 3.14159265358979323846 * s / per_ring;
            std::array<double, 3> p = {0.5 + out.channel_radius * std::cos(angle),
                                       0.5 + out.channel_radius * std::sin(angle), z};
            for (int c = 0; c < 3; ++c) p[c] += (rng.uniform() * 2.0 - 1.0) * jitter;
            p[2] = std::clamp(p[2], 0.0, 1.0);
            out.cloud.points.push_back(p);
        }
    }
    const double arc = 2.0 * 3.14159265358979323846 * out.channel_radius / per_ring;
    const double vertical = 1.0 / (n_rings - 1);
    out.spacing = std::max(arc, vertical);
    return out;
}

double brute_force_bottleneck(const PointCloud& cloud, int axis, double center_u,
                              double center_v, double window) {
    const int u = (axis + 1) % 3;
    const int v = (axis + 2) % 3;
    double best = 0.0;
    for (double x = center_u - window; x <= center_u + window + 1e-9; x += 0.01) {
        for (double y = center_v - window; y <= center_v + window + 1e-9; y += 0.01) {
            const double du = x - center_u, dv = y - center_v;
            if (du * du + dv * dv > window * window) continue;
            double clearance = std::numeric_limits<double>::infinity();
            for (double t = 0.0; t <= 1.0 + 1e-9; t += 0.01) {
                std::array<double, 3> q{};
                q[u] = x;
                q[v] = y;
                q[axis] = t;
                double d2 = std::numeric_limits<double>::infinity();
                for (const auto& p : cloud.points) {
                    const double dx = p[0] - q[0], dy = p[1] - q[1], dz = p[2] - q[2];
                    d2 = std::min(d2, dx * dx + dy * dy + dz * dz);
                }
                clearance = std::min(clearance, std::sqrt(d2));
            }
            best = std::max(best, clearance);
        }
    }
    return best;
}

}  // namespace cobordia::fixtures
