#include "cobordia/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "cobordia/errors.hpp"
#include "cobordia/threading.hpp"

namespace cobordia {

namespace {

constexpr double kTolerance = 1e-12;

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> sub(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

double dist2(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    const auto d = sub(a, b);
    return dot(d, d);
}

/// Solves the small symmetric system G t = rhs by Gaussian elimination with
/// partial pivoting. Returns false when G is singular within tolerance.
bool solve(std::vector<std::vector<double>>& g, std::vector<double>& rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(g[r][col]) > std::abs(g[pivot][col])) pivot = r;
        if (std::abs(g[pivot][col]) <= kTolerance) return false;
        std::swap(g[col], g[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double factor = g[r][col] / g[col][col];
            if (factor == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) g[r][c] -= factor * g[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    for (std::size_t col = 0; col < n; ++col) rhs[col] /= g[col][col];
    return true;
}

}  // namespace

Circumsphere circumsphere(const PointCloud& cloud, const Simplex& simplex) {
    Circumsphere out;
    const auto& p0 = cloud.points[simplex[0]];
    const std::size_t k = simplex.size() - 1;
    if (k == 0) {
        out.center = p0;
        out.radius = 0.0;
        return out;
    }
    // Center c = p0 + sum t_i (p_i - p0) with |c - p_i| = |c - p0| leads to
    // the Gram system 2 (p_i-p0).(p_j-p0) t_j = |p_i-p0|^2.
    std::vector<std::array<double, 3>> edges(k);
    for (std::size_t i = 0; i < k; ++i) edges[i] = sub(cloud.points[simplex[i + 1]], p0);
    std::vector<std::vector<double>> g(k, std::vector<double>(k));
    std::vector<double> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) g[i][j] = 2.0 * dot(edges[i], edges[j]);
        rhs[i] = dot(edges[i], edges[i]);
    }
    if (!solve(g, rhs)) {
        out.degenerate = true;
        return out;
    }
    out.center = p0;
    for (std::size_t i = 0; i < k; ++i)
        for (int c = 0; c < 3; ++c) out.center[c] += rhs[i] * edges[i][c];
    out.radius = std::sqrt(dist2(out.center, p0));
    return out;
}

namespace {

/// Whether the open ball of the circumsphere is empty of other cloud points.
/// Sets *cospherical when some other point lies on the sphere within
/// tolerance.
bool open_ball_empty(const PointCloud& cloud, const Simplex& simplex, const Circumsphere& cs,
                     bool* cospherical) {
    const double r2 = cs.radius * cs.radius;
    const double tol = kTolerance * std::max(1.0, r2);
    for (std::uint32_t q = 0; q < cloud.size(); ++q) {
        if (std::find(simplex.begin(), simplex.end(), q) != simplex.end()) continue;
        const double d2 = dist2(cloud.points[q], cs.center);
        if (std::abs(d2 - r2) <= tol) {
            if (cospherical) *cospherical = true;
            return false;
        }
        if (d2 < r2) return false;
    }
    return true;
}

void enumerate_subsets(const Simplex& simplex, std::set<Simplex>& out) {
    const std::size_t n = simplex.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(simplex[i]);
        out.insert(std::move(face));
    }
}

}  // namespace

std::vector<Simplex> delaunay(const PointCloud& cloud) {
    if (cloud.dim != 2 && cloud.dim != 3)
        throw Error("point clouds must be 2- or 3-dimensional");
    const std::size_t n = cloud.size();
    const std::size_t d = static_cast<std::size_t>(cloud.dim);

    std::set<Simplex> simplices;
    for (std::uint32_t v = 0; v < n; ++v) simplices.insert({v});
    if (n < d + 1) return {simplices.begin(), simplices.end()};

    // All (d+1)-subsets, indexable for parallel chunking.
    std::vector<Simplex> candidates;
    Simplex pick(d + 1);
    const std::function<void(std::size_t, std::uint32_t)> gen = [&](std::size_t slot,
                                                                    std::uint32_t from) {
        if (slot == d + 1) {
            candidates.push_back(pick);
            return;
        }
        for (std::uint32_t v = from; v < n; ++v) {
            pick[slot] = v;
            gen(slot + 1, v + 1);
        }
    };
    gen(0, 0);

    std::vector<std::uint8_t> keep(candidates.size(), 0);
    std::vector<std::string> degeneracy;
    std::mutex degeneracy_mutex;
    parallel_chunks(candidates.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Circumsphere cs = circumsphere(cloud, candidates[i]);
            if (cs.degenerate) continue;  // flat simplex, never Delaunay
            bool cospherical = false;
            const bool empty = open_ball_empty(cloud, candidates[i], cs, &cospherical);
            if (cospherical) {
                std::lock_guard<std::mutex> lock(degeneracy_mutex);
                std::string cells;
                for (auto v : candidates[i]) cells += std::to_string(v) + " ";
                degeneracy.push_back(cells);
                continue;
            }
            keep[i] = empty ? 1 : 0;
        }
    });
    if (!degeneracy.empty())
        throw DegeneratePosition("cospherical points beyond tolerance near simplex " +
                                 degeneracy.front());

    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) enumerate_subsets(candidates[i], simplices);

    return {simplices.begin(), simplices.end()};
}

AlphaComplex alpha_filtration(const std::vector<Simplex>& simplices, const PointCloud& cloud) {
    // Sort by (dim, vertex ids) and index.
    std::vector<Simplex> ordered = simplices;
    std::sort(ordered.begin(), ordered.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    std::map<Simplex, CellId> id_of;
    for (CellId id = 0; id < ordered.size(); ++id) id_of[ordered[id]] = id;

    // Cofacet lists for the min-over-cofacets rule.
    std::vector<std::vector<CellId>> cofacets(ordered.size());
    for (CellId id = 0; id < ordered.size(); ++id) {
        const Simplex& s = ordered[id];
        if (s.size() == 1) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            const auto it = id_of.find(face);
            if (it == id_of.end())
                throw Error("simplex set is not closed under faces");
            cofacets[it->second].push_back(id);
        }
    }

    // Alpha values, top dimension downward.
    std::vector<double> value(ordered.size(), 0.0);
    const int top = static_cast<int>(ordered.back().size()) - 1;
    for (int dim = top; dim >= 1; --dim) {
        for (CellId id = 0; id < ordered.size(); ++id) {
            const Simplex& s = ordered[id];
            if (static_cast<int>(s.size()) - 1 != dim) continue;
            const Circumsphere cs = circumsphere(cloud, s);
            if (cs.degenerate)
                throw DegeneratePosition("degenerate simplex in alpha filtration");
            if (open_ball_empty(cloud, s, cs, nullptr)) {
                value[id] = cs.radius;  // Gabriel
            } else {
                double v = std::numeric_limits<double>::infinity();
                for (CellId c : cofacets[id]) v = std::min(v, value[c]);
                if (!std::isfinite(v))
                    throw DegeneratePosition("non-Gabriel simplex without cofacets");
                value[id] = v;
            }
        }
    }

    std::vector<Cell> cells(ordered.size());
    for (CellId id = 0; id < ordered.size(); ++id) {
        cells[id].id = id;
        cells[id].dim = static_cast<int>(ordered[id].size()) - 1;
        cells[id].filtration = value[id];
        if (ordered[id].size() > 1) {
            for (std::size_t drop = 0; drop < ordered[id].size(); ++drop) {
                Simplex face;
                for (std::size_t i = 0; i < ordered[id].size(); ++i)
                    if (i != drop) face.push_back(ordered[id][i]);
                cells[id].boundary.push_back(id_of.at(face));
            }
        }
    }

    AlphaComplex out;
    out.complex = totalize_filtration(FilteredComplex(std::move(cells)));
    out.simplex_of_cell = std::move(ordered);
    const auto report = validate(out.complex);
    if (!report.structurally_valid()) throw ValidationError(report);
    return out;
}

AlphaComplex label_slices(const AlphaComplex& alpha, const SliceSpec& spec,
                          const PointCloud& cloud) {
    if (!(spec.epsilon > 0.0 && spec.epsilon < 0.5))
        throw Error("epsilon must lie in (0, 0.5)");
    if (spec.axis < 0 || spec.axis >= cloud.dim)
        throw Error("slice axis out of range");

    auto in_top = [&](std::uint32_t v) {
        return cloud.points[v][spec.axis] >= 1.0 - spec.epsilon;
    };
    auto in_bottom = [&](std::uint32_t v) { return cloud.points[v][spec.axis] <= spec.epsilon; };

    bool top_nonempty = false, bottom_nonempty = false;
    for (std::uint32_t v = 0; v < cloud.size(); ++v) {
        top_nonempty |= in_top(v);
        bottom_nonempty |= in_bottom(v);
    }
    if (!top_nonempty) throw EmptySlice("top slab contains no points");
    if (!bottom_nonempty) throw EmptySlice("bottom slab contains no points");

    AlphaComplex out = alpha;
    std::vector<Cell> cells = out.complex.cells();
    for (auto& cell : cells) {
        const Simplex& s = out.simplex_of_cell[cell.id];
        cell.in_a = std::all_of(s.begin(), s.end(), in_top);
        cell.in_b = std::all_of(s.begin(), s.end(), in_bottom);
    }
    out.complex = totalize_filtration(FilteredComplex(std::move(cells)));
    const auto report = validate(out.complex);
    if (!report.valid()) throw ValidationError(report);
    return out;
}

FilteredComplex strip_slab_interiors(const FilteredComplex& complex, int cell_dim) {
    const std::size_t n = complex.size();
    std::vector<bool> removed(n, false);
    for (const auto& cell : complex.cells())
        if (cell.dim == cell_dim && (cell.in_a || cell.in_b)) removed[cell.id] = true;

    // Remove cofaces of removed cells, upward by dimension.
    const int top = complex.max_dim();
    for (int dim = cell_dim + 1; dim <= top; ++dim) {
        for (const auto& cell : complex.cells()) {
            if (cell.dim != dim || removed[cell.id]) continue;
            for (CellId b : cell.boundary) {
                if (removed[b]) {
                    removed[cell.id] = true;
                    break;
                }
            }
        }
    }

    std::vector<CellId> new_id(n, 0);
    CellId next = 0;
    for (CellId id = 0; id < n; ++id)
        if (!removed[id]) new_id[id] = next++;

    std::vector<Cell> cells;
    cells.reserve(next);
    for (CellId id = 0; id < n; ++id) {
        if (removed[id]) continue;
        Cell cell = complex.cell(id);
        cell.id = new_id[id];
        for (auto& b : cell.boundary) b = new_id[b];
        cells.push_back(std::move(cell));
    }

    FilteredComplex out = totalize_filtration(FilteredComplex(std::move(cells)));
    const auto report = validate(out);
    if (!report.valid()) throw ValidationError(report);
    return out;
}

}  // namespace cobordia
