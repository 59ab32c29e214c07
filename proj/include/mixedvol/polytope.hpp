#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mixedvol/linalg.hpp"
#include "mixedvol/rational.hpp"

namespace mixedvol {

using RationalVector = std::vector<Rational>;

inline RationalVector vec_add(const RationalVector& a, const RationalVector& b) {
    RationalVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline RationalVector vec_sub(const RationalVector& a, const RationalVector& b) {
    RationalVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline RationalVector vec_scale(const RationalVector& a, const Rational& s) {
    RationalVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    return out;
}

inline Rational vec_dot(const RationalVector& a, const RationalVector& b) {
    Rational out = 0;
    for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

/// A bounded rational polytope, canonically represented by its sorted set of
/// extreme points. Construction runs an exact convex hull, so two polytopes
/// are equal iff their vertex lists are equal. Lower-dimensional inputs
/// (segments, points) are valid; volume is the full-dimensional measure and
/// is zero for them.
class RationalPolytope {
  public:
    int dim() const { return ambient_dim_; }
    int affine_dim() const { return affine_dim_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }

    friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const RationalPolytope& a, const RationalPolytope& b) {
        return !(a == b);
    }

    friend RationalPolytope convex_hull(int dim, std::vector<RationalVector> points);
    friend Rational volume(const RationalPolytope& p);
    friend bool contains_point(const RationalPolytope& p, const RationalVector& q);

  private:
    struct Inequality {
        RationalVector normal;  // normal . x <= offset in working coordinates
        Rational offset;
    };

    RationalPolytope() = default;

    // Working coordinates are the ambient ones when the polytope is
    // full-dimensional, otherwise exact coordinates w.r.t. an affine basis
    // rooted at origin_.
    int ambient_dim_ = 0;
    int affine_dim_ = 0;
    std::vector<RationalVector> vertices_;
    std::vector<Inequality> inequalities_;
    Rational volume_ = 0;

    // Affine reduction data, used only when affine_dim_ < ambient_dim_.
    RationalVector origin_;
    std::vector<RationalVector> basis_;       // affine_dim_ vectors of length ambient_dim_
    std::vector<int> pivot_rows_;             // rows making the basis matrix invertible
    RationalMatrix pivot_inverse_;            // inverse of that square submatrix

    std::optional<RationalVector> reduce_coords(const RationalVector& q) const {
        RationalVector delta = vec_sub(q, origin_);
        std::vector<Rational> x(affine_dim_);
        for (int i = 0; i < affine_dim_; ++i) {
            Rational acc = 0;
            for (int j = 0; j < affine_dim_; ++j) {
                acc += pivot_inverse_[i][j] * delta[pivot_rows_[j]];
            }
            x[i] = acc;
        }
        // The candidate must actually reproduce q, otherwise q is outside
        // the affine hull.
        for (int r = 0; r < ambient_dim_; ++r) {
            Rational acc = 0;
            for (int i = 0; i < affine_dim_; ++i) acc += basis_[i][r] * x[i];
            if (acc != delta[r]) return std::nullopt;
        }
        return x;
    }
};

namespace detail {

// Incremental exact convex hull of full-dimensional point sets. Facets are
// kept simplicial; collinear/coplanar inputs only ever split true facets
// into coplanar simplices, which the caller compensates for when extracting
// vertices and deduplicated inequalities.
struct IncrementalHull {
    struct Facet {
        std::vector<int> verts;  // sorted point indices, size = dim
        RationalVector normal;
        Rational offset;
        bool alive = true;
    };

    int dim;
    const std::vector<RationalVector>& pts;
    std::vector<Facet> facets;
    RationalVector interior;

    IncrementalHull(int k, const std::vector<RationalVector>& points,
                    const std::vector<int>& simplex)
        : dim(k), pts(points) {
        interior.assign(k, Rational(0));
        for (int id : simplex) interior = vec_add(interior, pts[id]);
        for (auto& c : interior) c /= static_cast<int>(simplex.size());

        for (size_t skip = 0; skip < simplex.size(); ++skip) {
            std::vector<int> verts;
            for (size_t i = 0; i < simplex.size(); ++i) {
                if (i != skip) verts.push_back(simplex[i]);
            }
            add_facet(std::move(verts));
        }
        std::vector<bool> in_simplex_mask(pts.size(), false);
        for (int id : simplex) in_simplex_mask[id] = true;
        for (size_t i = 0; i < pts.size(); ++i) {
            if (!in_simplex_mask[i]) insert(static_cast<int>(i));
        }
    }

    void add_facet(std::vector<int> verts) {
        std::sort(verts.begin(), verts.end());
        RationalMatrix rows;
        for (size_t i = 1; i < verts.size(); ++i) {
            rows.push_back(vec_sub(pts[verts[i]], pts[verts[0]]));
        }
        RationalVector normal = nullspace_vector(std::move(rows));
        Rational offset = vec_dot(normal, pts[verts[0]]);
        const Rational side = vec_dot(normal, interior);
        if (side == offset) {
            throw std::logic_error("hull interior reference on facet hyperplane");
        }
        if (side > offset) {
            for (auto& c : normal) c = -c;
            offset = -offset;
        }
        facets.push_back(Facet{std::move(verts), std::move(normal), std::move(offset)});
    }

    void insert(int id) {
        const RationalVector& p = pts[id];
        std::vector<int> visible;
        for (size_t f = 0; f < facets.size(); ++f) {
            if (facets[f].alive && vec_dot(facets[f].normal, p) > facets[f].offset) {
                visible.push_back(static_cast<int>(f));
            }
        }
        if (visible.empty()) return;

        // A ridge incident to exactly one visible facet lies on the horizon.
        std::map<std::vector<int>, int> ridge_count;
        for (int f : visible) {
            const auto& verts = facets[f].verts;
            for (size_t skip = 0; skip < verts.size(); ++skip) {
                std::vector<int> ridge;
                for (size_t i = 0; i < verts.size(); ++i) {
                    if (i != skip) ridge.push_back(verts[i]);
                }
                ridge_count[ridge] += 1;
            }
        }
        for (int f : visible) facets[f].alive = false;
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            std::vector<int> verts = ridge;
            verts.push_back(id);
            add_facet(std::move(verts));
        }
    }
};

inline std::vector<RationalVector> dedupe_points(std::vector<RationalVector> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

// Greedy affine basis: returns indices whose difference vectors from
// points[0] are linearly independent and span the affine hull.
struct AffineBasis {
    std::vector<int> span_ids;  // first entry is the base point
    std::vector<RationalVector> vectors;
};

inline AffineBasis affine_basis(const std::vector<RationalVector>& points) {
    AffineBasis out;
    out.span_ids.push_back(0);
    RationalMatrix echelon;
    for (size_t i = 1; i < points.size(); ++i) {
        RationalVector v = vec_sub(points[i], points[0]);
        RationalVector residue = v;
        for (const auto& row : echelon) {
            int lead = -1;
            for (size_t c = 0; c < row.size(); ++c) {
                if (row[c] != 0) { lead = static_cast<int>(c); break; }
            }
            if (lead >= 0 && residue[lead] != 0) {
                const Rational factor = residue[lead] / row[lead];
                for (size_t c = 0; c < row.size(); ++c) residue[c] -= factor * row[c];
            }
        }
        bool nonzero = false;
        for (const auto& c : residue) {
            if (c != 0) { nonzero = true; break; }
        }
        if (nonzero) {
            echelon.push_back(residue);
            out.span_ids.push_back(static_cast<int>(i));
            out.vectors.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace detail

/// Exact convex hull; the result's vertex list is the minimal (irredundant)
/// generating set, sorted lexicographically.
inline RationalPolytope convex_hull(int dim, std::vector<RationalVector> points) {
    if (dim <= 0) throw std::invalid_argument("polytope dimension must be positive");
    if (points.empty()) throw std::invalid_argument("convex hull of empty point set");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim) {
            throw std::invalid_argument("point dimension mismatch");
        }
    }
    points = detail::dedupe_points(std::move(points));

    RationalPolytope out;
    out.ambient_dim_ = dim;

    const detail::AffineBasis basis = detail::affine_basis(points);
    const int k = static_cast<int>(basis.vectors.size());
    out.affine_dim_ = k;

    if (k == 0) {
        out.vertices_ = {points[0]};
        out.origin_ = points[0];
        return out;
    }

    // Working coordinates: ambient when full-dimensional, otherwise exact
    // coefficients w.r.t. the affine basis.
    std::vector<RationalVector> work;
    if (k == dim) {
        work = points;
    } else {
        out.origin_ = points[0];
        out.basis_ = basis.vectors;
        RationalMatrix mat(dim, RationalVector(k));
        for (int j = 0; j < k; ++j) {
            for (int r = 0; r < dim; ++r) mat[r][j] = basis.vectors[j][r];
        }
        RationalMatrix transposed(k, RationalVector(dim));
        for (int r = 0; r < dim; ++r) {
            for (int j = 0; j < k; ++j) transposed[j][r] = mat[r][j];
        }
        RationalMatrix probe = transposed;
        // Pivot rows of the basis matrix = pivot columns of its transpose.
        out.pivot_rows_ = detail::row_echelon(probe);
        RationalMatrix square(k, RationalVector(k));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) square[i][j] = mat[out.pivot_rows_[i]][j];
        }
        out.pivot_inverse_.assign(k, RationalVector(k));
        for (int col = 0; col < k; ++col) {
            std::vector<Rational> unit(k);
            unit[col] = 1;
            auto solved = solve_linear(square, unit);
            if (!solved) throw std::logic_error("affine basis submatrix not invertible");
            for (int row = 0; row < k; ++row) out.pivot_inverse_[row][col] = (*solved)[row];
        }
        work.reserve(points.size());
        for (const auto& p : points) {
            auto reduced = out.reduce_coords(p);
            if (!reduced) throw std::logic_error("input point escaped its affine hull");
            work.push_back(std::move(*reduced));
        }
    }

    std::vector<int> vertex_ids;
    if (k == 1) {
        int lo = 0, hi = 0;
        for (size_t i = 1; i < work.size(); ++i) {
            if (work[i][0] < work[lo][0]) lo = static_cast<int>(i);
            if (work[i][0] > work[hi][0]) hi = static_cast<int>(i);
        }
        vertex_ids = {lo, hi};
        out.inequalities_.push_back({{Rational(1)}, work[hi][0]});
        out.inequalities_.push_back({{Rational(-1)}, -work[lo][0]});
        if (k == dim) out.volume_ = work[hi][0] - work[lo][0];
    } else {
        std::vector<int> simplex = basis.span_ids;  // k+1 affinely independent points
        detail::IncrementalHull hull(k, work, simplex);

        // Deduplicate facet hyperplanes: scale so the first nonzero normal
        // entry has absolute value one (positive scaling keeps orientation).
        std::map<std::pair<RationalVector, Rational>, bool> seen;
        for (const auto& f : hull.facets) {
            if (!f.alive) continue;
            RationalVector normal = f.normal;
            Rational offset = f.offset;
            Rational lead = 0;
            for (const auto& c : normal) {
                if (c != 0) { lead = abs(c); break; }
            }
            for (auto& c : normal) c /= lead;
            offset /= lead;
            auto key = std::make_pair(std::move(normal), std::move(offset));
            if (!seen.count(key)) {
                seen[key] = true;
                out.inequalities_.push_back({key.first, key.second});
            }
        }

        // Candidate vertices are facet corners; true vertices are those whose
        // active hyperplane normals span the working space. Coplanar facet
        // splits leave non-extreme corners behind, and this filters them out.
        std::vector<int> candidates;
        for (const auto& f : hull.facets) {
            if (!f.alive) continue;
            candidates.insert(candidates.end(), f.verts.begin(), f.verts.end());
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (int id : candidates) {
            RationalMatrix active;
            for (const auto& ineq : out.inequalities_) {
                if (vec_dot(ineq.normal, work[id]) == ineq.offset) {
                    active.push_back(ineq.normal);
                }
            }
            if (static_cast<int>(active.size()) >= k && matrix_rank(std::move(active)) == k) {
                vertex_ids.push_back(id);
            }
        }

        if (k == dim) {
            RationalVector centroid(k, Rational(0));
            for (int id : vertex_ids) centroid = vec_add(centroid, work[id]);
            for (auto& c : centroid) c /= static_cast<int>(vertex_ids.size());
            Rational total = 0;
            Integer factorial = 1;
            for (int i = 2; i <= k; ++i) factorial *= i;
            for (const auto& f : hull.facets) {
                if (!f.alive) continue;
                RationalMatrix rows;
                for (int id : f.verts) rows.push_back(vec_sub(work[id], centroid));
                Rational det = determinant(std::move(rows));
                total += abs(det);
            }
            out.volume_ = total / Rational(factorial);
        }
    }

    for (int id : vertex_ids) out.vertices_.push_back(points[id]);
    std::sort(out.vertices_.begin(), out.vertices_.end());
    return out;
}

inline RationalPolytope convex_hull(const std::vector<RationalVector>& points) {
    if (points.empty()) throw std::invalid_argument("convex hull of empty point set");
    return convex_hull(static_cast<int>(points[0].size()), points);
}

/// Full-dimensional volume; exactly zero when affine_dim < dim.
inline Rational volume(const RationalPolytope& p) { return p.volume_; }

/// Exact membership test (boundary counts as inside).
inline bool contains_point(const RationalPolytope& p, const RationalVector& q) {
    if (static_cast<int>(q.size()) != p.dim()) {
        throw std::invalid_argument("point dimension mismatch");
    }
    if (p.affine_dim_ == p.ambient_dim_) {
        for (const auto& ineq : p.inequalities_) {
            if (vec_dot(ineq.normal, q) > ineq.offset) return false;
        }
        return true;
    }
    auto reduced = p.reduce_coords(q);
    if (!reduced) return false;
    for (const auto& ineq : p.inequalities_) {
        if (vec_dot(ineq.normal, *reduced) > ineq.offset) return false;
    }
    return true;
}

inline RationalPolytope minkowski_sum(const RationalPolytope& a, const RationalPolytope& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Minkowski sum dimension mismatch");
    std::vector<RationalVector> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& va : a.vertices()) {
        for (const auto& vb : b.vertices()) sums.push_back(vec_add(va, vb));
    }
    return convex_hull(a.dim(), std::move(sums));
}

/// Dilation by a nonnegative rational factor; 0 * K is the origin.
inline RationalPolytope scale(const RationalPolytope& p, const Rational& factor) {
    if (factor < 0) throw std::invalid_argument("negative scaling factor");
    std::vector<RationalVector> scaled;
    scaled.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) scaled.push_back(vec_scale(v, factor));
    return convex_hull(p.dim(), std::move(scaled));
}

inline RationalPolytope translate(const RationalPolytope& p, const RationalVector& shift) {
    if (static_cast<int>(shift.size()) != p.dim()) {
        throw std::invalid_argument("translation dimension mismatch");
    }
    std::vector<RationalVector> moved;
    moved.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) moved.push_back(vec_add(v, shift));
    return convex_hull(p.dim(), std::move(moved));
}

/// conv{0, e_1, ..., e_d}.
inline RationalPolytope standard_simplex(int d) {
    std::vector<RationalVector> points;
    points.emplace_back(d, Rational(0));
    for (int i = 0; i < d; ++i) {
        RationalVector e(d, Rational(0));
        e[i] = 1;
        points.push_back(std::move(e));
    }
    return convex_hull(d, std::move(points));
}

}  // namespace mixedvol
