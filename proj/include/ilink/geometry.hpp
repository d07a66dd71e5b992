#pragma once

// Exact predicates for vertex-linear maps into R^d: general position,
// transversal intersection of complementary-dimensional simplices, embedding
// certification and Z2-linking numbers computed by coning.
//
// Every predicate is decided over the rationals with no tolerance. An exact
// zero in a place that matters is reported as degenerate, never perturbed.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ilink/complex.hpp"
#include "ilink/config.hpp"
#include "ilink/rational.hpp"
#include "ilink/spheres.hpp"

namespace ilink {

struct GeneralPosition {
    bool ok = true;
    std::vector<std::size_t> violating;  // indices into the point list

    explicit operator bool() const noexcept { return ok; }
};

/// True iff every subset of at most d+1 points is affinely independent.
/// On failure, reports a smallest dependent subset, first in lexicographic order.
inline GeneralPosition in_general_position(std::span<const Point> points, int d) {
    const std::size_t limit = std::min(points.size(), static_cast<std::size_t>(d) + 1);
    std::vector<std::size_t> chosen;
    std::vector<Point> buf;
    GeneralPosition result;
    auto visit = [&](auto&& self, std::size_t from, std::size_t size) -> bool {
        for (std::size_t i = from; i < points.size(); ++i) {
            chosen.push_back(i);
            buf.push_back(points[i]);
            if (chosen.size() == size) {
                if (affine_rank(buf) < size) {
                    result = {false, chosen};
                    return true;
                }
            } else if (self(self, i + 1, size)) {
                return true;
            }
            chosen.pop_back();
            buf.pop_back();
        }
        return false;
    };
    for (std::size_t size = 2; size <= limit; ++size)
        if (visit(visit, 0, size)) break;
    return result;
}

inline GeneralPosition in_general_position(const PointConfig& cfg) {
    return in_general_position(cfg.points(), cfg.dimension());
}

inline GeneralPosition in_general_position(const Realization& r) { return in_general_position(r.points, r.d); }

/// Whether `extra` keeps `base` in general position: every subset of at most
/// d points of `base`, together with `extra`, is affinely independent.
inline bool extends_general_position(std::span<const Point> base, const Point& extra, int d) {
    std::vector<Point> buf{extra};
    auto visit = [&](auto&& self, std::size_t from) -> bool {
        for (std::size_t i = from; i < base.size(); ++i) {
            buf.push_back(base[i]);
            if (affine_rank(buf) < buf.size()) return false;
            if (buf.size() < static_cast<std::size_t>(d) + 1 && !self(self, i + 1)) return false;
            buf.pop_back();
        }
        return true;
    };
    return visit(visit, 0);
}

struct IntersectionResult {
    enum class Kind { Empty, InteriorPoint, Degenerate };

    Kind kind = Kind::Empty;
    std::vector<Rat> lambda;  // barycentric coordinates on the first simplex
    std::vector<Rat> mu;      // and on the second
    Point point;

    bool interior() const noexcept { return kind == Kind::InteriorPoint; }
};

inline const char* to_string(IntersectionResult::Kind k) {
    switch (k) {
        case IntersectionResult::Kind::Empty: return "empty";
        case IntersectionResult::Kind::InteriorPoint: return "interior";
        case IntersectionResult::Kind::Degenerate: return "degenerate";
    }
    return "?";
}

/// Intersect conv(a) with conv(b) where |a| + |b| = d + 2.
///
/// Solves sum(l_i a_i) = sum(m_j b_j), sum(l) = sum(m) = 1. A unique solution
/// with all coordinates positive is a transversal interior double point; a
/// negative coordinate means the hulls meet outside one simplex. A singular
/// system with no solution means the affine hulls are parallel and disjoint.
/// Anything else (a zero coordinate, or hulls meeting in more than a point) is
/// degenerate.
inline IntersectionResult intersect_simplices(std::span<const Point> a, std::span<const Point> b) {
    if (a.empty() || b.empty()) throw InvalidArgument("intersect_simplices: empty simplex");
    const std::size_t d = a.front().size();
    if (a.size() + b.size() != d + 2)
        throw InvalidArgument("intersect_simplices: dimensions must sum to the ambient dimension");
    const std::size_t n = d + 2;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    std::vector<Rat> rhs(n);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t i = 0; i < a.size(); ++i) m[c][i] = a[i].at(c);
        for (std::size_t j = 0; j < b.size(); ++j) m[c][a.size() + j] = -b[j].at(c);
    }
    for (std::size_t i = 0; i < a.size(); ++i) m[d][i] = 1;
    for (std::size_t j = 0; j < b.size(); ++j) m[d + 1][a.size() + j] = 1;
    rhs[d] = 1;
    rhs[d + 1] = 1;

    auto sol = solve_linear(std::move(m), std::move(rhs));
    IntersectionResult r;
    if (sol.status == SolveStatus::Inconsistent) return r;
    if (sol.status == SolveStatus::Underdetermined) {
        r.kind = IntersectionResult::Kind::Degenerate;
        return r;
    }
    bool negative = false, zero = false;
    for (const auto& x : sol.x) {
        negative |= sgn(x) < 0;
        zero |= sgn(x) == 0;
    }
    if (negative) return r;
    r.lambda.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(a.size()));
    r.mu.assign(sol.x.begin() + static_cast<std::ptrdiff_t>(a.size()), sol.x.end());
    r.point.assign(d, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t c = 0; c < d; ++c) r.point[c] += r.lambda[i] * a[i][c];
    r.kind = zero ? IntersectionResult::Kind::Degenerate : IntersectionResult::Kind::InteriorPoint;
    return r;
}

inline IntersectionResult pair_intersection(const Simplex& s, const Simplex& t, const Realization& r) {
    if (!s.disjoint_from(t)) throw InvalidArgument("pair_intersection: simplices share a vertex");
    if (s.dim() + t.dim() != r.d) throw InvalidArgument("pair_intersection: dim s + dim t must equal d");
    auto a = r.of(s);
    auto b = r.of(t);
    return intersect_simplices(a, b);
}

/// A disjoint pair of top simplices together with their intersection.
struct TopPair {
    Simplex s;
    Simplex t;
    IntersectionResult hit;
};

/// Every unordered vertex-disjoint pair of top simplices (s < t).
inline std::vector<std::pair<Simplex, Simplex>> disjoint_top_pairs(const SimplicialComplex& k) {
    std::vector<std::pair<Simplex, Simplex>> out;
    const auto& tops = k.simplices(k.dim());
    for (std::size_t i = 0; i < tops.size(); ++i)
        for (std::size_t j = i + 1; j < tops.size(); ++j)
            if (tops[i].disjoint_from(tops[j])) out.emplace_back(tops[i], tops[j]);
    return out;
}

namespace detail {

inline void require_half_dimension(const SimplicialComplex& k, const Realization& r, const char* who) {
    if (k.dim() < 0 || r.d != 2 * k.dim())
        throw PreconditionError(std::string(who) + ": ambient dimension must be twice the top dimension");
}

}  // namespace detail

/// Intersections of all disjoint top pairs, in lexicographic pair order.
/// A degenerate pair raises DegeneracyError naming it.
inline std::vector<TopPair> top_pair_ledger(const SimplicialComplex& k, const Realization& r) {
    detail::require_half_dimension(k, r, "top_pair_ledger");
    std::vector<TopPair> out;
    for (auto& [s, t] : disjoint_top_pairs(k)) {
        auto hit = pair_intersection(s, t, r);
        if (hit.kind == IntersectionResult::Kind::Degenerate)
            throw DegeneracyError("degenerate intersection between {" + k.format(s) + "} and {" + k.format(t) + "}");
        out.push_back({s, t, std::move(hit)});
    }
    return out;
}

/// The vertex-disjoint top pairs whose images cross. Under general position
/// each pair contributes at most one point.
inline std::vector<TopPair> double_point_set(const SimplicialComplex& k, const Realization& r) {
    auto all = top_pair_ledger(k, r);
    std::vector<TopPair> out;
    for (auto& p : all)
        if (p.hit.interior()) out.push_back(std::move(p));
    return out;
}

inline std::vector<TopPair> double_point_set(const SimplicialComplex& k, const PointConfig& cfg) {
    return double_point_set(k, realize(k, cfg));
}

/// Whether the vertex-linear map is an embedding of K.
///
/// In general position any two simplices spanning at most d+1 vertices have
/// affinely independent images and so meet exactly in their common face; only
/// vertex-disjoint pairs of top simplices (2n+2 = d+2 vertices) can cross.
inline bool is_linear_embedding(const SimplicialComplex& k, const Realization& r) {
    detail::require_half_dimension(k, r, "is_linear_embedding");
    if (!in_general_position(r)) throw PreconditionError("is_linear_embedding: configuration not in general position");
    for (auto& [s, t] : disjoint_top_pairs(k)) {
        auto hit = pair_intersection(s, t, r);
        if (hit.kind == IntersectionResult::Kind::Degenerate)
            throw DegeneracyError("degenerate intersection between {" + k.format(s) + "} and {" + k.format(t) + "}");
        if (hit.interior()) return false;
    }
    return true;
}

inline bool is_linear_embedding(const SimplicialComplex& k, const PointConfig& cfg) {
    return is_linear_embedding(k, realize(k, cfg));
}

inline constexpr int kSampleBudget = 1024;

/// Seeded integer coordinates in [-B, B]^d for each label, resampled wholesale
/// until in general position.
inline PointConfig sample_config(std::uint64_t seed, int d, const std::vector<std::string>& labels,
                                 std::int64_t bound) {
    if (bound < 1) throw InvalidArgument("sample_config: bound must be >= 1");
    BoxSampler box(seed, bound);
    for (int attempt = 0; attempt < kSampleBudget; ++attempt) {
        PointConfig cfg(d, seed);
        for (const auto& l : labels) cfg.set(l, box.point(d));
        if (in_general_position(cfg)) return cfg;
    }
    throw SamplingError("sample_config: no general-position sample in " + std::to_string(kSampleBudget) +
                        " attempts; try a larger bound");
}

inline PointConfig sample_config(std::uint64_t seed, int d, const SimplicialComplex& k, std::int64_t bound) {
    return sample_config(seed, d, k.labels(), bound);
}

/// Where the cone apex for lk2 comes from.
struct ApexOptions {
    std::uint64_t seed = 0;               // sub-seed for sampled apexes
    int budget = 64;                      // resamples before giving up
    std::int64_t bound = 0;               // apex box; 0 picks one from the configuration's extent
    std::optional<Point> point;           // use this apex and do not resample
    std::optional<VertexIndex> vertex;    // cone from a vertex of gamma (straight extension)
};

namespace detail {

// Parity of cone(apex, gamma) against gamma'. nullopt on a degenerate hit.
inline std::optional<int> cone_parity(const SphereWitness& gamma, const SphereWitness& gamma_prime,
                                      const Realization& r, const Point& apex,
                                      std::optional<VertexIndex> apex_vertex) {
    int parity = 0;
    for (const auto& sigma : gamma.facets) {
        if (apex_vertex && sigma.contains(*apex_vertex)) continue;  // flat cone cell, zero chain
        std::vector<Point> cell{apex};
        for (auto v : sigma) cell.push_back(r[v]);
        for (const auto& tau : gamma_prime.facets) {
            auto other = r.of(tau);
            auto hit = intersect_simplices(cell, other);
            if (hit.kind == IntersectionResult::Kind::Degenerate) return std::nullopt;
            if (hit.interior()) parity ^= 1;
        }
    }
    return parity;
}

inline std::int64_t auto_apex_bound(const Realization& r) {
    mpz_class extent = 1;
    for (const auto& p : r.points)
        for (const auto& x : p) {
            mpz_class c = abs(x.get_num()) / x.get_den() + 1;
            if (c > extent) extent = c;
        }
    extent = 2 * extent + 1;
    if (!extent.fits_slong_p() || extent > mpz_class("1000000000000")) return 1000000000000;
    return extent.get_si();
}

}  // namespace detail

/// Z2-linking number of the images of gamma (dim p) and gamma' (dim q), p + q = d - 1.
///
/// Cones gamma from an apex c: the cells c*sigma form a (p+1)-chain bounded by
/// gamma, and the parity of its transversal hits with gamma' is lk2. A sampled
/// apex is redrawn on degeneracy; a supplied one is not.
inline int lk2(const SphereWitness& gamma, const SphereWitness& gamma_prime, const Realization& r,
               const ApexOptions& opts = {}) {
    if (gamma.dim + gamma_prime.dim != r.d - 1) throw InvalidArgument("lk2: need p + q = d - 1");
    if ((gamma.vertex_mask() & gamma_prime.vertex_mask()) != 0)
        throw InvalidArgument("lk2: spheres share a vertex");

    if (opts.vertex) {
        auto verts = gamma.vertices();
        if (!std::binary_search(verts.begin(), verts.end(), *opts.vertex))
            throw InvalidArgument("lk2: apex vertex is not on gamma");
        auto parity = detail::cone_parity(gamma, gamma_prime, r, r[*opts.vertex], opts.vertex);
        if (!parity) throw DegeneracyError("lk2: degenerate intersection for the straight extension");
        return *parity;
    }

    std::vector<Point> sphere_points;
    for (auto v : gamma.vertices()) sphere_points.push_back(r[v]);
    for (auto v : gamma_prime.vertices()) sphere_points.push_back(r[v]);

    if (opts.point) {
        if (!extends_general_position(sphere_points, *opts.point, r.d))
            throw DegeneracyError("lk2: supplied apex is not in general position");
        auto parity = detail::cone_parity(gamma, gamma_prime, r, *opts.point, std::nullopt);
        if (!parity) throw DegeneracyError("lk2: degenerate intersection for the supplied apex");
        return *parity;
    }

    const std::int64_t bound = opts.bound > 0 ? opts.bound : detail::auto_apex_bound(r);
    for (int attempt = 0; attempt < opts.budget; ++attempt) {
        BoxSampler box(derive_seed(opts.seed, static_cast<std::uint64_t>(attempt)), bound);
        Point apex = box.point(r.d);
        if (!extends_general_position(sphere_points, apex, r.d)) continue;
        if (auto parity = detail::cone_parity(gamma, gamma_prime, r, apex, std::nullopt)) return *parity;
    }
    throw DegeneracyError("lk2: apex budget exhausted after " + std::to_string(opts.budget) + " samples");
}

inline int lk2(const LinkPair& pair, const Realization& r, const ApexOptions& opts = {}) {
    return lk2(pair.gamma, pair.gamma_prime, r, opts);
}

}  // namespace ilink
