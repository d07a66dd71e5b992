#pragma once

// Sphere subcomplexes and disjoint sphere pairs.
//
// Recognition is combinatorial and limited to S^0, S^1 and S^2. Higher
// spheres enter only through certified shapes: the boundary of a simplex and
// the join of point pairs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "ilink/complex.hpp"

namespace ilink {

struct BoundaryOfSimplex {
    Simplex simplex;
    friend bool operator==(const BoundaryOfSimplex&, const BoundaryOfSimplex&) = default;
};

struct JoinOfPointPairs {
    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    friend bool operator==(const JoinOfPointPairs&, const JoinOfPointPairs&) = default;
};

struct Recognized {
    friend bool operator==(const Recognized&, const Recognized&) = default;
};

using SphereShape = std::variant<BoundaryOfSimplex, JoinOfPointPairs, Recognized>;

inline std::string shape_tag(const SphereShape& shape) {
    switch (shape.index()) {
        case 0: return "boundary";
        case 1: return "join";
        default: return "recognized";
    }
}

/// A sphere subcomplex of some parent complex, given by its top simplices
/// (parent vertex indices, sorted). Equality ignores the shape tag.
struct SphereWitness {
    int dim = 0;
    std::vector<Simplex> facets;
    SphereShape shape = Recognized{};

    std::vector<VertexIndex> vertices() const {
        std::set<VertexIndex> v;
        for (const auto& f : facets) v.insert(f.begin(), f.end());
        return {v.begin(), v.end()};
    }

    std::uint64_t vertex_mask() const {
        std::uint64_t m = 0;
        for (const auto& f : facets)
            for (auto v : f) m |= std::uint64_t{1} << v;
        return m;
    }

    SimplicialComplex subcomplex(const SimplicialComplex& parent) const { return induced_by(parent, facets); }

    friend bool operator==(const SphereWitness& a, const SphereWitness& b) {
        return a.dim == b.dim && a.facets == b.facets;
    }
    friend bool operator<(const SphereWitness& a, const SphereWitness& b) {
        return std::tie(a.dim, a.facets) < std::tie(b.dim, b.facets);
    }
};

/// An unordered pair of vertex-disjoint spheres, gamma of dimension p and gamma_prime of dimension q.
struct LinkPair {
    SphereWitness gamma;
    SphereWitness gamma_prime;

    friend bool operator==(const LinkPair&, const LinkPair&) = default;
    friend bool operator<(const LinkPair& a, const LinkPair& b) {
        if (a.gamma == b.gamma) return a.gamma_prime < b.gamma_prime;
        return a.gamma < b.gamma;
    }
};

/// The boundary of `s`, as a (dim s - 1)-sphere.
inline SphereWitness boundary_sphere(const Simplex& s) {
    SphereWitness w;
    w.dim = s.dim() - 1;
    w.facets = faces_of_size(s, s.size() - 1);
    w.shape = BoundaryOfSimplex{s};
    return w;
}

/// The join {x0,y0} * {x1,y1} * ... , a (k-1)-sphere for k pairs.
inline SphereWitness join_sphere(std::vector<std::pair<VertexIndex, VertexIndex>> pairs) {
    SphereWitness w;
    w.dim = static_cast<int>(pairs.size()) - 1;
    for (auto& p : pairs)
        if (p.first > p.second) std::swap(p.first, p.second);
    std::sort(pairs.begin(), pairs.end());
    const std::size_t k = pairs.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::vector<VertexIndex> v;
        for (std::size_t i = 0; i < k; ++i) v.push_back((bits >> i) & 1U ? pairs[i].second : pairs[i].first);
        w.facets.emplace_back(std::move(v));
    }
    std::sort(w.facets.begin(), w.facets.end());
    w.shape = JoinOfPointPairs{std::move(pairs)};
    return w;
}

namespace detail {

inline bool connected_by_facets(const std::vector<Simplex>& facets) {
    if (facets.empty()) return false;
    std::map<VertexIndex, VertexIndex> parent;
    auto root = [&](VertexIndex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& f : facets)
        for (auto v : f) parent.emplace(v, v);
    for (const auto& f : facets)
        for (std::size_t i = 1; i < f.size(); ++i) parent[root(f[i])] = root(f[0]);
    const VertexIndex r = root(facets.front()[0]);
    for (auto& [v, _] : parent)
        if (root(v) != r) return false;
    return true;
}

inline bool is_cycle(const std::vector<Simplex>& edges) {
    std::map<VertexIndex, int> degree;
    for (const auto& e : edges) {
        if (e.size() != 2) return false;
        ++degree[e[0]];
        ++degree[e[1]];
    }
    for (auto& [v, d] : degree)
        if (d != 2) return false;
    return degree.size() >= 3 && connected_by_facets(edges);
}

}  // namespace detail

/// Whether the complex generated by `facets` (all of dimension d) is a
/// combinatorial d-sphere, d in {0, 1, 2}.
inline bool is_sphere(const std::vector<Simplex>& facets, int d) {
    if (d < 0 || d > 2) throw UnsupportedDimension("sphere recognition supports d in {0,1,2}");
    std::set<Simplex> unique(facets.begin(), facets.end());
    if (unique.size() != facets.size()) return false;
    for (const auto& f : facets)
        if (f.dim() != d) return false;
    if (d == 0) return facets.size() == 2;
    if (d == 1) return detail::is_cycle(facets);

    std::map<Simplex, int> edge_count;
    std::map<VertexIndex, std::vector<Simplex>> link;
    for (const auto& t : facets) {
        for (std::size_t i = 0; i < 3; ++i) {
            ++edge_count[t.without(i)];
            link[t[i]].push_back(t.without(i));
        }
    }
    for (auto& [e, c] : edge_count)
        if (c != 2) return false;
    for (auto& [v, edges] : link)
        if (!detail::is_cycle(edges)) return false;
    if (!detail::connected_by_facets(facets)) return false;
    const long euler = static_cast<long>(link.size()) - static_cast<long>(edge_count.size()) +
                       static_cast<long>(facets.size());
    return euler == 2;
}

/// Whether C is homeomorphic to S^d, d in {0, 1, 2}.
inline bool recognize_sphere(const SimplicialComplex& c, int d) {
    if (d < 0 || d > 2) throw UnsupportedDimension("sphere recognition supports d in {0,1,2}");
    if (c.vertex_count() == 0 || c.dim() != d) return false;
    auto maximal = c.maximal_simplices();
    return is_sphere(maximal, d);
}

/// Tag a recognized sphere with a certified shape when it has one.
inline SphereShape classify_shape(const std::vector<Simplex>& facets, int d) {
    std::set<VertexIndex> verts;
    for (const auto& f : facets) verts.insert(f.begin(), f.end());
    const std::size_t nv = verts.size();
    if (nv == static_cast<std::size_t>(d) + 2 && facets.size() == nv)
        return BoundaryOfSimplex{Simplex(std::vector<VertexIndex>(verts.begin(), verts.end()))};
    if (nv == 2 * (static_cast<std::size_t>(d) + 1) && facets.size() == (std::size_t{1} << (d + 1))) {
        std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
        for (auto v : verts) {
            std::vector<VertexIndex> apart;
            for (auto w : verts) {
                if (w == v) continue;
                bool together = std::any_of(facets.begin(), facets.end(),
                                            [&](const Simplex& f) { return f.contains(v) && f.contains(w); });
                if (!together) apart.push_back(w);
            }
            if (apart.size() != 1) return Recognized{};
            if (v < apart[0]) pairs.emplace_back(v, apart[0]);
        }
        auto candidate = join_sphere(pairs);
        auto sorted = facets;
        std::sort(sorted.begin(), sorted.end());
        if (candidate.facets == sorted) return candidate.shape;
    }
    return Recognized{};
}

/// The two canonical sphere families used in the parity argument for N1, N2, N3.
struct CanonicalFamilies {
    std::vector<SphereWitness> lower;  // (n-1)-spheres
    std::vector<SphereWitness> upper;  // n-spheres
};

inline CanonicalFamilies canonical_gammas(StandardName name, int n) {
    if (n < 1) throw InvalidArgument("canonical_gammas: n must be positive");
    CanonicalFamilies fam;
    switch (name) {
        case StandardName::N1: {
            auto sigma = skeleton_complex(2 * n + 2, n + 1);
            for (const auto& s : sigma.simplices(n))
                if (s.contains(0)) fam.lower.push_back(boundary_sphere(s));
            for (const auto& t : sigma.simplices(n + 1))
                if (!t.contains(0)) fam.upper.push_back(boundary_sphere(t));
            break;
        }
        case StandardName::N2: {
            // vertex a_j^i has index 3i + j
            auto join = multi_join(3, n + 1);
            for (const auto& s : join.simplices(n))
                if (s.contains(0)) fam.lower.push_back(boundary_sphere(s));
            std::vector<std::pair<int, int>> choices{{0, 1}, {0, 2}, {1, 2}};
            std::vector<int> pick(static_cast<std::size_t>(n), 0);
            for (;;) {
                std::vector<std::pair<VertexIndex, VertexIndex>> pairs{{1, 2}};
                for (int q = 1; q <= n; ++q) {
                    auto [i, j] = choices[static_cast<std::size_t>(pick[static_cast<std::size_t>(q - 1)])];
                    pairs.emplace_back(3 * q + i, 3 * q + j);
                }
                fam.upper.push_back(join_sphere(std::move(pairs)));
                int q = n - 1;
                while (q >= 0 && pick[static_cast<std::size_t>(q)] == 2) pick[static_cast<std::size_t>(q--)] = 0;
                if (q < 0) break;
                ++pick[static_cast<std::size_t>(q)];
            }
            break;
        }
        case StandardName::N3: {
            auto sigma = skeleton_complex(2 * n + 2, n + 1);
            for (const auto& s : sigma.simplices(n))
                if (s.vertices().back() <= n + 1) fam.lower.push_back(boundary_sphere(s));
            for (const auto& t : sigma.simplices(n + 1)) {
                auto inside = std::count_if(t.begin(), t.end(), [&](VertexIndex v) { return v <= n + 1; });
                if (inside == 1) fam.upper.push_back(boundary_sphere(t));
            }
            break;
        }
        default: throw InvalidArgument("canonical_gammas: name must be N1, N2 or N3");
    }
    std::sort(fam.lower.begin(), fam.lower.end());
    std::sort(fam.upper.begin(), fam.upper.end());
    return fam;
}

/// All disjoint (gamma, gamma') with gamma in the lower family and gamma' in the upper one.
/// For N1 and N2 this is all of Lambda^{n-1,n}; for N3 it is the subfamily M.
inline std::vector<LinkPair> canonical_pairs(StandardName name, int n) {
    auto fam = canonical_gammas(name, n);
    std::vector<LinkPair> out;
    for (const auto& g : fam.lower)
        for (const auto& h : fam.upper)
            if ((g.vertex_mask() & h.vertex_mask()) == 0) out.push_back({g, h});
    std::sort(out.begin(), out.end());
    return out;
}

/// Upper bound on backtracking nodes visited by enumerate_sphere_pairs.
inline constexpr std::uint64_t kSphereSearchBudget = std::uint64_t{1} << 25;

namespace detail {

struct SphereSearch {
    const SimplicialComplex& k;
    std::uint64_t visited = 0;

    void charge() {
        if (++visited > kSphereSearchBudget) throw UnsupportedSize("sphere enumeration exceeds 2^25 candidates");
    }

    std::vector<SphereWitness> spheres(int d, std::size_t max_vertices) {
        std::vector<SphereWitness> out;
        if (d == 0) {
            for (std::size_t a = 0; a < k.vertex_count(); ++a)
                for (std::size_t b = a + 1; b < k.vertex_count(); ++b) {
                    charge();
                    if (max_vertices >= 2)
                        out.push_back(boundary_sphere(Simplex{static_cast<VertexIndex>(a), static_cast<VertexIndex>(b)}));
                }
        } else if (d == 1) {
            cycles(max_vertices, out);
        } else {
            surfaces(max_vertices, out);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void cycles(std::size_t max_len, std::vector<SphereWitness>& out) {
        const std::size_t nv = k.vertex_count();
        std::vector<std::vector<VertexIndex>> adj(nv);
        for (const auto& e : k.simplices(1)) {
            adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
            adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
        }
        std::vector<VertexIndex> path;
        std::vector<bool> on_path(nv, false);
        auto dfs = [&](auto&& self, VertexIndex start, VertexIndex v) -> void {
            charge();
            for (auto w : adj[static_cast<std::size_t>(v)]) {
                if (w == start && path.size() >= 3 && path[1] < path.back()) {
                    std::vector<Simplex> edges;
                    for (std::size_t i = 0; i < path.size(); ++i)
                        edges.push_back(Simplex{path[i], path[(i + 1) % path.size()]});
                    std::sort(edges.begin(), edges.end());
                    SphereWitness wit{1, edges, Recognized{}};
                    wit.shape = classify_shape(wit.facets, 1);
                    out.push_back(std::move(wit));
                }
                if (w <= start || on_path[static_cast<std::size_t>(w)] || path.size() >= max_len) continue;
                on_path[static_cast<std::size_t>(w)] = true;
                path.push_back(w);
                self(self, start, w);
                path.pop_back();
                on_path[static_cast<std::size_t>(w)] = false;
            }
        };
        for (std::size_t s = 0; s < nv; ++s) {
            path = {static_cast<VertexIndex>(s)};
            on_path[s] = true;
            dfs(dfs, static_cast<VertexIndex>(s), static_cast<VertexIndex>(s));
            on_path[s] = false;
        }
    }

    // Closed surfaces on each vertex subset W: a 2-sphere on |W| vertices has
    // exactly 2|W| - 4 triangles, every edge in exactly two of them.
    void surfaces(std::size_t max_vertices, std::vector<SphereWitness>& out) {
        const std::size_t nv = k.vertex_count();
        if (nv > 24) throw UnsupportedSize("2-sphere enumeration supports at most 24 vertices");
        const auto& triangles = k.simplices(2);
        std::vector<std::uint32_t> tri_mask;
        for (const auto& t : triangles)
            tri_mask.push_back((1U << t[0]) | (1U << t[1]) | (1U << t[2]));

        for (std::uint32_t w = 0; w < (1U << nv); ++w) {
            const auto size = static_cast<std::size_t>(std::popcount(w));
            if (size < 4 || size > max_vertices) continue;
            std::vector<std::size_t> inside;
            std::vector<int> per_vertex(nv, 0);
            for (std::size_t i = 0; i < triangles.size(); ++i)
                if ((tri_mask[i] & ~w) == 0) {
                    inside.push_back(i);
                    for (auto v : triangles[i]) ++per_vertex[static_cast<std::size_t>(v)];
                }
            const std::size_t need = 2 * size - 4;
            bool viable = inside.size() >= need;
            for (std::size_t v = 0; v < nv && viable; ++v)
                if (((w >> v) & 1U) && per_vertex[v] < 3) viable = false;
            if (!viable) continue;

            std::map<Simplex, int> edge_use;
            std::vector<Simplex> chosen;
            auto pick = [&](auto&& self, std::size_t from) -> void {
                charge();
                if (chosen.size() == need) {
                    for (auto& [e, c] : edge_use)
                        if (c != 0 && c != 2) return;
                    std::uint32_t covered = 0;
                    for (const auto& t : chosen) covered |= (1U << t[0]) | (1U << t[1]) | (1U << t[2]);
                    if (covered != w || !is_sphere(chosen, 2)) return;
                    SphereWitness wit{2, chosen, Recognized{}};
                    std::sort(wit.facets.begin(), wit.facets.end());
                    wit.shape = classify_shape(wit.facets, 2);
                    out.push_back(std::move(wit));
                    return;
                }
                for (std::size_t i = from; i + (need - chosen.size()) <= inside.size(); ++i) {
                    const auto& t = triangles[inside[i]];
                    bool ok = true;
                    for (std::size_t j = 0; j < 3; ++j)
                        if (edge_use[t.without(j)] >= 2) ok = false;
                    if (!ok) continue;
                    for (std::size_t j = 0; j < 3; ++j) ++edge_use[t.without(j)];
                    chosen.push_back(t);
                    self(self, i + 1);
                    chosen.pop_back();
                    for (std::size_t j = 0; j < 3; ++j) --edge_use[t.without(j)];
                }
            };
            pick(pick, 0);
        }
    }
};

}  // namespace detail

/// Exhaustive Lambda^{p,q}(K) for p, q <= 2: every unordered pair of
/// vertex-disjoint subcomplexes homeomorphic to S^p and S^q.
inline std::vector<LinkPair> enumerate_sphere_pairs(const SimplicialComplex& k, int p, int q) {
    if (p < 0 || q < 0 || p > 2 || q > 2) throw UnsupportedDimension("enumerate_sphere_pairs: need p, q <= 2");
    if (k.vertex_count() > 64) throw UnsupportedSize("enumerate_sphere_pairs: more than 64 vertices");
    detail::SphereSearch search{k};
    const std::size_t nv = k.vertex_count();
    // S^d needs at least d + 2 vertices; the partner sphere takes the rest.
    auto room = [&](int other) {
        return nv >= static_cast<std::size_t>(other) + 2 ? nv - static_cast<std::size_t>(other) - 2 : 0;
    };
    auto first = search.spheres(p, room(q));
    auto second = p == q ? first : search.spheres(q, room(p));
    std::vector<LinkPair> out;
    for (const auto& a : first)
        for (const auto& b : second) {
            if (p == q && !(a < b)) continue;
            if ((a.vertex_mask() & b.vertex_mask()) == 0) out.push_back({a, b});
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// "{a0 a1, a0 a2, a1 a2}": the top simplices of a sphere.
inline std::string format_sphere(const SimplicialComplex& k, const SphereWitness& w) {
    std::string out = "{";
    for (std::size_t i = 0; i < w.facets.size(); ++i) {
        if (i) out += ", ";
        out += k.format(w.facets[i]);
    }
    return out + "}";
}

/// One line per pair: "pair <idx>: gamma={...} gamma'={...} shape=<tag>/<tag>".
inline std::string format_pair_list(const SimplicialComplex& k, const std::vector<LinkPair>& pairs) {
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        out += "pair " + std::to_string(i) + ": gamma=" + format_sphere(k, pairs[i].gamma) +
               " gamma'=" + format_sphere(k, pairs[i].gamma_prime) + " shape=" + shape_tag(pairs[i].gamma.shape) +
               "/" + shape_tag(pairs[i].gamma_prime.shape) + "\n";
    }
    return out;
}

}  // namespace ilink
