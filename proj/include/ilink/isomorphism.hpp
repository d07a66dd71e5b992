#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "ilink/complex.hpp"

namespace ilink {

inline constexpr std::size_t kMaxIsomorphismVertices = 12;

namespace detail {

// Number of simplices of each dimension containing v.
inline std::vector<std::size_t> vertex_signature(const SimplicialComplex& k, VertexIndex v) {
    std::vector<std::size_t> sig(static_cast<std::size_t>(k.dim() + 1), 0);
    for (int d = 0; d <= k.dim(); ++d)
        for (const auto& s : k.simplices(d))
            if (s.contains(v)) ++sig[static_cast<std::size_t>(d)];
    return sig;
}

struct IsoSearch {
    const SimplicialComplex& a;
    const SimplicialComplex& b;
    std::vector<VertexIndex> order;                     // vertices of a, in assignment order
    std::vector<std::vector<Simplex>> closing;          // simplices of a completed at each step
    std::vector<std::vector<std::size_t>> sig_a, sig_b;
    std::vector<VertexIndex> map;                       // a -> b, -1 if unassigned
    std::vector<bool> used;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const VertexIndex v = order[depth];
        for (std::size_t w = 0; w < b.vertex_count(); ++w) {
            if (used[w] || sig_a[static_cast<std::size_t>(v)] != sig_b[w]) continue;
            map[static_cast<std::size_t>(v)] = static_cast<VertexIndex>(w);
            bool ok = true;
            for (const auto& s : closing[depth]) {
                std::vector<VertexIndex> img;
                for (auto x : s) img.push_back(map[static_cast<std::size_t>(x)]);
                if (!b.contains(Simplex(std::move(img)))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[w] = true;
                if (extend(depth + 1)) return true;
                used[w] = false;
            }
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

}  // namespace detail

/// A vertex bijection a -> b carrying the simplex set of `a` onto that of `b`,
/// or nullopt when none exists. Plain backtracking pruned by per-vertex
/// face counts; both complexes must have at most 12 vertices.
inline std::optional<std::vector<VertexIndex>> isomorphic(const SimplicialComplex& a,
                                                           const SimplicialComplex& b) {
    if (a.vertex_count() > kMaxIsomorphismVertices || b.vertex_count() > kMaxIsomorphismVertices)
        throw UnsupportedSize("isomorphic: more than 12 vertices");
    if (f_vector(a) != f_vector(b)) return std::nullopt;

    detail::IsoSearch search{a, b, {}, {}, {}, {}, {}, {}};
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        search.sig_a.push_back(detail::vertex_signature(a, static_cast<VertexIndex>(v)));
    for (std::size_t v = 0; v < b.vertex_count(); ++v)
        search.sig_b.push_back(detail::vertex_signature(b, static_cast<VertexIndex>(v)));

    auto sorted_a = search.sig_a;
    auto sorted_b = search.sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;

    // Highest-degree vertices first: they constrain the most simplices.
    for (std::size_t v = 0; v < a.vertex_count(); ++v) search.order.push_back(static_cast<VertexIndex>(v));
    std::stable_sort(search.order.begin(), search.order.end(), [&](VertexIndex x, VertexIndex y) {
        return search.sig_a[static_cast<std::size_t>(x)] > search.sig_a[static_cast<std::size_t>(y)];
    });

    std::vector<std::size_t> position(a.vertex_count());
    for (std::size_t i = 0; i < search.order.size(); ++i)
        position[static_cast<std::size_t>(search.order[i])] = i;
    search.closing.resize(search.order.size());
    for (int d = 1; d <= a.dim(); ++d)
        for (const auto& s : a.simplices(d)) {
            std::size_t last = 0;
            for (auto v : s) last = std::max(last, position[static_cast<std::size_t>(v)]);
            search.closing[last].push_back(s);
        }

    search.map.assign(a.vertex_count(), -1);
    search.used.assign(b.vertex_count(), false);
    if (!search.extend(0)) return std::nullopt;
    return search.map;
}

}  // namespace ilink
