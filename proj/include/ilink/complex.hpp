#pragma once

// Finite abstract simplicial complexes and the named constructions used
// throughout the library: skeleta of a simplex, joins of point sets, and the
// three minimal complexes N1, N2, N3 obtained by deleting top simplices.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ilink/errors.hpp"

namespace ilink {

using VertexIndex = int;

/// A simplex as a strictly increasing list of vertex indices.
class Simplex {
public:
    Simplex() = default;

    explicit Simplex(std::vector<VertexIndex> vertices) : v_(std::move(vertices)) {
        std::sort(v_.begin(), v_.end());
        if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
            throw InvalidArgument("simplex has a repeated vertex");
        if (!v_.empty() && v_.front() < 0)
            throw InvalidArgument("negative vertex index");
    }

    Simplex(std::initializer_list<VertexIndex> vertices)
        : Simplex(std::vector<VertexIndex>(vertices)) {}

    int dim() const noexcept { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const noexcept { return v_.size(); }
    bool empty() const noexcept { return v_.empty(); }

    const std::vector<VertexIndex>& vertices() const noexcept { return v_; }
    VertexIndex operator[](std::size_t i) const { return v_[i]; }
    auto begin() const noexcept { return v_.begin(); }
    auto end() const noexcept { return v_.end(); }

    bool contains(VertexIndex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

    bool is_face_of(const Simplex& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    bool disjoint_from(const Simplex& other) const {
        auto a = v_.begin();
        auto b = other.v_.begin();
        while (a != v_.end() && b != other.v_.end()) {
            if (*a == *b) return false;
            if (*a < *b)
                ++a;
            else
                ++b;
        }
        return true;
    }

    /// The codimension-one face opposite the i-th vertex.
    Simplex without(std::size_t i) const {
        Simplex out;
        out.v_.reserve(v_.size() - 1);
        for (std::size_t j = 0; j < v_.size(); ++j)
            if (j != i) out.v_.push_back(v_[j]);
        return out;
    }

    Simplex with(VertexIndex v) const {
        std::vector<VertexIndex> w = v_;
        w.push_back(v);
        return Simplex(std::move(w));
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.v_ <=> b.v_; }

private:
    std::vector<VertexIndex> v_;
};

/// All nonempty faces of `s` with exactly `size` vertices, in lexicographic order.
inline std::vector<Simplex> faces_of_size(const Simplex& s, std::size_t size) {
    std::vector<Simplex> out;
    if (size == 0 || size > s.size()) return out;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    const std::size_t n = s.size();
    for (;;) {
        std::vector<VertexIndex> v;
        v.reserve(size);
        for (auto i : pick) v.push_back(s[i]);
        out.emplace_back(std::move(v));
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

/// Canonical vertex labels: "a3" for simplex vertices, "a1^2" for point 1 of join factor 2.
inline std::string simplex_vertex_label(int i) { return "a" + std::to_string(i); }
inline std::string join_vertex_label(int point, int factor) {
    return "a" + std::to_string(point) + "^" + std::to_string(factor);
}

/// A downward-closed family of simplices over a labelled vertex table.
///
/// All simplices are stored explicitly, grouped by dimension and sorted.
/// Every vertex of the table is a 0-simplex. Values are immutable once built.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Build the closure of `generators` over the given vertex table.
    static SimplicialComplex from_generators(std::string name, std::vector<std::string> labels,
                                             const std::vector<Simplex>& generators) {
        SimplicialComplex k;
        k.name_ = std::move(name);
        k.labels_ = std::move(labels);
        for (std::size_t i = 0; i < k.labels_.size(); ++i) {
            if (k.labels_[i].empty()) throw InvalidArgument("empty vertex label");
            if (!k.index_.emplace(k.labels_[i], static_cast<VertexIndex>(i)).second)
                throw InvalidArgument("duplicate vertex label '" + k.labels_[i] + "'");
        }
        std::vector<std::set<Simplex>> levels(1);
        for (std::size_t i = 0; i < k.labels_.size(); ++i)
            levels[0].insert(Simplex{static_cast<VertexIndex>(i)});
        for (const auto& g : generators) {
            if (g.empty()) continue;
            if (g.vertices().back() >= static_cast<VertexIndex>(k.labels_.size()))
                throw InvalidArgument("simplex refers to a vertex outside the table");
            if (levels.size() < g.size()) levels.resize(g.size());
            for (std::size_t sz = 2; sz <= g.size(); ++sz)
                for (auto& f : faces_of_size(g, sz)) levels[sz - 1].insert(std::move(f));
        }
        while (levels.size() > 1 && levels.back().empty()) levels.pop_back();
        for (auto& lvl : levels) k.by_dim_.emplace_back(lvl.begin(), lvl.end());
        if (k.labels_.empty()) k.by_dim_.clear();
        return k;
    }

    const std::string& name() const noexcept { return name_; }
    SimplicialComplex renamed(std::string name) const {
        SimplicialComplex k = *this;
        k.name_ = std::move(name);
        return k;
    }

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(VertexIndex v) const { return labels_.at(static_cast<std::size_t>(v)); }

    std::optional<VertexIndex> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    VertexIndex index_of(std::string_view label) const {
        if (auto v = find(label)) return *v;
        throw NotFound("no vertex labelled '" + std::string(label) + "'");
    }

    /// Simplex from vertex labels, e.g. simplex({"a0", "a1"}).
    Simplex simplex(std::initializer_list<std::string_view> labels) const {
        std::vector<VertexIndex> v;
        for (auto l : labels) v.push_back(index_of(l));
        return Simplex(std::move(v));
    }

    /// Top dimension, or -1 for the empty complex.
    int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

    /// The k-simplices of the complex, sorted.
    const std::vector<Simplex>& simplices(int k) const {
        static const std::vector<Simplex> none;
        if (k < 0 || k > dim()) return none;
        return by_dim_[static_cast<std::size_t>(k)];
    }

    bool contains(const Simplex& s) const {
        const auto& lvl = simplices(s.dim());
        return std::binary_search(lvl.begin(), lvl.end(), s);
    }

    bool is_maximal(const Simplex& s) const {
        if (!contains(s)) return false;
        for (const auto& t : simplices(s.dim() + 1))
            if (s.is_face_of(t)) return false;
        return true;
    }

    /// Maximal simplices ordered by dimension, then lexicographically.
    std::vector<Simplex> maximal_simplices() const {
        std::vector<Simplex> out;
        for (int k = 0; k <= dim(); ++k)
            for (const auto& s : simplices(k))
                if (is_maximal(s)) out.push_back(s);
        return out;
    }

    std::size_t simplex_count() const {
        std::size_t total = 0;
        for (const auto& lvl : by_dim_) total += lvl.size();
        return total;
    }

    /// Space-separated labels, e.g. "a0 a1 a2".
    std::string format(const Simplex& s) const {
        std::string out;
        for (auto v : s) {
            if (!out.empty()) out += ' ';
            out += label(v);
        }
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.labels_ == b.labels_ && a.by_dim_ == b.by_dim_;
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::map<std::string, VertexIndex, std::less<>> index_;
    std::vector<std::vector<Simplex>> by_dim_;
};

/// (|Δ^0|, ..., |Δ^dim|).
inline std::vector<std::size_t> f_vector(const SimplicialComplex& k) {
    std::vector<std::size_t> out;
    for (int d = 0; d <= k.dim(); ++d) out.push_back(k.simplices(d).size());
    return out;
}

/// Check that every face of every member is a member.
inline bool is_downward_closed(const SimplicialComplex& k) {
    for (int d = 1; d <= k.dim(); ++d)
        for (const auto& s : k.simplices(d))
            for (std::size_t i = 0; i < s.size(); ++i)
                if (!k.contains(s.without(i))) return false;
    for (std::size_t v = 0; v < k.vertex_count(); ++v)
        if (!k.contains(Simplex{static_cast<VertexIndex>(v)})) return false;
    return true;
}

/// The k-skeleton of the m-simplex |a0 a1 ... am|.
inline SimplicialComplex skeleton_complex(int m, int k) {
    if (m < 0) throw InvalidArgument("skeleton_complex: m must be nonnegative");
    if (k < 0 || k > m) throw InvalidArgument("skeleton_complex: need 0 <= k <= m");
    std::vector<std::string> labels;
    std::vector<VertexIndex> all;
    for (int i = 0; i <= m; ++i) {
        labels.push_back(simplex_vertex_label(i));
        all.push_back(i);
    }
    auto tops = faces_of_size(Simplex(all), static_cast<std::size_t>(k) + 1);
    return SimplicialComplex::from_generators("sigma" + std::to_string(m) + "^" + std::to_string(k),
                                              std::move(labels), tops);
}

/// The m-fold join of k points, [k]^{*m}. Vertex a_j^i has index i*k + j.
inline SimplicialComplex multi_join(int k, int m) {
    if (k < 1 || m < 1) throw InvalidArgument("multi_join: need k >= 1 and m >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) labels.push_back(join_vertex_label(j, i));
    std::vector<Simplex> tops;
    std::vector<int> choice(static_cast<std::size_t>(m), 0);
    for (;;) {
        std::vector<VertexIndex> v;
        for (int i = 0; i < m; ++i) v.push_back(i * k + choice[static_cast<std::size_t>(i)]);
        tops.emplace_back(std::move(v));
        int i = m - 1;
        while (i >= 0 && choice[static_cast<std::size_t>(i)] == k - 1) choice[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++choice[static_cast<std::size_t>(i)];
    }
    return SimplicialComplex::from_generators("[" + std::to_string(k) + "]*" + std::to_string(m),
                                              std::move(labels), tops);
}

/// K with exactly the simplices in `doomed` removed. Each must be maximal in K.
inline SimplicialComplex remove_top_simplices(const SimplicialComplex& k,
                                              const std::vector<Simplex>& doomed) {
    std::set<Simplex> gone;
    for (const auto& s : doomed) {
        if (!k.contains(s)) throw NotFound("remove_top_simplices: {" + (s.empty() ? std::string() : k.format(s)) + "} is not in the complex");
        if (!k.is_maximal(s))
            throw InvalidDeletion("remove_top_simplices: {" + k.format(s) + "} is a proper face of another simplex");
        gone.insert(s);
    }
    std::vector<Simplex> keep;
    std::vector<bool> vertex_kept(k.vertex_count(), true);
    for (const auto& s : k.maximal_simplices()) {
        if (gone.count(s) == 0) {
            keep.push_back(s);
        } else {
            // the faces of a removed simplex stay; re-add them as generators
            for (std::size_t i = 0; i < s.size() && s.size() > 1; ++i) keep.push_back(s.without(i));
            if (s.size() == 1) vertex_kept[static_cast<std::size_t>(s[0])] = false;
        }
    }
    // A removed vertex leaves the vertex table; reindex densely.
    std::vector<VertexIndex> remap(k.vertex_count(), -1);
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < k.vertex_count(); ++v) {
        if (!vertex_kept[v]) continue;
        remap[v] = static_cast<VertexIndex>(labels.size());
        labels.push_back(k.labels()[v]);
    }
    std::vector<Simplex> generators;
    for (const auto& s : keep) {
        std::vector<VertexIndex> w;
        for (auto v : s) w.push_back(remap[static_cast<std::size_t>(v)]);
        generators.emplace_back(std::move(w));
    }
    return SimplicialComplex::from_generators(k.name(), std::move(labels), generators);
}

enum class StandardName { N1, N2, N3, Sigma, Join3 };

inline std::string to_string(StandardName name) {
    switch (name) {
        case StandardName::N1: return "N1";
        case StandardName::N2: return "N2";
        case StandardName::N3: return "N3";
        case StandardName::Sigma: return "SIGMA";
        case StandardName::Join3: return "JOIN3";
    }
    return "?";
}

inline std::optional<StandardName> parse_standard_name(std::string_view s) {
    if (s == "N1") return StandardName::N1;
    if (s == "N2") return StandardName::N2;
    if (s == "N3") return StandardName::N3;
    if (s == "SIGMA") return StandardName::Sigma;
    if (s == "JOIN3") return StandardName::Join3;
    return std::nullopt;
}

/// The complex a standard name is carved out of: SIGMA for N1/N3, JOIN3 for N2.
inline StandardName parent_of(StandardName name) {
    switch (name) {
        case StandardName::N2:
        case StandardName::Join3: return StandardName::Join3;
        default: return StandardName::Sigma;
    }
}

inline SimplicialComplex standard_complex(StandardName name, int n) {
    if (n < 1) throw InvalidArgument("standard_complex: n must be positive");
    const std::string suffix = "^(" + std::to_string(n) + ")";
    switch (name) {
        case StandardName::Sigma:
            return skeleton_complex(2 * n + 2, n).renamed("SIGMA" + suffix);
        case StandardName::Join3:
            return multi_join(3, n + 1).renamed("JOIN3" + suffix);
        case StandardName::N1: {
            auto sigma = skeleton_complex(2 * n + 2, n);
            std::vector<Simplex> doomed;
            for (const auto& s : sigma.simplices(n))
                if (s.contains(0)) doomed.push_back(s);
            return remove_top_simplices(sigma, doomed).renamed("N1" + suffix);
        }
        case StandardName::N2: {
            auto join = multi_join(3, n + 1);
            std::vector<Simplex> doomed;
            for (const auto& s : join.simplices(n))
                if (s.contains(0)) doomed.push_back(s);  // a_0^0 has index 0
            return remove_top_simplices(join, doomed).renamed("N2" + suffix);
        }
        case StandardName::N3: {
            auto sigma = skeleton_complex(2 * n + 2, n);
            std::vector<Simplex> doomed;
            for (const auto& s : sigma.simplices(n))
                if (s.vertices().back() <= n + 1) doomed.push_back(s);
            return remove_top_simplices(sigma, doomed).renamed("N3" + suffix);
        }
    }
    throw InvalidArgument("standard_complex: unknown name");
}

inline SimplicialComplex standard_complex(std::string_view name, int n) {
    auto parsed = parse_standard_name(name);
    if (!parsed) throw InvalidArgument("standard_complex: unknown name '" + std::string(name) + "'");
    return standard_complex(*parsed, n);
}

/// The complex of proper faces of `s`, with labels taken from `parent`.
inline SimplicialComplex boundary_complex(const SimplicialComplex& parent, const Simplex& s) {
    if (s.dim() < 1) throw InvalidArgument("boundary_complex: simplex must have dimension >= 1");
    std::vector<std::string> labels;
    for (auto v : s) labels.push_back(parent.label(v));
    std::vector<VertexIndex> local(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) local[i] = static_cast<VertexIndex>(i);
    Simplex whole(local);
    std::vector<Simplex> gens;
    for (std::size_t i = 0; i < whole.size(); ++i) gens.push_back(whole.without(i));
    return SimplicialComplex::from_generators("boundary(" + parent.format(s) + ")", std::move(labels), gens);
}

/// Boundary of the simplex on vertices a0..a_dim.
inline SimplicialComplex boundary_complex(const Simplex& s) {
    std::vector<std::string> labels;
    const int top = s.empty() ? -1 : s.vertices().back();
    for (int i = 0; i <= top; ++i) labels.push_back(simplex_vertex_label(i));
    auto host = SimplicialComplex::from_generators("", labels, {});
    return boundary_complex(host, s);
}

/// Subcomplex generated by `generators`, restricted to the vertices they use.
inline SimplicialComplex induced_by(const SimplicialComplex& parent, const std::vector<Simplex>& generators,
                                    std::string name = {}) {
    std::set<VertexIndex> used;
    for (const auto& g : generators) used.insert(g.begin(), g.end());
    std::map<VertexIndex, VertexIndex> remap;
    std::vector<std::string> labels;
    for (auto v : used) {
        remap[v] = static_cast<VertexIndex>(labels.size());
        labels.push_back(parent.label(v));
    }
    std::vector<Simplex> gens;
    for (const auto& g : generators) {
        std::vector<VertexIndex> w;
        for (auto v : g) w.push_back(remap[v]);
        gens.emplace_back(std::move(w));
    }
    return SimplicialComplex::from_generators(std::move(name), std::move(labels), gens);
}

}  // namespace ilink
