#pragma once

// Instance checks of the parity statements behind intrinsic linking in R^{2n}:
//
//  * vkf_parity       - disjoint top pairs of SIGMA / JOIN3 cross an odd number of times
//  * theorem1_audit   - lk2 summed over the canonical pair family of N1/N2/N3 is odd
//  * eq1_crosscheck   - that sum equals the crossing parity of the parent complex
//  * linkless_verify  - an embedding of a subcomplex with every lk2 equal to zero
//  * linkless_search  - randomized search for such an embedding

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ilink/complex.hpp"
#include "ilink/config.hpp"
#include "ilink/geometry.hpp"
#include "ilink/spheres.hpp"

namespace ilink {

enum class Status { Pass, Fail, Degenerate };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Degenerate: return "DEGENERATE";
    }
    return "?";
}

struct LedgerEntry {
    std::string gamma;
    std::string gamma_prime;
    int bit = 0;
};

/// Informational lk2 total over the exhaustively enumerated Lambda^{n-1,n}.
struct FullLambdaSummary {
    std::size_t pairs = 0;
    int total_mod2 = 0;
};

struct ParityReport {
    std::string subject;
    int n = 0;
    int d = 0;
    std::string config_hash;
    std::vector<LedgerEntry> pairs;
    int total_mod2 = 0;
    std::vector<LedgerEntry> witnesses;
    Status status = Status::Fail;
    std::string note;
    std::optional<FullLambdaSummary> full_lambda;

    /// Fill total and witnesses from the ledger and set PASS/FAIL on odd/even.
    void close() {
        total_mod2 = 0;
        witnesses.clear();
        for (const auto& e : pairs) {
            total_mod2 ^= e.bit;
            if (e.bit) witnesses.push_back(e);
        }
        status = total_mod2 == 1 ? Status::Pass : Status::Fail;
    }
};

namespace detail {

inline void require_general_position(const Realization& r, const SimplicialComplex& k) {
    auto gp = in_general_position(r);
    if (!gp) {
        std::string which;
        for (auto i : gp.violating) which += (which.empty() ? "" : " ") + k.label(static_cast<VertexIndex>(i));
        throw PreconditionError("configuration not in general position: {" + which + "}");
    }
}

inline std::string braces(const SimplicialComplex& k, const Simplex& s) { return "{" + k.format(s) + "}"; }

}  // namespace detail

/// Crossing ledger over all vertex-disjoint top pairs of SIGMA or JOIN3.
inline ParityReport vkf_parity(StandardName name, int n, const PointConfig& cfg) {
    if (name != StandardName::Sigma && name != StandardName::Join3)
        throw InvalidArgument("vkf_parity: name must be SIGMA or JOIN3");
    const auto k = standard_complex(name, n);
    const auto r = realize(k, cfg);
    detail::require_half_dimension(k, r, "vkf_parity");
    detail::require_general_position(r, k);

    ParityReport rep;
    rep.subject = k.name();
    rep.n = n;
    rep.d = r.d;
    rep.config_hash = config_fingerprint(cfg);
    try {
        for (auto& p : top_pair_ledger(k, r))
            rep.pairs.push_back({detail::braces(k, p.s), detail::braces(k, p.t), p.hit.interior() ? 1 : 0});
    } catch (const DegeneracyError& e) {
        rep.pairs.clear();
        rep.status = Status::Degenerate;
        rep.note = e.what();
        return rep;
    }
    rep.close();
    return rep;
}

struct AuditOptions {
    std::uint64_t seed = 0;   // apex sub-seeds derive from this and the pair index
    int apexes = 1;           // independent apexes per pair; all must agree
    bool full_lambda = true;  // also sum over the enumerated Lambda (n <= 2)
};

namespace detail {

// lk2 of a pair with `apexes` independent sampled apexes; they must agree.
inline int agreed_lk2(const LinkPair& pair, const Realization& r, std::uint64_t seed, int apexes) {
    int first = -1;
    for (int j = 0; j < std::max(1, apexes); ++j) {
        ApexOptions ao;
        ao.seed = derive_seed(seed, static_cast<std::uint64_t>(j));
        int bit = lk2(pair, r, ao);
        if (first < 0)
            first = bit;
        else if (bit != first)
            throw Error("lk2 depends on the cone apex; the pair images are not disjoint");
    }
    return first;
}

inline void require_embedding(const SimplicialComplex& k, const Realization& r) {
    detail::require_general_position(r, k);
    if (!is_linear_embedding(k, r)) throw PreconditionError(k.name() + ": configuration is not an embedding");
}

}  // namespace detail

/// lk2 ledger over canonical_pairs(name, n) for an embedding of N1/N2/N3.
/// PASS iff the total is odd, in which case the witnesses are the linked pairs.
inline ParityReport theorem1_audit(StandardName name, int n, const PointConfig& cfg, const AuditOptions& opts = {}) {
    if (name == StandardName::Sigma || name == StandardName::Join3)
        throw InvalidArgument("theorem1_audit: name must be N1, N2 or N3");
    const auto k = standard_complex(name, n);
    const auto r = realize(k, cfg);
    detail::require_half_dimension(k, r, "theorem1_audit");
    detail::require_embedding(k, r);

    ParityReport rep;
    rep.subject = k.name();
    rep.n = n;
    rep.d = r.d;
    rep.config_hash = config_fingerprint(cfg);
    const auto pairs = canonical_pairs(name, n);
    try {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            int bit = detail::agreed_lk2(pairs[i], r, derive_seed(opts.seed, i), opts.apexes);
            rep.pairs.push_back({format_sphere(k, pairs[i].gamma), format_sphere(k, pairs[i].gamma_prime), bit});
        }
        if (opts.full_lambda && n <= 2) {
            FullLambdaSummary full;
            const auto all = enumerate_sphere_pairs(k, n - 1, n);
            full.pairs = all.size();
            for (std::size_t i = 0; i < all.size(); ++i)
                full.total_mod2 ^= detail::agreed_lk2(all[i], r, derive_seed(opts.seed ^ 0x5a5a5a5aULL, i), 1);
            rep.full_lambda = full;
        }
    } catch (const DegeneracyError& e) {
        rep.pairs.clear();
        rep.status = Status::Degenerate;
        rep.note = e.what();
        return rep;
    }
    rep.close();
    return rep;
}

struct CrosscheckPair {
    std::string gamma;
    std::string gamma_prime;
    int straight = 0;          // lk2 with the cone apex at the distinguished vertex
    std::vector<int> sampled;  // lk2 with independent random apexes
};

struct CrosscheckResult {
    bool ok = false;
    std::vector<CrosscheckPair> pairs;
    int lambda_total = 0;        // sum of straight-extension lk2 over the family
    int parent_parity = 0;       // crossing parity of the parent complex
    std::size_t parent_crossings = 0;
    std::string parent;

    explicit operator bool() const noexcept { return ok; }
};

/// The coning vertex that turns cone(gamma) into the straight simplex s with
/// gamma = boundary(s): a0 for N1, a_0^0 for N2, the first vertex of s for N3.
inline VertexIndex distinguished_vertex(StandardName name, const Simplex& s) {
    if (name == StandardName::N3) return s[0];
    return 0;
}

inline CrosscheckResult eq1_crosscheck_detail(StandardName name, int n, const PointConfig& cfg,
                                              const AuditOptions& opts = {}) {
    if (name == StandardName::Sigma || name == StandardName::Join3)
        throw InvalidArgument("eq1_crosscheck: name must be N1, N2 or N3");
    const auto k = standard_complex(name, n);
    const auto r = realize(k, cfg);
    detail::require_half_dimension(k, r, "eq1_crosscheck");
    detail::require_embedding(k, r);

    CrosscheckResult res;
    res.ok = true;
    const auto pairs = canonical_pairs(name, n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& pair = pairs[i];
        const auto& s = std::get<BoundaryOfSimplex>(pair.gamma.shape).simplex;
        ApexOptions straight;
        straight.vertex = distinguished_vertex(name, s);
        CrosscheckPair row{format_sphere(k, pair.gamma), format_sphere(k, pair.gamma_prime), lk2(pair, r, straight), {}};
        for (int j = 0; j < std::max(1, opts.apexes); ++j) {
            ApexOptions ao;
            ao.seed = derive_seed(derive_seed(opts.seed, i), static_cast<std::uint64_t>(j));
            row.sampled.push_back(lk2(pair, r, ao));
            if (row.sampled.back() != row.straight) res.ok = false;
        }
        res.lambda_total ^= row.straight;
        res.pairs.push_back(std::move(row));
    }
    const auto parent = standard_complex(parent_of(name), n);
    const auto crossings = double_point_set(parent, realize(parent, cfg));
    res.parent = parent.name();
    res.parent_crossings = crossings.size();
    res.parent_parity = static_cast<int>(crossings.size() % 2);
    if (res.parent_parity != res.lambda_total) res.ok = false;
    return res;
}

inline bool eq1_crosscheck(StandardName name, int n, const PointConfig& cfg, const AuditOptions& opts = {}) {
    return eq1_crosscheck_detail(name, n, cfg, opts).ok;
}

struct LinklessResult {
    bool ok = false;
    bool embedding = false;
    std::size_t pairs_checked = 0;
    std::vector<std::size_t> linked;  // indices of pairs with lk2 = 1

    explicit operator bool() const noexcept { return ok; }
};

/// Prepared check for one subcomplex: the sphere pairs are enumerated once.
class LinklessChecker {
public:
    /// For n <= 2 the pairs are Lambda^{n-1,n}(N) by exhaustive enumeration.
    /// For larger n, `family` must name the complex N was carved from and its
    /// canonical pairs that survive in N are used instead.
    LinklessChecker(SimplicialComplex complex, int n, std::optional<StandardName> family = std::nullopt)
        : k_(std::move(complex)), n_(n) {
        if (n < 1) throw InvalidArgument("linkless: n must be positive");
        if (n <= 2) {
            pairs_ = enumerate_sphere_pairs(k_, n - 1, n);
            return;
        }
        if (!family) throw UnsupportedSize("linkless: n >= 3 needs the canonical family of the parent complex");
        const auto host = standard_complex(*family, n);
        auto translate = [&](const SphereWitness& w) -> std::optional<SphereWitness> {
            SphereWitness out{w.dim, {}, Recognized{}};
            for (const auto& f : w.facets) {
                std::vector<VertexIndex> v;
                for (auto x : f) {
                    auto idx = k_.find(host.label(x));
                    if (!idx) return std::nullopt;
                    v.push_back(*idx);
                }
                Simplex t(std::move(v));
                if (!k_.contains(t)) return std::nullopt;
                out.facets.push_back(std::move(t));
            }
            std::sort(out.facets.begin(), out.facets.end());
            out.shape = classify_shape(out.facets, out.dim);
            return out;
        };
        for (const auto& p : canonical_pairs(*family, n)) {
            auto g = translate(p.gamma);
            auto h = translate(p.gamma_prime);
            if (g && h) pairs_.push_back({*g, *h});
        }
        std::sort(pairs_.begin(), pairs_.end());
    }

    const SimplicialComplex& complex() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    const std::vector<LinkPair>& pairs() const noexcept { return pairs_; }

    LinklessResult check(const PointConfig& cfg, std::uint64_t apex_seed = 0) const {
        LinklessResult res;
        const auto r = realize(k_, cfg);
        detail::require_half_dimension(k_, r, "linkless_verify");
        detail::require_general_position(r, k_);
        res.embedding = is_linear_embedding(k_, r);
        if (!res.embedding) return res;
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            ApexOptions ao;
            ao.seed = derive_seed(apex_seed, i);
            if (lk2(pairs_[i], r, ao)) res.linked.push_back(i);
        }
        res.pairs_checked = pairs_.size();
        res.ok = res.linked.empty();
        return res;
    }

private:
    SimplicialComplex k_;
    int n_;
    std::vector<LinkPair> pairs_;
};

/// Whether cfg embeds N with every pair in Lambda^{n-1,n}(N) unlinked.
inline LinklessResult linkless_verify(const SimplicialComplex& complex, int n, const PointConfig& cfg,
                                      std::optional<StandardName> family = std::nullopt) {
    return LinklessChecker(complex, n, family).check(cfg);
}

struct SearchStats {
    std::uint64_t attempts = 0;
    std::uint64_t sampling_failures = 0;
    std::uint64_t embedding_failures = 0;
    std::uint64_t linking_failures = 0;
    std::uint64_t degenerate = 0;
};

struct SearchResult {
    std::optional<PointConfig> config;
    SearchStats stats;
};

/// Sample configurations until one passes linkless_verify. Restart i uses the
/// sub-seed derived from (seed, i), so a found config is reproducible alone.
inline SearchResult linkless_search(const LinklessChecker& checker, std::uint64_t seed, std::uint64_t restarts,
                                    std::int64_t bound) {
    const int n = checker.n();
    if (restarts < 1) throw InvalidArgument("linkless_search: restarts must be >= 1");
    SearchResult out;
    for (std::uint64_t i = 0; i < restarts; ++i) {
        ++out.stats.attempts;
        const auto sub = derive_seed(seed, i);
        PointConfig cfg;
        try {
            cfg = sample_config(sub, 2 * n, checker.complex(), bound);
        } catch (const SamplingError&) {
            ++out.stats.sampling_failures;
            continue;
        }
        try {
            auto res = checker.check(cfg, sub);
            if (!res.embedding) {
                ++out.stats.embedding_failures;
            } else if (!res.ok) {
                ++out.stats.linking_failures;
            } else {
                out.config = std::move(cfg);
                return out;
            }
        } catch (const DegeneracyError&) {
            ++out.stats.degenerate;
        }
    }
    return out;
}

inline SearchResult linkless_search(const SimplicialComplex& complex, int n, std::uint64_t seed,
                                    std::uint64_t restarts, std::int64_t bound,
                                    std::optional<StandardName> family = std::nullopt) {
    return linkless_search(LinklessChecker(complex, n, family), seed, restarts, bound);
}

struct MinimalityTarget {
    std::string description;
    SimplicialComplex complex;
};

/// The proper subcomplexes that suffice for minimality: deleting a maximal
/// simplex that the unique linked pair of the one-crossing immersion needs.
inline std::vector<MinimalityTarget> minimality_targets(StandardName name, int n) {
    const auto k = standard_complex(name, n);
    auto sigma_simplex = [&](int from, int to) {
        std::vector<VertexIndex> v;
        for (int i = from; i <= to; ++i) v.push_back(k.index_of(simplex_vertex_label(i)));
        return Simplex(std::move(v));
    };
    auto join_simplex = [&](int point, int factors) {
        std::vector<VertexIndex> v;
        for (int i = 0; i < factors; ++i) v.push_back(k.index_of(join_vertex_label(point, i)));
        return Simplex(std::move(v));
    };
    std::vector<Simplex> cut;
    switch (name) {
        case StandardName::N1:
            cut = {sigma_simplex(0, n - 1), sigma_simplex(n + 1, 2 * n + 1)};
            break;
        case StandardName::N2:
            cut = {join_simplex(0, n), join_simplex(1, n + 1)};
            break;
        case StandardName::N3:
            cut = {sigma_simplex(n + 1, 2 * n + 1)};
            break;
        default: throw InvalidArgument("minimality_targets: name must be N1, N2 or N3");
    }
    std::vector<MinimalityTarget> out;
    for (const auto& s : cut) {
        std::string desc = k.name() + " minus {" + k.format(s) + "}";
        out.push_back({desc, remove_top_simplices(k, {s}).renamed(k.name() + "-" + std::to_string(out.size()))});
    }
    return out;
}

/// Every proper subcomplex obtained by deleting one maximal simplex.
inline std::vector<MinimalityTarget> facet_deletions(const SimplicialComplex& k) {
    std::vector<MinimalityTarget> out;
    for (const auto& s : k.maximal_simplices())
        out.push_back({k.name() + " minus {" + k.format(s) + "}", remove_top_simplices(k, {s})});
    return out;
}

}  // namespace ilink
