// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace ilink;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& why) {
        if (!cond && ok) detail = why;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.ok = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && secs > limit_seconds) {
        v.ok = false;
        v.detail = "over the time limit of " + std::to_string(limit_seconds) + " s";
    }
    failures += v.ok ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                v.detail.empty() ? "" : " -- ", v.detail.c_str());
    std::fflush(stdout);
}

PointConfig fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
    return read_config(in);
}

SimplicialComplex fixture_complex(const std::string& name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
    return read_complex(in);
}

const StandardName kFamilies[] = {StandardName::N1, StandardName::N2, StandardName::N3};

std::string fixture_for(StandardName name) {
    switch (name) {
        case StandardName::N1: return "n1_1.pts";
        case StandardName::N2: return "n2_1.pts";
        default: return "n3_1.pts";
    }
}

/// Fixture embedding plus at least 50 distinct seeded embeddings per complex at n = 1.
std::vector<PointConfig> audited_embeddings(StandardName name) {
    auto k = standard_complex(name, 1);
    std::vector<PointConfig> out{fixture(fixture_for(name))};
    std::set<std::string> seen{config_fingerprint(out[0])};
    for (std::uint64_t i = 0; out.size() < 51 && i < 100000; ++i) {
        auto cfg = sample_config(derive_seed(2024, i), 2, k, 1000);
        if (!is_linear_embedding(k, cfg)) continue;
        if (seen.insert(config_fingerprint(cfg)).second) out.push_back(std::move(cfg));
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, "f-vectors of skeleta and N1/N2/N3 match closed-form counts, n = 1..3", 1.0, [] {
        Verdict v;
        for (int n = 1; n <= 3; ++n) {
            for (int k = 0; k <= n; ++k)
                v.require(f_vector(skeleton_complex(2 * n + 2, k)) == oracle::skeleton_f(2 * n + 2, k),
                          "skeleton mismatch");
            for (auto name :
                 {StandardName::Sigma, StandardName::Join3, StandardName::N1, StandardName::N2, StandardName::N3})
                v.require(f_vector(standard_complex(name, n)) == oracle::expected_f(name, n),
                          to_string(name) + " mismatch at n=" + std::to_string(n));
        }
        return v;
    });

    criterion(2, "N1(1) ~ K1+K4, N2(1) ~ K1+K2,3, N3(1) ~ K1,1,3", 1.0, [] {
        using oracle::graph;
        using oracle::multipartite;
        Verdict v;
        v.require(isomorphic(standard_complex(StandardName::N1, 1), graph("K1+K4", 5, multipartite({{1}, {2}, {3}, {4}})))
                      .has_value(),
                  "N1");
        v.require(isomorphic(standard_complex(StandardName::N2, 1), graph("K1+K23", 6, multipartite({{1, 2}, {3, 4, 5}})))
                      .has_value(),
                  "N2");
        v.require(isomorphic(standard_complex(StandardName::N3, 1), graph("K113", 5, multipartite({{0}, {1}, {2, 3, 4}})))
                      .has_value(),
                  "N3");
        return v;
    });

    criterion(3, "crossing parity is odd for 200 seeded configs each of SIGMA/JOIN3 at n = 1, 2", 30.0, [] {
        Verdict v;
        for (int n = 1; n <= 2; ++n)
            for (auto name : {StandardName::Sigma, StandardName::Join3}) {
                auto k = standard_complex(name, n);
                const std::size_t want_pairs = n == 1 ? (name == StandardName::Sigma ? 15 : 18)
                                                      : (name == StandardName::Sigma ? 70 : 108);
                int odd = 0;
                for (std::uint64_t i = 0; i < 200; ++i) {
                    auto rep = vkf_parity(name, n, sample_config(derive_seed(7, i), 2 * n, k, 1000));
                    v.require(rep.pairs.size() == want_pairs, "disjoint pair count");
                    odd += rep.status == Status::Pass;
                }
                v.require(odd == 200, to_string(name) + " n=" + std::to_string(n) + ": " + std::to_string(odd) + "/200");
            }
        return v;
    });

    criterion(4, "convex pentagon drawing of K5 has exactly 5 crossings, parity 1", 1.0, [] {
        Verdict v;
        auto k = standard_complex(StandardName::Sigma, 1);
        auto cfg = oracle::pentagon();
        auto crossings = double_point_set(k, cfg);
        v.require(crossings.size() == 5, std::to_string(crossings.size()) + " crossings");
        v.require(oracle::crossings(k, realize(k, cfg)) == 5, "oracle disagrees");
        v.require(vkf_parity(StandardName::Sigma, 1, cfg).total_mod2 == 1, "parity");
        return v;
    });

    criterion(5, "enumerated sphere pairs equal the canonical family (N1, N2) and contain it (N3), n = 1, 2", 300.0, [] {
        Verdict v;
        for (int n = 1; n <= 2; ++n)
            for (auto name : kFamilies) {
                auto all = enumerate_sphere_pairs(standard_complex(name, n), n - 1, n);
                auto canon = canonical_pairs(name, n);
                if (name == StandardName::N3)
                    v.require(std::includes(all.begin(), all.end(), canon.begin(), canon.end()),
                              "N3 n=" + std::to_string(n) + " family not contained");
                else
                    v.require(all == canon, to_string(name) + " n=" + std::to_string(n) + " differs");
            }
        return v;
    });

    std::map<StandardName, std::vector<PointConfig>> embeddings;
    criterion(6, "parity audit passes on fixtures and >= 50 seeded embeddings per complex at n = 1", 60.0, [&] {
        Verdict v;
        for (auto name : kFamilies) {
            embeddings[name] = audited_embeddings(name);
            v.require(embeddings[name].size() >= 51, to_string(name) + ": too few embeddings found");
            for (const auto& cfg : embeddings[name]) {
                AuditOptions ao;
                ao.apexes = 2;
                auto rep = theorem1_audit(name, 1, cfg, ao);
                v.require(rep.status == Status::Pass && !rep.witnesses.empty(),
                          to_string(name) + " config " + rep.config_hash + " failed");
            }
        }
        return v;
    });

    criterion(7, "straight-extension parity equals parent crossing parity on every audited embedding", 60.0, [&] {
        Verdict v;
        std::size_t checked = 0;
        for (auto name : kFamilies)
            for (const auto& cfg : embeddings[name]) {
                auto res = eq1_crosscheck_detail(name, 1, cfg);
                v.require(res.ok && res.lambda_total == res.parent_parity,
                          to_string(name) + " config " + config_fingerprint(cfg));
                ++checked;
            }
        v.require(checked >= 153, "criterion 6 embeddings unavailable");
        return v;
    });

    criterion(8, "lk2 is apex-independent (10 apexes) and symmetric on 100 sphere pairs", 60.0, [] {
        Verdict v;
        struct Case {
            SphereWitness g, h;
            Realization r;
            int expected;  // -1 if unknown
        };
        std::vector<Case> cases;
        for (auto name : kFamilies) {
            auto k = standard_complex(name, 1);
            auto r = realize(k, fixture(fixture_for(name)));
            for (const auto& p : canonical_pairs(name, 1)) cases.push_back({p.gamma, p.gamma_prime, r, -1});
        }
        // split and linked placements: a point pair against a triangle in the plane
        for (std::uint64_t i = 0; cases.size() < 40; ++i) {
            auto cfg = sample_config(derive_seed(31, i), 2, std::vector<std::string>{"x", "y", "z", "p", "q"}, 50);
            const auto& pt = cfg.points();
            const bool pin = oracle::strictly_inside(pt[3], pt[0], pt[1], pt[2]);
            const bool qin = oracle::strictly_inside(pt[4], pt[0], pt[1], pt[2]);
            SphereWitness tri = boundary_sphere(Simplex{0, 1, 2});
            SphereWitness zero{0, {Simplex{3}, Simplex{4}}, Recognized{}};
            cases.push_back({zero, tri, Realization{2, pt}, pin != qin ? 1 : 0});
        }
        for (auto name : kFamilies) {
            auto k = standard_complex(name, 2);
            for (std::uint64_t i = 0; cases.size() < 100 && i < 2000; ++i) {
                auto r = realize(k, sample_config(derive_seed(57, i), 4, k, 30));
                if (!is_linear_embedding(k, r)) continue;
                for (const auto& p : canonical_pairs(name, 2)) {
                    if (cases.size() >= 100 || cases.size() >= 40 + 20 * (static_cast<std::size_t>(name) + 1)) break;
                    cases.push_back({p.gamma, p.gamma_prime, r, -1});
                }
            }
        }
        v.require(cases.size() == 100, "only " + std::to_string(cases.size()) + " pairs built");
        int linked = 0;
        for (std::size_t c = 0; c < cases.size(); ++c) {
            const auto& cs = cases[c];
            ApexOptions ao;
            ao.seed = derive_seed(99, c);
            const int base = lk2(cs.g, cs.h, cs.r, ao);
            linked += base;
            if (cs.expected >= 0) v.require(base == cs.expected, "constructed placement " + std::to_string(c));
            for (std::uint64_t a = 0; a < 10; ++a) {
                ao.seed = derive_seed(derive_seed(99, c), a + 1);
                v.require(lk2(cs.g, cs.h, cs.r, ao) == base, "apex dependence at pair " + std::to_string(c));
                v.require(lk2(cs.h, cs.g, cs.r, ao) == base, "asymmetry at pair " + std::to_string(c));
            }
        }
        v.require(linked > 0 && linked < 100, "degenerate sample: all pairs alike");
        return v;
    });

    criterion(9, "each minimality case at n = 1 has a fixture config passing linkless_verify", 10.0, [] {
        Verdict v;
        const std::pair<const char*, const char*> cases[] = {
            {"n1_1_minus_a0.cx", "n1_1.pts"},       {"n1_1_minus_a2a3.cx", "n1_1.pts"},
            {"n1_1_minus_a1a2.cx", "n1_1_alt.pts"}, {"n2_1_minus_a0^0.cx", "n2_1.pts"},
            {"n2_1_minus_a1^0a1^1.cx", "n2_1.pts"}, {"n3_1_minus_a3a4.cx", "n3_1.pts"},
            {"n3_1_minus_a2a3.cx", "n3_1.pts"}};
        for (auto [cx, pts] : cases) v.require(linkless_verify(fixture_complex(cx), 1, fixture(pts)).ok, cx);
        return v;
    });

    criterion(10, "linkless search on full N1(1) with 10^4 restarts finds nothing", 120.0, [] {
        Verdict v;
        auto res = linkless_search(standard_complex(StandardName::N1, 1), 1, 2718, 10000, 1000);
        v.require(!res.config, "a linkless embedding was reported");
        v.require(res.stats.attempts == 10000, "restart count");
        v.require(res.stats.linking_failures > 0, "no embeddings were sampled");
        std::ostringstream s;
        s << "embeddings " << res.stats.linking_failures << ", non-embeddings " << res.stats.embedding_failures;
        if (v.ok) v.detail = s.str();
        return v;
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
