#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ilink;

namespace {

std::set<oracle::PairKey> keys(const std::vector<LinkPair>& pairs) {
    std::set<oracle::PairKey> out;
    for (const auto& p : pairs) out.insert(oracle::key_of(p));
    return out;
}

}  // namespace

TEST(Recognition, LowDimensionalSpheres) {
    EXPECT_TRUE(is_sphere({Simplex{0}, Simplex{5}}, 0));
    EXPECT_FALSE(is_sphere({Simplex{0}, Simplex{1}, Simplex{2}}, 0));
    EXPECT_TRUE(is_sphere({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}}, 1));
    EXPECT_FALSE(is_sphere({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}, Simplex{3, 4}, Simplex{4, 5}, Simplex{3, 5}}, 1));
    EXPECT_FALSE(is_sphere({Simplex{0, 1}, Simplex{1, 2}}, 1));
    EXPECT_TRUE(is_sphere(boundary_sphere(Simplex{0, 1, 2, 3}).facets, 2));
    EXPECT_TRUE(is_sphere(join_sphere({{0, 1}, {2, 3}, {4, 5}}).facets, 2));
    EXPECT_THROW(is_sphere({}, 3), UnsupportedDimension);
}

TEST(Recognition, RejectsNonSphericalSurfaces) {
    // two tetrahedron boundaries sharing a vertex
    auto a = boundary_sphere(Simplex{0, 1, 2, 3}).facets;
    auto b = boundary_sphere(Simplex{3, 4, 5, 6}).facets;
    a.insert(a.end(), b.begin(), b.end());
    EXPECT_FALSE(is_sphere(a, 2));
    // seven-vertex torus
    std::vector<Simplex> torus;
    for (int i = 0; i < 7; ++i) {
        torus.push_back(Simplex{i, (i + 1) % 7, (i + 3) % 7});
        torus.push_back(Simplex{i, (i + 2) % 7, (i + 3) % 7});
    }
    EXPECT_FALSE(is_sphere(torus, 2));
    // a disk
    EXPECT_FALSE(is_sphere({Simplex{0, 1, 2}, Simplex{0, 2, 3}}, 2));
}

TEST(Recognition, ComplexLevel) {
    EXPECT_TRUE(recognize_sphere(boundary_complex(Simplex{0, 1, 2, 3}), 2));
    EXPECT_FALSE(recognize_sphere(boundary_complex(Simplex{0, 1, 2, 3}), 1));
    EXPECT_THROW(recognize_sphere(boundary_complex(Simplex{0, 1, 2, 3, 4}), 3), UnsupportedDimension);
}

TEST(Shapes, ClassifiedWhenCertifiable) {
    EXPECT_EQ(shape_tag(classify_shape(boundary_sphere(Simplex{0, 1, 2}).facets, 1)), "boundary");
    EXPECT_EQ(shape_tag(classify_shape(join_sphere({{0, 1}, {2, 3}}).facets, 1)), "join");
    std::vector<Simplex> pentagon{Simplex{0, 1}, Simplex{1, 2}, Simplex{2, 3}, Simplex{3, 4}, Simplex{0, 4}};
    EXPECT_EQ(shape_tag(classify_shape(pentagon, 1)), "recognized");
}

TEST(Shapes, WitnessSubcomplexIsTheSphere) {
    auto k = standard_complex(StandardName::N2, 2);
    for (const auto& p : canonical_pairs(StandardName::N2, 2)) {
        EXPECT_TRUE(recognize_sphere(p.gamma.subcomplex(k), 1));
        EXPECT_TRUE(recognize_sphere(p.gamma_prime.subcomplex(k), 2));
        for (const auto& f : p.gamma_prime.facets) EXPECT_TRUE(k.contains(f));
    }
}

TEST(Lambda01, EnumerationMatchesEdgeSubsetOracle) {
    std::vector<SimplicialComplex> graphs;
    for (auto name : {StandardName::N1, StandardName::N2, StandardName::N3, StandardName::Sigma,
                      StandardName::Join3}) {
        auto k = standard_complex(name, 1);
        graphs.push_back(k);
        for (auto& t : facet_deletions(k)) graphs.push_back(t.complex);
    }
    for (const auto& k : graphs)
        EXPECT_EQ(keys(enumerate_sphere_pairs(k, 0, 1)), oracle::brute_lambda01(k)) << k.name();
}

TEST(Lambda01, CanonicalCountsAtNOne) {
    EXPECT_EQ(canonical_pairs(StandardName::N1, 1).size(), 4U);
    EXPECT_EQ(canonical_pairs(StandardName::N2, 1).size(), 3U);
    EXPECT_EQ(canonical_pairs(StandardName::N3, 1).size(), 3U);
}

TEST(Canonical, FamiliesLieInTheComplex) {
    for (int n = 1; n <= 3; ++n)
        for (auto name : {StandardName::N1, StandardName::N2, StandardName::N3}) {
            auto k = standard_complex(name, n);
            auto fam = canonical_gammas(name, n);
            for (const auto& g : fam.lower) {
                EXPECT_EQ(g.dim, n - 1);
                for (const auto& f : g.facets) EXPECT_TRUE(k.contains(f));
            }
            for (const auto& g : fam.upper) {
                EXPECT_EQ(g.dim, n);
                for (const auto& f : g.facets) EXPECT_TRUE(k.contains(f)) << to_string(name) << n;
            }
        }
}

TEST(Canonical, EqualsEnumerationForN1N2AndIsContainedForN3) {
    for (int n = 1; n <= 2; ++n) {
        for (auto name : {StandardName::N1, StandardName::N2}) {
            auto k = standard_complex(name, n);
            EXPECT_EQ(enumerate_sphere_pairs(k, n - 1, n), canonical_pairs(name, n)) << to_string(name) << n;
        }
        auto k = standard_complex(StandardName::N3, n);
        auto all = enumerate_sphere_pairs(k, n - 1, n);
        for (const auto& p : canonical_pairs(StandardName::N3, n))
            EXPECT_TRUE(std::binary_search(all.begin(), all.end(), p));
    }
    EXPECT_EQ(enumerate_sphere_pairs(standard_complex(StandardName::N3, 2), 1, 2).size(), 22U);
}

TEST(Enumeration, PairsAreDisjointAndSorted) {
    auto k = standard_complex(StandardName::N3, 2);
    auto pairs = enumerate_sphere_pairs(k, 1, 2);
    EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
    for (const auto& p : pairs) EXPECT_EQ(p.gamma.vertex_mask() & p.gamma_prime.vertex_mask(), 0U);
}

TEST(Format, PairListLines) {
    auto k = standard_complex(StandardName::N1, 1);
    auto text = format_pair_list(k, canonical_pairs(StandardName::N1, 1));
    EXPECT_NE(text.find("pair 0: gamma={a0, a1} gamma'={a2 a3, a2 a4, a3 a4} shape=boundary/boundary"),
              std::string::npos);
}
