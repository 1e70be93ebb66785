#include <gtest/gtest.h>

#include "flagbal/complex.hpp"
#include "flagbal/revlex.hpp"
#include "oracles.hpp"

using namespace flagbal;

namespace {

Complex pentagon() { return Complex::from_facets({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

oracle::Matrix matrix_of(const Graph& g) {
    auto adj = oracle::empty_matrix(g.order());
    for (Vertex u = 1; u <= g.order(); ++u)
        for (Vertex v = u + 1; v <= g.order(); ++v)
            if (g.adjacent(u, v)) oracle::connect(adj, u - 1, v - 1);
    return adj;
}

}  // namespace

TEST(Complex, NormalizesFacets) {
    const auto c = Complex::from_facets({{1, 2}, {1, 2, 3}, {2}, {1, 2}, {}, {4}});
    EXPECT_EQ(c.facets(), (std::vector<Face>{{4}, {1, 2, 3}}));
    EXPECT_EQ(c.top_size(), 3U);
    EXPECT_EQ(c.dimension(), 2);
    EXPECT_EQ(c.vertices(), (std::vector<Vertex>{1, 2, 3, 4}));
    EXPECT_TRUE(c.has_face(Face{1, 3}));
    EXPECT_FALSE(c.has_face(Face{3, 4}));
}

TEST(Complex, VoidAndTrivial) {
    const Complex none;
    EXPECT_TRUE(none.is_void());
    EXPECT_TRUE(closure(none).empty());
    EXPECT_TRUE(face_vector(none).empty());
    EXPECT_EQ(face_vector(Complex::trivial()).counts(), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(Complex::trivial().dimension(), -1);
}

TEST(Closure, Examples) {
    EXPECT_EQ(closure(Complex::from_facets({{1, 2, 3}})).size(), 8U);
    EXPECT_TRUE(closure(Complex::from_facets({})).empty());
    const auto faces = closure(pentagon());
    EXPECT_EQ(faces.size(), 11U);
    EXPECT_TRUE(faces.front().empty());
    EXPECT_TRUE(std::is_sorted(faces.begin(), faces.end(), SizeRevlexLess{}));
}

TEST(FaceVector, Examples) {
    EXPECT_EQ(face_vector(pentagon()).counts(), (std::vector<std::uint64_t>{1, 5, 5}));
    for (std::uint32_t k = 1; k <= 8; ++k) {
        const auto fv = face_vector(Complex::from_facets({first_kset(k)}));
        for (std::uint32_t i = 0; i <= k; ++i) EXPECT_EQ(BigInt(fv[i]), binom<BigInt>(k, i));
    }
    const auto fv = face_vector(revlex_complex({{3, 99}, {4, 146}}));
    EXPECT_EQ(fv[3], 99U);
    EXPECT_EQ(fv[4], 146U);
}

TEST(FaceVector, MatchesPowerSetClosure) {
    std::vector<Face> facets;
    std::vector<oracle::Set> sets;
    for (std::uint32_t i = 0; i < 30; ++i) {
        const Face f{i % 7 + 1, (i * 3) % 11 + 8, (i * 5) % 13 + 20, i + 40};
        facets.push_back(f);
        sets.emplace_back(f.begin(), f.end());
    }
    EXPECT_EQ(face_vector(Complex::from_facets(facets)).counts(), oracle::closure_counts(sets));
}

TEST(FaceVector, GuardApplies) {
    EXPECT_THROW(face_vector(Complex::from_facets({first_kset(12)}), 100), GuardExceeded);
}

TEST(Link, Examples) {
    const auto tri = Complex::from_facets({{1, 2, 3}});
    EXPECT_EQ(link(tri, Face{1, 2, 3}), Complex::trivial());
    EXPECT_EQ(link(pentagon(), Face{}), pentagon());
    const auto two = Complex::from_facets({{1, 2, 3}, {2, 3, 4}});
    EXPECT_EQ(link(two, Face{2, 3}).facets(), (std::vector<Face>{{1}, {4}}));
    EXPECT_EQ(link(two, Face{2}).facets(), (std::vector<Face>{{1, 3}, {3, 4}}));
    EXPECT_THROW(link(two, Face{1, 4}), PreconditionError);
}

TEST(Link, MatchesDefinition) {
    const auto c = revlex_complex({{2, 12}, {3, 10}});
    const auto faces = closure(c);
    for (const auto& f : faces) {
        std::size_t expected = 0;
        for (const auto& g : faces)
            if (g.disjoint(f) && c.has_face(g.set_union(f))) ++expected;
        EXPECT_EQ(closure(link(c, f)).size(), expected);
    }
}

TEST(OneSkeleton, Examples) {
    const auto g = one_skeleton(pentagon());
    EXPECT_EQ(g.order(), 5U);
    EXPECT_EQ(g.edge_count(), 5U);
    for (Vertex v = 1; v <= 5; ++v) EXPECT_EQ(g.degree(v), 2U);

    const auto k3 = one_skeleton(Complex::from_facets({{1, 2, 3}}));
    EXPECT_EQ(k3.edge_count(), 3U);

    const auto bip = one_skeleton(colored_revlex_complex({{2, 5}}, 2).complex);
    for (Vertex u = 1; u <= bip.order(); ++u)
        for (Vertex v = u + 1; v <= bip.order(); ++v)
            if (bip.adjacent(u, v)) {
                EXPECT_NE(bip.origin(u) % 2, bip.origin(v) % 2);
            }
}

TEST(OneSkeleton, KeepsLabels) {
    const auto g = one_skeleton(Complex::from_facets({{3, 10}, {10, 40}}));
    EXPECT_EQ(g.order(), 3U);
    EXPECT_EQ(g.origins(), (std::vector<Vertex>{3, 10, 40}));
    EXPECT_TRUE(g.adjacent(1, 2));
    EXPECT_FALSE(g.adjacent(1, 3));
}

TEST(IsFlag, Examples) {
    EXPECT_TRUE(is_flag(pentagon()));
    EXPECT_FALSE(is_flag(Complex::from_facets({{1, 2}, {2, 3}, {1, 3}})));
    for (std::uint32_t k = 1; k <= 6; ++k) EXPECT_TRUE(is_flag(Complex::from_facets({first_kset(k)})));
    EXPECT_TRUE(is_flag(clique_complex(Graph::cycle(6))));
}

TEST(ChromaticNumber, Examples) {
    EXPECT_EQ(chromatic_number(Graph::cycle(5)), 3U);
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(chromatic_number(Graph::complete(n)), n);
    EXPECT_EQ(chromatic_number(Graph(4)), 1U);
    EXPECT_EQ(chromatic_number(Graph(0)), 0U);
    EXPECT_THROW(chromatic_number(Graph(21)), PreconditionError);
}

TEST(ChromaticNumber, MatchesExhaustiveColoring) {
    for (std::uint64_t mask = 0; mask < (1U << 10); mask += 7) {
        const auto g = Graph::from_edge_mask(5, mask);
        ASSERT_EQ(chromatic_number(g), oracle::chromatic(matrix_of(g))) << mask;
    }
    for (std::uint64_t mask = 1; mask < (1ULL << 21); mask = mask * 5 + 3) {
        const auto g = Graph::from_edge_mask(7, mask & ((1ULL << 21) - 1));
        ASSERT_EQ(chromatic_number(g), oracle::chromatic(matrix_of(g)));
    }
}

TEST(IsBalanced, Examples) {
    EXPECT_FALSE(is_balanced(pentagon()));
    for (std::uint32_t k = 1; k <= 6; ++k) EXPECT_TRUE(is_balanced(Complex::from_facets({first_kset(k)})));
    EXPECT_TRUE(is_balanced(colored_revlex_complex({{2, 5}}, 2).complex));
    EXPECT_TRUE(is_balanced(Complex{}));
    // Hollow triangle: dimension 1, three colors needed.
    EXPECT_FALSE(is_balanced(Complex::from_facets({{1, 2}, {2, 3}, {1, 3}})));
}

TEST(CheckColoring, Examples) {
    for (std::uint64_t r = 2; r <= 5; ++r) EXPECT_TRUE(check_coloring(colored_revlex_complex({{1, 9}, {static_cast<std::uint32_t>(r), 6}}, r)));
    ColoredComplex k2{Complex::from_facets({{1, 2}}), 2, {{1, 1}, {2, 1}}};
    EXPECT_FALSE(check_coloring(k2));
    k2.coloring[2] = 2;
    EXPECT_TRUE(check_coloring(k2));
    k2.coloring[2] = 3;
    EXPECT_FALSE(check_coloring(k2));
    k2.coloring.erase(2);
    EXPECT_FALSE(check_coloring(k2));
}
