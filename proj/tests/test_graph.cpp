#include <gtest/gtest.h>

#include "flagbal/graph.hpp"
#include "flagbal/graph_io.hpp"
#include "oracles.hpp"

using namespace flagbal;

namespace {

oracle::Matrix matrix_of(const Graph& g) {
    auto adj = oracle::empty_matrix(g.order());
    for (Vertex u = 1; u <= g.order(); ++u)
        for (Vertex v = u + 1; v <= g.order(); ++v)
            if (g.adjacent(u, v)) oracle::connect(adj, u - 1, v - 1);
    return adj;
}

}  // namespace

TEST(Graph, Basics) {
    Graph g(4);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    EXPECT_EQ(g.order(), 4U);
    EXPECT_EQ(g.edge_count(), 2U);
    EXPECT_TRUE(g.adjacent(3, 1));
    EXPECT_FALSE(g.adjacent(1, 4));
    EXPECT_EQ(g.degree(3), 2U);
    EXPECT_THROW(g.add_edge(2, 2), PreconditionError);
    EXPECT_THROW(g.add_edge(1, 5), PreconditionError);
    EXPECT_THROW(Graph(65), PreconditionError);
}

TEST(Graph, EdgeMaskRoundTrip) {
    for (std::uint64_t mask = 0; mask < (1U << 10); ++mask) {
        const auto g = Graph::from_edge_mask(5, mask);
        ASSERT_EQ(g.edge_mask(), mask);
    }
}

TEST(ParseGraph, Examples) {
    const auto c5 = parse_graph("5 5\n1 2\n2 3\n3 4\n4 5\n1 5");
    EXPECT_EQ(c5.edge_mask(), Graph::cycle(5).edge_mask());

    const auto star = parse_graph("D?{", GraphFormat::Graph6);
    EXPECT_EQ(matrix_of(star), oracle::decode_graph6("D?{"));
    // Decoded by hand: the last vertex is joined to the other four.
    EXPECT_EQ(star.degree(5), 4U);
    EXPECT_EQ(star.edge_count(), 4U);

    const auto two = parse_graph("2 0\n");
    EXPECT_EQ(two.order(), 2U);
    EXPECT_EQ(two.edge_count(), 0U);
}

TEST(ParseGraph, EdgeListErrors) {
    EXPECT_THROW(parse_graph("3 1\n1 4\n", GraphFormat::EdgeList), ParseError);
    EXPECT_THROW(parse_graph("3 1\n2 2\n", GraphFormat::EdgeList), ParseError);
    EXPECT_THROW(parse_graph("3 2\n1 2\n", GraphFormat::EdgeList), ParseError);
    EXPECT_THROW(parse_graph("3 1\n1 2\n2 3\n", GraphFormat::EdgeList), ParseError);
    EXPECT_THROW(parse_graph("3 1\n1 x\n", GraphFormat::EdgeList), ParseError);
    EXPECT_THROW(parse_graph("", GraphFormat::EdgeList), ParseError);
    EXPECT_THROW(parse_graph("65 0\n", GraphFormat::EdgeList), ParseError);
}

TEST(ParseGraph, EdgeListCommentsAndDuplicates) {
    const auto parsed = parse_graphs("# triangle\n3 3\n\n1 2\n# middle\n2 3\n2 1\n", GraphFormat::EdgeList);
    ASSERT_EQ(parsed.graphs.size(), 1U);
    EXPECT_EQ(parsed.graphs[0].edge_count(), 2U);
    EXPECT_EQ(parsed.warnings.size(), 1U);
}

TEST(ParseGraph, Graph6Errors) {
    EXPECT_THROW(parse_graph("D?", GraphFormat::Graph6), ParseError);
    EXPECT_THROW(parse_graph("D?{{", GraphFormat::Graph6), ParseError);
    EXPECT_THROW(parse_graph("D? {", GraphFormat::Graph6), ParseError);
    EXPECT_THROW(parse_graph("A`", GraphFormat::Graph6), ParseError);  // padding bit set
}

TEST(Graph6, RoundTripAgainstIndependentDecoder) {
    for (std::size_t n = 0; n <= 7; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - (n > 0)) / 2)); mask += 1 + mask / 3) {
            const auto g = Graph::from_edge_mask(n, mask);
            const auto text = to_graph6(g);
            ASSERT_EQ(oracle::decode_graph6(text), matrix_of(g)) << text;
            ASSERT_EQ(parse_graph(text, GraphFormat::Graph6).edge_mask(), mask);
        }
    for (std::size_t n : {62U, 63U, 64U}) {
        Graph g(n);
        for (Vertex v = 1; v < n; v += 3) g.add_edge(v, v + 1);
        g.add_edge(1, static_cast<Vertex>(n));
        const auto text = to_graph6(g);
        EXPECT_EQ(oracle::decode_graph6(text), matrix_of(g));
        EXPECT_EQ(matrix_of(parse_graph(text)), matrix_of(g));
    }
}

TEST(Graph6, Header) { EXPECT_EQ(parse_graph(">>graph6<<D?{").edge_count(), 4U); }

TEST(EdgeList, RoundTrip) {
    const auto g = turan_graph(7, 3);
    EXPECT_EQ(parse_graph(to_edge_list(g)).edge_mask(), g.edge_mask());
}

TEST(DetectFormat, Examples) {
    EXPECT_EQ(detect_format("5 5\n"), GraphFormat::EdgeList);
    EXPECT_EQ(detect_format("# c\n5 0\n"), GraphFormat::EdgeList);
    EXPECT_EQ(detect_format("D?{\n"), GraphFormat::Graph6);
    EXPECT_EQ(parse_graphs("D?{\nDhc\n").graphs.size(), 2U);
}

TEST(CliqueVector, Examples) {
    EXPECT_EQ(clique_vector(Graph::cycle(5)).counts(), (std::vector<std::uint64_t>{1, 5, 5}));
    EXPECT_EQ(clique_vector(Graph::complete(4)).counts(), (std::vector<std::uint64_t>{1, 4, 6, 4, 1}));
    EXPECT_EQ(clique_vector(turan_graph(7, 3))[3], 12U);
    EXPECT_EQ(clique_vector(Graph(0)).counts(), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(clique_vector(parse_graph("IheA@GUAo")).counts(), (std::vector<std::uint64_t>{1, 10, 15}));
}

TEST(CliqueVector, MatchesSubsetEnumeration) {
    for (std::uint64_t mask = 0; mask < (1U << 15); mask += 13) {
        const auto g = Graph::from_edge_mask(6, mask);
        ASSERT_EQ(clique_vector(g).counts(), oracle::clique_counts(matrix_of(g)));
    }
    for (std::uint64_t seed = 1; seed < 40; ++seed) {
        Graph g(14);
        std::uint64_t x = seed * 0x9E3779B97F4A7C15ULL;
        for (Vertex u = 1; u <= 14; ++u)
            for (Vertex v = u + 1; v <= 14; ++v) {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                if (x % 3 != 0) g.add_edge(u, v);
            }
        ASSERT_EQ(clique_vector(g).counts(), oracle::clique_counts(matrix_of(g)));
        for (std::size_t s = 0; s <= 15; ++s) ASSERT_EQ(count_cliques(g, s), clique_vector(g)[s]);
    }
}

TEST(CliqueVector, GuardApplies) { EXPECT_THROW(clique_vector(Graph::complete(20), 1000), GuardExceeded); }

TEST(Cliques, ListsEveryClique) {
    const auto all = cliques(Graph::cycle(5));
    EXPECT_EQ(all.size(), 11U);
    EXPECT_TRUE(all.front().empty());
}

TEST(CliqueNumber, Examples) {
    EXPECT_EQ(clique_number(Graph::cycle(5)), 2U);
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(clique_number(Graph::complete(n)), n);
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t r = 1; r <= n; ++r) {
            const auto counts = oracle::clique_counts(oracle::turan(n, r));
            EXPECT_EQ(clique_number(turan_graph(n, r)), counts.size() - 1);
            EXPECT_EQ(clique_number(turan_graph(n, r)), r);
        }
}

TEST(GraphLink, Examples) {
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto lk = graph_link(Graph::complete(n), 1);
        EXPECT_EQ(lk.order(), n - 1);
        EXPECT_EQ(lk.edge_count(), (n - 1) * (n - 2) / 2);
    }
    Graph g(3);
    g.add_edge(1, 2);
    EXPECT_EQ(graph_link(g, 3).order(), 0U);
    for (Vertex v = 1; v <= 5; ++v) {
        const auto lk = graph_link(Graph::cycle(5), v);
        EXPECT_EQ(lk.order(), 2U);
        EXPECT_EQ(lk.edge_count(), 0U);
    }
}

TEST(GraphLink, KeepsOrigins) {
    const auto lk = graph_link(Graph::cycle(6), 1);
    EXPECT_EQ(lk.origins(), (std::vector<Vertex>{2, 6}));
}

TEST(RemoveVertices, Examples) {
    const auto k4 = Graph::complete(4);
    const std::vector<Vertex> all{1, 2, 3, 4};
    EXPECT_EQ(remove_vertices(k4, all).order(), 0U);
    EXPECT_EQ(remove_vertices(k4, {}).edge_mask(), k4.edge_mask());
    const std::vector<Vertex> one{2};
    const auto k3 = remove_vertices(k4, one);
    EXPECT_EQ(k3.order(), 3U);
    EXPECT_EQ(k3.edge_count(), 3U);
    EXPECT_EQ(k3.origins(), (std::vector<Vertex>{1, 3, 4}));
}

TEST(AllGraphs, Counts) {
    EXPECT_EQ(all_graphs(3).size(), 8U);
    EXPECT_EQ(all_graphs(1).size(), 1U);
    EXPECT_EQ(all_graphs(0).size(), 1U);
    std::uint64_t total = 0, edgeless = 0;
    for (const auto& g : all_graphs(4)) {
        ++total;
        if (g.edge_count() == 0) ++edgeless;
    }
    EXPECT_EQ(total, 64U);
    EXPECT_EQ(edgeless, 1U);
    EXPECT_THROW(all_graphs(9), PreconditionError);
}

TEST(AllGraphs, PartsCoverRange) {
    const auto all = all_graphs(5);
    std::uint64_t covered = 0;
    for (std::uint64_t i = 0; i < 7; ++i) {
        const auto part = all.part(i, 7);
        EXPECT_EQ(part.first_mask(), covered);
        covered = part.last_mask();
    }
    EXPECT_EQ(covered, all.size());
}
