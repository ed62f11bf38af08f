#include <listminor/graph.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace listminor;

namespace {

auto edge_set(const Graph & g) { return g.edges(); }

}

TEST(Complement, EdgelessBecomesComplete)
{
    EXPECT_EQ(complement(empty_graph(4)), complete_graph(4));
}

TEST(Complement, InvolutionExhaustiveUpToSix)
{
    for (int n = 0 ; n <= 6 ; ++n) {
        const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{ 1 } << pairs) ; ++mask) {
            auto g = oracle::graph_from_mask(n, mask);
            ASSERT_EQ(complement(complement(g)), g);
        }
    }
}

TEST(Complement, InvolutionRandomizedUpToNine)
{
    std::mt19937_64 rng(11);
    for (int rep = 0 ; rep < 300 ; ++rep) {
        auto g = oracle::random_graph(7 + rep % 3, 0.5, rng);
        ASSERT_EQ(complement(complement(g)), g);
    }
}

TEST(Complement, CompleteBipartiteTwoTwoBecomesTwoEdges)
{
    auto g = complement(complete_bipartite_graph(2, 2));
    EXPECT_EQ(edge_set(g), (std::vector<Edge>{ { 0, 1 }, { 2, 3 } }));
}

TEST(Complement, PreservesLabels)
{
    auto g = complete_bipartite_graph(2, 3);
    EXPECT_EQ(complement(g).labels(), g.labels());
}

TEST(InducedSubgraph, CompleteOnThree)
{
    auto r = induced_subgraph(complete_graph(5), VertexSet{ 0, 2, 4 });
    EXPECT_EQ(r.graph, complete_graph(3));
    EXPECT_EQ(r.to_host, (std::vector<Vertex>{ 0, 2, 4 }));
}

TEST(InducedSubgraph, EmptySet)
{
    auto r = induced_subgraph(petersen_graph(), VertexSet{});
    EXPECT_EQ(r.graph.vertex_count(), 0);
}

TEST(InducedSubgraph, ConsecutiveOnFiveCycleIsPath)
{
    auto r = induced_subgraph(cycle_graph(5), VertexSet{ 1, 2, 3 });
    EXPECT_EQ(r.graph, path_graph(3));
}

TEST(InducedSubgraph, WholeVertexSetIsIdentity)
{
    std::mt19937_64 rng(3);
    for (int rep = 0 ; rep < 50 ; ++rep) {
        auto g = oracle::random_graph(8, 0.4, rng);
        EXPECT_EQ(induced_subgraph(g, g.all_vertices()).graph, g);
    }
}

TEST(InducedSubgraph, RejectsOutOfRange)
{
    EXPECT_THROW(induced_subgraph(complete_graph(3), VertexSet{ 0, 3 }), std::out_of_range);
}

TEST(Glue, TrianglesOnOneVertexGiveBowtie)
{
    auto k3 = complete_graph(3);
    auto r = glue(GlueSpec{ k3, k3, { { 0, 0 } } });
    EXPECT_EQ(r.graph.vertex_count(), 5);
    EXPECT_EQ(r.graph.edge_count(), 6u);
    EXPECT_EQ(r.graph.degree(0), 4);
}

TEST(Glue, FullOverlapIsIdentity)
{
    auto g = complete_graph(4);
    std::vector<std::pair<Vertex, Vertex>> shared;
    for (Vertex v = 0 ; v < 4 ; ++v)
        shared.emplace_back(v, v);
    EXPECT_EQ(glue(GlueSpec{ g, g, shared }).graph, g);
}

TEST(Glue, TwoK4OnTriangle)
{
    auto k4 = complete_graph(4);
    auto r = glue(GlueSpec{ k4, k4, { { 0, 1 }, { 1, 2 }, { 2, 3 } } });
    EXPECT_EQ(r.graph.vertex_count(), 5);
    EXPECT_EQ(r.graph.edge_count(), 9u);
    EXPECT_EQ(r.from_g2, (std::vector<Vertex>{ 4, 0, 1, 2 }));
}

TEST(Glue, RejectsNonClique)
{
    auto p = path_graph(3);
    EXPECT_THROW(glue(GlueSpec{ p, p, { { 0, 0 }, { 2, 2 } } }), std::invalid_argument);
    auto k3 = complete_graph(3);
    EXPECT_THROW(glue(GlueSpec{ k3, p, { { 0, 0 }, { 1, 2 } } }), std::invalid_argument);
}

TEST(Glue, RejectsNonInjectiveAndOutOfRange)
{
    auto k3 = complete_graph(3);
    EXPECT_THROW(glue(GlueSpec{ k3, k3, { { 0, 0 }, { 0, 1 } } }), std::invalid_argument);
    EXPECT_THROW(glue(GlueSpec{ k3, k3, { { 0, 5 } } }), std::out_of_range);
}

TEST(Glue, CountsAndNoCrossEdgesOnRandomCliques)
{
    std::mt19937_64 rng(5);
    for (int rep = 0 ; rep < 200 ; ++rep) {
        auto g1 = oracle::random_graph(6, 0.5, rng);
        auto g2 = oracle::random_graph(7, 0.5, rng);
        // Force a shared clique by completing it in both hosts.
        const int c = static_cast<int>(rng() % 4);
        GraphBuilder b1(6), b2(7);
        for (auto [u, v] : g1.edges())
            b1.add_edge(u, v);
        for (auto [u, v] : g2.edges())
            b2.add_edge(u, v);
        std::vector<std::pair<Vertex, Vertex>> shared;
        for (int i = 0 ; i < c ; ++i) {
            shared.emplace_back(i, 6 - i);
            for (int j = 0 ; j < i ; ++j) {
                b1.add_edge(i, j);
                b2.add_edge(6 - i, 6 - j);
            }
        }
        auto h1 = std::move(b1).build();
        auto h2 = std::move(b2).build();
        auto r = glue(GlueSpec{ h1, h2, shared });

        EXPECT_EQ(r.graph.vertex_count(), 6 + 7 - c);
        EXPECT_EQ(r.graph.edge_count(), h1.edge_count() + h2.edge_count() - static_cast<std::size_t>(c * (c - 1) / 2));
        for (auto [u, v] : r.graph.edges()) {
            bool u_only2 = u >= 6, v_only2 = v >= 6;
            bool u_only1 = u >= c && u < 6, v_only1 = v >= c && v < 6;
            EXPECT_FALSE((u_only1 && v_only2) || (u_only2 && v_only1));
        }
        for (auto [u, v] : h2.edges())
            EXPECT_TRUE(r.graph.adjacent(r.from_g2[u], r.from_g2[v]));
    }
}

TEST(Clique, Basics)
{
    auto g = path_graph(3);
    EXPECT_TRUE(is_clique(g, VertexSet{ 1 }));
    EXPECT_TRUE(is_clique(g, VertexSet{}));
    EXPECT_FALSE(is_clique(g, VertexSet{ 0, 2 }));
    EXPECT_TRUE(is_clique(complete_graph(5), complete_graph(5).all_vertices()));
}

TEST(NonNeighbourCount, Basics)
{
    for (Vertex v = 0 ; v < 6 ; ++v)
        EXPECT_EQ(non_neighbour_count(complete_graph(6), v), 0);
    Graph g(5, { { 0, 1 }, { 1, 2 } });
    EXPECT_EQ(non_neighbour_count(g, 4), 4);
    EXPECT_EQ(non_neighbour_count(g, 1), 2);
}

TEST(Constructors, Fixtures)
{
    EXPECT_EQ(complete_graph(1).vertex_count(), 1);
    EXPECT_EQ(complete_graph(1).edge_count(), 0u);
    EXPECT_EQ(cycle_graph(3), complete_graph(3));
    // K_{2,2} with parts {0,1},{2,3} is the 4-cycle 0-2-1-3.
    auto k22 = complete_bipartite_graph(2, 2);
    std::vector<Vertex> perm{ 0, 2, 1, 3 };
    Graph relabelled = permute_vertices(Graph(4, k22.edges()), perm);
    EXPECT_EQ(relabelled, cycle_graph(4));
    EXPECT_EQ(empty_graph(3).edge_count(), 0u);
    EXPECT_EQ(path_graph(4).edge_count(), 3u);
    auto p = petersen_graph();
    EXPECT_EQ(p.vertex_count(), 10);
    EXPECT_EQ(p.edge_count(), 15u);
    for (Vertex v = 0 ; v < 10 ; ++v)
        EXPECT_EQ(p.degree(v), 3);
}

TEST(Constructors, BipartiteLabels)
{
    auto g = complete_bipartite_graph(2, 3);
    EXPECT_EQ(g.vertices_labelled(Label::a).members(), (std::vector<Vertex>{ 0, 1 }));
    EXPECT_EQ(g.vertices_labelled(Label::b).members(), (std::vector<Vertex>{ 2, 3, 4 }));
    EXPECT_EQ(g.edge_count(), 6u);
}

TEST(Builder, RejectsLoopsAndRange)
{
    GraphBuilder b(3);
    EXPECT_THROW(b.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(b.add_edge(0, 3), std::out_of_range);
    EXPECT_TRUE(b.add_edge(0, 1));
    EXPECT_FALSE(b.add_edge(1, 0));
}

TEST(Graph, SymmetricAndLoopless)
{
    std::mt19937_64 rng(9);
    for (int rep = 0 ; rep < 100 ; ++rep) {
        auto g = oracle::random_graph(9, 0.5, rng);
        for (Vertex u = 0 ; u < 9 ; ++u) {
            EXPECT_FALSE(g.adjacent(u, u));
            for (Vertex v = 0 ; v < 9 ; ++v)
                EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
        }
    }
}

TEST(Components, OrderedByMinimumVertex)
{
    Graph g(6, { { 4, 1 }, { 0, 3 }, { 3, 5 } });
    auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 3u);
    EXPECT_EQ(comps[0].members(), (std::vector<Vertex>{ 0, 3, 5 }));
    EXPECT_EQ(comps[1].members(), (std::vector<Vertex>{ 1, 4 }));
    EXPECT_EQ(comps[2].members(), (std::vector<Vertex>{ 2 }));
    EXPECT_TRUE(is_connected(g, comps[0]));
    EXPECT_FALSE(is_connected(g, VertexSet{ 0, 1 }));
}
