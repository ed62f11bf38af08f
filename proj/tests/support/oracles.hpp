#pragma once

// Slow, independent reference implementations used to cross-check the
// library.  Nothing here shares code with the searches under test.

#include <listminor/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using listminor::Edge;
using listminor::Graph;
using listminor::Vertex;

inline auto adjacency(const Graph & g) -> std::vector<std::vector<char>>
{
    std::vector<std::vector<char>> a(g.vertex_count(), std::vector<char>(g.vertex_count(), 0));
    for (auto [u, v] : g.edges())
        a[u][v] = a[v][u] = 1;
    return a;
}

/// Plain depth-first assignment in vertex order, no heuristics.
inline auto l_colorable(const Graph & g, const std::vector<std::vector<std::uint32_t>> & lists) -> bool
{
    const int n = g.vertex_count();
    auto a = adjacency(g);
    std::vector<std::uint32_t> col(n);
    std::function<bool(int)> rec = [&](int v) {
        if (v == n)
            return true;
        for (auto c : lists[v]) {
            bool ok = true;
            for (int u = 0 ; u < v ; ++u)
                if (a[u][v] && col[u] == c)
                    ok = false;
            if (! ok)
                continue;
            col[v] = c;
            if (rec(v + 1))
                return true;
        }
        return false;
    };
    return rec(0);
}

/// k-choosability by enumerating every vertex's list as a k-subset of
/// [0, used + k), where used counts colours appearing on earlier vertices.
/// Renaming colours by first appearance maps any assignment into this family.
inline auto choosable(const Graph & g, int k) -> bool
{
    const int n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> lists(n);
    std::function<bool(int, std::uint32_t)> rec = [&](int v, std::uint32_t used) -> bool {
        if (v == n)
            return l_colorable(g, lists);
        const std::uint32_t pool = used + static_cast<std::uint32_t>(k);
        std::vector<int> pick(pool, 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        do {
            lists[v].clear();
            std::uint32_t top = used;
            for (std::uint32_t c = 0 ; c < pool ; ++c)
                if (pick[c]) {
                    lists[v].push_back(c);
                    top = std::max(top, c + 1);
                }
            if (! rec(v + 1, top))
                return false;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return true;
    };
    return rec(0, 0);
}

inline auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Graph on n vertices whose edges are the set bits of mask over the
/// lexicographic pair order.
inline auto graph_from_mask(int n, std::uint64_t mask) -> Graph
{
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v, ++bit)
            if (mask >> bit & 1)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline auto is_subset_edges(const Graph & h, const Graph & g) -> bool
{
    for (auto [u, v] : h.edges())
        if (! g.adjacent(u, v))
            return false;
    return true;
}

}
