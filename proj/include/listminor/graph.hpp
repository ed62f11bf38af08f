#pragma once

/*
 * Simple undirected graphs over dense vertex indices.
 *
 * A Graph is immutable once built: every operation here returns a fresh
 * graph, and cross-graph correspondences are returned as explicit index
 * maps.  Adjacency rows are bitsets so that neighbourhood tests used by the
 * exact searches are word operations.
 */

#include <listminor/bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace listminor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class Label : unsigned char { none, a, b };

/// Sorted, duplicate-free set of vertex indices of some host graph.
class VertexSet
{
public:
    VertexSet() = default;

    VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

    explicit VertexSet(std::vector<Vertex> members) : _members(std::move(members))
    {
        std::sort(_members.begin(), _members.end());
        _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
    }

    auto size() const -> std::size_t { return _members.size(); }
    auto empty() const -> bool { return _members.empty(); }
    auto begin() const { return _members.begin(); }
    auto end() const { return _members.end(); }
    auto operator[](std::size_t i) const -> Vertex { return _members[i]; }
    auto members() const & -> const std::vector<Vertex> & { return _members; }
    auto members() && -> std::vector<Vertex> { return std::move(_members); }

    auto contains(Vertex v) const -> bool
    {
        return std::binary_search(_members.begin(), _members.end(), v);
    }

    auto operator==(const VertexSet &) const -> bool = default;

private:
    std::vector<Vertex> _members;
};

class Graph;

class GraphBuilder
{
public:
    explicit GraphBuilder(int vertex_count)
        : _rows(static_cast<std::size_t>(std::max(vertex_count, 0)), DynamicBitset(static_cast<std::size_t>(std::max(vertex_count, 0)))),
          _labels(static_cast<std::size_t>(std::max(vertex_count, 0)), Label::none)
    {
        if (vertex_count < 0)
            throw std::invalid_argument("negative vertex count");
    }

    auto vertex_count() const -> int { return static_cast<int>(_rows.size()); }

    /// Returns false if the edge was already present.
    auto add_edge(Vertex u, Vertex v) -> bool
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (_rows[u].test(v))
            return false;
        _rows[u].set(v);
        _rows[v].set(u);
        return true;
    }

    auto has_edge(Vertex u, Vertex v) const -> bool { return _rows[u].test(v); }

    auto set_label(Vertex v, Label l) -> void
    {
        check_vertex(v);
        _labels[v] = l;
    }

    auto build() && -> Graph;

private:
    auto check_vertex(Vertex v) const -> void
    {
        if (v < 0 || v >= vertex_count())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " + std::to_string(vertex_count()) + " vertices");
    }

    std::vector<DynamicBitset> _rows;
    std::vector<Label> _labels;
};

class Graph
{
public:
    Graph() = default;

    Graph(int vertex_count, std::span<const Edge> edges, std::vector<Label> labels = {})
    {
        GraphBuilder b(vertex_count);
        for (auto [u, v] : edges)
            b.add_edge(u, v);
        if (! labels.empty()) {
            if (static_cast<int>(labels.size()) != vertex_count)
                throw std::invalid_argument("label vector size does not match vertex count");
            for (Vertex v = 0 ; v < vertex_count ; ++v)
                b.set_label(v, labels[v]);
        }
        *this = std::move(b).build();
    }

    Graph(int vertex_count, std::initializer_list<Edge> edges, std::vector<Label> labels = {})
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels))
    {
    }

    auto vertex_count() const -> int { return static_cast<int>(_rows.size()); }
    auto edge_count() const -> std::size_t { return _edge_count; }

    auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[u].test(v); }
    auto neighbours(Vertex v) const -> const DynamicBitset & { return _rows[v]; }
    auto degree(Vertex v) const -> int { return static_cast<int>(_rows[v].count()); }

    auto label(Vertex v) const -> Label { return _labels[v]; }
    auto labels() const -> const std::vector<Label> & { return _labels; }

    auto has_labels() const -> bool
    {
        return std::any_of(_labels.begin(), _labels.end(), [](Label l) { return l != Label::none; });
    }

    auto vertices_labelled(Label l) const -> VertexSet
    {
        std::vector<Vertex> out;
        for (Vertex v = 0 ; v < vertex_count() ; ++v)
            if (_labels[v] == l)
                out.push_back(v);
        return VertexSet(std::move(out));
    }

    auto all_vertices() const -> VertexSet
    {
        std::vector<Vertex> out(static_cast<std::size_t>(vertex_count()));
        for (Vertex v = 0 ; v < vertex_count() ; ++v)
            out[v] = v;
        return VertexSet(std::move(out));
    }

    /// Canonical edge list: u < v, lexicographically sorted.
    auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        out.reserve(_edge_count);
        for (Vertex u = 0 ; u < vertex_count() ; ++u)
            for (auto v = _rows[u].find_next(static_cast<std::size_t>(u)) ; v != DynamicBitset::npos ; v = _rows[u].find_next(v))
                out.emplace_back(u, static_cast<Vertex>(v));
        return out;
    }

    auto operator==(const Graph &) const -> bool = default;

private:
    friend class GraphBuilder;

    std::vector<DynamicBitset> _rows;
    std::vector<Label> _labels;
    std::size_t _edge_count = 0;
};

inline auto GraphBuilder::build() && -> Graph
{
    Graph g;
    std::size_t degree_sum = 0;
    for (auto & r : _rows)
        degree_sum += r.count();
    g._rows = std::move(_rows);
    g._labels = std::move(_labels);
    g._edge_count = degree_sum / 2;
    return g;
}

inline auto check_vertex_set(const Graph & g, const VertexSet & s) -> void
{
    if (! s.empty() && (s.members().front() < 0 || s.members().back() >= g.vertex_count()))
        throw std::out_of_range("vertex set member out of range for a graph on " + std::to_string(g.vertex_count()) + " vertices");
}

// ------------------------------------------------------------------ constructors

inline auto empty_graph(int n) -> Graph
{
    return std::move(GraphBuilder(n)).build();
}

inline auto complete_graph(int n) -> Graph
{
    GraphBuilder b(n);
    for (Vertex u = 0 ; u < n ; ++u)
        for (Vertex v = u + 1 ; v < n ; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

/// Parts are 0..s-1 (labelled A) and s..s+t-1 (labelled B).
inline auto complete_bipartite_graph(int s, int t) -> Graph
{
    GraphBuilder b(s + t);
    for (Vertex u = 0 ; u < s ; ++u) {
        b.set_label(u, Label::a);
        for (Vertex v = s ; v < s + t ; ++v)
            b.add_edge(u, v);
    }
    for (Vertex v = s ; v < s + t ; ++v)
        b.set_label(v, Label::b);
    return std::move(b).build();
}

inline auto path_graph(int n) -> Graph
{
    GraphBuilder b(n);
    for (Vertex v = 0 ; v + 1 < n ; ++v)
        b.add_edge(v, v + 1);
    return std::move(b).build();
}

inline auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0 ; v < n ; ++v)
        b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

inline auto petersen_graph() -> Graph
{
    GraphBuilder b(10);
    for (Vertex v = 0 ; v < 5 ; ++v) {
        b.add_edge(v, (v + 1) % 5);
        b.add_edge(v, v + 5);
        b.add_edge(5 + v, 5 + (v + 2) % 5);
    }
    return std::move(b).build();
}

// ------------------------------------------------------------------ operations

/// Edge uv (u != v) present iff absent in g; labels are kept.
inline auto complement(const Graph & g) -> Graph
{
    const int n = g.vertex_count();
    GraphBuilder b(n);
    for (Vertex u = 0 ; u < n ; ++u) {
        b.set_label(u, g.label(u));
        for (Vertex v = u + 1 ; v < n ; ++v)
            if (! g.adjacent(u, v))
                b.add_edge(u, v);
    }
    return std::move(b).build();
}

struct InducedSubgraph
{
    Graph graph;
    std::vector<Vertex> to_host;    // new index -> host vertex
};

inline auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph
{
    check_vertex_set(g, s);
    const int k = static_cast<int>(s.size());
    GraphBuilder b(k);
    for (int i = 0 ; i < k ; ++i) {
        b.set_label(i, g.label(s[i]));
        for (int j = i + 1 ; j < k ; ++j)
            if (g.adjacent(s[i], s[j]))
                b.add_edge(i, j);
    }
    return InducedSubgraph{ std::move(b).build(), s.members() };
}

inline auto is_clique(const Graph & g, const VertexSet & s) -> bool
{
    check_vertex_set(g, s);
    for (std::size_t i = 0 ; i < s.size() ; ++i)
        for (std::size_t j = i + 1 ; j < s.size() ; ++j)
            if (! g.adjacent(s[i], s[j]))
                return false;
    return true;
}

inline auto non_neighbour_count(const Graph & g, Vertex v) -> int
{
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range("vertex out of range");
    return g.vertex_count() - 1 - g.degree(v);
}

inline auto is_connected(const Graph & g, const VertexSet & s) -> bool
{
    check_vertex_set(g, s);
    if (s.empty())
        return false;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> stack{ s[0] };
    seen[s[0]] = 1;
    std::size_t reached = 1;
    while (! stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : s)
            if (! seen[u] && g.adjacent(u, v)) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == s.size();
}

/// Two hosts identified along a shared clique.  shared[i] = (c1, c2) maps a
/// vertex of g1 onto a vertex of g2; the correspondence must be injective.
struct GlueSpec
{
    const Graph & g1;
    const Graph & g2;
    std::vector<std::pair<Vertex, Vertex>> shared;
};

struct GlueResult
{
    Graph graph;
    std::vector<Vertex> from_g1;    // g1 vertex -> glued index (identity)
    std::vector<Vertex> from_g2;    // g2 vertex -> glued index
};

/// Vertex order of the result: all of g1 in order, then g2 minus the shared
/// set in order.  Labels follow the same rule (g1 wins on shared vertices).
inline auto glue(const GlueSpec & spec) -> GlueResult
{
    const Graph & g1 = spec.g1;
    const Graph & g2 = spec.g2;
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();

    std::vector<Vertex> c1, c2;
    std::vector<Vertex> from_g2(static_cast<std::size_t>(n2), -1);
    std::vector<char> used1(static_cast<std::size_t>(n1), 0);
    for (auto [a, b] : spec.shared) {
        if (a < 0 || a >= n1 || b < 0 || b >= n2)
            throw std::out_of_range("glue correspondence vertex out of range");
        if (used1[a] || from_g2[b] != -1)
            throw std::invalid_argument("glue correspondence is not injective");
        used1[a] = 1;
        from_g2[b] = a;
        c1.push_back(a);
        c2.push_back(b);
    }
    if (! is_clique(g1, VertexSet(c1)))
        throw std::invalid_argument("shared set is not a clique in the first graph");
    if (! is_clique(g2, VertexSet(c2)))
        throw std::invalid_argument("shared set is not a clique in the second graph");

    int next = n1;
    for (Vertex v = 0 ; v < n2 ; ++v)
        if (from_g2[v] == -1)
            from_g2[v] = next++;

    GraphBuilder b(next);
    for (Vertex v = 0 ; v < n1 ; ++v)
        b.set_label(v, g1.label(v));
    for (Vertex v = 0 ; v < n2 ; ++v)
        if (from_g2[v] >= n1)
            b.set_label(from_g2[v], g2.label(v));
    for (auto [u, v] : g1.edges())
        b.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        b.add_edge(from_g2[u], from_g2[v]);

    std::vector<Vertex> from_g1(static_cast<std::size_t>(n1));
    for (Vertex v = 0 ; v < n1 ; ++v)
        from_g1[v] = v;
    return GlueResult{ std::move(b).build(), std::move(from_g1), std::move(from_g2) };
}

/// Relabels vertices: vertex v of g becomes perm[v].
inline auto permute_vertices(const Graph & g, std::span<const Vertex> perm) -> Graph
{
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw std::invalid_argument("permutation size mismatch");
    GraphBuilder b(g.vertex_count());
    for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
        b.set_label(perm[v], g.label(v));
    for (auto [u, v] : g.edges())
        b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

/// Vertex lists of connected components, each sorted, ordered by minimum vertex.
inline auto connected_components(const Graph & g) -> std::vector<VertexSet>
{
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> out;
    for (Vertex root = 0 ; root < n ; ++root) {
        if (seen[root])
            continue;
        std::vector<Vertex> comp{ root }, stack{ root };
        seen[root] = 1;
        while (! stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            g.neighbours(v).for_each([&](std::size_t u) {
                if (! seen[u]) {
                    seen[u] = 1;
                    comp.push_back(static_cast<Vertex>(u));
                    stack.push_back(static_cast<Vertex>(u));
                }
            });
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

}
