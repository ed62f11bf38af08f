#pragma once

/*
 * Exact K_{s,t}-minor detection with certificates.
 *
 * A model is a family of disjoint non-empty connected branch sets, s on one
 * side and t on the other, with an edge between every cross pair.
 *
 * find_kst_minor works per connected component.  Inside a connected host
 * any model can be grown until it covers every vertex (absorb an unused
 * vertex into an adjacent branch set), so the search only looks at
 * partitions of the component into s + t connected parts.  Branch sets are
 * built one at a time: the next set always contains the lowest undecided
 * vertex, which orders sets by minimum vertex and removes the permutation
 * symmetry inside each side.
 *
 * Before searching, the component is reduced with two rules that preserve
 * the answer:
 *   - for s >= 2 a vertex of degree <= 1 is deleted;
 *   - for s >= 3 a vertex of degree 2 is contracted into a neighbour.
 * Both follow from K_{s,t} having minimum degree s.
 */

#include <listminor/graph.hpp>
#include <listminor/parallel.hpp>

#include <json.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace listminor {

inline constexpr int max_minor_host_vertices = 64;
inline constexpr int max_oracle_host_vertices = 9;

struct MinorQuery
{
    int s;
    int t;

    MinorQuery(int s_, int t_) : s(s_), t(t_)
    {
        if (s < 1 || t < s)
            throw std::invalid_argument("minor query needs 1 <= s <= t, got s=" + std::to_string(s) + " t=" + std::to_string(t));
    }
};

struct BranchModel
{
    std::vector<VertexSet> side1;
    std::vector<VertexSet> side2;

    auto operator==(const BranchModel &) const -> bool = default;
};

struct ModelCheck
{
    bool ok = true;
    std::string diagnostic;     // first violated clause, empty when ok

    explicit operator bool() const { return ok; }
};

inline auto check_model(const Graph & g, const BranchModel & m, const MinorQuery & q) -> ModelCheck
{
    auto fail = [](std::string why) { return ModelCheck{ false, std::move(why) }; };

    if (static_cast<int>(m.side1.size()) != q.s)
        return fail("side1 has " + std::to_string(m.side1.size()) + " sets, expected " + std::to_string(q.s));
    if (static_cast<int>(m.side2.size()) != q.t)
        return fail("side2 has " + std::to_string(m.side2.size()) + " sets, expected " + std::to_string(q.t));

    std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<const VertexSet *> all;
    for (auto & z : m.side1)
        all.push_back(&z);
    for (auto & z : m.side2)
        all.push_back(&z);

    for (std::size_t i = 0 ; i < all.size() ; ++i) {
        const VertexSet & z = *all[i];
        if (z.empty())
            return fail("branch set " + std::to_string(i) + " is empty");
        for (Vertex v : z) {
            if (v < 0 || v >= g.vertex_count())
                return fail("branch set " + std::to_string(i) + " has out-of-range vertex " + std::to_string(v));
            if (owner[v] != -1)
                return fail("vertex " + std::to_string(v) + " lies in branch sets " + std::to_string(owner[v]) + " and " + std::to_string(i));
            owner[v] = static_cast<int>(i);
        }
        if (! is_connected(g, z))
            return fail("branch set " + std::to_string(i) + " does not induce a connected subgraph");
    }

    for (std::size_t i = 0 ; i < m.side1.size() ; ++i)
        for (std::size_t j = 0 ; j < m.side2.size() ; ++j) {
            bool linked = false;
            for (Vertex u : m.side1[i]) {
                for (Vertex v : m.side2[j])
                    if (g.adjacent(u, v)) {
                        linked = true;
                        break;
                    }
                if (linked)
                    break;
            }
            if (! linked)
                return fail("no edge between side1 set " + std::to_string(i) + " and side2 set " + std::to_string(j));
        }
    return {};
}

inline auto verify_model(const Graph & g, const BranchModel & m, const MinorQuery & q) -> bool
{
    return check_model(g, m, q).ok;
}

struct MinorFound { BranchModel model; };
struct MinorNotFound {};
struct MinorBudgetExhausted {};

struct MinorSearchResult
{
    std::variant<MinorFound, MinorNotFound, MinorBudgetExhausted> outcome;
    std::uint64_t nodes = 0;

    auto found() const -> bool { return std::holds_alternative<MinorFound>(outcome); }
    auto not_found() const -> bool { return std::holds_alternative<MinorNotFound>(outcome); }
    auto exhausted() const -> bool { return std::holds_alternative<MinorBudgetExhausted>(outcome); }
    auto model() const -> const BranchModel & { return std::get<MinorFound>(outcome).model; }
};

struct MinorSearchOptions
{
    /// Search-node expansions; unlimited by default.
    std::uint64_t budget = unlimited;
    ParallelOptions parallel{};
};

namespace detail {

    using Mask = std::uint64_t;

    inline auto bit(int v) -> Mask { return Mask{1} << v; }
    inline auto popcount(Mask m) -> int { return std::popcount(m); }
    inline auto lowest(Mask m) -> int { return std::countr_zero(m); }

    /// Connected host with each working vertex standing for a set of
    /// original vertices (after contractions).
    struct MinorHost
    {
        std::vector<Mask> adj;
        std::vector<Mask> origin;

        auto size() const -> int { return static_cast<int>(adj.size()); }

        auto edge_count() const -> int
        {
            int d = 0;
            for (auto a : adj)
                d += popcount(a);
            return d / 2;
        }

        auto neighbourhood(Mask z) const -> Mask
        {
            Mask out = 0;
            for (Mask r = z ; r ; r &= r - 1)
                out |= adj[lowest(r)];
            return out & ~z;
        }

        auto component_of(int v, Mask within) const -> Mask
        {
            Mask comp = bit(v), frontier = bit(v);
            while (frontier) {
                Mask next = 0;
                for (Mask r = frontier ; r ; r &= r - 1)
                    next |= adj[lowest(r)];
                next &= within & ~comp;
                comp |= next;
                frontier = next;
            }
            return comp;
        }

        auto component_count(Mask within) const -> int
        {
            int c = 0;
            while (within) {
                within &= ~component_of(lowest(within), within);
                ++c;
            }
            return c;
        }
    };

    /// Applies the degree reductions until none fires; returns a compacted host.
    inline auto reduce_for_query(MinorHost h, const MinorQuery & q) -> MinorHost
    {
        const int n = h.size();
        Mask alive = n == 64 ? ~Mask{0} : bit(n) - 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0 ; v < n ; ++v) {
                if (! (alive & bit(v)))
                    continue;
                int d = popcount(h.adj[v]);
                if (q.s >= 2 && d <= 1) {
                    for (Mask r = h.adj[v] ; r ; r &= r - 1)
                        h.adj[lowest(r)] &= ~bit(v);
                    h.adj[v] = 0;
                    alive &= ~bit(v);
                    changed = true;
                }
                else if (q.s >= 3 && d == 2) {
                    int u = lowest(h.adj[v]);
                    int w = lowest(h.adj[v] & ~bit(u));
                    h.origin[u] |= h.origin[v];
                    h.adj[u] &= ~bit(v);
                    h.adj[w] &= ~bit(v);
                    h.adj[u] |= bit(w);
                    h.adj[w] |= bit(u);
                    h.adj[v] = 0;
                    alive &= ~bit(v);
                    changed = true;
                }
            }
        }

        std::vector<int> index(static_cast<std::size_t>(n), -1);
        MinorHost out;
        for (int v = 0 ; v < n ; ++v)
            if (alive & bit(v)) {
                index[v] = out.size();
                out.adj.push_back(0);
                out.origin.push_back(h.origin[v]);
            }
        for (int v = 0 ; v < n ; ++v)
            if (index[v] != -1)
                for (Mask r = h.adj[v] ; r ; r &= r - 1)
                    out.adj[index[v]] |= bit(index[lowest(r)]);
        return out;
    }

    struct ClosedSet
    {
        Mask members;
        Mask neighbours;
        int side;       // 0 or 1
    };

    class PartitionSearch
    {
    public:
        PartitionSearch(const MinorHost & host, const MinorQuery & q) : _h(host), _q(q) {}

        /// All (set, side) choices for the branch set holding vertex 0, in
        /// search order.  Returns false if more than limit choices exist.
        auto root_choices(std::size_t limit, std::vector<std::pair<Mask, int>> & out, std::uint64_t & nodes) -> bool
        {
            const int k = _h.size();
            const Mask all = k == 64 ? ~Mask{0} : bit(k) - 1;
            const int cap = k - (_q.s + _q.t - 1);
            bool overflow = false;
            enumerate_connected(bit(0), 0, all, cap, nodes, [&](Mask z) {
                for (int side = 0 ; side < 2 ; ++side) {
                    if (side == 1 && _q.s == _q.t)
                        break;
                    if (out.size() >= limit) {
                        overflow = true;
                        return false;
                    }
                    out.emplace_back(z, side);
                }
                return true;
            });
            return ! overflow;
        }

        /// Runs the subtree below placing z on side; stops at node_cap.
        template <typename Cancel>
        auto run_from(Mask z, int side, std::uint64_t node_cap, const Cancel & cancel) -> TaskOutcome
        {
            _nodes = 0;
            _cap = node_cap;
            _cancel = [&cancel] { return cancel.cancelled(); };
            _aborted = _out_of_budget = false;
            _closed.clear();
            const int k = _h.size();
            const Mask all = k == 64 ? ~Mask{0} : bit(k) - 1;
            bool ok = place(z, side, all, _q.s, _q.t);
            if (_out_of_budget)
                return TaskOutcome{ TaskStatus::out_of_budget, _nodes };
            if (_aborted)
                return TaskOutcome{ TaskStatus::cancelled, _nodes };
            return TaskOutcome{ ok ? TaskStatus::success : TaskStatus::exhausted_search, _nodes };
        }

        /// Runs the entire search without a root split.
        template <typename Cancel>
        auto run_all(std::uint64_t node_cap, const Cancel & cancel) -> TaskOutcome
        {
            _nodes = 0;
            _cap = node_cap;
            _cancel = [&cancel] { return cancel.cancelled(); };
            _aborted = _out_of_budget = false;
            _closed.clear();
            const int k = _h.size();
            const Mask all = k == 64 ? ~Mask{0} : bit(k) - 1;
            bool ok = next_set(all, _q.s, _q.t);
            if (_out_of_budget)
                return TaskOutcome{ TaskStatus::out_of_budget, _nodes };
            if (_aborted)
                return TaskOutcome{ TaskStatus::cancelled, _nodes };
            return TaskOutcome{ ok ? TaskStatus::success : TaskStatus::exhausted_search, _nodes };
        }

        auto solution() const -> const std::vector<ClosedSet> & { return _closed; }

    private:
        auto tick() -> bool
        {
            if (++_nodes > _cap) {
                _out_of_budget = true;
                return false;
            }
            if ((_nodes & 0xfff) == 0 && _cancel()) {
                _aborted = true;
                return false;
            }
            return true;
        }

        auto halted() const -> bool { return _out_of_budget || _aborted; }

        /// Enumerates every connected set containing z, within allowed and of
        /// size at most cap, each exactly once.  visit returns false to stop.
        template <typename Visit>
        auto enumerate_connected(Mask z, Mask excluded, Mask allowed, int cap, std::uint64_t & nodes, Visit && visit) -> bool
        {
            ++nodes;
            Mask frontier = popcount(z) >= cap ? 0 : (_h.neighbourhood(z) & allowed & ~excluded);
            if (! frontier)
                return visit(z);
            Mask w = frontier & -frontier;
            if (! enumerate_connected(z, excluded | w, allowed, cap, nodes, visit))
                return false;
            return enumerate_connected(z | w, excluded, allowed, cap, nodes, visit);
        }

        auto enumerate_sets(Mask z, Mask excluded, Mask allowed, int cap, Mask undecided, int r1, int r2) -> bool
        {
            if (! tick())
                return false;
            Mask frontier = popcount(z) >= cap ? 0 : (_h.neighbourhood(z) & allowed & ~excluded);
            if (! frontier) {
                for (int side = 0 ; side < 2 ; ++side) {
                    if ((side == 0 ? r1 : r2) == 0)
                        continue;
                    if (place(z, side, undecided, r1, r2))
                        return true;
                    if (halted())
                        return false;
                }
                return false;
            }
            Mask w = frontier & -frontier;
            if (enumerate_sets(z, excluded | w, allowed, cap, undecided, r1, r2))
                return true;
            if (halted())
                return false;
            return enumerate_sets(z | w, excluded, allowed, cap, undecided, r1, r2);
        }

        /// Closes z on side, checks every necessary condition, and recurses.
        auto place(Mask z, int side, Mask undecided, int r1, int r2) -> bool
        {
            if (! tick())
                return false;
            Mask zn = _h.neighbourhood(z);
            for (const auto & c : _closed)
                if (c.side != side && ! (zn & c.members))
                    return false;

            (side == 0 ? r1 : r2) -= 1;
            Mask rest = undecided & ~z;
            _closed.push_back(ClosedSet{ z, zn, side });

            if (r1 == 0 && r2 == 0)
                return true;

            bool feasible = popcount(rest) >= r1 + r2;
            for (const auto & c : _closed) {
                if (! feasible)
                    break;
                int need = c.side == 0 ? r2 : r1;
                if (popcount(c.neighbours & rest) < need)
                    feasible = false;
            }
            if (feasible && _h.component_count(rest) > r1 + r2)
                feasible = false;

            if (feasible && next_set(rest, r1, r2))
                return true;
            _closed.pop_back();
            return false;
        }

        auto next_set(Mask undecided, int r1, int r2) -> bool
        {
            int seed = lowest(undecided);
            Mask comp = _h.component_of(seed, undecided);
            int cap = popcount(undecided) - (r1 + r2 - 1);
            return enumerate_sets(bit(seed), 0, comp, cap, undecided, r1, r2);
        }

        const MinorHost & _h;
        MinorQuery _q;
        std::vector<ClosedSet> _closed;
        std::uint64_t _nodes = 0, _cap = unlimited;
        std::function<bool()> _cancel;
        bool _aborted = false, _out_of_budget = false;
    };

    inline auto to_original(const MinorHost & h, Mask z) -> VertexSet
    {
        Mask orig = 0;
        for (Mask r = z ; r ; r &= r - 1)
            orig |= h.origin[lowest(r)];
        std::vector<Vertex> out;
        for (Mask r = orig ; r ; r &= r - 1)
            out.push_back(lowest(r));
        return VertexSet(std::move(out));
    }

    inline constexpr std::size_t max_root_tasks = std::size_t{1} << 14;

}

inline auto find_kst_minor(const Graph & g, const MinorQuery & q, const MinorSearchOptions & opts = {}) -> MinorSearchResult
{
    using namespace detail;

    if (g.vertex_count() > max_minor_host_vertices)
        throw std::invalid_argument("exact minor search supports hosts of at most " + std::to_string(max_minor_host_vertices) + " vertices");

    MinorSearchResult result{ MinorNotFound{}, 0 };
    if (g.vertex_count() < q.s + q.t)
        return result;

    for (const auto & comp : connected_components(g)) {
        if (static_cast<int>(comp.size()) < q.s + q.t)
            continue;

        MinorHost h;
        std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
        for (std::size_t i = 0 ; i < comp.size() ; ++i)
            local[comp[i]] = static_cast<int>(i);
        for (Vertex v : comp) {
            Mask row = 0;
            g.neighbours(v).for_each([&](std::size_t u) { row |= bit(local[u]); });
            h.adj.push_back(row);
            h.origin.push_back(bit(v));
        }

        MinorHost r = reduce_for_query(std::move(h), q);
        const int k = r.size();
        if (k < q.s + q.t || r.edge_count() < q.s * q.t + k - q.s - q.t)
            continue;
        // Reductions keep the host connected, so one search covers it.

        const std::uint64_t remaining = opts.budget == unlimited ? unlimited : opts.budget - result.nodes;

        std::vector<std::pair<Mask, int>> roots;
        std::uint64_t root_nodes = 0;
        PartitionSearch probe(r, q);
        bool split = probe.root_choices(max_root_tasks, roots, root_nodes);
        if (! split)
            roots.clear(), root_nodes = 0;

        if (root_nodes > remaining) {
            result.nodes = opts.budget;
            result.outcome = MinorBudgetExhausted{};
            return result;
        }

        std::vector<std::vector<ClosedSet>> solutions(split ? roots.size() : 1);

        auto task = [&](std::size_t i, std::uint64_t cap, const CancelToken & cancel) -> TaskOutcome {
            PartitionSearch search(r, q);
            TaskOutcome out = split ? search.run_from(roots[i].first, roots[i].second, cap, cancel)
                                    : search.run_all(cap, cancel);
            if (out.status == TaskStatus::success)
                solutions[i] = search.solution();
            return out;
        };

        const std::uint64_t task_budget = remaining == unlimited ? unlimited : remaining - root_nodes;
        auto outcome = ordered_search(split ? roots.size() : 1, task_budget, opts.parallel, task);
        result.nodes += root_nodes + outcome.nodes;

        if (outcome.winner) {
            BranchModel model;
            for (const auto & c : solutions[*outcome.winner])
                (c.side == 0 ? model.side1 : model.side2).push_back(to_original(r, c.members));
            result.outcome = MinorFound{ std::move(model) };
            return result;
        }
        if (outcome.out_of_budget) {
            result.nodes = opts.budget;
            result.outcome = MinorBudgetExhausted{};
            return result;
        }
    }
    return result;
}

/// Exact minor test by exhaustive assignment of host vertices to the
/// vertices of f plus an "unused" class.  Independent of find_kst_minor;
/// only used as a correctness oracle on hosts of at most 9 vertices.
inline auto oracle_has_minor(const Graph & g, const Graph & f) -> bool
{
    const int n = g.vertex_count();
    const int r = f.vertex_count();
    if (n > max_oracle_host_vertices)
        throw std::invalid_argument("oracle_has_minor accepts hosts of at most " + std::to_string(max_oracle_host_vertices) + " vertices");
    if (r == 0)
        return true;
    if (r > n)
        return false;

    const unsigned subsets = 1u << n;
    std::vector<unsigned> nbr(subsets, 0);
    std::vector<char> connected(subsets, 0);
    for (unsigned m = 1 ; m < subsets ; ++m) {
        int low = std::countr_zero(m);
        nbr[m] = nbr[m & (m - 1)] | static_cast<unsigned>(g.neighbours(low).first_word());
        unsigned reach = 1u << low, grow = reach;
        while (grow) {
            unsigned next = 0;
            for (unsigned x = grow ; x ; x &= x - 1)
                next |= static_cast<unsigned>(g.neighbours(std::countr_zero(x)).first_word());
            next &= m & ~reach;
            reach |= next;
            grow = next;
        }
        connected[m] = reach == m;
    }

    const auto f_edges = f.edges();
    std::vector<unsigned> cls(static_cast<std::size_t>(r) + 1, 0);

    auto check = [&]() {
        for (int i = 0 ; i < r ; ++i)
            if (! connected[cls[i]])
                return false;
        for (auto [a, b] : f_edges)
            if (! (nbr[cls[a]] & cls[b]))
                return false;
        return true;
    };

    // Odometer over (r + 1)^n assignments.
    std::vector<int> digit(static_cast<std::size_t>(n), r);
    cls[r] = subsets - 1;
    for (;;) {
        if (check())
            return true;
        int v = 0;
        for ( ; v < n ; ++v) {
            cls[digit[v]] &= ~(1u << v);
            digit[v] = digit[v] == r ? 0 : digit[v] + 1;
            cls[digit[v]] |= 1u << v;
            if (digit[v] != r)
                break;
        }
        if (v == n)
            return false;
    }
}

inline auto to_json(const BranchModel & m) -> nlohmann::json
{
    auto sides = [](const std::vector<VertexSet> & sets) {
        auto arr = nlohmann::json::array();
        for (const auto & z : sets)
            arr.push_back(z.members());
        return arr;
    };
    return nlohmann::json{ { "side1", sides(m.side1) }, { "side2", sides(m.side2) } };
}

inline auto branch_model_from_json(const nlohmann::json & j) -> BranchModel
{
    try {
        BranchModel m;
        for (const auto & z : j.at("side1"))
            m.side1.emplace_back(z.get<std::vector<Vertex>>());
        for (const auto & z : j.at("side2"))
            m.side2.emplace_back(z.get<std::vector<Vertex>>());
        return m;
    }
    catch (const nlohmann::json::exception & e) {
        throw std::invalid_argument(std::string("malformed branch model JSON: ") + e.what());
    }
}

}
