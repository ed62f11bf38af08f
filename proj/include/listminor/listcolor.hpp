#pragma once

/*
 * List colouring: verification, exact L-colouring search and exact
 * k-choosability.
 *
 * is_k_choosable enumerates adversary list assignments with every list of
 * size exactly k (larger lists only help the colourer).  Such an assignment
 * uses at most k·|V| colours, and colours are interchangeable, so lists are
 * generated with colours numbered in order of first appearance: vertex i
 * draws some old colours plus a block of fresh ones.  This visits each
 * assignment once up to colour renaming.
 *
 * Further reductions keep the answer exact:
 *   - a vertex of degree < k can always be coloured last, so the search
 *     runs on the k-core (G is k-choosable iff its k-core is);
 *   - a vertex whose neighbours all precede it in the enumeration order
 *     only matters through the colours its neighbours hold.  If its list has
 *     a colour none of them hold, it is colourable whatever happens, so
 *     only lists drawn from the neighbours' colours are tried (or a single
 *     fresh list when those colours number fewer than k);
 *   - more generally, if some bad assignment exists then one exists in which
 *     every vertex whose neighbours hold at least k colours in total holds
 *     no colour private to it (swapping a private colour for a neighbour's
 *     keeps the assignment bad and creates no new private colours).  The
 *     condition is checked as soon as a vertex's neighbourhood is complete.
 */

#include <listminor/graph.hpp>
#include <listminor/parallel.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace listminor {

using Color = std::uint32_t;

struct ListAssignment
{
    std::vector<std::vector<Color>> lists;

    ListAssignment() = default;

    explicit ListAssignment(std::vector<std::vector<Color>> l) : lists(std::move(l))
    {
        for (auto & list : lists) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }

    auto size() const -> std::size_t { return lists.size(); }
    auto operator[](std::size_t v) const -> const std::vector<Color> & { return lists[v]; }
    auto operator==(const ListAssignment &) const -> bool = default;

    auto allows(Vertex v, Color c) const -> bool
    {
        return std::binary_search(lists[v].begin(), lists[v].end(), c);
    }
};

struct Coloring
{
    std::vector<Color> colors;

    auto operator==(const Coloring &) const -> bool = default;
};

inline auto verify_coloring(const Graph & g, const ListAssignment & l, const Coloring & c) -> bool
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (l.size() != n || c.colors.size() != n)
        return false;
    for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
        if (! l.allows(v, c.colors[v]))
            return false;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v])
            return false;
    return true;
}

namespace detail {

    /// Backtracking with minimum-remaining-values selection (ties to the
    /// lowest index) and forward checking on neighbours' live lists.
    class ListColoringSolver
    {
    public:
        ListColoringSolver(const std::vector<std::vector<int>> & adj, const std::vector<std::vector<Color>> & lists)
            : _adj(adj), _lists(lists), _n(static_cast<int>(adj.size()))
        {
            _removed.resize(_n);
            _live.resize(_n);
            for (int v = 0 ; v < _n ; ++v) {
                _removed[v].assign(_lists[v].size(), 0);
                _live[v] = static_cast<int>(_lists[v].size());
            }
            _chosen.assign(_n, -1);
        }

        auto solve() -> bool
        {
            for (int v = 0 ; v < _n ; ++v)
                if (_live[v] == 0)
                    return false;
            return expand(1);
        }

        auto coloring() const -> std::vector<Color>
        {
            std::vector<Color> out(_n);
            for (int v = 0 ; v < _n ; ++v)
                out[v] = _lists[v][_chosen[v]];
            return out;
        }

        auto nodes() const -> std::uint64_t { return _nodes; }

    private:
        auto expand(int depth) -> bool
        {
            ++_nodes;
            int best = -1;
            for (int v = 0 ; v < _n ; ++v)
                if (_chosen[v] == -1 && (best == -1 || _live[v] < _live[best]))
                    best = v;
            if (best == -1)
                return true;

            const int v = best;
            for (std::size_t idx = 0 ; idx < _lists[v].size() ; ++idx) {
                if (_removed[v][idx])
                    continue;
                const Color c = _lists[v][idx];
                _chosen[v] = static_cast<int>(idx);
                std::size_t mark = _trail.size();
                bool wipeout = false;
                for (int u : _adj[v]) {
                    if (_chosen[u] != -1)
                        continue;
                    auto it = std::lower_bound(_lists[u].begin(), _lists[u].end(), c);
                    if (it == _lists[u].end() || *it != c)
                        continue;
                    auto j = static_cast<std::size_t>(it - _lists[u].begin());
                    if (_removed[u][j])
                        continue;
                    _removed[u][j] = depth;
                    --_live[u];
                    _trail.emplace_back(u, j);
                    if (_live[u] == 0) {
                        wipeout = true;
                        break;
                    }
                }
                if (! wipeout && expand(depth + 1))
                    return true;
                while (_trail.size() > mark) {
                    auto [u, j] = _trail.back();
                    _trail.pop_back();
                    _removed[u][j] = 0;
                    ++_live[u];
                }
                _chosen[v] = -1;
            }
            return false;
        }

        const std::vector<std::vector<int>> & _adj;
        const std::vector<std::vector<Color>> & _lists;
        int _n;
        std::vector<std::vector<int>> _removed;
        std::vector<int> _live;
        std::vector<int> _chosen;
        std::vector<std::pair<int, std::size_t>> _trail;
        std::uint64_t _nodes = 0;
    };

    inline auto adjacency_lists(const Graph & g) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
        for (auto [u, v] : g.edges()) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }

}

/// Exact search; nullopt means no L-colouring exists.
inline auto find_l_coloring(const Graph & g, const ListAssignment & l) -> std::optional<Coloring>
{
    if (static_cast<int>(l.size()) != g.vertex_count())
        throw std::invalid_argument("list assignment has " + std::to_string(l.size()) + " lists for " + std::to_string(g.vertex_count()) + " vertices");
    auto adj = detail::adjacency_lists(g);
    detail::ListColoringSolver solver(adj, l.lists);
    if (! solver.solve())
        return std::nullopt;
    return Coloring{ solver.coloring() };
}

/// Degeneracy d of g; greedy colouring along the peeling order shows g is
/// (d + 1)-choosable.
inline auto greedy_degeneracy_bound(const Graph & g) -> int
{
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0 ; v < n ; ++v)
        deg[v] = g.degree(v);
    int d = 0;
    for (int step = 0 ; step < n ; ++step) {
        int best = -1;
        for (Vertex v = 0 ; v < n ; ++v)
            if (! gone[v] && (best == -1 || deg[v] < deg[best]))
                best = v;
        d = std::max(d, deg[best]);
        gone[best] = 1;
        g.neighbours(best).for_each([&](std::size_t u) {
            if (! gone[u])
                --deg[u];
        });
    }
    return d;
}

/// Vertices surviving repeated deletion of vertices with degree < k.
inline auto k_core(const Graph & g, int k) -> VertexSet
{
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0 ; v < n ; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < k) {
            gone[v] = 1;
            queue.push_back(v);
        }
    }
    while (! queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        g.neighbours(v).for_each([&](std::size_t u) {
            if (! gone[u] && --deg[u] < k) {
                gone[u] = 1;
                queue.push_back(static_cast<Vertex>(u));
            }
        });
    }
    std::vector<Vertex> out;
    for (Vertex v = 0 ; v < n ; ++v)
        if (! gone[v])
            out.push_back(v);
    return VertexSet(std::move(out));
}

class CapExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct ChoosabilityOptions
{
    int max_vertices = 8;
    int max_k = 3;
    bool reduce_core = true;
    ParallelOptions parallel{};
};

struct Choosable {};
struct NotChoosable { ListAssignment witness; };

struct ChoosabilityVerdict
{
    int k = 0;
    std::variant<Choosable, NotChoosable> outcome;
    /// k·|V|: no assignment with lists of size k needs more colours.
    long long universe_size = 0;
    /// Complete assignments handed to the colouring solver.
    std::uint64_t assignments_checked = 0;

    auto choosable() const -> bool { return std::holds_alternative<Choosable>(outcome); }
    auto witness() const -> const ListAssignment & { return std::get<NotChoosable>(outcome).witness; }
};

namespace detail {

    /// Adversary enumeration over one connected component of the core.
    class AdversaryEnumerator
    {
    public:
        struct Prefix
        {
            std::vector<std::vector<Color>> lists;
            Color used = 0;
        };

        AdversaryEnumerator(const Graph & comp, int k) : _k(k), _n(comp.vertex_count()), _adj(adjacency_lists(comp))
        {
            // Breadth-first order keeps each vertex next to something earlier.
            std::vector<char> seen(static_cast<std::size_t>(_n), 0);
            for (int root = 0 ; root < _n ; ++root) {
                if (seen[root])
                    continue;
                seen[root] = 1;
                std::size_t head = _order.size();
                _order.push_back(root);
                while (head < _order.size()) {
                    int v = _order[head++];
                    for (int u : _adj[v])
                        if (! seen[u]) {
                            seen[u] = 1;
                            _order.push_back(u);
                        }
                }
            }
            _position.assign(_n, 0);
            for (int i = 0 ; i < _n ; ++i)
                _position[_order[i]] = i;
            _closed.assign(_n, 0);
            for (int i = 0 ; i < _n ; ++i)
                _closed[i] = std::all_of(_adj[_order[i]].begin(), _adj[_order[i]].end(), [&](int u) { return _position[u] < i; });
            _closes.assign(_n, {});
            for (int j = 0 ; j < _n ; ++j) {
                int last = -1;
                for (int u : _adj[_order[j]])
                    last = std::max(last, _position[u]);
                if (last > j)
                    _closes[last].push_back(j);
            }
            // Solver works in enumeration order.
            _ordered_adj.resize(_n);
            for (int i = 0 ; i < _n ; ++i)
                for (int u : _adj[_order[i]])
                    _ordered_adj[i].push_back(_position[u]);
        }

        auto size() const -> int { return _n; }
        auto order() const -> const std::vector<int> & { return _order; }

        /// Every canonical prefix of the given depth, in enumeration order.
        auto prefixes(int depth) const -> std::vector<Prefix>
        {
            std::vector<Prefix> out;
            Prefix p;
            collect(p, depth, out);
            return out;
        }

        /// Depth-first search below a prefix; true once a bad assignment is
        /// found (left in witness(), indexed by enumeration position).
        template <typename Cancel>
        auto search(const Prefix & start, const Cancel & cancel) -> bool
        {
            _lists = start.lists;
            _lists.reserve(_n);
            _cancel_poll = [&cancel] { return cancel.cancelled(); };
            _aborted = false;
            return extend(start.used);
        }

        auto witness_in_order() const -> const std::vector<std::vector<Color>> & { return _lists; }
        auto checked() const -> std::uint64_t { return _checked; }
        auto aborted() const -> bool { return _aborted; }

    private:
        template <typename F>
        auto for_each_choice(const std::vector<std::vector<Color>> & lists, Color used, F && f) const -> bool
        {
            const int i = static_cast<int>(lists.size());
            if (_closed[i]) {
                std::vector<Color> pool;
                for (int u : _ordered_adj[i])
                    pool.insert(pool.end(), lists[u].begin(), lists[u].end());
                std::sort(pool.begin(), pool.end());
                pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
                if (static_cast<int>(pool.size()) < _k) {
                    std::vector<Color> fresh(_k);
                    for (int j = 0 ; j < _k ; ++j)
                        fresh[j] = used + static_cast<Color>(j);
                    return f(std::move(fresh), used + static_cast<Color>(_k));
                }
                return for_each_subset(pool, _k, [&](std::vector<Color> list) { return f(std::move(list), used); });
            }

            std::vector<Color> old(used);
            for (Color c = 0 ; c < used ; ++c)
                old[c] = c;
            for (int j = std::min<int>(_k, static_cast<int>(used)) ; j >= 0 ; --j) {
                const int fresh = _k - j;
                bool keep_going = for_each_subset(old, j, [&](std::vector<Color> list) {
                    for (int x = 0 ; x < fresh ; ++x)
                        list.push_back(used + static_cast<Color>(x));
                    return f(std::move(list), used + static_cast<Color>(fresh));
                });
                if (! keep_going)
                    return false;
            }
            return true;
        }

        /// Calls f on each size-r subset of pool in lexicographic order.
        template <typename F>
        static auto for_each_subset(const std::vector<Color> & pool, int r, F && f) -> bool
        {
            const int m = static_cast<int>(pool.size());
            if (r > m)
                return true;
            std::vector<int> idx(r);
            for (int j = 0 ; j < r ; ++j)
                idx[j] = j;
            for (;;) {
                std::vector<Color> list(r);
                for (int j = 0 ; j < r ; ++j)
                    list[j] = pool[idx[j]];
                if (! f(std::move(list)))
                    return false;
                int j = r - 1;
                while (j >= 0 && idx[j] == m - r + j)
                    --j;
                if (j < 0)
                    return true;
                ++idx[j];
                for (int x = j + 1 ; x < r ; ++x)
                    idx[x] = idx[x - 1] + 1;
            }
        }

        /// Checks the vertices whose neighbourhood the newest list completes.
        auto no_private_colours(const std::vector<std::vector<Color>> & lists) const -> bool
        {
            const int i = static_cast<int>(lists.size()) - 1;
            for (int j : _closes[i]) {
                std::vector<Color> pool;
                for (int u : _ordered_adj[j])
                    pool.insert(pool.end(), lists[u].begin(), lists[u].end());
                std::sort(pool.begin(), pool.end());
                pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
                if (static_cast<int>(pool.size()) >= _k && ! std::includes(pool.begin(), pool.end(), lists[j].begin(), lists[j].end()))
                    return false;
            }
            return true;
        }

        auto collect(Prefix & p, int depth, std::vector<Prefix> & out) const -> void
        {
            if (static_cast<int>(p.lists.size()) == depth) {
                out.push_back(p);
                return;
            }
            for_each_choice(p.lists, p.used, [&](std::vector<Color> list, Color used) {
                Prefix next{ p.lists, used };
                next.lists.push_back(std::move(list));
                if (no_private_colours(next.lists))
                    collect(next, depth, out);
                return true;
            });
        }

        /// Returns true when a bad assignment has been completed in _lists.
        auto extend(Color used) -> bool
        {
            if (static_cast<int>(_lists.size()) == _n) {
                ++_checked;
                if ((_checked & 0x3ff) == 0 && _cancel_poll()) {
                    _aborted = true;
                    return false;
                }
                ListColoringSolver solver(_ordered_adj, _lists);
                return ! solver.solve();
            }
            bool found = false;
            for_each_choice(_lists, used, [&](std::vector<Color> list, Color next_used) {
                _lists.push_back(std::move(list));
                if (no_private_colours(_lists) && extend(next_used)) {
                    found = true;
                    return false;
                }
                _lists.pop_back();
                return ! _aborted;
            });
            return found;
        }

        int _k;
        int _n;
        std::vector<std::vector<int>> _adj;
        std::vector<std::vector<int>> _ordered_adj;
        std::vector<int> _order;
        std::vector<int> _position;
        std::vector<char> _closed;
        std::vector<std::vector<int>> _closes;
        std::vector<std::vector<Color>> _lists;
        std::uint64_t _checked = 0;
        std::function<bool()> _cancel_poll;
        bool _aborted = false;
    };

}

inline auto is_k_choosable(const Graph & g, int k, const ChoosabilityOptions & opts = {}) -> ChoosabilityVerdict
{
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    if (g.vertex_count() > opts.max_vertices || k > opts.max_k)
        throw CapExceeded("choosability check refused: instance has " + std::to_string(g.vertex_count()) + " vertices and k=" + std::to_string(k)
                + ", cap is " + std::to_string(opts.max_vertices) + " vertices and k<=" + std::to_string(opts.max_k));

    ChoosabilityVerdict verdict;
    verdict.k = k;
    verdict.universe_size = static_cast<long long>(k) * g.vertex_count();
    verdict.outcome = Choosable{};

    const VertexSet core = opts.reduce_core ? k_core(g, k) : g.all_vertices();
    const auto core_graph = induced_subgraph(g, core);

    for (const auto & comp_local : connected_components(core_graph.graph)) {
        auto comp = induced_subgraph(core_graph.graph, comp_local);
        detail::AdversaryEnumerator probe(comp.graph, k);
        const int depth = std::min(probe.size(), 3);
        auto prefixes = probe.prefixes(depth);

        std::vector<std::vector<std::vector<Color>>> found(prefixes.size());
        std::vector<std::uint64_t> checked(prefixes.size(), 0);
        auto task = [&](std::size_t i, std::uint64_t, const CancelToken & cancel) -> TaskOutcome {
            detail::AdversaryEnumerator e(comp.graph, k);
            bool bad = e.search(prefixes[i], cancel);
            checked[i] = e.checked();
            if (bad)
                found[i] = e.witness_in_order();
            return TaskOutcome{ bad ? TaskStatus::success : (e.aborted() ? TaskStatus::cancelled : TaskStatus::exhausted_search), 0 };
        };
        auto outcome = ordered_search(prefixes.size(), unlimited, opts.parallel, task);
        const std::size_t last = outcome.winner ? *outcome.winner + 1 : prefixes.size();
        for (std::size_t i = 0 ; i < last ; ++i)
            verdict.assignments_checked += checked[i];

        if (outcome.winner) {
            // Lift to g: witness lists on the component, fresh lists elsewhere.
            const auto & lists_in_order = found[*outcome.winner];
            std::vector<std::vector<Color>> lists(static_cast<std::size_t>(g.vertex_count()));
            Color next = 0;
            for (int i = 0 ; i < probe.size() ; ++i) {
                Vertex host = core_graph.to_host[comp.to_host[probe.order()[i]]];
                lists[host] = lists_in_order[i];
                for (Color c : lists_in_order[i])
                    next = std::max(next, c + 1);
            }
            for (auto & list : lists)
                if (list.empty())
                    for (int j = 0 ; j < k ; ++j)
                        list.push_back(next++);
            verdict.outcome = NotChoosable{ ListAssignment(std::move(lists)) };
            return verdict;
        }
    }
    return verdict;
}

inline auto to_json(const ListAssignment & l) -> nlohmann::json
{
    return nlohmann::json{ { "lists", l.lists } };
}

inline auto list_assignment_from_json(const nlohmann::json & j) -> ListAssignment
{
    try {
        std::vector<std::vector<Color>> lists;
        for (const auto & list : j.at("lists")) {
            std::vector<Color> colors;
            for (const auto & c : list) {
                if (! c.is_number_integer() || c.get<long long>() < 0)
                    throw std::invalid_argument("colours must be non-negative integers, got " + c.dump());
                colors.push_back(c.get<Color>());
            }
            lists.push_back(std::move(colors));
        }
        return ListAssignment(std::move(lists));
    }
    catch (const nlohmann::json::exception & e) {
        throw std::invalid_argument(std::string("malformed list assignment JSON: ") + e.what());
    }
}

inline auto to_json(const Coloring & c) -> nlohmann::json
{
    return nlohmann::json{ { "colors", c.colors } };
}

}
