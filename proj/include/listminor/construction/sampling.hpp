#pragma once

/*
 * Random bipartite sampling and the two properties required of the sample:
 * a degree cap and the block-connection property.
 *
 * The block property quantifies over collections of k >= eps n sets; only
 * k = ceil(eps n) is checked, which suffices because any larger collection
 * restricts to one of that size with the same pairs available.
 */

#include <listminor/construction/params.hpp>
#include <listminor/graph.hpp>
#include <listminor/listcolor.hpp>
#include <listminor/parallel.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace listminor {

inline auto edge_probability(std::int64_t n, const Rational & delta) -> double
{
    return std::pow(static_cast<double>(n), -to_double(delta));
}

/// G(floor(Cn), n, n^-delta).  A occupies indices [0, floor(Cn)), B follows.
inline auto sample_bipartite(std::int64_t n, const Rational & c_const, const Rational & delta, std::uint64_t seed) -> Graph
{
    if (n < 2)
        throw std::invalid_argument("n must be at least 2");
    const auto m = floor_of(c_const * Rational(n));
    const double p = edge_probability(n, delta);
    GraphBuilder builder(static_cast<int>(m + n));
    std::mt19937_64 rng(seed);
    for (Vertex a = 0 ; a < m ; ++a)
        for (Vertex b = static_cast<Vertex>(m) ; b < m + n ; ++b)
            if (uniform01(rng) < p)
                builder.add_edge(a, b);
    for (Vertex v = 0 ; v < m + n ; ++v)
        builder.set_label(v, v < m ? Label::a : Label::b);
    return std::move(builder).build();
}

inline auto sample_bipartite(std::int64_t n, const Lemma3Params & params, std::uint64_t seed) -> Graph
{
    return sample_bipartite(n, params.c_const, params.delta, seed);
}

struct DegreeCheck
{
    bool pass = true;
    /// Vertex of maximum degree and that degree; on failure this is the
    /// witness.
    Vertex vertex = -1;
    int max_degree = 0;
};

/// Pass iff every cross degree is at most eps n.
inline auto check_degree_property(const Graph & g, const Rational & epsilon, std::int64_t n) -> DegreeCheck
{
    DegreeCheck out;
    for (Vertex v = 0 ; v < g.vertex_count() ; ++v) {
        int cross = 0;
        g.neighbours(v).for_each([&](std::size_t u) {
            if (g.label(static_cast<Vertex>(u)) != g.label(v))
                ++cross;
        });
        if (out.vertex == -1 || cross > out.max_degree) {
            out.vertex = v;
            out.max_degree = cross;
        }
    }
    out.pass = Rational(out.max_degree) <= epsilon * Rational(n);
    return out;
}

struct BlockWitness
{
    std::vector<VertexSet> xs;
    std::vector<VertexSet> ys;
};

enum class BlockStatus { verified, falsified, unknown_sampled };

struct BlockCheck
{
    BlockStatus status = BlockStatus::verified;
    std::optional<BlockWitness> witness;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
};

enum class BlockMode { exhaustive, sampled };

struct BlockCheckOptions
{
    BlockMode mode = BlockMode::sampled;
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 0;
    /// Exhaustive mode is refused when C(#X candidates, k) * C(#Y candidates, k)
    /// exceeds this.
    double exhaustive_cap = 1e7;
    unsigned threads = 1;
};

inline auto block_k(const Rational & epsilon, std::int64_t n) -> std::int64_t
{
    return ceil_of(epsilon * Rational(n));
}

inline auto fully_joined(const Graph & g, const VertexSet & x, const VertexSet & y) -> bool
{
    for (Vertex a : x.members())
        for (Vertex b : y.members())
            if (! g.adjacent(a, b))
                return false;
    return true;
}

/// True iff w is a collection of k disjoint non-empty sets per side, of size
/// at most f, inside A and B respectively, with no fully joined pair.
inline auto is_block_witness(const Graph & g, const BlockWitness & w, std::int64_t f, std::int64_t k) -> bool
{
    if (static_cast<std::int64_t>(w.xs.size()) != k || static_cast<std::int64_t>(w.ys.size()) != k)
        return false;
    auto side_ok = [&](const std::vector<VertexSet> & sets, Label side) {
        std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
        for (const auto & s : sets) {
            if (s.members().empty() || static_cast<std::int64_t>(s.members().size()) > f)
                return false;
            for (Vertex v : s.members()) {
                if (v < 0 || v >= g.vertex_count() || g.label(v) != side || used[v])
                    return false;
                used[v] = 1;
            }
        }
        return true;
    };
    if (! side_ok(w.xs, Label::a) || ! side_ok(w.ys, Label::b))
        return false;
    for (const auto & x : w.xs)
        for (const auto & y : w.ys)
            if (fully_joined(g, x, y))
                return false;
    return true;
}

namespace detail {

    inline auto subsets_up_to(const std::vector<Vertex> & side, std::int64_t f) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> out;
        std::vector<Vertex> cur;
        auto rec = [&](auto & self, std::size_t from) -> void {
            if (! cur.empty())
                out.push_back(cur);
            if (static_cast<std::int64_t>(cur.size()) == f)
                return;
            for (std::size_t i = from ; i < side.size() ; ++i) {
                cur.push_back(side[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    }

    inline auto log_binomial(double n, double k) -> double
    {
        if (k < 0 || k > n)
            return -INFINITY;
        return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
    }

    class BlockFalsifier
    {
    public:
        BlockFalsifier(const Graph & g, std::vector<std::vector<Vertex>> xs, std::vector<std::vector<Vertex>> ys, std::int64_t k)
            : _g(g), _xs(std::move(xs)), _ys(std::move(ys)), _k(k)
        {
            _joined.assign(_xs.size(), std::vector<char>(_ys.size(), 0));
            for (std::size_t i = 0 ; i < _xs.size() ; ++i)
                for (std::size_t j = 0 ; j < _ys.size() ; ++j)
                    _joined[i][j] = fully_joined(_g, VertexSet(_xs[i]), VertexSet(_ys[j]));
            _used.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        }

        auto run() -> std::optional<BlockWitness>
        {
            if (pick_x(0))
                return BlockWitness{ sets(_xs, _chosen_x), sets(_ys, _chosen_y) };
            return std::nullopt;
        }

    private:
        static auto sets(const std::vector<std::vector<Vertex>> & all, const std::vector<std::size_t> & idx) -> std::vector<VertexSet>
        {
            std::vector<VertexSet> out;
            for (auto i : idx)
                out.emplace_back(all[i]);
            return out;
        }

        auto disjoint_from_used(const std::vector<Vertex> & s) const -> bool
        {
            for (Vertex v : s)
                if (_used[v])
                    return false;
            return true;
        }

        auto mark(const std::vector<Vertex> & s, char value) -> void
        {
            for (Vertex v : s)
                _used[v] = value;
        }

        auto pick_x(std::size_t from) -> bool
        {
            if (static_cast<std::int64_t>(_chosen_x.size()) == _k)
                return pick_y(0);
            for (std::size_t i = from ; i < _xs.size() ; ++i) {
                if (! disjoint_from_used(_xs[i]))
                    continue;
                _chosen_x.push_back(i);
                mark(_xs[i], 1);
                bool done = pick_x(i + 1);
                mark(_xs[i], 0);
                if (done)
                    return true;
                _chosen_x.pop_back();
            }
            return false;
        }

        auto pick_y(std::size_t from) -> bool
        {
            if (static_cast<std::int64_t>(_chosen_y.size()) == _k)
                return true;
            for (std::size_t j = from ; j < _ys.size() ; ++j) {
                if (! disjoint_from_used(_ys[j]))
                    continue;
                bool clash = false;
                for (auto i : _chosen_x)
                    if (_joined[i][j]) {
                        clash = true;
                        break;
                    }
                if (clash)
                    continue;
                _chosen_y.push_back(j);
                mark(_ys[j], 1);
                bool done = pick_y(j + 1);
                mark(_ys[j], 0);
                if (done)
                    return true;
                _chosen_y.pop_back();
            }
            return false;
        }

        const Graph & _g;
        std::vector<std::vector<Vertex>> _xs, _ys;
        std::int64_t _k;
        std::vector<std::vector<char>> _joined;
        std::vector<char> _used;
        std::vector<std::size_t> _chosen_x, _chosen_y;
    };

    /// k disjoint sets of random sizes in [1, f] drawn from a shuffled side.
    inline auto random_collection(std::vector<Vertex> side, std::int64_t k, std::int64_t f, std::mt19937_64 & rng) -> std::vector<VertexSet>
    {
        for (std::size_t i = side.size() ; i > 1 ; --i)
            std::swap(side[i - 1], side[uniform_below(rng, i)]);
        std::vector<VertexSet> out;
        std::size_t pos = 0;
        for (std::int64_t i = 0 ; i < k ; ++i) {
            auto remaining = static_cast<std::int64_t>(side.size() - pos);
            std::int64_t largest = std::min(f, remaining - (k - 1 - i));
            auto size = 1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(largest)));
            out.emplace_back(std::vector<Vertex>(side.begin() + static_cast<std::ptrdiff_t>(pos), side.begin() + static_cast<std::ptrdiff_t>(pos + size)));
            pos += static_cast<std::size_t>(size);
        }
        return out;
    }

}

inline auto check_block_property(const Graph & g, std::int64_t f, const Rational & epsilon, std::int64_t n, const BlockCheckOptions & opts = {}) -> BlockCheck
{
    const std::int64_t k = block_k(epsilon, n);
    const auto a_side = g.vertices_labelled(Label::a).members();
    const auto b_side = g.vertices_labelled(Label::b).members();
    BlockCheck out;
    if (k < 1 || k > static_cast<std::int64_t>(a_side.size()) || k > static_cast<std::int64_t>(b_side.size())) {
        // No collection of k disjoint non-empty sets exists on some side.
        out.status = BlockStatus::verified;
        return out;
    }

    if (opts.mode == BlockMode::exhaustive) {
        auto xs = detail::subsets_up_to(a_side, f);
        auto ys = detail::subsets_up_to(b_side, f);
        const double log_size = detail::log_binomial(static_cast<double>(xs.size()), static_cast<double>(k))
            + detail::log_binomial(static_cast<double>(ys.size()), static_cast<double>(k));
        if (log_size > std::log(opts.exhaustive_cap))
            throw CapExceeded("exhaustive block check refused: about " + std::to_string(std::exp(log_size)) + " collections exceed the cap of " + std::to_string(opts.exhaustive_cap));
        detail::BlockFalsifier search(g, std::move(xs), std::move(ys), k);
        out.witness = search.run();
        out.status = out.witness ? BlockStatus::falsified : BlockStatus::verified;
        return out;
    }

    std::vector<std::optional<BlockWitness>> failed(opts.trials);
    parallel_for(opts.trials, opts.threads, [&](std::size_t trial) {
        std::mt19937_64 rng(derive_seed(opts.seed, trial));
        BlockWitness w{ detail::random_collection(a_side, k, f, rng), detail::random_collection(b_side, k, f, rng) };
        for (const auto & x : w.xs)
            for (const auto & y : w.ys)
                if (fully_joined(g, x, y))
                    return;
        failed[trial] = std::move(w);
    });
    out.trials = opts.trials;
    for (auto & w : failed)
        if (w) {
            ++out.failures;
            if (! out.witness)
                out.witness = std::move(w);
        }
    out.status = out.witness ? BlockStatus::falsified : BlockStatus::unknown_sampled;
    return out;
}

struct SampleReport
{
    std::uint64_t seed = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    double p = 0;
    Rational delta;
    DegreeCheck degree;
    BlockCheck blocks;
};

inline auto block_status_name(BlockStatus s) -> const char *
{
    switch (s) {
        case BlockStatus::verified: return "verified";
        case BlockStatus::falsified: return "falsified";
        case BlockStatus::unknown_sampled: return "unknown_sampled";
    }
    return "?";
}

inline auto to_json(const BlockWitness & w) -> nlohmann::json
{
    auto side = [](const std::vector<VertexSet> & sets) {
        auto arr = nlohmann::json::array();
        for (const auto & s : sets)
            arr.push_back(s.members());
        return arr;
    };
    return nlohmann::json{ { "X", side(w.xs) }, { "Y", side(w.ys) } };
}

inline auto to_json(const SampleReport & r) -> nlohmann::json
{
    nlohmann::json j{
        { "seed", r.seed },
        { "n", r.n },
        { "m", r.m },
        { "p", r.p },
        { "delta", to_string(r.delta) },
        { "degree", { { "status", r.degree.pass ? "pass" : "fail" }, { "vertex", r.degree.vertex }, { "max_degree", r.degree.max_degree } } },
        { "blocks", { { "status", block_status_name(r.blocks.status) }, { "trials", r.blocks.trials }, { "failures", r.blocks.failures } } },
    };
    if (r.blocks.witness)
        j["blocks"]["witness"] = to_json(*r.blocks.witness);
    return j;
}

inline constexpr const char * sample_csv_header = "n,seed,p,max_degree,degree_pass,block_status,block_failures,trials";

inline auto to_csv_row(const SampleReport & r) -> std::string
{
    std::ostringstream out;
    out.precision(17);
    out << r.n << ',' << r.seed << ',' << r.p << ',' << r.degree.max_degree << ',' << (r.degree.pass ? 1 : 0) << ','
        << block_status_name(r.blocks.status) << ',' << r.blocks.failures << ',' << r.blocks.trials;
    return out.str();
}

/// Samples one graph and runs both property checks on it.
inline auto sample_and_check(std::int64_t n, const Lemma3Params & params, const Rational & delta, std::uint64_t seed, BlockCheckOptions block) -> std::pair<Graph, SampleReport>
{
    auto g = sample_bipartite(n, params.c_const, delta, seed);
    SampleReport r;
    r.seed = seed;
    r.n = n;
    r.m = floor_of(params.c_const * Rational(n));
    r.p = edge_probability(n, delta);
    r.delta = delta;
    r.degree = check_degree_property(g, params.epsilon, n);
    block.seed = derive_seed(seed, 0xb10c);
    r.blocks = check_block_property(g, params.f, params.epsilon, n, block);
    return { std::move(g), std::move(r) };
}

}
