#include <listminor/listminor.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#ifndef LISTMINOR_CLI
#error "LISTMINOR_CLI must name the command-line binary"
#endif

using namespace listminor;
namespace fs = std::filesystem;

namespace {

struct Verdict
{
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

auto graph_from_mask(int n, std::uint64_t mask) -> Graph
{
    GraphBuilder b(n);
    int bit = 0;
    for (Vertex u = 0 ; u < n ; ++u)
        for (Vertex v = u + 1 ; v < n ; ++v, ++bit)
            if (mask >> bit & 1)
                b.add_edge(u, v);
    return std::move(b).build();
}

auto minor_oracle_equivalence() -> Verdict
{
    const auto start = Clock::now();
    std::vector<std::pair<int, int>> queries;
    for (int s = 1 ; 2 * s <= 6 ; ++s)
        for (int t = s ; s + t <= 6 ; ++t)
            queries.emplace_back(s, t);
    std::vector<Graph> targets;
    for (auto [s, t] : queries)
        targets.push_back(complete_bipartite_graph(s, t));

    long disagreements = 0, invalid = 0, checks = 0;
    std::string first;
    for (std::uint64_t mask = 0 ; mask < (1u << 15) ; ++mask) {
        auto g = graph_from_mask(6, mask);
        for (std::size_t q = 0 ; q < queries.size() ; ++q) {
            MinorQuery query(queries[q].first, queries[q].second);
            auto r = find_kst_minor(g, query);
            ++checks;
            if (r.exhausted() || r.found() != oracle_has_minor(g, targets[q])) {
                if (disagreements++ == 0)
                    first = "mask " + std::to_string(mask) + " (" + std::to_string(query.s) + "," + std::to_string(query.t) + ")";
            }
            else if (r.found() && ! verify_model(g, r.model(), query))
                ++invalid;
        }
    }
    const double secs = seconds_since(start);
    std::ostringstream d;
    d << checks << " checks, " << disagreements << " disagreements, " << invalid << " invalid models, " << std::fixed << std::setprecision(1) << secs << " s";
    if (! first.empty())
        d << ", first at " << first;
    return { disagreements == 0 && invalid == 0 && secs < 600, d.str() };
}

auto random_with_clique(int n, int clique, double p, std::mt19937_64 & rng) -> Graph
{
    GraphBuilder b(n);
    for (Vertex u = 0 ; u < n ; ++u)
        for (Vertex v = u + 1 ; v < n ; ++v)
            if (v < clique || uniform01(rng) < p)
                b.add_edge(u, v);
    return std::move(b).build();
}

auto minor_free(const Graph & g, const MinorQuery & q) -> bool
{
    auto r = find_kst_minor(g, q);
    if (r.exhausted())
        throw std::runtime_error("minor search exhausted without budget");
    return ! r.found();
}

auto glue_closure() -> Verdict
{
    std::mt19937_64 rng(20240611);
    int violations = 0, instances = 0;
    long rejected = 0;
    std::set<std::tuple<int, int, int>> shapes;
    while (instances < 200) {
        const int s = 1 + static_cast<int>(uniform_below(rng, 3));
        const int t = s + static_cast<int>(uniform_below(rng, 3));
        const int c = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(s)));
        const MinorQuery q(s, t);
        const int n1 = std::max(c + 1, 2 + static_cast<int>(uniform_below(rng, 7)));
        const int n2 = std::max(c + 1, 2 + static_cast<int>(uniform_below(rng, 7)));
        const double p = 0.15 + 0.45 * uniform01(rng);
        auto g1 = random_with_clique(n1, c, p, rng);
        auto g2 = random_with_clique(n2, c, p, rng);
        if (! minor_free(g1, q) || ! minor_free(g2, q)) {
            ++rejected;
            continue;
        }
        // Place the clique of g2 at a random position.
        std::vector<Vertex> perm(static_cast<std::size_t>(n2));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto g2p = permute_vertices(g2, perm);
        GlueSpec spec{ g1, g2p, {} };
        for (Vertex v = 0 ; v < c ; ++v)
            spec.shared.emplace_back(v, perm[v]);
        auto glued = glue(spec);
        ++instances;
        shapes.emplace(s, t, c);
        if (! minor_free(glued.graph, q))
            ++violations;
    }
    std::ostringstream d;
    d << instances << " instances over " << shapes.size() << " (s,t,|C|) shapes, " << rejected << " samples rejected as not minor-free, " << violations << " violations";
    return { violations == 0, d.str() };
}

auto fixture_h() -> Graph
{
    return Graph(4, { { 0, 1 }, { 2, 3 }, { 0, 3 }, { 1, 2 }, { 1, 3 } }, { Label::a, Label::a, Label::b, Label::b });
}

auto gadget_non_colorability() -> Verdict
{
    const auto start = Clock::now();
    auto h = fixture_h();
    auto cx = build_counterexample(h, 3);
    const bool none = ! find_l_coloring(cx.graph, cx.lists).has_value();
    int proper = 0, pigeonhole = 0;
    const auto h_b = h.vertices_labelled(Label::b).members();
    for (std::size_t i = 0 ; i < cx.index.copies.size() ; ++i) {
        const auto & c = cx.index.copies[i].coloring;
        bool is_proper = true;
        for (std::size_t x = 0 ; x < c.size() ; ++x)
            for (std::size_t y = x + 1 ; y < c.size() ; ++y)
                if (c[x] == c[y] && h.adjacent(h_b[x], h_b[y]))
                    is_proper = false;
        if (! is_proper)
            continue;
        ++proper;
        if (verify_no_l_coloring_pigeonhole(h, copy_lists(cx, i, h.vertex_count()), c))
            ++pigeonhole;
    }

    auto k4 = complete_graph(4);
    Graph clique(4, k4.edges(), { Label::a, Label::a, Label::b, Label::b });
    auto cq = build_counterexample(clique, 3);
    const bool clique_none = ! find_l_coloring(cq.graph, cq.lists).has_value();
    const bool clique_pigeonhole = clique.vertex_count() > cq.palette_size;
    const double secs = seconds_since(start);

    std::ostringstream d;
    d << cx.graph.vertex_count() << " vertices, L-colouring " << (none ? "none" : "FOUND") << ", pigeonhole " << pigeonhole << "/" << proper
      << " proper colourings, clique fixture " << (clique_none ? "none" : "FOUND") << ", " << std::fixed << std::setprecision(3) << secs << " s";
    return { cx.graph.vertex_count() == 20 && none && proper == 6 && pigeonhole == 6 && clique_none && clique_pigeonhole && secs < 1.0, d.str() };
}

auto choosability_checker() -> Verdict
{
    const auto start = Clock::now();
    struct Case
    {
        std::string name;
        Graph g;
        int k;
        bool expected;
    };
    std::vector<Case> cases{
        { "C4", cycle_graph(4), 2, true },
        { "C6", cycle_graph(6), 2, true },
        { "C3", cycle_graph(3), 2, false },
        { "C5", cycle_graph(5), 2, false },
        { "K33", complete_bipartite_graph(3, 3), 2, false },
    };
    for (int n = 1 ; n <= 5 ; ++n)
        cases.push_back({ "K" + std::to_string(n), complete_graph(n), n, true });

    // Whole-graph enumeration everywhere except K5, which is decided on its
    // 5-core (empty, since every degree is 4).
    ChoosabilityOptions opts;
    opts.max_k = 5;
    bool ok = true;
    std::ostringstream d;
    for (const auto & c : cases) {
        opts.reduce_core = c.name == "K5";
        auto v = is_k_choosable(c.g, c.k, opts);
        bool good = v.choosable() == c.expected && v.universe_size == static_cast<long long>(c.k) * c.g.vertex_count();
        if (! v.choosable()) {
            const auto & w = v.witness();
            for (const auto & l : w.lists)
                good = good && static_cast<int>(l.size()) == c.k;
            good = good && ! find_l_coloring(c.g, w).has_value();
        }
        ok = ok && good;
        d << c.name << (v.choosable() ? " choosable" : " not") << (good ? "" : " WRONG") << (opts.reduce_core ? " via core" : "") << " after " << v.assignments_checked << ", ";
    }
    const double secs = seconds_since(start);
    d << std::fixed << std::setprecision(1) << secs << " s";
    return { ok && secs < 300, d.str() };
}

using Big = boost::multiprecision::cpp_bin_float_50;

auto bound_formula_fidelity() -> Verdict
{
    const std::array<Rational, 5> epsilons{ Rational(1, 10), Rational(1, 5), Rational(3, 10), Rational(2, 5), Rational(1, 2) };
    const std::array<Rational, 4> cs{ Rational(1), Rational(3, 2), Rational(2), Rational(3) };
    const std::array<double, 5> ns{ 10, 1e3, 1e5, 1e8, 1e12 };
    double worst = 0;
    int points = 0, failed_shape = 0;
    for (const auto & eps : epsilons)
        for (const auto & c : cs) {
            auto p = derive_lemma3_params(eps, c);
            const Big e = Big(eps.numerator()) / eps.denominator();
            const Big cc = Big(c.numerator()) / c.denominator();
            const Big delta = Big(p.delta.numerator()) / p.delta.denominator();
            const Big f = p.f;
            for (double n : ns) {
                const Big nn = n;
                const Big ev = log((cc + 1) * nn + 1) * (cc + 1) * nn - e * e * pow(nn, 2 - f * f * delta);
                const Big dt = log((cc + 1) * nn) - pow(nn, 1 - delta) / 3;
                const double got_ev = event1_bound(n, p);
                const double got_dt = degree_tail_bound(n, to_double(c), to_double(p.delta));
                worst = std::max(worst, static_cast<double>(abs((Big(got_ev) - ev) / ev)));
                worst = std::max(worst, static_cast<double>(abs((Big(got_dt) - dt) / dt)));
                ++points;
            }
            // Eventually negative, then strictly decreasing.
            for (auto fn : { std::function<double(double)>([&](double n) { return event1_bound(n, p); }),
                     std::function<double(double)>([&](double n) { return degree_tail_bound(n, to_double(c), to_double(p.delta)); }) }) {
                bool negative = false, shape = true;
                double prev = 0;
                for (int j = 1 ; j <= 100 ; ++j) {
                    const double v = fn(std::pow(10.0, j));
                    if (negative && ! (v < prev))
                        shape = false;
                    negative = negative || v < 0;
                    prev = v;
                }
                if (! negative || ! shape)
                    ++failed_shape;
            }
        }
    std::ostringstream d;
    d << points << " grid points, worst relative error " << std::scientific << std::setprecision(2) << worst << ", " << failed_shape << " exponent sequences not eventually negative and decreasing";
    return { points == 100 && worst <= 1e-12 && failed_shape == 0, d.str() };
}

auto parameter_arithmetic() -> Verdict
{
    auto p = derive_lemma3_params(Rational(1, 2), Rational(1));
    const bool lemma = p.f == 2 && p.delta == Rational(1, 16) && p.f_squared_delta() == Rational(1, 4);
    auto b = theorem1_bound(10, 10, Rational(2, 5));
    const bool example = b.value == 19 && b.target == Rational(18) && b.holds;

    const Rational eps(2, 5);
    const Rational limit = Rational(1) - eps;
    std::ostringstream d;
    d << "f=" << p.f << " delta=" << to_string(p.delta) << " f^2 delta=" << to_string(p.f_squared_delta()) << ", bound(10,10)=" << b.value << " vs " << to_string(b.target)
      << ", ratios";
    bool within = false;
    double prev_gap = 1e9;
    bool approaching = true;
    for (std::int64_t s : { 100, 1000, 10000 }) {
        auto r = theorem1_bound(s, s, eps);
        const Rational ratio(r.value, 3 * s);
        const double gap = std::abs(to_double(ratio - limit));
        approaching = approaching && gap <= prev_gap;
        prev_gap = gap;
        d << " " << r.value << "/" << 3 * s << "=" << std::fixed << std::setprecision(5) << to_double(ratio);
        if (s == 10000)
            within = gap <= 0.01 * to_double(limit);
    }
    d << " against " << to_string(limit);
    return { lemma && example && approaching && within, d.str() };
}

auto monte_carlo_degree() -> Verdict
{
    const Rational eps(1, 2), c(1), delta(1, 2);
    const std::uint64_t seed = 7;
    std::vector<double> freq;
    std::ostringstream d;
    for (std::int64_t n : { 32, 64, 128 }) {
        int pass = 0;
        for (std::uint64_t trial = 0 ; trial < 200 ; ++trial) {
            auto g = sample_bipartite(n, c, delta, derive_seed(derive_seed(seed, static_cast<std::uint64_t>(n)), trial));
            pass += check_degree_property(g, eps, n).pass;
        }
        freq.push_back(pass / 200.0);
        d << "n=" << n << ": " << pass << "/200, ";
    }
    const bool monotone = freq[0] <= freq[1] && freq[1] <= freq[2];
    d << (monotone ? "monotone" : "not monotone");
    return { monotone && freq[2] >= 0.95, d.str() };
}

struct Run
{
    int status = -1;
    std::string out;
};

auto run_cli(const std::string & args) -> Run
{
    const std::string cmd = std::string("\"") + LISTMINOR_CLI + "\" " + args + " 2>/dev/null";
    Run r;
    FILE * pipe = popen(cmd.c_str(), "r");
    if (! pipe)
        return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

auto determinism() -> Verdict
{
    const auto dir = fs::temp_directory_path() / ("listminor_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto petersen = (dir / "petersen.txt").string();
    const auto k33 = (dir / "k33.txt").string();
    const auto h4 = (dir / "h4.txt").string();
    std::ofstream(petersen) << to_edge_list(petersen_graph());
    std::ofstream(k33) << to_edge_list(complete_bipartite_graph(3, 3));
    std::ofstream(h4) << to_edge_list(fixture_h());

    const std::vector<std::pair<std::string, std::string>> commands{
        { "build-h", "build-h --n 6 --m 8 --eps 9/10 --C 3/2 --delta 1/2 --seed 11 --trials 2000 --format json" },
        { "build-h exhaustive", "build-h --n 4 --m 4 --eps 1/2 --C 1 --delta 1/2 --seed 3 --mode exhaustive --format json" },
        { "experiment csv", "experiment --n 16,32,64 --trials 20 --seed 7 --eps 1/2 --C 1 --delta 1/2 --block-trials 50" },
        { "experiment json", "experiment --n 16,32 --trials 10 --seed 9 --format json" },
        { "check-minor", "check-minor " + petersen + " --s 3 --t 3 --format json" },
        { "check-choosable", "check-choosable " + k33 + " --k 2 --format json" },
        { "build-counterexample", "build-counterexample " + h4 + " --format json" },
    };
    bool ok = true;
    std::ostringstream d;
    for (const auto & [name, args] : commands) {
        const bool threaded = name.rfind("build-counterexample", 0) != 0;
        auto a = run_cli(args + (threaded ? " --threads 1 --deterministic" : ""));
        auto b = run_cli(args + (threaded ? " --threads 1 --deterministic" : ""));
        bool same = a.status == b.status && a.out == b.out && a.status >= 0 && a.status <= 2 && ! a.out.empty();
        if (threaded) {
            auto c = run_cli(args + " --threads 8 --deterministic");
            same = same && c.status == a.status && c.out == a.out;
        }
        ok = ok && same;
        d << name << (same ? " identical" : " DIFFERS") << ", ";
    }
    fs::remove_all(dir);
    d << commands.size() << " commands";
    return { ok, d.str() };
}

}

int main(int argc, char ** argv)
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        { "minor tester agrees with the brute-force oracle on all 6-vertex graphs", minor_oracle_equivalence },
        { "gluing along a clique smaller than s preserves K_{s,t}-minor-freeness", glue_closure },
        { "gadget lists admit no colouring, pigeonhole on every proper colouring", gadget_non_colorability },
        { "choosability checker on cycles, K_{3,3} and complete graphs", choosability_checker },
        { "bound formulas match high-precision closed forms", bound_formula_fidelity },
        { "parameter derivations and bound ratio", parameter_arithmetic },
        { "Monte Carlo degree property frequency", monte_carlo_degree },
        { "CLI reports are reproducible across runs and thread counts", determinism },
    };
    std::set<int> only;
    for (int i = 1 ; i < argc ; ++i)
        only.insert(std::atoi(argv[i]));

    int failures = 0;
    for (std::size_t i = 0 ; i < criteria.size() ; ++i) {
        const int id = static_cast<int>(i) + 1;
        if (! only.empty() && ! only.contains(id))
            continue;
        Verdict v;
        try {
            v = criteria[i].second();
        }
        catch (const std::exception & e) {
            v = { false, std::string("exception: ") + e.what() };
        }
        failures += ! v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first << " (" << v.detail << ")" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
