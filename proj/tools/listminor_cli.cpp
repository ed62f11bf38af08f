// listminor: command-line front end.
//
// Exit codes: 0 positive outcome, 1 negative outcome, 2 inconclusive or
// refused by a cap, 3 usage error, 4 input/output error.

#include <listminor/listminor.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace listminor;
using json = nlohmann::json;

namespace {

enum ExitCode { exit_positive = 0, exit_negative = 1, exit_inconclusive = 2, exit_usage = 3, exit_io = 4 };

struct UsageError : std::runtime_error { using std::runtime_error::runtime_error; };
struct IoError : std::runtime_error { using std::runtime_error::runtime_error; };

struct OutputOptions
{
    std::string format = "human";
    std::string out;
};

struct ParallelFlags
{
    unsigned threads = 1;
    bool deterministic = false;

    auto options() const -> ParallelOptions { return ParallelOptions{ threads, deterministic }; }
};

auto read_text(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

auto write_text(const std::string & path, const std::string & text) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out || ! (out << text))
        throw IoError("cannot write '" + path + "'");
}

auto load_graph(const std::string & path) -> Graph
{
    auto text = read_text(path);
    try {
        auto parsed = parse_graph(text);
        for (const auto & w : parsed.warnings)
            std::cerr << path << ": line " << w.line << ": warning: " << w.message << '\n';
        return std::move(parsed.graph);
    }
    catch (const ParseError & e) {
        throw IoError(path + ": " + e.what());
    }
    catch (const std::invalid_argument & e) {
        throw IoError(path + ": " + e.what());
    }
}

/// Inline JSON when the argument starts with '{' or '[', a file otherwise.
auto load_json_arg(const std::string & arg) -> json
{
    auto first = arg.find_first_not_of(" \t\r\n");
    std::string text = (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) ? arg : read_text(arg);
    try {
        return json::parse(text);
    }
    catch (const json::parse_error & e) {
        throw IoError("malformed JSON in '" + (text.size() > 40 ? arg : text) + "': " + e.what());
    }
}

auto rational_arg(const std::string & name, const std::string & text) -> Rational
{
    try {
        return parse_rational(text);
    }
    catch (const std::invalid_argument &) {
        throw UsageError("--" + name + ": expected a rational p/q or a decimal, got '" + text + "'");
    }
}

auto base_report(const std::string & command, json config) -> json
{
    return json{ { "format_version", report_format_version }, { "command", command }, { "config", std::move(config) } };
}

auto emit(const OutputOptions & o, const json & report, const std::string & human, const std::optional<std::string> & csv = std::nullopt) -> void
{
    std::string text;
    if (o.format == "json")
        text = report.dump(2) + "\n";
    else if (o.format == "csv") {
        if (! csv)
            throw UsageError("--format csv is only available for experiment");
        text = *csv;
    }
    else
        text = human;
    if (o.out.empty())
        std::cout << text << std::flush;
    else
        write_text(o.out, text);
}

auto add_output(CLI::App * cmd, OutputOptions & o, const std::string & default_format = "human") -> void
{
    o.format = default_format;
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({ "human", "json", "csv" }))->capture_default_str();
    cmd->add_option("--out", o.out, "Write the report here instead of standard output");
}

auto add_parallel(CLI::App * cmd, ParallelFlags & p) -> void
{
    cmd->add_option("--threads", p.threads, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    cmd->add_flag("--deterministic", p.deterministic, "Make results independent of thread scheduling");
}

auto sets_string(const std::vector<VertexSet> & sets) -> std::string
{
    std::string out;
    for (const auto & s : sets) {
        out += " {";
        for (std::size_t i = 0 ; i < s.members().size() ; ++i)
            out += (i ? "," : "") + std::to_string(s.members()[i]);
        out += "}";
    }
    return out;
}

auto colors_string(const std::vector<Color> & colors) -> std::string
{
    std::string out;
    for (std::size_t i = 0 ; i < colors.size() ; ++i)
        out += (i ? " " : "") + std::to_string(colors[i]);
    return out;
}

auto block_mode_arg(const std::string & mode) -> BlockMode
{
    return mode == "exhaustive" ? BlockMode::exhaustive : BlockMode::sampled;
}

// check-minor ---------------------------------------------------------------

struct CheckMinor
{
    std::string graph;
    int s = 0, t = 0;
    std::optional<std::uint64_t> budget;
    std::string witness_out;
    OutputOptions output;
    ParallelFlags parallel;

    auto run() const -> int
    {
        auto g = load_graph(graph);
        std::optional<MinorQuery> q;
        try {
            q.emplace(s, t);
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }
        MinorSearchOptions opts;
        opts.budget = budget.value_or(unlimited);
        opts.parallel = parallel.options();
        auto r = find_kst_minor(g, *q, opts);

        json config{ { "graph", graph }, { "s", s }, { "t", t }, { "budget", budget ? json(*budget) : json("unlimited") }, { "deterministic", parallel.deterministic } };
        auto report = base_report("check-minor", std::move(config));
        report["nodes"] = r.nodes;
        std::ostringstream human;
        human << "K_{" << s << "," << t << "} minor: ";
        int code;
        if (r.found()) {
            report["result"] = "found";
            report["model"] = to_json(r.model());
            human << "found\nside1:" << sets_string(r.model().side1) << "\nside2:" << sets_string(r.model().side2) << '\n';
            if (! witness_out.empty())
                write_text(witness_out, to_json(r.model()).dump(2) + "\n");
            code = exit_positive;
        }
        else if (r.not_found()) {
            report["result"] = "not_found";
            human << "not found (exhaustive)\n";
            code = exit_negative;
        }
        else {
            report["result"] = "budget_exhausted";
            human << "unknown, budget exhausted\n";
            code = exit_inconclusive;
        }
        human << "search nodes: " << r.nodes << '\n';
        emit(output, report, human.str());
        return code;
    }
};

// check-lcolor ----------------------------------------------------------------

struct CheckLcolor
{
    std::string graph;
    std::string lists;
    OutputOptions output;

    auto run() const -> int
    {
        auto g = load_graph(graph);
        auto j = load_json_arg(lists);
        ListAssignment l;
        try {
            l = list_assignment_from_json(j.is_array() ? json{ { "lists", j } } : j);
        }
        catch (const std::invalid_argument & e) {
            throw IoError(e.what());
        }
        if (static_cast<int>(l.size()) != g.vertex_count())
            throw UsageError("list assignment has " + std::to_string(l.size()) + " lists, graph has " + std::to_string(g.vertex_count()) + " vertices");
        auto c = find_l_coloring(g, l);

        auto report = base_report("check-lcolor", json{ { "graph", graph }, { "lists", lists } });
        std::string human;
        if (c) {
            report["result"] = "colorable";
            report["coloring"] = to_json(*c);
            human = "L-coloring found: " + colors_string(c->colors) + "\n";
        }
        else {
            report["result"] = "not_colorable";
            human = "no L-coloring exists\n";
        }
        emit(output, report, human);
        return c ? exit_positive : exit_negative;
    }
};

// check-choosable ---------------------------------------------------------------

struct CheckChoosable
{
    std::string graph;
    int k = 0;
    int max_vertices = ChoosabilityOptions{}.max_vertices;
    int max_k = ChoosabilityOptions{}.max_k;
    bool no_core = false;
    std::string witness_out;
    OutputOptions output;
    ParallelFlags parallel;

    auto run() const -> int
    {
        auto g = load_graph(graph);
        if (k < 1)
            throw UsageError("--k must be at least 1");
        ChoosabilityOptions opts;
        opts.max_vertices = max_vertices;
        opts.max_k = max_k;
        opts.reduce_core = ! no_core;
        opts.parallel = parallel.options();

        json config{ { "graph", graph }, { "k", k }, { "max_vertices", max_vertices }, { "max_k", max_k }, { "core_reduction", ! no_core }, { "deterministic", parallel.deterministic } };
        auto report = base_report("check-choosable", std::move(config));
        try {
            auto v = is_k_choosable(g, k, opts);
            report["universe_size"] = v.universe_size;
            report["assignments_checked"] = v.assignments_checked;
            std::string human;
            if (v.choosable()) {
                report["result"] = "choosable";
                human = std::to_string(k) + "-choosable (exhaustive, " + std::to_string(v.assignments_checked) + " assignments checked)\n";
            }
            else {
                report["result"] = "not_choosable";
                report["witness"] = to_json(v.witness());
                human = "not " + std::to_string(k) + "-choosable; witness lists:\n";
                for (std::size_t i = 0 ; i < v.witness().size() ; ++i)
                    human += "  " + std::to_string(i) + ": " + colors_string(v.witness()[i]) + "\n";
                if (! witness_out.empty())
                    write_text(witness_out, to_json(v.witness()).dump(2) + "\n");
            }
            emit(output, report, human);
            return v.choosable() ? exit_positive : exit_negative;
        }
        catch (const CapExceeded & e) {
            report["result"] = "refused";
            report["reason"] = e.what();
            std::cerr << e.what() << '\n';
            emit(output, report, std::string("refused: ") + e.what() + "\n");
            return exit_inconclusive;
        }
    }
};

// build-h -----------------------------------------------------------------------

struct BuildH
{
    std::int64_t n = 0, m = 0;
    std::string eps, c_const, delta;
    std::uint64_t seed = 0;
    int max_retries = BuildHOptions{}.max_retries;
    std::string mode = "sampled";
    std::uint64_t trials = BlockCheckOptions{}.trials;
    std::string graph_out;
    OutputOptions output;
    ParallelFlags parallel;

    auto run() const -> int
    {
        Lemma3Params params;
        try {
            params = derive_lemma3_params(rational_arg("eps", eps), rational_arg("C", c_const));
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }
        BuildHOptions opts;
        opts.max_retries = max_retries;
        opts.block.mode = block_mode_arg(mode);
        opts.block.trials = trials;
        opts.block.threads = parallel.threads;
        if (! delta.empty())
            opts.delta_override = rational_arg("delta", delta);

        json config{ { "n", n }, { "m", m }, { "eps", to_string(params.epsilon) }, { "C", to_string(params.c_const) },
            { "delta", delta.empty() ? json(nullptr) : json(to_string(*opts.delta_override)) }, { "seed", seed },
            { "max_retries", max_retries }, { "mode", mode }, { "trials", trials } };
        auto report = base_report("build-h", std::move(config));
        report["params"] = to_json(params);
        report["n0"] = "unknown: properties checked empirically";

        BuildHResult r;
        try {
            r = build_h(m, n, params, seed, opts);
        }
        catch (const CapExceeded & e) {
            report["result"] = "refused";
            report["reason"] = e.what();
            std::cerr << e.what() << '\n';
            emit(output, report, std::string("refused: ") + e.what() + "\n");
            return exit_inconclusive;
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }

        auto attempts = json::array();
        for (const auto & a : r.attempts)
            attempts.push_back(to_json(a));
        report["attempts"] = std::move(attempts);
        std::ostringstream human;
        human << "attempts: " << r.attempts.size() << '\n';
        for (std::size_t i = 0 ; i < r.attempts.size() ; ++i) {
            const auto & a = r.attempts[i];
            human << "  #" << i << " seed " << a.seed << ": degree " << (a.degree.pass ? "pass" : "fail") << " (max " << a.degree.max_degree
                  << "), blocks " << block_status_name(a.blocks.status) << " (" << a.blocks.failures << "/" << a.blocks.trials << " failed)\n";
        }
        if (r.built()) {
            const auto & h = r.graph();
            report["result"] = "built";
            report["graph"] = to_json(h);
            std::int64_t worst = 0;
            for (Vertex v = 0 ; v < h.vertex_count() ; ++v)
                worst = std::max<std::int64_t>(worst, non_neighbour_count(h, v));
            report["max_non_neighbours"] = worst;
            report["cliques"] = is_clique(h, h.vertices_labelled(Label::a)) && is_clique(h, h.vertices_labelled(Label::b));
            human << "built H: " << h.vertex_count() << " vertices, " << h.edge_count() << " edges, max non-neighbours " << worst << '\n';
            if (! graph_out.empty())
                write_text(graph_out, to_edge_list(h));
        }
        else {
            report["result"] = "gave_up";
            human << "gave up after " << r.attempts.size() << " attempts\n";
        }
        emit(output, report, human.str());
        return r.built() ? exit_positive : exit_negative;
    }
};

// build-counterexample --------------------------------------------------------------

struct BuildCounterexample
{
    std::string h_path;
    std::optional<int> palette;
    std::string colorings;
    std::int64_t max_vertices = CounterexampleOptions{}.max_vertices;
    bool no_verify = false;
    std::string graph_out, lists_out;
    OutputOptions output;

    auto run() const -> int
    {
        auto h = load_graph(h_path);
        CounterexampleOptions opts;
        opts.max_vertices = max_vertices;
        if (! colorings.empty()) {
            auto j = load_json_arg(colorings);
            try {
                opts.colorings = j.get<std::vector<std::vector<Color>>>();
            }
            catch (const json::exception & e) {
                throw IoError(std::string("colorings must be a JSON array of arrays of colours: ") + e.what());
            }
        }
        const int a_size = static_cast<int>(h.vertices_labelled(Label::a).members().size());
        const int b_size = static_cast<int>(h.vertices_labelled(Label::b).members().size());
        const int pal = palette.value_or(a_size + b_size - 1);

        json config{ { "h", h_path }, { "palette", pal }, { "colorings", colorings.empty() ? json("all") : json(opts.colorings.value()) },
            { "max_vertices", max_vertices }, { "verify", ! no_verify } };
        auto report = base_report("build-counterexample", std::move(config));

        Counterexample cx;
        try {
            cx = build_counterexample(h, pal, opts);
        }
        catch (const CapExceeded & e) {
            report["result"] = "refused";
            report["reason"] = e.what();
            std::cerr << e.what() << '\n';
            emit(output, report, std::string("refused: ") + e.what() + "\n");
            return exit_inconclusive;
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }

        report["graph"] = to_json(cx.graph);
        report["lists"] = to_json(cx.lists);
        report["copy_index"] = to_json(cx.index);
        report["min_list_size"] = cx.min_list_size;
        std::ostringstream human;
        human << "glued graph: " << cx.graph.vertex_count() << " vertices, " << cx.graph.edge_count() << " edges, "
              << cx.index.copies.size() << " copies, palette " << pal << ", smallest list " << cx.min_list_size << '\n';
        if (! graph_out.empty())
            write_text(graph_out, to_edge_list(cx.graph));
        if (! lists_out.empty())
            write_text(lists_out, to_json(cx.lists).dump() + "\n");

        int code = exit_positive;
        if (! no_verify) {
            auto c = find_l_coloring(cx.graph, cx.lists);
            json record{ { "l_coloring", c ? "exists" : "none" } };
            std::size_t proper = 0, pigeonhole = 0;
            const auto h_b = h.vertices_labelled(Label::b).members();
            for (std::size_t i = 0 ; i < cx.index.copies.size() ; ++i) {
                const auto & col = cx.index.copies[i].coloring;
                bool is_proper = true;
                for (std::size_t x = 0 ; x < col.size() ; ++x)
                    for (std::size_t y = x + 1 ; y < col.size() ; ++y)
                        if (col[x] == col[y] && h.adjacent(h_b[x], h_b[y]))
                            is_proper = false;
                if (! is_proper)
                    continue;
                ++proper;
                if (verify_no_l_coloring_pigeonhole(h, copy_lists(cx, i, h.vertex_count()), col))
                    ++pigeonhole;
            }
            record["proper_copies"] = proper;
            record["pigeonhole_verified"] = pigeonhole;
            if (c)
                record["coloring"] = to_json(*c);
            report["verification"] = std::move(record);
            human << (c ? "an L-coloring exists\n" : "no L-coloring\n");
            human << "pigeonhole check: " << pigeonhole << " of " << proper << " proper colorings of B admit no extension\n";
            code = c ? exit_negative : exit_positive;
        }
        report["result"] = no_verify ? "built" : (code == exit_positive ? "no_l_coloring" : "l_colorable");
        emit(output, report, human.str());
        return code;
    }
};

// bounds --------------------------------------------------------------------------

struct Bounds
{
    std::string eps, c_const, delta;
    std::int64_t n = 0;
    std::optional<std::int64_t> s, t;
    OutputOptions output;

    auto run() const -> int
    {
        const Rational e = rational_arg("eps", eps);
        const Rational c = rational_arg("C", c_const);
        if (n < 1)
            throw UsageError("--n must be positive");
        Lemma3Params params;
        try {
            params = derive_lemma3_params(e, c);
        }
        catch (const std::invalid_argument & ex) {
            throw UsageError(ex.what());
        }
        const Rational d = delta.empty() ? params.delta : rational_arg("delta", delta);
        if (d <= 0 || d >= 1)
            throw UsageError("--delta must lie in (0, 1)");

        json config{ { "eps", to_string(e) }, { "C", to_string(c) }, { "n", n }, { "delta", delta.empty() ? json(nullptr) : json(to_string(d)) },
            { "s", s ? json(*s) : json(nullptr) }, { "t", t ? json(*t) : json(nullptr) } };
        auto report = base_report("bounds", std::move(config));
        report["params"] = to_json(params);
        const double nn = static_cast<double>(n);
        const double ev1 = event1_bound(nn, to_double(e), to_double(c), static_cast<double>(params.f), to_double(params.delta));
        const double tail = degree_tail_bound(nn, to_double(c), to_double(d));
        report["event1_exponent"] = ev1;
        report["degree_tail_exponent"] = tail;
        report["degree_tail_delta"] = to_string(d);

        std::ostringstream human;
        human.precision(10);
        human << "f = " << params.f << ", delta = " << to_string(params.delta) << ", f^2 delta = " << to_string(params.f_squared_delta()) << '\n';
        human << "event1 exponent at n=" << n << ": " << ev1 << '\n';
        human << "degree tail exponent at n=" << n << " (delta " << to_string(d) << "): " << tail << '\n';

        if (s || t) {
            if (! s || ! t)
                throw UsageError("--s and --t must be given together");
            Theorem1Bound b;
            Theorem1Params tp;
            try {
                b = theorem1_bound(*s, *t, e);
                tp = derive_theorem1_params(e, c, *s, *t);
            }
            catch (const std::invalid_argument & ex) {
                throw UsageError(ex.what());
            }
            report["theorem1_params"] = to_json(tp);
            report["theorem1_bound"] = to_json(b);
            human << "n=" << tp.n << " m=" << tp.m << " palette=" << tp.palette_size << " N >= " << tp.n_lower << " (n0 unknown)\n";
            human << "list chromatic lower bound " << b.value << " vs (1-eps)(2s+t) = " << to_string(b.target) << ": " << (b.holds ? "exceeds" : "does not exceed") << '\n';
        }
        emit(output, report, human.str());
        return exit_positive;
    }
};

// experiment ------------------------------------------------------------------------

struct Experiment
{
    std::vector<std::int64_t> ns;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string eps = "1/2", c_const = "1", delta;
    std::string mode = "sampled";
    std::uint64_t block_trials = 100;
    OutputOptions output;
    ParallelFlags parallel;

    auto run() const -> int
    {
        Lemma3Params params;
        try {
            params = derive_lemma3_params(rational_arg("eps", eps), rational_arg("C", c_const));
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }
        const Rational d = delta.empty() ? params.delta : rational_arg("delta", delta);
        if (d <= 0 || d >= 1)
            throw UsageError("--delta must lie in (0, 1)");
        for (auto n : ns)
            if (n < 2)
                throw UsageError("every --n value must be at least 2");

        json config{ { "n", ns }, { "trials", trials }, { "seed", seed }, { "eps", to_string(params.epsilon) }, { "C", to_string(params.c_const) },
            { "delta", to_string(d) }, { "mode", mode }, { "block_trials", block_trials } };
        auto report = base_report("experiment", std::move(config));

        BlockCheckOptions block;
        block.mode = block_mode_arg(mode);
        block.trials = block_trials;
        const std::size_t rows = ns.size() * trials;
        std::vector<SampleReport> reports(rows);
        std::vector<std::string> refused(rows);
        parallel_for(rows, parallel.threads, [&](std::size_t i) {
            const auto n = ns[i / trials];
            const auto row_seed = derive_seed(derive_seed(seed, static_cast<std::uint64_t>(n)), i % trials);
            try {
                reports[i] = sample_and_check(n, params, d, row_seed, block).second;
            }
            catch (const CapExceeded & e) {
                refused[i] = e.what();
            }
        });
        for (const auto & r : refused)
            if (! r.empty()) {
                std::cerr << r << '\n';
                report["result"] = "refused";
                report["reason"] = r;
                emit(output, report, "refused: " + r + "\n");
                return exit_inconclusive;
            }

        std::string csv = std::string(sample_csv_header) + "\n";
        auto samples = json::array();
        for (const auto & r : reports) {
            csv += to_csv_row(r) + "\n";
            samples.push_back(to_json(r));
        }
        report["samples"] = std::move(samples);

        std::ostringstream human;
        human << "n, degree pass frequency, block falsified frequency (" << trials << " samples each)\n";
        auto summary = json::array();
        for (std::size_t k = 0 ; k < ns.size() ; ++k) {
            std::uint64_t pass = 0, falsified = 0;
            for (std::uint64_t j = 0 ; j < trials ; ++j) {
                const auto & r = reports[k * trials + j];
                pass += r.degree.pass;
                falsified += r.blocks.status == BlockStatus::falsified;
            }
            const double fp = trials ? static_cast<double>(pass) / static_cast<double>(trials) : 0.0;
            const double ff = trials ? static_cast<double>(falsified) / static_cast<double>(trials) : 0.0;
            summary.push_back({ { "n", ns[k] }, { "degree_pass_frequency", fp }, { "block_falsified_frequency", ff } });
            human << ns[k] << ", " << fp << ", " << ff << '\n';
        }
        report["summary"] = std::move(summary);
        emit(output, report, human.str(), csv);
        return exit_positive;
    }
};

}

int main(int argc, char ** argv)
{
    CLI::App app{ "Exact K_{s,t}-minor testing, list colouring and the list-colouring counterexample construction." };
    app.require_subcommand(1);
    std::function<int()> run;

    CheckMinor check_minor;
    {
        auto * cmd = app.add_subcommand("check-minor", "Search for a K_{s,t} minor");
        cmd->add_option("graph", check_minor.graph, "Graph file (edge list or JSON)")->required();
        cmd->add_option("--s", check_minor.s)->required();
        cmd->add_option("--t", check_minor.t)->required();
        cmd->add_option("--budget", check_minor.budget, "Search node limit (default unlimited)");
        cmd->add_option("--witness-out", check_minor.witness_out, "Write the branch model here");
        add_output(cmd, check_minor.output);
        add_parallel(cmd, check_minor.parallel);
        cmd->callback([&] { run = [&] { return check_minor.run(); }; });
    }

    CheckLcolor check_lcolor;
    {
        auto * cmd = app.add_subcommand("check-lcolor", "Search for an L-coloring");
        cmd->add_option("graph", check_lcolor.graph, "Graph file")->required();
        cmd->add_option("--lists", check_lcolor.lists, "List assignment: JSON file or inline JSON")->required();
        add_output(cmd, check_lcolor.output);
        cmd->callback([&] { run = [&] { return check_lcolor.run(); }; });
    }

    CheckChoosable check_choosable;
    {
        auto * cmd = app.add_subcommand("check-choosable", "Decide k-choosability exactly");
        cmd->add_option("graph", check_choosable.graph, "Graph file")->required();
        cmd->add_option("--k", check_choosable.k)->required();
        cmd->add_option("--max-vertices", check_choosable.max_vertices, "Instance cap on vertices")->capture_default_str();
        cmd->add_option("--max-k", check_choosable.max_k, "Instance cap on k")->capture_default_str();
        cmd->add_flag("--no-core", check_choosable.no_core, "Enumerate on the whole graph instead of its k-core");
        cmd->add_option("--witness-out", check_choosable.witness_out, "Write a bad list assignment here");
        add_output(cmd, check_choosable.output);
        add_parallel(cmd, check_choosable.parallel);
        cmd->callback([&] { run = [&] { return check_choosable.run(); }; });
    }

    BuildH build_h_cmd;
    {
        auto * cmd = app.add_subcommand("build-h", "Sample and assemble the gadget H");
        cmd->add_option("--n", build_h_cmd.n, "|B|")->required();
        cmd->add_option("--m", build_h_cmd.m, "|A|")->required();
        cmd->add_option("--eps", build_h_cmd.eps)->required();
        cmd->add_option("--C", build_h_cmd.c_const)->required();
        cmd->add_option("--seed", build_h_cmd.seed)->required();
        cmd->add_option("--delta", build_h_cmd.delta, "Override the derived edge-probability exponent");
        cmd->add_option("--max-retries", build_h_cmd.max_retries)->capture_default_str();
        cmd->add_option("--mode", build_h_cmd.mode, "Block property check")->check(CLI::IsMember({ "exhaustive", "sampled" }))->capture_default_str();
        cmd->add_option("--trials", build_h_cmd.trials, "Random collections in sampled mode")->capture_default_str();
        cmd->add_option("--graph-out", build_h_cmd.graph_out, "Write H as an edge list here");
        add_output(cmd, build_h_cmd.output);
        add_parallel(cmd, build_h_cmd.parallel);
        cmd->callback([&] { run = [&] { return build_h_cmd.run(); }; });
    }

    BuildCounterexample build_cx;
    {
        auto * cmd = app.add_subcommand("build-counterexample", "Glue copies of H and assemble the adversarial lists");
        cmd->add_option("gadget", build_cx.h_path, "Gadget file H with A/B labels")->required();
        cmd->add_option("--palette", build_cx.palette, "Palette size (default |A|+|B|-1)");
        cmd->add_option("--colorings", build_cx.colorings, "Explicit colorings of B: JSON file or inline JSON (default all)");
        cmd->add_option("--max-vertices", build_cx.max_vertices)->capture_default_str();
        cmd->add_flag("--no-verify", build_cx.no_verify, "Skip the L-coloring search");
        cmd->add_option("--graph-out", build_cx.graph_out, "Write the glued graph as an edge list here");
        cmd->add_option("--lists-out", build_cx.lists_out, "Write the list assignment as JSON here");
        add_output(cmd, build_cx.output);
        cmd->callback([&] { run = [&] { return build_cx.run(); }; });
    }

    Bounds bounds;
    {
        auto * cmd = app.add_subcommand("bounds", "Evaluate derived parameters and probability bounds");
        cmd->add_option("--eps", bounds.eps)->required();
        cmd->add_option("--C", bounds.c_const)->required();
        cmd->add_option("--n", bounds.n)->required();
        cmd->add_option("--delta", bounds.delta, "Exponent for the degree tail (default derived)");
        cmd->add_option("--s", bounds.s);
        cmd->add_option("--t", bounds.t);
        add_output(cmd, bounds.output);
        cmd->callback([&] { run = [&] { return bounds.run(); }; });
    }

    Experiment experiment;
    {
        auto * cmd = app.add_subcommand("experiment", "Seeded Monte Carlo sweep over n");
        cmd->add_option("--n", experiment.ns, "Comma-separated values of n")->required()->delimiter(',');
        cmd->add_option("--trials", experiment.trials, "Samples per n")->required();
        cmd->add_option("--seed", experiment.seed)->required();
        cmd->add_option("--eps", experiment.eps)->capture_default_str();
        cmd->add_option("--C", experiment.c_const)->capture_default_str();
        cmd->add_option("--delta", experiment.delta, "Override the derived edge-probability exponent");
        cmd->add_option("--mode", experiment.mode)->check(CLI::IsMember({ "exhaustive", "sampled" }))->capture_default_str();
        cmd->add_option("--block-trials", experiment.block_trials, "Random collections per sample")->capture_default_str();
        add_output(cmd, experiment.output, "csv");
        add_parallel(cmd, experiment.parallel);
        cmd->callback([&] { run = [&] { return experiment.run(); }; });
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        return run();
    }
    catch (const UsageError & e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const IoError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
    catch (const CapExceeded & e) {
        std::cerr << "refused: " << e.what() << '\n';
        return exit_inconclusive;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
}
