#pragma once

/*
 * Edge-list text format:
 *
 *     n=<int> m=<int>
 *     A=<space separated indices>      (optional; listed vertices get label A,
 *                                       all others label B)
 *     u v                              (one edge per line, 0-indexed)
 *
 * '#' starts a comment anywhere on a line; blank lines are ignored.
 */

#include <listminor/graph.hpp>

#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace listminor {

inline constexpr int report_format_version = 1;

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string & what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          _line(line), _column(column)
    {
    }

    auto line() const -> std::size_t { return _line; }
    auto column() const -> std::size_t { return _column; }

private:
    std::size_t _line, _column;
};

struct ParseWarning
{
    std::size_t line;
    std::string message;
};

struct ParsedGraph
{
    Graph graph;
    std::vector<ParseWarning> warnings;
};

namespace detail {

    struct Token
    {
        std::string_view text;
        std::size_t column;     // 1-based
    };

    inline auto tokenize(std::string_view line) -> std::vector<Token>
    {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t start = i;
            while (i < line.size() && ! (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            if (i > start)
                out.push_back(Token{ line.substr(start, i - start), start + 1 });
        }
        return out;
    }

    inline auto parse_int(std::string_view text, std::size_t line, std::size_t column) -> long long
    {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw ParseError(line, column, "expected an integer, got '" + std::string(text) + "'");
        return value;
    }

    inline auto parse_key_int(const Token & tok, std::string_view key, std::size_t line) -> long long
    {
        if (tok.text.substr(0, key.size()) != key)
            throw ParseError(line, tok.column, "expected '" + std::string(key) + "<int>'");
        return parse_int(tok.text.substr(key.size()), line, tok.column + key.size());
    }

    inline auto label_name(Label l) -> nlohmann::json
    {
        switch (l) {
            case Label::a: return "A";
            case Label::b: return "B";
            case Label::none: break;
        }
        return nullptr;
    }

}

inline auto parse_edge_list(std::string_view text) -> ParsedGraph
{
    std::vector<ParseWarning> warnings;
    std::size_t line_no = 0;
    bool have_header = false, header_done = false;
    long long n = 0, m_declared = 0;
    std::size_t edge_lines = 0;
    GraphBuilder builder(0);
    std::vector<Vertex> a_side;
    bool have_a = false;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (auto hash = line.find('#') ; hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = detail::tokenize(line);
        if (toks.empty()) {
            if (eol == text.size())
                break;
            continue;
        }

        if (! have_header) {
            if (toks.size() != 2)
                throw ParseError(line_no, toks.front().column, "header must be 'n=<int> m=<int>'");
            n = detail::parse_key_int(toks[0], "n=", line_no);
            m_declared = detail::parse_key_int(toks[1], "m=", line_no);
            if (n < 0 || n > (1 << 24))
                throw ParseError(line_no, toks[0].column, "vertex count out of range");
            if (m_declared < 0)
                throw ParseError(line_no, toks[1].column, "edge count must be non-negative");
            builder = GraphBuilder(static_cast<int>(n));
            have_header = true;
        }
        else if (! header_done && toks.front().text.substr(0, 2) == "A=") {
            have_a = true;
            header_done = true;
            auto items = toks;
            items.front().text.remove_prefix(2);
            items.front().column += 2;
            for (auto & tok : items) {
                if (tok.text.empty())
                    continue;
                auto v = detail::parse_int(tok.text, line_no, tok.column);
                if (v < 0 || v >= n)
                    throw ParseError(line_no, tok.column, "A-label vertex " + std::to_string(v) + " out of range");
                a_side.push_back(static_cast<Vertex>(v));
            }
        }
        else {
            header_done = true;
            if (toks.size() != 2)
                throw ParseError(line_no, toks.front().column, "expected an edge line 'u v'");
            auto u = detail::parse_int(toks[0].text, line_no, toks[0].column);
            auto v = detail::parse_int(toks[1].text, line_no, toks[1].column);
            if (u < 0 || u >= n)
                throw ParseError(line_no, toks[0].column, "vertex " + std::to_string(u) + " out of range");
            if (v < 0 || v >= n)
                throw ParseError(line_no, toks[1].column, "vertex " + std::to_string(v) + " out of range");
            if (u == v)
                throw ParseError(line_no, toks[0].column, "self-loop on vertex " + std::to_string(u));
            ++edge_lines;
            if (! builder.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                warnings.push_back(ParseWarning{ line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v) + " ignored" });
        }
        if (eol == text.size())
            break;
    }

    if (! have_header)
        throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'n=<int> m=<int>' header");
    if (static_cast<long long>(edge_lines) != m_declared)
        warnings.push_back(ParseWarning{ 1, "header declares m=" + std::to_string(m_declared) + " but " + std::to_string(edge_lines) + " edge lines were read" });

    if (have_a) {
        for (Vertex v = 0 ; v < n ; ++v)
            builder.set_label(v, Label::b);
        for (Vertex v : a_side)
            builder.set_label(v, Label::a);
    }
    return ParsedGraph{ std::move(builder).build(), std::move(warnings) };
}

/// Exact inverse of parse_edge_list for graphs whose labels are either all
/// none or all in {A, B}.
inline auto to_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    if (g.has_labels()) {
        out << "A=";
        bool first = true;
        for (Vertex v : g.vertices_labelled(Label::a)) {
            out << (first ? "" : " ") << v;
            first = false;
        }
        out << '\n';
    }
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

inline auto to_json(const Graph & g) -> nlohmann::json
{
    nlohmann::json j;
    j["vertex_count"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({ u, v });
    j["edges"] = std::move(edges);
    if (g.has_labels()) {
        auto labels = nlohmann::json::array();
        for (auto l : g.labels())
            labels.push_back(detail::label_name(l));
        j["labels"] = std::move(labels);
    }
    return j;
}

inline auto graph_from_json(const nlohmann::json & j) -> Graph
{
    try {
        int n = j.at("vertex_count").get<int>();
        std::vector<Edge> edges;
        for (const auto & e : j.at("edges")) {
            if (! e.is_array() || e.size() != 2)
                throw std::invalid_argument("edge entries must be [u, v] pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::vector<Label> labels;
        if (j.contains("labels")) {
            for (const auto & l : j.at("labels")) {
                if (l.is_null())
                    labels.push_back(Label::none);
                else if (l == "A")
                    labels.push_back(Label::a);
                else if (l == "B")
                    labels.push_back(Label::b);
                else
                    throw std::invalid_argument("unknown label " + l.dump());
            }
        }
        return Graph(n, edges, std::move(labels));
    }
    catch (const nlohmann::json::exception & e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    }
}

/// Dispatches on content: a leading '{' selects JSON, otherwise edge list.
inline auto parse_graph(std::string_view text) -> ParsedGraph
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(1, e.byte, e.what());
        }
        return ParsedGraph{ graph_from_json(j.contains("graph") ? j.at("graph") : j), {} };
    }
    return parse_edge_list(text);
}

}
