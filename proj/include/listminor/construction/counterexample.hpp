#pragma once

/*
 * The list-colouring counterexample: one copy H(c) of the gadget per
 * colouring c of B from the palette [1, palette], all copies sharing B and
 * nothing else.  B gets the full palette; a in A(c) loses c(b) for each
 * non-neighbour b in B.  Every copy has |A| + |B| = palette + 1 vertices, so
 * a colouring restricting to c on B repeats a colour across a non-edge ab,
 * which the list of a forbids.
 */

#include <listminor/graph.hpp>
#include <listminor/listcolor.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace listminor {

struct CopyRecord
{
    /// c(b) for the B vertices of h in increasing index order.
    std::vector<Color> coloring;
    /// First vertex of A(c) in the glued graph; A(c) is contiguous.
    Vertex first = 0;
};

struct CopyIndex
{
    /// h's B vertices, in order, occupy [0, |B|) of the glued graph.
    std::vector<Vertex> h_b;
    std::vector<Vertex> h_a;
    std::vector<CopyRecord> copies;

    /// Glued-graph vertex of each h vertex inside copy i.
    auto correspondence(std::size_t i, int h_vertex_count) const -> std::vector<Vertex>
    {
        std::vector<Vertex> out(static_cast<std::size_t>(h_vertex_count), -1);
        for (std::size_t j = 0 ; j < h_b.size() ; ++j)
            out[h_b[j]] = static_cast<Vertex>(j);
        for (std::size_t j = 0 ; j < h_a.size() ; ++j)
            out[h_a[j]] = copies[i].first + static_cast<Vertex>(j);
        return out;
    }
};

struct Counterexample
{
    Graph graph;
    ListAssignment lists;
    CopyIndex index;
    int palette_size = 0;
    std::size_t min_list_size = 0;
};

struct CounterexampleOptions
{
    /// Explicit colourings of B; all palette^|B| colourings when empty.
    std::optional<std::vector<std::vector<Color>>> colorings;
    /// Refuse when the glued graph would exceed this many vertices.
    std::int64_t max_vertices = 20'000;
};

inline auto punched_list(const Graph & h, Vertex a, const std::vector<Vertex> & h_b, const std::vector<Color> & c, int palette) -> std::vector<Color>
{
    std::vector<char> drop(static_cast<std::size_t>(palette) + 1, 0);
    for (std::size_t j = 0 ; j < h_b.size() ; ++j)
        if (! h.adjacent(a, h_b[j]))
            drop[c[j]] = 1;
    std::vector<Color> list;
    for (Color x = 1 ; x <= static_cast<Color>(palette) ; ++x)
        if (! drop[x])
            list.push_back(x);
    return list;
}

inline auto build_counterexample(const Graph & h, int palette_size, const CounterexampleOptions & opts = {}) -> Counterexample
{
    const auto h_a = h.vertices_labelled(Label::a).members();
    const auto h_b = h.vertices_labelled(Label::b).members();
    if (h_a.empty() || h_b.empty() || static_cast<int>(h_a.size() + h_b.size()) != h.vertex_count())
        throw std::invalid_argument("h must have every vertex labelled A or B, both sides non-empty");
    if (palette_size != static_cast<int>(h_a.size() + h_b.size()) - 1)
        throw std::invalid_argument("palette size must be |A| + |B| - 1 = " + std::to_string(h_a.size() + h_b.size() - 1));

    std::vector<std::vector<Color>> colorings;
    if (opts.colorings) {
        colorings = *opts.colorings;
        for (const auto & c : colorings) {
            if (c.size() != h_b.size())
                throw std::invalid_argument("each colouring of B needs " + std::to_string(h_b.size()) + " entries");
            for (Color x : c)
                if (x < 1 || x > static_cast<Color>(palette_size))
                    throw std::invalid_argument("colour " + std::to_string(x) + " outside palette [1, " + std::to_string(palette_size) + "]");
        }
    }
    else {
        const double copies = std::pow(static_cast<double>(palette_size), static_cast<double>(h_b.size()));
        const double total = copies * static_cast<double>(h_a.size()) + static_cast<double>(h_b.size());
        if (total > static_cast<double>(opts.max_vertices))
            throw CapExceeded("counterexample needs " + std::to_string(static_cast<long long>(copies)) + " copies ("
                    + std::to_string(static_cast<long long>(total)) + " vertices), cap is " + std::to_string(opts.max_vertices) + " vertices");
        std::vector<Color> c(h_b.size(), 1);
        for (;;) {
            colorings.push_back(c);
            std::size_t j = c.size();
            while (j > 0 && c[j - 1] == static_cast<Color>(palette_size))
                c[--j] = 1;
            if (j == 0)
                break;
            ++c[j - 1];
        }
    }
    const double total = static_cast<double>(colorings.size()) * static_cast<double>(h_a.size()) + static_cast<double>(h_b.size());
    if (total > static_cast<double>(opts.max_vertices))
        throw CapExceeded("counterexample needs " + std::to_string(static_cast<long long>(total)) + " vertices, cap is " + std::to_string(opts.max_vertices));

    Counterexample out;
    out.palette_size = palette_size;
    out.index.h_a = h_a;
    out.index.h_b = h_b;
    const int nb = static_cast<int>(h_b.size());
    const int na = static_cast<int>(h_a.size());
    const int total_vertices = nb + na * static_cast<int>(colorings.size());

    GraphBuilder builder(total_vertices);
    std::vector<std::vector<Color>> lists(static_cast<std::size_t>(total_vertices));
    std::vector<Color> full(static_cast<std::size_t>(palette_size));
    for (int x = 0 ; x < palette_size ; ++x)
        full[x] = static_cast<Color>(x + 1);
    for (Vertex j = 0 ; j < nb ; ++j) {
        builder.set_label(j, Label::b);
        lists[j] = full;
    }

    auto h_edges = h.edges();
    for (std::size_t i = 0 ; i < colorings.size() ; ++i) {
        CopyRecord rec{ colorings[i], nb + na * static_cast<Vertex>(i) };
        out.index.copies.push_back(rec);
        auto map = out.index.correspondence(i, h.vertex_count());
        for (auto [u, v] : h_edges)
            builder.add_edge(map[u], map[v]);
        for (std::size_t j = 0 ; j < h_a.size() ; ++j) {
            Vertex glued = rec.first + static_cast<Vertex>(j);
            builder.set_label(glued, Label::a);
            lists[glued] = punched_list(h, h_a[j], h_b, colorings[i], palette_size);
        }
    }

    out.graph = std::move(builder).build();
    out.lists = ListAssignment(std::move(lists));
    out.min_list_size = static_cast<std::size_t>(palette_size);
    for (const auto & l : out.lists.lists)
        out.min_list_size = std::min(out.min_list_size, l.size());
    return out;
}

/// Lists of copy i, indexed by h's vertices.
inline auto copy_lists(const Counterexample & cx, std::size_t i, int h_vertex_count) -> ListAssignment
{
    auto map = cx.index.correspondence(i, h_vertex_count);
    std::vector<std::vector<Color>> lists(static_cast<std::size_t>(h_vertex_count));
    for (int v = 0 ; v < h_vertex_count ; ++v)
        lists[v] = cx.lists[map[v]];
    return ListAssignment(std::move(lists));
}

/// True iff the copy of h with lists l admits no L-colouring once B is fixed
/// to c.  c must be proper on the clique B.
inline auto verify_no_l_coloring_pigeonhole(const Graph & h, const ListAssignment & l, const std::vector<Color> & c) -> bool
{
    const auto h_b = h.vertices_labelled(Label::b).members();
    if (c.size() != h_b.size())
        throw std::invalid_argument("colouring of B has the wrong length");
    if (static_cast<int>(l.size()) != h.vertex_count())
        throw std::invalid_argument("list assignment does not match h");
    for (std::size_t i = 0 ; i < c.size() ; ++i)
        for (std::size_t j = i + 1 ; j < c.size() ; ++j)
            if (c[i] == c[j] && h.adjacent(h_b[i], h_b[j]))
                throw std::invalid_argument("colouring of B is not proper");
    auto fixed = l.lists;
    for (std::size_t j = 0 ; j < h_b.size() ; ++j) {
        if (! l.allows(h_b[j], c[j]))
            return true;
        fixed[h_b[j]] = { c[j] };
    }
    return ! find_l_coloring(h, ListAssignment(std::move(fixed))).has_value();
}

inline auto to_json(const CopyIndex & index) -> nlohmann::json
{
    auto copies = nlohmann::json::array();
    for (const auto & rec : index.copies)
        copies.push_back({ { "coloring", rec.coloring }, { "first", rec.first }, { "size", index.h_a.size() } });
    return nlohmann::json{ { "h_a", index.h_a }, { "h_b", index.h_b }, { "copies", std::move(copies) } };
}

}
