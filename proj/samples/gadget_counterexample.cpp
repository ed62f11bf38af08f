// The four-vertex gadget: cliques {a1,a2} and {b1,b2}, every cross edge but
// a1b1.  Gluing one copy per colouring of B from a 3-colour palette gives a
// 20-vertex graph whose adversarial lists admit no colouring.

#include <listminor/construction/counterexample.hpp>
#include <listminor/graph_io.hpp>
#include <listminor/listcolor.hpp>

#include <iostream>

using namespace listminor;

int main()
{
    const Graph h(4, { { 0, 1 }, { 2, 3 }, { 0, 3 }, { 1, 2 }, { 1, 3 } }, { Label::a, Label::a, Label::b, Label::b });
    auto cx = build_counterexample(h, 3);

    std::cout << cx.graph.vertex_count() << " vertices, " << cx.graph.edge_count() << " edges\n";
    for (std::size_t i = 0 ; i < cx.index.copies.size() ; ++i) {
        const auto & rec = cx.index.copies[i];
        std::cout << "c = (" << rec.coloring[0] << "," << rec.coloring[1] << "): lists";
        for (std::size_t j = 0 ; j < cx.index.h_a.size() ; ++j) {
            std::cout << " {";
            for (auto c : cx.lists[rec.first + static_cast<Vertex>(j)])
                std::cout << c;
            std::cout << "}";
        }
        std::cout << '\n';
    }
    std::cout << (find_l_coloring(cx.graph, cx.lists) ? "L-colourable\n" : "no L-colouring\n");
}
