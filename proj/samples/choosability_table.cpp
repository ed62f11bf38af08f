// Small table of list chromatic numbers computed exactly.

#include <listminor/graph.hpp>
#include <listminor/listcolor.hpp>

#include <iostream>
#include <string>
#include <utility>
#include <vector>

using namespace listminor;

int main()
{
    std::vector<std::pair<std::string, Graph>> graphs{
        { "C4", cycle_graph(4) },
        { "C5", cycle_graph(5) },
        { "K4", complete_graph(4) },
        { "K2,3", complete_bipartite_graph(2, 3) },
        { "K3,3", complete_bipartite_graph(3, 3) },
    };
    for (const auto & [name, g] : graphs) {
        int k = 1;
        while (! is_k_choosable(g, k, ChoosabilityOptions{ 8, 4, true, {} }).choosable())
            ++k;
        std::cout << name << ": list chromatic number " << k << ", degeneracy bound " << greedy_degeneracy_bound(g) + 1 << '\n';
    }
}
