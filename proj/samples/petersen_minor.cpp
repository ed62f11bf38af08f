// Finds K_{s,t} minors of the Petersen graph and prints the branch sets.

#include <listminor/graph.hpp>
#include <listminor/minors.hpp>

#include <iostream>

using namespace listminor;

int main()
{
    const auto g = petersen_graph();
    for (int s = 1 ; s <= 4 ; ++s)
        for (int t = s ; s + t <= 8 ; ++t) {
            auto r = find_kst_minor(g, MinorQuery(s, t));
            std::cout << "K_{" << s << "," << t << "}: ";
            if (! r.found()) {
                std::cout << "none (" << r.nodes << " nodes)\n";
                continue;
            }
            std::cout << to_json(r.model()).dump() << '\n';
        }
}
