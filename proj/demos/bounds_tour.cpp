// Tour of the library on one circulant: exact feedback-arc number against its
// lower bound, girth against 6n^2/m, the degree-pruned subgraph, and a long
// cycle. Prints everything it computes.

#include <iostream>

#include "eulerext/cycles.hpp"
#include "eulerext/digraph.hpp"
#include "eulerext/fas.hpp"
#include "eulerext/generators.hpp"
#include "eulerext/rational.hpp"

using namespace eulerext;

int main() {
    const Digraph g = cayley_circulant(10, 2);
    const long long n = g.vertex_count(), m = g.arc_count();
    std::cout << "circulant on " << n << " vertices, " << m << " arcs\n\n";

    const FasResult fas = exact_beta(g);
    std::cout << "minimum feedback arc set: " << fas.beta << "\n";
    std::cout << "optimal order:";
    for (int v : fas.witness.sequence()) std::cout << ' ' << v;
    std::cout << "\nlower bound m^2/2n^2 + m/2n = "
              << beta_lower_bound(n, m).to_string()
              << (Rational(fas.beta) == beta_lower_bound(n, m) ? " (attained)\n\n"
                                                               : "\n\n");

    const auto gr = girth(g);
    std::cout << "girth: " << gr->length << " (witness";
    for (int v : gr->witness.vertices) std::cout << ' ' << v;
    std::cout << "), upper bound 6n^2/m = " << Rational(6 * n * n, m).to_string() << "\n\n";

    const SubgraphResult sub = min_degree_eulerian_subgraph(g);
    std::cout << "peeled " << sub.initial_cycle_count << " arc-disjoint short cycles; "
              << "pruned subgraph keeps " << sub.subgraph.arc_count()
              << " arcs with min out-degree >= " << sub.degree_threshold << "\n\n";

    const Cycle cyc = long_cycle(g);
    std::cout << "long cycle (length " << cyc.length() << "):";
    for (int v : cyc.vertices) std::cout << ' ' << v;
    std::cout << "\nguaranteed length 1 + floor(sqrt(m/n)) = "
              << 1 + floor_sqrt_ratio(m, n) << "\n";
    return 0;
}
