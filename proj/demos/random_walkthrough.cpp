// Runs the full verification battery on one random Eulerian digraph and
// prints the machine-readable report lines, exactly as the CLI's verify
// subcommand would.

#include <iostream>

#include "eulerext/checks.hpp"
#include "eulerext/generators.hpp"
#include "eulerext/report.hpp"

using namespace eulerext;

int main() {
    const Digraph g = random_eulerian(8, 20, 7);
    std::cout << "random Eulerian digraph: " << g.vertex_count() << " vertices, "
              << g.arc_count() << " arcs\n";

    int failing = 0;
    for (const std::string& name : verify_check_names()) {
        const BoundReport r = run_verify_check(name, g, kDefaultExactBetaCap);
        std::cout << bound_report_to_line(r) << "\n";
        if (r.verdict == Verdict::FAIL) ++failing;
    }
    return failing == 0 ? 0 : 1;
}
