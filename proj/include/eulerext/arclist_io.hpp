#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerext/digraph.hpp"

namespace eulerext {

/* Arc-list text format, shared by every CLI command:
 *   first line "n m", then m lines "u v" (0-indexed, space-separated,
 *   newline-terminated, no comments). write_arclist always emits arcs sorted
 *   by (u, v), so write(read(file)) is byte-identical for canonical files.
 */

inline Digraph read_arclist(std::istream& is) {
    long long n = 0, m = 0;
    if (!(is >> n >> m)) throw std::invalid_argument("arc list: bad header line");
    if (n <= 0 || m < 0) throw std::invalid_argument("arc list: invalid n or m");
    std::vector<Arc> arcs;
    arcs.reserve((std::size_t)m);
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(is >> u >> v))
            throw std::invalid_argument("arc list: expected " + std::to_string(m) +
                                        " arcs, got " + std::to_string(i));
        arcs.emplace_back((int)u, (int)v);
    }
    long long trailing;
    if (is >> trailing) throw std::invalid_argument("arc list: trailing content after arcs");
    return Digraph((int)n, std::move(arcs));
}

inline Digraph read_arclist_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    return read_arclist(f);
}

inline void write_arclist(std::ostream& os, const Digraph& g) {
    os << g.vertex_count() << ' ' << g.arc_count() << '\n';
    for (const auto& [u, v] : g.arcs()) os << u << ' ' << v << '\n';
}

inline void write_arclist_file(const std::string& path, const Digraph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open file for writing: " + path);
    write_arclist(f, g);
}

inline std::string to_arclist_string(const Digraph& g) {
    std::ostringstream os;
    write_arclist(os, g);
    return os.str();
}

}  // namespace eulerext
