#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerext/digraph.hpp"

namespace eulerext {

/* Generators for the extremal families plus deterministic random Eulerian
 * instances. Every generator output satisfies is_eulerian.
 */

/// Circulant digraph on n vertices with arc set {(i, i+j mod n) : 1 <= j <= t}.
/// t-out-regular and t-in-regular, m = t*n. 2-cycle-free whenever t < n/2.
inline Digraph cayley_circulant(int n, int t) {
    if (n <= 0) throw std::invalid_argument("cayley_circulant: n must be positive");
    if (t < 1 || t >= n) throw std::invalid_argument("cayley_circulant: need 1 <= t < n");
    std::vector<Arc> arcs;
    arcs.reserve((std::size_t)n * t);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= t; ++j) arcs.emplace_back(i, (i + j) % n);
    return Digraph(n, std::move(arcs));
}

/* Layered gadget with s hub groups U_1..U_s and a chain of t layers V_1..V_t,
 * every group of size s. Layers are joined by complete bipartite arc sets
 * V_i -> V_{i+1}; each hub vertex u in U_i sends one arc to the i'th vertex
 * of V_1 and receives one arc from the i'th vertex of V_t. Gives (s+t)s
 * vertices and s^2(t+1) arcs; every hub vertex has in-degree = out-degree = 1,
 * which pins the minimum degree of any Eulerian subgraph at 1.
 *
 * Vertex ids: U_i occupies [(i-1)s, i*s), then V_j occupies
 * [s^2 + (j-1)s, s^2 + j*s); "the i'th vertex of a layer" is by ascending id.
 */
inline Digraph gadget_hst(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("gadget_hst: need s >= 1 and t >= 1");
    const int n = (s + t) * s;
    auto u_id = [&](int i, int p) { return (i - 1) * s + p; };          // 1<=i<=s, 0<=p<s
    auto v_id = [&](int j, int p) { return s * s + (j - 1) * s + p; };  // 1<=j<=t, 0<=p<s
    std::vector<Arc> arcs;
    arcs.reserve((std::size_t)s * s * (t + 1));
    for (int j = 1; j <= t - 1; ++j)
        for (int p = 0; p < s; ++p)
            for (int q = 0; q < s; ++q) arcs.emplace_back(v_id(j, p), v_id(j + 1, q));
    for (int i = 1; i <= s; ++i)
        for (int p = 0; p < s; ++p) {
            arcs.emplace_back(u_id(i, p), v_id(1, i - 1));
            arcs.emplace_back(v_id(t, i - 1), u_id(i, p));
        }
    return Digraph(n, std::move(arcs));
}

struct BlowupSpec {
    Digraph base;
    int delta = 1;  // copies per vertex
};

/// Replaces every vertex i of the base by delta independent copies (copy c of
/// vertex i gets id i*delta + c) and every arc by a complete bipartite arc
/// bundle between the copy sets. n' = delta*n, m' = delta^2*m; preserves the
/// Eulerian property.
inline Digraph blowup(const BlowupSpec& spec) {
    if (spec.delta < 1) throw std::invalid_argument("blowup: delta must be >= 1");
    const int d = spec.delta;
    std::vector<Arc> arcs;
    arcs.reserve(spec.base.arcs().size() * (std::size_t)d * d);
    for (const auto& [u, v] : spec.base.arcs())
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) arcs.emplace_back(u * d + a, v * d + b);
    return Digraph(spec.base.vertex_count() * d, std::move(arcs));
}

/* Counterexample graph showing that a DFS tree of an Eulerian digraph can
 * have depth 4 despite average degree ~sqrt(n)/20.
 *
 * Core part: 2t layers V_1..V_{2t} of t vertices each plus a hub r. Built in
 * t rounds; round j adds t arcs r -> V_j, one fresh perfect matching
 * V_k -> V_{k+1} for every j <= k <= 2t-j (round j uses the cyclic shift
 * j-1, so matchings of different rounds are disjoint), and t arcs
 * V_{2t-j+1} -> r. Then every layer vertex v gets companions v_in, v_out and
 * the 4-cycle r -> v_in -> v -> v_out -> r.
 *
 * Ids: r = 0; layer vertex (k, p) = 1 + (k-1)t + p; its companions are
 * 1 + 2t^2 + 2*idx and 2 + 2t^2 + 2*idx for idx = (k-1)t + p.
 * Total: 6t^2 + 1 vertices.
 *
 * roles[v] is one of "r", "level:<k>:<p>", "in:<host-id>", "out:<host-id>".
 */
struct DfsCounterexample {
    Digraph graph;
    std::vector<std::string> roles;
    int t = 0;
};

inline DfsCounterexample dfs_counterexample(int t) {
    if (t < 1) throw std::invalid_argument("dfs_counterexample: t must be >= 1");
    const int n = 6 * t * t + 1;
    auto level_id = [&](int k, int p) { return 1 + (k - 1) * t + p; };
    auto in_id = [&](int k, int p) { return 1 + 2 * t * t + 2 * ((k - 1) * t + p); };
    auto out_id = [&](int k, int p) { return in_id(k, p) + 1; };

    std::vector<Arc> arcs;
    for (int j = 1; j <= t; ++j) {
        for (int p = 0; p < t; ++p) arcs.emplace_back(0, level_id(j, p));
        for (int k = j; k <= 2 * t - j; ++k)
            for (int p = 0; p < t; ++p)
                arcs.emplace_back(level_id(k, p), level_id(k + 1, (p + j - 1) % t));
        for (int p = 0; p < t; ++p) arcs.emplace_back(level_id(2 * t - j + 1, p), 0);
    }
    for (int k = 1; k <= 2 * t; ++k)
        for (int p = 0; p < t; ++p) {
            arcs.emplace_back(0, in_id(k, p));
            arcs.emplace_back(in_id(k, p), level_id(k, p));
            arcs.emplace_back(level_id(k, p), out_id(k, p));
            arcs.emplace_back(out_id(k, p), 0);
        }

    std::vector<std::string> roles(n);
    roles[0] = "r";
    for (int k = 1; k <= 2 * t; ++k)
        for (int p = 0; p < t; ++p) {
            roles[level_id(k, p)] = "level:" + std::to_string(k) + ":" + std::to_string(p);
            roles[in_id(k, p)] = "in:" + std::to_string(level_id(k, p));
            roles[out_id(k, p)] = "out:" + std::to_string(level_id(k, p));
        }
    return DfsCounterexample{Digraph(n, std::move(arcs)), std::move(roles), t};
}

/* DFS priority derived from the counterexample's role labels: the hub prefers
 * the in-companions of deeper layers first (descending k, then ascending
 * position), then its direct layer arcs; a layer vertex prefers its
 * out-companion before anything else. Under this policy every excursion from
 * the hub is hub -> v_in -> v -> v_out, so the DFS tree has depth 4.
 */
inline std::vector<std::vector<int>> role_guided_priority(const Digraph& g,
                                                          const std::vector<std::string>& roles) {
    const int n = g.vertex_count();
    if ((int)roles.size() != n)
        throw std::invalid_argument("role_guided_priority: one role per vertex required");

    auto parse_int = [](const std::string& s, const char* what) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(s, &used);
            if (used != s.size() || value < 0) throw std::invalid_argument(what);
            return value;
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("role_guided_priority: bad ") + what);
        }
    };

    int hub = -1;
    std::vector<int> layer_of(n, -1);  // k for "level:k:p" vertices
    std::vector<int> host_of(n, -1);   // host id for in/out companions
    for (int v = 0; v < n; ++v) {
        const std::string& r = roles[v];
        if (r == "r") {
            if (hub >= 0) throw std::invalid_argument("role_guided_priority: two hub roles");
            hub = v;
        } else if (r.rfind("level:", 0) == 0) {
            const auto second = r.find(':', 6);
            if (second == std::string::npos)
                throw std::invalid_argument("role_guided_priority: malformed level role");
            layer_of[v] = parse_int(r.substr(6, second - 6), "layer number");
        } else if (r.rfind("in:", 0) == 0 || r.rfind("out:", 0) == 0) {
            const int host = parse_int(r.substr(r.find(':') + 1), "companion host");
            if (host >= n) throw std::invalid_argument("role_guided_priority: host out of range");
            host_of[v] = host;
        } else {
            throw std::invalid_argument("role_guided_priority: unknown role '" + r + "'");
        }
    }
    if (hub < 0) throw std::invalid_argument("role_guided_priority: no hub role");

    std::vector<std::vector<int>> priority(n);
    for (int v = 0; v < n; ++v) {
        priority[v] = g.out(v);  // ascending by construction
        if (v == hub) {
            std::stable_sort(priority[v].begin(), priority[v].end(), [&](int a, int b) {
                const bool ain = roles[a].rfind("in:", 0) == 0;
                const bool bin = roles[b].rfind("in:", 0) == 0;
                if (ain != bin) return ain;  // companions before direct layer arcs
                if (!ain) return a < b;
                const int la = layer_of[host_of[a]], lb = layer_of[host_of[b]];
                if (la != lb) return la > lb;  // deeper layers first
                return host_of[a] < host_of[b];
            });
        } else if (layer_of[v] >= 0) {
            std::stable_sort(priority[v].begin(), priority[v].end(), [&](int a, int b) {
                const bool aout = host_of[a] == v && roles[a].rfind("out:", 0) == 0;
                const bool bout = host_of[b] == v && roles[b].rfind("out:", 0) == 0;
                if (aout != bout) return aout;  // own out-companion first
                return a < b;
            });
        }
    }
    return priority;
}

/// Random Eulerian digraph built by superposing random simple directed cycles
/// whose arcs are not yet present. Deterministic for a fixed seed; stops at
/// target_m arcs or after a bounded run of rejected candidates, so the final
/// arc count can fall short of target_m.
inline Digraph random_eulerian(int n, long long target_m, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("random_eulerian: n must be positive");
    if (target_m < 0 || target_m > (long long)n * (n - 1))
        throw std::invalid_argument("random_eulerian: target_m out of range");
    std::mt19937_64 rng(seed);
    auto draw = [&](long long lo, long long hi) {  // inclusive bounds
        return lo + (long long)(rng() % (std::uint64_t)(hi - lo + 1));
    };

    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    std::vector<Arc> arcs;
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;

    int consecutive_rejects = 0;
    const int reject_limit = 256;
    while ((long long)arcs.size() + 2 <= target_m && consecutive_rejects < reject_limit) {
        long long budget = target_m - (long long)arcs.size();
        int k = (int)draw(2, std::min<long long>(n, budget));
        for (int i = 0; i < k; ++i) {
            int j = (int)draw(i, n - 1);
            std::swap(pool[i], pool[j]);
        }
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            if (present[pool[i]][pool[(i + 1) % k]]) ok = false;
        if (!ok) {
            ++consecutive_rejects;
            continue;
        }
        consecutive_rejects = 0;
        for (int i = 0; i < k; ++i) {
            present[pool[i]][pool[(i + 1) % k]] = 1;
            arcs.emplace_back(pool[i], pool[(i + 1) % k]);
        }
    }
    return Digraph(n, std::move(arcs));
}

}  // namespace eulerext
