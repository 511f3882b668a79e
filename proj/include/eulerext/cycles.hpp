#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerext/digraph.hpp"
#include "eulerext/fas.hpp"
#include "eulerext/rational.hpp"
#include "eulerext/report.hpp"

namespace eulerext {

/* Cycle structure: girth, arc-disjoint short-cycle peeling, the high-min-degree
 * Eulerian subgraph extraction, the two long-cycle routes, and a priority-driven
 * DFS. Every returned Cycle is simple and canonicalized to start at its lowest
 * vertex id.
 */

struct Cycle {
    std::vector<int> vertices;  // v_0 .. v_{k-1}, arcs (v_i, v_{i+1 mod k})

    long long length() const { return (long long)vertices.size(); }
    bool operator==(const Cycle&) const = default;
};

/// Rotates so the lowest vertex id comes first; the unique canonical form of a
/// simple cycle's vertex sequence.
inline Cycle canonical_rotation(Cycle c) {
    if (c.vertices.empty()) return c;
    const auto lowest = std::min_element(c.vertices.begin(), c.vertices.end());
    std::rotate(c.vertices.begin(), lowest, c.vertices.end());
    return c;
}

inline std::vector<Arc> cycle_arcs(const Cycle& c) {
    std::vector<Arc> arcs;
    const std::size_t k = c.vertices.size();
    arcs.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        arcs.emplace_back(c.vertices[i], c.vertices[(i + 1) % k]);
    return arcs;
}

/// True iff c is a simple directed cycle of g: length >= 2, distinct vertices,
/// every consecutive arc present.
inline bool is_valid_cycle(const Digraph& g, const Cycle& c) {
    if (c.vertices.size() < 2) return false;
    std::vector<int> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.front() < 0 || sorted.back() >= g.vertex_count()) return false;
    for (const auto& [u, v] : cycle_arcs(c))
        if (!g.has_arc(u, v)) return false;
    return true;
}

inline std::string cycle_to_string(const Cycle& c) {
    std::string s;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(c.vertices[i]);
    }
    return s;
}

struct CycleCollection {
    std::vector<Cycle> cycles;
    bool arc_disjoint = false;  // when set, no arc appears in two cycles
};

struct GirthResult {
    long long length = 0;
    Cycle witness;
};

/// Shortest directed cycle, or nullopt when g is acyclic. One BFS per source
/// s (ascending): the shortest cycle starting at s is the shortest path from s
/// to any u carrying an arc back to s, plus that arc. The first source
/// achieving the global minimum is the lowest vertex id on any shortest cycle,
/// so the witness needs no further canonicalization.
inline std::optional<GirthResult> girth(const Digraph& g) {
    const int n = g.vertex_count();
    std::optional<GirthResult> best;
    std::vector<int> dist(n), parent(n), order;
    order.reserve(n);
    for (int s = 0; s < n; ++s) {
        if (g.out_degree(s) == 0 || g.in_degree(s) == 0) continue;
        std::fill(dist.begin(), dist.end(), -1);
        order.clear();
        dist[s] = 0;
        parent[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            order.push_back(u);
            for (int w : g.out(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                }
        }
        for (int u : order) {  // BFS order: first hit has minimal dist
            if (!g.has_arc(u, s)) continue;
            const long long len = dist[u] + 1;
            if (!best || len < best->length) {
                Cycle c;
                for (int x = u; x != -1; x = parent[x]) c.vertices.push_back(x);
                std::reverse(c.vertices.begin(), c.vertices.end());  // s .. u
                best = GirthResult{len, std::move(c)};
            }
            break;
        }
        if (best && best->length == 2) break;  // nothing shorter exists
    }
    return best;
}

/// Checks girth(g) <= 6n^2/m on an Eulerian input, exact rationals throughout.
inline BoundReport girth_bound_check(const Digraph& g) {
    if (!is_eulerian(g)) throw std::invalid_argument("girth_bound_check: graph is not Eulerian");
    if (g.arc_count() < 1) throw std::invalid_argument("girth_bound_check: need at least one arc");
    const auto start = std::chrono::steady_clock::now();
    const auto result = girth(g);
    if (!result)
        throw std::logic_error("girth_bound_check: Eulerian graph with arcs has no cycle");
    const long long n = g.vertex_count();
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return make_bound_report("girth", Rational(result->length),
                             Rational(6 * n * n, g.arc_count()), "<=",
                             cycle_to_string(result->witness), elapsed);
}

struct PeelResult {
    CycleCollection collection;
    Digraph residual;
};

/// Repeatedly removes the current girth witness while at least half the
/// original arcs remain. The collected cycles are arc-disjoint, each of length
/// at most 12n^2/m (guarded: a longer witness would contradict the girth
/// bound, so it is reported as an internal error), and there are at least
/// m^2/(24n^2) of them.
inline PeelResult peel_short_cycles(const Digraph& g) {
    if (!is_eulerian(g)) throw std::invalid_argument("peel_short_cycles: graph is not Eulerian");
    const long long m0 = g.arc_count();
    if (m0 < 2) throw std::invalid_argument("peel_short_cycles: need at least two arcs");
    const long long n = g.vertex_count();
    PeelResult result{CycleCollection{{}, true}, g};
    while (2 * result.residual.arc_count() >= m0) {
        const auto witness = girth(result.residual);
        if (!witness)
            throw std::logic_error("peel_short_cycles: residual with >= m/2 arcs is acyclic");
        if (witness->length * m0 > 12 * n * n)
            throw std::logic_error(
                "peel_short_cycles: girth witness longer than 12n^2/m; this contradicts the "
                "girth bound and indicates a bug");
        result.residual = delete_arcs(result.residual, cycle_arcs(witness->witness));
        result.collection.cycles.push_back(witness->witness);
    }
    return result;
}

struct SubgraphResult {
    Digraph subgraph;            // union of the kept cycles, on the input's vertex ids
    CycleCollection kept;
    long long initial_cycle_count = 0;  // t, the peel's collection size
    long long degree_threshold = 0;     // ceil(t/n): guaranteed min positive out-degree
};

/// The high-min-degree Eulerian subgraph: peel a collection of t arc-disjoint
/// short cycles, then repeatedly drop the lowest-id vertex lying on fewer than
/// ceil(t/n) kept cycles together with all its cycles. At most
/// n*(ceil(t/n)-1) <= t-1 cycles die, so the result is a nonempty Eulerian
/// subgraph in which every non-isolated vertex has out-degree >= ceil(t/n).
inline SubgraphResult min_degree_eulerian_subgraph(const Digraph& g) {
    const PeelResult peel = peel_short_cycles(g);
    const int n = g.vertex_count();
    const long long t = (long long)peel.collection.cycles.size();
    const long long threshold = ceil_div(t, (long long)n);

    std::vector<Cycle> kept = peel.collection.cycles;
    while (true) {
        std::vector<long long> count(n, 0);
        for (const Cycle& c : kept)
            for (int v : c.vertices) ++count[v];
        int victim = -1;
        for (int v = 0; v < n && victim < 0; ++v)
            if (count[v] > 0 && count[v] <= threshold - 1) victim = v;
        if (victim < 0) break;
        std::vector<Cycle> survivors;
        survivors.reserve(kept.size());
        for (Cycle& c : kept)
            if (std::find(c.vertices.begin(), c.vertices.end(), victim) == c.vertices.end())
                survivors.push_back(std::move(c));
        kept = std::move(survivors);
    }
    if (kept.empty())
        throw std::logic_error(
            "min_degree_eulerian_subgraph: peel left no cycles; the counting argument forbids "
            "this");

    std::vector<Arc> arcs;  // cycles are arc-disjoint, so plain concatenation
    for (const Cycle& c : kept)
        for (const auto& a : cycle_arcs(c)) arcs.push_back(a);
    return SubgraphResult{Digraph(n, std::move(arcs)), CycleCollection{std::move(kept), true}, t,
                          threshold};
}

/// Greedy maximal-path cycle: grow a path from the lowest-id live vertex,
/// always stepping to the lowest-id unvisited out-neighbor; when the tail
/// cannot grow, close at the earliest path vertex the tail points to, which
/// yields a cycle of length >= out-degree(tail)+1. Vertices that provably
/// reach no cycle (sinks and vertices whose every out-neighbor is such) are
/// marked dead and the path backtracks past them, so the result is nullopt
/// exactly when g is acyclic. When every non-isolated vertex has positive
/// out-degree, no vertex ever dies and the classic length guarantee
/// min-positive-out-degree + 1 holds.
inline std::optional<Cycle> maximal_path_cycle(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<char> on_path(n, 0), dead(n, 0);
    std::vector<int> path;
    std::vector<int> path_pos(n, -1);

    auto push = [&](int v) {
        path_pos[v] = (int)path.size();
        path.push_back(v);
        on_path[v] = 1;
    };

    while (true) {
        if (path.empty()) {
            int start = -1;
            for (int v = 0; v < n && start < 0; ++v)
                if (!dead[v] && g.out_degree(v) > 0) start = v;
            if (start < 0) return std::nullopt;  // every candidate died: acyclic
            push(start);
        }
        const int tail = path.back();
        int step = -1, close = -1;
        for (int w : g.out(tail)) {  // ascending, so first hits are lowest-id
            if (!on_path[w] && !dead[w] && step < 0) step = w;
            if (on_path[w] && (close < 0 || path_pos[w] < path_pos[close])) close = w;
        }
        if (step >= 0) {
            push(step);
        } else if (close >= 0) {
            Cycle c;
            c.vertices.assign(path.begin() + path_pos[close], path.end());
            return canonical_rotation(std::move(c));
        } else {  // every out-neighbor dead (or none): tail reaches no cycle
            dead[tail] = 1;
            on_path[tail] = 0;
            path_pos[tail] = -1;
            path.pop_back();
        }
    }
}

/// Decomposes the arcs incident to v into exactly out-degree(v) arc-disjoint
/// simple cycles, each through v. Each round walks from an unused out-arc of
/// v taking the lowest-id unused arc at every step; arcs are consumed as they
/// are walked, so the trail is finite, and the pool's degree balance
/// guarantees it can only stop at v. The simple cycle is then extracted from
/// the recorded trail: each closed sub-walk at a repeated intermediate vertex
/// is excised and its arcs return to the pool. (Refunding eagerly mid-walk
/// would restore the exact pool state that produced the sub-walk and loop
/// forever; refunding from the finished trail keeps the same pool semantics
/// and terminates.)
inline CycleCollection cycles_through_vertex(const Digraph& g, int v) {
    if (!is_eulerian(g))
        throw std::invalid_argument("cycles_through_vertex: graph is not Eulerian");
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("cycles_through_vertex: vertex out of range");
    if (g.out_degree(v) == 0) throw std::invalid_argument("cycles_through_vertex: vertex is isolated");

    const int n = g.vertex_count();
    // used[u] runs parallel to out(u); excised arcs return to the pool.
    std::vector<std::vector<char>> used(n);
    for (int u = 0; u < n; ++u) used[u].assign(g.out(u).size(), 0);
    auto take_lowest = [&](int u) -> int {  // index into out(u), or -1
        for (std::size_t i = 0; i < used[u].size(); ++i)
            if (!used[u][i]) {
                used[u][i] = 1;
                return (int)i;
            }
        return -1;
    };

    CycleCollection result;
    result.arc_disjoint = true;
    for (int rounds = g.out_degree(v); rounds > 0; --rounds) {
        std::vector<int> trail{v};       // v never reappears before the stop
        std::vector<int> trail_arc{-1};  // trail_arc[i]: index into out(trail[i-1])
        while (true) {
            const int cur = trail.back();
            const int idx = take_lowest(cur);
            if (idx < 0)
                throw std::logic_error(
                    "cycles_through_vertex: walk stuck before returning; pool balance violated");
            trail.push_back(g.out(cur)[idx]);
            trail_arc.push_back(idx);
            if (trail.back() == v) break;
        }

        std::vector<int> kept{v};      // prefix of the trail with loops excised
        std::vector<int> kept_arc{-1};
        std::vector<int> kept_pos(n, -1);
        kept_pos[v] = 0;
        for (std::size_t i = 1; i + 1 < trail.size(); ++i) {
            const int x = trail[i];
            if (kept_pos[x] >= 0) {  // excise kept[j..] plus the arc into x
                const int j = kept_pos[x];
                used[kept.back()][trail_arc[i]] = 0;
                for (std::size_t k = j + 1; k < kept.size(); ++k) {
                    used[kept[k - 1]][kept_arc[k]] = 0;
                    kept_pos[kept[k]] = -1;
                }
                kept.resize(j + 1);
                kept_arc.resize(j + 1);
                continue;
            }
            kept_pos[x] = (int)kept.size();
            kept.push_back(x);
            kept_arc.push_back(trail_arc[i]);
        }
        result.cycles.push_back(canonical_rotation(Cycle{std::move(kept)}));
    }
    return result;
}

/// A cycle of length at least 1 + floor(sqrt(m/n)), with m, n taken from the
/// original input. While some vertex has positive out-degree below the
/// threshold, its cycles either already contain a long-enough one or are
/// removed wholesale (isolating the vertex, Eulerian-ness preserved); once the
/// minimum positive out-degree reaches the threshold, the maximal-path route
/// finishes.
inline Cycle long_cycle(const Digraph& g) {
    if (!is_eulerian(g)) throw std::invalid_argument("long_cycle: graph is not Eulerian");
    if (g.arc_count() < 2) throw std::invalid_argument("long_cycle: need at least two arcs");
    const long long target = 1 + floor_sqrt_ratio(g.arc_count(), g.vertex_count());

    Digraph cur = g;
    while (true) {
        if (cur.arc_count() == 0)
            throw std::logic_error("long_cycle: ran out of arcs before finding a cycle");
        int low = -1;
        for (int v = 0; v < cur.vertex_count(); ++v) {
            if (cur.is_isolated(v)) continue;
            if (low < 0 || cur.out_degree(v) < cur.out_degree(low)) low = v;
        }
        if (cur.out_degree(low) + 1 >= target) {
            const auto c = maximal_path_cycle(cur);
            if (!c) throw std::logic_error("long_cycle: Eulerian graph with arcs has no cycle");
            return *c;
        }
        int victim = -1;  // lowest id below the threshold
        for (int v = 0; v < cur.vertex_count() && victim < 0; ++v)
            if (!cur.is_isolated(v) && cur.out_degree(v) + 1 < target) victim = v;
        const CycleCollection through = cycles_through_vertex(cur, victim);
        std::vector<Arc> doomed;
        for (const Cycle& c : through.cycles) {
            if (c.length() >= target) return c;
            for (const auto& a : cycle_arcs(c)) doomed.push_back(a);
        }
        cur = delete_arcs(cur, doomed);  // victim ends up isolated
    }
}

/// Runs both long-cycle routes — the threshold loop above and a maximal-path
/// walk inside the high-min-degree subgraph — and returns the longer cycle.
/// Guarantees length >= 1 + max(floor(sqrt(m/n)), m^2/24n^3).
inline Cycle long_cycle_combined(const Digraph& g) {
    Cycle best = long_cycle(g);
    const SubgraphResult sub = min_degree_eulerian_subgraph(g);
    const auto via_subgraph = maximal_path_cycle(sub.subgraph);
    if (!via_subgraph)
        throw std::logic_error("long_cycle_combined: nonempty Eulerian subgraph has no cycle");
    if (via_subgraph->length() > best.length()) best = *via_subgraph;
    return best;
}

struct DfsTree {
    int root = 0;                  // the requested primary root
    std::vector<int> parent;       // -1 for forest roots
    std::vector<int> roots;        // restart roots in order; front() == root
    std::vector<int> visit_order;  // discovery order across the forest
    std::vector<int> level;        // vertices on the tree path from own root (root = 1)
    std::vector<long long> depth_per_root;  // aligned with roots

    /// Vertices on the longest root-to-leaf path of the primary root's tree.
    long long depth() const { return depth_per_root.empty() ? 0 : depth_per_root.front(); }
};

/// Depth-first search honoring a per-vertex priority over out-neighbors.
/// priority[v] must be a permutation of g.out(v). When the stack empties the
/// search restarts from the lowest-id unvisited vertex, so every vertex
/// appears exactly once across the forest. Whenever a vertex is completed,
/// the no-arc-from-completed-to-unvisited invariant is asserted; a violation
/// throws, as it would falsify the search's core property.
inline DfsTree dfs_tree(const Digraph& g, int root,
                        const std::vector<std::vector<int>>& priority) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("dfs_tree: root out of range");
    if ((int)priority.size() != n)
        throw std::invalid_argument("dfs_tree: priority must cover every vertex");
    for (int v = 0; v < n; ++v) {
        std::vector<int> sorted = priority[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.out(v))
            throw std::invalid_argument(
                "dfs_tree: priority[" + std::to_string(v) +
                "] is not a permutation of the vertex's out-neighbors");
    }

    DfsTree t;
    t.root = root;
    t.parent.assign(n, -1);
    t.level.assign(n, 0);
    enum : char { UNVISITED, ACTIVE, DONE };
    std::vector<char> state(n, UNVISITED);
    std::vector<std::size_t> next_child(n, 0);
    std::vector<int> root_of(n, -1);
    std::vector<int> stack;

    auto discover = [&](int v, int par, int rt) {
        state[v] = ACTIVE;
        t.parent[v] = par;
        t.level[v] = par < 0 ? 1 : t.level[par] + 1;
        root_of[v] = rt;
        t.visit_order.push_back(v);
        stack.push_back(v);
    };

    int pending_root = root;
    while (true) {
        if (stack.empty()) {
            int fresh = -1;
            if (pending_root >= 0 && state[pending_root] == UNVISITED) fresh = pending_root;
            pending_root = -1;
            for (int v = 0; v < n && fresh < 0; ++v)
                if (state[v] == UNVISITED) fresh = v;
            if (fresh < 0) break;
            t.roots.push_back(fresh);
            discover(fresh, -1, fresh);
        }
        const int v = stack.back();
        if (next_child[v] < priority[v].size()) {
            const int w = priority[v][next_child[v]++];
            if (state[w] == UNVISITED) discover(w, v, root_of[v]);
        } else {
            stack.pop_back();
            state[v] = DONE;
            for (int w : g.out(v))
                if (state[w] == UNVISITED)
                    throw std::logic_error(
                        "dfs_tree: arc from a completed vertex to an unvisited one; the "
                        "completed/unvisited separation is broken");
        }
    }

    t.depth_per_root.assign(t.roots.size(), 0);
    std::vector<int> root_index(n, -1);
    for (std::size_t i = 0; i < t.roots.size(); ++i) root_index[t.roots[i]] = (int)i;
    for (int v = 0; v < n; ++v) {
        const int idx = root_index[root_of[v]];
        t.depth_per_root[idx] = std::max(t.depth_per_root[idx], (long long)t.level[v]);
    }
    return t;
}

/// DFS with the default priority: out-neighbors in ascending id order.
inline DfsTree dfs_tree(const Digraph& g, int root) {
    std::vector<std::vector<int>> priority(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) priority[v] = g.out(v);
    return dfs_tree(g, root, priority);
}

}  // namespace eulerext
