#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eulerext {

using Arc = std::pair<int, int>;

/* Simple directed graph: no loops, no parallel arcs; the antiparallel pair
 * (u,v),(v,u) is allowed. Vertices are dense 0-indexed ids. Values are
 * immutable after construction; "mutating" operations below return new
 * graphs, so sharing across threads is safe.
 */
class Digraph {
public:
    Digraph(int vertex_count, std::vector<Arc> arcs)
        : n_(vertex_count), arcs_(std::move(arcs)) {
        if (n_ <= 0) throw std::invalid_argument("vertex count must be positive");
        std::sort(arcs_.begin(), arcs_.end());
        out_.assign(n_, {});
        in_.assign(n_, {});
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            auto [u, v] = arcs_[i];
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::invalid_argument("arc endpoint out of range: (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("loop arc not allowed: (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
            if (i > 0 && arcs_[i] == arcs_[i - 1])
                throw std::invalid_argument("duplicate arc: (" + std::to_string(u) + "," +
                                            std::to_string(v) + ")");
            out_[u].push_back(v);
            in_[v].push_back(u);
        }
        // out_ is filled in (u,v) order so each list is already sorted; in_ is not.
        for (auto& lst : in_) std::sort(lst.begin(), lst.end());
    }

    static Digraph empty(int vertex_count) { return Digraph(vertex_count, {}); }

    int vertex_count() const { return n_; }
    long long arc_count() const { return (long long)arcs_.size(); }

    /// All arcs, sorted by (u, v).
    const std::vector<Arc>& arcs() const { return arcs_; }

    const std::vector<int>& out(int v) const { return out_.at(v); }
    const std::vector<int>& in(int v) const { return in_.at(v); }
    int out_degree(int v) const { return (int)out_.at(v).size(); }
    int in_degree(int v) const { return (int)in_.at(v).size(); }
    bool is_isolated(int v) const { return out_.at(v).empty() && in_.at(v).empty(); }

    bool has_arc(int u, int v) const {
        if (u < 0 || u >= n_) return false;
        return std::binary_search(out_[u].begin(), out_[u].end(), v);
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_, in_;
};

/// True iff in-degree equals out-degree at every vertex. Connectivity is not
/// part of the definition used here.
inline bool is_eulerian(const Digraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.in_degree(v) != g.out_degree(v)) return false;
    return true;
}

struct CutBalance {
    long long forward = 0;   // arcs A -> V\A
    long long backward = 0;  // arcs V\A -> A
};

/// Crossing-arc counts of the cut (A, V\A). In an Eulerian digraph the two
/// counts are always equal.
inline CutBalance cut_balance(const Digraph& g, const std::vector<int>& subset) {
    std::vector<char> in_a(g.vertex_count(), 0);
    for (int v : subset) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("cut subset vertex out of range");
        in_a[v] = 1;
    }
    CutBalance cb;
    for (const auto& [u, v] : g.arcs()) {
        if (in_a[u] && !in_a[v]) ++cb.forward;
        else if (!in_a[u] && in_a[v]) ++cb.backward;
    }
    return cb;
}

struct TwoCycleRemoval {
    Digraph graph;         // no antiparallel pair remains
    long long removed = 0; // number of 2-cycles deleted (2*removed arcs)
};

/// Deletes every antiparallel pair (u,v),(v,u). Preserves degree balance, so
/// an Eulerian input stays Eulerian.
inline TwoCycleRemoval remove_two_cycles(const Digraph& g) {
    std::vector<Arc> kept;
    long long pairs = 0;
    for (const auto& [u, v] : g.arcs()) {
        if (g.has_arc(v, u)) {
            if (u < v) ++pairs;  // count each 2-cycle once
        } else {
            kept.emplace_back(u, v);
        }
    }
    return TwoCycleRemoval{Digraph(g.vertex_count(), std::move(kept)), pairs};
}

/// Removes the given arcs; each must be present.
inline Digraph delete_arcs(const Digraph& g, const std::vector<Arc>& to_delete) {
    std::vector<Arc> sorted = to_delete;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Arc> kept;
    kept.reserve(g.arcs().size());
    std::size_t j = 0;
    for (const auto& a : g.arcs()) {
        if (j < sorted.size() && sorted[j] == a) {
            ++j;
            while (j < sorted.size() && sorted[j] == sorted[j - 1]) ++j;  // tolerate dup requests
        } else {
            kept.push_back(a);
        }
    }
    if (j != sorted.size())
        throw std::invalid_argument("delete_arcs: arc not present in graph");
    return Digraph(g.vertex_count(), std::move(kept));
}

/// Removes vertex v with its incident arcs; ids above v shift down by one.
inline Digraph delete_vertex(const Digraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("delete_vertex: vertex out of range");
    if (g.vertex_count() == 1)
        throw std::invalid_argument("delete_vertex: cannot delete the last vertex");
    std::vector<Arc> kept;
    for (const auto& [a, b] : g.arcs()) {
        if (a == v || b == v) continue;
        kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Digraph(g.vertex_count() - 1, std::move(kept));
}

/// Minimum out-degree over all vertices (isolated ones included) and the
/// lowest-id vertex attaining it.
inline std::pair<int, int> min_out_degree(const Digraph& g) {
    int best = g.out_degree(0), witness = 0;
    for (int v = 1; v < g.vertex_count(); ++v) {
        if (g.out_degree(v) < best) { best = g.out_degree(v); witness = v; }
    }
    return {best, witness};
}

/* One linear order of the vertex set: the certificate object for feedback
 * arc sets. Keeps both directions of the bijection.
 */
class VertexOrder {
public:
    static VertexOrder from_sequence(std::vector<int> seq) {
        VertexOrder o;
        o.seq_ = std::move(seq);
        o.pos_.assign(o.seq_.size(), -1);
        for (std::size_t i = 0; i < o.seq_.size(); ++i) {
            int v = o.seq_[i];
            if (v < 0 || (std::size_t)v >= o.seq_.size() || o.pos_[v] != -1)
                throw std::invalid_argument("vertex order is not a permutation");
            o.pos_[v] = (int)i;
        }
        return o;
    }

    static VertexOrder from_positions(std::vector<int> positions) {
        std::vector<int> seq(positions.size(), -1);
        for (std::size_t v = 0; v < positions.size(); ++v) {
            int p = positions[v];
            if (p < 0 || (std::size_t)p >= positions.size() || seq[p] != -1)
                throw std::invalid_argument("vertex order is not a permutation");
            seq[p] = (int)v;
        }
        return from_sequence(std::move(seq));
    }

    static VertexOrder identity(int n) {
        std::vector<int> seq(n);
        for (int i = 0; i < n; ++i) seq[i] = i;
        return from_sequence(std::move(seq));
    }

    int size() const { return (int)seq_.size(); }
    int position(int v) const { return pos_.at(v); }
    int vertex_at(int p) const { return seq_.at(p); }
    const std::vector<int>& sequence() const { return seq_; }
    const std::vector<int>& positions() const { return pos_; }

    friend bool operator==(const VertexOrder& a, const VertexOrder& b) {
        return a.seq_ == b.seq_;
    }

private:
    VertexOrder() = default;
    std::vector<int> seq_;  // seq_[p] = vertex at position p
    std::vector<int> pos_;  // pos_[v] = position of vertex v
};

}  // namespace eulerext
