#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eulerext/digraph.hpp"
#include "eulerext/rational.hpp"

namespace eulerext {

/* Minimum feedback arc set via linear orders.
 *
 * beta(g) equals the minimum number of backward arcs over all linear orders
 * of the vertices, so the exact solver is a subset DP over placed-vertex
 * prefixes. Also houses the per-order diagnostics (short/long arc split, cut
 * crossings) behind the lower bound beta >= m^2/2n^2 + m/2n.
 */

inline constexpr int kDefaultExactBetaCap = 20;
inline constexpr int kHardExactBetaCap = 64;

/// Arcs (u, v) whose source is placed after its target. Removing them always
/// leaves an acyclic graph.
inline std::vector<Arc> backward_arcs(const Digraph& g, const VertexOrder& order) {
    if (order.size() != g.vertex_count())
        throw std::invalid_argument("backward_arcs: order size does not match graph");
    std::vector<Arc> result;
    for (const auto& [u, v] : g.arcs())
        if (order.position(u) > order.position(v)) result.emplace_back(u, v);
    return result;  // arcs() is sorted, so this is canonical already
}

struct FasResult {
    long long beta = 0;
    VertexOrder witness;
};

/// Exact minimum feedback arc set size plus an order achieving it.
///
/// Subset DP: best(P) = min over v in P of best(P \ {v}) + |{u not in P with
/// (u,v) an arc}| — v is placed last within P, and the arcs into v from
/// still-unplaced vertices are exactly the backward arcs v creates. O(2^n * n)
/// with bitmask popcounts. Witness backtracking prefers the lowest vertex id
/// at every step, so results are fully deterministic.
inline FasResult exact_beta(const Digraph& g, int cap = kDefaultExactBetaCap) {
    if (cap < 1 || cap > kHardExactBetaCap)
        throw std::invalid_argument("exact_beta: cap must be between 1 and 64");
    const int n = g.vertex_count();
    if (n > cap) throw std::invalid_argument("exact_beta: vertex count exceeds solver cap");

    std::vector<std::uint64_t> in_mask(n, 0);
    for (const auto& [u, v] : g.arcs()) in_mask[v] |= std::uint64_t(1) << u;

    const std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    std::vector<int> dp(std::size_t(1) << n, 0);
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        int best = -1;
        for (std::uint64_t rest = mask; rest != 0;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int cand =
                dp[mask ^ (std::uint64_t(1) << v)] + std::popcount(in_mask[v] & ~mask);
            if (best < 0 || cand < best) best = cand;
        }
        dp[mask] = best;
    }

    std::vector<int> seq(n);
    std::uint64_t mask = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        for (int v = 0; v < n; ++v) {
            const std::uint64_t bit = std::uint64_t(1) << v;
            if (!(mask & bit)) continue;
            if (dp[mask] == dp[mask ^ bit] + std::popcount(in_mask[v] & ~mask)) {
                seq[pos] = v;
                mask ^= bit;
                break;
            }
        }
    }
    return FasResult{dp[full], VertexOrder::from_sequence(std::move(seq))};
}

/// Exact rational m^2/(2n^2) + m/(2n): the lower bound on beta for Eulerian
/// digraphs. Tight exactly on the circulant family, where m is a multiple of n.
inline Rational beta_lower_bound(long long n, long long m) {
    if (n <= 0) throw std::invalid_argument("beta_lower_bound: n must be positive");
    if (m < 0) throw std::invalid_argument("beta_lower_bound: m must be nonnegative");
    return Rational(m * m, 2 * n * n) + Rational(m, 2 * n);
}

/// Sum of C(s_i+1, 2) + (n-i)*t_i over positions i = 1..n (storage 0-indexed).
inline long long f_objective(const std::vector<long long>& s, const std::vector<long long>& t,
                             int n) {
    if ((int)s.size() != n || (int)t.size() != n)
        throw std::invalid_argument("f_objective: lists must have length n");
    long long total = 0;
    for (int i = 0; i < n; ++i) {
        if (s[i] < 0 || t[i] < 0) throw std::invalid_argument("f_objective: entries must be >= 0");
        total += s[i] * (s[i] + 1) / 2 + (long long)(n - 1 - i) * t[i];
    }
    return total;
}

/// Closed-form minimum of f_objective over the feasible region
/// {0 <= s_i, t_i <= n-i, sum = m}: t*m - (t^2-t)*n/2 with t = ceil(m/n).
inline long long f_min(int n, long long m) {
    if (n <= 0) throw std::invalid_argument("f_min: n must be positive");
    if (m < 0 || m > (long long)n * (n - 1))
        throw std::invalid_argument("f_min: m outside the feasible range [0, n(n-1)]");
    const long long t = ceil_div(m, n);
    return t * m - (t * t - t) * n / 2;
}

namespace detail {

inline long long f_min_search(int n, int i, long long remaining,
                              const std::vector<long long>& suffix_capacity) {
    if (i > n) return remaining == 0 ? 0 : -1;  // -1 marks an infeasible branch
    const long long cap = n - i;                // per-position bound for both s_i and t_i
    long long best = -1;
    for (long long si = 0; si <= cap && si <= remaining; ++si)
        for (long long ti = 0; ti <= cap && si + ti <= remaining; ++ti) {
            const long long rest = remaining - si - ti;
            if (rest > suffix_capacity[i + 1]) continue;  // cannot place the rest later
            const long long tail = f_min_search(n, i + 1, rest, suffix_capacity);
            if (tail < 0) continue;
            const long long value = si * (si + 1) / 2 + (n - i) * ti + tail;
            if (best < 0 || value < best) best = value;
        }
    return best;
}

}  // namespace detail

/// Brute-force minimum of f_objective over all feasible (s, t) vectors with
/// s_i, t_i <= n-i and total sum m. Exponential; the cross-check for f_min.
inline long long f_min_oracle(int n, long long m) {
    if (n <= 0) throw std::invalid_argument("f_min_oracle: n must be positive");
    if (n > 7) throw std::invalid_argument("f_min_oracle: n must be <= 7");
    if (m < 0 || m > (long long)n * (n - 1))
        throw std::invalid_argument("f_min_oracle: m outside the feasible range");
    std::vector<long long> suffix_capacity(n + 2, 0);  // max sum placeable at positions >= i
    for (int i = n; i >= 1; --i) suffix_capacity[i] = suffix_capacity[i + 1] + 2 * (n - i);
    const long long best = detail::f_min_search(n, 1, m, suffix_capacity);
    if (best < 0) throw std::logic_error("f_min_oracle: no feasible assignment found");
    return best;
}

/* Per-order accounting for one linear order. An arc of length l = |pos(u) -
 * pos(v)| is short when 2l <= n, long otherwise. short_counts is indexed by
 * position (earlier endpoint, direction ignored); long_length_counts by
 * length-1; cut_crossings[i-1] counts arcs crossing the cut between the first
 * i vertices and the rest, either direction.
 */
struct OrderDiagnostics {
    std::vector<long long> short_counts;
    std::vector<long long> long_length_counts;
    std::vector<long long> cut_crossings;
    long long w_short = 0;
    long long w_long = 0;
    long long short_count = 0;
    long long long_count = 0;
    long long backward_count = 0;
    Rational per_order_bound;  // (w_short - w_long)/n + long_count
};

inline OrderDiagnostics order_diagnostics(const Digraph& g, const VertexOrder& order) {
    const int n = g.vertex_count();
    if (order.size() != n)
        throw std::invalid_argument("order_diagnostics: order size does not match graph");
    OrderDiagnostics d;
    d.short_counts.assign(n, 0);
    d.long_length_counts.assign(n, 0);
    d.cut_crossings.assign(n, 0);
    for (const auto& [u, v] : g.arcs()) {
        const int pu = order.position(u), pv = order.position(v);
        if (pu > pv) ++d.backward_count;
        const int lo = std::min(pu, pv), hi = std::max(pu, pv);
        const int len = hi - lo;
        if (2 * len <= n) {
            ++d.short_count;
            d.w_short += len;
            ++d.short_counts[lo];
        } else {
            ++d.long_count;
            d.w_long += len;
            ++d.long_length_counts[len - 1];
        }
        for (int i = lo + 1; i <= hi; ++i) ++d.cut_crossings[i - 1];
    }
    d.per_order_bound = Rational(d.w_short - d.w_long, n) + Rational(d.long_count);
    return d;
}

}  // namespace eulerext
