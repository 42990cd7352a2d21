// Whitney's broken-cycle machinery, used as an oracle that is independent of
// deletion-contraction: fix a bijective edge ranking, drop the lowest edge
// from every simple cycle to get the broken cycles, and count spanning
// subgraphs that contain none of them. Edge subsets are bitmasks over the
// lexicographic edge list, so the oracle is capped at 64 edges.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "graph.hpp"

namespace chromapol {

/// Bijection from edge indices (positions in g.edges()) to ranks 0..m-1.
class EdgeOrdering {
public:
    static EdgeOrdering identity(const Graph& g) {
        EdgeOrdering eta;
        eta.rank_.resize(g.edges().size());
        std::iota(eta.rank_.begin(), eta.rank_.end(), 0);
        return eta;
    }

    static EdgeOrdering from_ranks(std::vector<int> ranks) {
        std::vector<bool> seen(ranks.size(), false);
        for (int r : ranks) {
            if (r < 0 || r >= static_cast<int>(ranks.size()) || seen[static_cast<std::size_t>(r)])
                throw std::invalid_argument("edge ordering must be a bijection onto 0..m-1");
            seen[static_cast<std::size_t>(r)] = true;
        }
        EdgeOrdering eta;
        eta.rank_ = std::move(ranks);
        return eta;
    }

    static EdgeOrdering random(const Graph& g, std::uint64_t seed) {
        EdgeOrdering eta = identity(g);
        std::mt19937_64 rng(seed);
        std::shuffle(eta.rank_.begin(), eta.rank_.end(), rng);
        return eta;
    }

    int rank(int edge_index) const { return rank_.at(static_cast<std::size_t>(edge_index)); }
    int size() const { return static_cast<int>(rank_.size()); }

private:
    std::vector<int> rank_;
};

namespace detail {

inline std::vector<int> edge_index_table(const Graph& g) {
    const int n = g.order();
    std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    const auto edges = g.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const auto& [u, v] = edges[static_cast<std::size_t>(e)];
        table[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = e;
        table[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)] = e;
    }
    return table;
}

inline void check_edge_mask_capacity(const Graph& g) {
    if (g.edge_count() > 64)
        throw std::invalid_argument("broken-cycle oracle capped at 64 edges");
}

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace detail

/// Edge masks of every simple cycle (each cycle once, regardless of
/// direction or starting point).
inline std::vector<std::uint64_t> simple_cycles_edge_masks(const Graph& g) {
    detail::check_edge_mask_capacity(g);
    const auto index = detail::edge_index_table(g);
    const int n = g.order();
    const auto edge_at = [&](int u, int v) {
        return index[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    };
    std::vector<std::uint64_t> cycles;
    // Each cycle is found once: rooted at its smallest vertex s, walked in
    // the direction whose second vertex is smaller than its last.
    std::vector<int> path;
    const auto dfs = [&](auto&& self, int s, int v, Graph::VertexSet on_path,
                         std::uint64_t emask) -> void {
        detail::for_each_vertex(g.neighbors(v), [&](int w) {
            if (w == s && path.size() >= 3 && path[1] < v) {
                cycles.push_back(emask | (std::uint64_t{1} << edge_at(v, s)));
            } else if (w > s && !((on_path >> w) & 1u)) {
                path.push_back(w);
                self(self, s, w, on_path | (Graph::VertexSet{1} << w),
                     emask | (std::uint64_t{1} << edge_at(v, w)));
                path.pop_back();
            }
        });
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        dfs(dfs, s, s, Graph::VertexSet{1} << s, 0);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

/// Broken cycles: each simple cycle minus its lowest-ranked edge.
inline std::vector<std::uint64_t> broken_cycles(const Graph& g, const EdgeOrdering& eta) {
    if (eta.size() != g.edge_count())
        throw std::invalid_argument("edge ordering size mismatch");
    std::vector<std::uint64_t> result;
    for (std::uint64_t cycle : simple_cycles_edge_masks(g)) {
        int min_edge = -1, min_rank = -1;
        for (std::uint64_t rest = cycle; rest;) {
            const int e = std::countr_zero(rest);
            rest &= rest - 1;
            if (min_edge < 0 || eta.rank(e) < min_rank) {
                min_edge = e;
                min_rank = eta.rank(e);
            }
        }
        result.push_back(cycle & ~(std::uint64_t{1} << min_edge));
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

namespace detail {

// Shared backtracking core: counts subsets of `pool` (ascending edge
// indices) of size `need` that complete no broken cycle, invoking `leaf`
// with the chosen mask.
template <class Leaf>
void bcf_subsets(const std::vector<int>& pool, const std::vector<std::vector<std::uint64_t>>& bc_by_top,
                 int need, Leaf&& leaf) {
    const int m = static_cast<int>(pool.size());
    std::uint64_t chosen = 0;
    const auto rec = [&](auto&& self, int from, int count) -> void {
        if (count == need) {
            leaf(chosen);
            return;
        }
        if (m - from < need - count) return;
        for (int k = from; k < m; ++k) {
            const int e = pool[static_cast<std::size_t>(k)];
            bool completes = false;
            for (std::uint64_t bc : bc_by_top[static_cast<std::size_t>(e)]) {
                if ((bc & ~(std::uint64_t{1} << e) & ~chosen) == 0) {
                    completes = true;
                    break;
                }
            }
            if (completes) continue;
            chosen |= std::uint64_t{1} << e;
            self(self, k + 1, count + 1);
            chosen &= ~(std::uint64_t{1} << e);
        }
    };
    rec(rec, 0, 0);
}

inline std::vector<std::vector<std::uint64_t>> broken_cycles_by_top_edge(
    const Graph& g, const std::vector<std::uint64_t>& bcs) {
    std::vector<std::vector<std::uint64_t>> by_top(static_cast<std::size_t>(g.edge_count()));
    for (std::uint64_t bc : bcs) {
        const int top = 63 - std::countl_zero(bc);
        by_top[static_cast<std::size_t>(top)].push_back(bc);
    }
    return by_top;
}

}  // namespace detail

/// Whitney's theorem: a_i equals the number of spanning subgraphs with n-i
/// edges, i components, and no broken cycle.
inline BigInt whitney_coefficient(const Graph& g, const EdgeOrdering& eta, int i) {
    const int n = g.order();
    if (i < 1 || i > n) throw std::invalid_argument("coefficient index out of range");
    const int need = n - i;
    if (need > g.edge_count()) return 0;
    const auto bcs = broken_cycles(g, eta);
    const auto by_top = detail::broken_cycles_by_top_edge(g, bcs);
    const auto edges = g.edges();
    std::vector<int> pool(edges.size());
    std::iota(pool.begin(), pool.end(), 0);

    BigInt total = 0;
    detail::bcf_subsets(pool, by_top, need, [&](std::uint64_t mask) {
        detail::UnionFind uf(n);
        int comps = n;
        while (mask) {
            const int e = std::countr_zero(mask);
            mask &= mask - 1;
            if (uf.unite(edges[static_cast<std::size_t>(e)].first, edges[static_cast<std::size_t>(e)].second)) --comps;
        }
        if (comps == i) ++total;
    });
    return total;
}

/// a_1..a_n via Whitney's theorem.
inline std::vector<BigInt> whitney_coefficients(const Graph& g, const EdgeOrdering& eta) {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (int i = 1; i <= g.order(); ++i) out.push_back(whitney_coefficient(g, eta, i));
    return out;
}

/// Spanning trees of the induced subgraph g[s] that contain no broken cycle
/// of g. The empty set contributes the neutral value 1.
inline BigInt bcf_spanning_trees(const Graph& g, const EdgeOrdering& eta, Graph::VertexSet s) {
    if (s & ~g.vertices()) throw std::invalid_argument("vertex mask out of range");
    if (s == 0) return 1;
    const int size = std::popcount(s);
    const int need = size - 1;
    const auto bcs = broken_cycles(g, eta);
    const auto by_top = detail::broken_cycles_by_top_edge(g, bcs);
    const auto edges = g.edges();
    std::vector<int> pool;
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    detail::for_each_vertex(s, [&](int v) { local[static_cast<std::size_t>(v)] = next++; });
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const auto& [u, v] = edges[static_cast<std::size_t>(e)];
        if (((s >> u) & 1u) && ((s >> v) & 1u)) pool.push_back(e);
    }
    if (need > static_cast<int>(pool.size())) return 0;

    BigInt total = 0;
    detail::bcf_subsets(pool, by_top, need, [&](std::uint64_t mask) {
        detail::UnionFind uf(size);
        int comps = size;
        while (mask) {
            const int e = std::countr_zero(mask);
            mask &= mask - 1;
            const auto& [u, v] = edges[static_cast<std::size_t>(e)];
            if (uf.unite(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)])) --comps;
        }
        if (comps == 1) ++total;
    });
    return total;
}

}  // namespace chromapol
