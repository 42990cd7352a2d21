// Simple undirected graphs on at most 64 labelled vertices, stored as one
// 64-bit neighbourhood mask per vertex. Vertices are 0..n-1; deletion and
// contraction relabel the survivors order-preservingly and can report the
// old->new label map.

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chromapol {

class Graph {
public:
    using VertexSet = std::uint64_t;
    static constexpr int max_order = 64;

    Graph() = default;

    explicit Graph(int n) {
        if (n < 0 || n > max_order) throw std::invalid_argument("graph order out of range");
        n_ = n;
        adj_.assign(static_cast<std::size_t>(n), 0);
    }

    static Graph build(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }

    int edge_count() const {
        int total = 0;
        for (VertexSet row : adj_) total += std::popcount(row);
        return total / 2;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    VertexSet neighbors(int u) const {
        check_vertex(u);
        return adj_[static_cast<std::size_t>(u)];
    }

    int degree(int u) const { return std::popcount(neighbors(u)); }

    /// Mask with one bit per vertex.
    VertexSet vertices() const {
        return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
    }

    /// Adds an edge; duplicates collapse, self-loops are rejected.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj_[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
        adj_[static_cast<std::size_t>(v)] |= VertexSet{1} << u;
    }

    /// Edge list sorted lexicographically with u < v in every pair.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u) {
            VertexSet higher = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
            while (higher) {
                out.emplace_back(u, std::countr_zero(higher));
                higher &= higher - 1;
            }
        }
        return out;
    }

    const std::vector<VertexSet>& adjacency_rows() const { return adj_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    void check_vertex(int u) const {
        if (u < 0 || u >= n_) throw std::invalid_argument("vertex label out of range");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// Unordered partition of a vertex subset into pairwise disjoint blocks.
struct VertexPartition {
    std::vector<Graph::VertexSet> blocks;
};

namespace detail {

inline int lowest_vertex(Graph::VertexSet s) { return std::countr_zero(s); }

template <class F>
void for_each_vertex(Graph::VertexSet s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

}  // namespace detail

/// Subgraph induced by the vertex mask `keep`; survivors are relabelled in
/// ascending label order. If `old_to_new` is given it receives, per original
/// vertex, the new label or -1 when dropped.
inline Graph induced_subgraph(const Graph& g, Graph::VertexSet keep,
                              std::vector<int>* old_to_new = nullptr) {
    if (keep & ~g.vertices()) throw std::invalid_argument("vertex mask out of range");
    std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    detail::for_each_vertex(keep, [&](int v) { map[static_cast<std::size_t>(v)] = next++; });
    Graph h(next);
    detail::for_each_vertex(keep, [&](int v) {
        detail::for_each_vertex(g.neighbors(v) & keep, [&](int w) {
            if (v < w) h.add_edge(map[static_cast<std::size_t>(v)], map[static_cast<std::size_t>(w)]);
        });
    });
    if (old_to_new) *old_to_new = std::move(map);
    return h;
}

inline Graph delete_vertex(const Graph& g, int u, std::vector<int>* old_to_new = nullptr) {
    if (u < 0 || u >= g.order()) throw std::invalid_argument("vertex label out of range");
    return induced_subgraph(g, g.vertices() & ~(Graph::VertexSet{1} << u), old_to_new);
}

inline Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("edge not present");
    Graph h(g.order());
    for (const auto& [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) h.add_edge(a, b);
    return h;
}

/// Contracts edge uv into min(u,v), discarding any parallel edge that forms.
inline Graph contract_edge(const Graph& g, int u, int v, std::vector<int>* old_to_new = nullptr) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("edge not present");
    const int a = u < v ? u : v;
    const int b = u < v ? v : u;
    std::vector<int> map(static_cast<std::size_t>(g.order()));
    int next = 0;
    for (int w = 0; w < g.order(); ++w)
        map[static_cast<std::size_t>(w)] = (w == b) ? -1 : next++;
    map[static_cast<std::size_t>(b)] = map[static_cast<std::size_t>(a)];
    Graph h(g.order() - 1);
    for (const auto& [x, y] : g.edges()) {
        const int nx = map[static_cast<std::size_t>(x)];
        const int ny = map[static_cast<std::size_t>(y)];
        if (nx != ny) h.add_edge(nx, ny);
    }
    if (old_to_new) *old_to_new = std::move(map);
    return h;
}

/// Vertices reachable from `start` walking only inside `within`.
inline Graph::VertexSet reachable_set(const Graph& g, int start, Graph::VertexSet within) {
    Graph::VertexSet seen = Graph::VertexSet{1} << start;
    Graph::VertexSet frontier = seen;
    while (frontier) {
        Graph::VertexSet next = 0;
        detail::for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v) & within; });
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen;
}

inline bool connected_within(const Graph& g, Graph::VertexSet s) {
    if (s == 0) throw std::invalid_argument("empty vertex set");
    if (s & ~g.vertices()) throw std::invalid_argument("vertex mask out of range");
    return reachable_set(g, detail::lowest_vertex(s), s) == s;
}

/// Connected components as vertex masks, ordered by smallest contained label.
inline VertexPartition components(const Graph& g) {
    VertexPartition parts;
    Graph::VertexSet rest = g.vertices();
    while (rest) {
        const Graph::VertexSet comp = reachable_set(g, detail::lowest_vertex(rest), rest);
        parts.blocks.push_back(comp);
        rest &= ~comp;
    }
    return parts;
}

inline int component_count(const Graph& g) { return static_cast<int>(components(g).blocks.size()); }

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

inline bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v) == 0) return true;
    return false;
}

inline bool is_clique(const Graph& g, Graph::VertexSet s) {
    bool ok = true;
    detail::for_each_vertex(s, [&](int v) {
        if ((s & ~g.neighbors(v)) != (Graph::VertexSet{1} << v)) ok = false;
    });
    return ok;
}

/// A vertex is simplicial when its neighbourhood is a clique.
inline bool is_simplicial(const Graph& g, int u) {
    const Graph::VertexSet nb = g.neighbors(u);
    return nb == 0 || is_clique(g, nb);
}

/// Maximum cardinality search. Returns an ordering u_1..u_n such that each
/// u_i is simplicial in the subgraph induced by {u_1..u_i}, or nullopt when
/// the graph is not chordal. Ties break toward the smallest label.
inline std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
    const int n = g.order();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    Graph::VertexSet selected = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_weight = -1;
        for (int v = 0; v < n; ++v) {
            if ((selected >> v) & 1u) continue;
            const int w = std::popcount(g.neighbors(v) & selected);
            if (w > best_weight) {
                best = v;
                best_weight = w;
            }
        }
        order.push_back(best);
        selected |= Graph::VertexSet{1} << best;
    }
    Graph::VertexSet prefix = 0;
    for (int v : order) {
        if (!is_clique(g, g.neighbors(v) & prefix) && (g.neighbors(v) & prefix) != 0)
            return std::nullopt;
        prefix |= Graph::VertexSet{1} << v;
    }
    return order;
}

inline bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && is_connected(g) && g.edge_count() == g.order() - 1;
}

inline bool is_complete(const Graph& g) {
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

inline bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

/// True when q is chordal, spans the same vertex set, satisfies E(q) ⊊ E(g).
inline bool is_chordal_proper_spanning_subgraph(const Graph& q, const Graph& g) {
    if (q.order() != g.order()) throw std::invalid_argument("order mismatch");
    for (int v = 0; v < q.order(); ++v)
        if (q.neighbors(v) & ~g.neighbors(v)) return false;
    if (q.edge_count() >= g.edge_count()) return false;
    return is_chordal(q);
}

/// Splits a connected induced set (|s| >= 2) into two nonempty parts, each
/// inducing a connected subgraph: a leaf of a spanning tree and the rest.
inline std::pair<Graph::VertexSet, Graph::VertexSet> split_connected(const Graph& g,
                                                                     Graph::VertexSet s) {
    if (std::popcount(s) < 2 || !connected_within(g, s))
        throw std::invalid_argument("split_connected needs a connected set of size >= 2");
    // Depth-first search; the last vertex finished below the root whose whole
    // subtree has been emitted is a removable leaf. Simpler: walk the DFS
    // order and take the final vertex, which is always removable in a tree
    // grown by first-visit edges.
    std::vector<int> stack{detail::lowest_vertex(s)};
    Graph::VertexSet seen = Graph::VertexSet{1} << stack[0];
    int last = stack[0];
    while (!stack.empty()) {
        const int v = stack.back();
        const Graph::VertexSet fresh = g.neighbors(v) & s & ~seen;
        if (fresh == 0) {
            stack.pop_back();
            continue;
        }
        const int w = detail::lowest_vertex(fresh);
        seen |= Graph::VertexSet{1} << w;
        stack.push_back(w);
        last = w;
    }
    const Graph::VertexSet leaf = Graph::VertexSet{1} << last;
    return {leaf, s & ~leaf};
}

}  // namespace chromapol
