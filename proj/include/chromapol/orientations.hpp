// Acyclic orientation counting. Rather than testing all 2^m orientations,
// acyclic orientations are in bijection with their source decompositions:
// sequences of disjoint nonempty independent sets S_1,...,S_t covering V
// where every vertex of S_k (k >= 2) has a neighbour in S_(k-1); edges point
// from earlier to later layers. Fixing S_1 = {v} counts orientations with
// unique source v, and a sink constraint just forbids later neighbours.
// The brute-force Orientation type is kept for cross-checks.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "broken_cycle.hpp"
#include "graph.hpp"
#include "partitions.hpp"

namespace chromapol {

/// One concrete orientation of every edge of a graph.
class Orientation {
public:
    Orientation(const Graph& g, std::uint64_t toward_higher_mask)
        : edges_(g.edges()), order_(g.order()), toward_higher_(toward_higher_mask) {
        if (edges_.size() > 63) throw std::invalid_argument("orientation mask capped at 63 edges");
    }

    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edge k as (tail, head).
    std::pair<int, int> directed_edge(int k) const {
        const auto& [u, v] = edges_.at(static_cast<std::size_t>(k));
        return ((toward_higher_ >> k) & 1u) ? std::pair{u, v} : std::pair{v, u};
    }

    int out_degree(int v) const {
        int d = 0;
        for (int k = 0; k < edge_count(); ++k)
            if (directed_edge(k).first == v) ++d;
        return d;
    }

    int in_degree(int v) const {
        int d = 0;
        for (int k = 0; k < edge_count(); ++k)
            if (directed_edge(k).second == v) ++d;
        return d;
    }

    Graph::VertexSet sources() const {
        Graph::VertexSet s = order_ == 64 ? ~Graph::VertexSet{0} : (Graph::VertexSet{1} << order_) - 1;
        for (int k = 0; k < edge_count(); ++k) s &= ~(Graph::VertexSet{1} << directed_edge(k).second);
        return s;
    }

    Graph::VertexSet sinks() const {
        Graph::VertexSet s = order_ == 64 ? ~Graph::VertexSet{0} : (Graph::VertexSet{1} << order_) - 1;
        for (int k = 0; k < edge_count(); ++k) s &= ~(Graph::VertexSet{1} << directed_edge(k).first);
        return s;
    }

    bool is_acyclic() const {
        std::vector<int> indeg(static_cast<std::size_t>(order_), 0);
        for (int k = 0; k < edge_count(); ++k) ++indeg[static_cast<std::size_t>(directed_edge(k).second)];
        std::vector<int> queue;
        for (int v = 0; v < order_; ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
        int removed = 0;
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            ++removed;
            for (int k = 0; k < edge_count(); ++k) {
                const auto [t, h] = directed_edge(k);
                if (t == v && --indeg[static_cast<std::size_t>(h)] == 0) queue.push_back(h);
            }
        }
        return removed == order_;
    }

private:
    std::vector<std::pair<int, int>> edges_;
    int order_;
    std::uint64_t toward_higher_;
};

/// Streams all 2^m orientations. Intended for small cross-check graphs.
template <class F>
void for_each_orientation(const Graph& g, F&& f) {
    const int m = g.edge_count();
    if (m > 20) throw std::invalid_argument("orientation brute force capped at 20 edges");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) f(Orientation(g, mask));
}

namespace detail {

template <class F>
void independent_subsets(const Graph& g, Graph::VertexSet avail, Graph::VertexSet cur, F&& f) {
    if (avail == 0) {
        f(cur);
        return;
    }
    const int v = lowest_vertex(avail);
    const Graph::VertexSet bit = Graph::VertexSet{1} << v;
    independent_subsets(g, avail & ~bit, cur, f);
    independent_subsets(g, avail & ~bit & ~g.neighbors(v), cur | bit, f);
}

inline BigInt layer_count(const Graph& g, Graph::VertexSet remaining, Graph::VertexSet prev,
                          bool first, int sink) {
    if (remaining == 0) return 1;
    Graph::VertexSet candidates = 0, must = 0;
    for_each_vertex(remaining, [&](int v) {
        const Graph::VertexSet nb = g.neighbors(v);
        if (first || (nb & prev)) candidates |= Graph::VertexSet{1} << v;
        if ((nb & remaining) == 0) must |= Graph::VertexSet{1} << v;
    });
    if (must & ~candidates) return 0;
    BigInt total = 0;
    independent_subsets(g, candidates & ~must, must, [&](Graph::VertexSet layer) {
        if (layer == 0) return;
        if (sink >= 0 && ((layer >> sink) & 1u) && (g.neighbors(sink) & remaining & ~layer)) return;
        total += layer_count(g, remaining & ~layer, layer, false, sink);
    });
    return total;
}

}  // namespace detail

/// Number of acyclic orientations.
inline BigInt count_acyclic(const Graph& g) {
    return detail::layer_count(g, g.vertices(), 0, true, -1);
}

/// Acyclic orientations whose unique source is v. Zero when g is
/// disconnected (any other component contributes another source).
inline BigInt count_unique_source(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex label out of range");
    const Graph::VertexSet bit = Graph::VertexSet{1} << v;
    return detail::layer_count(g, g.vertices() & ~bit, bit, false, -1);
}

/// Acyclic orientations with unique source v in which s is a sink.
inline BigInt count_unique_source_with_sink(const Graph& g, int v, int s) {
    if (v < 0 || v >= g.order() || s < 0 || s >= g.order())
        throw std::invalid_argument("vertex label out of range");
    if (v == s) throw std::invalid_argument("source and sink must differ");
    const Graph::VertexSet bit = Graph::VertexSet{1} << v;
    return detail::layer_count(g, g.vertices() & ~bit, bit, false, s);
}

/// a_i as a sum over connected partitions into i blocks of products of
/// broken-cycle-free spanning tree counts (identity edge ranking).
inline BigInt interp_coefficient_partition(const Graph& g, int i) {
    if (i < 1 || i > g.order()) throw std::invalid_argument("coefficient index out of range");
    const EdgeOrdering eta = EdgeOrdering::identity(g);
    std::map<Graph::VertexSet, BigInt> tau;
    const auto tau_of = [&](Graph::VertexSet block) -> const BigInt& {
        auto it = tau.find(block);
        if (it == tau.end()) it = tau.emplace(block, bcf_spanning_trees(g, eta, block)).first;
        return it->second;
    };
    BigInt total = 0;
    for_each_connected_partition(g, i, [&](const VertexPartition& p) {
        BigInt prod = 1;
        for (Graph::VertexSet b : p.blocks) {
            prod *= tau_of(b);
            if (prod == 0) break;
        }
        total += prod;
    });
    return total;
}

/// a_i as a sum over ordered partitions anchored at v of products of
/// unique-source acyclic orientation counts; the anchor of a later block is
/// its smallest label. The result does not depend on v.
inline BigInt interp_coefficient_orientation(const Graph& g, int i, int v) {
    if (i < 1 || i > g.order()) throw std::invalid_argument("coefficient index out of range");
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex label out of range");
    std::map<std::pair<Graph::VertexSet, int>, BigInt> memo;
    const auto alpha_of = [&](Graph::VertexSet block, int anchor) -> const BigInt& {
        auto it = memo.find({block, anchor});
        if (it == memo.end()) {
            std::vector<int> relabel;
            const Graph h = induced_subgraph(g, block, &relabel);
            it = memo.emplace(std::pair{block, anchor},
                              count_unique_source(h, relabel[static_cast<std::size_t>(anchor)]))
                     .first;
        }
        return it->second;
    };
    BigInt total = 0;
    for_each_ordered_partition(g, i, v, [&](const OrderedPartition& p) {
        BigInt prod = alpha_of(p.blocks.front(), p.anchor);
        for (std::size_t j = 1; j < p.blocks.size() && prod != 0; ++j)
            prod *= alpha_of(p.blocks[j], detail::lowest_vertex(p.blocks[j]));
        total += prod;
    });
    return total;
}

}  // namespace chromapol
