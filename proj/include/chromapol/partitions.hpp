// Enumeration of vertex partitions whose blocks all induce connected
// subgraphs, and the canonical block ordering used by the anchored
// coefficient interpretations: the anchor's block comes first, after which
// blocks follow the smallest label still unplaced.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace chromapol {

struct OrderedPartition {
    std::vector<Graph::VertexSet> blocks;
    int anchor = -1;
};

namespace detail {

template <class F, class P>
bool invoke_partition_visitor(F&& f, const P& p) {
    if constexpr (std::is_void_v<std::invoke_result_t<F&, const P&>>) {
        f(p);
        return true;
    } else {
        return static_cast<bool>(f(p));
    }
}

template <class F>
bool connected_partition_rec(const Graph& g, int block_count, int v,
                             std::vector<Graph::VertexSet>& blocks, F&& f) {
    const int n = g.order();
    const int open = static_cast<int>(blocks.size());
    if (open + (n - v) < block_count) return true;
    if (v == n) {
        if (open != block_count) return true;
        for (Graph::VertexSet b : blocks)
            if (!connected_within(g, b)) return true;
        VertexPartition p;
        p.blocks = blocks;
        return invoke_partition_visitor(f, p);
    }
    const Graph::VertexSet bit = Graph::VertexSet{1} << v;
    for (int j = 0; j < open; ++j) {
        blocks[static_cast<std::size_t>(j)] |= bit;
        if (!connected_partition_rec(g, block_count, v + 1, blocks, f)) return false;
        blocks[static_cast<std::size_t>(j)] &= ~bit;
    }
    if (open < block_count) {
        blocks.push_back(bit);
        if (!connected_partition_rec(g, block_count, v + 1, blocks, f)) return false;
        blocks.pop_back();
    }
    return true;
}

}  // namespace detail

/// Streams every partition of V(g) into exactly `block_count` blocks, each
/// inducing a connected subgraph. Blocks arrive ordered by smallest label.
/// The visitor may return bool (false stops the stream) or void.
/// Returns false when stopped early.
template <class F>
bool for_each_connected_partition(const Graph& g, int block_count, F&& f) {
    if (block_count < 0 || block_count > g.order())
        throw std::invalid_argument("block count out of range");
    if (block_count == 0) return g.order() == 0 ? detail::invoke_partition_visitor(f, VertexPartition{}) : true;
    std::vector<Graph::VertexSet> blocks;
    blocks.reserve(static_cast<std::size_t>(block_count));
    return detail::connected_partition_rec(g, block_count, 0, blocks, f);
}

/// Applies the canonical ordering rule to an unordered partition: the block
/// containing `anchor` goes first, the rest follow ascending smallest label.
inline OrderedPartition order_partition(const VertexPartition& p, int anchor) {
    OrderedPartition out;
    out.anchor = anchor;
    const Graph::VertexSet abit = Graph::VertexSet{1} << anchor;
    std::vector<Graph::VertexSet> rest;
    for (Graph::VertexSet b : p.blocks) {
        if (b & abit)
            out.blocks.push_back(b);
        else
            rest.push_back(b);
    }
    if (out.blocks.size() != 1) throw std::invalid_argument("anchor not in exactly one block");
    std::sort(rest.begin(), rest.end(), [](Graph::VertexSet a, Graph::VertexSet b) {
        return detail::lowest_vertex(a) < detail::lowest_vertex(b);
    });
    out.blocks.insert(out.blocks.end(), rest.begin(), rest.end());
    return out;
}

/// Same stream as for_each_connected_partition but each partition arrives
/// ordered with `anchor`'s block first.
template <class F>
bool for_each_ordered_partition(const Graph& g, int block_count, int anchor, F&& f) {
    if (anchor < 0 || anchor >= g.order()) throw std::invalid_argument("anchor out of range");
    return for_each_connected_partition(g, block_count, [&](const VertexPartition& p) {
        return detail::invoke_partition_visitor(f, order_partition(p, anchor));
    });
}

inline std::uint64_t count_connected_partitions(const Graph& g, int block_count) {
    std::uint64_t total = 0;
    for_each_connected_partition(g, block_count, [&](const VertexPartition&) { ++total; });
    return total;
}

}  // namespace chromapol
