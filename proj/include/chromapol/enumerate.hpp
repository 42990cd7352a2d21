// Exhaustive enumeration of labelled graphs of a fixed order, used by the
// verification sweeps and the property tests. Edge bits follow the graph6
// column order (0,1),(0,2),(1,2),(0,3),...

#pragma once

#include <cstdint>
#include <stdexcept>

#include "graph.hpp"

namespace chromapol {

inline std::uint64_t labeled_graph_count(int n) {
    if (n < 0 || n > 11) throw std::invalid_argument("exhaustive enumeration capped at order 11");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (mask >= labeled_graph_count(n)) throw std::invalid_argument("edge mask out of range");
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(u, v);
    return g;
}

template <class F>
void for_each_labeled_graph(int n, F&& f) {
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) f(graph_from_edge_mask(n, mask));
}

}  // namespace chromapol
