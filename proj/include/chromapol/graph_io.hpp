// Graph serialization: the graph6 line format (column-major upper triangle,
// 6-bit groups offset by 63) and a plain 1-based edge list with an "n m"
// header.

#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace chromapol {

struct GraphFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Graph graph6_parse(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    if (line.empty()) throw GraphFormatError("graph6: empty line");
    for (char c : line)
        if (c < 63 || c > 126) throw GraphFormatError("graph6: byte out of printable range");

    std::size_t pos = 0;
    long n = 0;
    if (line[0] != '~') {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw GraphFormatError("graph6: order above 64 unsupported");
        if (line.size() < 4) throw GraphFormatError("graph6: truncated order field");
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - 63);
        pos = 4;
    }
    if (n > Graph::max_order) throw GraphFormatError("graph6: order above 64 unsupported");

    const long bits = n * (n - 1) / 2;
    const std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos != groups) throw GraphFormatError("graph6: body length mismatch");

    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const int group = line[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    for (long b = bits; b < static_cast<long>(groups) * 6; ++b) {
        const int group = line[pos + static_cast<std::size_t>(b / 6)] - 63;
        if ((group >> (5 - b % 6)) & 1) throw GraphFormatError("graph6: nonzero padding bits");
    }
    return g;
}

inline std::string graph6_serialize(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

/// Reads "n m" followed by m lines "u v" with 1-based labels.
inline Graph edge_list_parse(std::istream& in) {
    long n = 0, m = 0;
    if (!(in >> n >> m)) throw GraphFormatError("edge list: missing 'n m' header");
    if (n < 0 || n > Graph::max_order) throw GraphFormatError("edge list: order out of range");
    if (m < 0) throw GraphFormatError("edge list: negative edge count");
    Graph g(static_cast<int>(n));
    for (long k = 0; k < m; ++k) {
        long u = 0, v = 0;
        if (!(in >> u >> v)) throw GraphFormatError("edge list: truncated edge lines");
        if (u < 1 || u > n || v < 1 || v > n)
            throw GraphFormatError("edge list: vertex label out of range");
        if (u == v) throw GraphFormatError("edge list: self-loop rejected");
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    return g;
}

inline Graph edge_list_parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return edge_list_parse(in);
}

inline void edge_list_serialize(const Graph& g, std::ostream& out) {
    const auto edges = g.edges();
    out << g.order() << " " << edges.size() << "\n";
    for (const auto& [u, v] : edges) out << u + 1 << " " << v + 1 << "\n";
}

}  // namespace chromapol
