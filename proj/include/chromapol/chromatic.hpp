// Chromatic polynomials by deletion and contraction, with two standard
// speedups: simplicial vertices are stripped as linear factors (this alone
// finishes every chordal graph), and connected components are solved
// independently and multiplied. Results are memoized on the exact labelled
// graph; a cache can be shared across calls that belong to one computation.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "graph.hpp"
#include "polynomial.hpp"

namespace chromapol {

struct ChromaticOptions {
    enum class EdgeChoice { densest_neighborhood, random_edge };
    EdgeChoice edge_choice = EdgeChoice::densest_neighborhood;
    std::uint64_t seed = 0;
};

namespace detail {

// Graphs on at most 11 vertices pack into one word (55 edge bits + order);
// larger graphs fall back to their adjacency rows.
struct GraphKey {
    std::uint64_t packed = 0;
    std::vector<std::uint64_t> rows;

    bool operator==(const GraphKey& o) const { return packed == o.packed && rows == o.rows; }
};

inline GraphKey make_graph_key(const Graph& g) {
    GraphKey key;
    const int n = g.order();
    if (n <= 11) {
        std::uint64_t mask = 0;
        for (const auto& [u, v] : g.edges()) mask |= std::uint64_t{1} << (v * (v - 1) / 2 + u);
        key.packed = (mask << 7) | static_cast<std::uint64_t>(n);
    } else {
        key.packed = ~std::uint64_t{0};
        key.rows.reserve(static_cast<std::size_t>(n) + 1);
        key.rows.push_back(static_cast<std::uint64_t>(n));
        for (auto row : g.adjacency_rows()) key.rows.push_back(row);
    }
    return key;
}

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct GraphKeyHash {
    std::size_t operator()(const GraphKey& k) const {
        std::uint64_t h = mix64(k.packed);
        for (std::uint64_t w : k.rows) h = mix64(h ^ w);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace detail

class ChromaticCache {
public:
    void clear() { memo_.clear(); }
    std::size_t size() const { return memo_.size(); }

private:
    friend class ChromaticSolver;
    std::unordered_map<detail::GraphKey, IntPolynomial, detail::GraphKeyHash> memo_;
};

class ChromaticSolver {
public:
    ChromaticSolver(ChromaticCache& cache, const ChromaticOptions& opts)
        : cache_(cache), opts_(opts), rng_(opts.seed) {}

    IntPolynomial solve(Graph g) {
        IntPolynomial factor = IntPolynomial::one();
        // Strip simplicial vertices: each contributes a factor (x - deg).
        for (bool stripped = true; stripped;) {
            stripped = false;
            for (int v = 0; v < g.order(); ++v) {
                if (is_simplicial(g, v)) {
                    factor *= IntPolynomial(std::vector<BigInt>{-g.degree(v), 1});
                    g = delete_vertex(g, v);
                    stripped = true;
                    break;
                }
            }
        }
        if (g.order() == 0) return factor;

        const auto parts = components(g);
        if (parts.blocks.size() > 1) {
            for (auto block : parts.blocks) factor *= solve(induced_subgraph(g, block));
            return factor;
        }

        const auto key = detail::make_graph_key(g);
        if (auto it = cache_.memo_.find(key); it != cache_.memo_.end()) return factor * it->second;

        const auto [u, v] = pick_edge(g);
        IntPolynomial p = solve(delete_edge(g, u, v)) - solve(contract_edge(g, u, v));
        cache_.memo_.emplace(key, p);
        return factor * p;
    }

private:
    std::pair<int, int> pick_edge(Graph& g) {
        const auto edges = g.edges();
        if (opts_.edge_choice == ChromaticOptions::EdgeChoice::random_edge) {
            std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
            return edges[pick(rng_)];
        }
        std::pair<int, int> best = edges.front();
        int best_common = -1, best_deg = -1;
        for (const auto& [a, b] : edges) {
            const int common = std::popcount(g.neighbors(a) & g.neighbors(b));
            const int deg = g.degree(a) + g.degree(b);
            if (common > best_common || (common == best_common && deg > best_deg)) {
                best = {a, b};
                best_common = common;
                best_deg = deg;
            }
        }
        return best;
    }

    ChromaticCache& cache_;
    ChromaticOptions opts_;
    std::mt19937_64 rng_;
};

inline IntPolynomial chromatic_polynomial(const Graph& g, ChromaticCache& cache,
                                          const ChromaticOptions& opts = {}) {
    return ChromaticSolver(cache, opts).solve(g);
}

inline IntPolynomial chromatic_polynomial(const Graph& g, const ChromaticOptions& opts = {}) {
    ChromaticCache cache;
    return chromatic_polynomial(g, cache, opts);
}

/// The nonnegative coefficient sequence a_1..a_n with
/// P(x) = sum_i (-1)^(n-i) a_i x^i. Construction validates that the input
/// actually has chromatic sign structure: monic, zero constant term for
/// n >= 1, alternating signs.
class Coefficients {
public:
    static Coefficients from_polynomial(const IntPolynomial& p) {
        if (p.is_zero()) throw std::invalid_argument("zero polynomial is not chromatic");
        Coefficients c;
        const int n = p.degree();
        c.n_ = n;
        if (p.coeff(n) != 1) throw std::invalid_argument("chromatic polynomial must be monic");
        if (n >= 1 && p.coeff(0) != 0)
            throw std::invalid_argument("chromatic polynomial must have zero constant term");
        c.a_.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            BigInt a = p.coeff(i);
            if ((n - i) % 2 == 1) a = -a;
            if (a < 0) throw std::invalid_argument("chromatic sign pattern violated");
            c.a_.push_back(std::move(a));
        }
        return c;
    }

    int order() const { return n_; }

    const BigInt& a(int i) const {
        if (i < 1 || i > n_) throw std::invalid_argument("coefficient index out of range");
        return a_[static_cast<std::size_t>(i - 1)];
    }

    /// a_1..a_n
    const std::vector<BigInt>& values() const { return a_; }

    BigInt sum() const {
        BigInt s = 0;
        for (const auto& a : a_) s += a;
        return s;
    }

private:
    int n_ = 0;
    std::vector<BigInt> a_;
};

inline Coefficients coefficients(const Graph& g) {
    return Coefficients::from_polynomial(chromatic_polynomial(g));
}

/// P(K_n, x) = x(x-1)...(x-n+1), computed directly so complete graphs far
/// beyond the 64-vertex representation stay reachable.
inline IntPolynomial complete_graph_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("order must be nonnegative");
    IntPolynomial p = IntPolynomial::one();
    for (int k = 0; k < n; ++k) p *= IntPolynomial(std::vector<BigInt>{-k, 1});
    return p;
}

/// b_i = a_{n-i} / sum_j a_j for i = 0..n-1: the probability that a uniform
/// random ideal (under the broken-cycle model) has i extra parts.
inline std::vector<BigRational> b_distribution(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("b distribution needs order >= 1");
    const Coefficients c = coefficients(g);
    const BigInt total = c.sum();
    std::vector<BigRational> b;
    b.reserve(static_cast<std::size_t>(c.order()));
    for (int i = 0; i <= c.order() - 1; ++i) b.emplace_back(c.a(c.order() - i), total);
    return b;
}

/// Mean of the b distribution: sum_i (n-i) a_i / sum_i a_i. Computed both
/// from the coefficients and as n + P'(-1)/P(-1); the two must agree.
inline BigRational epsilon_mean(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("epsilon needs order >= 1");
    const IntPolynomial p = chromatic_polynomial(g);
    const Coefficients c = Coefficients::from_polynomial(p);
    const int n = c.order();
    BigInt weighted = 0;
    for (int i = 1; i <= n; ++i) weighted += BigInt(n - i) * c.a(i);
    const BigRational via_coeffs{weighted, c.sum()};

    const BigRational at{-1};
    const BigRational via_eval = BigRational(n) + p.derivative().evaluate(at) / p.evaluate(at);
    if (via_coeffs != via_eval) throw std::logic_error("epsilon route mismatch");
    return via_coeffs;
}

inline BigRational epsilon_at(const IntPolynomial& p, const BigRational& x) {
    const BigRational px = p.evaluate(x);
    if (px == 0) throw std::domain_error("epsilon undefined at a chromatic root");
    return p.derivative().evaluate(x) / px;
}

/// epsilon(G, x) = P'(G, x) / P(G, x).
inline BigRational epsilon_at(const Graph& g, const BigRational& x) {
    if (g.order() < 1) throw std::invalid_argument("epsilon needs order >= 1");
    return epsilon_at(chromatic_polynomial(g), x);
}

/// For chordal graphs P(x) = prod_i (x - d_i) along a perfect elimination
/// ordering; returns the multiset {d_i} ascending, so
/// epsilon(G, x) = sum_i 1/(x - d_i).
inline std::vector<int> epsilon_chordal(const Graph& g) {
    const auto order = perfect_elimination_ordering(g);
    if (!order) throw std::invalid_argument("graph is not chordal");
    std::vector<int> degrees;
    degrees.reserve(order->size());
    Graph::VertexSet prefix = 0;
    for (int v : *order) {
        degrees.push_back(std::popcount(g.neighbors(v) & prefix));
        prefix |= Graph::VertexSet{1} << v;
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace chromapol
