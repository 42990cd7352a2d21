// The inequality engine: the corrector xi(G,x), the d_i coefficient vector,
// sign certificates for "positive for all x < 0" claims, structural
// witnesses for the strict cases, and exhaustive small-graph sweeps that
// re-check everything and emit machine-readable reports.

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "bigint.hpp"
#include "broken_cycle.hpp"
#include "chromatic.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "orientations.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"

namespace chromapol {

inline std::vector<BigRational> default_grid() {
    return {BigRational(-1, 4), BigRational(-1, 2), BigRational(-1),
            BigRational(-2),    BigRational(-5),    BigRational(-10)};
}

inline int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

/// xi for a chromatic polynomial of degree n:
/// (-1)^n P(x) sum_{i=0}^{n-1} 1/(x-i) + (-1)^(n+1) P'(x).
/// Zero iff the graph is complete; strictly positive otherwise for x < 0.
inline BigRational xi(const IntPolynomial& p, const BigRational& x) {
    if (x >= 0) throw std::invalid_argument("xi requires x < 0");
    const int n = p.degree();
    BigRational pole_sum = 0;
    for (int i = 0; i < n; ++i) pole_sum += BigRational(1) / (x - i);
    return BigRational(parity_sign(n)) * p.evaluate(x) * pole_sum -
           BigRational(parity_sign(n)) * p.derivative().evaluate(x);
}

inline BigRational xi(const Graph& g, const BigRational& x) {
    return xi(chromatic_polynomial(g), x);
}

/// The correction graphs of the degree recurrence at u: with neighbours
/// u_1 < ... < u_d, the k-th graph is G - u plus all edges u_k u_j, j > k.
/// Returns d-1 graphs (empty when d(u) = 1).
inline std::vector<Graph> recurrence_graphs(const Graph& g, int u) {
    const int d = g.degree(u);
    if (d < 1) throw std::invalid_argument("recurrence_graphs needs d(u) >= 1");
    std::vector<int> nbs;
    detail::for_each_vertex(g.neighbors(u), [&](int w) { nbs.push_back(w); });
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(d) - 1);
    for (int k = 0; k + 1 < d; ++k) {
        std::vector<int> map;
        Graph h = delete_vertex(g, u, &map);
        for (int j = k + 1; j < d; ++j) {
            const int a = map[static_cast<std::size_t>(nbs[static_cast<std::size_t>(k)])];
            const int b = map[static_cast<std::size_t>(nbs[static_cast<std::size_t>(j)])];
            if (a != b && !h.adjacent(a, b)) h.add_edge(a, b);
        }
        out.push_back(std::move(h));
    }
    return out;
}

/// For isolated u: xi(G,x) = (-x) xi(G-u,x) + (-1)^(n-1)(n-1)P(G-u,x)/(n-1-x).
inline bool xi_identity_isolated(const Graph& g, int u, const BigRational& x) {
    if (g.degree(u) != 0) throw std::invalid_argument("u must be isolated");
    if (x >= 0) throw std::invalid_argument("identity stated for x < 0");
    const int n = g.order();
    const Graph h = delete_vertex(g, u);
    const IntPolynomial ph = chromatic_polynomial(h);
    const BigRational rhs = (-x) * xi(ph, x) +
                            BigRational(parity_sign(n - 1)) * BigRational(n - 1) *
                                ph.evaluate(x) / (BigRational(n - 1) - x);
    return xi(g, x) == rhs;
}

/// For d(u) = d >= 1: xi(G,x) = (1-x) xi(G-u,x) + sum_k xi(G_k,x)
/// + (-1)^n [(x-n+1) P(G-u,x) - P(G,x)] / (n-x-1).
inline bool xi_identity_recursive(const Graph& g, int u, const BigRational& x) {
    if (g.degree(u) < 1) throw std::invalid_argument("u must have degree >= 1");
    if (x >= 0) throw std::invalid_argument("identity stated for x < 0");
    const int n = g.order();
    const Graph h = delete_vertex(g, u);
    const IntPolynomial ph = chromatic_polynomial(h);
    BigRational rhs = (BigRational(1) - x) * xi(ph, x);
    for (const Graph& gi : recurrence_graphs(g, u)) rhs += xi(gi, x);
    rhs += BigRational(parity_sign(n)) *
           ((x - BigRational(n - 1)) * ph.evaluate(x) - chromatic_polynomial(g).evaluate(x)) /
           (BigRational(n - 1) - x);
    return xi(g, x) == rhs;
}

/// The coefficients d_1..d_n of
/// (-1)^n [(x-n+1) sum_u P(G-u,x) - n P(G,x)] = sum_i (-1)^i d_i x^i,
/// computed both by expanding that polynomial and by the coefficient formula
/// d_i = sum_u [a_(i-1)(G-u) + (n-1) a_i(G-u)] - n a_i(G); the two routes
/// must agree (a_0 := 0, with the order-0 boundary P(empty) = 1).
class DVector {
public:
    int order() const { return static_cast<int>(d_.size()); }

    const BigInt& d(int i) const {
        if (i < 1 || i > order()) throw std::invalid_argument("d index out of range");
        return d_[static_cast<std::size_t>(i - 1)];
    }

    /// d_1..d_n
    const std::vector<BigInt>& values() const { return d_; }

    /// sum_i (-1)^i d_i x^i, the certificate polynomial.
    IntPolynomial alternating_polynomial() const {
        std::vector<BigInt> c(d_.size() + 1);
        for (int i = 1; i <= order(); ++i)
            c[static_cast<std::size_t>(i)] = BigInt(parity_sign(i)) * d_[static_cast<std::size_t>(i - 1)];
        return IntPolynomial(std::move(c));
    }

private:
    friend DVector d_vector(const Graph&);
    std::vector<BigInt> d_;
};

inline DVector d_vector(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("d_vector needs order >= 1");

    ChromaticCache cache;
    const IntPolynomial p = chromatic_polynomial(g, cache);
    std::vector<IntPolynomial> deleted;
    deleted.reserve(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) deleted.push_back(chromatic_polynomial(delete_vertex(g, u), cache));

    // Route 1: expand the polynomial identity.
    IntPolynomial sum_deleted;
    for (const auto& q : deleted) sum_deleted += q;
    const IntPolynomial lhs =
        IntPolynomial(std::vector<BigInt>{-(n - 1), 1}) * sum_deleted - BigInt(n) * p;
    std::vector<BigInt> route1(static_cast<std::size_t>(n));
    if (lhs.coeff(0) != 0 || lhs.degree() > n) throw std::logic_error("d polynomial malformed");
    for (int i = 1; i <= n; ++i)
        route1[static_cast<std::size_t>(i - 1)] = BigInt(parity_sign(n + i)) * lhs.coeff(i);

    // Route 2: signed coefficient extraction a_j(H) = (-1)^(|H|-j) [x^j] P_H,
    // with a_0 of the order-0 graph equal to 1 and a_0 := 0 for orders >= 1.
    const auto a_of = [](const IntPolynomial& q, int order, int j) -> BigInt {
        if (j == 0 && order >= 1) return 0;
        if (j < 0 || j > order) return 0;
        return BigInt(parity_sign(order - j)) * q.coeff(j);
    };
    std::vector<BigInt> route2(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        BigInt total = 0;
        for (int u = 0; u < n; ++u) {
            const auto& q = deleted[static_cast<std::size_t>(u)];
            total += a_of(q, n - 1, i - 1) + BigInt(n - 1) * a_of(q, n - 1, i);
        }
        total -= BigInt(n) * a_of(p, n, i);
        route2[static_cast<std::size_t>(i - 1)] = std::move(total);
    }

    if (route1 != route2) throw std::logic_error("d_vector route mismatch");
    DVector out;
    out.d_ = std::move(route1);
    return out;
}

enum class Outcome { holds, equality_case, violation };

inline const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::holds: return "holds";
        case Outcome::equality_case: return "equality-case";
        case Outcome::violation: return "VIOLATION";
    }
    return "?";
}

struct VerificationReport {
    std::string graph6;
    int n = 0;
    std::string theorem;
    Outcome outcome = Outcome::holds;
    std::string certificate_kind;
    std::string witness;
};

struct SignCertificate {
    enum class Kind { coefficient_alternation, rational_grid, inconclusive };
    Kind kind = Kind::inconclusive;
    std::optional<BigRational> failing_point;
};

inline const char* certificate_kind_name(SignCertificate::Kind k) {
    switch (k) {
        case SignCertificate::Kind::coefficient_alternation: return "coefficient-alternation";
        case SignCertificate::Kind::rational_grid: return "rational-grid";
        case SignCertificate::Kind::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Tries to certify P(x) > 0 for all x < 0. Writing P(x) = sum (-1)^i c_i x^i,
/// nonnegative c_i with some c_i > 0 at i >= 1 proves positivity everywhere on
/// x < 0 (every term is c_i |x|^i). Otherwise falls back to exact evaluation
/// on the sample grid, which attests only the sampled points. A grid failure
/// yields an inconclusive certificate carrying the failing point; deciding
/// whether that refutes a theorem is the caller's job.
inline SignCertificate certify_positive_on_negatives(const IntPolynomial& p,
                                                     const std::vector<BigRational>& grid) {
    for (const auto& x : grid)
        if (x >= 0) throw std::invalid_argument("grid points must be negative");
    bool nonneg = true, strict_high = false;
    for (int k = 0; k <= p.degree(); ++k) {
        const BigInt c = BigInt(parity_sign(k)) * p.coeff(k);
        if (c < 0) nonneg = false;
        if (k >= 1 && c > 0) strict_high = true;
    }
    if (nonneg && strict_high) return {SignCertificate::Kind::coefficient_alternation, std::nullopt};
    for (const auto& x : grid)
        if (p.evaluate(x) <= 0) return {SignCertificate::Kind::inconclusive, x};
    if (!grid.empty()) return {SignCertificate::Kind::rational_grid, std::nullopt};
    return {SignCertificate::Kind::inconclusive, std::nullopt};
}

namespace detail {

inline std::string rational_str(const BigRational& q) { return q.str(); }

}  // namespace detail

/// Mean-size bounds at x = -1: for connected G, (n-1)/2 <= epsilon(G) <=
/// n - H_n with the left equality exactly for trees and the right exactly
/// for complete graphs; strict in between for everything else.
inline VerificationReport check_conjecture(const Graph& g) {
    if (!is_connected(g) || g.order() < 1)
        throw std::invalid_argument("mean-size bounds are stated for connected graphs");
    const int n = g.order();
    VerificationReport r;
    r.graph6 = graph6_serialize(g);
    r.n = n;
    r.theorem = "conjecture";
    const BigRational eps = epsilon_mean(g);
    const BigRational lower(n - 1, 2);
    const BigRational upper = BigRational(n) - harmonic(n);
    std::ostringstream w;
    w << "epsilon=" << detail::rational_str(eps);
    if (is_tree(g)) {
        r.outcome = eps == lower ? Outcome::equality_case : Outcome::violation;
        w << (r.outcome == Outcome::equality_case ? " attains tree bound" : " != tree bound");
    } else if (is_complete(g)) {
        r.outcome = eps == upper ? Outcome::equality_case : Outcome::violation;
        w << (r.outcome == Outcome::equality_case ? " attains complete bound" : " != complete bound");
    } else if (lower < eps && eps < upper) {
        r.outcome = Outcome::holds;
        w << " in (" << detail::rational_str(lower) << ", " << detail::rational_str(upper) << ")";
    } else {
        r.outcome = Outcome::violation;
        w << " outside (" << detail::rational_str(lower) << ", " << detail::rational_str(upper) << ")";
    }
    r.witness = w.str();
    return r;
}

/// d_i >= 0 with d_i = 0 exactly in the enumerated cases: i = n; i <= c-2;
/// i = c-1 when no vertex is isolated (only meaningful for c >= 2); i = c = 1
/// when G is a cycle. Complete graphs sit outside the classification: their
/// d vector vanishes identically and is reported as the equality case.
inline VerificationReport check_pos_d(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("check_pos_d needs order >= 1");
    VerificationReport r;
    r.graph6 = graph6_serialize(g);
    r.n = n;
    r.theorem = "pos-d";
    const DVector d = d_vector(g);

    if (is_complete(g)) {
        for (int i = 1; i <= n; ++i) {
            if (d.d(i) != 0) {
                r.outcome = Outcome::violation;
                r.witness = "complete graph with d_" + std::to_string(i) + " != 0";
                return r;
            }
        }
        r.outcome = Outcome::equality_case;
        r.witness = "complete: d identically zero";
        return r;
    }

    const int c = component_count(g);
    const bool isolated = has_isolated_vertex(g);
    const bool cycle = is_cycle_graph(g);
    std::ostringstream zeros;
    for (int i = 1; i <= n; ++i) {
        const char* reason = nullptr;
        if (i == n)
            reason = "top";
        else if (i <= c - 2)
            reason = "below-components";
        else if (c >= 2 && i == c - 1 && !isolated)
            reason = "component-boundary";
        else if (c == 1 && i == 1 && cycle)
            reason = "cycle";
        if (d.d(i) < 0) {
            r.outcome = Outcome::violation;
            r.witness = "d_" + std::to_string(i) + " negative";
            return r;
        }
        if (reason && d.d(i) != 0) {
            r.outcome = Outcome::violation;
            r.witness = "d_" + std::to_string(i) + " nonzero in zero case " + reason;
            return r;
        }
        if (!reason && d.d(i) == 0) {
            r.outcome = Outcome::violation;
            r.witness = "d_" + std::to_string(i) + " zero outside the enumerated cases";
            return r;
        }
        if (reason) zeros << (zeros.tellp() > 0 ? "," : "") << "i=" << i << "(" << reason << ")";
    }
    r.outcome = Outcome::holds;
    r.witness = "zeros: " + zeros.str();
    return r;
}

/// Structural witness behind the strict d_i > 0 cases. For connected
/// non-cycle G: a non-adjacent pair u1,u2 whose removal keeps the graph
/// connected. For 2 <= c <= n-1 and c <= i <= n-1: a partition into i blocks
/// whose first block induces exactly two components, one of them an isolated
/// vertex, and whose other blocks are connected.
using DPositiveWitness = std::variant<std::pair<int, int>, VertexPartition>;

inline DPositiveWitness d_positive_witness(const Graph& g, int i) {
    const int n = g.order();
    if (n < 3) throw std::invalid_argument("witness needs order >= 3");
    if (is_complete(g)) throw std::invalid_argument("witness needs a non-complete graph");
    const int c = component_count(g);

    if (c == 1) {
        if (is_cycle_graph(g)) throw std::invalid_argument("cycle graphs are excluded");
        for (int u1 = 0; u1 < n; ++u1) {
            for (int u2 = u1 + 1; u2 < n; ++u2) {
                if (g.adjacent(u1, u2)) continue;
                const Graph::VertexSet rest =
                    g.vertices() & ~(Graph::VertexSet{1} << u1) & ~(Graph::VertexSet{1} << u2);
                if (rest != 0 && connected_within(g, rest)) return std::pair{u1, u2};
            }
        }
        throw std::logic_error("no removable non-adjacent pair found");
    }

    if (c > n - 1) throw std::invalid_argument("edgeless graphs are excluded");
    if (i < c || i > n - 1) throw std::invalid_argument("index must satisfy c <= i <= n-1");

    // Seed with i = c blocks: move a removable vertex u of one component
    // next to another whole component, then split blocks until there are i.
    const auto comps = components(g).blocks;
    std::size_t big = comps.size();
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (std::popcount(comps[k]) >= 2) {
            big = k;
            break;
        }
    }
    const auto [leaf, rest] = split_connected(g, comps[big]);
    std::vector<Graph::VertexSet> blocks;
    std::size_t other = big == 0 ? 1 : 0;
    blocks.push_back(comps[other] | leaf);  // two components: comps[other] and the leaf
    blocks.push_back(rest);
    for (std::size_t k = 0; k < comps.size(); ++k)
        if (k != big && k != other) blocks.push_back(comps[k]);

    while (static_cast<int>(blocks.size()) < i) {
        const Graph::VertexSet attached = blocks[0] & ~leaf;
        if (std::popcount(attached) >= 2) {
            const auto [a, b] = split_connected(g, attached);
            blocks[0] = leaf | b;
            blocks.push_back(a);
            continue;
        }
        bool split_done = false;
        for (std::size_t j = 1; j < blocks.size(); ++j) {
            if (std::popcount(blocks[j]) >= 2) {
                const auto [a, b] = split_connected(g, blocks[j]);
                blocks[j] = b;
                blocks.push_back(a);
                split_done = true;
                break;
            }
        }
        if (!split_done) throw std::logic_error("witness construction exhausted blocks");
    }
    VertexPartition p;
    p.blocks = std::move(blocks);
    return p;
}

/// epsilon(G,x) < epsilon(K_n,x) for non-complete G and x < 0: checks
/// xi(G,x) > 0 on the grid and certifies the alternating d polynomial.
inline VerificationReport check_compare_K(const Graph& g, const std::vector<BigRational>& grid) {
    if (g.order() < 1) throw std::invalid_argument("check_compare_K needs order >= 1");
    if (is_complete(g)) throw std::invalid_argument("complete graphs are the equality case");
    if (grid.empty()) throw std::invalid_argument("empty grid");
    VerificationReport r;
    r.graph6 = graph6_serialize(g);
    r.n = g.order();
    r.theorem = "compare-K";

    const IntPolynomial p = chromatic_polynomial(g);
    for (const auto& x : grid) {
        const BigRational v = xi(p, x);
        if (v <= 0) {
            r.outcome = Outcome::violation;
            r.witness = "xi(" + detail::rational_str(x) + ")=" + detail::rational_str(v);
            return r;
        }
    }
    const SignCertificate cert = certify_positive_on_negatives(d_vector(g).alternating_polynomial(), grid);
    if (cert.kind == SignCertificate::Kind::inconclusive) {
        r.outcome = Outcome::violation;
        r.certificate_kind = certificate_kind_name(cert.kind);
        r.witness = cert.failing_point
                        ? "d polynomial <= 0 at x=" + detail::rational_str(*cert.failing_point)
                        : "no certificate";
        return r;
    }
    r.outcome = Outcome::holds;
    r.certificate_kind = certificate_kind_name(cert.kind);
    r.witness = "xi > 0 on grid";
    return r;
}

/// epsilon(G,x) > epsilon(Q,x) for x < 0 when Q is a chordal proper spanning
/// subgraph: certifies N(x) = P'(G)P(Q) - P(G)P'(Q), whose positivity on
/// x < 0 is equivalent since P(G)P(Q) > 0 there.
inline VerificationReport check_compare_Q(const Graph& g, const Graph& q,
                                          const std::vector<BigRational>& grid) {
    if (!is_chordal_proper_spanning_subgraph(q, g))
        throw std::invalid_argument("Q must be a chordal proper spanning subgraph of G");
    if (grid.empty()) throw std::invalid_argument("empty grid");
    VerificationReport r;
    r.graph6 = graph6_serialize(g);
    r.n = g.order();
    r.theorem = "compare-Q";

    const IntPolynomial pg = chromatic_polynomial(g);
    const IntPolynomial pq = chromatic_polynomial(q);
    const IntPolynomial numerator = pg.derivative() * pq - pg * pq.derivative();
    const SignCertificate cert = certify_positive_on_negatives(numerator, grid);
    if (cert.kind == SignCertificate::Kind::inconclusive) {
        r.outcome = Outcome::violation;
        r.certificate_kind = certificate_kind_name(cert.kind);
        r.witness = cert.failing_point ? "difference <= 0 at x=" + detail::rational_str(*cert.failing_point)
                                       : "no certificate";
        return r;
    }
    r.outcome = Outcome::holds;
    r.certificate_kind = certificate_kind_name(cert.kind);
    r.witness = "Q=" + graph6_serialize(q);
    return r;
}

// ---------------------------------------------------------------------------
// Oracle cross-checks: the chromatic engine against independent counts.
// ---------------------------------------------------------------------------

namespace detail {

inline void check_oracle_budget(const Graph& g) {
    if (g.order() > 7) throw std::invalid_argument("oracle budget exceeded past order 7");
}

}  // namespace detail

/// a_i from deletion-contraction versus Whitney counts under the identity
/// ranking plus `random_orderings` shuffled rankings.
inline VerificationReport oracle_whitney(const Graph& g, int random_orderings, std::uint64_t seed) {
    detail::check_oracle_budget(g);
    VerificationReport r;
    r.graph6 = graph6_serialize(g);
    r.n = g.order();
    r.theorem = "oracle-whitney";
    const auto a = coefficients(g).values();
    for (int k = 0; k <= random_orderings; ++k) {
        const EdgeOrdering eta =
            k == 0 ? EdgeOrdering::identity(g) : EdgeOrdering::random(g, seed + static_cast<std::uint64_t>(k));
        const auto w = whitney_coefficients(g, eta);
        if (w != a) {
            r.outcome = Outcome::violation;
            r.witness = "mismatch under ordering " + std::to_string(k);
            return r;
        }
    }
    r.outcome = Outcome::holds;
    r.witness = std::to_string(random_orderings + 1) + " orderings";
    return r;
}

/// alpha(G) versus (-1)^n P(G,-1).
inline VerificationReport oracle_stanley(const Graph& g) {
    detail::check_oracle_budget(g);
    VerificationReport r;
    r.graph6 = graph6_serialize(g);
    r.n = g.order();
    r.theorem = "oracle-stanley";
    const BigInt via_poly =
        BigInt(parity_sign(g.order())) * chromatic_polynomial(g).evaluate(BigInt(-1));
    const BigInt via_count = count_acyclic(g);
    if (via_poly != via_count) {
        r.outcome = Outcome::violation;
        r.witness = "alpha=" + via_count.str() + " vs (-1)^n P(-1)=" + via_poly.str();
        return r;
    }
    r.outcome = Outcome::holds;
    r.witness = "alpha=" + via_count.str();
    return r;
}

/// alpha(G,v) = a_1 for every v (zero on disconnected graphs).
inline VerificationReport oracle_gz(const Graph& g) {
    detail::check_oracle_budget(g);
    if (g.order() < 1) throw std::invalid_argument("oracle needs order >= 1");
    VerificationReport r;
    r.graph6 = graph6_serialize(g);
    r.n = g.order();
    r.theorem = "oracle-gz";
    const BigInt a1 = coefficients(g).a(1);
    for (int v = 0; v < g.order(); ++v) {
        if (count_unique_source(g, v) != a1) {
            r.outcome = Outcome::violation;
            r.witness = "alpha(G," + std::to_string(v) + ") != a_1=" + a1.str();
            return r;
        }
    }
    r.outcome = Outcome::holds;
    r.witness = "a_1=" + a1.str();
    return r;
}

/// Both anchored interpretations of a_i, for every index and every anchor.
inline VerificationReport oracle_interp(const Graph& g) {
    detail::check_oracle_budget(g);
    if (g.order() < 1) throw std::invalid_argument("oracle needs order >= 1");
    VerificationReport r;
    r.graph6 = graph6_serialize(g);
    r.n = g.order();
    r.theorem = "oracle-interp";
    const auto coeff = coefficients(g);
    for (int i = 1; i <= g.order(); ++i) {
        if (interp_coefficient_partition(g, i) != coeff.a(i)) {
            r.outcome = Outcome::violation;
            r.witness = "partition sum != a_" + std::to_string(i);
            return r;
        }
        for (int v = 0; v < g.order(); ++v) {
            if (interp_coefficient_orientation(g, i, v) != coeff.a(i)) {
                r.outcome = Outcome::violation;
                r.witness = "orientation sum != a_" + std::to_string(i) + " at anchor " + std::to_string(v);
                return r;
            }
        }
    }
    r.outcome = Outcome::holds;
    r.witness = "all indices and anchors";
    return r;
}

// ---------------------------------------------------------------------------
// Sweeps.
// ---------------------------------------------------------------------------

struct SweepOptions {
    int max_n = 6;
    std::vector<BigRational> grid = default_grid();
    int jobs = 1;
    std::uint64_t seed = 20250825;
    bool run_conjecture = true;
    bool run_pos_d = true;
    bool run_compare_k = false;
    bool run_compare_q = false;
    bool oracle_whitney_on = false;
    int whitney_orderings = 5;
    bool oracle_stanley_on = false;
    bool oracle_gz_on = false;
    bool oracle_interp_on = false;
};

struct SweepSummary {
    std::uint64_t graphs = 0;
    std::uint64_t reports = 0;
    std::uint64_t holds = 0;
    std::uint64_t equality_cases = 0;
    std::uint64_t violations = 0;
    std::uint64_t errors = 0;
};

using ReportSink = std::function<void(const VerificationReport&)>;
using ErrorSink = std::function<void(const std::string& where, const std::string& message)>;

/// All checks enabled in `opts` for one graph, in a fixed order.
inline std::vector<VerificationReport> verify_graph(const Graph& g, const SweepOptions& opts) {
    std::vector<VerificationReport> out;
    if (opts.run_conjecture && g.order() >= 1 && is_connected(g))
        out.push_back(check_conjecture(g));
    if (opts.run_pos_d && g.order() >= 1) out.push_back(check_pos_d(g));
    if (opts.run_compare_k && g.order() >= 1 && !is_complete(g))
        out.push_back(check_compare_K(g, opts.grid));
    if (opts.run_compare_q && g.order() >= 1) {
        const auto edges = g.edges();
        if (edges.size() > 20) throw std::invalid_argument("compare-Q sweep capped at 20 edges");
        std::uint64_t pairs = 0;
        for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << edges.size()); ++mask) {
            Graph q(g.order());
            for (std::size_t k = 0; k < edges.size(); ++k)
                if ((mask >> k) & 1u) q.add_edge(edges[k].first, edges[k].second);
            if (!is_chordal(q)) continue;
            ++pairs;
            VerificationReport rep = check_compare_Q(g, q, opts.grid);
            if (rep.outcome != Outcome::holds) out.push_back(rep);
        }
        if (pairs > 0) {
            VerificationReport agg;
            agg.graph6 = graph6_serialize(g);
            agg.n = g.order();
            agg.theorem = "compare-Q";
            agg.outcome = Outcome::holds;
            agg.witness = std::to_string(pairs) + " chordal spanning subgraphs";
            bool any_violation = false;
            for (const auto& rep : out)
                if (rep.theorem == "compare-Q" && rep.outcome == Outcome::violation) any_violation = true;
            if (!any_violation) out.push_back(agg);
        }
    }
    if (opts.oracle_whitney_on) out.push_back(oracle_whitney(g, opts.whitney_orderings, opts.seed));
    if (opts.oracle_stanley_on) out.push_back(oracle_stanley(g));
    if (opts.oracle_gz_on && g.order() >= 1) out.push_back(oracle_gz(g));
    if (opts.oracle_interp_on && g.order() >= 1) out.push_back(oracle_interp(g));
    return out;
}

namespace detail {

struct SweepWorkResult {
    std::vector<VerificationReport> reports;
    std::string error;
};

// Pulls items in chunks, maps them across `jobs` threads, and consumes the
// results in input order, so output is deterministic for any job count.
template <class Item, class NextFn, class WorkFn, class ConsumeFn>
void run_chunked(NextFn&& next, WorkFn&& work, ConsumeFn&& consume, int jobs, std::size_t chunk) {
    std::vector<Item> batch;
    batch.reserve(chunk);
    for (;;) {
        batch.clear();
        Item item;
        while (batch.size() < chunk && next(item)) batch.push_back(std::move(item));
        if (batch.empty()) break;
        if (jobs <= 1 || batch.size() == 1) {
            for (auto& b : batch) {
                auto r = work(b);
                consume(b, r);
            }
        } else {
            std::vector<SweepWorkResult> results(batch.size());
            std::atomic<std::size_t> cursor{0};
            const auto runner = [&] {
                for (std::size_t k; (k = cursor.fetch_add(1)) < batch.size();)
                    results[k] = work(batch[k]);
            };
            std::vector<std::thread> pool;
            const int count = std::min<int>(jobs, static_cast<int>(batch.size()));
            pool.reserve(static_cast<std::size_t>(count));
            for (int t = 0; t < count; ++t) pool.emplace_back(runner);
            for (auto& th : pool) th.join();
            for (std::size_t k = 0; k < batch.size(); ++k) consume(batch[k], results[k]);
        }
    }
}

inline void tally(SweepSummary& summary, const SweepWorkResult& result, const std::string& where,
                  const ReportSink& on_report, const ErrorSink& on_error) {
    if (!result.error.empty()) {
        ++summary.errors;
        if (on_error) on_error(where, result.error);
        return;
    }
    ++summary.graphs;
    for (const auto& rep : result.reports) {
        ++summary.reports;
        switch (rep.outcome) {
            case Outcome::holds: ++summary.holds; break;
            case Outcome::equality_case: ++summary.equality_cases; break;
            case Outcome::violation: ++summary.violations; break;
        }
        if (on_report) on_report(rep);
    }
}

}  // namespace detail

/// Exhaustive sweep over every labelled graph with 1 <= n <= opts.max_n.
inline SweepSummary sweep_labeled_graphs(const SweepOptions& opts, const ReportSink& on_report,
                                         const ErrorSink& on_error = {}) {
    if (opts.max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    SweepSummary summary;
    struct Item {
        int n;
        std::uint64_t mask;
    };
    int n = 1;
    std::uint64_t mask = 0;
    const auto next = [&](Item& item) {
        while (n <= opts.max_n && mask >= labeled_graph_count(n)) {
            ++n;
            mask = 0;
        }
        if (n > opts.max_n) return false;
        item = {n, mask++};
        return true;
    };
    const auto work = [&](const Item& item) {
        detail::SweepWorkResult result;
        try {
            result.reports = verify_graph(graph_from_edge_mask(item.n, item.mask), opts);
        } catch (const std::exception& e) {
            result.error = e.what();
        }
        return result;
    };
    const auto consume = [&](const Item& item, const detail::SweepWorkResult& result) {
        detail::tally(summary, result, "n=" + std::to_string(item.n) + " mask=" + std::to_string(item.mask),
                      on_report, on_error);
    };
    detail::run_chunked<Item>(next, work, consume, opts.jobs, 2048);
    return summary;
}

/// Streaming sweep over graph6 lines; malformed lines are reported with
/// their line number and the sweep continues.
inline SweepSummary sweep_graph6_stream(std::istream& in, const SweepOptions& opts,
                                        const ReportSink& on_report, const ErrorSink& on_error = {}) {
    SweepSummary summary;
    struct Item {
        std::size_t line_no;
        std::string text;
    };
    std::size_t line_no = 0;
    const auto next = [&](Item& item) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            item = {line_no, std::move(line)};
            return true;
        }
        return false;
    };
    const auto work = [&](const Item& item) {
        detail::SweepWorkResult result;
        try {
            result.reports = verify_graph(graph6_parse(item.text), opts);
        } catch (const std::exception& e) {
            result.error = e.what();
        }
        return result;
    };
    const auto consume = [&](const Item& item, const detail::SweepWorkResult& result) {
        detail::tally(summary, result, "line " + std::to_string(item.line_no), on_report, on_error);
    };
    detail::run_chunked<Item>(next, work, consume, opts.jobs, 1024);
    return summary;
}

}  // namespace chromapol
