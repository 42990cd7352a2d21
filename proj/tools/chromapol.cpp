// Command-line front end: per-graph chromatic data (poly), inequality and
// classification sweeps (verify), and engine-vs-oracle comparisons (oracle).
// Input is graph6 (one graph per line) or an edge list ("n m" header, then
// 1-based pairs); a leading digit selects the edge-list reader.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chromapol/chromatic.hpp"
#include "chromapol/graph.hpp"
#include "chromapol/graph_io.hpp"
#include "chromapol/orientations.hpp"
#include "chromapol/verify.hpp"

namespace {

using chromapol::BigInt;
using chromapol::BigRational;
using chromapol::Graph;
using nlohmann::json;

json big_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

json bigs_to_json(const std::vector<BigInt>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(big_to_json(v));
    return arr;
}

json report_to_json(const chromapol::VerificationReport& r) {
    return json{{"graph6", r.graph6},
                {"n", r.n},
                {"theorem", r.theorem},
                {"outcome", chromapol::outcome_name(r.outcome)},
                {"certificate_kind", r.certificate_kind},
                {"witness", r.witness}};
}

void print_report_text(const chromapol::VerificationReport& r) {
    std::cout << r.graph6 << " n=" << r.n << " " << r.theorem << ": "
              << chromapol::outcome_name(r.outcome);
    if (!r.certificate_kind.empty()) std::cout << " [" << r.certificate_kind << "]";
    if (!r.witness.empty()) std::cout << " " << r.witness;
    std::cout << "\n";
}

// Reads every graph from a path ("-" selects stdin): graph6 lines, or one
// edge-list graph when the input starts with a digit. `on_graph` receives a
// location label and the graph; `on_error` a location label and message.
template <class OnGraph, class OnError>
void read_graphs(const std::string& path, OnGraph&& on_graph, OnError&& on_error) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) {
            on_error(path, "cannot open input file");
            return;
        }
        in = &file;
    }
    const int first = in->peek();
    if (first != EOF && std::isdigit(static_cast<unsigned char>(first))) {
        try {
            const Graph g = chromapol::edge_list_parse(*in);
            on_graph("edge-list", g);
        } catch (const std::exception& e) {
            on_error("edge-list", e.what());
        }
        return;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            on_graph("line " + std::to_string(line_no), chromapol::graph6_parse(line));
        } catch (const std::exception& e) {
            on_error("line " + std::to_string(line_no), e.what());
        }
    }
}

int run_poly(const std::string& input, const std::string& format) {
    bool any_error = false;
    read_graphs(
        input,
        [&](const std::string&, const Graph& g) {
            const auto p = chromapol::chromatic_polynomial(g);
            const auto coeffs = p.coefficient_list(g.order() + 1);
            std::vector<BigInt> a;
            std::vector<BigRational> b;
            std::optional<BigRational> eps;
            if (g.order() >= 1) {
                a = chromapol::Coefficients::from_polynomial(p).values();
                b = chromapol::b_distribution(g);
                eps = chromapol::epsilon_mean(g);
            }
            if (format == "json") {
                json out{{"graph6", chromapol::graph6_serialize(g)},
                         {"n", g.order()},
                         {"m", g.edge_count()},
                         {"polynomial", p.to_string()},
                         {"coefficients", bigs_to_json(coeffs)},
                         {"a", bigs_to_json(a)}};
                json bj = json::array();
                for (const auto& q : b) bj.push_back(q.str());
                out["b"] = bj;
                if (eps) {
                    out["epsilon"] = eps->str();
                    out["epsilon_decimal"] = chromapol::to_double(*eps);
                }
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "graph " << chromapol::graph6_serialize(g) << "  n=" << g.order()
                          << " m=" << g.edge_count() << "\n";
                std::cout << "  P(x) = " << p.to_string() << "\n";
                std::cout << "  coefficients =";
                for (const auto& c : coeffs) std::cout << " " << c.str();
                std::cout << "\n  a =";
                for (const auto& c : a) std::cout << " " << c.str();
                std::cout << "\n  b =";
                for (const auto& q : b) std::cout << " " << q.str();
                std::cout << "\n";
                if (eps)
                    std::cout << "  epsilon = " << eps->str() << " ~ " << chromapol::to_double(*eps)
                              << "\n";
            }
        },
        [&](const std::string& where, const std::string& message) {
            any_error = true;
            std::cerr << "error: " << where << ": " << message << "\n";
        });
    return any_error ? 1 : 0;
}

struct TheoremSelection {
    bool conjecture = false;
    bool pos_d = false;
    bool compare_k = false;
    bool compare_q = false;
};

bool parse_theorems(const std::string& list, TheoremSelection& sel) {
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "all") {
            sel = {true, true, true, true};
        } else if (item == "conjecture") {
            sel.conjecture = true;
        } else if (item == "pos-d") {
            sel.pos_d = true;
        } else if (item == "compare-K") {
            sel.compare_k = true;
        } else if (item == "compare-Q") {
            sel.compare_q = true;
        } else {
            return false;
        }
    }
    return true;
}

struct OracleSelection {
    bool whitney = false;
    bool stanley = false;
    bool gz = false;
    bool interp = false;
};

bool parse_oracles(const std::string& list, OracleSelection& sel) {
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "none") {
            sel = {};
        } else if (item == "all") {
            sel = {true, true, true, true};
        } else if (item == "whitney") {
            sel.whitney = true;
        } else if (item == "stanley") {
            sel.stanley = true;
        } else if (item == "gz") {
            sel.gz = true;
        } else if (item == "interp") {
            sel.interp = true;
        } else {
            return false;
        }
    }
    return true;
}

bool parse_grid(const std::string& csv, std::vector<BigRational>& grid) {
    grid.clear();
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            const BigRational x = chromapol::parse_rational(item);
            if (x >= 0) return false;
            grid.push_back(x);
        } catch (const std::exception&) {
            return false;
        }
    }
    return !grid.empty();
}

int run_verify(const std::string& input, int max_n, const std::string& theorems,
               const std::string& oracles, const std::string& grid_csv, int jobs,
               std::uint64_t seed, const std::string& format) {
    TheoremSelection theorem_sel;
    if (!parse_theorems(theorems, theorem_sel)) {
        std::cerr << "error: unknown theorem id in --theorem (use "
                     "conjecture,pos-d,compare-K,compare-Q,all)\n";
        return 2;
    }
    OracleSelection oracle_sel;
    if (!parse_oracles(oracles, oracle_sel)) {
        std::cerr << "error: unknown oracle in --oracles (use whitney,stanley,gz,interp,all,none)\n";
        return 2;
    }
    chromapol::SweepOptions opts;
    if (!parse_grid(grid_csv, opts.grid)) {
        std::cerr << "error: --grid must be a comma list of negative rationals\n";
        return 2;
    }
    if (jobs < 1) {
        std::cerr << "error: --jobs must be >= 1\n";
        return 2;
    }
    opts.jobs = jobs;
    opts.seed = seed;
    opts.run_conjecture = theorem_sel.conjecture;
    opts.run_pos_d = theorem_sel.pos_d;
    opts.run_compare_k = theorem_sel.compare_k;
    opts.run_compare_q = theorem_sel.compare_q;
    opts.oracle_whitney_on = oracle_sel.whitney;
    opts.oracle_stanley_on = oracle_sel.stanley;
    opts.oracle_gz_on = oracle_sel.gz;
    opts.oracle_interp_on = oracle_sel.interp;

    const chromapol::ReportSink sink = [&](const chromapol::VerificationReport& r) {
        if (format == "json")
            std::cout << report_to_json(r).dump() << "\n";
        else
            print_report_text(r);
    };
    const chromapol::ErrorSink errors = [&](const std::string& where, const std::string& message) {
        std::cerr << "error: " << where << ": " << message << "\n";
    };

    chromapol::SweepSummary summary;
    if (!input.empty()) {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (input != "-") {
            file.open(input);
            if (!file) {
                std::cerr << "error: cannot open " << input << "\n";
                return 2;
            }
            in = &file;
        }
        const int first = in->peek();
        if (first != EOF && std::isdigit(static_cast<unsigned char>(first))) {
            try {
                const Graph g = chromapol::edge_list_parse(*in);
                for (const auto& r : chromapol::verify_graph(g, opts)) {
                    sink(r);
                    ++summary.reports;
                    if (r.outcome == chromapol::Outcome::violation) ++summary.violations;
                    if (r.outcome == chromapol::Outcome::holds) ++summary.holds;
                    if (r.outcome == chromapol::Outcome::equality_case) ++summary.equality_cases;
                }
                ++summary.graphs;
            } catch (const std::exception& e) {
                errors("edge-list", e.what());
                ++summary.errors;
            }
        } else {
            summary = chromapol::sweep_graph6_stream(*in, opts, sink, errors);
        }
    } else {
        if (max_n < 1 || max_n > 7) {
            std::cerr << "error: --max-n must be between 1 and 7 for exhaustive enumeration\n";
            return 2;
        }
        opts.max_n = max_n;
        summary = chromapol::sweep_labeled_graphs(opts, sink, errors);
    }

    if (format == "json") {
        std::cout << json{{"summary",
                           {{"graphs", summary.graphs},
                            {"reports", summary.reports},
                            {"holds", summary.holds},
                            {"equality_cases", summary.equality_cases},
                            {"violations", summary.violations},
                            {"errors", summary.errors}}}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "summary: graphs=" << summary.graphs << " reports=" << summary.reports
                  << " holds=" << summary.holds << " equality-cases=" << summary.equality_cases
                  << " violations=" << summary.violations << " errors=" << summary.errors << "\n";
    }
    return summary.violations == 0 ? 0 : 1;
}

int run_oracle(const std::string& which, const std::string& input, int orderings,
               std::uint64_t seed, const std::string& format) {
    if (which != "whitney" && which != "stanley" && which != "gz" && which != "partition" &&
        which != "orientation") {
        std::cerr << "error: oracle must be one of whitney, stanley, gz, partition, orientation\n";
        return 2;
    }
    bool any_error = false, any_mismatch = false;
    read_graphs(
        input,
        [&](const std::string& where, const Graph& g) {
            try {
                if (g.order() > 7) throw std::invalid_argument("oracle budget exceeded past order 7");
                const std::string g6 = chromapol::graph6_serialize(g);
                std::vector<BigInt> engine, oracle;
                bool match = true;
                json extra;
                if (which == "whitney") {
                    engine = chromapol::coefficients(g).values();
                    for (int k = 0; k <= orderings; ++k) {
                        const auto eta = k == 0 ? chromapol::EdgeOrdering::identity(g)
                                                : chromapol::EdgeOrdering::random(
                                                      g, seed + static_cast<std::uint64_t>(k));
                        const auto w = chromapol::whitney_coefficients(g, eta);
                        if (k == 0) oracle = w;
                        if (w != engine) {
                            match = false;
                            oracle = w;
                            extra["ordering"] = k;
                            break;
                        }
                    }
                    extra["orderings"] = orderings + 1;
                } else if (which == "stanley") {
                    engine = {BigInt(chromapol::parity_sign(g.order())) *
                              chromapol::chromatic_polynomial(g).evaluate(BigInt(-1))};
                    oracle = {chromapol::count_acyclic(g)};
                    match = engine == oracle;
                } else if (which == "gz") {
                    if (g.order() < 1) throw std::invalid_argument("gz oracle needs order >= 1");
                    const BigInt a1 = chromapol::coefficients(g).a(1);
                    engine = {a1};
                    for (int v = 0; v < g.order(); ++v) {
                        oracle.push_back(chromapol::count_unique_source(g, v));
                        if (oracle.back() != a1) match = false;
                    }
                } else if (which == "partition") {
                    engine = chromapol::coefficients(g).values();
                    for (int i = 1; i <= g.order(); ++i)
                        oracle.push_back(chromapol::interp_coefficient_partition(g, i));
                    match = engine == oracle;
                } else {
                    engine = chromapol::coefficients(g).values();
                    for (int i = 1; i <= g.order(); ++i)
                        oracle.push_back(chromapol::interp_coefficient_orientation(g, i, 0));
                    match = engine == oracle;
                    for (int v = 1; match && v < g.order(); ++v)
                        for (int i = 1; i <= g.order(); ++i)
                            if (chromapol::interp_coefficient_orientation(g, i, v) !=
                                engine[static_cast<std::size_t>(i - 1)])
                                match = false;
                    extra["anchors"] = g.order();
                }
                if (!match) any_mismatch = true;
                if (format == "json") {
                    json out{{"graph6", g6},       {"n", g.order()},
                             {"oracle", which},    {"engine", bigs_to_json(engine)},
                             {"values", bigs_to_json(oracle)}, {"match", match}};
                    for (auto& [k, v] : extra.items()) out[k] = v;
                    std::cout << out.dump() << "\n";
                } else {
                    std::cout << g6 << " n=" << g.order() << " " << which << ": engine=[";
                    for (std::size_t k = 0; k < engine.size(); ++k)
                        std::cout << (k ? "," : "") << engine[k].str();
                    std::cout << "] oracle=[";
                    for (std::size_t k = 0; k < oracle.size(); ++k)
                        std::cout << (k ? "," : "") << oracle[k].str();
                    std::cout << "] match=" << (match ? "yes" : "NO") << "\n";
                }
            } catch (const std::exception& e) {
                any_error = true;
                std::cerr << "error: " << where << ": " << e.what() << "\n";
            }
        },
        [&](const std::string& where, const std::string& message) {
            any_error = true;
            std::cerr << "error: " << where << ": " << message << "\n";
        });
    return (any_error || any_mismatch) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chromatic polynomial computations and verified coefficient inequalities"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "json";
    std::string grid_csv = "-1/4,-1/2,-1,-2,-5,-10";
    std::string theorems = "conjecture,pos-d";
    std::string oracles = "none";
    std::string which;
    std::string verify_input;
    int max_n = 6;
    int orderings = 4;
    std::uint64_t seed = 20250825;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    auto* poly = app.add_subcommand("poly", "Chromatic polynomial, a_i, b_i and epsilon per graph");
    poly->add_option("--input", input, "graph6 lines or edge list; '-' for stdin")
        ->capture_default_str();
    poly->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Verify inequalities and classifications");
    verify->add_option("--input", verify_input,
                       "graph6 lines or edge list; '-' for stdin; omit to enumerate all labelled "
                       "graphs up to --max-n");
    verify->add_option("--max-n", max_n, "enumeration bound (1..7)")->capture_default_str();
    verify->add_option("--theorem", theorems, "comma list: conjecture,pos-d,compare-K,compare-Q,all")
        ->capture_default_str();
    verify->add_option("--oracles", oracles, "comma list: whitney,stanley,gz,interp,all,none")
        ->capture_default_str();
    verify->add_option("--grid", grid_csv, "comma list of negative rationals")->capture_default_str();
    verify->add_option("--jobs", jobs, "worker threads")->envname("CHROMAPOL_JOBS")->capture_default_str();
    verify->add_option("--seed", seed, "seed for randomized edge orderings")->capture_default_str();
    verify->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    auto* oracle = app.add_subcommand("oracle", "Engine vs oracle comparison per graph");
    oracle->add_option("which", which, "whitney, stanley, gz, partition or orientation")->required();
    oracle->add_option("--input", input, "graph6 lines or edge list; '-' for stdin")
        ->capture_default_str();
    oracle->add_option("--orderings", orderings, "extra random edge orderings (whitney)")
        ->capture_default_str();
    oracle->add_option("--seed", seed, "seed for randomized edge orderings")->capture_default_str();
    oracle->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; any usage error is a configuration error
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (poly->parsed()) return run_poly(input, format);
        if (verify->parsed())
            return run_verify(verify_input, max_n, theorems, oracles, grid_csv, jobs, seed, format);
        if (oracle->parsed()) return run_oracle(which, input, orderings, seed, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
