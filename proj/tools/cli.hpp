#pragma once

// Command-line front end. Kept in a header so tests can drive run_cli directly.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "weightspace/certificates.hpp"
#include "weightspace/evs.hpp"
#include "weightspace/oracle.hpp"
#include "weightspace/verify.hpp"
#include "weightspace/wcw.hpp"

namespace wspace::cli {

using nlohmann::json;

enum ExitCode : int { kSuccess = 0, kFalse = 1, kInputError = 2, kInternalError = 3 };

struct Options {
    std::string file;
    bool json = false;
    bool certificates = false;
    std::size_t jobs = 1;
    std::size_t max_n = 5;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
};

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_graph(text.str());
}

// ---------------------------------------------------------------------------
// Formatting

inline std::string vertex_name(std::size_t i) { return "w" + std::to_string(i); }

inline std::string edge_name(const Graph& g, std::size_t i) {
    const auto& e = g.edge(i);
    return "w(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

/// Renders c · w = 0 as "positive terms = negative terms".
inline std::string equation(const RationalVector& coeffs, const std::function<std::string(std::size_t)>& name) {
    std::string lhs;
    std::string rhs;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const Rational mag = coeffs[i] > 0 ? coeffs[i] : Rational(-coeffs[i]);
        std::string term = (mag == 1 ? "" : to_string(mag) + "*") + name(i);
        std::string& side = coeffs[i] > 0 ? lhs : rhs;
        side += (side.empty() ? "" : " + ") + term;
    }
    return (lhs.empty() ? "0" : lhs) + " = " + (rhs.empty() ? "0" : rhs);
}

inline json rational_vector_json(const RationalVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline json edge_list_json(const Graph& g, const Matching& m) {
    json out = json::array();
    for (EdgeIndex e : m) out.push_back({g.edge(e).u, g.edge(e).v});
    return out;
}

inline json graph_header(const Graph& g, const char* mode) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.order()}, {"m", g.size()}, {"edges", edges}, {"mode", mode}};
}

inline void add_space(json& doc, const WeightSpace& space) {
    doc["dimension"] = space.dimension();
    json basis = json::array();
    for (const auto& row : space.basis()) basis.push_back(rational_vector_json(row));
    doc["basis"] = basis;
}

inline json provenance_json(const Graph&, const CoreCertificate& c, bool certificates) {
    json p = {{"kind", to_string(c.core.shape)}, {"x", c.core.x}, {"y", c.core.y}};
    if (certificates) {
        auto with = [&](const VertexSet& side) {
            VertexSet s = c.witness;
            s.insert(s.end(), side.begin(), side.end());
            return make_vertex_set(std::move(s));
        };
        p["witness"] = c.witness;
        p["maximal_sets"] = {with(c.core.x), with(c.core.y)};
    }
    return p;
}

inline json provenance_json(const Graph& g, const EvsCertificate& cert, bool certificates) {
    return std::visit(
        [&](const auto& c) {
            json p;
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, PathCertificate>) {
                p = {{"kind", c.path.length() == 3 ? "P3" : "P4"}, {"path", c.path.vertices()}};
            } else {
                p = {{"kind", "C4"}, {"cycle", c.cycle.vertices()}};
            }
            if (certificates) {
                p["matchings"] = {edge_list_json(g, c.witness.first), edge_list_json(g, c.witness.second)};
            }
            return p;
        },
        cert);
}

inline std::string provenance_text(const Graph&, const CoreCertificate& c, bool certificates) {
    auto set = [](const VertexSet& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
        return out + "}";
    };
    std::string out = std::string(to_string(c.core.shape)) + " " + set(c.core.x) + " | " + set(c.core.y);
    if (certificates) out += ", S = " + set(c.witness);
    return out;
}

inline std::string matching_text(const Graph& g, const Matching& m) {
    std::string out = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& e = g.edge(m[i]);
        out += (i ? " " : "") + std::string("(") + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    }
    return out + "}";
}

inline std::string walk_text(const std::vector<Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "-" : "") + std::to_string(vs[i]);
    return out;
}

inline std::string provenance_text(const Graph& g, const EvsCertificate& cert, bool certificates) {
    return std::visit(
        [&](const auto& c) {
            std::string out;
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, PathCertificate>) {
                out = (c.path.length() == 3 ? "P3 " : "P4 ") + walk_text(c.path.vertices());
            } else {
                out = "C4 " + walk_text(c.cycle.vertices());
            }
            if (certificates) {
                out += ", M1 = " + matching_text(g, c.witness.first) + ", M2 = " + matching_text(g, c.witness.second);
            }
            return out;
        },
        cert);
}

template <class Provenance>
void emit_space(std::ostream& out, const Options& opt, const Graph& g, const char* mode, const WeightSpace& space,
                const std::vector<Restriction<Provenance>>& restrictions,
                const std::function<std::string(std::size_t)>& name) {
    if (opt.json) {
        json doc = graph_header(g, mode);
        add_space(doc, space);
        json rs = json::array();
        for (const auto& r : restrictions) {
            rs.push_back({{"coeffs", rational_vector_json(r.coeffs)},
                          {"equation", equation(r.coeffs, name)},
                          {"provenance", provenance_json(g, r.provenance, opt.certificates)}});
        }
        doc["restrictions"] = rs;
        out << doc.dump(2) << '\n';
        return;
    }
    out << mode << ": " << g.order() << " vertices, " << g.size() << " edges\n";
    out << "dimension " << space.dimension() << '\n';
    out << "basis:\n";
    for (const auto& row : space.basis()) {
        out << "  (";
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? ", " : "") << to_string(row[i]);
        out << ")\n";
    }
    out << "restrictions (" << restrictions.size() << "):\n";
    for (const auto& r : restrictions) {
        out << "  " << equation(r.coeffs, name) << "    [" << provenance_text(g, r.provenance, opt.certificates)
            << "]\n";
    }
}

/// Oracle restrictions w(F_1) - w(F_i) = 0 with the two sets as provenance.
struct OracleCertificate {
    std::vector<std::size_t> first;
    std::vector<std::size_t> other;
};

inline json provenance_json(const Graph&, const OracleCertificate& c, bool) {
    return {{"kind", "oracle"}, {"sets", {c.first, c.other}}};
}

inline std::string provenance_text(const Graph&, const OracleCertificate& c, bool) {
    auto set = [](const std::vector<std::size_t>& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
        return out + "}";
    };
    return "oracle " + set(c.first) + " vs " + set(c.other);
}

template <class Family>
std::vector<Restriction<OracleCertificate>> oracle_restrictions(const Family& sets, std::size_t dim) {
    std::vector<Restriction<OracleCertificate>> out;
    for (std::size_t i = 1; i < sets.size(); ++i) {
        RationalVector r(dim, Rational(0));
        for (auto x : sets.front()) r[x] += 1;
        for (auto x : sets[i]) r[x] -= 1;
        OracleCertificate cert{{sets.front().begin(), sets.front().end()}, {sets[i].begin(), sets[i].end()}};
        out.push_back({std::move(r), std::move(cert)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Commands

inline int cmd_wcw(std::ostream& out, const Options& opt) {
    const Graph g = load_graph(opt.file);
    const auto result = wcw_space(g);
    emit_space(out, opt, g, "wcw", result.space, result.restrictions, vertex_name);
    return kSuccess;
}

inline int cmd_evs(std::ostream& out, const Options& opt) {
    const Graph g = load_graph(opt.file);
    const auto result = evs_space(g);
    emit_space(out, opt, g, "evs", result.space, result.restrictions,
               [&](std::size_t i) { return edge_name(g, i); });
    return kSuccess;
}

inline int cmd_oracle_wcw(std::ostream& out, const Options& opt) {
    const Graph g = load_graph(opt.file);
    const auto sets = maximal_independent_sets(g);
    const auto rs = oracle_restrictions(sets, g.order());
    emit_space(out, opt, g, "wcw", oracle_wcw(g), rs, vertex_name);
    return kSuccess;
}

inline int cmd_oracle_evs(std::ostream& out, const Options& opt) {
    const Graph g = load_graph(opt.file);
    const auto sets = maximal_matchings(g);
    const auto rs = oracle_restrictions(sets, g.size());
    emit_space(out, opt, g, "evs", oracle_evs(g), rs, [&](std::size_t i) { return edge_name(g, i); });
    return kSuccess;
}

inline int cmd_recognize_wellcovered(std::ostream& out, const Options& opt) {
    const Graph g = load_graph(opt.file);
    const auto result = wcw_space(g);
    const auto all_ones = ones(g.order());
    const WcwRestriction* broken = nullptr;
    for (const auto& r : result.restrictions) {
        if (dot(r.coeffs, all_ones) != 0) {
            broken = &r;
            break;
        }
    }
    const bool yes = result.space.contains(all_ones);
    check_invariant(yes == (broken == nullptr), "well-covered verdict disagrees with restriction scan");
    if (opt.json) {
        json doc = graph_header(g, "wcw");
        doc["well_covered"] = yes;
        if (broken) doc["certificate"] = provenance_json(g, broken->provenance, true);
        out << doc.dump(2) << '\n';
    } else if (yes) {
        out << "well-covered\n";
    } else {
        out << "not well-covered: " << provenance_text(g, broken->provenance, true) << '\n';
    }
    return yes ? kSuccess : kFalse;
}

inline int cmd_recognize_equimatchable(std::ostream& out, const Options& opt) {
    const Graph g = load_graph(opt.file);
    const auto breaker = find_unequal_maximal_matchings(g);
    if (opt.json) {
        json doc = graph_header(g, "evs");
        doc["equimatchable"] = !breaker.has_value();
        if (breaker) {
            doc["certificate"] = {{"kind", "P4"},
                                  {"path", breaker->path.vertices()},
                                  {"matchings",
                                   {edge_list_json(g, breaker->witness.first), edge_list_json(g, breaker->witness.second)}}};
        }
        out << doc.dump(2) << '\n';
    } else if (!breaker) {
        out << "equimatchable\n";
    } else {
        out << "not equimatchable: P4 " << walk_text(breaker->path.vertices()) << ", M1 = "
            << matching_text(g, breaker->witness.first) << ", M2 = " << matching_text(g, breaker->witness.second)
            << '\n';
    }
    return breaker ? kFalse : kSuccess;
}

inline int cmd_verify(std::ostream& out, const Options& opt) {
    if (opt.max_n > 7) throw InputError("--max-n above 7 is not supported (the oracle is exponential)");
    auto corpus = all_labeled_graphs(opt.max_n);
    const std::size_t exhaustive = corpus.size();
    if (opt.samples > 0) {
        auto extra = random_graphs(opt.samples, {opt.max_n + 1, opt.max_n + 2}, opt.seed);
        corpus.insert(corpus.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
    }
    const auto s = sweep(corpus, opt.jobs);
    if (opt.json) {
        json doc = {{"max_n", opt.max_n},
                    {"exhaustive_graphs", exhaustive},
                    {"random_graphs", opt.samples},
                    {"seed", opt.seed},
                    {"graphs", s.graphs},
                    {"evs_matches", s.evs_ok},
                    {"recognition_consistent", s.recognition_ok},
                    {"claw_free", s.claw_free},
                    {"wcw_matches", s.wcw_ok},
                    {"well_covered_consistent", s.well_covered_ok},
                    {"line_graph_checked", s.line_checked},
                    {"line_graph_matches", s.line_ok},
                    {"certificates_valid", s.certificates_ok},
                    {"passed", s.all_passed()},
                    {"failures", s.failures}};
        out << doc.dump(2) << '\n';
    } else {
        out << s.evs_ok << "/" << s.graphs << " graphs: evs matches oracle\n";
        out << s.recognition_ok << "/" << s.graphs << " graphs: equimatchable recognition consistent\n";
        out << s.wcw_ok << "/" << s.claw_free << " claw-free graphs: wcw matches oracle\n";
        out << s.well_covered_ok << "/" << s.claw_free << " claw-free graphs: well-covered recognition consistent\n";
        out << s.line_ok << "/" << s.line_checked << " graphs with m <= " << kLineIdentityMaxEdges
            << ": evs equals wcw of the line graph\n";
        out << s.certificates_ok << "/" << s.graphs << " graphs: all restriction certificates valid\n";
        for (const auto& f : s.failures) out << "FAILED:\n" << f << '\n';
    }
    return s.all_passed() ? kSuccess : kInternalError;
}

/// Parses argv and runs one subcommand. Exit codes: 0 success (or "yes" for
/// recognition), 1 "no" for recognition, 2 input error, 3 internal error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weight spaces of well-covered and equimatchable graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable JSON output");
    app.add_flag("--certificates", opt.certificates, "include witnesses for every restriction");
    app.add_option("--jobs", opt.jobs, "worker threads for corpus sweeps")->check(CLI::PositiveNumber);

    std::function<int(std::ostream&, const Options&)> command;
    auto file_command = [&](const char* name, const char* help, int (*fn)(std::ostream&, const Options&)) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", opt.file, "graph file")->required();
        sub->callback([&command, fn] { command = fn; });
    };
    file_command("wcw", "weight space WCW(G) of a claw-free graph", cmd_wcw);
    file_command("evs", "weight space EVS(G) of any graph", cmd_evs);
    file_command("recognize-wellcovered", "is the claw-free graph well-covered?", cmd_recognize_wellcovered);
    file_command("recognize-equimatchable", "is the graph equimatchable?", cmd_recognize_equimatchable);
    file_command("oracle-wcw", "WCW(G) by enumerating maximal independent sets", cmd_oracle_wcw);
    file_command("oracle-evs", "EVS(G) by enumerating maximal matchings", cmd_oracle_evs);
    auto* verify = app.add_subcommand("verify", "compare pipelines against the oracles on a corpus");
    verify->add_option("--max-n", opt.max_n, "exhaustive over all labeled graphs on this many vertices")
        ->required()
        ->check(CLI::Range(1, 7));
    verify->add_option("--samples", opt.samples, "extra random graphs on max-n+1 or max-n+2 vertices");
    verify->add_option("--seed", opt.seed, "seed for --samples");
    verify->callback([&] { command = cmd_verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kInputError;
    }
    try {
        return command(out, opt);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace wspace::cli
