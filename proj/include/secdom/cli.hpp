#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "canonical.hpp"
#include "domination.hpp"
#include "enumerate.hpp"
#include "extremal.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "outerplanar.hpp"
#include "solver.hpp"
#include "sweeps.hpp"

namespace secdom::cli {

using nlohmann::ordered_json;

// exit codes: 0 clean, 1 mathematical violation (a would-be
// counterexample), 2 operational error
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

namespace detail {

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    try {
        return read_graph_stream(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline VertexSet parse_set(const std::string& text, int n) {
    VertexSet s;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::runtime_error("--set: '" + tok + "' is not a vertex index");
        }
        if (pos != tok.size()) throw std::runtime_error("--set: '" + tok + "' is not a vertex index");
        if (v < 0 || v >= n)
            throw std::runtime_error("--set: vertex " + std::to_string(v) + " outside 0.." +
                                     std::to_string(n - 1));
        s.add(v);
    }
    return s;
}

inline ordered_json to_json(VertexSet s) {
    ordered_json a = ordered_json::array();
    for (int v : s) a.push_back(v);
    return a;
}

inline ordered_json to_json(const SecureCertificate& cert) {
    ordered_json j;
    j["set"] = to_json(cert.set);
    ordered_json defenders = ordered_json::array();
    for (std::size_t u = 0; u < cert.defender.size(); ++u)
        if (cert.defender[u] >= 0) defenders.push_back({u, cert.defender[u]});
    j["defenders"] = defenders;
    return j;
}

inline ordered_json to_json(const ForbiddenWitness& w) {
    ordered_json j;
    j["kind"] = w.kind == ForbiddenWitness::Kind::K4 ? "K4-subdivision" : "K23-subdivision";
    j["branch_vertices"] = to_json(w.branch_vertices);
    j["paths"] = w.paths;
    return j;
}

inline ordered_json to_json(const ExtremalWitness& w) {
    ordered_json j;
    j["k"] = w.k;
    j["hub"] = w.hub;
    j["spokes"] = w.spokes;
    j["rim"] = w.rim;
    ordered_json tris = ordered_json::array();
    for (auto [a, b] : w.triangles) tris.push_back({a, b});
    j["triangles"] = tris;
    return j;
}

inline ordered_json to_json(const PartitionProfile& p) {
    ordered_json j;
    j["s2"] = to_json(p.s2);
    j["s1"] = to_json(p.s1);
    j["s0"] = to_json(p.s0);
    j["c_set"] = to_json(p.c_set);
    j["x2"] = p.x2;
    j["x1"] = p.x1;
    j["x0"] = p.x0;
    j["c"] = p.c;
    j["x"] = p.x;
    j["y"] = p.y;
    j["tight_identity"] = p.tight_identity;
    j["s1_max_defended"] = p.s1_max_defended;
    j["s1_max_defended_in_c"] = p.s1_max_defended_in_c;
    return j;
}

/// Wall-clock times stay out of the JSON so identical inputs give
/// byte-identical payloads; the human table shows them instead.
inline ordered_json to_json(const SweepReport& r) {
    ordered_json j;
    j["kind"] = r.kind;
    j["n_min"] = r.n_min;
    j["n_max"] = r.n_max;
    ordered_json levels = ordered_json::array();
    for (const SweepLevel& l : r.levels) {
        ordered_json lj;
        lj["n"] = l.n;
        lj["generated"] = l.generated;
        lj["kept"] = l.kept;
        lj["checks"] = l.checks;
        levels.push_back(lj);
    }
    j["levels"] = levels;
    ordered_json viols = ordered_json::array();
    for (const Violation& v : r.violations) {
        ordered_json vj;
        vj["graph6"] = v.graph6;
        vj["observed"] = v.observed;
        vj["bound"] = v.bound;
        vj["detail"] = v.detail;
        viols.push_back(vj);
    }
    j["violations"] = viols;
    j["extremal_hits"] = r.extremal_hits;
    if (r.kind == "lower-bound") {
        ordered_json k3;
        k3["gamma_s"] = r.k3_gamma_s;
        k3["bound"] = r.k3_bound;
        k3["exception"] = r.k3_exception_seen;
        j["k3"] = k3;
    }
    j["ok"] = r.ok();
    return j;
}

inline void emit(std::ostream& out, bool json_mode, const std::string& status,
                 const ordered_json& payload, const std::string& human) {
    if (json_mode) {
        ordered_json envelope;
        envelope["status"] = status;
        envelope["payload"] = payload;
        out << envelope.dump(2) << '\n';
    } else {
        out << human;
    }
}

inline void print_report(std::ostream& out, bool json_mode, const SweepReport& r, int& exit_code) {
    std::string status = r.ok() ? "ok" : "violation";
    if (!r.ok()) exit_code = kExitViolation;
    std::ostringstream human;
    human << r.kind << " sweep, n = " << r.n_min << ".." << r.n_max << "\n";
    human << "  n  generated  kept  checks  wall_ms\n";
    for (const SweepLevel& l : r.levels)
        human << "  " << l.n << "  " << l.generated << "  " << l.kept << "  " << l.checks << "  "
              << l.wall_ms << "\n";
    if (r.kind == "lower-bound")
        human << "K3: gamma_s = " << r.k3_gamma_s << " vs bound " << r.k3_bound
              << (r.k3_exception_seen ? " (documented n < 4 exception)" : "") << "\n";
    human << "extremal hits: " << r.extremal_hits << "\n";
    if (r.violations.empty()) {
        human << "violations: none\nresult: OK\n";
    } else {
        human << "violations:\n";
        for (const Violation& v : r.violations)
            human << "  " << v.graph6 << "  observed=" << v.observed << " bound=" << v.bound
                  << "  " << v.detail << "\n";
        human << "result: VIOLATION\n";
    }
    emit(out, json_mode, status, to_json(r), human.str());
}

}  // namespace detail

/// Entry point behind main(): parses one subcommand, runs it, writes the
/// result to `out`, operational complaints to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact secure-domination toolkit for outerplanar graphs"};
    app.require_subcommand(1);

    std::string file, set_text, emit_path, output_path;
    std::string variant = "gamma-s";
    std::string check_variant = "secure";
    std::string format = "edgelist";
    bool json_mode = false, want_witness = false, allow_n10 = false;
    int gen_k = 0, jobs = 0;
    int bound_max_n = 9, lemma_max_n = 9, thm2_max_n = 6;

    CLI::App* solve = app.add_subcommand("solve", "compute gamma or gamma_s with certificate");
    solve->add_option("file", file, "edge-list or graph6 input")->required();
    solve->add_option("--variant", variant, "gamma | gamma-s")
        ->check(CLI::IsMember({"gamma", "gamma-s"}));
    solve->add_flag("--json", json_mode, "machine-readable output");

    CLI::App* check = app.add_subcommand("check", "verify a vertex set");
    check->add_option("file", file, "edge-list or graph6 input")->required();
    check->add_option("--set", set_text, "comma-separated vertex indices")->required();
    check->add_option("--variant", check_variant, "dominating | secure")
        ->check(CLI::IsMember({"dominating", "secure"}));
    check->add_flag("--json", json_mode, "machine-readable output");

    CLI::App* outer = app.add_subcommand("outerplanar", "decide outerplanarity");
    outer->add_option("file", file, "edge-list or graph6 input")->required();
    outer->add_flag("--witness", want_witness, "also search for a forbidden subdivision");
    outer->add_flag("--json", json_mode, "machine-readable output");

    CLI::App* gen = app.add_subcommand("gen-extremal", "emit the tight construction");
    gen->add_option("k", gen_k, "number of spokes (>= 2)")->required();
    gen->add_option("--format", format, "edgelist | graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    gen->add_option("-o,--output", output_path, "write the graph here instead of stdout");
    gen->add_flag("--json", json_mode, "machine-readable output");

    CLI::App* charac = app.add_subcommand("characterize", "extremal diagnosis for n = 5k+1");
    charac->add_option("file", file, "edge-list or graph6 input")->required();
    charac->add_flag("--json", json_mode, "machine-readable output");

    CLI::App* vbound = app.add_subcommand("verify-bound", "sweep the secure-domination lower bound");
    vbound->add_option("--max-n", bound_max_n, "largest vertex count (default 9)");
    vbound->add_option("--jobs", jobs, "worker threads (0 = auto)");
    vbound->add_option("--emit-graph6", emit_path, "dump the enumerated stream");
    vbound->add_flag("--allow-n10", allow_n10, "permit the slow n = 10 tier");
    vbound->add_flag("--json", json_mode, "machine-readable output");

    CLI::App* vlemma = app.add_subcommand("verify-lemma1", "sweep the bipartite counting bound");
    vlemma->add_option("--max-n", lemma_max_n, "largest vertex count (default 9)");
    vlemma->add_option("--jobs", jobs, "worker threads (0 = auto)");
    vlemma->add_flag("--json", json_mode, "machine-readable output");

    CLI::App* vthm2 = app.add_subcommand("verify-thm2", "defense checker agreement sweep");
    vthm2->add_option("--max-n", thm2_max_n, "largest vertex count (default 6)");
    vthm2->add_option("--jobs", jobs, "worker threads (0 = auto)");
    vthm2->add_flag("--json", json_mode, "machine-readable output");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitError;
    }

    int exit_code = kExitOk;
    try {
        if (app.got_subcommand(solve)) {
            Graph g = detail::load_graph(file);
            SolveResult r = variant == "gamma" ? gamma(g) : gamma_s(g);
            ordered_json payload;
            payload["command"] = "solve";
            payload["variant"] = variant;
            payload["n"] = g.vertex_count();
            payload["m"] = g.edge_count();
            payload["value"] = r.value;
            payload["set"] = detail::to_json(r.set);
            payload["certificate"] = r.certificate ? detail::to_json(*r.certificate)
                                                   : ordered_json(nullptr);
            payload["nodes_explored"] = r.nodes_explored;
            std::ostringstream human;
            human << (variant == "gamma" ? "gamma" : "gamma_s") << " = " << r.value << "\nset:";
            for (int v : r.set) human << ' ' << v;
            human << "\n";
            if (r.certificate) {
                human << "defenders:";
                for (std::size_t u = 0; u < r.certificate->defender.size(); ++u)
                    if (r.certificate->defender[u] >= 0)
                        human << ' ' << u << "<-" << r.certificate->defender[u];
                human << "\n";
            }
            human << "nodes explored: " << r.nodes_explored << "\n";
            detail::emit(out, json_mode, "ok", payload, human.str());
        } else if (app.got_subcommand(check)) {
            Graph g = detail::load_graph(file);
            VertexSet s = detail::parse_set(set_text, g.vertex_count());
            ordered_json payload;
            payload["command"] = "check";
            payload["variant"] = check_variant;
            payload["set"] = detail::to_json(s);
            std::ostringstream human;
            if (check_variant == "dominating") {
                bool verdict = is_dominating(g, s);
                payload["verdict"] = verdict;
                if (!verdict) {
                    for (int u : g.vertices() - s)
                        if (!(g.closed_neighborhood(u)).intersects(s)) {
                            payload["failing_vertex"] = u;
                            payload["reason"] = "undominated";
                            break;
                        }
                }
                human << "dominating: " << (verdict ? "yes" : "no") << "\n";
                if (payload.contains("failing_vertex"))
                    human << "failing vertex: " << payload["failing_vertex"] << " (undominated)\n";
            } else {
                auto cert = is_secure_dominating(g, s);
                payload["verdict"] = cert.has_value();
                if (cert) {
                    payload["certificate"] = detail::to_json(*cert);
                    human << "secure dominating: yes\ndefenders:";
                    for (std::size_t u = 0; u < cert->defender.size(); ++u)
                        if (cert->defender[u] >= 0) human << ' ' << u << "<-" << cert->defender[u];
                    human << "\n";
                } else {
                    // name the first outside vertex that sinks the claim
                    int failing = -1;
                    std::string reason;
                    if (!is_dominating(g, s)) {
                        for (int u : g.vertices() - s)
                            if (!g.closed_neighborhood(u).intersects(s)) {
                                failing = u;
                                reason = "undominated";
                                break;
                            }
                    } else {
                        VertexSet epns[Graph::kMaxVertices];
                        secdom::detail::epn_table(g, s, epns);
                        for (int u : g.vertices() - s)
                            if (secdom::detail::find_defender(g, s, u, epns) < 0) {
                                failing = u;
                                reason = "undefended";
                                break;
                            }
                    }
                    payload["failing_vertex"] = failing;
                    payload["reason"] = reason;
                    human << "secure dominating: no\nfailing vertex: " << failing << " (" << reason
                          << ")\n";
                }
            }
            detail::emit(out, json_mode, "ok", payload, human.str());
        } else if (app.got_subcommand(outer)) {
            Graph g = detail::load_graph(file);
            bool op = is_outerplanar(g);
            ordered_json payload;
            payload["command"] = "outerplanar";
            payload["n"] = g.vertex_count();
            payload["m"] = g.edge_count();
            payload["outerplanar"] = op;
            std::ostringstream human;
            human << "outerplanar: " << (op ? "yes" : "no") << "\n";
            if (want_witness) {
                auto w = find_forbidden_subdivision(g);
                payload["witness"] = w ? detail::to_json(*w) : ordered_json(nullptr);
                if (w) {
                    human << "forbidden "
                          << (w->kind == ForbiddenWitness::Kind::K4 ? "K4" : "K2,3")
                          << " subdivision, branch vertices:";
                    for (int v : w->branch_vertices) human << ' ' << v;
                    human << "\n";
                    for (const auto& p : w->paths) {
                        human << "  path:";
                        for (int v : p) human << ' ' << v;
                        human << "\n";
                    }
                } else {
                    human << "no forbidden subdivision\n";
                }
            }
            detail::emit(out, json_mode, "ok", payload, human.str());
        } else if (app.got_subcommand(gen)) {
            auto [g, w] = build_extremal(gen_k);
            std::ostringstream graph_text;
            if (format == "graph6") graph_text << to_graph6(g) << '\n';
            else write_edge_list(graph_text, g);
            if (!output_path.empty()) {
                std::ofstream f(output_path);
                if (!f) throw std::runtime_error("cannot write output file: " + output_path);
                f << graph_text.str();
            }
            ordered_json payload;
            payload["command"] = "gen-extremal";
            payload["k"] = gen_k;
            payload["n"] = g.vertex_count();
            payload["m"] = g.edge_count();
            payload["format"] = format;
            payload["graph"] = graph_text.str();
            payload["witness"] = detail::to_json(w);
            std::ostringstream human;
            if (output_path.empty()) human << graph_text.str();
            human << detail::to_json(w).dump() << "\n";
            detail::emit(out, json_mode, "ok", payload, human.str());
        } else if (app.got_subcommand(charac)) {
            Graph g = detail::load_graph(file);
            int n = g.vertex_count();
            if (n < 11 || n % 5 != 1)
                throw std::runtime_error("characterize: n = " + std::to_string(n) +
                                         " is not of the form 5k+1 with k >= 2");
            int k = n / 5;
            bool op = is_outerplanar(g);
            // unseeded solve: this command reports on the bound, so it must
            // not assume it
            SolveResult r = gamma_s(g, SolveOptions{.use_outerplanar_lower_bound = false});
            int bound = (n + 8) / 5;
            auto witness = detect_extremal_structural(g);
            std::optional<PartitionProfile> profile;
            std::string profile_note;
            try {
                profile = partition_profile(g, r.set);
            } catch (const std::exception& e) {
                profile_note = e.what();
            }
            bool consistent = !op || ((r.value == bound) == witness.has_value());
            if (!consistent) exit_code = kExitViolation;
            ordered_json payload;
            payload["command"] = "characterize";
            payload["n"] = n;
            payload["k"] = k;
            payload["outerplanar"] = op;
            payload["gamma_s"] = r.value;
            payload["bound"] = bound;
            payload["set"] = detail::to_json(r.set);
            payload["extremal_witness"] = witness ? detail::to_json(*witness) : ordered_json(nullptr);
            payload["profile"] = profile ? detail::to_json(*profile) : ordered_json(nullptr);
            if (!profile) payload["profile_note"] = profile_note;
            payload["consistent"] = consistent;
            std::ostringstream human;
            human << "n = " << n << " (k = " << k << "), outerplanar: " << (op ? "yes" : "no")
                  << "\n";
            human << "gamma_s = " << r.value << ", bound = " << bound << "\n";
            human << "extremal witness: " << (witness ? detail::to_json(*witness).dump() : "none")
                  << "\n";
            if (profile)
                human << "profile: " << detail::to_json(*profile).dump() << "\n";
            else
                human << "profile: unavailable (" << profile_note << ")\n";
            if (!consistent) human << "INCONSISTENT: bound equality and witness disagree\n";
            detail::emit(out, json_mode, consistent ? "ok" : "violation", payload, human.str());
        } else if (app.got_subcommand(vbound)) {
            SweepOptions sopts;
            sopts.jobs = jobs;
            sopts.emit_graph6_path = emit_path;
            sopts.allow_n10 = allow_n10;
            SweepReport r = verify_lower_bound(bound_max_n, sopts);
            detail::print_report(out, json_mode, r, exit_code);
        } else if (app.got_subcommand(vlemma)) {
            SweepOptions sopts;
            sopts.jobs = jobs;
            SweepReport r = verify_lemma1(lemma_max_n, sopts);
            detail::print_report(out, json_mode, r, exit_code);
        } else if (app.got_subcommand(vthm2)) {
            SweepOptions sopts;
            sopts.jobs = jobs;
            SweepReport r = verify_thm2_equivalence(thm2_max_n, sopts);
            detail::print_report(out, json_mode, r, exit_code);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        if (json_mode) {
            ordered_json envelope;
            envelope["status"] = "error";
            envelope["payload"] = ordered_json{{"message", e.what()}};
            out << envelope.dump(2) << '\n';
        }
        return kExitError;
    }
    return exit_code;
}

}  // namespace secdom::cli
