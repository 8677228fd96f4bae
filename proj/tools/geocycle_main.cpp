// geocycle: decide C3/C4/C5-geocolorability of straight-line drawings,
// inspect crossing structure, sample realization posets, render SVG.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "geocycle/cycles.hpp"
#include "geocycle/errors.hpp"
#include "geocycle/io.hpp"
#include "geocycle/realizations.hpp"
#include "geocycle/svg.hpp"

using namespace geocycle;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

long long budget_from_env(long long fallback) {
    const char* env = std::getenv("GEOCYCLE_BUDGET");
    if (!env || !*env) return fallback;
    try {
        return std::stoll(env);
    } catch (const std::exception&) {
        throw InputError("GEOCYCLE_BUDGET is not an integer");
    }
}

LoadedGraph load_input(const std::string& path, bool quiet = false) {
    LoadedGraph loaded = load_geometric_graph(path);
    if (!quiet)
        for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
    return loaded;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_check(const std::string& file, const std::string& target, bool oracle,
              long long budget_nodes, bool as_json, const std::string& cert_out) {
    LoadedGraph loaded = load_input(file, as_json);
    const GeometricGraph& g = loaded.drawing;
    SearchBudget budget(budget_nodes);

    Decision decision;
    if (target == "c3") {
        decision = decide_c3(g, &budget);
    } else if (target == "c4") {
        decision = decide_c4_thm1(g, &budget);
        Decision thm2 = decide_c4_thm2(g, &budget);
        decision.evidence.lines.push_back(
            std::string("two-coloring characterization agrees: ") +
            (thm2.yes == decision.yes ? "yes" : "NO (internal inconsistency)"));
        if (decision.yes) decision.evidence.coloring = thm2.evidence.coloring;
    } else if (target == "c5") {
        decision = decide_c5(g, &budget);
    } else if (target == "k5") {
        decision = decide_k5(g, &budget);
        K5NecessaryReport necessary = check_k5_necessary(g, &budget);
        decision.evidence.lines.push_back(
            necessary.verdict == K5Verdict::not_5_geocolorable
                ? "necessary condition: crossing subgraph is not C5-geocolorable"
                : "necessary condition inconclusive (crossing subgraph is C5-geocolorable)");
    } else {
        throw InputError("unknown target '" + target + "'");
    }

    DecisionReport report;
    report.target = target;
    report.answer = decision.yes ? "yes" : "no";
    report.evidence = decision.evidence.lines;
    report.exit_code = decision.yes ? kExitYes : kExitNo;

    if (oracle) {
        auto name = canonical_name_from(target);
        auto witness = find_homomorphism(g, canonical_target(*name).graph,
                                         HomKind::geometric, &budget);
        report.oracle_agreement = witness.has_value() == decision.yes;
        if (!*report.oracle_agreement) report.evidence.push_back("ORACLE DISAGREES");
    }

    std::string cert_json;
    if (decision.yes && decision.certificate) {
        cert_json = serialize_certificate(g, target, *decision.certificate,
                                          decision.evidence.coloring);
        report.certificate_json = cert_json;
    }

    if (as_json) {
        std::cout << serialize_report(report);
    } else {
        std::cout << "target " << target << ": " << report.answer << "\n";
        for (const auto& line : report.evidence) std::cout << "  " << line << "\n";
        if (report.oracle_agreement)
            std::cout << "  oracle agreement: " << (*report.oracle_agreement ? "yes" : "NO")
                      << "\n";
        if (decision.yes && decision.certificate) {
            const auto& t = canonical_target(*canonical_name_from(target));
            std::cout << "  certificate:";
            for (int v = 0; v < g.vertex_count(); ++v)
                std::cout << " " << g.graph().vertex_id(v) << "->"
                          << t.graph.graph().vertex_id((*decision.certificate)[v]);
            std::cout << "\n";
        }
    }
    if (!cert_out.empty()) {
        if (cert_json.empty()) throw InputError("no certificate to write (answer is no)");
        std::ofstream out(cert_out);
        if (!out) throw ParseError("cannot write '" + cert_out + "'");
        out << cert_json;
    }
    return report.exit_code;
}

int run_ex(const std::string& file, bool as_json) {
    LoadedGraph loaded = load_input(file, as_json);
    const GeometricGraph& g = loaded.drawing;
    AbstractGraph ex = edge_crossing_graph(g);
    CrossingSubgraph sub = crossing_subgraph(g);
    CrossingComponents cx = crossing_component_graph(g);

    if (as_json) {
        std::ostringstream out;
        out << "{\n  \"ex\": {";
        for (int v = 0; v < ex.vertex_count(); ++v) {
            out << (v ? ", " : "") << "\"" << ex.vertex_id(v) << "\": [";
            const auto& nb = ex.neighbors(v);
            for (std::size_t i = 0; i < nb.size(); ++i)
                out << (i ? ", " : "") << "\"" << ex.vertex_id(nb[i]) << "\"";
            out << "]";
        }
        out << "},\n  \"crossing_subgraph\": {\"vertices\": " << sub.drawing.vertex_count()
            << ", \"edges\": " << sub.drawing.edge_count() << "},\n  \"components\": [";
        for (std::size_t c = 0; c < cx.components.size(); ++c) {
            out << (c ? ", " : "") << "{\"id\": \"" << cx.graph.vertex_id(static_cast<int>(c))
                << "\", \"edges\": " << cx.components[c].edges.size()
                << ", \"internal_crossing\": "
                << (cx.components[c].internal_crossing ? "true" : "false") << "}";
        }
        out << "],\n  \"component_edges\": [";
        for (int e = 0; e < cx.graph.edge_count(); ++e) {
            const auto& [a, b] = cx.graph.edge(e);
            out << (e ? ", " : "") << "[\"" << cx.graph.vertex_id(a) << "\", \""
                << cx.graph.vertex_id(b) << "\"]";
        }
        out << "]\n}\n";
        std::cout << out.str();
        return kExitYes;
    }

    std::cout << "edge-crossing graph EX (" << ex.vertex_count() << " vertices, "
              << ex.edge_count() << " crossings):\n";
    for (int v = 0; v < ex.vertex_count(); ++v) {
        std::cout << "  " << ex.vertex_id(v) << ":";
        for (int u : ex.neighbors(v)) std::cout << " " << ex.vertex_id(u);
        std::cout << "\n";
    }
    std::cout << "crossing subgraph: " << sub.drawing.vertex_count() << " vertices, "
              << sub.drawing.edge_count() << " edges\n";
    std::cout << "crossing component graph (" << cx.components.size() << " components):\n";
    for (std::size_t c = 0; c < cx.components.size(); ++c) {
        const auto& comp = cx.components[c];
        std::cout << "  " << cx.graph.vertex_id(static_cast<int>(c)) << ": " << comp.edges.size()
                  << " edge(s), internal crossing: " << (comp.internal_crossing ? "yes" : "no")
                  << ", edges:";
        for (int e : comp.edges) std::cout << " " << g.graph().edge_name(e);
        std::cout << "\n";
    }
    for (int e = 0; e < cx.graph.edge_count(); ++e) {
        const auto& [a, b] = cx.graph.edge(e);
        std::cout << "  " << cx.graph.vertex_id(a) << " -- " << cx.graph.vertex_id(b) << "\n";
    }
    return kExitYes;
}

int run_poset(const std::string& name, long long trials, std::uint64_t seed, bool as_json) {
    AbstractGraph base;
    if (name == "c4") base = make_cycle(4);
    else if (name == "c5") base = make_cycle(5);
    else if (name == "k5") base = make_clique(5);
    else throw InputError("poset supports c4, c5 and k5");

    auto classes = sample_realizations(base, trials, seed);
    SearchBudget budget(budget_from_env(SearchBudget::kDefault));
    HomPoset poset = build_poset(classes, &budget);

    if (as_json) {
        std::ostringstream out;
        out << "{\n  \"classes\": [";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            out << (i ? ", " : "") << "{\"crossings\": "
                << classes[i].representative.crossings().size() << ", \"seen\": "
                << classes[i].times_seen << "}";
        }
        out << "],\n  \"hasse\": [";
        for (std::size_t i = 0; i < poset.hasse.size(); ++i)
            out << (i ? ", " : "") << "[" << poset.hasse[i].first << ", "
                << poset.hasse[i].second << "]";
        out << "],\n  \"chain\": " << (poset.is_chain ? "true" : "false") << "\n}\n";
        std::cout << out.str();
        return kExitYes;
    }

    std::cout << "observed classes: " << classes.size() << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::cout << "  class " << i << ": " << classes[i].representative.crossings().size()
                  << " crossing(s), seen " << classes[i].times_seen << " time(s)\n";
    }
    std::cout << "cover relation:";
    for (const auto& [a, b] : poset.hasse) std::cout << " " << a << "<" << b;
    std::cout << "\n" << (poset.is_chain ? "chain" : "not a chain") << "; maximal element(s):";
    for (int m : poset.maximal) std::cout << " " << m;
    std::cout << "\n";
    return kExitYes;
}

int run_render(const std::string& file, const std::string& out_path,
               const std::string& overlay_path) {
    LoadedGraph loaded = load_input(file);
    const GeometricGraph& g = loaded.drawing;
    SvgOptions options;
    if (!overlay_path.empty()) {
        CertificateDocument cert = parse_certificate(read_file(overlay_path), g);
        auto name = canonical_name_from(cert.target);
        if (!name) throw InputError("certificate has unknown target '" + cert.target + "'");
        VertexMap f = certificate_to_vertex_map(cert, g, canonical_target(*name).graph);
        std::vector<std::string> labels;
        for (int v = 0; v < g.vertex_count(); ++v)
            labels.push_back(canonical_target(*name).graph.graph().vertex_id(f[v]));
        options.overlay = labels;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << render_svg(g, options);
    std::cout << "wrote " << out_path << "\n";
    return kExitYes;
}

int run_verify(const std::string& file, const std::string& cert_path,
               const std::string& target_flag) {
    LoadedGraph loaded = load_input(file);
    const GeometricGraph& g = loaded.drawing;
    CertificateDocument cert = parse_certificate(read_file(cert_path), g);
    std::string target = target_flag.empty() ? cert.target : target_flag;
    auto name = canonical_name_from(target);
    if (!name) throw InputError("unknown target '" + target + "'");
    const auto& t = canonical_target(*name);

    VertexMap f = certificate_to_vertex_map(cert, g, t.graph);
    if (cert.coloring) {
        try {
            validate_coloring(g, *cert.coloring);
        } catch (const InvalidColoringError& err) {
            std::cout << "certificate INVALID: " << err.what() << "\n";
            return kExitNo;
        }
    }
    auto check = verify_map(g, t.graph, f, HomKind::geometric);
    if (check) {
        std::cout << "certificate valid: geometric homomorphism into " << to_string(*name)
                  << "\n";
        return kExitYes;
    }
    std::cout << "certificate INVALID: " << check.violation << "\n";
    return kExitNo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric cycle colorability toolkit"};
    app.require_subcommand(1);

    std::string file, target, cert_out, overlay, cert_path, out_path, poset_name;
    std::string verify_target;
    bool oracle = false, as_json = false;
    long long budget_nodes = -1;
    long long trials = 10000;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "decide geocolorability of a drawing");
    check->add_option("file", file)->required();
    check->add_option("--target", target, "c3, c4, c5 or k5")->required();
    check->add_flag("--oracle", oracle, "cross-check with brute-force search");
    check->add_option("--budget", budget_nodes, "search node budget");
    check->add_flag("--json", as_json, "emit a JSON report");
    check->add_option("--cert-out", cert_out, "write the certificate to a file");

    auto* ex = app.add_subcommand("ex", "print the edge-crossing structure");
    ex->add_option("file", file)->required();
    ex->add_flag("--json", as_json);

    auto* poset = app.add_subcommand("poset", "sample the realization poset of c4, c5 or k5");
    poset->add_option("graph", poset_name, "c4, c5 or k5")->required();
    poset->add_option("--trials", trials);
    poset->add_option("--seed", seed);
    poset->add_flag("--json", as_json);

    auto* render = app.add_subcommand("render", "render a drawing to SVG");
    render->add_option("file", file)->required();
    render->add_option("out", out_path)->required();
    render->add_option("--overlay", overlay, "certificate whose labels to draw");

    auto* verify = app.add_subcommand("verify", "re-verify a certificate");
    verify->add_option("file", file)->required();
    verify->add_option("certificate", cert_path)->required();
    verify->add_option("--target", verify_target, "override the certificate's target");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            long long nodes = budget_nodes > 0 ? budget_nodes
                                               : budget_from_env(SearchBudget::kDefault);
            return run_check(file, target, oracle, nodes, as_json, cert_out);
        }
        if (ex->parsed()) return run_ex(file, as_json);
        if (poset->parsed()) return run_poset(poset_name, trials, seed, as_json);
        if (render->parsed()) return run_render(file, out_path, overlay);
        if (verify->parsed()) return run_verify(file, cert_path, verify_target);
    } catch (const BudgetExceededError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitBudget;
    } catch (const InputError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
