#pragma once

// The `fixsub` command line: graph generation, orbit reports, and the named
// verification suites.  run_cli is a plain function over streams so the test
// suite can drive the tool in-process; tools/fixsub.cpp wraps it in main().
//
// Exit codes: 0 success / all claims pass, 1 some claim failed,
// 2 bad usage or an infeasible request.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixsub/graph.hpp"
#include "fixsub/graph6.hpp"
#include "fixsub/petersen.hpp"
#include "fixsub/report_json.hpp"
#include "fixsub/verify.hpp"

namespace fixsub {
namespace detail {

inline Graph build_family(const std::string& family, const std::vector<int>& p) {
    const auto need = [&](std::size_t count, const char* usage) {
        if (p.size() != count)
            throw UsageError(std::string("wrong number of parameters; usage: ") + usage);
    };
    if (family == "cycle") {
        need(1, "cycle <n>");
        return make_cycle(p[0]);
    }
    if (family == "complete") {
        need(1, "complete <n>");
        return make_complete(p[0]);
    }
    if (family == "bipartite") {
        need(2, "bipartite <a> <b>");
        return make_complete_bipartite(p[0], p[1]);
    }
    if (family == "circulant") {
        if (p.size() < 2) throw UsageError("usage: circulant <n> <d1> [d2 ...]");
        return make_circulant(p[0], std::set<int>(p.begin() + 1, p.end()));
    }
    if (family == "gp") {
        need(2, "gp <n> <k>");
        return make_generalized_petersen(p[0], p[1]);
    }
    if (family == "lcf") {
        if (p.size() < 2) throw UsageError("usage: lcf <n> <c1> [c2 ...]");
        return make_lcf(p[0], std::vector<int>(p.begin() + 1, p.end()));
    }
    need(0, family.c_str());
    if (family == "heawood") return heawood();
    if (family == "cage8") return tutte_8cage();
    if (family == "line-k33") return line_graph(make_complete_bipartite(3, 3));
    throw UsageError("unknown family '" + family +
                     "' (expected cycle|complete|bipartite|circulant|gp|lcf|heawood|cage8|line-k33)");
}

inline std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon != std::string::npos) {
            const int a = std::stoi(text.substr(0, colon));
            const int b = std::stoi(text.substr(colon + 1));
            return {a, b};
        }
        const int a = std::stoi(text);
        return {a, a};
    } catch (const std::exception&) {
        throw UsageError("--range expects a:b with integers, got '" + text + "'");
    }
}

inline Graph read_graph_input(const std::string& path, const std::string& format,
                              std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw UsageError("cannot open input file '" + path + "'");
        buffer << file.rdbuf();
    }
    const std::string text = buffer.str();
    if (format == "edgelist") return read_edge_list(text);
    // graph6: the first nonempty line is the graph
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) return decode_graph6(line);
    throw std::invalid_argument("graph6 input is empty");
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
    CLI::App app{"fixing-subgraph calculus: exact counts, orbits, and claim verification"};
    app.require_subcommand(1);

    // graphgen
    std::string gg_family;
    std::vector<int> gg_params;
    std::string gg_format = "graph6";
    CLI::App* graphgen = app.add_subcommand("graphgen", "emit a named graph");
    graphgen->add_option("family", gg_family, "cycle|complete|bipartite|circulant|gp|lcf|heawood|cage8|line-k33")
        ->required();
    graphgen->add_option("params", gg_params, "integer parameters of the family");
    graphgen->add_option("--format", gg_format, "graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    // report
    std::string rp_family;
    std::vector<int> rp_params;
    std::string rp_input, rp_format = "graph6";
    CLI::App* report = app.add_subcommand(
        "report", "hamiltonian-cycle orbit report of a graph, as JSON");
    report->add_option("family", rp_family, "family name as in graphgen");
    report->add_option("params", rp_params, "integer parameters of the family");
    report->add_option("--input", rp_input, "read the graph from a file instead ('-' = stdin)");
    report->add_option("--format", rp_format, "graph6|edgelist (for --input)")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    // verify
    std::string vf_suite, vf_range, vf_format = "json";
    int vf_jobs = 1;
    std::optional<int> vf_k;
    bool vf_slow = false;
    CLI::App* verify = app.add_subcommand("verify", "run a named claims suite");
    verify->add_option("suite", vf_suite, "thm1|thm6|thm7|thm8|heawood|cage8|exceptional")
        ->required();
    verify->add_option("--range", vf_range, "inclusive n-window a:b");
    verify->add_option("--k", vf_k, "restrict to one inner step (thm7/thm8)");
    verify->add_flag("--slow", vf_slow, "allow the minutes-scale exhaustive rows");
    verify->add_option("--jobs", vf_jobs, "worker threads (affects speed only)")
        ->envname("FIXSUB_JOBS")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", vf_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    std::vector<const char*> argv;
    argv.push_back("fixsub");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*graphgen) {
            const Graph g = detail::build_family(gg_family, gg_params);
            if (gg_format == "edgelist")
                write_edge_list(g, out);
            else
                out << encode_graph6(g) << "\n";
            return 0;
        }
        if (*report) {
            if (rp_input.empty() == rp_family.empty())
                throw UsageError("report: give a family or --input, not both");
            HamOrbitReport rep;
            if (!rp_input.empty()) {
                rep = ham_orbit_report(detail::read_graph_input(rp_input, rp_format, in));
            } else if (rp_family == "gp") {
                if (rp_params.size() != 2) throw UsageError("usage: report gp <n> <k>");
                rep = rim_annotated_report(rp_params[0], rp_params[1]);
            } else {
                rep = ham_orbit_report(detail::build_family(rp_family, rp_params));
            }
            out << nlohmann::json(rep).dump(2) << "\n";
            return 0;
        }
        // verify
        VerifyOptions options;
        options.jobs = vf_jobs;
        options.slow = vf_slow;
        options.k = vf_k;
        if (!vf_range.empty()) options.range = detail::parse_range(vf_range);
        const std::vector<VerificationResult> rows = verify_suite(vf_suite, options);
        if (vf_format == "text")
            out << render_text(rows);
        else
            out << nlohmann::json(rows).dump(2) << "\n";
        return all_passed(rows) ? 0 : 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fixsub
