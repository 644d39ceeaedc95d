#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "indexcoding/bounds.hpp"
#include "indexcoding/confusion.hpp"
#include "indexcoding/criticality.hpp"
#include "indexcoding/groupcast.hpp"
#include "indexcoding/linear_code.hpp"
#include "indexcoding/suites.hpp"

namespace ic = indexcoding;
using nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitLimits = 3;
constexpr int kExitInvalidCode = 4;
constexpr int kExitSuiteFailure = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ic::Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fnv1a_digest(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     start)
            .count();
    }
};

std::vector<int> parse_spec_list(const std::string& spec) {
    std::vector<int> sizes;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        sizes.push_back(std::stoi(tok));
    return sizes;
}

ordered_json edges_json(const std::vector<ic::Edge>& edges) {
    ordered_json a = ordered_json::array();
    for (const auto& [u, v] : edges) a.push_back({u, v});
    return a;
}

std::string edges_text(const std::vector<ic::Edge>& edges) {
    std::ostringstream os;
    for (size_t i = 0; i < edges.size(); ++i)
        os << (i ? " " : "") << edges[i].first << "->" << edges[i].second;
    return edges.empty() ? "-" : os.str();
}

// --- analyze ----------------------------------------------------------------

int cmd_analyze(const std::string& path, const std::string& spec_list, bool json, bool golden,
                int max_n, long long max_tuples) {
    std::string raw = read_file(path);
    std::istringstream in(raw);
    ic::DiGraph g = ic::parse_graph_text(in);

    ordered_json rep;
    rep["input"] = path;
    rep["digest"] = fnv1a_digest(raw);
    rep["n"] = g.vertex_count();
    rep["edges"] = g.edge_count();
    bool limited = false;
    Timer total;

    auto engine = [&](const std::string& name, auto&& fn) {
        Timer t;
        try {
            fn();
            if (!golden) rep["timings_ms"][name] = t.ms();
        } catch (const ic::SizeLimitExceeded& e) {
            rep["skipped"][name] = e.what();
            limited = true;
        }
    };

    engine("scc", [&] {
        ic::SccPartition p = ic::strongly_connected_components(g);
        rep["scc"]["components"] = ordered_json::array();
        for (const auto& c : p.components) rep["scc"]["components"].push_back(c);
        rep["scc"]["uscs"] = ic::is_uscs(g);
    });
    engine("prune", [&] {
        auto [pruned, removed] = ic::prune_to_uscs(g);
        rep["prune"]["removed"] = edges_json(removed);
        rep["prune"]["kept_edges"] = pruned.edge_count();
    });
    engine("mais", [&] {
        ic::MaisResult m = ic::mais(g, max_n);
        rep["mais"]["size"] = m.size;
        rep["mais"]["witness"] = m.witness;
    });
    engine("beta_interval", [&] {
        ic::BetaInterval bi = ic::beta_interval(g);
        rep["beta_interval"]["lower"] = bi.lower.str();
        rep["beta_interval"]["upper"] = bi.upper.str();
        rep["beta_interval"]["upper_engine"] = bi.upper_engine;
        for (const auto& [name, value] : bi.engines) rep["beta_interval"]["engines"][name] = value.str();
    });
    engine("minrank_gf2", [&] {
        rep["minrank_gf2"] = ic::minrank_gf2(g, std::min(max_n, ic::kDefaultMinrankLimit));
    });
    if (!spec_list.empty()) {
        engine("one_shot", [&] {
            ic::AlphabetSpec spec{parse_spec_list(spec_list)};
            long long size = ic::min_oneshot_size(g, spec, max_tuples);
            rep["one_shot"]["sizes"] = spec.sizes;
            rep["one_shot"]["min_size"] = size;
        });
    }
    if (!golden) rep["total_ms"] = total.ms();

    if (json) {
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "graph " << path << " (digest " << rep["digest"].get<std::string>() << ")\n";
        std::cout << "  vertices: " << g.vertex_count() << ", edges: " << g.edge_count() << "\n";
        if (rep.contains("scc")) {
            std::cout << "  scc components: " << rep["scc"]["components"].size()
                      << ", uscs: " << (rep["scc"]["uscs"].get<bool>() ? "yes" : "no") << "\n";
        }
        if (rep.contains("prune"))
            std::cout << "  prune removes " << rep["prune"]["removed"].size() << " edge(s)\n";
        if (rep.contains("mais"))
            std::cout << "  mais: " << rep["mais"]["size"].get<int>() << "\n";
        if (rep.contains("beta_interval"))
            std::cout << "  beta interval: [" << rep["beta_interval"]["lower"].get<std::string>() << ", "
                      << rep["beta_interval"]["upper"].get<std::string>() << "] via "
                      << rep["beta_interval"]["upper_engine"].get<std::string>() << "\n";
        if (rep.contains("minrank_gf2"))
            std::cout << "  minrank over GF(2): " << rep["minrank_gf2"].get<int>() << "\n";
        if (rep.contains("one_shot"))
            std::cout << "  one-shot size: " << rep["one_shot"]["min_size"].get<long long>() << "\n";
        if (rep.contains("skipped"))
            for (const auto& [k, v] : rep["skipped"].items())
                std::cout << "  skipped " << k << ": " << v.get<std::string>() << "\n";
    }
    return limited ? kExitLimits : 0;
}

// --- prune -------------------------------------------------------------------

int cmd_prune(const std::string& path, const std::string& output, bool json) {
    ic::DiGraph g = ic::load_graph(path);
    auto [pruned, removed] = ic::prune_to_uscs(g);
    ic::UscsNecessityReport note = ic::uscs_necessity_report(g);
    if (json) {
        ordered_json rep;
        rep["kept"] = edges_json(pruned.edges());
        rep["removed"] = edges_json(removed);
        rep["uscs_already"] = removed.empty();
        rep["apex_exception_pattern"] = note.apex_exception_pattern;
        rep["note"] = note.note;
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "kept:    " << edges_text(pruned.edges()) << "\n";
        std::cout << "removed: " << edges_text(removed) << "\n";
        std::cout << "note: " << note.note << "\n";
    }
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw ic::Error("cannot write " + output);
        out << ic::graph_to_text(pruned);
    }
    return 0;
}

int cmd_prune_groupcast(const std::string& path, const std::string& output, bool json) {
    ic::GroupcastInstance h = ic::load_groupcast(path);
    ic::GroupcastPruneResult res = ic::prune_groupcast(h);
    if (json) {
        ordered_json rep;
        rep["removed"] = ordered_json::array();
        for (const auto& [idx, msg] : res.removed) rep["removed"].push_back({idx, msg});
        rep["preserved_settings"] = ic::GroupcastPruneResult::preserved_settings;
        rep["one_shot_nonlinear"] = "unknown";
        rep["pruned"] = ordered_json::parse(ic::groupcast_to_json(res.pruned));
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "removed " << res.removed.size() << " side-information entr"
                  << (res.removed.size() == 1 ? "y" : "ies") << ":";
        for (const auto& [idx, msg] : res.removed)
            std::cout << " (receiver " << idx + 1 << ", message " << msg << ")";
        std::cout << "\npreserved: " << ic::GroupcastPruneResult::preserved_settings
                  << "; one-shot non-linear: unknown\n";
    }
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw ic::Error("cannot write " + output);
        out << ic::groupcast_to_text(res.pruned);
    }
    return 0;
}

// --- verify-code ----------------------------------------------------------------

int cmd_verify_code(const std::string& graph_path, const std::string& code_path, bool json) {
    ic::DiGraph g = ic::load_graph(graph_path);
    std::string raw = read_file(code_path);

    // sniff: table files start with "N", linear code files with the modulus
    std::istringstream probe(raw);
    std::string first;
    probe >> first;
    ordered_json rep;
    bool valid = false;
    if (first == "N") {
        std::istringstream in(raw);
        ic::CodeTable table = ic::parse_code_table_text(in, g);
        ic::TableVerifyResult res = ic::verify_code(table);
        valid = res.valid;
        rep["kind"] = "table";
        rep["symbols"] = table.symbol_count;
        rep["valid"] = res.valid;
        if (!res.valid) {
            rep["violation"]["tuple_a"] = res.violation->a.values;
            rep["violation"]["tuple_b"] = res.violation->b.values;
            rep["violation"]["node"] = res.violation->node;
        }
    } else {
        std::istringstream in(raw);
        ic::LinearIndexCode code = ic::parse_linear_code_text(in);
        ic::ValidityResult res = ic::is_valid_linear_code(g, code);
        valid = res.valid;
        rep["kind"] = "linear";
        rep["length"] = code.length();
        ordered_json rates = ordered_json::array();
        for (const auto& r : code.rate_vector()) rates.push_back(r.str());
        rep["rates"] = rates;
        rep["valid"] = res.valid;
        if (res.valid) {
            ordered_json cert = ordered_json::array();
            for (const auto& entry : res.certificate->entries) {
                ordered_json je;
                je["symbol"] = {entry.node, entry.index};
                je["alpha"] = entry.alpha;
                ordered_json jg = ordered_json::array();
                for (const auto& [node, idx, coeff] : entry.gamma) jg.push_back({node, idx, coeff});
                je["gamma"] = jg;
                cert.push_back(std::move(je));
            }
            rep["certificate"] = std::move(cert);
        } else {
            rep["failing_symbol"] = {res.failing_symbol->first, res.failing_symbol->second};
        }
    }
    if (json) {
        std::cout << rep.dump(2) << "\n";
    } else if (valid) {
        std::cout << "valid " << rep["kind"].get<std::string>() << " code\n";
    } else {
        std::cout << "INVALID " << rep["kind"].get<std::string>() << " code\n";
        if (rep.contains("violation")) {
            std::cout << "  confusable tuples share a symbol; confused node "
                      << rep["violation"]["node"].get<int>() << "\n";
        } else {
            std::cout << "  node " << rep["failing_symbol"][0].get<int>() << " cannot decode symbol "
                      << rep["failing_symbol"][1].get<int>() << "\n";
        }
    }
    return valid ? 0 : kExitInvalidCode;
}

// --- reproduce -------------------------------------------------------------------

int cmd_reproduce(const std::string& suite, bool json) {
    ic::SuiteResult res = ic::run_suite(suite);
    if (json) {
        ordered_json rep;
        rep["suite"] = res.suite;
        rep["passed"] = res.passed;
        rep["checks"] = ordered_json::array();
        for (const auto& c : res.checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["passed"] = c.passed;
            if (!c.detail.empty()) jc["detail"] = c.detail;
            rep["checks"].push_back(std::move(jc));
        }
        std::cout << rep.dump(2) << "\n";
    } else {
        for (const auto& c : res.checks) {
            std::cout << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << "suite " << res.suite << ": " << (res.passed ? "pass" : "FAIL") << "\n";
    }
    return res.passed ? 0 : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"index coding analysis toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false, golden = false;
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_flag("--golden", golden, "byte-stable output: no timings");

    std::string graph_path, code_path, spec_list, output, suite;
    int max_n = ic::kDefaultMaisLimit;
    long long max_tuples = ic::kDefaultBuildLimit;

    auto* analyze = app.add_subcommand("analyze", "run the structural and bound engines on a graph");
    analyze->add_option("graph", graph_path, "graph file")->required();
    analyze->add_option("--spec", spec_list, "comma-separated alphabet sizes for the one-shot engine");
    analyze->add_option("--max-n", max_n, "exhaustive-engine vertex limit");
    analyze->add_option("--max-tuples", max_tuples, "confusion-graph tuple limit");

    auto* prune = app.add_subcommand("prune", "remove edges that lie on no directed cycle");
    prune->add_option("graph", graph_path, "graph file")->required();
    prune->add_option("--output", output, "write the pruned graph here");

    auto* pgc = app.add_subcommand("prune-groupcast", "prune side information of a groupcast instance");
    pgc->add_option("instance", graph_path, "instance file")->required();
    pgc->add_option("--output", output, "write the pruned instance here");

    auto* verify = app.add_subcommand("verify-code", "check a linear code or code table against a graph");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("code", code_path, "code file (linear) or table file")->required();

    auto* repro = app.add_subcommand("reproduce", "run a named verification suite");
    repro->add_option("suite", suite, "one of: thm1 cycle5 fig5 thm5 census additivity conjecture1")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(graph_path, spec_list, json, golden, max_n, max_tuples);
        if (prune->parsed()) return cmd_prune(graph_path, output, json);
        if (pgc->parsed()) return cmd_prune_groupcast(graph_path, output, json);
        if (verify->parsed()) return cmd_verify_code(graph_path, code_path, json);
        if (repro->parsed()) return cmd_reproduce(suite, json);
    } catch (const ic::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ic::UnknownSuite& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const ic::SizeLimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return kExitLimits;
    } catch (const ic::InvalidCode& e) {
        std::cerr << "invalid code: " << e.what() << "\n";
        return kExitInvalidCode;
    } catch (const ic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
