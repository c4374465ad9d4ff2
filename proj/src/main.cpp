#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fockcr/branching.hpp"
#include "fockcr/checks.hpp"
#include "fockcr/crystal_sle.hpp"
#include "fockcr/crystal_slinf.hpp"
#include "fockcr/fock.hpp"
#include "fockcr/partitions.hpp"
#include "fockcr/render.hpp"

using nlohmann::json;

namespace {

constexpr const char* kFormatVersion = "1";

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    file << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    std::string msg = "unknown format '" + format + "'; expected one of";
    for (const char* a : allowed) msg += std::string(" ") + a;
    throw std::invalid_argument(msg);
}

std::pair<int, int> parse_charge(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 >= text.size())
        throw std::invalid_argument("charge must be given as 's1,s2'");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

int cmd_quotient(const std::string& lambda_text, const std::string& format,
                 const std::string& out) {
    require_format(format, {"text", "structured"});
    fockcr::Partition p = fockcr::parse_partition(lambda_text);
    auto tq = fockcr::two_core_quotient(p);
    if (format == "text") {
        emit(out, "t=" + std::to_string(tq.t) + " quotient=" + fockcr::partition_str(tq.q1) +
                      "|" + fockcr::partition_str(tq.q2) + "\n");
    } else {
        json j;
        j["format-version"] = kFormatVersion;
        j["t"] = tq.t;
        j["q1"] = fockcr::partition_json(tq.q1);
        j["q2"] = fockcr::partition_json(tq.q2);
        emit(out, dump(j));
    }
    return 0;
}

int cmd_core(int e, const std::string& lambda_text, const std::string& format,
             const std::string& out) {
    require_format(format, {"text", "structured"});
    if (e < 2) throw std::invalid_argument("core requires e >= 2");
    fockcr::Partition p = fockcr::parse_partition(lambda_text);
    fockcr::Partition core = fockcr::e_core(p, e);
    if (format == "text") {
        emit(out, "core=" + fockcr::partition_str(core) + "\n");
    } else {
        json j;
        j["format-version"] = kFormatVersion;
        j["e"] = e;
        j["core"] = fockcr::partition_json(core);
        emit(out, dump(j));
    }
    return 0;
}

int cmd_tau(int e, const std::string& lambda_text, const std::string& format,
            const std::string& out) {
    require_format(format, {"text", "structured"});
    fockcr::Partition p = fockcr::parse_partition(lambda_text);
    auto tr = fockcr::tau(p, e);
    if (format == "text") {
        emit(out, "t=" + std::to_string(tr.t) + " tau=" + fockcr::bipartition_str(tr.cb) + "\n");
    } else {
        json j;
        j["format-version"] = kFormatVersion;
        j["e"] = e;
        j["t"] = tr.t;
        j["tau"] = fockcr::bipartition_json(tr.cb);
        emit(out, dump(j));
    }
    return 0;
}

int cmd_abacus(int e, const std::string& lambda_text, const std::string& bipartition_text,
               const std::string& format, const std::string& out) {
    require_format(format, {"text", "structured"});
    if (lambda_text.empty() == bipartition_text.empty())
        throw std::invalid_argument("give exactly one of a partition or --bipartition");
    fockcr::ChargedBipartition cb;
    if (!lambda_text.empty())
        cb = fockcr::tau(fockcr::parse_partition(lambda_text), e).cb;
    else
        cb = fockcr::parse_bipartition(bipartition_text);
    fockcr::Abacus a = fockcr::abacus_of(cb);
    if (format == "text") {
        emit(out, fockcr::abacus_art(a));
    } else {
        json j;
        j["format-version"] = kFormatVersion;
        j["e"] = e;
        j["bipartition"] = fockcr::bipartition_json(cb);
        j["row1"] = a.row1.beads;
        j["row2"] = a.row2.beads;
        j["totally_periodic"] = fockcr::is_totally_periodic(a, e);
        emit(out, dump(j));
    }
    return 0;
}

int cmd_support(int e, const std::string& lambda_text, const std::string& format,
                const std::string& out) {
    require_format(format, {"text", "structured"});
    fockcr::Partition p = fockcr::parse_partition(lambda_text);
    auto cs = fockcr::cuspidal_support(p, e);
    if (format == "text") {
        emit(out, "n=" + std::to_string(cs.n) + " e=" + std::to_string(e) + " lambda=" +
                      fockcr::partition_str(p) + " t=" + std::to_string(cs.t) + " k=" +
                      std::to_string(cs.k) + " r=" + std::to_string(cs.r) + " n_prime=" +
                      std::to_string(cs.n_prime) + " lambda0=" +
                      fockcr::partition_str(cs.lambda0) + " levi=" + fockcr::levi_string(cs) +
                      "\n");
    } else {
        json j;
        j["format-version"] = kFormatVersion;
        j["e"] = e;
        j["n"] = cs.n;
        j["lambda"] = fockcr::partition_json(p);
        j["support"] = fockcr::support_json(cs);
        emit(out, dump(j));
    }
    return 0;
}

int cmd_table(int e, int n, const std::string& filter_text, const std::string& format,
              const std::string& out) {
    require_format(format, {"text", "structured"});
    fockcr::SeriesFilter filter;
    if (filter_text == "all")
        filter = fockcr::SeriesFilter::all;
    else if (filter_text == "weak")
        filter = fockcr::SeriesFilter::weak;
    else if (filter_text == "cuspidal")
        filter = fockcr::SeriesFilter::cuspidal;
    else
        throw std::invalid_argument("unknown filter '" + filter_text +
                                    "'; expected all, weak, or cuspidal");
    if (n < 0) throw std::invalid_argument("table requires n >= 0");
    auto rows = fockcr::series_table(n, e, filter);
    if (format == "text")
        emit(out, fockcr::table_text(rows));
    else
        emit(out, dump(fockcr::table_json(n, e, filter_text, rows)));
    return 0;
}

struct GraphEdge {
    std::string from;
    std::string to;
    std::string kind;  // "res" or "k"
    int value = 0;
};

int cmd_graph(int e, const std::string& charge_text, int max_size, const std::string& crystal,
              bool reduce, const std::string& format, const std::string& out) {
    require_format(format, {"dot", "structured"});
    if (crystal != "sle" && crystal != "slinf" && crystal != "both")
        throw std::invalid_argument("unknown crystal '" + crystal +
                                    "'; expected sle, slinf, or both");
    if (max_size < 0) throw std::invalid_argument("graph requires --max >= 0");
    auto charge = parse_charge(charge_text);

    std::vector<fockcr::ChargedBipartition> all;
    for (int m = 0; m <= max_size; ++m)
        for (const auto& cb : fockcr::bipartitions_of(m, charge.first, charge.second))
            all.push_back(cb);

    bool want_sle = crystal == "sle" || crystal == "both";
    bool want_slinf = crystal == "slinf" || crystal == "both";

    std::vector<fockcr::ChargedBipartition> vertices;
    for (const auto& cb : all) {
        bool periodic = fockcr::is_totally_periodic(fockcr::abacus_of(cb), e);
        if (want_sle || periodic || reduce) vertices.push_back(cb);
    }

    std::vector<GraphEdge> edges;
    for (const auto& cb : vertices) {
        std::string id = fockcr::bipartition_str(cb);
        if (want_sle)
            for (int i = 0; i < e; ++i)
                if (auto img = fockcr::f_tilde(cb, e, i); img && img->size() <= max_size)
                    edges.push_back(GraphEdge{id, fockcr::bipartition_str(*img), "res", i});
        if (want_slinf && fockcr::is_totally_periodic(fockcr::abacus_of(cb), e))
            for (const auto& [k, img] : fockcr::slinf_edges_out(cb, e))
                if (img.size() <= max_size)
                    edges.push_back(GraphEdge{id, fockcr::bipartition_str(img), "k", k});
    }

    if (format == "dot") {
        std::ostringstream os;
        os << "digraph crystal {\n";
        for (const auto& cb : vertices) {
            os << "  \"" << fockcr::bipartition_str(cb) << "\"";
            bool periodic = fockcr::is_totally_periodic(fockcr::abacus_of(cb), e);
            if (!periodic && reduce) {
                auto path = fockcr::sle_depth_path(cb, e);
                os << " [reduced=\"r=" << path.r << " source="
                   << fockcr::bipartition_str(path.source) << "\"]";
            }
            os << ";\n";
        }
        for (const auto& edge : edges)
            os << "  \"" << edge.from << "\" -> \"" << edge.to << "\" [label=\"" << edge.kind
               << "=" << edge.value << "\"];\n";
        os << "}\n";
        emit(out, os.str());
    } else {
        json j;
        j["format-version"] = kFormatVersion;
        j["e"] = e;
        j["charge"] = {charge.first, charge.second};
        j["crystal"] = crystal;
        j["max"] = max_size;
        j["vertices"] = json::array();
        for (const auto& cb : vertices) {
            json jv;
            jv["id"] = fockcr::bipartition_str(cb);
            jv["bipartition"] = fockcr::bipartition_json(cb);
            bool periodic = fockcr::is_totally_periodic(fockcr::abacus_of(cb), e);
            jv["totally_periodic"] = periodic;
            if (!periodic && reduce) {
                auto path = fockcr::sle_depth_path(cb, e);
                jv["reduced"] = {{"r", path.r},
                                 {"word", path.word},
                                 {"source", fockcr::bipartition_json(path.source)}};
            }
            j["vertices"].push_back(jv);
        }
        j["edges"] = json::array();
        for (const auto& edge : edges)
            j["edges"].push_back({{"from", edge.from},
                                  {"to", edge.to},
                                  {"kind", edge.kind},
                                  {"value", edge.value}});
        emit(out, dump(j));
    }
    return 0;
}

int cmd_verify(const std::string& suite) {
    auto results = fockcr::run_suite(suite);
    int failed = 0;
    for (const auto& res : results) {
        std::cout << (res.passed ? "[PASS] " : "[FAIL] ") << res.name << ": " << res.cases
                  << " cases, " << res.detail << "\n";
        if (!res.passed) ++failed;
    }
    std::cout << results.size() - failed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact level-2 Fock crystal combinatorics and cuspidal supports"};
    app.require_subcommand(1);

    std::string lambda_text, bipartition_text, format, out, filter = "all";
    std::string charge_text, crystal = "both", suite;
    int e = 3, n = 0, max_size = 6;
    bool reduce = false;

    auto* quotient = app.add_subcommand("quotient", "Untwisted 2-core and 2-quotient");
    quotient->add_option("lambda", lambda_text, "Partition, comma separated ('-' for empty)")
        ->required();
    quotient->add_option("--format", format, "text or structured");
    quotient->add_option("--out", out, "Write to a file instead of stdout");

    auto* core = app.add_subcommand("core", "e-core of a partition");
    core->add_option("--e", e, "Core size e >= 2")->required();
    core->add_option("lambda", lambda_text, "Partition, comma separated")->required();
    core->add_option("--format", format, "text or structured");
    core->add_option("--out", out, "Write to a file instead of stdout");

    auto* tau_cmd = app.add_subcommand("tau", "Twisted 2-quotient with its charge");
    tau_cmd->add_option("--e", e, "Odd e >= 3")->required();
    tau_cmd->add_option("lambda", lambda_text, "Partition, comma separated")->required();
    tau_cmd->add_option("--format", format, "text or structured");
    tau_cmd->add_option("--out", out, "Write to a file instead of stdout");

    auto* abacus = app.add_subcommand("abacus", "Two-runner abacus display");
    abacus->add_option("--e", e, "Odd e >= 3")->required();
    abacus->add_option("lambda", lambda_text, "Partition (drawn after the twisted 2-quotient)");
    abacus->add_option("--bipartition", bipartition_text,
                       "Charged bipartition 'l1|l2@s1,s2' to draw directly");
    abacus->add_option("--format", format, "text or structured");
    abacus->add_option("--out", out, "Write to a file instead of stdout");

    auto* support = app.add_subcommand("support", "Cuspidal support of a unipotent label");
    support->add_option("--e", e, "Odd e >= 3")->required();
    support->add_option("lambda", lambda_text, "Partition, comma separated")->required();
    support->add_option("--format", format, "text or structured");
    support->add_option("--out", out, "Write to a file instead of stdout");

    auto* table = app.add_subcommand("table", "Supports of all labels of one rank");
    table->add_option("--e", e, "Odd e >= 3")->required();
    table->add_option("--n", n, "Rank n >= 0")->required();
    table->add_option("--filter", filter, "all, weak, or cuspidal");
    table->add_option("--format", format, "text or structured");
    table->add_option("--out", out, "Write to a file instead of stdout");

    auto* graph = app.add_subcommand("graph", "Crystal graph at one charge");
    graph->add_option("--e", e, "Odd e >= 3")->required();
    graph->add_option("--charge", charge_text, "Charge pair 's1,s2'")->required();
    graph->add_option("--max", max_size, "Largest bipartition size included");
    graph->add_option("--crystal", crystal, "sle, slinf, or both");
    graph->add_flag("--reduce", reduce, "Keep non-periodic vertices, annotated with their "
                                        "reduced positions");
    graph->add_option("--format", format, "dot or structured");
    graph->add_option("--out", out, "Write to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string names;
    for (const auto& name : fockcr::suite_names()) names += (names.empty() ? "" : ", ") + name;
    verify->add_option("--suite", suite, "One of: " + names)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    if (format.empty()) format = graph->parsed() ? "dot" : "text";

    if (quotient->parsed()) return cmd_quotient(lambda_text, format, out);
    if (core->parsed()) return cmd_core(e, lambda_text, format, out);
    if (tau_cmd->parsed()) return cmd_tau(e, lambda_text, format, out);
    if (abacus->parsed()) return cmd_abacus(e, lambda_text, bipartition_text, format, out);
    if (support->parsed()) return cmd_support(e, lambda_text, format, out);
    if (table->parsed()) return cmd_table(e, n, filter, format, out);
    if (graph->parsed()) return cmd_graph(e, charge_text, max_size, crystal, reduce, format, out);
    if (verify->parsed()) return cmd_verify(suite);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
