// Command-line frontend: sumset algebra, structural families, bounds,
// topology enumeration, labeling analysis, witness construction, labeling
// search and the theorem-suite runner.
//
// Exit codes: 0 valid/sat/pass, 1 invalid/unsat/fail, 2 usage or I/O error,
// 3 inconclusive (search budget exhausted).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iasl/bounds.hpp"
#include "iasl/construct.hpp"
#include "iasl/dot.hpp"
#include "iasl/error.hpp"
#include "iasl/json_io.hpp"
#include "iasl/labeling.hpp"
#include "iasl/search.hpp"
#include "iasl/setalg.hpp"
#include "iasl/topology.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

iasl::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw iasl::error("cannot open '" + path + "'");
    iasl::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw iasl::error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw iasl::error("cannot write '" + path + "'");
    out << content;
}

std::string family_line(const iasl::SetFamily& fam) {
    std::string out;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        if (i) out += ' ';
        out += fam.members()[i].to_string();
    }
    return out.empty() ? "(none)" : out;
}

int run_sumset(const std::string& a_text, const std::string& b_text) {
    iasl::IntSet a = iasl::IntSet::parse(a_text);
    iasl::IntSet b = iasl::IntSet::parse(b_text);
    std::cout << iasl::sumset(a, b).to_comma_list() << "\n";
    return kExitPass;
}

int run_sets(const std::string& x_text, bool as_json) {
    iasl::GroundSet x = iasl::GroundSet::parse(x_text);
    iasl::StructuralSets s = iasl::compute_structural_sets(x);
    if (as_json) {
        iasl::json j;
        j["ground_set"] = iasl::to_json(x.elements());
        j["sumset_free"] = iasl::json::array();
        for (const auto& m : s.sumset_free.members()) j["sumset_free"].push_back(iasl::to_json(m));
        j["summand_free"] = iasl::json::array();
        for (const auto& m : s.summand_free.members()) j["summand_free"].push_back(iasl::to_json(m));
        j["doubly_free"] = iasl::json::array();
        for (const auto& m : s.doubly_free.members()) j["doubly_free"].push_back(iasl::to_json(m));
        j["representable"] = iasl::json::array();
        for (const auto& m : s.representable.members()) j["representable"].push_back(iasl::to_json(m));
        j["rho"] = s.rho();
        j["rho_prime"] = s.rho_prime();
        j["rho_second"] = s.rho_second();
        std::cout << iasl::dump_document(j);
        return kExitPass;
    }
    std::cout << "ground set X = " << x.to_string() << "\n";
    std::cout << "sumset-free   A  (rho   = " << s.rho() << "): " << family_line(s.sumset_free) << "\n";
    std::cout << "summand-free  B  (rho'  = " << s.rho_prime() << "): " << family_line(s.summand_free)
              << "\n";
    std::cout << "doubly-free   D  (rho'' = " << s.rho_second() << "): " << family_line(s.doubly_free)
              << "\n";
    std::cout << "representable A' (count = " << s.representable.size() << "): "
              << family_line(s.representable) << "\n";
    return kExitPass;
}

int run_bounds(const std::string& x_text, bool as_json) {
    iasl::GroundSet x = iasl::GroundSet::parse(x_text);
    iasl::BoundsReport b = iasl::tiassl_bounds(x);
    if (as_json) {
        std::cout << iasl::dump_document(iasl::to_json(b));
    } else {
        std::cout << "bounds for ground set " << x.to_string() << "\n" << b.to_table();
    }
    return kExitPass;
}

int run_topologies(const std::string& x_text, const std::vector<std::string>& required_texts,
                   int limit) {
    iasl::GroundSet x = iasl::GroundSet::parse(x_text);
    iasl::GroundContext ctx(x);
    std::vector<iasl::IntSet> required;
    for (const auto& t : required_texts) required.push_back(iasl::IntSet::parse(t));
    iasl::SetFamily req(ctx, required);
    for (const auto& topo : iasl::enumerate_topologies(ctx, req, limit))
        std::cout << topo.to_line() << "\n";
    return kExitPass;
}

int run_analyze(const std::string& path, bool lenient, bool as_json) {
    iasl::GraphDocument doc = iasl::load_graph_document(read_json_file(path));
    if (!doc.labeling) throw iasl::error("analyze requires vertex labels in '" + path + "'");
    const bool strict = !lenient;
    iasl::ClassificationReport report = iasl::classify(doc.graph, *doc.labeling, strict);
    iasl::BoundsReport bounds = iasl::tiassl_bounds(doc.ground);
    iasl::AuditReport audit = iasl::audit(doc.graph, *doc.labeling, bounds);
    bool pass = report.for_class(iasl::LabelClass::tiassl).pass && audit.pass();
    if (as_json) {
        iasl::json j;
        j["classification"] = iasl::to_json(report);
        j["bounds"] = iasl::to_json(bounds);
        j["audit"] = iasl::to_json(audit);
        j["pass"] = pass;
        std::cout << iasl::dump_document(j);
    } else {
        std::cout << report.to_table() << "\n" << bounds.to_table() << "\n" << audit.to_table();
        std::cout << "\nanalysis: " << (pass ? "pass" : "fail") << " (tiassl "
                  << (report.for_class(iasl::LabelClass::tiassl).pass ? "pass" : "fail")
                  << ", audit " << (audit.pass() ? "pass" : "fail") << ")\n";
    }
    return pass ? kExitPass : kExitFail;
}

int run_construct(const std::string& x_text, const std::string& dot_path) {
    iasl::GroundSet x = iasl::GroundSet::parse(x_text);
    iasl::ConstructedWitness w = iasl::construct_tiass_graph(x);
    std::cout << iasl::dump_document(iasl::to_json(iasl::GraphDocument{x, w.graph, w.labeling}));
    if (!dot_path.empty()) write_file(dot_path, iasl::to_dot(w.graph, &w.labeling));
    return kExitPass;
}

int run_decide(const std::string& path, const std::string& class_name, bool lenient,
               const std::string& dot_path, std::uint64_t max_nodes) {
    iasl::GraphDocument doc = iasl::load_graph_document(read_json_file(path));
    iasl::LabelClass cls = iasl::parse_label_class(class_name);
    iasl::SearchBudget budget;
    if (max_nodes > 0) budget.max_nodes = max_nodes;
    iasl::SearchOutcome out = iasl::decide(doc.graph, doc.ground, cls, !lenient, budget);
    std::cout << iasl::dump_document(iasl::to_json(out, doc.graph));
    if (out.witness && !dot_path.empty())
        write_file(dot_path, iasl::to_dot(doc.graph, &*out.witness));
    switch (out.status) {
        case iasl::SearchStatus::sat: return kExitPass;
        case iasl::SearchStatus::unsat: return kExitFail;
        case iasl::SearchStatus::inconclusive_budget: return kExitInconclusive;
    }
    return kExitUsage;
}

int run_verify_theorems(const std::string& x_text, int max_n) {
    iasl::GroundSet x = iasl::GroundSet::parse(x_text);
    bool inconclusive = false;
    bool pass = true;

    iasl::StarTheoremReport star = iasl::verify_star_theorem(x);
    std::cout << "[1/3] star theorem over " << x.to_string() << ":\n" << star.summary();
    pass = pass && star.pass;
    inconclusive = inconclusive || star.inconclusive;

    iasl::NoConnectedTiassiReport tiassi = iasl::verify_no_connected_tiassi(max_n, x);
    std::cout << "[2/3] no connected tiassi (n <= " << max_n << ") over " << x.to_string() << ":\n"
              << tiassi.summary();
    pass = pass && tiassi.pass;
    inconclusive = inconclusive || tiassi.inconclusive;

    std::vector<std::pair<iasl::Graph, iasl::Labeling>> samples;
    iasl::ConstructedWitness w = iasl::construct_tiass_graph(x);
    samples.emplace_back(w.graph, w.labeling);
    iasl::ImplicationReport impl = iasl::verify_tiasgl_implies_tiassl(x, samples);
    std::cout << "[3/3] tiasgl implies tiassl over " << x.to_string() << ":\n" << impl.summary();
    pass = pass && impl.pass;

    if (inconclusive) return kExitInconclusive;
    return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer additive set-labeling toolkit"};
    app.require_subcommand(1);

    std::string arg_a, arg_b, arg_x, arg_file, arg_class, arg_dot;
    std::vector<std::string> arg_require;
    bool flag_json = false, flag_lenient = false;
    int arg_limit = iasl::kDefaultTopologyLimit;
    int arg_max_n = 5;
    std::uint64_t arg_max_nodes = 0;

    auto* sc_sumset = app.add_subcommand("sumset", "sumset of two sets, e.g. sumset 0,1 0,2");
    sc_sumset->add_option("A", arg_a, "first set (comma-separated)")->required();
    sc_sumset->add_option("B", arg_b, "second set (comma-separated)")->required();

    auto* sc_sets = app.add_subcommand("sets", "structural subset families of a ground set");
    sc_sets->add_option("X", arg_x, "ground set (comma-separated, must contain 0)")->required();
    sc_sets->add_flag("--json", flag_json, "machine-readable output");

    auto* sc_bounds = app.add_subcommand("bounds", "tiassl/tiassi bounds of a ground set");
    sc_bounds->add_option("X", arg_x, "ground set")->required();
    sc_bounds->add_flag("--json", flag_json, "machine-readable output");

    auto* sc_topo = app.add_subcommand("topologies", "enumerate topologies on a ground set");
    sc_topo->add_option("X", arg_x, "ground set")->required();
    sc_topo->add_option("--require", arg_require, "subset every topology must contain (repeatable)");
    sc_topo->add_option("--limit", arg_limit, "max |X| for exhaustive enumeration");

    auto* sc_analyze = app.add_subcommand("analyze", "classify a labeled graph and audit bounds");
    sc_analyze->add_option("file", arg_file, "labeled-graph JSON document")->required();
    sc_analyze->add_flag("--lenient", flag_lenient, "tiassl without edge-label injectivity");
    sc_analyze->add_flag("--json", flag_json, "machine-readable output");

    auto* sc_construct = app.add_subcommand("construct", "build a tiassl witness for a ground set");
    sc_construct->add_option("X", arg_x, "ground set")->required();
    sc_construct->add_option("--dot", arg_dot, "also write a DOT rendering to this path");

    auto* sc_decide = app.add_subcommand("decide", "search for a labeling of a given class");
    sc_decide->add_option("file", arg_file, "graph JSON document (labels ignored)")->required();
    sc_decide->add_option("--class", arg_class, "labeling class (iasl..tiassi)")->required();
    sc_decide->add_flag("--lenient", flag_lenient, "tiassl without edge-label injectivity");
    sc_decide->add_option("--dot", arg_dot, "write the witness as DOT to this path");
    sc_decide->add_option("--max-nodes", arg_max_nodes, "search node budget");

    auto* sc_verify = app.add_subcommand("verify-theorems", "run the theorem verification drivers");
    sc_verify->add_option("X", arg_x, "ground set (|X| must be 2 or 3)")->required();
    sc_verify->add_option("--max-n", arg_max_n, "largest vertex count for the tiassi sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sc_sumset->parsed()) return run_sumset(arg_a, arg_b);
        if (sc_sets->parsed()) return run_sets(arg_x, flag_json);
        if (sc_bounds->parsed()) return run_bounds(arg_x, flag_json);
        if (sc_topo->parsed()) return run_topologies(arg_x, arg_require, arg_limit);
        if (sc_analyze->parsed()) return run_analyze(arg_file, flag_lenient, flag_json);
        if (sc_construct->parsed()) return run_construct(arg_x, arg_dot);
        if (sc_decide->parsed())
            return run_decide(arg_file, arg_class, flag_lenient, arg_dot, arg_max_nodes);
        if (sc_verify->parsed()) return run_verify_theorems(arg_x, arg_max_n);
    } catch (const iasl::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
