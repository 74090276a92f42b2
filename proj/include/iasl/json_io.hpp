#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "iasl/bounds.hpp"
#include "iasl/error.hpp"
#include "iasl/graph.hpp"
#include "iasl/ground.hpp"
#include "iasl/intset.hpp"
#include "iasl/labeling.hpp"
#include "iasl/search.hpp"

namespace iasl {

using json = nlohmann::json;

// All emitters produce deterministic documents (keys in alphabetical order,
// arrays in canonical order), so emitted artifacts round-trip byte-identically
// through dump_document -> load -> dump_document.

inline std::string dump_document(const json& j) { return j.dump(2) + "\n"; }

inline json to_json(const IntSet& s) { return json(s.values()); }

inline IntSet intset_from_json(const json& j) {
    if (!j.is_array()) throw error("expected an array of integers, got " + j.dump());
    std::vector<int> vals;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw error("expected an integer set element, got " + v.dump());
        vals.push_back(v.get<int>());
    }
    return IntSet(std::move(vals));
}

/// Graph-only schema: {"vertices":["u","v"],"edges":[["u","v"]]}.
inline json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

inline Graph graph_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw error("graph document needs 'vertices' and 'edges'");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw error("edge must be a pair, got " + e.dump());
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph::from_parts(vertices, edges);
}

/// Labeling-only schema: {"ground_set":[0,1],"labels":{"v1":[0]}}.
inline json labeling_to_json(const Labeling& l) {
    json j;
    j["ground_set"] = to_json(l.ground().elements());
    json labels = json::object();
    for (const auto& [id, s] : l.labels()) labels[id] = to_json(s);
    j["labels"] = labels;
    return j;
}

inline Labeling labeling_from_json(const json& j) {
    if (!j.contains("ground_set") || !j.contains("labels"))
        throw error("labeling document needs 'ground_set' and 'labels'");
    GroundSet ground = GroundSet::create(intset_from_json(j.at("ground_set")));
    std::map<std::string, IntSet> labels;
    for (const auto& [id, s] : j.at("labels").items()) labels.emplace(id, intset_from_json(s));
    return Labeling(std::move(ground), std::move(labels));
}

/// A graph over a ground set, with or without vertex labels.  This is the
/// shared CLI file schema:
///   {"ground_set":[ints],"vertices":[{"id":str,"label":[ints]}],"edges":[[str,str],...]}
/// For search inputs the vertex entries may be plain strings (or omit the
/// label field); labels must then be absent on all vertices.
struct GraphDocument {
    GroundSet ground;
    Graph graph;
    std::optional<Labeling> labeling;
};

inline json to_json(const GraphDocument& doc) {
    json j;
    j["ground_set"] = to_json(doc.ground.elements());
    json vertices = json::array();
    for (const auto& id : doc.graph.vertices()) {
        json v;
        v["id"] = id;
        if (doc.labeling) v["label"] = to_json(doc.labeling->label_of(id));
        vertices.push_back(v);
    }
    j["vertices"] = vertices;
    json edges = json::array();
    for (const auto& [u, v] : doc.graph.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

inline GraphDocument load_graph_document(const json& j) {
    if (!j.is_object()) throw error("expected a JSON object document");
    if (!j.contains("ground_set")) throw error("document needs a 'ground_set'");
    if (!j.contains("vertices") || !j.contains("edges"))
        throw error("document needs 'vertices' and 'edges'");
    GroundSet ground = GroundSet::create(intset_from_json(j.at("ground_set")));

    std::vector<std::string> vertices;
    std::map<std::string, IntSet> labels;
    for (const auto& v : j.at("vertices")) {
        if (v.is_string()) {
            vertices.push_back(v.get<std::string>());
        } else if (v.is_object()) {
            std::string id = v.at("id").get<std::string>();
            vertices.push_back(id);
            if (v.contains("label")) labels.emplace(id, intset_from_json(v.at("label")));
        } else {
            throw error("vertex entry must be a string or an object, got " + v.dump());
        }
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw error("edge must be a pair, got " + e.dump());
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    GraphDocument doc{ground, Graph::from_parts(vertices, edges), std::nullopt};
    if (!labels.empty()) {
        if (labels.size() != vertices.size())
            throw error("either all vertices carry labels or none does");
        doc.labeling = Labeling(ground, std::move(labels));
    }
    return doc;
}

inline json to_json(const ClassificationReport& rep) {
    json classes = json::array();
    for (LabelClass c : kAllClasses) {
        json entry;
        entry["class"] = std::string(to_string(c));
        entry["pass"] = rep.for_class(c).pass;
        if (!rep.for_class(c).pass) entry["witness"] = rep.for_class(c).witness;
        classes.push_back(entry);
    }
    json j;
    j["classes"] = classes;
    j["strict_tiassl"] = rep.strict_tiassl;
    return j;
}

inline json to_json(const BoundsReport& b) {
    json j;
    j["min_vertices"] = b.min_vertices;
    j["min_pendant"] = b.min_pendant;
    j["min_zero_degree"] = b.min_zero_degree;
    j["max_edges"] = b.max_edges;
    j["tiassi_min_vertices"] = b.tiassi_min_vertices;
    j["tiassi_min_isolated"] = b.tiassi_min_isolated;
    j["tiassi_max_edges"] = b.tiassi_max_edges;
    j["provenance"] = {{"rho", b.rho},
                       {"rho_prime", b.rho_prime},
                       {"rho_second", b.rho_second},
                       {"x_in_sumset_free", b.x_in_sumset_free},
                       {"x_in_doubly_free", b.x_in_doubly_free}};
    return j;
}

inline json to_json(const AuditReport& rep) {
    json j;
    j["vacuous"] = rep.vacuous;
    if (rep.vacuous) {
        j["reason"] = rep.vacuous_reason;
    } else {
        json entries = json::array();
        for (const AuditEntry& e : rep.entries) {
            json entry;
            entry["bound"] = e.name;
            entry["requirement"] = e.requirement;
            entry["actual"] = e.actual;
            entry["pass"] = e.pass;
            if (!e.note.empty()) entry["note"] = e.note;
            entries.push_back(entry);
        }
        j["entries"] = entries;
        j["tiassi_checked"] = rep.tiassi_checked;
    }
    j["pass"] = rep.pass();
    return j;
}

inline json to_json(const SearchOutcome& out, const Graph& g) {
    json j;
    j["status"] = std::string(to_string(out.status));
    if (!out.note.empty()) j["note"] = out.note;
    j["stats"] = {{"nodes", out.stats.nodes},
                  {"assignments", out.stats.assignments},
                  {"wall_ms", out.stats.wall_ms}};
    if (out.witness) j["witness"] = to_json(GraphDocument{out.witness->ground(), g, *out.witness});
    return j;
}

}  // namespace iasl
