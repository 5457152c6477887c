#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "constructions.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "labeling.hpp"
#include "solvers.hpp"

namespace oitrd {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Edge-list document: a header "n m", then m lines "u v" with 0 <= u < v < n.
// '#' starts a comment that runs to the end of the line.
inline Graph parse_edge_list(std::istream& in) {
    std::string raw;
    int lineno = 0;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::istringstream ss(body);
        if (n < 0) {
            if (!(ss >> n >> m)) {
                std::string tok;
                std::istringstream probe(body);
                if (probe >> tok) throw ParseError(lineno, "malformed header, expected \"n m\"");
                n = -1;
                continue;  // blank or comment-only line before the header
            }
            if (n < 0 || m < 0) throw ParseError(lineno, "header values must be non-negative");
            std::string extra;
            if (ss >> extra) throw ParseError(lineno, "trailing tokens after header");
            continue;
        }
        int u, v;
        if (!(ss >> u)) continue;  // blank line
        if (!(ss >> v)) throw ParseError(lineno, "edge line needs two endpoints");
        std::string extra;
        if (ss >> extra) throw ParseError(lineno, "trailing tokens after edge");
        if (static_cast<long long>(edges.size()) >= m)
            throw ParseError(lineno, "more edges than the header announced");
        if (u < 0 || v >= n || u >= v)
            throw ParseError(lineno, "edge endpoints must satisfy 0 <= u < v < n");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno == 0 ? 1 : lineno, "expected " + std::to_string(m) +
                                                       " edges, found " +
                                                       std::to_string(edges.size()));
    return build_graph(n, edges);
}

inline Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return parse_edge_list(in);
}

inline std::string write_edge_list(const Graph& g,
                                   const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    const auto edges = g.edge_list();
    out << g.n << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
    return out.str();
}

// ---- JSON report pieces -----------------------------------------------------

using nlohmann::json;

inline json graph_json(const Graph& g) {
    json j;
    j["order"] = g.n;
    j["size"] = g.edge_count();
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

inline json graph_json(const LabeledGraph& lg) {
    json j = graph_json(lg.graph);
    if (!lg.family.empty()) {
        j["family"] = {{"kind", lg.family}, {"params", lg.params}};
        j["names"] = lg.names;
    }
    return j;
}

inline json validation_json(const ValidationResult& r) {
    json j;
    j["valid"] = r.valid;
    j["variant"] = variant_name(r.variant);
    if (!r.valid) {
        j["rule"] = rule_name(*r.rule);
        j["witness"] = *r.witness;
    }
    return j;
}

inline json set_check_json(const SetCheck& c) {
    json j;
    j["holds"] = c.holds;
    if (c.witness_vertex) j["witness_vertex"] = *c.witness_vertex;
    if (c.witness_edge) j["witness_edge"] = json::array({c.witness_edge->first, c.witness_edge->second});
    return j;
}

inline json record_json(const ParameterRecord& rec) {
    json j = json::object();
    const auto set_entry = [&](const char* name, const std::optional<VertexSetCertificate>& c) {
        if (c) j[name] = {{"value", c->value}, {"certificate", c->set}};
    };
    const auto roman_entry = [&](const char* name, const std::optional<RomanEntry>& c) {
        if (c) j[name] = {{"value", c->value}, {"labeling", c->labeling.digits()}};
    };
    set_entry("alpha", rec.alpha);
    set_entry("beta", rec.beta);
    set_entry("gamma", rec.gamma);
    set_entry("gamma_t", rec.gamma_t);
    set_entry("gamma_toi", rec.gamma_toi);
    roman_entry("gamma_R", rec.gamma_R);
    roman_entry("gamma_tR", rec.gamma_tR);
    roman_entry("gamma_oiR", rec.gamma_oiR);
    roman_entry("gamma_oitR", rec.gamma_oitR);
    for (const auto& name : rec.timed_out) j[name] = {{"timeout", true}};
    return j;
}

inline json bound_instance_json(const BoundInstance& b) {
    json j;
    j["id"] = b.id;
    j["relation"] = b.relation == '=' ? "eq" : "le";
    j["applicable"] = b.applicable;
    j["holds"] = b.holds;
    if (b.applicable) {
        j["lhs"] = b.lhs;
        j["rhs"] = b.rhs;
        j["slack"] = b.slack;
    }
    if (!b.note.empty()) j["note"] = b.note;
    return j;
}

inline json bound_report_json(const BoundReport& rep) {
    json j;
    j["graph"] = rep.graph_id;
    json inst = json::array();
    for (const auto& b : rep.instances) inst.push_back(bound_instance_json(b));
    j["bounds"] = std::move(inst);
    return j;
}

inline json construction_json(const ConstructionOutcome& c) {
    json j;
    j["graph"] = graph_json(c.graph);
    j["variant"] = variant_name(c.variant);
    j["labeling"] = c.labeling.digits();
    j["weight"] = c.labeling.weight();
    j["claimed_weight"] = c.claimed_weight;
    j["check"] = validation_json(c.checked);
    return j;
}

inline json set_construction_json(const SetConstructionOutcome& c) {
    json j;
    j["mode"] = set_mode_name(c.mode);
    j["set"] = c.set;
    j["size"] = c.set.size();
    j["claimed_size"] = c.claimed_size;
    j["check"] = set_check_json(c.checked);
    return j;
}

inline json probe_json(const ProbeFinding& p) {
    json j;
    j["id"] = p.id;
    j["instance"] = p.instance;
    j["exact"] = p.exact;
    j["formula"] = p.formula;
    j["mismatch"] = p.mismatch;
    if (!p.note.empty()) j["note"] = p.note;
    return j;
}

inline json audit_json(const AuditSummary& s, bool include_reports = false) {
    json j;
    j["graphs"] = s.graphs;
    j["skipped"] = s.skipped;
    j["instances"] = s.instances;
    j["applicable"] = s.applicable;
    j["tight"] = s.tight;
    json viol = json::array();
    for (const auto& v : s.violations) {
        json e = bound_instance_json(v.instance);
        e["graph"] = v.graph_id;
        viol.push_back(std::move(e));
    }
    j["violations"] = std::move(viol);
    json probes = json::array();
    for (const auto& p : s.probes) probes.push_back(probe_json(p));
    j["probes"] = std::move(probes);
    if (include_reports) {
        json reps = json::array();
        for (const auto& r : s.reports) reps.push_back(bound_report_json(r));
        j["reports"] = std::move(reps);
    }
    return j;
}

}  // namespace oitrd
