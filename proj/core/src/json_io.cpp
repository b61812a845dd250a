#include "rp3link/json_io.hpp"

#include <fstream>

namespace rp3link {

namespace {

std::string label_of(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw parse_error("vertex label must be a string or integer");
}

}  // namespace

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw parse_error("graph JSON needs \"vertices\" and \"edges\"");
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) labels.push_back(label_of(v));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw parse_error("edge must be a label pair");
        edges.emplace_back(label_of(e[0]), label_of(e[1]));
    }
    return Graph(std::move(labels), edges);
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.labels();
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({g.label(a), g.label(b)});
    j["edges"] = edges;
    return j;
}

LoadedSigning signing_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("graph"))
        throw parse_error("signing JSON needs a \"graph\" field");
    LoadedSigning out;
    if (j.at("graph").is_string()) {
        out.construction = build_construction(j.at("graph").get<std::string>());
    } else {
        out.construction.graph = graph_from_json(j.at("graph"));
        out.construction.descriptor = "";
    }
    std::vector<std::pair<std::string, std::string>> neg;
    if (j.contains("negative_edges"))
        for (const auto& e : j.at("negative_edges")) {
            if (!e.is_array() || e.size() != 2)
                throw parse_error("negative edge must be a label pair");
            neg.emplace_back(label_of(e[0]), label_of(e[1]));
        }
    out.signing = EdgeSigning::from_negative_edges(out.construction.graph, neg);
    return out;
}

Json signing_to_json(const EdgeSigning& s) {
    Json j;
    j["graph"] = graph_to_json(s.graph);
    Json neg = Json::array();
    for (int e = 0; e < s.graph.edge_count(); ++e)
        if (s.signs[e]) {
            auto [a, b] = s.graph.edge(e);
            neg.push_back({s.graph.label(a), s.graph.label(b)});
        }
    j["negative_edges"] = neg;
    return j;
}

Json cycle_to_json(const Cycle& c, const Graph& g) {
    Json j = Json::array();
    for (int v : c.vertices()) j.push_back(g.label(v));
    return j;
}

namespace {

Json labels_json(const std::vector<int>& ids, const Graph& g) {
    Json j = Json::array();
    for (int v : ids) j.push_back(g.label(v));
    return j;
}

Json source_to_json(const LinkSource& s, const Graph& g) {
    Json j;
    if (s.kind == LinkSource::Kind::KnownPair) {
        j["kind"] = "known-pair";
        j["cycles"] = Json::array({cycle_to_json(s.c1, g), cycle_to_json(s.c2, g)});
        j["reason"] = to_string(s.reason);
        if (!s.assumption.empty()) j["assumption"] = s.assumption;
    } else {
        j["kind"] = "zero-hom-k4-in-k6";
        j["k6"] = labels_json(s.k6_vertices, g);
        j["k4"] = labels_json(s.k4_vertices, g);
    }
    return j;
}

}  // namespace

Json certificate_to_json(const Certificate& c, const Graph& g) {
    Json j;
    j["kind"] = certificate_kind(c);
    struct V {
        Json& j;
        const Graph& g;
        void operator()(const CertDisjointOnePair& p) {
            j["cycles"] = Json::array({cycle_to_json(p.c1, g), cycle_to_json(p.c2, g)});
        }
        void operator()(const CertDisjointOneTriple& t) {
            j["cycles"] = Json::array(
                {cycle_to_json(t.c1, g), cycle_to_json(t.c2, g), cycle_to_json(t.c3, g)});
        }
        void operator()(const CertZeroHomK4InK6& z) {
            j["k6"] = labels_json(z.k6_vertices, g);
            j["k4"] = labels_json(z.k4_vertices, g);
        }
        void operator()(const CertLLComposition& l) {
            j["link_source"] = source_to_json(l.source, g);
            j["external"] = cycle_to_json(l.external, g);
            j["second_link_reason"] = to_string(l.second_reason);
            if (!l.second_assumption.empty()) j["second_link_assumption"] = l.second_assumption;
            Json rows = Json::array();
            for (const auto& row : l.rows) {
                Json r;
                r["pair"] = Json::array({cycle_to_json(row.a, g), cycle_to_json(row.b, g)});
                r["witness"] = cycle_to_json(row.witness, g);
                r["meets"] = row.ca_member == 0 ? "first" : "second";
                r["how"] = row.how;
                rows.push_back(r);
            }
            j["rows"] = rows;
        }
        void operator()(const CertThreeChain& t) {
            j["chain"] = Json::array({cycle_to_json(t.end1, g), cycle_to_json(t.middle, g),
                                      cycle_to_json(t.end2, g)});
            j["left_reason"] = to_string(t.left_reason);
            j["right_reason"] = to_string(t.right_reason);
            if (!t.left_assumption.empty()) j["left_assumption"] = t.left_assumption;
            if (!t.right_assumption.empty()) j["right_assumption"] = t.right_assumption;
        }
    };
    std::visit(V{j, g}, c);
    return j;
}

Json violation_to_json(const Violation& v, const Graph& g) {
    Json j;
    j["rule"] = v.rule;
    j["note"] = v.note;
    Json cycles = Json::array();
    for (const auto& c : v.cycles) cycles.push_back(cycle_to_json(c, g));
    j["cycles"] = cycles;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw parse_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace rp3link
