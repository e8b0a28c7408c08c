#include "gencon/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace gencon {

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

VertexId as_vertex(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw Error(where + ": expected an integer vertex id");
    return j.get<VertexId>();
}

}  // namespace

Graph graph_from_json(const json& j) {
    if (!j.is_object()) throw Error("graph: expected a JSON object");
    if (!j.contains("order") || !j["order"].is_number_integer()) throw Error("graph: missing integer \"order\"");
    int order = j["order"].get<int>();
    if (order < 0) throw Error("graph: negative order");

    std::vector<Edge> edges;
    if (j.contains("edges")) {
        const json& je = j["edges"];
        if (!je.is_array()) throw Error("graph: \"edges\" must be an array");
        for (std::size_t i = 0; i < je.size(); ++i) {
            std::string where = "edge " + std::to_string(i);
            if (!je[i].is_array() || je[i].size() != 2) throw Error(where + ": expected [u,v]");
            VertexId a = as_vertex(je[i][0], where), b = as_vertex(je[i][1], where);
            if (a < 0 || a >= order || b < 0 || b >= order) throw Error(where + ": endpoint out of range");
            if (a == b) throw Error(where + ": self-loop at " + std::to_string(a));
            edges.emplace_back(a, b);
        }
    }
    std::optional<std::vector<std::string>> labels;
    if (j.contains("labels") && !j["labels"].is_null()) {
        if (!j["labels"].is_array()) throw Error("graph: \"labels\" must be an array");
        labels.emplace();
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw Error("graph: labels must be strings");
            labels->push_back(l.get<std::string>());
        }
    }
    return Graph(order, std::move(edges), std::move(labels));
}

Graph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

json graph_to_json(const Graph& g) {
    json j;
    j["order"] = g.order();
    if (g.labels()) j["labels"] = *g.labels();
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j;
}

std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(); }

std::string export_dot(const Graph& g, const std::optional<TerminalSet>& s) {
    if (s)
        for (VertexId v : *s)
            if (!g.valid_vertex(v)) throw Error("terminal " + std::to_string(v) + " is not a vertex");
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (g.labels()) out << " [label=" << json((*g.labels())[v]).dump();
        if (s && s->contains(v)) out << (g.labels() ? ", " : " [") << "shape=doublecircle";
        if (g.labels() || (s && s->contains(v))) out << "]";
        out << ";\n";
    }
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

TreeCertificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("trees") || !j["trees"].is_array())
        throw Error("certificate: expected {\"trees\": [...]}");
    TreeCertificate cert;
    for (std::size_t i = 0; i < j["trees"].size(); ++i) {
        const json& jt = j["trees"][i];
        std::string where = "tree " + std::to_string(i);
        if (!jt.is_object()) throw Error(where + ": expected an object");
        Tree t;
        if (jt.contains("vertices"))
            for (const auto& v : jt["vertices"]) t.vertices.push_back(as_vertex(v, where));
        if (jt.contains("edges"))
            for (const auto& e : jt["edges"]) {
                if (!e.is_array() || e.size() != 2) throw Error(where + ": expected [u,v] edges");
                t.edges.emplace_back(as_vertex(e[0], where), as_vertex(e[1], where));
            }
        if (!jt.contains("vertices"))
            for (const Edge& e : t.edges) {
                t.vertices.push_back(e.u);
                t.vertices.push_back(e.v);
            }
        // order is normalized but duplicates survive so the verifier can report them
        std::sort(t.vertices.begin(), t.vertices.end());
        std::sort(t.edges.begin(), t.edges.end());
        if (!jt.contains("vertices"))
            t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
        cert.trees.push_back(std::move(t));
    }
    return cert;
}

json certificate_to_json(const TreeCertificate& cert) {
    json trees = json::array();
    for (const Tree& t : cert.trees) {
        json jt;
        jt["vertices"] = t.vertices;
        json edges = json::array();
        for (const Edge& e : t.edges) edges.push_back({e.u, e.v});
        jt["edges"] = std::move(edges);
        trees.push_back(std::move(jt));
    }
    json j;
    j["trees"] = std::move(trees);
    return j;
}

TreeCertificate parse_certificate(std::string_view text) { return certificate_from_json(parse_json(text)); }

TerminalSet parse_terminal_list(const Graph& g, std::string_view csv) {
    std::vector<VertexId> members;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view tok = csv.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        VertexId v = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
            throw Error("terminal list: bad entry \"" + std::string(tok) + "\"");
        members.push_back(v);
        pos = comma + 1;
    }
    return TerminalSet(g, std::move(members));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << contents;
}

}  // namespace gencon
