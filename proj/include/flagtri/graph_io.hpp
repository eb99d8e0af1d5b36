#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "graph.hpp"

namespace flagtri {

/// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n.
inline Graph read_graph_text(std::istream& in) {
    long n = -1, m = -1;
    if (!(in >> n >> m)) throw BadFormat("expected header line \"n m\"");
    if (n < 0 || m < 0) throw BadFormat("negative header field");
    std::vector<std::pair<int, int>> es;
    es.reserve(m);
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v)) throw BadFormat("truncated edge list");
        if (u >= v) throw BadFormat("edges must be written u v with u < v");
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph(static_cast<int>(n), std::move(es));
    } catch (const BadInput& e) {
        throw BadFormat(e.what());
    }
}

inline void write_graph_text(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw BadFormat("graph JSON needs {\"n\": int, \"edges\": [[u,v],...]}");
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw BadFormat("bad edge entry");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(j.at("n").get<int>(), std::move(es));
    } catch (const BadInput& e) {
        throw BadFormat(e.what());
    }
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto& es = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) es.push_back({u, v});
    return j;
}

/// Reads either the text or the JSON graph form, sniffing the first byte.
inline Graph read_graph(std::istream& in) {
    while (std::isspace(in.peek())) in.get();
    if (in.peek() == '{') {
        nlohmann::json j;
        in >> j;
        return graph_from_json(j);
    }
    return read_graph_text(in);
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    return read_graph(in);
}

inline void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw BadInput("cannot open " + path + " for writing");
    write_graph_text(out, g);
}

/// Partition file: one line per part, space separated vertices; line 0 is V_0
/// (possibly empty).
inline std::vector<std::vector<int>> read_partition(std::istream& in) {
    std::vector<std::vector<int>> parts;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> part;
        int v;
        while (ls >> v) part.push_back(v);
        parts.push_back(std::move(part));
    }
    return parts;
}

inline std::vector<std::vector<int>> load_partition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    return read_partition(in);
}

inline void write_partition(std::ostream& out, const std::vector<std::vector<int>>& parts) {
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < part.size(); ++i) out << (i ? " " : "") << part[i];
        out << "\n";
    }
}

}  // namespace flagtri
