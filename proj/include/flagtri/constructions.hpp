#pragma once

#include <numeric>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace flagtri {

/// Balanced part sizes for n vertices in r parts, larger parts first.
inline std::vector<int> part_sizes(int n, int r) {
    if (r <= 0) throw BadInput("r must be positive");
    if (n < 0) throw BadInput("n must be non-negative");
    std::vector<int> sizes(r, n / r);
    for (int i = 0; i < n % r; ++i) ++sizes[i];
    return sizes;
}

struct PartitionedGraph {
    Graph graph;
    std::vector<std::vector<int>> parts;  // contiguous vertex blocks
};

namespace detail {

inline std::vector<std::vector<int>> blocks(const std::vector<int>& sizes) {
    std::vector<std::vector<int>> parts;
    int v = 0;
    for (int s : sizes) {
        std::vector<int> p(s);
        std::iota(p.begin(), p.end(), v);
        v += s;
        parts.push_back(std::move(p));
    }
    return parts;
}

inline void add_cross_edges(std::vector<std::pair<int, int>>& es, const std::vector<std::vector<int>>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u : parts[i])
                for (int v : parts[j]) es.emplace_back(std::min(u, v), std::max(u, v));
}

inline void add_cycle_edges(std::vector<std::pair<int, int>>& es, const std::vector<int>& part) {
    int m = static_cast<int>(part.size());
    for (int i = 0; i + 1 < m; ++i) es.emplace_back(part[i], part[i + 1]);
    if (m >= 3) es.emplace_back(part[0], part[m - 1]);
}

}  // namespace detail

/// Balanced complete r-partite Turán graph T_r(n).
inline PartitionedGraph turan(int n, int r) {
    auto parts = detail::blocks(part_sizes(n, r));
    std::vector<std::pair<int, int>> es;
    detail::add_cross_edges(es, parts);
    return {Graph(n, std::move(es)), std::move(parts)};
}

/// Cycle C_len.
inline Graph cycle(int len) {
    if (len < 3) throw BadInput("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < len; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, len - 1);
    return Graph(len, std::move(es));
}

/// J_r(n): T_r(n) with a cycle induced on each part. Requires n >= 4r so
/// every part is a cycle of length at least 4.
inline PartitionedGraph j_graph(int n, int r) {
    if (r <= 0) throw BadInput("r must be positive");
    if (n < 4 * r) throw TooFewVertices("j_graph needs n >= 4r");
    auto parts = detail::blocks(part_sizes(n, r));
    std::vector<std::pair<int, int>> es;
    detail::add_cross_edges(es, parts);
    for (const auto& p : parts) detail::add_cycle_edges(es, p);
    return {Graph(n, std::move(es)), std::move(parts)};
}

/// J*_r(n): J_r(n-2) plus two non-adjacent apex vertices (the last two
/// indices) joined to everything else.
inline PartitionedGraph j_star(int n, int r) {
    if (r <= 0) throw BadInput("r must be positive");
    if (n - 2 < 4 * r) throw TooFewVertices("j_star needs n - 2 >= 4r");
    auto base = j_graph(n - 2, r);
    auto es = base.graph.edges();
    for (int apex : {n - 2, n - 1})
        for (int v = 0; v < n - 2; ++v) es.emplace_back(v, apex);
    auto parts = base.parts;
    parts.push_back({n - 2, n - 1});  // apex pair recorded last
    return {Graph(n, std::move(es)), std::move(parts)};
}

/// K_3^r = T_r(3r).
inline Graph k3r(int r) {
    return turan(3 * r, r).graph;
}

/// Join: disjoint union plus all cross edges; h's vertices are shifted by
/// g's vertex count.
inline Graph graph_join(const Graph& g, const Graph& h) {
    int off = g.vertex_count();
    auto es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(u + off, v + off);
    for (int u = 0; u < off; ++u)
        for (int v = 0; v < h.vertex_count(); ++v) es.emplace_back(u, v + off);
    return Graph(off + h.vertex_count(), std::move(es));
}

}  // namespace flagtri
