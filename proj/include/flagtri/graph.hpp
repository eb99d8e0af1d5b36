#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "util.hpp"

namespace flagtri {

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept strictly sorted; an n*n adjacency table backs
/// constant-time adjacency queries. Values are safe to share between threads
/// after construction.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), adj_(n), mat_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 0) throw BadInput("negative vertex count");
        for (auto [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_) throw BadInput("edge endpoint out of range");
            if (u == v) throw BadInput("loop edge");
            if (mat_[idx(u, v)]) throw BadInput("duplicate edge");
            mat_[idx(u, v)] = mat_[idx(v, u)] = 1;
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            ++m_;
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    long edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return u != v && mat_[idx(u, v)] != 0; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    /// Edges as sorted (u < v) pairs, lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool is_clique(const std::vector<int>& vs) const {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!adjacent(vs[i], vs[j])) return false;
        return true;
    }

    Graph with_edge(int u, int v) const {
        auto es = edges();
        es.emplace_back(std::min(u, v), std::max(u, v));
        return Graph(n_, std::move(es));
    }

    Graph without_edge(int u, int v) const {
        auto es = edges();
        std::pair<int, int> e{std::min(u, v), std::max(u, v)};
        std::erase(es, e);
        return Graph(n_, std::move(es));
    }

    /// Induced subgraph on `vs` (need not be sorted); vertex i of the result
    /// corresponds to vs[i] after sorting.
    Graph induced(std::vector<int> vs) const {
        std::sort(vs.begin(), vs.end());
        std::vector<std::pair<int, int>> es;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (adjacent(vs[i], vs[j])) es.emplace_back(static_cast<int>(i), static_cast<int>(j));
        return Graph(static_cast<int>(vs.size()), std::move(es));
    }

private:
    std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

    int n_ = 0;
    long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<char> mat_;
};

/// A clique, validated against its host graph on construction.
struct Clique {
    std::vector<int> vertices;

    Clique(const Graph& g, std::vector<int> vs) : vertices(std::move(vs)) {
        std::sort(vertices.begin(), vertices.end());
        for (int v : vertices)
            if (v < 0 || v >= g.vertex_count()) throw BadInput("clique vertex out of range");
        if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
            throw BadInput("repeated clique vertex");
        if (!g.is_clique(vertices)) throw NotAClique("vertices are not pairwise adjacent");
    }
};

/// (e_0, e_1, ..., e_omega) with exact integer entries. e_0 and e_1 are
/// always present, entries past the clique number are not stored.
struct CliqueVector {
    std::vector<Int> counts;

    int omega() const {
        for (int i = static_cast<int>(counts.size()) - 1; i >= 0; --i)
            if (counts[i] > 0) return i;
        return 0;
    }

    /// e_i, with zeros past the stored range.
    Int e(int i) const {
        if (i < 0 || i >= static_cast<int>(counts.size())) return 0;
        return counts[i];
    }

    bool operator==(const CliqueVector& o) const { return counts == o.counts; }
};

/// Calls `visit` on every nonempty clique (vertices ascending), in
/// lexicographic order, optionally capped at k_max vertices.
inline void for_each_clique(const Graph& g, const std::function<void(const std::vector<int>&)>& visit,
                            std::optional<int> k_max = std::nullopt) {
    int cap = k_max.value_or(g.vertex_count());
    if (cap <= 0) return;
    std::vector<int> cur;
    // cands: vertices > cur.back(), adjacent to everything in cur, ascending.
    std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& cands) {
        for (std::size_t i = 0; i < cands.size(); ++i) {
            int v = cands[i];
            cur.push_back(v);
            visit(cur);
            if (static_cast<int>(cur.size()) < cap) {
                std::vector<int> next;
                for (std::size_t j = i + 1; j < cands.size(); ++j)
                    if (g.adjacent(v, cands[j])) next.push_back(cands[j]);
                if (!next.empty()) rec(next);
            }
            cur.pop_back();
        }
    };
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    rec(all);
}

/// Exact clique counts by cardinality. Empty graph yields (1, 0).
inline CliqueVector clique_vector(const Graph& g, std::optional<int> k_max = std::nullopt) {
    CliqueVector cv;
    cv.counts.assign(2, 0);
    cv.counts[0] = 1;
    for_each_clique(g, [&](const std::vector<int>& c) {
        std::size_t k = c.size();
        if (cv.counts.size() <= k) cv.counts.resize(k + 1, 0);
        cv.counts[k] += 1;
    }, k_max);
    return cv;
}

/// lk_G(sigma): induced subgraph on the common neighborhood of sigma,
/// together with the map from new indices to original vertices.
struct LinkGraph {
    Graph graph;
    std::vector<int> vertex_map;  // new index -> original vertex
};

inline LinkGraph link_graph(const Graph& g, const Clique& sigma) {
    std::vector<int> common;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (int s : sigma.vertices)
            if (v == s || !g.adjacent(v, s)) { ok = false; break; }
        if (ok) common.push_back(v);
    }
    if (sigma.vertices.empty()) {
        common.clear();
        for (int v = 0; v < g.vertex_count(); ++v) common.push_back(v);
    }
    return LinkGraph{g.induced(common), common};
}

/// |N(v) ∩ W|.
inline int degree_into(const Graph& g, int v, const std::vector<int>& w) {
    if (v < 0 || v >= g.vertex_count()) throw BadInput("vertex out of range");
    int d = 0;
    for (int u : w)
        if (g.adjacent(v, u)) ++d;
    return d;
}

using K3rWitness = std::vector<std::array<int, 3>>;

/// Searches for K_3^r with independent triples and complete bipartite graphs
/// between triples. Exhaustive, so std::nullopt is a proof of absence.
/// Triples are reported ordered by their smallest vertex; the witness is the
/// lexicographically first one found.
inline std::optional<K3rWitness> contains_k3r(const Graph& g, int r) {
    if (r <= 0) throw BadInput("r must be positive");
    K3rWitness parts;
    std::function<bool(const std::vector<int>&)> rec = [&](const std::vector<int>& cands) -> bool {
        if (static_cast<int>(parts.size()) == r) return true;
        int remaining = r - static_cast<int>(parts.size());
        if (static_cast<int>(cands.size()) < 3 * remaining) return false;
        for (std::size_t ia = 0; ia < cands.size(); ++ia) {
            int a = cands[ia];
            for (std::size_t ib = ia + 1; ib < cands.size(); ++ib) {
                int b = cands[ib];
                if (g.adjacent(a, b)) continue;
                for (std::size_t ic = ib + 1; ic < cands.size(); ++ic) {
                    int c = cands[ic];
                    if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
                    parts.push_back({a, b, c});
                    // Later triples live strictly above this triple's minimum
                    // and must join completely to it.
                    std::vector<int> next;
                    for (int v : cands)
                        if (v > a && v != b && v != c && g.adjacent(v, a) && g.adjacent(v, b) && g.adjacent(v, c))
                            next.push_back(v);
                    if (rec(next)) return true;
                    parts.pop_back();
                }
            }
        }
        return false;
    };
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    if (rec(all)) return parts;
    return std::nullopt;
}

}  // namespace flagtri
