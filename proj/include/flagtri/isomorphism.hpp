#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace flagtri {

namespace detail {

// One round of neighborhood color refinement over a set of graphs that share
// a signature table, so resulting color ids are comparable across graphs.
inline bool refine_round(const std::vector<const Graph*>& gs, std::vector<std::vector<int>>& cols) {
    using Sig = std::pair<int, std::vector<int>>;
    std::map<Sig, int> ids;
    std::vector<std::vector<Sig>> sigs(gs.size());
    for (std::size_t t = 0; t < gs.size(); ++t) {
        const Graph& g = *gs[t];
        sigs[t].resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(cols[t][u]);
            std::sort(nb.begin(), nb.end());
            sigs[t][v] = {cols[t][v], std::move(nb)};
            ids.emplace(sigs[t][v], 0);
        }
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    bool changed = false;
    for (std::size_t t = 0; t < gs.size(); ++t)
        for (int v = 0; v < gs[t]->vertex_count(); ++v) {
            int nc = ids[sigs[t][v]];
            if (nc != cols[t][v]) changed = true;
            cols[t][v] = nc;
        }
    return changed;
}

inline std::vector<std::vector<int>> stable_coloring(const std::vector<const Graph*>& gs) {
    std::vector<std::vector<int>> cols;
    for (const Graph* g : gs) cols.emplace_back(g->vertex_count(), 0);
    while (refine_round(gs, cols)) {}
    return cols;
}

}  // namespace detail

/// Checks that `map` (g-vertex -> h-vertex) is an edge-preserving bijection.
inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (g.vertex_count() != h.vertex_count()) return false;
    if (static_cast<int>(map.size()) != g.vertex_count()) return false;
    std::vector<char> seen(h.vertex_count(), 0);
    for (int im : map) {
        if (im < 0 || im >= h.vertex_count() || seen[im]) return false;
        seen[im] = 1;
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
    return true;
}

/// Edge-preserving bijection g -> h, if one exists. Color refinement narrows
/// the candidate targets, backtracking finishes the job; the returned map is
/// always re-verified before being handed out.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto cols = detail::stable_coloring({&g, &h});
    {
        auto cg = cols[0], ch = cols[1];
        std::sort(cg.begin(), cg.end());
        std::sort(ch.begin(), ch.end());
        if (cg != ch) return std::nullopt;
    }
    std::vector<int> map(n, -1), inv(h.vertex_count(), -1);
    // Process vertices most-constrained first: maximize mapped neighbors.
    std::function<bool(int)> place = [&](int placed) -> bool {
        if (placed == n) return true;
        int best = -1, best_anchor = -1;
        for (int v = 0; v < n; ++v) {
            if (map[v] >= 0) continue;
            int anchors = 0;
            for (int u : g.neighbors(v))
                if (map[u] >= 0) ++anchors;
            if (anchors > best_anchor) { best_anchor = anchors; best = v; }
        }
        int v = best;
        for (int w = 0; w < n; ++w) {
            if (inv[w] >= 0 || cols[1][w] != cols[0][v]) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (map[u] >= 0 && g.adjacent(v, u) != h.adjacent(w, map[u])) ok = false;
            if (!ok) continue;
            map[v] = w;
            inv[w] = v;
            if (place(placed + 1)) return true;
            map[v] = -1;
            inv[w] = -1;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    if (!is_isomorphism(g, h, map)) return std::nullopt;  // should not happen
    return map;
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
    return find_isomorphism(g, h).has_value();
}

/// Canonical certificate: equal strings iff the graphs are isomorphic.
///
/// Minimum adjacency bitstring over all vertex orders that respect the stable
/// refinement classes, found by backtracking with prefix pruning. Intended
/// for small graphs (enumeration dedup), not for large instances.
inline std::string canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return "0|";
    auto col = detail::stable_coloring({&g})[0];
    // Position p must hold a vertex of class order[p].
    std::vector<int> order(col);
    std::sort(order.begin(), order.end());

    std::string best;
    std::string cur(static_cast<std::size_t>(n) * (n - 1) / 2, '0');
    std::vector<int> perm(n, -1);  // position -> vertex
    std::vector<char> used(n, 0);
    bool have_best = false;

    std::function<void(int, std::size_t, bool)> rec = [&](int pos, std::size_t bits, bool tied) {
        if (pos == n) {
            if (!have_best || cur < best) { best = cur; have_best = true; }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || col[v] != order[pos]) continue;
            std::size_t b = bits;
            bool lt = !tied, ok = true;
            for (int p = 0; p < pos; ++p, ++b) {
                char c = g.adjacent(v, perm[p]) ? '1' : '0';
                cur[b] = c;
                if (!lt && have_best) {
                    if (c > best[b]) { ok = false; break; }
                    if (c < best[b]) lt = true;
                }
            }
            if (!ok) continue;
            perm[pos] = v;
            used[v] = 1;
            rec(pos + 1, bits + pos, !lt && have_best);
            used[v] = 0;
        }
    };
    rec(0, 0, true);
    return std::to_string(n) + "|" + best;
}

}  // namespace flagtri
