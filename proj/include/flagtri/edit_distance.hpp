#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "constructions.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace flagtri {

enum class EditMode { Exact, Heuristic };

struct EditResult {
    long cost = 0;
    std::vector<std::vector<int>> parts;  // r balanced parts reproducing cost
};

namespace detail {

/// Intra-part edges plus missing cross edges of the given r-partition.
inline long edit_cost(const Graph& g, const std::vector<std::vector<int>>& parts) {
    long cost = 0;
    for (const auto& p : parts)
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b)
                if (g.adjacent(p[a], p[b])) ++cost;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u : parts[i])
                for (int v : parts[j])
                    if (!g.adjacent(u, v)) ++cost;
    return cost;
}

}  // namespace detail

/// Minimum edit distance to the balanced complete r-partite graph: exact mode
/// enumerates balanced partitions with pruning, heuristic mode runs
/// steepest-descent swaps from a greedy seed. The returned partition always
/// reproduces the returned cost.
inline EditResult closeness_to_turan(const Graph& g, int r, EditMode mode = EditMode::Exact,
                                     int exact_bound = 14) {
    if (r < 1) throw BadInput("r must be positive");
    int n = g.vertex_count();
    auto sizes = part_sizes(n, r);  // larger parts first
    if (mode == EditMode::Exact && n > exact_bound)
        throw TooLargeForExact("exact edit distance limited to n <= " + std::to_string(exact_bound));

    std::vector<int> assign(n, -1);
    std::vector<int> filled(r, 0);

    auto incremental = [&](int v, int p) {
        long add = 0;
        for (int u = 0; u < v; ++u) {
            if (assign[u] == p) {
                if (g.adjacent(u, v)) ++add;  // intra edge
            } else if (assign[u] >= 0) {
                if (!g.adjacent(u, v)) ++add;  // missing cross edge
            }
        }
        return add;
    };

    EditResult best;
    best.cost = -1;

    if (mode == EditMode::Exact) {
        std::vector<int> best_assign;
        std::function<void(int, long)> rec = [&](int v, long cost) {
            if (best.cost >= 0 && cost >= best.cost) return;
            if (v == n) {
                best.cost = cost;
                best_assign = assign;
                return;
            }
            for (int p = 0; p < r; ++p) {
                if (filled[p] == sizes[p]) continue;
                // equal-size parts are interchangeable: only the first empty one
                if (filled[p] == 0 && p > 0 && sizes[p - 1] == sizes[p] && filled[p - 1] == 0) continue;
                assign[v] = p;
                ++filled[p];
                rec(v + 1, cost + incremental(v, p));
                --filled[p];
                assign[v] = -1;
            }
        };
        rec(0, 0);
        assign = best_assign;
    } else {
        // greedy seed: each vertex to the cheapest part with room
        for (int v = 0; v < n; ++v) {
            int bp = -1;
            long bc = 0;
            for (int p = 0; p < r; ++p) {
                if (filled[p] == sizes[p]) continue;
                long c = incremental(v, p);
                if (bp < 0 || c < bc) {
                    bp = p;
                    bc = c;
                }
            }
            assign[v] = bp;
            ++filled[bp];
        }
        auto materialize = [&]() {
            std::vector<std::vector<int>> parts(r);
            for (int v = 0; v < n; ++v) parts[assign[v]].push_back(v);
            return parts;
        };
        long cost = detail::edit_cost(g, materialize());
        // steepest descent over swaps and balance-preserving relocations
        bool improved = true;
        while (improved) {
            improved = false;
            int su = -1, sv = -1, mu = -1, mp = -1;
            long bcost = cost;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (assign[u] == assign[v]) continue;
                    std::swap(assign[u], assign[v]);
                    long c = detail::edit_cost(g, materialize());
                    if (c < bcost) {
                        bcost = c;
                        su = u;
                        sv = v;
                        mu = -1;
                    }
                    std::swap(assign[u], assign[v]);
                }
            for (int u = 0; u < n; ++u)
                for (int p = 0; p < r; ++p) {
                    int q = assign[u];
                    if (p == q || filled[p] >= filled[q]) continue;  // keep the size multiset
                    assign[u] = p;
                    long c = detail::edit_cost(g, materialize());
                    if (c < bcost) {
                        bcost = c;
                        mu = u;
                        mp = p;
                        su = -1;
                    }
                    assign[u] = q;
                }
            if (su >= 0) {
                std::swap(assign[su], assign[sv]);
                cost = bcost;
                improved = true;
            } else if (mu >= 0) {
                --filled[assign[mu]];
                assign[mu] = mp;
                ++filled[mp];
                cost = bcost;
                improved = true;
            }
        }
        best.cost = cost;
    }

    best.parts.assign(r, {});
    for (int v = 0; v < n; ++v) best.parts[assign[v]].push_back(v);
    long check = detail::edit_cost(g, best.parts);
    if (check != best.cost) throw Error("internal: partition does not reproduce the reported cost");
    return best;
}

}  // namespace flagtri
