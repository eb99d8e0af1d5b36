#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "errors.hpp"
#include "face_vectors.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "isomorphism.hpp"
#include "simplicial_complex.hpp"
#include "util.hpp"

namespace flagtri {

struct SearchFinding {
    int n = 0;
    Graph graph{0, {}};
    std::vector<Int> f;            // f-vector of the clique complex
    bool has_reference = false;
    std::vector<Int> reference_f;  // f-vector of X(J_{d/2}(n)) when defined
    bool violation = false;        // some f_i exceeds the reference
    bool has_ratio = false;
    Rat ratio;                     // f_r / n^{r+1} for r = d/2
};

struct SearchOptions {
    int d = 2;           // complexes of dimension d-1
    int n_max = 6;
    bool random = false;
    std::uint64_t seed = 0;
    long budget = -1;    // < 0: unlimited (exhaustive only)
};

struct SearchOutcome {
    std::vector<SearchFinding> findings;
    bool budget_exceeded = false;
    long examined = 0;
};

namespace detail {

inline bool has_clique_of_size(const Graph& g, int k, const std::vector<int>& chosen, int from) {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (int v = from; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (int u : chosen)
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok) {
            auto next = chosen;
            next.push_back(v);
            if (has_clique_of_size(g, k, next, v + 1)) return true;
        }
    }
    return false;
}

inline bool has_clique_of_size(const Graph& g, int k) {
    if (k <= 0) return true;
    return has_clique_of_size(g, k, {}, 0);
}

/// Monotone pruning conditions preserved under vertex deletion: clique
/// number at most d, and every (d-1)-clique extends to at most two
/// d-cliques.
inline bool pseudo_prune_ok(const Graph& g, int d) {
    if (has_clique_of_size(g, d + 1)) return false;
    if (d < 2) return true;
    bool ok = true;
    for_each_clique(g, [&](const std::vector<int>& c) {
        if (!ok || static_cast<int>(c.size()) != d - 1) return;
        int ext = 0;
        for (int v = 0; v < g.vertex_count() && ext <= 2; ++v) {
            if (std::binary_search(c.begin(), c.end(), v)) continue;
            bool adj = true;
            for (int u : c)
                if (!g.adjacent(u, v)) {
                    adj = false;
                    break;
                }
            if (adj) ++ext;
        }
        if (ext > 2) ok = false;
    }, d - 1);
    return ok;
}

inline void record_finding(SearchOutcome& out, const Graph& g, int d) {
    SimplicialComplex k = SimplicialComplex::clique_complex(g);
    if (k.dim() != d - 1) return;
    if (!is_weak_pseudomanifold(k)) return;
    SearchFinding fd;
    fd.n = g.vertex_count();
    fd.graph = g;
    fd.f = k.f_vector();
    if (d % 2 == 0) {
        int r = d / 2;
        if (fd.n >= 4 * r) {
            auto ref = SimplicialComplex::clique_complex(j_graph(fd.n, r).graph);
            fd.has_reference = true;
            fd.reference_f = ref.f_vector();
            for (std::size_t i = 0; i < fd.f.size(); ++i)
                if (fd.f[i] > fd.reference_f[i]) fd.violation = true;
        }
        fd.has_ratio = true;
        fd.ratio = Rat(fd.f[r + 1]) / Rat(int_pow(fd.n, r + 1));
    }
    out.findings.push_back(std::move(fd));
}

}  // namespace detail

/// Enumerates (or samples) graphs whose clique complexes are weak
/// pseudomanifolds of dimension d-1, deduplicated by canonical form.
/// Exhaustive mode grows graphs one vertex at a time, keeping one canonical
/// representative per isomorphism class and pruning by the monotone
/// conditions above. The budget counts generated candidates (exhaustive) or
/// samples (random); exceeding it stops the search with partial results.
inline SearchOutcome search_pseudomanifolds(const SearchOptions& opt) {
    if (opt.d < 1) throw BadInput("d must be positive");
    if (opt.n_max < 1) throw BadInput("n_max must be positive");
    SearchOutcome out;

    if (opt.random) {
        if (opt.budget < 0) throw BadInput("random mode needs a budget");
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<int> pick_n(std::min(opt.d, opt.n_max), opt.n_max);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::set<std::string> seen;
        for (long s = 0; s < opt.budget; ++s) {
            ++out.examined;
            int n = pick_n(rng);
            double p = unit(rng);
            std::vector<std::pair<int, int>> es;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (unit(rng) < p) es.emplace_back(u, v);
            Graph g(n, std::move(es));
            if (!seen.insert(canonical_form(g)).second) continue;
            detail::record_finding(out, g, opt.d);
        }
        out.budget_exceeded = true;  // the sample stream is always budget-limited
        return out;
    }

    std::vector<Graph> level{Graph(1, {})};
    detail::record_finding(out, level[0], opt.d);
    for (int n = 2; n <= opt.n_max && !level.empty(); ++n) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const Graph& parent : level) {
            for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                if (opt.budget >= 0 && out.examined >= opt.budget) {
                    out.budget_exceeded = true;
                    return out;
                }
                ++out.examined;
                auto es = parent.edges();
                for (int u = 0; u < n - 1; ++u)
                    if (mask & (1u << u)) es.emplace_back(u, n - 1);
                Graph child(n, std::move(es));
                if (!detail::pseudo_prune_ok(child, opt.d)) continue;
                if (!seen.insert(canonical_form(child)).second) continue;
                next.push_back(std::move(child));
            }
        }
        std::sort(next.begin(), next.end(), [](const Graph& a, const Graph& b) {
            return canonical_form(a) < canonical_form(b);
        });
        for (const Graph& g : next) detail::record_finding(out, g, opt.d);
        level = std::move(next);
    }
    return out;
}

}  // namespace flagtri
