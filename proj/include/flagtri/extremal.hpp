#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "errors.hpp"
#include "face_vectors.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "util.hpp"

namespace flagtri {

/// eta and epsilon have defining formulas; the remaining constants are
/// existential in the source material and kept as configuration defaults.
struct ExtremalConstants {
    int r;
    Rat eta;        // 1 / (14 r^r)
    Rat epsilon;    // eta^2 / (120 r^{r+3})
    Rat alpha = Rat(1, 100);
    Rat beta = Rat(1, 100);
    Rat delta = Rat(1, 100);
    long m0 = 1000, m1 = 1000, m2 = 1000;
    Rat c_r;

    explicit ExtremalConstants(int rr) : r(rr) {
        if (rr <= 0) throw BadInput("r must be positive");
        Int rr_pow = int_pow(rr, rr);
        eta = Rat(1) / (Rat(14) * Rat(rr_pow));
        epsilon = eta * eta / (Rat(120) * Rat(int_pow(rr, rr + 3)));
        c_r = Rat(int_pow(3, rr));
    }
};

inline Rat default_eta(int r) { return ExtremalConstants(r).eta; }

enum class VertexType { Type1, Type2, Untyped };

struct TypeAssignment {
    VertexType type = VertexType::Untyped;
    int g = -1, h = -1;
};

struct ConditionResult {
    bool pass = true;
    std::string witness;  // describes the first failure found
};

/// Certificate for the (eta,r)-extremality conditions (a)-(e) of a
/// partition V_0, V_1, ..., V_r.
struct PartitionCertificate {
    std::vector<std::vector<int>> parts;  // parts[0] = V_0
    Rat eta;
    int r = 0;
    std::map<char, ConditionResult> condition_report;
    std::map<int, TypeAssignment> vertex_types;  // keyed by V_0 vertices

    bool passes() const {
        for (const auto& [c, res] : condition_report)
            if (!res.pass) return false;
        return true;
    }
};

namespace detail {

inline void validate_partition(const Graph& g, const std::vector<std::vector<int>>& parts,
                               std::size_t expected_count) {
    if (parts.size() != expected_count) throw BadPartition("wrong number of parts");
    std::vector<int> seen(g.vertex_count(), 0);
    for (const auto& p : parts)
        for (int v : p) {
            if (v < 0 || v >= g.vertex_count()) throw BadPartition("vertex out of range");
            if (seen[v]++) throw BadPartition("vertex appears twice");
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!seen[v]) throw BadPartition("vertex missing from partition");
}

inline std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline bool has_triangle(const Graph& g, const std::vector<int>& part) {
    for (std::size_t a = 0; a < part.size(); ++a)
        for (std::size_t b = a + 1; b < part.size(); ++b) {
            if (!g.adjacent(part[a], part[b])) continue;
            for (std::size_t c = b + 1; c < part.size(); ++c)
                if (g.adjacent(part[a], part[c]) && g.adjacent(part[b], part[c])) return true;
        }
    return false;
}

inline std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

}  // namespace detail

/// Evaluates conditions (a)-(e) exactly. A vertex of V_0 qualifying as both
/// Type 1 and Type 2 is classified Type 1; index pairs are scanned in
/// lexicographic order.
inline PartitionCertificate check_extremal(const Graph& h, const std::vector<std::vector<int>>& parts,
                                           const Rat& eta, int r) {
    if (r <= 0) throw BadPartition("r must be positive");
    if (eta < 0 || eta >= 1) throw BadPartition("eta must lie in [0,1)");
    detail::validate_partition(h, parts, static_cast<std::size_t>(r) + 1);

    PartitionCertificate cert;
    cert.parts = parts;
    for (auto& p : cert.parts) std::sort(p.begin(), p.end());
    cert.eta = eta;
    cert.r = r;
    int n = h.vertex_count();
    const auto& v0 = cert.parts[0];

    // (a): |V_0| <= eta n / (30 r^r) and floor/ceil bounds on each |V_i|
    {
        ConditionResult res;
        Rat v0_bound = eta * Rat(n) / (Rat(30) * Rat(int_pow(r, r)));
        if (Rat(static_cast<long>(v0.size())) > v0_bound) {
            res.pass = false;
            res.witness = "|V_0| = " + std::to_string(v0.size()) + " exceeds eta n / (30 r^r)";
        }
        Int lo = floor_rat((Rat(1) - eta / Rat(30 * r)) * Rat(n) / Rat(r));
        Int hi = ceil_rat((Rat(1) + eta / Rat(30 * r)) * Rat(n) / Rat(r));
        for (int i = 1; res.pass && i <= r; ++i) {
            Int sz = static_cast<long>(cert.parts[i].size());
            if (sz < lo || sz > hi) {
                res.pass = false;
                res.witness = "|V_" + std::to_string(i) + "| = " + sz.get_str() +
                              " outside [" + lo.get_str() + ", " + hi.get_str() + "]";
            }
        }
        cert.condition_report['a'] = res;
    }

    // (b): each H[V_i] is triangle-free
    {
        ConditionResult res;
        for (int i = 1; res.pass && i <= r; ++i)
            if (detail::has_triangle(h, cert.parts[i])) {
                res.pass = false;
                res.witness = "triangle inside V_" + std::to_string(i);
            }
        cert.condition_report['b'] = res;
    }

    // (c): each H[V_i] has maximum degree at most 2
    {
        ConditionResult res;
        for (int i = 1; res.pass && i <= r; ++i)
            for (int v : cert.parts[i])
                if (degree_into(h, v, cert.parts[i]) > 2) {
                    res.pass = false;
                    res.witness = "vertex " + std::to_string(v) + " has intra-part degree > 2";
                    break;
                }
        cert.condition_report['c'] = res;
    }

    // (d): deg(v, V_j) >= (1 - eta)|V_j| for all v in V_i, i != j
    {
        ConditionResult res;
        for (int i = 1; res.pass && i <= r; ++i)
            for (int j = 1; res.pass && j <= r; ++j) {
                if (i == j) continue;
                Rat need = (Rat(1) - eta) * Rat(static_cast<long>(cert.parts[j].size()));
                for (int v : cert.parts[i])
                    if (Rat(degree_into(h, v, cert.parts[j])) < need) {
                        res.pass = false;
                        res.witness = "deg(" + std::to_string(v) + ", V_" + std::to_string(j) +
                                      ") below (1 - eta)|V_j|";
                        break;
                    }
            }
        cert.condition_report['d'] = res;
    }

    // (e): every vertex of V_0 is Type 1 or Type 2
    {
        ConditionResult res;
        for (int v : v0) {
            TypeAssignment t;
            for (int g = 1; t.type == VertexType::Untyped && g <= r; ++g)
                for (int hh = 1; hh <= r; ++hh) {
                    if (g == hh) continue;
                    Rat dh = Rat(degree_into(h, v, cert.parts[hh]));
                    Rat szh = Rat(static_cast<long>(cert.parts[hh].size()));
                    if (degree_into(h, v, cert.parts[g]) <= 2 && dh <= (Rat(1) - eta / 2) * szh) {
                        t = {VertexType::Type1, g, hh};
                        break;
                    }
                }
            if (t.type == VertexType::Untyped) {
                Rat thr = Rat(3 * r) * eta;
                for (int g = 1; t.type == VertexType::Untyped && g <= r; ++g)
                    for (int hh = 1; hh <= r; ++hh) {
                        if (g == hh) continue;
                        Rat dg = Rat(degree_into(h, v, cert.parts[g]));
                        Rat dh = Rat(degree_into(h, v, cert.parts[hh]));
                        if (dg <= thr * Rat(static_cast<long>(cert.parts[g].size())) &&
                            dh <= thr * Rat(static_cast<long>(cert.parts[hh].size()))) {
                            t = {VertexType::Type2, g, hh};
                            break;
                        }
                    }
            }
            cert.vertex_types[v] = t;
            if (t.type == VertexType::Untyped && res.pass) {
                res.pass = false;
                res.witness = "vertex " + std::to_string(v) + " in V_0 is neither Type 1 nor Type 2";
            }
        }
        cert.condition_report['e'] = res;
    }

    return cert;
}

/// (0,r)-extremal and every intra-part degree is exactly 2. Forces V_0 empty,
/// balanced parts and complete cross bipartite graphs.
inline bool is_radical(const Graph& h, const std::vector<std::vector<int>>& parts) {
    int r = static_cast<int>(parts.size()) - 1;
    if (r < 1) throw BadPartition("need parts V_0, V_1, ..., V_r");
    auto cert = check_extremal(h, parts, Rat(0), r);
    if (!cert.passes()) return false;
    for (int i = 1; i <= r; ++i)
        for (int v : cert.parts[i])
            if (degree_into(h, v, cert.parts[i]) != 2) return false;
    return true;
}

/// Partition refinement pipeline: compute the deficient sets X_{i,j}, pool
/// them into Y_0, rescue the vertices whose deficient index is unique, and
/// certify the result.
inline PartitionCertificate build_extremal_partition(const Graph& h,
                                                     const std::vector<std::vector<int>>& x_parts,
                                                     const Rat& eta) {
    int r = static_cast<int>(x_parts.size());
    if (r < 1) throw BadPartition("need at least one part");
    detail::validate_partition(h, x_parts, static_cast<std::size_t>(r));
    int n = h.vertex_count();
    Int lo = Int(n) / r, hi = (Int(n) + r - 1) / r;
    for (const auto& p : x_parts) {
        Int sz = static_cast<long>(p.size());
        if (sz != lo && sz != hi) throw BadPartition("x_parts must be balanced");
    }
    auto deficient = [&](int v, int j) {
        Rat thr = (Rat(1) - Rat(2) * eta / 3) * Rat(static_cast<long>(x_parts[j].size()));
        return Rat(degree_into(h, v, x_parts[j])) <= thr;
    };
    std::vector<int> y0;
    std::vector<char> in_y0(n, 0);
    for (int i = 0; i < r; ++i)
        for (int v : x_parts[i])
            for (int j = 0; j < r; ++j) {
                if (i == j) continue;
                if (deficient(v, j)) {
                    if (!in_y0[v]) y0.push_back(v);
                    in_y0[v] = 1;
                    break;
                }
            }
    // Z_j: deficient toward X_j and only X_j, over all indices including the
    // vertex's own part
    std::vector<int> z_of(n, -1);
    for (int v : y0) {
        int only = -1;
        bool unique = true;
        for (int k = 0; k < r && unique; ++k)
            if (deficient(v, k)) {
                if (only >= 0) unique = false;
                else only = k;
            }
        if (unique && only >= 0) z_of[v] = only;
    }
    std::vector<std::vector<int>> parts(r + 1);
    for (int v : y0)
        if (z_of[v] < 0) parts[0].push_back(v);
    for (int i = 0; i < r; ++i) {
        for (int v : x_parts[i])
            if (!in_y0[v]) parts[i + 1].push_back(v);
        for (int v : y0)
            if (z_of[v] == i) parts[i + 1].push_back(v);
        std::sort(parts[i + 1].begin(), parts[i + 1].end());
    }
    std::sort(parts[0].begin(), parts[0].end());
    return check_extremal(h, parts, eta, r);
}

struct K3rGreedyResult {
    bool success = false;
    std::vector<std::array<int, 3>> triples;  // one per part, V_1 first
    int fail_level = 0;                       // 1-based part index when !success
};

/// Greedy inductive construction: starting from the fixed triple w in V_1,
/// pick at each level the three smallest-index pairwise non-adjacent common
/// neighbors within A_{l+1}. Triples within a part must be independent.
inline K3rGreedyResult find_k3r_greedy(const Graph& h, const std::vector<std::vector<int>>& parts,
                                       const std::array<int, 3>& w,
                                       const std::vector<std::vector<int>>& a_sets) {
    int r = static_cast<int>(parts.size()) - 1;
    if (r < 1) throw BadPartition("need parts V_0, V_1, ..., V_r");
    if (static_cast<int>(a_sets.size()) != r - 1) throw BadInput("need sets A_2, ..., A_r");
    auto in_set = [](int v, const std::vector<int>& s) {
        return std::find(s.begin(), s.end(), v) != s.end();
    };
    if (w[0] == w[1] || w[0] == w[2] || w[1] == w[2]) throw BadInput("w must be three distinct vertices");
    for (int v : w)
        if (!in_set(v, parts[1])) throw BadInput("w must lie in V_1");
    for (int i = 2; i <= r; ++i)
        for (int v : a_sets[i - 2])
            if (!in_set(v, parts[i])) throw BadInput("A_i must be a subset of V_i");

    K3rGreedyResult res;
    res.triples.push_back({w[0], w[1], w[2]});
    if (h.adjacent(w[0], w[1]) || h.adjacent(w[0], w[2]) || h.adjacent(w[1], w[2])) {
        res.fail_level = 1;  // initial triple carries an edge, not a K_3^r part
        return res;
    }
    std::vector<int> chosen(w.begin(), w.end());
    for (int level = 2; level <= r; ++level) {
        auto cands = detail::sorted_copy(a_sets[level - 2]);
        std::array<int, 3> pick{-1, -1, -1};
        int got = 0;
        for (int v : cands) {
            bool ok = true;
            for (int u : chosen)
                if (!h.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            for (int t = 0; ok && t < got; ++t)
                if (h.adjacent(pick[t], v)) ok = false;
            if (ok) {
                pick[got++] = v;
                if (got == 3) break;
            }
        }
        if (got < 3) {
            res.fail_level = level;
            return res;
        }
        res.triples.push_back(pick);
        chosen.insert(chosen.end(), pick.begin(), pick.end());
    }
    // verify: complete multipartite on the triples
    for (std::size_t a = 0; a < res.triples.size(); ++a)
        for (std::size_t b = a; b < res.triples.size(); ++b)
            for (int u : res.triples[a])
                for (int v : res.triples[b]) {
                    if (u == v) continue;
                    bool want = a != b;
                    if (h.adjacent(u, v) != want)
                        throw Error("internal: greedy witness is not complete multipartite");
                }
    res.success = true;
    return res;
}

struct ZykovReport {
    std::vector<Rat> ratios;  // ratios[k-1] = e_k(h) / e_k(T_r(n))
    bool monotone = true;
};

/// Ratios against the Turán graph. The chain is non-increasing for every
/// K_{r+1}-free graph; a false flag indicates a bug upstream.
inline ZykovReport zykov_ratios(const Graph& h, int r) {
    if (r < 1) throw BadInput("r must be positive");
    int n = h.vertex_count();
    auto eh = clique_vector(h, r + 1);
    if (eh.e(r + 1) > 0) {
        std::string msg = "graph contains K_" + std::to_string(r + 1);
        std::optional<std::vector<int>> witness;
        for_each_clique(h, [&](const std::vector<int>& c) {
            if (!witness && static_cast<int>(c.size()) == r + 1) witness = c;
        }, r + 1);
        if (witness) msg += " on vertices {" + detail::join_ints(*witness) + "}";
        throw KPlusOneClique(msg);
    }
    auto et = clique_vector(turan(n, r).graph, r);
    ZykovReport rep;
    for (int k = 1; k <= r; ++k) {
        if (et.e(k) == 0) throw BadInput("Turán reference count vanishes; n too small for r");
        rep.ratios.push_back(Rat(eh.e(k)) / Rat(et.e(k)));
    }
    for (std::size_t i = 0; i + 1 < rep.ratios.size(); ++i)
        if (rep.ratios[i] < rep.ratios[i + 1]) rep.monotone = false;
    return rep;
}

enum class MoveKind { EdgeAdd, Type1Relocate, Type2Relocate, PathRepair, Rebalance };

inline const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::EdgeAdd: return "EdgeAdd";
        case MoveKind::Type1Relocate: return "Type1Relocate";
        case MoveKind::Type2Relocate: return "Type2Relocate";
        case MoveKind::PathRepair: return "PathRepair";
        case MoveKind::Rebalance: return "Rebalance";
    }
    return "?";
}

struct Move {
    MoveKind kind;
    Rat gain;  // strictly positive for every applied move
    CliqueVector pre, post;
    std::string detail;
    // part sizes before the move; for Rebalance ordered as (donor, receiver,
    // rest) so the sigma-shift identity can be replayed against the gain
    std::vector<int> pre_sizes;
};

using MoveLog = std::vector<Move>;

struct MaximizeResult {
    Graph graph;
    std::vector<std::vector<int>> parts;
    MoveLog log;
};

namespace detail {

struct Candidate {
    Graph graph;
    std::vector<std::vector<int>> parts;
    std::string detail;
    std::vector<int> pre_sizes;
};

inline std::vector<std::pair<int, int>> edges_outside_part(const Graph& g, const std::vector<int>& part) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : part) in[v] = 1;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (!(in[u] && in[v])) es.emplace_back(u, v);
    return es;
}

/// Target for a relocation: the smallest part with |V_j| < n/r, ties by
/// lowest index.
inline int relocation_target(const std::vector<std::vector<int>>& parts, int n, int r) {
    int best = -1;
    for (int j = 1; j <= r; ++j) {
        if (Rat(static_cast<long>(parts[j].size())) >= Rat(n) / Rat(r)) continue;
        if (best < 0 || parts[j].size() < parts[best].size()) best = j;
    }
    return best;
}

inline Candidate relocate(const Graph& g, const std::vector<std::vector<int>>& parts, int v, int r) {
    int n = g.vertex_count();
    int j = relocation_target(parts, n, r);
    if (j < 0) throw Error("internal: no undersized part for relocation");
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges())
        if (a != v && b != v) es.emplace_back(a, b);
    for (int i = 1; i <= r; ++i) {
        if (i == j) continue;
        for (int u : parts[i]) es.emplace_back(std::min(u, v), std::max(u, v));
    }
    Candidate c{Graph(n, std::move(es)), parts, ""};
    auto& v0 = c.parts[0];
    v0.erase(std::remove(v0.begin(), v0.end(), v), v0.end());
    c.parts[j].push_back(v);
    std::sort(c.parts[j].begin(), c.parts[j].end());
    c.detail = "vertex " + std::to_string(v) + " -> V_" + std::to_string(j);
    return c;
}

inline std::vector<std::pair<int, int>> ascending_cycle_edges(const std::vector<int>& part) {
    std::vector<std::pair<int, int>> es;
    int m = static_cast<int>(part.size());
    for (int i = 0; i + 1 < m; ++i) es.emplace_back(part[i], part[i + 1]);
    if (m >= 3) es.emplace_back(part[0], part[m - 1]);
    return es;
}

}  // namespace detail

/// Local search over (eta,r)-extremal graphs. Moves are tried in fixed
/// priority order; within a class, candidates are scanned in lexicographic
/// vertex order and the first strictly improving one is applied. A class
/// with candidates but no improving one aborts (n too small for the move
/// gain guarantees). Terminates r-radical.
inline MaximizeResult maximize_clique_fn(int n, int r, const CliqueFunction& f, const Graph& start,
                                         const std::vector<std::vector<int>>& start_parts,
                                         std::optional<Rat> eta_opt = std::nullopt) {
    if (f.order < 2 || f.order > r) throw BadCliqueFunction("order must satisfy 2 <= k <= r");
    if (start.vertex_count() != n) throw BadInput("start graph has wrong vertex count");
    Rat eta = eta_opt ? *eta_opt : default_eta(r);
    auto cert = check_extremal(start, start_parts, eta, r);
    if (!cert.passes()) throw NotExtremal("start graph fails the (eta,r)-extremality certificate");

    MaximizeResult res{start, cert.parts, {}};
    auto score = [&](const Graph& g) { return f.eval(clique_vector(g, f.order)); };
    Rat current = score(res.graph);
    CliqueVector current_vec = clique_vector(res.graph, f.order);

    for (;;) {
        bool applied = false;
        for (MoveKind kind : {MoveKind::EdgeAdd, MoveKind::Type1Relocate, MoveKind::Type2Relocate,
                              MoveKind::PathRepair, MoveKind::Rebalance}) {
            std::vector<detail::Candidate> cands;
            const auto& parts = res.parts;
            const Graph& g = res.graph;
            switch (kind) {
                case MoveKind::EdgeAdd: {
                    std::vector<int> part_of(n, 0);
                    for (int i = 1; i <= r; ++i)
                        for (int v : parts[i]) part_of[v] = i;
                    for (int u = 0; u < n; ++u)
                        for (int v = u + 1; v < n; ++v) {
                            if (part_of[u] == 0 || part_of[v] == 0) continue;
                            if (part_of[u] == part_of[v] || g.adjacent(u, v)) continue;
                            detail::Candidate c{g.with_edge(u, v), parts,
                                                "edge {" + std::to_string(u) + ", " + std::to_string(v) + "}"};
                            cands.push_back(std::move(c));
                        }
                    break;
                }
                case MoveKind::Type1Relocate:
                case MoveKind::Type2Relocate: {
                    VertexType want = kind == MoveKind::Type1Relocate ? VertexType::Type1 : VertexType::Type2;
                    for (int v : parts[0])
                        if (cert.vertex_types.at(v).type == want) cands.push_back(detail::relocate(g, parts, v, r));
                    break;
                }
                case MoveKind::PathRepair: {
                    for (int i = 1; i <= r; ++i) {
                        auto part = parts[i];
                        int m = static_cast<int>(part.size());
                        int e2 = 0;
                        for (int a = 0; a < m; ++a)
                            for (int b = a + 1; b < m; ++b)
                                if (g.adjacent(part[a], part[b])) ++e2;
                        if (e2 >= m) continue;
                        if (e2 == m - 1 && m < 4) continue;  // closing the path would force a triangle
                        auto es = detail::edges_outside_part(g, part);
                        for (int t = 0; t < e2; ++t) es.emplace_back(part[t], part[t + 1]);
                        std::string what;
                        if (e2 == m - 1) {
                            es.emplace_back(part[0], part[m - 1]);  // close the spanning path
                            what = "close cycle in V_" + std::to_string(i);
                        } else {
                            es.emplace_back(part[e2], part[e2 + 1]);  // extend the path
                            what = "extend path in V_" + std::to_string(i);
                        }
                        cands.push_back({Graph(n, std::move(es)), parts, what});
                    }
                    break;
                }
                case MoveKind::Rebalance: {
                    int imax = 1, imin = 1;
                    for (int i = 2; i <= r; ++i) {
                        if (parts[i].size() > parts[imax].size()) imax = i;
                        if (parts[i].size() < parts[imin].size()) imin = i;
                    }
                    if (parts[imax].size() < parts[imin].size() + 2) break;
                    if (parts[imax].size() - 1 < 4 || parts[imin].size() + 1 < 4) break;
                    auto new_parts = parts;
                    int v = new_parts[imax].back();
                    new_parts[imax].pop_back();
                    new_parts[imin].push_back(v);
                    std::sort(new_parts[imin].begin(), new_parts[imin].end());
                    std::vector<std::pair<int, int>> es;
                    for (int i = 1; i <= r; ++i)
                        for (int j = i + 1; j <= r; ++j)
                            for (int a : new_parts[i])
                                for (int b : new_parts[j]) es.emplace_back(std::min(a, b), std::max(a, b));
                    for (int i = 1; i <= r; ++i) {
                        std::vector<std::pair<int, int>> intra;
                        if (i == imax || i == imin) {
                            intra = detail::ascending_cycle_edges(new_parts[i]);
                        } else {
                            std::vector<char> in(n, 0);
                            for (int u : parts[i]) in[u] = 1;
                            for (auto [a, b] : g.edges())
                                if (in[a] && in[b]) intra.emplace_back(a, b);
                        }
                        es.insert(es.end(), intra.begin(), intra.end());
                    }
                    std::vector<int> ordered{static_cast<int>(parts[imax].size()),
                                             static_cast<int>(parts[imin].size())};
                    for (int i = 1; i <= r; ++i)
                        if (i != imax && i != imin) ordered.push_back(static_cast<int>(parts[i].size()));
                    cands.push_back({Graph(n, std::move(es)), std::move(new_parts),
                                     "vertex " + std::to_string(v) + ": V_" + std::to_string(imax) +
                                         " -> V_" + std::to_string(imin),
                                     std::move(ordered)});
                    break;
                }
            }
            if (cands.empty()) continue;
            bool improved = false;
            for (auto& c : cands) {
                CliqueVector post = clique_vector(c.graph, f.order);
                Rat gain = f.eval(post) - current;
                if (gain <= 0) continue;
                auto next_cert = check_extremal(c.graph, c.parts, eta, r);
                if (!next_cert.passes())
                    throw Error("internal: applied move left the certificate failing");
                if (c.pre_sizes.empty())
                    for (int i = 1; i <= r; ++i) c.pre_sizes.push_back(static_cast<int>(parts[i].size()));
                res.log.push_back({kind, gain, current_vec, post, c.detail, c.pre_sizes});
                res.graph = std::move(c.graph);
                res.parts = std::move(c.parts);
                cert = std::move(next_cert);
                current = current + gain;
                current_vec = std::move(post);
                improved = true;
                break;
            }
            if (!improved)
                throw NonImprovingMove(std::string(move_kind_name(kind)) +
                                       " has candidates but none improves F (n below the move-gain threshold)");
            applied = true;
            break;
        }
        if (!applied) break;
    }
    if (!is_radical(res.graph, res.parts))
        throw Error("internal: maximizer terminated on a non-radical graph");
    return res;
}

struct RadicalVerdict {
    bool isomorphic = false;
    std::vector<int> mapping;          // vertex map onto j_graph(n, r) when isomorphic
    int not_single_cycle_part = -1;    // part index whose induced graph splits into >= 2 cycles
};

/// A radical graph whose parts are single cycles is a relabeled J_r(n); a
/// part splitting into several cycles certifies the clique complex was not a
/// homology manifold.
inline RadicalVerdict radical_implies_j(const Graph& h, const std::vector<std::vector<int>>& parts) {
    int r = static_cast<int>(parts.size()) - 1;
    if (!is_radical(h, parts)) throw NotExtremal("input is not r-radical");
    int n = h.vertex_count();
    RadicalVerdict verdict;
    std::vector<std::vector<int>> walks;  // one cycle walk per part
    for (int i = 1; i <= r; ++i) {
        auto part = detail::sorted_copy(parts[i]);
        // walk the 2-regular induced graph from the smallest vertex
        std::vector<int> walk{part[0]};
        int prev = -1, cur = part[0];
        do {
            std::vector<int> nbrs;
            for (int u : part)
                if (u != cur && h.adjacent(cur, u)) nbrs.push_back(u);
            int next = -1;
            for (int u : nbrs)
                if (u != prev && (next < 0 || u < next)) next = u;
            if (next < 0) next = prev;  // 2-cycle cannot happen (simple graph)
            prev = cur;
            cur = next;
            if (cur != walk[0]) walk.push_back(cur);
        } while (cur != walk[0]);
        if (walk.size() != part.size()) {
            verdict.not_single_cycle_part = i;
            return verdict;
        }
        walks.push_back(std::move(walk));
    }
    // larger parts first, matching the reference construction's block order
    std::stable_sort(walks.begin(), walks.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    auto ref = j_graph(n, r);
    std::vector<int> map(n, -1);
    int base = 0;
    for (const auto& walk : walks) {
        for (std::size_t t = 0; t < walk.size(); ++t) map[walk[t]] = base + static_cast<int>(t);
        base += static_cast<int>(walk.size());
    }
    if (!is_isomorphism(h, ref.graph, map))
        throw Error("internal: cycle walk did not produce an isomorphism");
    verdict.isomorphic = true;
    verdict.mapping = std::move(map);
    return verdict;
}

}  // namespace flagtri
