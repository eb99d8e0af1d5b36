#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "constructions.hpp"
#include "errors.hpp"
#include "face_vectors.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "isomorphism.hpp"
#include "search.hpp"
#include "simplicial_complex.hpp"
#include "util.hpp"

namespace flagtri {

enum class Verdict { AllHold, ViolationAt, NotApplicable };

struct Comparison {
    std::string label;  // e.g. "f_2"
    Int value, bound, slack;  // slack = bound - value
};

struct VerificationReport {
    std::string subject;
    std::string family;  // reference family parameters
    std::string kind;    // "f", "h", "g", "gamma" or "all"
    std::vector<Comparison> comparisons;
    Verdict verdict = Verdict::AllHold;
    int violation_index = -1;
    std::string reason;  // populated for NotApplicable
    std::uint64_t input_hash = 0;
    bool isomorphism_checked = false;
    bool isomorphic = false;
    std::vector<Rat> ratios;  // ratio-chain mode
    bool chain_monotone = true;
};

namespace detail {

struct VectorSet {
    std::vector<Int> f, h, g;
    std::optional<std::vector<Int>> gamma;
};

inline VectorSet derive_vectors(const SimplicialComplex& k) {
    VectorSet vs;
    vs.f = k.f_vector();
    int d = static_cast<int>(vs.f.size()) - 1;
    vs.h = f_to_h(vs.f, d);
    vs.g = h_to_g(vs.h);
    if (dehn_sommerville_holds(vs.h)) vs.gamma = h_to_gamma(vs.h);
    return vs;
}

inline std::string certify_odd_manifold(const SimplicialComplex& m, int r) {
    if (!m.is_flag()) return "complex is not flag";
    if (m.dim() != 2 * r - 1) return "dimension is not 2r - 1";
    if (m.vertex_count() < 4 * r) return "fewer than 4r vertices, reference graph undefined";
    try {
        if (!is_homology_manifold(m).is_manifold) return "not a homology manifold";
    } catch (const NotPure&) {
        return "complex is not pure";
    }
    return "";
}

}  // namespace detail

/// Per-index comparison of f/h/g/gamma against the reference odd-dimensional
/// construction on the same vertex count. Any slack-0 index triggers an
/// isomorphism test against the reference graph.
inline VerificationReport verify_upper_bounds(const SimplicialComplex& m, int r,
                                              const std::string& subject = "input") {
    VerificationReport rep;
    rep.subject = subject;
    rep.kind = "all";
    rep.input_hash = fnv1a64(m.serialize());
    if (std::string why = detail::certify_odd_manifold(m, r); !why.empty()) {
        rep.verdict = Verdict::NotApplicable;
        rep.reason = why;
        return rep;
    }
    int n = m.vertex_count(), d = 2 * r;
    rep.family = "j_graph(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
    auto ref_graph = j_graph(n, r).graph;
    auto mv = detail::derive_vectors(m);
    auto rv = detail::derive_vectors(SimplicialComplex::clique_complex(ref_graph));

    auto add = [&](const std::string& name, const Int& value, const Int& bound) {
        rep.comparisons.push_back({name, value, bound, bound - value});
    };
    for (int i = 1; i <= d - 1; ++i) add("f_" + std::to_string(i), mv.f[i + 1], rv.f[i + 1]);
    for (int i = 2; i <= d - 2; ++i) add("h_" + std::to_string(i), mv.h[i], rv.h[i]);
    for (int i = 2; i <= d / 2; ++i) add("g_" + std::to_string(i), mv.g[i], rv.g[i]);
    if (mv.gamma && rv.gamma)
        for (int i = 2; i <= d / 2; ++i)
            add("gamma_" + std::to_string(i), (*mv.gamma)[i], (*rv.gamma)[i]);

    bool any_equality = false;
    for (std::size_t i = 0; i < rep.comparisons.size(); ++i) {
        if (rep.comparisons[i].slack < 0 && rep.verdict == Verdict::AllHold) {
            rep.verdict = Verdict::ViolationAt;
            rep.violation_index = static_cast<int>(i);
        }
        if (rep.comparisons[i].slack == 0) any_equality = true;
    }
    if (any_equality) {
        rep.isomorphism_checked = true;
        rep.isomorphic = are_isomorphic(m.one_skeleton(), ref_graph);
    }
    return rep;
}

/// Ratio chain 1 = v_1(M)/v_1(J) >= v_2(M)/v_2(J) >= ... for the chosen
/// vector kind; a broken chain is a recorded finding, not an error.
inline VerificationReport verify_ratio_chain(const SimplicialComplex& m, int r, const std::string& kind,
                                             const std::string& subject = "input") {
    VerificationReport rep;
    rep.subject = subject;
    rep.kind = kind;
    rep.input_hash = fnv1a64(m.serialize());
    if (std::string why = detail::certify_odd_manifold(m, r); !why.empty()) {
        rep.verdict = Verdict::NotApplicable;
        rep.reason = why;
        return rep;
    }
    int n = m.vertex_count();
    rep.family = "j_graph(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
    auto mv = detail::derive_vectors(m);
    auto rv = detail::derive_vectors(SimplicialComplex::clique_complex(j_graph(n, r).graph));
    auto pick = [&](const detail::VectorSet& vs, int i) -> std::optional<Int> {
        if (kind == "f") return vs.f[i];          // f_{i-1}
        if (kind == "h") return vs.h[i];
        if (kind == "g") return i < static_cast<int>(vs.g.size()) ? std::optional<Int>(vs.g[i]) : std::nullopt;
        if (kind == "gamma") {
            if (!vs.gamma || i >= static_cast<int>(vs.gamma->size())) return std::nullopt;
            return (*vs.gamma)[i];
        }
        throw BadInput("unknown vector kind: " + kind);
    };
    if (kind == "gamma" && !mv.gamma) {
        rep.verdict = Verdict::NotApplicable;
        rep.reason = "h-vector not palindromic, gamma undefined";
        return rep;
    }
    for (int i = 1; i <= r; ++i) {
        auto a = pick(mv, i), b = pick(rv, i);
        if (!a || !b) break;
        if (*b == 0) break;
        rep.ratios.push_back(Rat(*a) / Rat(*b));
    }
    for (std::size_t i = 0; i + 1 < rep.ratios.size(); ++i)
        if (rep.ratios[i] < rep.ratios[i + 1]) {
            rep.chain_monotone = false;
            if (rep.verdict == Verdict::AllHold) {
                rep.verdict = Verdict::ViolationAt;
                rep.violation_index = static_cast<int>(i + 1);
            }
        }
    return rep;
}

/// Even-dimensional comparison against the two-apex construction: f_0..f_2r
/// and gamma_0..gamma_r of a flag homology 2r-sphere versus j_star(n, r).
inline VerificationReport verify_even_dim(const SimplicialComplex& m, int r,
                                          const std::string& subject = "input") {
    VerificationReport rep;
    rep.subject = subject;
    rep.kind = "all";
    rep.input_hash = fnv1a64(m.serialize());
    auto why = [&]() -> std::string {
        if (!m.is_flag()) return "complex is not flag";
        if (m.dim() != 2 * r) return "dimension is not 2r";
        if (m.vertex_count() - 2 < 4 * r) return "too few vertices, reference graph undefined";
        if (!is_homology_sphere(m)) return "not a homology sphere";
        return "";
    }();
    if (!why.empty()) {
        rep.verdict = Verdict::NotApplicable;
        rep.reason = why;
        return rep;
    }
    int n = m.vertex_count();
    rep.family = "j_star(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
    auto mv = detail::derive_vectors(m);
    auto rv = detail::derive_vectors(SimplicialComplex::clique_complex(j_star(n, r).graph));
    auto add = [&](const std::string& name, const Int& value, const Int& bound) {
        rep.comparisons.push_back({name, value, bound, bound - value});
    };
    for (int i = 0; i <= 2 * r; ++i) add("f_" + std::to_string(i), mv.f[i + 1], rv.f[i + 1]);
    if (mv.gamma && rv.gamma)
        for (int i = 0; i <= r; ++i) add("gamma_" + std::to_string(i), (*mv.gamma)[i], (*rv.gamma)[i]);
    for (std::size_t i = 0; i < rep.comparisons.size(); ++i)
        if (rep.comparisons[i].slack < 0 && rep.verdict == Verdict::AllHold) {
            rep.verdict = Verdict::ViolationAt;
            rep.violation_index = static_cast<int>(i);
        }
    return rep;
}

/// Swaps the induced suspension-of-a-cycle block of j_star(n, r) (one part
/// plus both apexes) for an arbitrary flag homology 2-sphere on the same
/// vertex count. The result keeps the clique vector of j_star(n, r).
inline Graph non_uniqueness_variant(int r, int n, const SimplicialComplex& replacement) {
    auto base = j_star(n, r);
    int s = replacement.vertex_count();
    int part_idx = -1;
    for (int i = 0; i < r; ++i)
        if (static_cast<int>(base.parts[i].size()) + 2 == s) {
            part_idx = i;
            break;
        }
    if (part_idx < 0)
        throw BadReplacement("no part has " + std::to_string(s) + " - 2 vertices");
    if (!replacement.is_flag() || replacement.dim() != 2 || !is_homology_sphere(replacement))
        throw BadReplacement("replacement is not a certified flag homology 2-sphere");

    std::vector<int> block = base.parts[part_idx];  // ascending by construction
    block.push_back(n - 2);
    block.push_back(n - 1);  // the two apexes map to the replacement's last labels
    std::vector<char> in_block(n, 0);
    for (int v : block) in_block[v] = 1;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : base.graph.edges())
        if (!(in_block[u] && in_block[v])) es.emplace_back(u, v);
    for (const auto& e : replacement.faces_of_dim(1)) {
        int u = block[e[0]], v = block[e[1]];
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    Graph out(n, std::move(es));
    auto got = clique_vector(out, 2 * r + 2);
    auto want = clique_vector(base.graph, 2 * r + 2);
    if (got.counts != want.counts)
        throw Error("internal: variant clique vector differs from the reference");
    return out;
}

struct GrowthRow {
    int n = 0;
    Int count;   // e_{r+1}(J_r(n))
    Rat ratio;   // count / n^r
};

/// Exact (r+1)-clique counts of J_r(n) over a range of n, with the n^r
/// normalization that should stay bounded.
inline std::vector<GrowthRow> growth_probe(int r, int n_min, int n_max) {
    if (r < 1) throw BadInput("r must be positive");
    std::vector<GrowthRow> rows;
    for (int n = std::max(n_min, 4 * r); n <= n_max; ++n) {
        GrowthRow row;
        row.n = n;
        row.count = clique_vector(j_graph(n, r).graph, r + 1).e(r + 1);
        row.ratio = Rat(row.count) / Rat(int_pow(n, r));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- JSON serialization (versioned schema, one report per line) ----

inline nlohmann::json to_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["subject"] = rep.subject;
    j["family"] = rep.family;
    j["kind"] = rep.kind;
    j["input_hash"] = rep.input_hash;
    switch (rep.verdict) {
        case Verdict::AllHold: j["verdict"] = "AllHold"; break;
        case Verdict::ViolationAt:
            j["verdict"] = "ViolationAt";
            j["violation_index"] = rep.violation_index;
            break;
        case Verdict::NotApplicable:
            j["verdict"] = "NotApplicable";
            j["reason"] = rep.reason;
            break;
    }
    auto& comps = j["comparisons"] = nlohmann::json::array();
    for (const auto& c : rep.comparisons)
        comps.push_back({{"label", c.label},
                         {"value", c.value.get_str()},
                         {"bound", c.bound.get_str()},
                         {"slack", c.slack.get_str()}});
    if (!rep.ratios.empty()) {
        auto& rs = j["ratios"] = nlohmann::json::array();
        for (const auto& q : rep.ratios) rs.push_back(q.get_str());
        j["chain_monotone"] = rep.chain_monotone;
    }
    if (rep.isomorphism_checked) j["isomorphic_to_reference"] = rep.isomorphic;
    return j;
}

inline nlohmann::json to_json(const SearchFinding& fd) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = fd.n;
    auto& es = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : fd.graph.edges()) es.push_back({u, v});
    auto& fv = j["f"] = nlohmann::json::array();
    for (const auto& x : fd.f) fv.push_back(x.get_str());
    if (fd.has_reference) {
        auto& rv = j["reference_f"] = nlohmann::json::array();
        for (const auto& x : fd.reference_f) rv.push_back(x.get_str());
        j["violation"] = fd.violation;
    }
    if (fd.has_ratio) j["ratio"] = fd.ratio.get_str();
    return j;
}

}  // namespace flagtri
