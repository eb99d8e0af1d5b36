#pragma once

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "util.hpp"

namespace flagtri {

namespace poly {

// Dense integer polynomials, index = exponent.
using Poly = std::vector<Int>;

inline Poly mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

/// (c0 + c1 x)^e
inline Poly binomial_power(const Int& c0, const Int& c1, int e) {
    Poly p{1};
    Poly base{c0, c1};
    for (int i = 0; i < e; ++i) p = mul(p, base);
    return p;
}

}  // namespace poly

/// f -> h via sum_i f_{i-1} x^i (1-x)^{d-i} = sum_i h_i x^i.
/// Input is (f_{-1}, ..., f_{d-1}) of length d+1 with f_{-1} = 1.
inline std::vector<Int> f_to_h(const std::vector<Int>& f, int d) {
    if (d < 0 || static_cast<int>(f.size()) != d + 1) throw BadLength("f must have length d+1");
    if (f[0] != 1) throw BadLength("f_{-1} must be 1");
    poly::Poly acc(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        poly::Poly term = poly::binomial_power(1, -1, d - i);  // (1-x)^{d-i}
        for (int t = 0; t < static_cast<int>(term.size()); ++t) acc[i + t] += f[i] * term[t];
    }
    return acc;
}

/// h -> f via f_i = sum_{j=0}^{i+1} C(d-j, i+1-j) h_j; exact inverse of f_to_h.
inline std::vector<Int> h_to_f(const std::vector<Int>& h, int d) {
    if (d < 0 || static_cast<int>(h.size()) != d + 1) throw BadLength("h must have length d+1");
    std::vector<Int> f(d + 1, 0);
    for (int i = -1; i <= d - 1; ++i) {
        Int s = 0;
        for (int j = 0; j <= i + 1; ++j) s += binomial(d - j, i + 1 - j) * h[j];
        f[i + 1] = s;
    }
    return f;
}

/// Dehn-Sommerville: h_i = h_{d-i}.
inline bool dehn_sommerville_holds(const std::vector<Int>& h) {
    std::size_t d = h.size();
    for (std::size_t i = 0; i < d / 2; ++i)
        if (h[i] != h[d - 1 - i]) return false;
    return true;
}

/// gamma from a palindromic h: sum h_i x^i = sum gamma_i x^i (x+1)^{d-2i}.
inline std::vector<Int> h_to_gamma(const std::vector<Int>& h) {
    if (h.empty()) throw BadLength("empty h");
    if (!dehn_sommerville_holds(h))
        throw NotPalindromic("gamma is defined only for palindromic h (Eulerian complexes)");
    int d = static_cast<int>(h.size()) - 1;
    poly::Poly rem(h);
    std::vector<Int> gamma;
    for (int i = 0; i <= d / 2; ++i) {
        Int gi = rem[i];
        gamma.push_back(gi);
        poly::Poly basis = poly::binomial_power(1, 1, d - 2 * i);  // (x+1)^{d-2i}
        for (int t = 0; t < static_cast<int>(basis.size()); ++t) rem[i + t] -= gi * basis[t];
    }
    for (const Int& c : rem)
        if (c != 0) throw Error("internal: gamma expansion left a nonzero remainder");
    return gamma;
}

/// g_0 = 1, g_i = h_i - h_{i-1} for 1 <= i <= floor(d/2).
inline std::vector<Int> h_to_g(const std::vector<Int>& h) {
    if (h.empty()) throw BadLength("empty h");
    int d = static_cast<int>(h.size()) - 1;
    std::vector<Int> g{1};
    for (int i = 1; i <= d / 2; ++i) g.push_back(h[i] - h[i - 1]);
    return g;
}

/// F(G) = c_k e_k(G) + ... + c_1 e_1(G) + c_0 with exact rational
/// coefficients and c_k > 0.
struct CliqueFunction {
    int order;                  // k >= 1
    std::vector<Rat> coeffs;    // coeffs[i] = c_i, i = 0..k

    /// Constructed from the coefficient list written high to low: c_k,...,c_0.
    static CliqueFunction from_high_to_low(std::vector<Rat> high_to_low) {
        if (high_to_low.size() < 2) throw BadCliqueFunction("need at least c_1 and c_0");
        CliqueFunction f;
        f.order = static_cast<int>(high_to_low.size()) - 1;
        f.coeffs.assign(high_to_low.rbegin(), high_to_low.rend());
        if (f.coeffs[f.order] <= 0) throw BadCliqueFunction("leading coefficient must be positive");
        return f;
    }

    Rat eval(const CliqueVector& e) const {
        Rat s = coeffs[0];
        for (int i = 1; i <= order; ++i) s += coeffs[i] * Rat(e.e(i));
        return s;
    }

    Rat eval(const Graph& g) const { return eval(clique_vector(g, order)); }
};

inline Rat eval_clique_function(const CliqueFunction& f, const CliqueVector& e) {
    return f.eval(e);
}

/// Elementary symmetric polynomial sigma_j of the given values.
inline Int elementary_symmetric(const std::vector<int>& xs, int j) {
    if (j < 0) return 0;
    std::vector<Int> dp(j + 1, 0);
    dp[0] = 1;
    for (int x : xs)
        for (int t = std::min<int>(j, static_cast<int>(dp.size()) - 1); t >= 1; --t) dp[t] += dp[t - 1] * x;
    return dp[j];
}

/// e_l for the class of complete multipartite graphs whose parts induce
/// triangle-free, max-degree-2 subgraphs with as many intra edges as
/// vertices: e_l = sum_j C(j, l-j) sigma_j(part sizes).
inline Int multipartite_clique_count(const std::vector<int>& parts, const std::vector<int>& intra_edges, int l) {
    if (parts.size() != intra_edges.size()) throw BadInput("parts/intra_edges length mismatch");
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (intra_edges[i] != parts[i])
            throw OutOfClass("formula requires e_2(part) = |part| for every part");
    if (l < 0) return 0;
    Int s = 0;
    for (int j = 0; j <= l; ++j) s += binomial(j, l - j) * elementary_symmetric(parts, j);
    return s;
}

/// sigma_j(x_1-1, x_2+1, x_3, ...) - sigma_j(x_1, ..., x_r)
///   = (x_1 - x_2 - 1) * sigma_{j-2}(x_3, ..., x_r).
inline Int sigma_shift_delta(const std::vector<int>& parts, int j) {
    if (parts.size() < 2) throw BadInput("need at least two parts");
    if (j < 2) return 0;
    std::vector<int> rest(parts.begin() + 2, parts.end());
    return Int(parts[0] - parts[1] - 1) * elementary_symmetric(rest, j - 2);
}

/// Coefficients c'_j with F(G) = sum_j c'_j sigma_j(part sizes) on the
/// multipartite class above: c'_j = sum_l c_l C(j, l-j).
inline std::vector<Rat> clique_fn_sigma_coeffs(const CliqueFunction& f) {
    std::vector<Rat> out(f.order + 1, 0);
    for (int j = 0; j <= f.order; ++j)
        for (int l = 0; l <= f.order; ++l) out[j] += f.coeffs[l] * Rat(binomial(j, l - j));
    return out;
}

}  // namespace flagtri
