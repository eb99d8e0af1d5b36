#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "simplicial_complex.hpp"
#include "util.hpp"

namespace flagtri {

/// Reduced integer homology, one entry per dimension from -1 up. Torsion
/// coefficients per dimension form a divisibility chain (Smith normal form).
struct HomologyProfile {
    int top_dim = -2;                          // dim of the complex
    std::vector<long> betti;                   // betti[i+1] = rank of H~_i
    std::vector<std::vector<Int>> torsion;     // torsion[i+1] = torsion of H~_i

    long reduced_betti(int i) const {
        int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
        return betti[idx];
    }

    std::vector<Int> torsion_at(int i) const {
        int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(torsion.size())) return {};
        return torsion[idx];
    }

    bool torsion_free() const {
        for (const auto& t : torsion)
            if (!t.empty()) return false;
        return true;
    }

    /// Matches the reduced homology of S^m (m >= -1).
    bool matches_sphere(int m) const {
        if (!torsion_free()) return false;
        for (int i = -1; i <= std::max(top_dim, m); ++i)
            if (reduced_betti(i) != (i == m ? 1 : 0)) return false;
        return true;
    }
};

/// Smith normal form diagonal (non-negative, divisibility chain) of an
/// integer matrix; exact unbounded arithmetic, pivoting on the entry of
/// minimal absolute value.
inline std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find pivot of minimal |value| in the remaining block
        std::size_t pr = t, pc = t;
        bool found = false;
        Int bestabs = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                Int ab = abs(a[i][j]);
                if (!found || ab < bestabs) {
                    found = true;
                    bestabs = ab;
                    pr = i;
                    pc = j;
                }
            }
        if (!found) break;
        std::swap(a[t], a[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(a[t], a[i]);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    dirty = true;
                }
            }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    // enforce the divisibility chain d_i | d_{i+1}
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] == 0) continue;
            Int g = gcd(diag[i], diag[i + 1]);
            diag[i + 1] = diag[i] * diag[i + 1] / g;
            diag[i] = g;
            again = true;
        }
    }
    return diag;
}

/// Boundary matrix of C_k -> C_{k-1}; k = 0 gives the augmentation row.
inline std::vector<std::vector<Int>> boundary_matrix(const SimplicialComplex& k, int dim) {
    const auto& domain = k.faces_of_dim(dim);
    if (dim == 0) {
        std::vector<std::vector<Int>> m(1, std::vector<Int>(domain.size(), 1));
        return m;
    }
    const auto& range = k.faces_of_dim(dim - 1);
    std::vector<std::vector<Int>> m(range.size(), std::vector<Int>(domain.size(), 0));
    for (std::size_t c = 0; c < domain.size(); ++c) {
        const auto& face = domain[c];
        int sign = 1;
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < face.size(); ++i)
                if (i != drop) sub.push_back(face[i]);
            auto it = std::lower_bound(range.begin(), range.end(), sub);
            m[it - range.begin()][c] = sign;
            sign = -sign;
        }
    }
    return m;
}

/// Reduced integer homology via Smith normal form of the boundary matrices.
inline HomologyProfile homology(const SimplicialComplex& k) {
    HomologyProfile p;
    p.top_dim = k.dim();
    int q = k.dim();
    // rank and torsion of each boundary map
    std::vector<long> rank(q + 2, 0);            // rank[i] = rank of d_i, i = 0..q
    std::vector<std::vector<Int>> tors(q + 2);   // invariant factors > 1 of d_i
    for (int i = 0; i <= q; ++i) {
        auto diag = smith_normal_form(boundary_matrix(k, i));
        long r = 0;
        std::vector<Int> t;
        for (const Int& dgn : diag)
            if (dgn != 0) {
                ++r;
                if (dgn > 1) t.push_back(dgn);
            }
        rank[i] = r;
        tors[i] = t;
    }
    p.betti.assign(q + 2, 0);
    p.torsion.assign(q + 2, {});
    // H~_{-1}: rank 1 - rank(d_0); nonzero only for the irrelevant complex {∅}
    p.betti[0] = 1 - rank[0];
    for (int i = 0; i <= q; ++i) {
        long ci = mpz_get_si(k.face_count(i).get_mpz_t());
        p.betti[i + 1] = ci - rank[i] - rank[i + 1];
        p.torsion[i + 1] = tors[i + 1];
    }
    return p;
}

struct ManifoldCertificate {
    bool is_manifold = false;
    std::optional<std::vector<int>> failing_face;  // lexicographically smallest
    bool connected = false;
    int dimension = -1;
};

namespace detail {

inline bool link_is_sphere_like(const SimplicialComplex& lk, int m) {
    if (m == -1) return lk.dim() == -1 && lk.vertex_count() == 0;
    return homology(lk).matches_sphere(m);
}

template <typename Fn>
inline void for_each_face_lex(const SimplicialComplex& k, Fn&& fn) {
    std::vector<std::vector<int>> all;
    for (int d = 0; d <= k.dim(); ++d)
        for (const auto& f : k.faces_of_dim(d)) all.push_back(f);
    std::sort(all.begin(), all.end());
    for (const auto& f : all) fn(f);
}

}  // namespace detail

/// Link criterion: every nonempty face's link has the homology of the sphere
/// of complementary dimension. Connectivity is reported but not required.
inline ManifoldCertificate is_homology_manifold(const SimplicialComplex& k) {
    int q = k.dim();
    if (!k.is_pure()) throw NotPure("homology manifold check requires a pure complex");
    ManifoldCertificate cert;
    cert.dimension = q;
    cert.connected = k.is_connected();
    // fast scan, high dimensions first (facet-adjacent failures are cheap)
    bool ok = true;
    for (int d = q; d >= 0 && ok; --d)
        for (const auto& face : k.faces_of_dim(d)) {
            if (!detail::link_is_sphere_like(k.link(face), q - static_cast<int>(face.size()))) {
                ok = false;
                break;
            }
        }
    cert.is_manifold = ok;
    if (!ok) {
        // name the lexicographically smallest failing face
        std::optional<std::vector<int>> bad;
        detail::for_each_face_lex(k, [&](const std::vector<int>& face) {
            if (bad) return;
            if (!detail::link_is_sphere_like(k.link(face), q - static_cast<int>(face.size())))
                bad = face;
        });
        cert.failing_face = bad;
    }
    return cert;
}

/// Homology manifold whose own homology matches S^{dim}.
inline bool is_homology_sphere(const SimplicialComplex& k) {
    try {
        if (!is_homology_manifold(k).is_manifold) return false;
    } catch (const NotPure&) {
        return false;
    }
    return homology(k).matches_sphere(k.dim());
}

/// Every link, including lk(∅) = K, has the Euler characteristic of the
/// sphere of complementary dimension.
inline bool is_eulerian(const SimplicialComplex& k) {
    int q = k.dim();
    if (!k.is_pure()) throw NotPure("Eulerian check requires a pure complex");
    auto sphere_reduced_euler = [](int m) { return (m % 2 == 0) ? Int(1) : Int(-1); };
    if (k.reduced_euler() != sphere_reduced_euler(q)) return false;
    for (int d = 0; d <= q; ++d)
        for (const auto& face : k.faces_of_dim(d))
            if (k.link(face).reduced_euler() != sphere_reduced_euler(q - d - 1)) return false;
    return true;
}

/// Pure, and every face of dimension d-2 lies in exactly two facets.
inline bool is_weak_pseudomanifold(const SimplicialComplex& k) {
    int q = k.dim();
    if (q < 0) return false;
    if (!k.is_pure()) return false;
    auto facets = k.facets();
    if (q == 0) return facets.size() == 2;  // the (d-2)-face is the empty one
    for (const auto& ridge : k.faces_of_dim(q - 1)) {
        int count = 0;
        for (const auto& f : facets)
            if (std::includes(f.begin(), f.end(), ridge.begin(), ridge.end())) ++count;
        if (count != 2) return false;
    }
    return true;
}

}  // namespace flagtri
