#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "util.hpp"

namespace flagtri {

/// Explicit face lists by dimension, each face a sorted vertex tuple, faces
/// within a dimension sorted lexicographically. Closed under subsets; the
/// empty face is implicit (f_{-1} = 1). Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the downward closure of the given facets.
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets) {
        SimplicialComplex k;
        k.n_ = n;
        std::set<std::vector<int>> all;
        for (auto f : facets) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (int v : f)
                if (v < 0 || v >= n) throw BadInput("facet vertex out of range");
            // all nonempty subsets
            int s = static_cast<int>(f.size());
            for (unsigned mask = 1; mask < (1u << s); ++mask) {
                std::vector<int> sub;
                for (int b = 0; b < s; ++b)
                    if (mask & (1u << b)) sub.push_back(f[b]);
                all.insert(std::move(sub));
            }
        }
        for (const auto& face : all) {
            int d = static_cast<int>(face.size()) - 1;
            if (static_cast<int>(k.faces_.size()) <= d) k.faces_.resize(d + 1);
            k.faces_[d].push_back(face);
        }
        for (auto& lvl : k.faces_) std::sort(lvl.begin(), lvl.end());
        return k;
    }

    /// X(G): faces are exactly the cliques of g.
    static SimplicialComplex clique_complex(const Graph& g) {
        SimplicialComplex k;
        k.n_ = g.vertex_count();
        for_each_clique(g, [&](const std::vector<int>& c) {
            int d = static_cast<int>(c.size()) - 1;
            if (static_cast<int>(k.faces_.size()) <= d) k.faces_.resize(d + 1);
            k.faces_[d].push_back(c);
        });
        for (auto& lvl : k.faces_) std::sort(lvl.begin(), lvl.end());
        return k;
    }

    int vertex_count() const { return n_; }

    /// Max face dimension; -1 for a complex with no nonempty faces.
    int dim() const { return static_cast<int>(faces_.size()) - 1; }

    const std::vector<std::vector<int>>& faces_of_dim(int d) const {
        static const std::vector<std::vector<int>> empty;
        if (d < 0 || d > dim()) return empty;
        return faces_[d];
    }

    Int face_count(int d) const {
        if (d == -1) return 1;
        if (d < -1 || d > dim()) return 0;
        return static_cast<long>(faces_[d].size());
    }

    /// (f_{-1}, f_0, ..., f_{dim}).
    std::vector<Int> f_vector() const {
        std::vector<Int> f{1};
        for (const auto& lvl : faces_) f.push_back(static_cast<long>(lvl.size()));
        return f;
    }

    bool contains(const std::vector<int>& face) const {
        if (face.empty()) return true;
        int d = static_cast<int>(face.size()) - 1;
        if (d > dim()) return false;
        return std::binary_search(faces_[d].begin(), faces_[d].end(), face);
    }

    /// All maximal faces.
    std::vector<std::vector<int>> facets() const {
        std::vector<std::vector<int>> out;
        for (int d = 0; d <= dim(); ++d)
            for (const auto& face : faces_[d])
                if (!has_proper_coface(face)) out.push_back(face);
        return out;
    }

    bool is_pure() const {
        int q = dim();
        if (q < 0) return true;
        for (int d = 0; d < q; ++d)
            for (const auto& face : faces_[d])
                if (!has_proper_coface(face)) return false;
        return true;
    }

    /// lk(face), with vertices relabeled to a compact range; labels follow
    /// the ascending order of the original link vertices.
    SimplicialComplex link(const std::vector<int>& face) const {
        std::vector<std::vector<int>> link_faces;
        std::vector<int> verts;
        for (int d = 0; d <= dim(); ++d)
            for (const auto& tau : faces_[d]) {
                if (intersects(tau, face)) continue;
                std::vector<int> un;
                std::merge(tau.begin(), tau.end(), face.begin(), face.end(), std::back_inserter(un));
                if (contains(un)) {
                    link_faces.push_back(tau);
                    for (int v : tau) verts.push_back(v);
                }
            }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        SimplicialComplex out;
        out.n_ = static_cast<int>(verts.size());
        for (auto& tau : link_faces) {
            for (int& v : tau)
                v = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
            int d = static_cast<int>(tau.size()) - 1;
            if (static_cast<int>(out.faces_.size()) <= d) out.faces_.resize(d + 1);
            out.faces_[d].push_back(std::move(tau));
        }
        for (auto& lvl : out.faces_) std::sort(lvl.begin(), lvl.end());
        return out;
    }

    /// The 1-skeleton as a graph.
    Graph one_skeleton() const {
        std::vector<std::pair<int, int>> es;
        for (const auto& e : faces_of_dim(1)) es.emplace_back(e[0], e[1]);
        return Graph(n_, std::move(es));
    }

    /// True iff this complex equals the clique complex of its 1-skeleton.
    bool is_flag() const {
        SimplicialComplex x = clique_complex(one_skeleton());
        return faces_ == x.faces_ && n_ == x.n_;
    }

    /// Connectivity of the 1-skeleton, counting every vertex 0..n-1.
    bool is_connected() const {
        if (n_ <= 1) return true;
        std::vector<int> parent(n_);
        for (int v = 0; v < n_; ++v) parent[v] = v;
        std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
        for (const auto& e : faces_of_dim(1)) parent[find(e[0])] = find(e[1]);
        for (int v = 1; v < n_; ++v)
            if (find(v) != find(0)) return false;
        return true;
    }

    /// Reduced Euler characteristic, chi - 1.
    Int reduced_euler() const {
        Int chi = -1;
        int sign = 1;
        for (const auto& lvl : faces_) {
            chi += sign * static_cast<long>(lvl.size());
            sign = -sign;
        }
        return chi;
    }

    /// Stable serialization (used for certificate hashes).
    std::string serialize() const {
        std::ostringstream os;
        os << n_ << ";";
        for (const auto& face : facets()) {
            for (std::size_t i = 0; i < face.size(); ++i) os << (i ? " " : "") << face[i];
            os << ";";
        }
        return os.str();
    }

    bool operator==(const SimplicialComplex& o) const { return n_ == o.n_ && faces_ == o.faces_; }

private:
    bool has_proper_coface(const std::vector<int>& face) const {
        int d = static_cast<int>(face.size()) - 1;
        for (const auto& up : faces_of_dim(d + 1))
            if (std::includes(up.begin(), up.end(), face.begin(), face.end())) return true;
        return false;
    }

    static bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            if (a[i] < b[j]) ++i;
            else ++j;
        }
        return false;
    }

    int n_ = 0;
    std::vector<std::vector<std::vector<int>>> faces_;
};

/// Complex text format: first line "n", following lines are facets as
/// space-separated sorted vertex indices.
inline SimplicialComplex read_complex_text(std::istream& in) {
    std::string line;
    long n = -1;
    bool have_n = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        std::size_t used = 0;
        try {
            n = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw BadFormat("expected vertex count, got '" + tok + "'");
        }
        if (used != tok.size()) throw BadFormat("expected vertex count, got '" + tok + "'");
        have_n = true;
        break;
    }
    if (!have_n || n < 0) throw BadFormat("expected vertex count line");
    std::vector<std::vector<int>> facets;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> f;
        long v;
        while (ls >> v) f.push_back(static_cast<int>(v));
        std::string rest;
        if (ls.clear(), ls >> rest) throw BadFormat("bad face line '" + line + "'");
        if (!f.empty()) facets.push_back(std::move(f));
    }
    try {
        return SimplicialComplex::from_facets(static_cast<int>(n), facets);
    } catch (const BadInput& e) {
        throw BadFormat(e.what());
    }
}

inline void write_complex_text(std::ostream& out, const SimplicialComplex& k) {
    out << k.vertex_count() << "\n";
    for (const auto& face : k.facets()) {
        for (std::size_t i = 0; i < face.size(); ++i) out << (i ? " " : "") << face[i];
        out << "\n";
    }
}

inline SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    return read_complex_text(in);
}

}  // namespace flagtri
