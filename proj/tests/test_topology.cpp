#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "flagtri/constructions.hpp"
#include "flagtri/homology.hpp"
#include "flagtri/simplicial_complex.hpp"

using namespace flagtri;

static SimplicialComplex boundary_of_simplex(int d) {
    // all d+1 facets of size d+1 among d+2 vertices
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip < d + 2; ++skip) {
        std::vector<int> f;
        for (int v = 0; v < d + 2; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(d + 2, facets);
}

TEST_CASE("downward closure and basic queries") {
    auto k = SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}});
    CHECK(k.dim() == 2);
    CHECK(k.f_vector() == std::vector<Int>{1, 4, 4, 1});
    CHECK(k.contains({0, 1}));
    CHECK(!k.contains({0, 3}));
    CHECK(!k.is_pure());
    auto facets = k.facets();
    CHECK(facets == std::vector<std::vector<int>>{{2, 3}, {0, 1, 2}});
}

TEST_CASE("clique complex matches the flag property") {
    auto k = SimplicialComplex::clique_complex(j_graph(8, 2).graph);
    CHECK(k.is_flag());
    CHECK(k.dim() == 3);
    // an empty triangle: C_4 boundary without the interior
    auto hollow = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(!hollow.is_flag());
}

TEST_CASE("links relabel compactly") {
    auto k = SimplicialComplex::clique_complex(j_graph(8, 2).graph);
    auto lk = k.link({0});
    CHECK(lk.vertex_count() == 6);
    CHECK(lk.dim() == 2);
    CHECK(lk.f_vector() == std::vector<Int>{1, 6, 12, 8});  // octahedron
}

TEST_CASE("smith normal form and divisibility") {
    // matrix with torsion Z/2: boundary of RP^2 handled below; here a direct case
    auto diag = smith_normal_form({{2, 4}, {6, 8}});
    REQUIRE(diag.size() == 2);
    CHECK(diag[0] == 2);
    CHECK(diag[1] == 4);
    CHECK(diag[1] % diag[0] == 0);
    CHECK(smith_normal_form({{0, 0}, {0, 0}}).empty());
}

TEST_CASE("reduced homology of spheres and the circle") {
    auto circle = SimplicialComplex::clique_complex(cycle(6));
    auto hp = homology(circle);
    CHECK(hp.reduced_betti(0) == 0);
    CHECK(hp.reduced_betti(1) == 1);
    CHECK(hp.torsion_free());
    CHECK(hp.matches_sphere(1));

    for (int d = 1; d <= 6; ++d) {
        auto hp_d = homology(boundary_of_simplex(d));
        CHECK(hp_d.matches_sphere(d));
    }

    auto oct = SimplicialComplex::clique_complex(j_star(6, 1).graph);
    CHECK(homology(oct).matches_sphere(2));
}

TEST_CASE("projective plane carries Z/2 torsion in dimension 1") {
    auto rp2 = load_complex("data/rp2_6.cplx");
    auto hp = homology(rp2);
    CHECK(hp.reduced_betti(0) == 0);
    CHECK(hp.reduced_betti(1) == 0);
    CHECK(hp.reduced_betti(2) == 0);
    CHECK(hp.torsion_at(1) == std::vector<Int>{2});
    CHECK(hp.torsion_at(2).empty());
}

TEST_CASE("torus homology") {
    auto t = load_complex("data/torus_7.cplx");
    auto hp = homology(t);
    CHECK(hp.reduced_betti(1) == 2);
    CHECK(hp.reduced_betti(2) == 1);
    CHECK(hp.torsion_free());
}

TEST_CASE("homology manifold certificate and failing face") {
    auto rp2 = load_complex("data/rp2_6.cplx");
    CHECK(is_homology_manifold(rp2).is_manifold);

    // two triangles glued at a vertex: the shared vertex fails
    auto wedge = SimplicialComplex::from_facets(5, {{0, 1, 2}, {0, 3, 4}});
    auto cert = is_homology_manifold(wedge);
    CHECK(!cert.is_manifold);
    REQUIRE(cert.failing_face.has_value());
    CHECK(*cert.failing_face == std::vector<int>{0});

    CHECK_THROWS_AS(is_homology_manifold(SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}})), NotPure);
}

TEST_CASE("sphere, eulerian and pseudomanifold predicates") {
    auto oct = SimplicialComplex::clique_complex(j_star(6, 1).graph);
    CHECK(is_homology_sphere(oct));
    CHECK(is_eulerian(oct));
    CHECK(is_weak_pseudomanifold(oct));

    auto rp2 = load_complex("data/rp2_6.cplx");
    CHECK(!is_homology_sphere(rp2));
    CHECK(!is_eulerian(rp2));  // reduced Euler characteristic is 0, sphere needs 1
    CHECK(is_weak_pseudomanifold(rp2));

    auto torus = load_complex("data/torus_7.cplx");
    CHECK(!is_homology_sphere(torus));
    CHECK(!is_eulerian(torus));
    CHECK(is_weak_pseudomanifold(torus));

    auto sphere16 = SimplicialComplex::clique_complex(j_graph(8, 2).graph);
    CHECK(is_homology_sphere(sphere16));
    CHECK(is_eulerian(sphere16));

    // two points form the 0-dimensional weak pseudomanifold
    CHECK(is_weak_pseudomanifold(SimplicialComplex::from_facets(2, {{0}, {1}})));
    CHECK(!is_weak_pseudomanifold(SimplicialComplex::from_facets(3, {{0}, {1}, {2}})));
}

TEST_CASE("disjoint cycles are a non-sphere manifold") {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : cycle(4).edges()) es.emplace_back(u, v);
    for (auto [u, v] : cycle(4).edges()) es.emplace_back(u + 4, v + 4);
    auto k = SimplicialComplex::clique_complex(Graph(8, std::move(es)));
    auto cert = is_homology_manifold(k);
    CHECK(cert.is_manifold);
    CHECK(!cert.connected);
    CHECK(!is_homology_sphere(k));
}

TEST_CASE("complex text round trip") {
    auto rp2 = load_complex("data/rp2_6.cplx");
    std::ostringstream os;
    write_complex_text(os, rp2);
    std::istringstream is(os.str());
    CHECK(read_complex_text(is) == rp2);
    std::istringstream bad("");
    CHECK_THROWS_AS(read_complex_text(bad), BadFormat);
}
