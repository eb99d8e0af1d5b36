#include <catch2/catch_amalgamated.hpp>

#include "flagtri/constructions.hpp"
#include "flagtri/face_vectors.hpp"
#include "flagtri/graph.hpp"
#include "oracles.hpp"

using namespace flagtri;

static std::vector<Int> f_of(const Graph& g) {
    auto cv = clique_vector(g);
    return cv.counts;  // (e_0, e_1, ...) = (f_{-1}, f_0, ...)
}

TEST_CASE("boundary of the 4-simplex transforms to the all-ones h-vector") {
    // f = (1, 4, 6, 4) is the tetrahedron boundary, d = 3
    std::vector<Int> f{1, 4, 6, 4};
    auto h = f_to_h(f, 3);
    CHECK(h == std::vector<Int>{1, 1, 1, 1});
    CHECK(h_to_f(h, 3) == f);
}

TEST_CASE("cross polytope vectors") {
    auto f = f_of(j_graph(8, 2).graph);
    REQUIRE(f == std::vector<Int>{1, 8, 24, 32, 16});
    auto h = f_to_h(f, 4);
    CHECK(h == std::vector<Int>{1, 4, 6, 4, 1});
    CHECK(dehn_sommerville_holds(h));
    CHECK(h_to_gamma(h) == std::vector<Int>{1, 0, 0});
    CHECK(h_to_g(h) == std::vector<Int>{1, 3, 2});
}

TEST_CASE("J_2(12) derived vectors") {
    auto f = f_of(j_graph(12, 2).graph);
    REQUIRE(f == std::vector<Int>{1, 12, 48, 72, 36});
    auto h = f_to_h(f, 4);
    CHECK(h == std::vector<Int>{1, 8, 18, 8, 1});
    CHECK(h_to_gamma(h) == std::vector<Int>{1, 4, 4});
    CHECK(h_to_g(h) == std::vector<Int>{1, 7, 10});
}

TEST_CASE("f/h transforms are mutually inverse on random-ish inputs") {
    for (int d = 1; d <= 7; ++d) {
        std::vector<Int> h(d + 1);
        for (int i = 0; i <= d; ++i) h[i] = Int(i * i + 3 * i + 1) % 17;
        h[0] = 1;
        auto f = h_to_f(h, d);
        CHECK(f_to_h(f, d) == h);
    }
}

TEST_CASE("transform input validation") {
    CHECK_THROWS_AS(f_to_h({2, 3}, 1), BadLength);
    CHECK_THROWS_AS(f_to_h({1, 3, 3}, 1), BadLength);
    CHECK_THROWS_AS(h_to_gamma({1, 2, 3}), NotPalindromic);
}

TEST_CASE("h_1 equals n - d and gamma_1 equals n - 2d for the reference family") {
    for (int r : {2, 3})
        for (int n = 4 * r; n <= 18; ++n) {
            int d = 2 * r;
            auto f = f_of(j_graph(n, r).graph);
            auto h = f_to_h(f, d);
            CHECK(h[1] == n - d);
            auto gamma = h_to_gamma(h);
            CHECK(gamma[1] == n - 2 * d);
        }
}

TEST_CASE("clique function evaluation and validation") {
    auto f = CliqueFunction::from_high_to_low({Rat(1), Rat(-2), Rat(3)});
    CHECK(f.order == 2);
    // F = e_2 - 2 e_1 + 3 on C_5: 5 - 10 + 3
    CHECK(f.eval(cycle(5)) == Rat(-2));
    CHECK_THROWS_AS(CliqueFunction::from_high_to_low({Rat(1)}), BadCliqueFunction);
    CHECK_THROWS_AS(CliqueFunction::from_high_to_low({Rat(0), Rat(1)}), BadCliqueFunction);
    CHECK_THROWS_AS(CliqueFunction::from_high_to_low({Rat(-1), Rat(1)}), BadCliqueFunction);
}

TEST_CASE("elementary symmetric polynomials match direct summation") {
    std::vector<int> xs{4, 4, 5, 7, 2};
    for (int j = 0; j <= 6; ++j) CHECK(elementary_symmetric(xs, j) == oracles::direct_sigma(xs, j));
}

TEST_CASE("multipartite clique count formula against brute force") {
    // parts (4, 4): l = 2 -> 24, l = 4 -> 16
    CHECK(multipartite_clique_count({4, 4}, {4, 4}, 2) == 24);
    CHECK(multipartite_clique_count({4, 4}, {4, 4}, 4) == 16);
    for (int r : {2, 3})
        for (int n = 4 * r; n <= 14; ++n) {
            auto jr = j_graph(n, r);
            std::vector<int> sizes, intra;
            for (const auto& p : jr.parts) {
                sizes.push_back(static_cast<int>(p.size()));
                intra.push_back(static_cast<int>(p.size()));
            }
            auto cv = oracles::brute_clique_vector(jr.graph);
            for (int l = 0; l <= 2 * r + 1; ++l) {
                Int want = l < static_cast<int>(cv.size()) ? cv[l] : Int(0);
                CHECK(multipartite_clique_count(sizes, intra, l) == want);
            }
        }
    CHECK_THROWS_AS(multipartite_clique_count({4, 4}, {3, 4}, 2), OutOfClass);
}

TEST_CASE("sigma shift identity") {
    CHECK(sigma_shift_delta({5, 3}, 2) == 1);
    CHECK(sigma_shift_delta({4, 4}, 2) == -1);
    std::vector<int> xs{6, 3, 5, 4};
    for (int j = 0; j <= 4; ++j) {
        std::vector<int> shifted{xs[0] - 1, xs[1] + 1, xs[2], xs[3]};
        Int lhs = oracles::direct_sigma(shifted, j) - oracles::direct_sigma(xs, j);
        CHECK(sigma_shift_delta(xs, j) == lhs);
    }
}

TEST_CASE("sigma-basis coefficients reproduce clique functions on the class") {
    auto f = CliqueFunction::from_high_to_low({Rat(2), Rat(-1), Rat(5), Rat(7)});  // order 3
    auto cp = clique_fn_sigma_coeffs(f);
    for (int n : {12, 13, 14}) {
        auto jr = j_graph(n, 3);
        std::vector<int> sizes;
        for (const auto& p : jr.parts) sizes.push_back(static_cast<int>(p.size()));
        Rat via_sigma = 0;
        for (int j = 0; j <= f.order; ++j) via_sigma += cp[j] * Rat(elementary_symmetric(sizes, j));
        CHECK(f.eval(jr.graph) == via_sigma);
    }
}
