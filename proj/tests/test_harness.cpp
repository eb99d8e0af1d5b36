#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "flagtri/constructions.hpp"
#include "flagtri/harness.hpp"
#include "flagtri/isomorphism.hpp"
#include "flagtri/search.hpp"
#include "flagtri/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace flagtri;

static SimplicialComplex clique_of(const Graph& g) { return SimplicialComplex::clique_complex(g); }

TEST_CASE("upper bounds hold with zero slack on the reference family") {
    for (int r : {2, 3})
        for (int n = 4 * r; n <= 16; ++n) {
            auto rep = verify_upper_bounds(clique_of(j_graph(n, r).graph), r);
            CHECK(rep.verdict == Verdict::AllHold);
            for (const auto& c : rep.comparisons) CHECK(c.slack == 0);
            CHECK(rep.isomorphism_checked);
            CHECK(rep.isomorphic);
        }
}

TEST_CASE("upper bounds show strict slack for the uneven join") {
    auto join = graph_join(cycle(6), cycle(4));  // 3-sphere on 10 vertices
    auto rep = verify_upper_bounds(clique_of(join), 2);
    CHECK(rep.verdict == Verdict::AllHold);
    // independently: e-vectors (1,10,34,48,24) vs (1,10,35,50,25)
    auto own = oracles::brute_clique_vector(join);
    CHECK(own == std::vector<Int>{1, 10, 34, 48, 24});
    bool strict = false;
    for (const auto& c : rep.comparisons)
        if (c.label[0] == 'f' && c.slack > 0) strict = true;
    CHECK(strict);
    CHECK(!rep.isomorphism_checked);  // no index is tight
}

TEST_CASE("upper bounds report non-manifolds as not applicable") {
    auto rep = verify_upper_bounds(load_complex("data/torus_7.cplx"), 2);
    CHECK(rep.verdict == Verdict::NotApplicable);
    auto rep2 = verify_upper_bounds(clique_of(j_star(12, 2).graph), 2);  // even dimension
    CHECK(rep2.verdict == Verdict::NotApplicable);
}

TEST_CASE("ratio chain on the reference family is all ones") {
    for (const std::string kind : {"f", "h", "g", "gamma"}) {
        auto rep = verify_ratio_chain(clique_of(j_graph(12, 2).graph), 2, kind);
        CHECK(rep.verdict == Verdict::AllHold);
        for (const auto& q : rep.ratios) CHECK(q == Rat(1));
        CHECK(rep.chain_monotone);
    }
}

TEST_CASE("ratio chain on the uneven join is computed exactly") {
    auto rep = verify_ratio_chain(clique_of(graph_join(cycle(6), cycle(4))), 2, "f");
    CHECK(rep.ratios.size() == 2);
    CHECK(rep.ratios[0] == Rat(1));
    CHECK(rep.ratios[1] == Rat(34, 35));
    CHECK(rep.chain_monotone);
}

TEST_CASE("gamma ratio chain needs a palindromic h-vector") {
    auto rep = verify_ratio_chain(load_complex("data/torus_7.cplx"), 2, "gamma");
    CHECK(rep.verdict == Verdict::NotApplicable);
}

TEST_CASE("even dimension comparison against the two-apex family") {
    auto rep = verify_even_dim(clique_of(j_star(9, 1).graph), 1);
    CHECK(rep.verdict == Verdict::AllHold);
    for (const auto& c : rep.comparisons) CHECK(c.slack == 0);

    // r = 1 forces equality for every flag homology 2-sphere
    auto other = verify_even_dim(load_complex("data/sphere8_nonsusp.cplx"), 1);
    CHECK(other.verdict == Verdict::AllHold);
    for (const auto& c : other.comparisons) CHECK(c.slack == 0);

    auto rep2 = verify_even_dim(clique_of(j_star(12, 2).graph), 2);
    CHECK(rep2.verdict == Verdict::AllHold);
    for (const auto& c : rep2.comparisons) CHECK(c.slack == 0);

    CHECK(verify_even_dim(clique_of(j_graph(12, 2).graph), 2).verdict == Verdict::NotApplicable);
}

TEST_CASE("reports embed reproducible input hashes") {
    auto m = clique_of(j_graph(12, 2).graph);
    auto a = verify_upper_bounds(m, 2);
    auto b = verify_upper_bounds(m, 2);
    CHECK(a.input_hash == b.input_hash);
    CHECK(a.input_hash != 0);
}

TEST_CASE("identity replacement keeps the two-apex graph") {
    // part size 4 at n = 10, r = 2: replacement = suspension of C_4
    auto replacement = clique_of(j_star(6, 1).graph);  // octahedron
    auto out = non_uniqueness_variant(2, 10, replacement);
    CHECK(are_isomorphic(out, j_star(10, 2).graph));
}

TEST_CASE("non-suspension replacement keeps face numbers, changes the graph") {
    auto replacement = load_complex("data/sphere8_nonsusp.cplx");
    auto out = non_uniqueness_variant(2, 14, replacement);
    auto base = j_star(14, 2).graph;
    CHECK(clique_vector(out).counts == clique_vector(base).counts);
    CHECK(!are_isomorphic(out, base));
}

TEST_CASE("replacement validation") {
    auto wrong_size = clique_of(j_star(9, 1).graph);  // 9 vertices, need 8
    CHECK_THROWS_AS(non_uniqueness_variant(2, 14, wrong_size), BadReplacement);
    auto not_sphere = load_complex("data/torus_7.cplx");
    CHECK_THROWS_AS(non_uniqueness_variant(2, 12, not_sphere), BadReplacement);
}

TEST_CASE("growth probe rows") {
    auto rows = growth_probe(2, 8, 14);
    REQUIRE(!rows.empty());
    CHECK(rows[0].n == 8);
    CHECK(rows[0].count == 32);
    CHECK(rows[0].ratio == Rat(1, 2));
    for (const auto& row : rows) CHECK(row.ratio <= Rat(2, 3));
    auto r1 = growth_probe(1, 5, 9);
    for (const auto& row : r1) CHECK(row.ratio == Rat(1));  // e_2(C_n)/n = 1
}

TEST_CASE("exhaustive search at d = 2 finds the cycle unions") {
    SearchOptions opt;
    opt.d = 2;
    opt.n_max = 8;
    auto out = search_pseudomanifolds(opt);
    CHECK(!out.budget_exceeded);
    std::map<int, long> by_n;
    for (const auto& fd : out.findings) {
        ++by_n[fd.n];
        CHECK(!fd.violation);
        REQUIRE(fd.has_reference);
        CHECK(fd.f[2] <= fd.reference_f[2]);
    }
    for (int n = 4; n <= 8; ++n) CHECK(by_n[n] == oracles::count_cycle_partitions(n));
}

TEST_CASE("search deduplication matches pairwise isomorphism testing") {
    SearchOptions opt;
    opt.d = 2;
    opt.n_max = 7;
    auto out = search_pseudomanifolds(opt);
    for (std::size_t i = 0; i < out.findings.size(); ++i)
        for (std::size_t j = i + 1; j < out.findings.size(); ++j)
            if (out.findings[i].n == out.findings[j].n)
                CHECK(!are_isomorphic(out.findings[i].graph, out.findings[j].graph));
}

TEST_CASE("zero budget stops immediately with partial output") {
    SearchOptions opt;
    opt.d = 4;
    opt.n_max = 8;
    opt.random = true;
    opt.budget = 0;
    auto out = search_pseudomanifolds(opt);
    CHECK(out.findings.empty());
    CHECK(out.budget_exceeded);
}

TEST_CASE("random search is reproducible per seed") {
    SearchOptions opt;
    opt.d = 2;
    opt.n_max = 7;
    opt.random = true;
    opt.seed = 42;
    opt.budget = 400;
    auto a = search_pseudomanifolds(opt);
    auto b = search_pseudomanifolds(opt);
    REQUIRE(a.findings.size() == b.findings.size());
    for (std::size_t i = 0; i < a.findings.size(); ++i)
        CHECK(a.findings[i].graph.edges() == b.findings[i].graph.edges());
    opt.seed = 43;
    auto c = search_pseudomanifolds(opt);
    CHECK(c.examined == 400);
}
