#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "dzext/lattice.hpp"
#include "fixtures.hpp"

using namespace dzext;

TEST_CASE("recognize diamond lattice from the four-cycle") {
    auto g = UnderlyingGraph::build(fx::m_c4());
    auto l = recognize_modular_lattice(g);
    REQUIRE(l.has_value());
    CHECK(l->bottom == 0);
    CHECK(l->top == 2);
    CHECK(l->rank == std::vector<int>{0, 1, 2, 1});
    CHECK(l->join[1][3] == 2);
    CHECK(l->meet[1][3] == 0);
    CHECK(l->leq(0, 1));
    CHECK(l->leq(1, 2));
    CHECK(!l->leq(1, 3));
    std::set<std::pair<int, int>> covers(l->covers.begin(), l->covers.end());
    CHECK(covers == std::set<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {3, 2}});
}

TEST_CASE("recognize the rank-3 Boolean lattice from the cube") {
    auto g = UnderlyingGraph::build(fx::m_q3());
    auto l = recognize_modular_lattice(g);
    REQUIRE(l.has_value());
    CHECK(l->bottom == 0);
    CHECK(l->top == 7);
    for (int v = 0; v < 8; ++v)
        CHECK(l->rank[v] == __builtin_popcount(static_cast<unsigned>(v)));
    // Joins and meets are bitwise on the cube labels.
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            CHECK(l->join[a][b] == (a | b));
            CHECK(l->meet[a][b] == (a & b));
        }
}

TEST_CASE("recognize a chain from a path") {
    // Center-first vertex order: the center cannot be the bottom, the first
    // leaf can.
    auto g = UnderlyingGraph::build(fx::m_star2());
    auto l = recognize_modular_lattice(g);
    REQUIRE(l.has_value());
    CHECK(l->bottom == 1);
    CHECK(l->top == 2);
    CHECK(l->rank == std::vector<int>{1, 0, 2});
    CHECK(l->leq(1, 0));
    CHECK(l->leq(0, 2));
}

TEST_CASE("reject graphs that cover no modular lattice") {
    CHECK(!recognize_modular_lattice(UnderlyingGraph::build(fx::m_star4())).has_value());
    CHECK(!recognize_modular_lattice(UnderlyingGraph::build(fx::m_star3u())).has_value());
    CHECK(!recognize_modular_lattice(UnderlyingGraph::build(fx::m_k3())).has_value());
}

TEST_CASE("product lattice") {
    auto chain = recognize_modular_lattice(UnderlyingGraph::build(fx::m_cut()));
    REQUIRE(chain.has_value());
    CHECK(chain->bottom == 0);
    CHECK(chain->top == 1);

    auto p = product_lattice(*chain, *chain);
    CHECK(p.size() == 4);
    CHECK(p.names == std::vector<std::string>{"(s,s)", "(s,t)", "(t,s)", "(t,t)"});
    CHECK(p.bottom == 0);
    CHECK(p.top == 3);
    CHECK(p.rank == std::vector<int>{0, 1, 1, 2});
    CHECK(p.join[1][2] == 3);
    CHECK(p.meet[1][2] == 0);
    CHECK(p.covers.size() == 4);
}

TEST_CASE("two-covered pairs") {
    auto diamond = recognize_modular_lattice(UnderlyingGraph::build(fx::m_c4()));
    REQUIRE(diamond.has_value());
    CHECK(two_covered_pairs(*diamond) == std::vector<std::pair<int, int>>{{1, 3}});

    auto cube = recognize_modular_lattice(UnderlyingGraph::build(fx::m_q3()));
    REQUIRE(cube.has_value());
    auto pairs = two_covered_pairs(*cube);
    CHECK(pairs.size() == 6);  // three atom pairs plus three coatom pairs
    std::set<std::pair<int, int>> cov(cube->covers.begin(), cube->covers.end());
    for (auto [a, b] : pairs) {
        CHECK(a < b);
        int j = cube->join[a][b];
        CHECK(cov.count({a, j}) == 1);
        CHECK(cov.count({b, j}) == 1);
    }
}

TEST_CASE("submodularity checker") {
    auto diamond = recognize_modular_lattice(UnderlyingGraph::build(fx::m_c4()));
    REQUIRE(diamond.has_value());

    SUBCASE("a submodular function passes both modes") {
        // f = rank is modular, hence submodular.
        auto r = verify_submodular(*diamond, [&](int i) { return Rational(diamond->rank[i]); });
        CHECK(r.full_ok);
        CHECK(r.two_covered_ok);
        CHECK(r.modes_agree());
    }

    SUBCASE("a violation is caught by both modes with the same witness") {
        std::vector<Rational> vals{0, 0, 1, 0};  // f(top) too large
        auto r = verify_submodular(*diamond, [&](int i) { return vals[i]; });
        CHECK(!r.full_ok);
        CHECK(!r.two_covered_ok);
        CHECK(r.modes_agree());
        REQUIRE(r.full_witness.has_value());
        CHECK(*r.full_witness == std::pair<int, int>{1, 3});
        CHECK(r.two_covered_witness == r.full_witness);
    }
}

TEST_CASE("full and 2-covered modes agree on random functions") {
    std::vector<ModularLattice> lattices;
    for (auto m : {fx::m_cut(), fx::m_c4(), fx::m_q3(), fx::m_star2()}) {
        auto l = recognize_modular_lattice(UnderlyingGraph::build(m));
        REQUIRE(l.has_value());
        lattices.push_back(*l);
    }
    auto chain = lattices[0];
    lattices.push_back(product_lattice(lattices[1], chain));

    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 5);
    for (const auto& l : lattices) {
        int disagreements = 0;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Rational> vals(l.size());
            for (auto& v : vals) v = Rational(num(rng), den(rng));
            auto r = verify_submodular(l, [&](int i) { return vals[i]; });
            if (!r.modes_agree()) ++disagreements;
        }
        CHECK(disagreements == 0);
    }
}

TEST_CASE("lattice distance submodularity") {
    SUBCASE("holds on the certified fixtures") {
        for (auto m : {fx::m_cut(), fx::m_c4(), fx::m_q3()}) {
            auto g = UnderlyingGraph::build(m);
            auto l = recognize_modular_lattice(g);
            REQUIRE(l.has_value());
            auto report = verify_lattice_distance_submodular(m, g, *l);
            CHECK(report.ok);
            CHECK(report.submodularity.full_ok);
            CHECK(report.submodularity.two_covered_ok);
        }
    }

    SUBCASE("refuses a lattice that does not match the metric") {
        auto diamond = recognize_modular_lattice(UnderlyingGraph::build(fx::m_c4()));
        REQUIRE(diamond.has_value());
        auto cut = fx::m_cut();
        CHECK_THROWS_WITH_AS(
            verify_lattice_distance_submodular(cut, UnderlyingGraph::build(cut), *diamond),
            doctest::Contains("HypothesesNotMet"), Error);
    }

    SUBCASE("refuses a metric that is not orbit-invariant") {
        auto m = fx::m_ov4();
        auto g = UnderlyingGraph::build(m);
        auto l = recognize_modular_lattice(g);
        REQUIRE(l.has_value());
        CHECK_THROWS_WITH_AS(verify_lattice_distance_submodular(m, g, *l),
                             doctest::Contains("HypothesesNotMet"), Error);
    }
}
