#include <algorithm>

#include "doctest.h"
#include "dzext/metric.hpp"
#include "fixtures.hpp"

using namespace dzext;

TEST_CASE("validation accepts the fixtures") {
    CHECK(fx::m_cut().size() == 2);
    CHECK(fx::m_ov4().size() == 4);
    CHECK(fx::m_k33().size() == 6);
    CHECK(fx::m_q3().size() == 8);
}

TEST_CASE("validation names the violated axiom") {
    CHECK_THROWS_WITH_AS(DirectedMetric::validate({"a", "b"}, {1, 1, 1, 0}),
                         doctest::Contains("ZeroDiagonalViolated"), Error);
    // separation: both directions zero
    CHECK_THROWS_WITH_AS(DirectedMetric::validate({"a", "b"}, {0, 0, 0, 0}),
                         doctest::Contains("SeparationViolated"), Error);
    // triangle: a->c too long via b
    CHECK_THROWS_WITH_AS(
        DirectedMetric::validate({"a", "b", "c"}, {0, 1, 3, 1, 0, 1, 1, 1, 0}),
        doctest::Contains("TriangleViolated"), Error);
    CHECK_THROWS_WITH_AS(DirectedMetric::validate({"a", "a"}, {0, 1, 1, 0}),
                         doctest::Contains("DuplicatePoint"), Error);
    CHECK_THROWS_WITH_AS(DirectedMetric::validate({"a", "b"}, {0, 1, 1}),
                         doctest::Contains("BadTableShape"), Error);
}

TEST_CASE("asymmetry is allowed") {
    auto m = fx::m_cut();
    CHECK(m.dist(0, 1) == 1);
    CHECK(m.dist(1, 0) == 0);
    CHECK(m.index_of("t") == 1);
    CHECK_THROWS_AS((void)m.index_of("nope"), Error);
}

TEST_CASE("interval") {
    auto k3 = fx::m_k3();
    CHECK(interval(k3, 0, 1) == std::vector<int>{0, 1});

    // leaf-to-leaf interval of the biased star passes through the center
    auto st = fx::m_star3b();
    int r = st.index_of("r"), a = st.index_of("a"), b = st.index_of("b");
    CHECK(interval(st, a, b) == std::vector<int>{r, a, b});
}

TEST_CASE("ratio") {
    auto cut = fx::m_cut();
    CHECK(ratio(cut, 0, 1) == ExtendedRational::infinity());
    CHECK(ratio(cut, 1, 0) == ExtendedRational::finite(0));

    auto st = fx::m_star3b();
    CHECK(ratio(st, st.index_of("a"), st.index_of("r")) ==
          ExtendedRational::finite(2));
    auto su = fx::m_star3u();
    CHECK(ratio(su, su.index_of("a"), su.index_of("r")) ==
          ExtendedRational::finite(1));
    CHECK_THROWS_AS((void)ratio(cut, 0, 0), Error);
}

TEST_CASE("ratio antisymmetry") {
    for (const auto& m : {fx::m_ov4(), fx::m_star3b(), fx::m_star22()}) {
        for (int x = 0; x < m.size(); ++x) {
            for (int y = 0; y < m.size(); ++y) {
                if (x == y) continue;
                auto rxy = ratio(m, x, y), ryx = ratio(m, y, x);
                if (rxy.infinite) {
                    CHECK(ryx == ExtendedRational::finite(0));
                } else if (rxy.value == 0) {
                    CHECK(ryx.infinite);
                } else {
                    CHECK(ryx == ExtendedRational::finite(1 / rxy.value));
                }
            }
        }
    }
}

TEST_CASE("median search") {
    auto k3 = fx::m_k3();
    CHECK(!find_median(k3, 0, 1, 2));

    auto c4 = fx::m_c4();
    int p = c4.index_of("p"), q = c4.index_of("q"), s = c4.index_of("s");
    auto med = find_median(c4, p, q, s);
    REQUIRE(med);
    CHECK(*med == p);
}

TEST_CASE("modularity") {
    CHECK(!is_modular(fx::m_k3()));
    CHECK(is_modular(fx::m_cut()));
    CHECK(is_modular(fx::m_ov4()));
    CHECK(is_modular(fx::m_c4()));
    CHECK(is_modular(fx::m_k33()));
    CHECK(is_modular(fx::m_q3()));
    CHECK(!is_modular(fx::m_c5()));

    auto w = modularity_witness(fx::m_k3());
    REQUIRE(w);
    CHECK(w->triple == std::array<int, 3>{0, 1, 2});
    CHECK(!modularity_witness(fx::m_c4()));
}

TEST_CASE("shortest sequences telescope") {
    auto st = fx::m_star3b();
    int r = st.index_of("r"), a = st.index_of("a"), b = st.index_of("b");
    CHECK(is_shortest_sequence(st, {a, r, b}));
    CHECK(is_shortest_sequence(st, {a}));
    CHECK(!is_shortest_sequence(st, {a, b, a}));
    CHECK_THROWS_AS((void)is_shortest_sequence(st, {}), Error);
}

TEST_CASE("triple perimeter") {
    CHECK(triple_perimeter(fx::m_k3(), 0, 1, 2) == 6);
    auto st = fx::m_star3b();
    CHECK(triple_perimeter(st, st.index_of("a"), st.index_of("b"),
                           st.index_of("c")) == 18);
}

TEST_CASE("perimeter is permutation invariant") {
    auto m = fx::m_ov4();
    std::array<int, 3> t{0, 1, 3};
    Rational base = triple_perimeter(m, t[0], t[1], t[2]);
    std::sort(t.begin(), t.end());
    do {
        CHECK(triple_perimeter(m, t[0], t[1], t[2]) == base);
    } while (std::next_permutation(t.begin(), t.end()));
}

TEST_CASE("minimal medianless triple") {
    auto k3t = minimal_medianless_triple(fx::m_k3());
    REQUIRE(k3t);
    CHECK(*k3t == std::array<int, 3>{0, 1, 2});
    CHECK(!minimal_medianless_triple(fx::m_c4()));
    CHECK(!minimal_medianless_triple(fx::m_cut()));

    // C5: every unit triple has a median, so the first perimeter-10 gap
    // triple wins.
    auto c5t = minimal_medianless_triple(fx::m_c5());
    REQUIRE(c5t);
    CHECK(*c5t == std::array<int, 3>{0, 1, 3});
}
