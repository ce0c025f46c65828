#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "dzext/gadget.hpp"
#include "fixtures.hpp"

using namespace dzext;

TEST_CASE("escalation multipliers make layers lexicographic") {
    auto m = fx::m_cut();
    // Layer 0 prefers u = t, layer 1 prefers u = s; the later layer must win.
    std::vector<CostLayer> layers;
    layers.push_back({{{"u", "t", 1}}});
    layers.push_back({{{"s", "u", 1}}});
    auto mult = escalation_multipliers(m, layers);
    REQUIRE(mult.size() == 2);
    CHECK(mult[0] == Rational(1));
    CHECK(mult[1] > mult[0]);

    auto inst = ZeroExtInstance::make(m, {"u"}, combine_layers(layers, mult));
    auto r = brute_force(inst);
    CHECK(r.labels[2] == 0);  // u = s

    SUBCASE("doubling scales only the non-base multipliers") {
        auto doubled = escalation_multipliers(m, layers, 1);
        CHECK(doubled[0] == Rational(1));
        CHECK(doubled[1] == 2 * mult[1]);
        auto tripled = escalation_multipliers(m, layers, 2);
        CHECK(tripled[1] == 4 * mult[1]);
    }
}

TEST_CASE("combine layers") {
    std::vector<CostLayer> layers;
    layers.push_back({{{"a", "b", 2}}});
    layers.push_back({{{"b", "c", 3}}});
    auto combined = combine_layers(layers, {Rational(1), Rational(10)});
    REQUIRE(combined.size() == 2);
    CHECK(combined[0].from == "a");
    CHECK(combined[0].c == Rational(2));
    CHECK(combined[1].to == "c");
    CHECK(combined[1].c == Rational(30));
}

TEST_CASE("nonmodular sextuple gadget on the unit triangle") {
    auto m = fx::m_k3();
    auto g = build_nonmodular_gadget(m);
    CHECK(g.verified);
    CHECK(g.triple == std::array<int, 3>{0, 1, 2});
    CHECK(g.tau_star == Rational(456));
    CHECK(g.delta == Rational(74));
    CHECK(g.report.optimal_fixings.size() == 64);
    // Every optimal fixing assigns z_j one of the two designated corners.
    for (const auto& fix : g.report.optimal_fixings)
        for (int j = 0; j < 6; ++j) {
            int lo = g.triple[(j + 2) % 3], hi = g.triple[(j + 1) % 3];
            CHECK((fix[j] == lo || fix[j] == hi));
        }
}

TEST_CASE("nonmodular gadget on the five-cycle") {
    auto m = fx::m_c5();
    auto g = build_nonmodular_gadget(m);
    CHECK(g.verified);
    CHECK(g.triple == std::array<int, 3>{0, 1, 3});
    CHECK(g.delta > 0);
}

TEST_CASE("modular metrics have no medianless triple to build on") {
    CHECK_THROWS_WITH_AS(build_nonmodular_gadget(fx::m_c4()),
                         doctest::Contains("MetricIsModular"), Error);
}

TEST_CASE("hexagon composition turns the sextuple into a pair gadget") {
    auto m = fx::m_k3();
    auto g = compose_hexagon(build_nonmodular_gadget(m));
    CHECK(g.verified);
    CHECK(g.s == 0);
    CHECK(g.t == 2);
    CHECK(g.x == "z1");
    CHECK(g.y == "z4");
    CHECK(g.tau_star == Rational(22506));
    CHECK(g.delta == Rational(2));
    // The minimizers are exactly the two split fixings.
    std::set<std::pair<int, int>> mins(g.report.optimal_fixings.begin(),
                                       g.report.optimal_fixings.end());
    CHECK(mins == std::set<std::pair<int, int>>{{0, 2}, {2, 0}});
    // Clause (ii): both diagonal fixings sit exactly delta above.
    const int k = m.size();
    CHECK(g.report.table[0 * k + 0] == g.tau_star + g.delta);
    CHECK(g.report.table[2 * k + 2] == g.tau_star + g.delta);

    SUBCASE("composition refuses an unverified input") {
        auto s = build_nonmodular_gadget(m);
        s.verified = false;
        CHECK_THROWS_WITH_AS(compose_hexagon(s), doctest::Contains("GadgetNotVerified"), Error);
    }
}

TEST_CASE("orbit-varying pair gadget") {
    auto m = fx::m_ov4();
    auto g = build_orbit_varying_gadget(m);
    CHECK(g.verified);
    CHECK(g.x == "x0");
    CHECK(g.y == "x1");
    CHECK(m.point(g.s) == "r");
    CHECK(m.point(g.t) == "s");
    CHECK(g.tau_star == Rational(367367706));
    CHECK(g.delta == Rational(6));

    CHECK_THROWS_WITH_AS(build_orbit_varying_gadget(fx::m_c4()),
                         doctest::Contains("NoOrbitVaryingCycle"), Error);
}

TEST_CASE("nonorientable pair gadget") {
    auto m = fx::m_k33();
    auto g = build_nonorientable_gadget(m);
    CHECK(g.verified);
    CHECK(m.point(g.s) == "a0");
    CHECK(m.point(g.t) == "b0");
    CHECK(g.x == "z0");
    CHECK(g.y == "z3");
    CHECK(g.tau_star == Rational(600));
    CHECK(g.delta == Rational(4));

    CHECK_THROWS_WITH_AS(build_nonorientable_gadget(fx::m_c4()),
                         doctest::Contains("GraphOrientable"), Error);
}

TEST_CASE("biased-triple sextuple gadget") {
    auto m = fx::m_star3b();
    auto g = build_biased_triple_gadget(m);
    CHECK(g.verified);
    CHECK(g.triple == std::array<int, 3>{1, 2, 3});
    CHECK(g.tau_star == Rational(7866));
    CHECK(g.delta == Rational(3));

    auto pair = compose_hexagon(g);
    CHECK(pair.verified);
    CHECK(m.point(pair.s) == "a");
    CHECK(m.point(pair.t) == "c");
    CHECK(pair.tau_star == Rational(1706976));
    CHECK(pair.delta == Rational(18));

    CHECK_THROWS_WITH_AS(build_biased_triple_gadget(fx::m_star3u()),
                         doctest::Contains("NoBiasedTriple"), Error);
}

TEST_CASE("verification rejects corrupted gadgets") {
    SUBCASE("flattened layers lose the separation") {
        auto good = build_nonmodular_gadget(fx::m_k3());
        SextupleGadget flat = good;
        flat.multipliers = {Rational(1), Rational(0)};
        flat.instance = ZeroExtInstance::make(
            fx::m_k3(), {flat.z.begin(), flat.z.end()},
            combine_layers(flat.layers, flat.multipliers));
        CHECK_THROWS_WITH_AS(verify_sextuple_gadget(flat), doctest::Contains("ConditionFailed"),
                             Error);
    }

    SUBCASE("a permuted triple mislabels the designated fixings") {
        auto g = build_nonmodular_gadget(fx::m_k3());
        g.triple = {g.triple[1], g.triple[0], g.triple[2]};
        CHECK_THROWS_WITH_AS(verify_sextuple_gadget(g), doctest::Contains("clause (i)"), Error);
    }

    SUBCASE("the wrong distinguished pair fails clause (i)") {
        auto g = build_nonorientable_gadget(fx::m_k33());
        g.s = 0;
        g.t = 1;  // a1 instead of b0
        CHECK_THROWS_WITH_AS(verify_pair_gadget(g), doctest::Contains("clause (i)"), Error);
    }
}

TEST_CASE("gadgets survive doubled escalation") {
    auto k3 = build_nonmodular_gadget(fx::m_k3());
    CHECK(sextuple_gadget_stable_under_doubling(k3));
    CHECK(pair_gadget_stable_under_doubling(compose_hexagon(k3)));
    CHECK(pair_gadget_stable_under_doubling(build_orbit_varying_gadget(fx::m_ov4())));
    CHECK(pair_gadget_stable_under_doubling(build_nonorientable_gadget(fx::m_k33())));
    CHECK(sextuple_gadget_stable_under_doubling(build_biased_triple_gadget(fx::m_star3b())));
}

TEST_CASE("max cut instances and oracle") {
    auto mc = MaxCutInstance::make(3, {{2, 1}, {0, 1}, {0, 2}}, 2);
    CHECK(mc.edges == std::vector<std::pair<int, int>>{{1, 2}, {0, 1}, {0, 2}});

    CHECK_THROWS_WITH_AS(MaxCutInstance::make(3, {{0, 0}}, 1),
                         doctest::Contains("BadReduction"), Error);
    CHECK_THROWS_WITH_AS(MaxCutInstance::make(3, {{0, 5}}, 1),
                         doctest::Contains("BadReduction"), Error);
    CHECK_THROWS_WITH_AS(MaxCutInstance::make(3, {{0, 1}, {1, 0}}, 1),
                         doctest::Contains("BadReduction"), Error);
    CHECK_THROWS_WITH_AS(MaxCutInstance::make(3, {{0, 1}}, 0),
                         doctest::Contains("BadReduction"), Error);
    CHECK_THROWS_WITH_AS(MaxCutInstance::make(3, {{0, 1}}, 2),
                         doctest::Contains("BadReduction"), Error);

    CHECK(max_cut_value(2, {{0, 1}}) == 1);
    CHECK(max_cut_value(3, {{0, 1}, {1, 2}, {0, 2}}) == 2);
    CHECK(max_cut_value(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}) == 4);
    CHECK(max_cut_value(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}) == 4);
    CHECK(max_cut_value(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) == 4);
    CHECK(max_cut_value(3, {}) == 0);
}

TEST_CASE("max cut reduction") {
    auto gadget = compose_hexagon(build_nonmodular_gadget(fx::m_k3()));

    SUBCASE("shape and naming") {
        auto mc = MaxCutInstance::make(3, {{0, 1}, {1, 2}, {0, 2}}, 2);
        auto red = reduce_maxcut(mc, gadget);
        CHECK(red.vertex_names == std::vector<std::string>{"u0", "u1", "u2"});
        CHECK(red.threshold == Rational(3) * gadget.tau_star + Rational(1) * gadget.delta);
        CHECK(red.threshold == Rational(67520));
        // 3 terminals + 3 vertices + 3 edges x 4 private auxiliaries.
        CHECK(red.instance.num_variables() == 18);
        const auto& vars = red.instance.variables();
        auto has = [&](const std::string& v) {
            return std::find(vars.begin(), vars.end(), v) != vars.end();
        };
        CHECK(has("u0"));
        CHECK(has("z0@e0"));
        CHECK(has("z5@e2"));
        CHECK(!has("z1@e0"));  // x maps onto a graph vertex, no private copy
        CHECK(!has("z4@e1"));
    }

    SUBCASE("decomposition equals raw brute force on tiny graphs") {
        for (auto mc : {MaxCutInstance::make(2, {{0, 1}}, 1),
                        MaxCutInstance::make(3, {{0, 1}, {1, 2}}, 2)}) {
            auto red = reduce_maxcut(mc, gadget);
            CHECK(reduced_optimum_by_decomposition(mc, gadget) ==
                  brute_force(red.instance).objective);
        }
    }

    SUBCASE("decision matches the exhaustive cut oracle") {
        std::vector<std::pair<int, int>> triangle{{0, 1}, {1, 2}, {0, 2}};
        const int cut = max_cut_value(3, triangle);  // 2
        for (int k = 1; k <= 3; ++k) {
            auto mc = MaxCutInstance::make(3, triangle, k);
            auto red = reduce_maxcut(mc, gadget);
            Rational opt = reduced_optimum_by_decomposition(mc, gadget);
            CHECK((opt <= red.threshold) == (cut >= k));
        }
    }

    SUBCASE("rejects an unverified gadget") {
        auto broken = gadget;
        broken.verified = false;
        CHECK_THROWS_WITH_AS(reduce_maxcut(MaxCutInstance::make(2, {{0, 1}}, 1), broken),
                             doctest::Contains("GadgetNotVerified"), Error);
    }
}
