#include "dzext/classify.hpp"

#include <algorithm>

namespace dzext {

namespace {

std::vector<int> common_interval_interior(const DirectedMetric& m, int x, int y) {
    std::vector<int> out;
    for (int z : interval(m, x, y)) {
        if (z == x || z == y) continue;
        if (m.dist(y, x) == m.dist(y, z) + m.dist(z, x)) out.push_back(z);
    }
    return out;
}

}  // namespace

std::optional<BiasedPairWitness> biased_pair_witness(const DirectedMetric& m, int x, int y) {
    BiasedPairWitness w;
    w.x = x;
    w.y = y;
    w.interior = common_interval_interior(m, x, y);
    if (w.interior.empty()) {
        w.direction = BiasedPairWitness::Direction::Vacuous;
        return w;
    }
    bool all_greater = true, all_less = true;
    for (int z : w.interior) {
        ExtendedRational left = ratio(m, x, z), right = ratio(m, z, y);
        if (!(left > right)) all_greater = false;
        if (!(left < right)) all_less = false;
    }
    if (all_greater) {
        w.direction = BiasedPairWitness::Direction::Greater;
        return w;
    }
    if (all_less) {
        w.direction = BiasedPairWitness::Direction::Less;
        return w;
    }
    return std::nullopt;
}

bool is_biased_pair(const DirectedMetric& m, int x, int y) {
    return biased_pair_witness(m, x, y).has_value();
}

bool is_non_collinear_triple(const DirectedMetric& m, int s0, int s1, int s2) {
    if (s0 == s1 || s1 == s2 || s0 == s2)
        throw Error(Errc::RepeatedPoint, "triple points must be distinct");
    const int s[3] = {s0, s1, s2};
    for (int i = 0; i < 3; ++i) {
        int a = s[(i + 2) % 3], b = s[(i + 1) % 3];
        if (m.dist(a, b) == m.dist(a, s[i]) + m.dist(s[i], b) &&
            m.dist(b, a) == m.dist(b, s[i]) + m.dist(s[i], a))
            return false;
    }
    return true;
}

std::optional<BiasedTriple> find_biased_non_collinear_triple(const DirectedMetric& m) {
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            for (int k = j + 1; k < m.size(); ++k) {
                if (!is_non_collinear_triple(m, i, j, k)) continue;
                auto p01 = biased_pair_witness(m, i, j);
                if (!p01) continue;
                auto p02 = biased_pair_witness(m, i, k);
                if (!p02) continue;
                auto p12 = biased_pair_witness(m, j, k);
                if (!p12) continue;
                return BiasedTriple{{i, j, k}, {*p01, *p02, *p12}};
            }
    return std::nullopt;
}

std::optional<int> star_center(const UnderlyingGraph& g) {
    const int n = g.size();
    if (n < 2) return std::nullopt;
    if (static_cast<int>(g.edges().size()) != n - 1) return std::nullopt;
    for (int c = 0; c < n; ++c)
        if (static_cast<int>(g.neighbors(c).size()) == n - 1) return c;
    return std::nullopt;
}

std::vector<std::vector<int>> unbiased_partition(const DirectedMetric& m,
                                                 const UnderlyingGraph& g, int center) {
    if (star_center(g) != center) throw Error(Errc::NotAStar, "vertex is not a star center");
    std::vector<int> leaves;
    for (int v = 0; v < m.size(); ++v)
        if (v != center) leaves.push_back(v);
    const int k = static_cast<int>(leaves.size());

    auto set_unbiased = [&](const std::vector<int>& part) {
        for (int p : part)
            for (int q : part) {
                if (p == q) continue;
                if (ratio(m, p, center) != ratio(m, center, q)) return false;
            }
        return true;
    };

    // Restricted-growth strings enumerate set partitions; fewest parts first,
    // then lexicographic. Leaf counts stay small, so this is exhaustive.
    std::vector<int> assign(k, 0), best;
    int best_parts = k + 1;
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (used >= best_parts) return;
        if (i == k) {
            std::vector<std::vector<int>> parts(used);
            for (int t = 0; t < k; ++t) parts[assign[t]].push_back(leaves[t]);
            for (const auto& part : parts)
                if (!set_unbiased(part)) return;
            best = assign;
            best_parts = used;
            return;
        }
        for (int part = 0; part <= used && part < k; ++part) {
            assign[i] = part;
            rec(i + 1, std::max(used, part + 1));
        }
    };
    rec(0, 0);

    std::vector<std::vector<int>> parts(best_parts);
    for (int t = 0; t < k; ++t) parts[best[t]].push_back(leaves[t]);
    return parts;
}

Verdict classify(const DirectedMetric& m) {
    Verdict v;
    auto step = [&](const std::string& check, const std::string& result) {
        v.trace.push_back({check, result});
    };

    if (auto w = modularity_witness(m)) {
        v.outcome = Outcome::NPHard;
        v.condition = HardnessCondition::NotModular;
        v.medianless_triple = w->triple;
        step("modular metric", "no: medianless triple (" + m.point(w->triple[0]) + "," +
                                   m.point(w->triple[1]) + "," + m.point(w->triple[2]) + ")");
        return v;
    }
    step("modular metric", "yes");

    UnderlyingGraph g = UnderlyingGraph::build(m);
    if (auto e = nonorientable_edge(g)) {
        v.outcome = Outcome::NPHard;
        v.condition = HardnessCondition::NotOrientable;
        v.bad_edge = *e;
        step("orientable underlying graph",
             "no: both orientations of {" + m.point(e->first) + "," + m.point(e->second) +
                 "} share an orbit");
        return v;
    }
    step("orientable underlying graph", "yes");

    if (auto w = orbit_invariance_witness(m, g)) {
        v.outcome = Outcome::NPHard;
        v.condition = HardnessCondition::NotOrbitInvariant;
        v.orbit_witness = *w;
        step("orbit-invariant lengths", "no: " + m.point(w->a.first) + "->" + m.point(w->a.second) +
                                            " vs " + m.point(w->b.first) + "->" +
                                            m.point(w->b.second));
        return v;
    }
    step("orbit-invariant lengths", "yes");

    if (auto t = find_biased_non_collinear_triple(m)) {
        bool vacuous = false;
        for (const auto& p : t->pairs)
            if (p.direction == BiasedPairWitness::Direction::Vacuous) vacuous = true;
        v.outcome = Outcome::NPHard;
        v.condition = HardnessCondition::BiasedNonCollinearTriple;
        v.biased_triple = *t;
        step("no biased non-collinear triple",
             std::string("no: (") + m.point(t->triple[0]) + "," + m.point(t->triple[1]) + "," +
                 m.point(t->triple[2]) + ")" + (vacuous ? " [vacuously biased pair]" : ""));
        return v;
    }
    step("no biased non-collinear triple", "yes");

    if (auto l = recognize_modular_lattice(g)) {
        v.outcome = Outcome::Tractable;
        v.certificate = TractabilityCertificate::ModularLatticeSubmodular;
        v.lattice = std::move(*l);
        step("modular lattice covering graph", "yes: bottom " + m.point(v.lattice->bottom));
        return v;
    }
    step("modular lattice covering graph", "no");

    if (auto c = star_center(g)) {
        v.outcome = Outcome::Tractable;
        v.certificate = TractabilityCertificate::StarPolymorphism;
        v.center = *c;
        v.star_partition = unbiased_partition(m, g, *c);
        step("star underlying graph", "yes: center " + m.point(*c) + ", " +
                                          std::to_string(v.star_partition->size()) +
                                          " unbiased set(s)");
        return v;
    }
    step("star underlying graph", "no");

    v.outcome = Outcome::Unknown;
    return v;
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Tractable: return "tractable";
        case Outcome::NPHard: return "np-hard";
        case Outcome::Unknown: return "unknown";
    }
    return "unknown";
}

const char* hardness_condition_name(HardnessCondition c) {
    switch (c) {
        case HardnessCondition::NotModular: return "not-modular";
        case HardnessCondition::NotOrientable: return "not-orientable";
        case HardnessCondition::NotOrbitInvariant: return "not-orbit-invariant";
        case HardnessCondition::BiasedNonCollinearTriple: return "biased-non-collinear-triple";
    }
    return "unknown";
}

const char* certificate_name(TractabilityCertificate c) {
    switch (c) {
        case TractabilityCertificate::ModularLatticeSubmodular:
            return "modular-lattice-submodular";
        case TractabilityCertificate::StarPolymorphism: return "star-polymorphism";
    }
    return "unknown";
}

}  // namespace dzext
