#include "dzext/gadget.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "dzext/classify.hpp"
#include "dzext/error.hpp"
#include "dzext/graph.hpp"

namespace dzext {

namespace mp = boost::multiprecision;

std::vector<Rational> escalation_multipliers(const DirectedMetric& m,
                                             const std::vector<CostLayer>& layers,
                                             int doubling) {
    Rational max_mu(0);
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) max_mu = std::max(max_mu, m.dist(i, j));

    std::vector<Rational> mult;
    Rational cum(0);  // largest total the layers priced so far can reach
    for (std::size_t l = 0; l < layers.size(); ++l) {
        Rational m_l(1);
        if (l > 0) {
            // Values of this layer live on a grid of spacing 1/D; any
            // multiplier above D * cum makes the layer dominate everything
            // below it.
            Int d = 1;
            for (const auto& e : layers[l].entries) {
                for (int i = 0; i < m.size(); ++i)
                    for (int j = 0; j < m.size(); ++j)
                        d = mp::lcm(d, mp::denominator(Rational(e.c * m.dist(i, j))));
            }
            m_l = Rational(d) * (2 * cum + 1);
            for (int p = 0; p < doubling; ++p) m_l *= 2;
        }
        Rational cap(0);
        for (const auto& e : layers[l].entries) cap += e.c * max_mu;
        cum += m_l * cap;
        mult.push_back(m_l);
    }
    return mult;
}

std::vector<NamedCost> combine_layers(const std::vector<CostLayer>& layers,
                                      const std::vector<Rational>& multipliers) {
    std::vector<NamedCost> out;
    for (std::size_t l = 0; l < layers.size(); ++l) {
        for (const auto& e : layers[l].entries)
            out.push_back({e.from, e.to, e.c * multipliers[l]});
    }
    return out;
}

namespace {

std::string pair_name(const DirectedMetric& m, int a, int b) {
    return "(" + m.point(a) + ", " + m.point(b) + ")";
}

ZeroExtInstance instance_from_layers(const DirectedMetric& m,
                                     const std::vector<std::string>& aux,
                                     const std::vector<CostLayer>& layers,
                                     const std::vector<Rational>& multipliers) {
    return ZeroExtInstance::make(m, aux, combine_layers(layers, multipliers));
}

}  // namespace

PairGadgetReport verify_pair_gadget(const PairGadget& g) {
    const DirectedMetric& m = g.instance.metric();
    const int k = m.size();

    PairGadgetReport rep;
    rep.table.resize(k * k);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            std::map<std::string, std::string> fix{{g.x, m.point(a)},
                                                   {g.y, m.point(b)}};
            rep.table[a * k + b] = brute_force(g.instance, fix).objective;
        }
    }

    rep.tau_star = rep.table[g.s * k + g.t];
    if (rep.table[g.t * k + g.s] != rep.tau_star)
        throw Error(Errc::ConditionFailed,
                    "pair clause (i): crossing fixings differ, " +
                        pair_name(m, g.s, g.t) + " vs " + pair_name(m, g.t, g.s));
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            const Rational& v = rep.table[a * k + b];
            if (v == rep.tau_star) rep.optimal_fixings.push_back({a, b});
            if (v < rep.tau_star)
                throw Error(Errc::ConditionFailed,
                            "pair clause (i): " + pair_name(m, a, b) +
                                " beats the designated fixings");
        }
    }
    if (rep.optimal_fixings.size() != 2) {
        std::string witness = "?";
        for (auto [a, b] : rep.optimal_fixings) {
            if ((a == g.s && b == g.t) || (a == g.t && b == g.s)) continue;
            witness = pair_name(m, a, b);
            break;
        }
        throw Error(Errc::ConditionFailed,
                    "pair clause (iii): " + witness + " ties the optimum");
    }

    Rational second;
    bool have_second = false;
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            if ((a == g.s && b == g.t) || (a == g.t && b == g.s)) continue;
            const Rational& v = rep.table[a * k + b];
            if (!have_second || v < second) {
                second = v;
                have_second = true;
            }
        }
    }
    rep.delta = second - rep.tau_star;
    if (rep.delta <= 0)
        throw Error(Errc::ConditionFailed, "pair clause (ii): no positive separation");
    if (rep.table[g.s * k + g.s] != rep.tau_star + rep.delta)
        throw Error(Errc::ConditionFailed,
                    "pair clause (ii): " + pair_name(m, g.s, g.s) +
                        " does not sit at tau* + delta");
    if (rep.table[g.t * k + g.t] != rep.tau_star + rep.delta)
        throw Error(Errc::ConditionFailed,
                    "pair clause (ii): " + pair_name(m, g.t, g.t) +
                        " does not sit at tau* + delta");
    return rep;
}

SextupleGadgetReport verify_sextuple_gadget(const SextupleGadget& g) {
    const DirectedMetric& m = g.instance.metric();
    const int k = m.size();

    // Allowed labels per z_j under the designated pattern:
    // {s_{j-1}, s_{j+1}} with triple indices mod 3.
    std::array<std::array<int, 2>, 6> allowed{};
    for (int j = 0; j < 6; ++j) {
        allowed[j] = {g.triple[(j + 2) % 3], g.triple[(j + 1) % 3]};
    }

    std::size_t total = 1;
    for (int j = 0; j < 6; ++j) total *= static_cast<std::size_t>(k);

    SextupleGadgetReport rep;
    rep.table.resize(total);
    std::array<int, 6> labels{};
    bool have_designated = false;
    bool have_other = false;
    Rational designated_value, other_min;

    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int j = 5; j >= 0; --j) {
            labels[j] = static_cast<int>(rem % k);
            rem /= k;
        }
        std::map<std::string, std::string> fix;
        for (int j = 0; j < 6; ++j) fix[g.z[j]] = m.point(labels[j]);
        const Rational v = brute_force(g.instance, fix).objective;
        rep.table[idx] = v;

        bool designated = true;
        for (int j = 0; j < 6 && designated; ++j)
            designated = labels[j] == allowed[j][0] || labels[j] == allowed[j][1];
        if (designated) {
            if (!have_designated) {
                designated_value = v;
                have_designated = true;
            } else if (v != designated_value) {
                throw Error(Errc::ConditionFailed,
                            "sextuple clause (i): designated fixings are not all equal");
            }
        } else if (!have_other || v < other_min) {
            other_min = v;
            have_other = true;
        }
    }

    rep.tau_star = designated_value;
    auto labels_at = [&](std::size_t idx) {
        std::array<int, 6> ls{};
        std::size_t rem = idx;
        for (int j = 5; j >= 0; --j) {
            ls[j] = static_cast<int>(rem % k);
            rem /= k;
        }
        return ls;
    };
    auto fixing_name = [&](const std::array<int, 6>& ls) {
        std::string out = "(";
        for (int j = 0; j < 6; ++j)
            out += (j ? ", " : "") + m.point(ls[j]);
        return out + ")";
    };
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (rep.table[idx] < rep.tau_star)
            throw Error(Errc::ConditionFailed,
                        "sextuple clause (i): " + fixing_name(labels_at(idx)) +
                            " beats the designated fixings");
        if (rep.table[idx] == rep.tau_star)
            rep.optimal_fixings.push_back(labels_at(idx));
    }
    if (rep.optimal_fixings.size() != 64) {
        std::string witness = "?";
        for (const auto& ls : rep.optimal_fixings) {
            bool designated = true;
            for (int j = 0; j < 6 && designated; ++j)
                designated = ls[j] == allowed[j][0] || ls[j] == allowed[j][1];
            if (!designated) {
                witness = fixing_name(ls);
                break;
            }
        }
        throw Error(Errc::ConditionFailed,
                    "sextuple clause (ii): " + witness + " ties the optimum");
    }
    rep.delta = other_min - rep.tau_star;
    if (rep.delta <= 0)
        throw Error(Errc::ConditionFailed, "sextuple clause (ii): no positive separation");
    return rep;
}

SextupleGadget build_nonmodular_gadget(const DirectedMetric& m) {
    auto triple = minimal_medianless_triple(m);
    if (!triple)
        throw Error(Errc::MetricIsModular, "metric has a median for every triple");
    const std::array<int, 3> s = *triple;

    auto mu_pair = [&](int i) {
        // mu_i = mu(s_{i-1}, s_{i+1}) + mu(s_{i+1}, s_{i-1}), indices mod 3
        int lo = s[(i + 2) % 3], hi = s[(i + 1) % 3];
        return m.dist(lo, hi) + m.dist(hi, lo);
    };
    std::array<Rational, 3> mu{mu_pair(0), mu_pair(1), mu_pair(2)};
    std::array<Rational, 3> a;
    for (int i = 0; i < 3; ++i)
        a[i] = (mu[(i + 2) % 3] + mu[(i + 1) % 3] - mu[i]) /
               (mu[(i + 2) % 3] * mu[(i + 1) % 3]);

    SextupleGadget g;
    g.triple = s;
    for (int j = 0; j < 6; ++j) g.z[j] = "z" + std::to_string(j);

    CostLayer base, coupling;
    for (int i = 0; i < 6; ++i) {
        const std::string& si = m.point(s[i % 3]);
        for (int off : {1, 2}) {
            const std::string& zj = g.z[(i + off) % 6];
            coupling.entries.push_back({si, zj, Rational(1)});
            coupling.entries.push_back({zj, si, Rational(1)});
        }
    }
    for (int i = 0; i < 3; ++i) {
        const std::string& si = m.point(s[i]);
        for (int j = 0; j < 6; ++j) {
            base.entries.push_back({si, g.z[j], a[i]});
            base.entries.push_back({g.z[j], si, a[i]});
        }
    }

    g.layers = {base, coupling};
    g.multipliers = escalation_multipliers(m, g.layers);
    g.instance = instance_from_layers(m, {g.z.begin(), g.z.end()}, g.layers,
                                      g.multipliers);
    g.report = verify_sextuple_gadget(g);
    g.tau_star = g.report.tau_star;
    g.delta = g.report.delta;
    g.verified = true;
    return g;
}

PairGadget compose_hexagon(const SextupleGadget& g) {
    if (!g.verified)
        throw Error(Errc::GadgetNotVerified, "sextuple gadget is not verified");
    const DirectedMetric& m = g.instance.metric();

    auto mu_pair = [&](int i) {
        int lo = g.triple[(i + 2) % 3], hi = g.triple[(i + 1) % 3];
        return m.dist(lo, hi) + m.dist(hi, lo);
    };
    std::array<Rational, 3> mu{mu_pair(0), mu_pair(1), mu_pair(2)};
    std::array<Rational, 3> h;
    for (int i = 0; i < 3; ++i)
        h[i] = (mu[(i + 2) % 3] + mu[(i + 1) % 3] - mu[i]) / 2;
    Rational alpha = 2 * std::min({h[0] * h[0], h[1] * h[1], h[2] * h[2]});
    if (alpha == 0)
        throw Error(Errc::DegenerateGadget,
                    "hexagon ring weight vanishes, separation would be zero");

    CostLayer ring;
    for (int i = 0; i < 6; ++i) {
        const Rational& w = h[(i + 2) % 3];  // h_{i-1}, indices mod 3
        ring.entries.push_back({g.z[i], g.z[(i + 1) % 6], w});
        ring.entries.push_back({g.z[(i + 1) % 6], g.z[i], w});
    }

    PairGadget p;
    p.layers.push_back(ring);
    for (const auto& layer : g.layers) p.layers.push_back(layer);
    p.multipliers = escalation_multipliers(m, p.layers);
    p.instance = instance_from_layers(m, {g.z.begin(), g.z.end()}, p.layers,
                                      p.multipliers);
    p.s = g.triple[0];
    p.t = g.triple[2];
    p.x = g.z[1];
    p.y = g.z[4];
    p.report = verify_pair_gadget(p);
    p.tau_star = p.report.tau_star;
    p.delta = p.report.delta;
    p.verified = true;
    return p;
}

PairGadget build_orbit_varying_gadget(const DirectedMetric& m) {
    UnderlyingGraph graph = UnderlyingGraph::build(m);
    auto cyc = find_orbit_varying_cycle(m, graph);
    if (!cyc)
        throw Error(Errc::NoOrbitVaryingCycle,
                    "no four-cycle with equal nonzero length differences");

    std::array<int, 4> s = cyc->cycle;
    Rational k = cyc->k;
    if (k < 0) {
        // Rotating the cycle by one position flips the sign of every
        // difference.
        s = {s[1], s[2], s[3], s[0]};
        k = -k;
    }

    const Rational mu10 = m.dist(s[1], s[0]);
    const Rational mu12 = m.dist(s[1], s[2]);
    const Rational mu30 = m.dist(s[3], s[0]);
    const Rational mu32 = m.dist(s[3], s[2]);

    const std::vector<std::string> aux{"x0", "x1", "y0", "y1",
                                       "z0", "z1", "w0", "w1"};
    auto P = [&](int i) { return m.point(s[i]); };

    CostLayer c0, c1, c2, c3, c4;
    auto both = [](CostLayer& l, const std::string& a, const std::string& b,
                   const Rational& w) {
        l.entries.push_back({a, b, w});
        l.entries.push_back({b, a, w});
    };

    for (const char* xi : {"x0", "x1"}) {
        both(c4, P(2), xi, 1);
        both(c4, P(3), xi, 1);
    }
    for (const char* zi : {"z0", "z1"}) {
        both(c4, P(0), zi, 1);
        both(c4, P(1), zi, 1);
    }
    for (const char* yi : {"y0", "y1"})
        for (int j = 0; j < 4; ++j) both(c4, P(j), yi, 1);
    both(c4, P(1), "w0", 1);
    both(c4, P(2), "w0", 1);
    both(c4, P(0), "w1", 1);
    both(c4, P(3), "w1", 1);

    c3.entries.push_back({"y0", P(0), k * k + mu32 * k + mu32 * mu12});
    c3.entries.push_back({"y0", P(1), (mu10 + mu12) * k + mu10 * mu12});
    c3.entries.push_back({"y0", P(2), k * k + mu10 * k + mu10 * mu30});
    c3.entries.push_back({"y0", P(3), (mu32 + mu30) * k + mu32 * mu30});
    c3.entries.push_back({P(0), "y1", (mu10 + mu30) * k + mu10 * mu30});
    c3.entries.push_back({P(1), "y1", k * k + mu32 * k + mu32 * mu30});
    c3.entries.push_back({P(2), "y1", (mu32 + mu12) * k + mu32 * mu12});
    c3.entries.push_back({P(3), "y1", k * k + mu10 * k + mu10 * mu12});

    both(c2, "x0", "z0", 1);
    both(c2, "x1", "z1", 1);
    for (int i = 0; i < 2; ++i) {
        std::string xi = "x" + std::to_string(i);
        std::string zi = "z" + std::to_string(i);
        std::string yi = "y" + std::to_string(i);
        both(c1, xi, yi, 1);
        both(c1, zi, yi, 1);
        for (int j = 0; j < 2; ++j) both(c0, yi, "w" + std::to_string(j), 1);
    }

    PairGadget p;
    p.layers = {c0, c1, c2, c3, c4};
    p.multipliers = escalation_multipliers(m, p.layers);
    p.instance = instance_from_layers(m, aux, p.layers, p.multipliers);
    p.s = s[2];
    p.t = s[3];
    p.x = "x0";
    p.y = "x1";
    p.report = verify_pair_gadget(p);
    p.tau_star = p.report.tau_star;
    p.delta = p.report.delta;
    p.verified = true;
    return p;
}

PairGadget build_nonorientable_gadget(const DirectedMetric& m) {
    UnderlyingGraph graph = UnderlyingGraph::build(m);
    auto witness = nonorientable_edge(graph);
    if (!witness)
        throw Error(Errc::GraphOrientable, "every orbit holds one orientation only");

    // Shortest projectivity sequence from the witness arc to its reversal:
    // consecutive arcs are opposite (parallel) sides of a four-cycle.
    const int n = graph.size();
    auto arc_id = [n](int u, int v) { return u * n + v; };
    std::vector<int> parent(n * n, -2);
    std::queue<int> bfs;
    const int start = arc_id(witness->first, witness->second);
    const int goal = arc_id(witness->second, witness->first);
    parent[start] = -1;
    bfs.push(start);
    while (!bfs.empty() && parent[goal] == -2) {
        int id = bfs.front();
        bfs.pop();
        const int u = id / n, v = id % n;
        for (int u2 : graph.neighbors(u)) {
            if (u2 == v) continue;
            for (int v2 : graph.neighbors(v)) {
                if (v2 == u || v2 == u2 || !graph.adjacent(u2, v2)) continue;
                int next = arc_id(u2, v2);
                if (parent[next] != -2) continue;
                parent[next] = id;
                bfs.push(next);
            }
        }
    }
    if (parent[goal] == -2)
        throw Error(Errc::NoWitnessSequence,
                    "no projectivity sequence reaches the reversed edge");

    std::vector<Arc> seq;
    for (int id = goal; id != -1; id = parent[id]) seq.push_back({id / n, id % n});
    std::reverse(seq.begin(), seq.end());
    const int k = static_cast<int>(seq.size()) - 1;

    std::vector<std::string> aux;
    for (int i = 0; i < 2 * k; ++i) aux.push_back("z" + std::to_string(i));

    CostLayer ring, coupling;
    for (int i = 0; i < 2 * k; ++i) {
        const std::string& zi = aux[i];
        const std::string& znext = aux[(i + 1) % (2 * k)];
        ring.entries.push_back({zi, znext, Rational(1)});
        ring.entries.push_back({znext, zi, Rational(1)});
        const std::string si = m.point(seq[i % k].first);
        const std::string ti = m.point(seq[i % k].second);
        coupling.entries.push_back({zi, si, Rational(1)});
        coupling.entries.push_back({si, zi, Rational(1)});
        coupling.entries.push_back({zi, ti, Rational(1)});
        coupling.entries.push_back({ti, zi, Rational(1)});
    }

    PairGadget p;
    p.layers = {ring, coupling};
    p.multipliers = escalation_multipliers(m, p.layers);
    p.instance = instance_from_layers(m, aux, p.layers, p.multipliers);
    p.s = seq[0].first;
    p.t = seq[0].second;
    p.x = aux[0];
    p.y = aux[k];
    p.report = verify_pair_gadget(p);
    p.tau_star = p.report.tau_star;
    p.delta = p.report.delta;
    p.verified = true;
    return p;
}

SextupleGadget build_biased_triple_gadget(const DirectedMetric& m) {
    auto found = find_biased_non_collinear_triple(m);
    if (!found)
        throw Error(Errc::NoBiasedTriple, "no biased non-collinear triple");
    const std::array<int, 3>& s = found->triple;

    SextupleGadget g;
    g.triple = s;
    for (int j = 0; j < 6; ++j) g.z[j] = "z" + std::to_string(j);

    CostLayer base, coupling;
    for (int i = 0; i < 6; ++i) {
        const int prev = s[(i + 2) % 3];
        const int next = s[(i + 1) % 3];
        const std::string& zi = g.z[i];
        for (int c : {prev, next}) {
            coupling.entries.push_back({m.point(c), zi, Rational(1)});
            coupling.entries.push_back({zi, m.point(c), Rational(1)});
        }

        auto w = biased_pair_witness(m, prev, next);
        if (!w)
            throw Error(Errc::AmbiguousDirection,
                        "pair " + pair_name(m, prev, next) +
                            " has no uniform ratio direction");
        // The vacuous case takes the ">" branch by convention.
        if (w->direction != BiasedPairWitness::Direction::Less) {
            base.entries.push_back({m.point(prev), zi, m.dist(next, prev)});
            base.entries.push_back({m.point(next), zi, m.dist(prev, next)});
        } else {
            base.entries.push_back({zi, m.point(prev), m.dist(prev, next)});
            base.entries.push_back({zi, m.point(next), m.dist(next, prev)});
        }
    }

    g.layers = {base, coupling};
    g.multipliers = escalation_multipliers(m, g.layers);
    g.instance = instance_from_layers(m, {g.z.begin(), g.z.end()}, g.layers,
                                      g.multipliers);
    g.report = verify_sextuple_gadget(g);
    g.tau_star = g.report.tau_star;
    g.delta = g.report.delta;
    g.verified = true;
    return g;
}

namespace {

template <typename Gadget, typename Report>
bool stable_under_doubling(const Gadget& g, Report (*verify)(const Gadget&)) {
    if (!g.verified)
        throw Error(Errc::GadgetNotVerified, "gadget is not verified");
    Gadget doubled = g;
    doubled.multipliers =
        escalation_multipliers(g.instance.metric(), g.layers, 1);
    std::vector<std::string> aux(g.instance.variables().begin() +
                                     g.instance.num_terminals(),
                                 g.instance.variables().end());
    doubled.instance = ZeroExtInstance::make(
        g.instance.metric(), aux, combine_layers(g.layers, doubled.multipliers));
    Report rep = verify(doubled);
    return rep.optimal_fixings == g.report.optimal_fixings;
}

}  // namespace

bool pair_gadget_stable_under_doubling(const PairGadget& g) {
    return stable_under_doubling(g, &verify_pair_gadget);
}

bool sextuple_gadget_stable_under_doubling(const SextupleGadget& g) {
    return stable_under_doubling(g, &verify_sextuple_gadget);
}

MaxCutInstance MaxCutInstance::make(int num_vertices,
                                    std::vector<std::pair<int, int>> edges,
                                    int threshold) {
    MaxCutInstance mc;
    mc.num_vertices = num_vertices;
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw Error(Errc::BadReduction, "self-loop in the graph");
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
            throw Error(Errc::BadReduction, "edge endpoint out of range");
        auto e = std::minmax(u, v);
        if (!seen.insert({e.first, e.second}).second)
            throw Error(Errc::BadReduction, "duplicate edge");
        mc.edges.push_back({e.first, e.second});
    }
    if (threshold < 1 || threshold > static_cast<int>(mc.edges.size()))
        throw Error(Errc::BadReduction,
                    "threshold must lie between 1 and the edge count");
    mc.threshold = threshold;
    return mc;
}

int max_cut_value(int num_vertices,
                  const std::vector<std::pair<int, int>>& edges) {
    int best = 0;
    for (unsigned long mask = 0; mask < (1ul << num_vertices); ++mask) {
        int cut = 0;
        for (auto [u, v] : edges)
            cut += ((mask >> u) & 1) != ((mask >> v) & 1) ? 1 : 0;
        best = std::max(best, cut);
    }
    return best;
}

ReductionResult reduce_maxcut(const MaxCutInstance& mc, const PairGadget& g) {
    if (!g.verified)
        throw Error(Errc::GadgetNotVerified, "pair gadget is not verified");
    const DirectedMetric& m = g.instance.metric();
    const int k = m.size();

    ReductionResult out;
    for (int u = 0; u < mc.num_vertices; ++u)
        out.vertex_names.push_back("u" + std::to_string(u));

    std::vector<std::string> aux = out.vertex_names;
    std::vector<NamedCost> costs;
    for (std::size_t e = 0; e < mc.edges.size(); ++e) {
        auto [u, v] = mc.edges[e];
        auto rename = [&](const std::string& name) -> std::string {
            if (name == g.x) return out.vertex_names[u];
            if (name == g.y) return out.vertex_names[v];
            for (int t = 0; t < k; ++t)
                if (name == m.point(t)) return name;
            return name + "@e" + std::to_string(e);
        };
        for (const auto& c : g.instance.costs()) {
            costs.push_back({rename(g.instance.variable(c.u)),
                             rename(g.instance.variable(c.v)), c.c});
        }
    }
    for (std::size_t e = 0; e < mc.edges.size(); ++e) {
        for (int i = k; i < g.instance.num_variables(); ++i) {
            const std::string& name = g.instance.variable(i);
            if (name == g.x || name == g.y) continue;
            aux.push_back(name + "@e" + std::to_string(e));
        }
    }

    out.instance = ZeroExtInstance::make(m, aux, costs);
    out.threshold = Rational(static_cast<int>(mc.edges.size())) * g.tau_star +
                    Rational(static_cast<int>(mc.edges.size()) - mc.threshold) *
                        g.delta;
    return out;
}

Rational reduced_optimum_by_decomposition(const MaxCutInstance& mc,
                                          const PairGadget& g) {
    if (!g.verified)
        throw Error(Errc::GadgetNotVerified, "pair gadget is not verified");
    const int k = g.instance.metric().size();
    const int n = mc.num_vertices;

    std::vector<int> label(n, 0);
    Rational best;
    bool have = false;
    while (true) {
        Rational total(0);
        for (auto [u, v] : mc.edges)
            total += g.report.table[label[u] * k + label[v]];
        if (!have || total < best) {
            best = total;
            have = true;
        }
        int i = n - 1;
        while (i >= 0 && label[i] == k - 1) label[i--] = 0;
        if (i < 0) break;
        ++label[i];
    }
    return best;
}

}  // namespace dzext
