#include "dzext/blp.hpp"

#include <algorithm>

#include "dzext/classify.hpp"
#include "dzext/error.hpp"
#include "dzext/simplex.hpp"

namespace dzext {

namespace {

std::vector<int> resolve_pins(const ZeroExtInstance& inst,
                              const std::map<std::string, std::string>& fixings) {
    const int n = inst.num_variables();
    const int k = inst.num_terminals();
    std::vector<int> pinned(n, -1);
    for (int t = 0; t < k; ++t) pinned[t] = t;
    for (const auto& [name, target] : fixings) {
        int i = inst.index_of(name);
        if (i < k) throw Error(Errc::InvalidFixing, "cannot fix terminal " + name);
        try {
            pinned[i] = inst.metric().index_of(target);
        } catch (const Error&) {
            throw Error(Errc::InvalidFixing,
                        "fixing target " + target + " is not a terminal");
        }
    }
    return pinned;
}

}  // namespace

BlpSolution blp_relax(const ZeroExtInstance& inst,
                      const std::map<std::string, std::string>& fixings) {
    const int n = inst.num_variables();
    const int k = inst.num_terminals();
    const std::vector<int> pinned = resolve_pins(inst, fixings);

    std::vector<int> free_vars;
    std::vector<int> pos_of(n, -1);
    for (int i = inst.num_terminals(); i < n; ++i) {
        if (pinned[i] >= 0) continue;
        pos_of[i] = static_cast<int>(free_vars.size());
        free_vars.push_back(i);
    }
    const int f = static_cast<int>(free_vars.size());

    // Cost folding. Pairs between two pinned endpoints become a constant,
    // pairs with one pinned endpoint fold into a unary linear term, and
    // pairs between two free variables merge per unordered pair into one
    // joint block whose coefficient covers both directions.
    Rational constant(0);
    std::vector<std::vector<Rational>> unary_cost(f, std::vector<Rational>(k, Rational(0)));
    std::map<std::pair<int, int>, std::vector<Rational>> block_cost;
    for (const auto& e : inst.costs()) {
        int pu = pos_of[e.u];
        int pv = pos_of[e.v];
        if (pu < 0 && pv < 0) {
            constant += e.c * inst.metric().dist(pinned[e.u], pinned[e.v]);
        } else if (pu >= 0 && pv < 0) {
            for (int s = 0; s < k; ++s)
                unary_cost[pu][s] += e.c * inst.metric().dist(s, pinned[e.v]);
        } else if (pu < 0 && pv >= 0) {
            for (int t = 0; t < k; ++t)
                unary_cost[pv][t] += e.c * inst.metric().dist(pinned[e.u], t);
        } else {
            bool flip = pu > pv;
            auto key = flip ? std::make_pair(pv, pu) : std::make_pair(pu, pv);
            auto& coeff = block_cost[key];
            if (coeff.empty()) coeff.assign(k * k, Rational(0));
            for (int s = 0; s < k; ++s) {
                for (int t = 0; t < k; ++t) {
                    // coeff is indexed by (label of key.first, label of key.second)
                    if (flip)
                        coeff[t * k + s] += e.c * inst.metric().dist(s, t);
                    else
                        coeff[s * k + t] += e.c * inst.metric().dist(s, t);
                }
            }
        }
    }

    // Column layout: f*k unary columns, then k*k per block.
    LinearProgram lp;
    const int unary_cols = f * k;
    int cols = unary_cols;
    std::vector<std::pair<std::pair<int, int>, int>> blocks;  // (pair, column base)
    for (const auto& [key, coeff] : block_cost) {
        blocks.push_back({key, cols});
        cols += k * k;
    }
    lp.cost.assign(cols, Rational(0));
    for (int p = 0; p < f; ++p)
        for (int t = 0; t < k; ++t) lp.cost[p * k + t] = unary_cost[p][t];
    for (const auto& [key, base] : blocks) {
        const auto& coeff = block_cost.at(key);
        for (int st = 0; st < k * k; ++st) lp.cost[base + st] = coeff[st];
    }

    auto add_row = [&]() -> std::vector<Rational>& {
        lp.rows.emplace_back(cols, Rational(0));
        return lp.rows.back();
    };

    for (int p = 0; p < f; ++p) {
        auto& row = add_row();
        for (int t = 0; t < k; ++t) row[p * k + t] = 1;
        lp.rhs.push_back(Rational(1));
    }
    for (const auto& [key, base] : blocks) {
        const auto [p, q] = key;
        for (int s = 0; s < k; ++s) {
            auto& row = add_row();
            for (int t = 0; t < k; ++t) row[base + s * k + t] = 1;
            row[p * k + s] = -1;
            lp.rhs.push_back(Rational(0));
        }
        for (int t = 0; t < k; ++t) {
            auto& row = add_row();
            for (int s = 0; s < k; ++s) row[base + s * k + t] = 1;
            row[q * k + t] = -1;
            lp.rhs.push_back(Rational(0));
        }
    }

    LpResult res = solve_lp(lp);
    if (res.status != LpStatus::Optimal)
        throw Error(Errc::LpFailure, "relaxation was not solved to optimality");

    BlpSolution sol;
    sol.objective = res.objective + constant;
    for (int p = 0; p < f; ++p) {
        std::vector<Rational> dist(k);
        for (int t = 0; t < k; ++t) dist[t] = res.x[p * k + t];
        sol.unary[inst.variable(free_vars[p])] = std::move(dist);
    }
    for (const auto& [key, base] : blocks) {
        PairwiseBlock blk;
        blk.from = inst.variable(free_vars[key.first]);
        blk.to = inst.variable(free_vars[key.second]);
        blk.joint.assign(res.x.begin() + base, res.x.begin() + base + k * k);
        sol.pairwise.push_back(std::move(blk));
    }
    return sol;
}

SolveResult solve_tractable(const ZeroExtInstance& inst,
                            const Verdict& verdict) {
    Verdict fresh = classify(inst.metric());
    if (verdict.outcome != Outcome::Tractable ||
        fresh.outcome != Outcome::Tractable)
        throw Error(Errc::NotCertifiedTractable,
                    "metric is not classified tractable");

    const int n = inst.num_variables();
    const int k = inst.num_terminals();

    std::map<std::string, std::string> pins;
    BlpSolution relaxed = blp_relax(inst, pins);
    const Rational target = relaxed.objective;

    for (int i = k; i < n; ++i) {
        const std::string& name = inst.variable(i);
        // A point mass in the cached solution already witnesses that the pin
        // keeps the optimum, so the re-solve can be skipped.
        int mass_at = -1;
        auto it = relaxed.unary.find(name);
        if (it != relaxed.unary.end()) {
            for (int t = 0; t < k; ++t) {
                if (it->second[t] == 1) {
                    mass_at = t;
                    break;
                }
            }
        }
        if (mass_at >= 0) {
            pins[name] = inst.metric().point(mass_at);
            continue;
        }
        bool pinned = false;
        for (int t = 0; t < k && !pinned; ++t) {
            pins[name] = inst.metric().point(t);
            BlpSolution candidate = blp_relax(inst, pins);
            if (candidate.objective == target) {
                relaxed = std::move(candidate);
                pinned = true;
            } else {
                pins.erase(name);
            }
        }
        if (!pinned)
            throw Error(Errc::RoundingFailed,
                        "no terminal preserves the relaxation value for " + name);
    }

    SolveResult out;
    out.objective = target;
    out.labels = labels_from_names(inst, pins);
    return out;
}

}  // namespace dzext
