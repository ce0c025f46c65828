#include "dzext/instance.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "dzext/error.hpp"

namespace dzext {

namespace mp = boost::multiprecision;

ZeroExtInstance ZeroExtInstance::make(
    DirectedMetric metric, const std::vector<std::string>& free_variables,
    const std::vector<NamedCost>& costs) {
    ZeroExtInstance inst;
    inst.metric_ = std::move(metric);
    inst.variables_ = inst.metric_.points();
    for (const auto& name : free_variables) {
        for (const auto& seen : inst.variables_) {
            if (seen == name)
                throw Error(Errc::DuplicatePoint, "duplicate variable " + name);
        }
        inst.variables_.push_back(name);
    }

    std::map<std::pair<int, int>, Rational> merged;
    for (const auto& nc : costs) {
        int u = inst.index_of(nc.from);
        int v = inst.index_of(nc.to);
        if (nc.c < 0)
            throw Error(Errc::BadWeights,
                        "negative cost on (" + nc.from + ", " + nc.to + ")");
        if (u == v || nc.c == 0) continue;
        merged[{u, v}] += nc.c;
    }
    for (const auto& [key, c] : merged) {
        if (c == 0) continue;
        inst.costs_.push_back({key.first, key.second, c});
    }
    return inst;
}

int ZeroExtInstance::index_of(const std::string& name) const {
    for (int i = 0; i < num_variables(); ++i) {
        if (variables_[i] == name) return i;
    }
    throw Error(Errc::UnknownVariable, "unknown variable " + name);
}

Rational objective_value(const ZeroExtInstance& inst,
                         const std::vector<int>& labels) {
    const int n = inst.num_variables();
    const int k = inst.num_terminals();
    if (static_cast<int>(labels.size()) != n)
        throw Error(Errc::InvalidAssignment, "label vector has wrong length");
    for (int i = 0; i < n; ++i) {
        if (labels[i] < 0 || labels[i] >= k)
            throw Error(Errc::InvalidAssignment,
                        "label out of range for " + inst.variable(i));
        if (i < k && labels[i] != i)
            throw Error(Errc::InvalidAssignment,
                        "terminal " + inst.variable(i) + " not labeled itself");
    }
    Rational total(0);
    for (const auto& e : inst.costs())
        total += e.c * inst.metric().dist(labels[e.u], labels[e.v]);
    return total;
}

std::vector<int> labels_from_names(
    const ZeroExtInstance& inst,
    const std::map<std::string, std::string>& assignment) {
    const int n = inst.num_variables();
    const int k = inst.num_terminals();
    std::vector<int> labels(n, -1);
    for (int t = 0; t < k; ++t) labels[t] = t;
    for (const auto& [name, target] : assignment) {
        int i = inst.index_of(name);
        int t = inst.metric().index_of(target);
        if (i < k && t != i)
            throw Error(Errc::InvalidAssignment,
                        "terminal " + name + " cannot be relabeled");
        labels[i] = t;
    }
    for (int i = k; i < n; ++i) {
        if (labels[i] < 0)
            throw Error(Errc::InvalidAssignment,
                        "no label for " + inst.variable(i));
    }
    return labels;
}

long long brute_force_budget() {
    const char* env = std::getenv("DIRZEROEXT_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultBruteForceBudget;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
        throw Error(Errc::ParseError,
                    std::string("DIRZEROEXT_BUDGET is not a positive integer: ") + env);
    return v;
}

namespace {

// Depth-first enumeration over the free variables, one template
// instantiation per weight type. Weights are nonnegative, so a partial sum
// that already matches the incumbent can be cut. Labels are tried in
// terminal order and positions in variable order, which makes the first
// strict improvement the lexicographically first optimum.
template <typename W>
struct Dfs {
    struct FreeArm {
        int other_pos;
        W c;
        bool from_this;
    };

    int k = 0;
    std::vector<std::vector<W>> mu;
    std::vector<std::vector<W>> fixed_contrib;  // [position][candidate label]
    std::vector<std::vector<FreeArm>> free_arms;

    bool found = false;
    W best{};
    std::vector<int> best_labels;
    std::vector<int> cur;

    void run(W base) {
        cur.assign(fixed_contrib.size(), 0);
        best_labels = cur;
        walk(0, base);
    }

    void walk(std::size_t p, W acc) {
        if (found && acc >= best) return;
        if (p == fixed_contrib.size()) {
            best = acc;
            best_labels = cur;
            found = true;
            return;
        }
        for (int x = 0; x < k; ++x) {
            W add = fixed_contrib[p][x];
            for (const auto& a : free_arms[p]) {
                int y = cur[a.other_pos];
                add += a.from_this ? a.c * mu[x][y] : a.c * mu[y][x];
            }
            cur[p] = x;
            walk(p + 1, acc + add);
        }
    }
};

Int lcm_denominators(const ZeroExtInstance& inst, bool metric_side) {
    Int l = 1;
    if (metric_side) {
        const int k = inst.num_terminals();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                l = mp::lcm(l, mp::denominator(inst.metric().dist(i, j)));
    } else {
        for (const auto& e : inst.costs()) l = mp::lcm(l, mp::denominator(e.c));
    }
    return l;
}

}  // namespace

SolveResult brute_force(const ZeroExtInstance& inst,
                        const std::map<std::string, std::string>& fixings,
                        std::optional<long long> budget) {
    const int n = inst.num_variables();
    const int k = inst.num_terminals();
    const long long cap = budget ? *budget : brute_force_budget();

    std::vector<int> pinned(n, -1);
    for (int t = 0; t < k; ++t) pinned[t] = t;
    for (const auto& [name, target] : fixings) {
        int i = inst.index_of(name);
        if (i < k)
            throw Error(Errc::InvalidFixing,
                        "cannot fix terminal " + name);
        try {
            pinned[i] = inst.metric().index_of(target);
        } catch (const Error&) {
            throw Error(Errc::InvalidFixing,
                        "fixing target " + target + " is not a terminal");
        }
    }

    std::vector<int> free_vars;
    for (int i = k; i < n; ++i)
        if (pinned[i] < 0) free_vars.push_back(i);

    {
        Int space = 1;
        for (std::size_t p = 0; p < free_vars.size(); ++p) {
            space *= k;
            if (space > cap)
                throw Error(Errc::BudgetExceeded,
                            "assignment space exceeds budget of " +
                                std::to_string(cap));
        }
    }

    std::vector<int> pos_of(n, -1);
    for (std::size_t p = 0; p < free_vars.size(); ++p) pos_of[free_vars[p]] = static_cast<int>(p);

    // Scaled-integer fast path when every intermediate fits in 128 bits,
    // exact rationals otherwise.
    const Int dm = lcm_denominators(inst, true);
    const Int dc = lcm_denominators(inst, false);
    Int max_mu = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Int s = mp::numerator(inst.metric().dist(i, j)) * dm /
                    mp::denominator(inst.metric().dist(i, j));
            max_mu = std::max(max_mu, s);
        }
    Int total_bound = 0;
    for (const auto& e : inst.costs()) {
        Int sc = mp::numerator(e.c) * dc / mp::denominator(e.c);
        total_bound += sc * max_mu;
    }
    const Int limit = Int(1) << 126;
    const bool use_int = total_bound < limit;

    auto scaled_mu = [&](int i, int j) -> Int {
        return mp::numerator(inst.metric().dist(i, j)) * dm /
               mp::denominator(inst.metric().dist(i, j));
    };
    auto scaled_c = [&](const Rational& c) -> Int {
        return mp::numerator(c) * dc / mp::denominator(c);
    };

    SolveResult result;
    result.labels = pinned;

    auto assemble = [&](auto& dfs, auto conv_cost, auto base, auto conv_mu) {
        dfs.k = k;
        dfs.mu.assign(k, {});
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) dfs.mu[i].push_back(conv_mu(i, j));
        }
        dfs.fixed_contrib.assign(free_vars.size(), {});
        dfs.free_arms.assign(free_vars.size(), {});
        for (std::size_t p = 0; p < free_vars.size(); ++p)
            dfs.fixed_contrib[p].assign(k, base);

        auto acc_base = base;
        for (const auto& e : inst.costs()) {
            auto c = conv_cost(e.c);
            int pu = pos_of[e.u];
            int pv = pos_of[e.v];
            if (pu < 0 && pv < 0) {
                acc_base += c * dfs.mu[pinned[e.u]][pinned[e.v]];
            } else if (pu >= 0 && pv < 0) {
                for (int x = 0; x < k; ++x)
                    dfs.fixed_contrib[pu][x] += c * dfs.mu[x][pinned[e.v]];
            } else if (pu < 0 && pv >= 0) {
                for (int x = 0; x < k; ++x)
                    dfs.fixed_contrib[pv][x] += c * dfs.mu[pinned[e.u]][x];
            } else if (pu > pv) {
                dfs.free_arms[pu].push_back({pv, c, true});
            } else {
                dfs.free_arms[pv].push_back({pu, c, false});
            }
        }
        dfs.run(acc_base);
        for (std::size_t p = 0; p < free_vars.size(); ++p)
            result.labels[free_vars[p]] = dfs.best_labels[p];
    };

    if (use_int) {
        using I128 = mp::int128_t;
        Dfs<I128> dfs;
        assemble(
            dfs, [&](const Rational& c) { return static_cast<I128>(scaled_c(c)); },
            I128(0),
            [&](int i, int j) { return static_cast<I128>(scaled_mu(i, j)); });
        result.objective = Rational(Int(dfs.best), dm * dc);
    } else {
        Dfs<Rational> dfs;
        assemble(
            dfs, [](const Rational& c) { return c; }, Rational(0),
            [&](int i, int j) { return inst.metric().dist(i, j); });
        result.objective = dfs.best;
    }
    return result;
}

}  // namespace dzext
