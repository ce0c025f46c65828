#include "dzext/polymorphism.hpp"

#include <algorithm>
#include <map>

namespace dzext {

bool is_idempotent(const BinaryOperation& op) {
    for (size_t i = 0; i < op.table.size(); ++i)
        if (op.table[i][i] != static_cast<int>(i)) return false;
    return true;
}

bool is_commutative(const BinaryOperation& op) {
    const int n = static_cast<int>(op.table.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (op.table[i][j] != op.table[j][i]) return false;
    return true;
}

bool is_associative(const BinaryOperation& op) {
    const int n = static_cast<int>(op.table.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (op.apply(op.apply(i, j), k) != op.apply(i, op.apply(j, k))) return false;
    return true;
}

bool is_semilattice_operation(const BinaryOperation& op) {
    return is_idempotent(op) && is_commutative(op) && is_associative(op);
}

void FractionalPolymorphism::validate(int n) const {
    Rational total = 0;
    for (const auto& e : entries) {
        if (e.weight <= 0) throw Error(Errc::BadWeights, "weights must be positive");
        if (static_cast<int>(e.op.table.size()) != n)
            throw Error(Errc::BadWeights, "operation table has wrong size");
        for (const auto& row : e.op.table) {
            if (static_cast<int>(row.size()) != n)
                throw Error(Errc::BadWeights, "operation table has wrong size");
            for (int v : row)
                if (v < 0 || v >= n) throw Error(Errc::BadWeights, "operation value out of range");
        }
        total += e.weight;
    }
    if (total != 1) throw Error(Errc::BadWeights, "weights must sum to 1, got " +
                                                      format_rational(total));
}

bool FractionalPolymorphism::has_semilattice_operation() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const WeightedOperation& e) { return is_semilattice_operation(e.op); });
}

std::optional<PolymorphismViolation> check_polymorphism(const DirectedMetric& m,
                                                        const FractionalPolymorphism& poly,
                                                        bool check_unary) {
    const int n = m.size();
    poly.validate(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Rational lhs = 0;
                    for (const auto& e : poly.entries)
                        lhs += e.weight * m.dist(e.op.apply(a, c), e.op.apply(b, d));
                    Rational rhs = (m.dist(a, b) + m.dist(c, d)) / 2;
                    if (lhs > rhs)
                        return PolymorphismViolation{
                            PolymorphismViolation::Kind::Binary, a, b, c, d, -1, lhs, rhs};
                }
    if (!check_unary) return std::nullopt;
    for (int t = 0; t < n; ++t)
        for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2) {
                Rational to_t = 0, from_t = 0;
                for (const auto& e : poly.entries) {
                    int v = e.op.apply(x1, x2);
                    to_t += e.weight * m.dist(v, t);
                    from_t += e.weight * m.dist(t, v);
                }
                Rational rhs_to = (m.dist(x1, t) + m.dist(x2, t)) / 2;
                Rational rhs_from = (m.dist(t, x1) + m.dist(t, x2)) / 2;
                if (to_t > rhs_to)
                    return PolymorphismViolation{PolymorphismViolation::Kind::DistanceToTerminal,
                                                 x1, x2, 0, 0, t, to_t, rhs_to};
                if (from_t > rhs_from)
                    return PolymorphismViolation{PolymorphismViolation::Kind::DistanceFromTerminal,
                                                 x1, x2, 0, 0, t, from_t, rhs_from};
            }
    return std::nullopt;
}

FractionalPolymorphism lattice_polymorphism(const ModularLattice& l) {
    FractionalPolymorphism poly;
    poly.entries.push_back({BinaryOperation{"join", l.join}, Rational(1, 2)});
    poly.entries.push_back({BinaryOperation{"meet", l.meet}, Rational(1, 2)});
    return poly;
}

namespace {

// Total two-way length of the arm from the center to a leaf.
Rational arm_length(const DirectedMetric& m, int center, int leaf) {
    return m.dist(leaf, center) + m.dist(center, leaf);
}

// Meet table for the star order (lows below the center, uppers above, uppers
// an antichain). The low part is chained with lows[low_first] bottom-most, so
// every pair has a unique greatest lower bound.
BinaryOperation star_meet(int n, int center, const std::vector<int>& lows, int low_first,
                          const std::string& name) {
    std::vector<int> depth(n, 0);  // center/uppers 0, lows deeper
    if (lows.size() == 1) depth[lows[0]] = 1;
    if (lows.size() == 2) {
        depth[lows[low_first]] = 2;
        depth[lows[1 - low_first]] = 1;
    }
    BinaryOperation op{name, std::vector<std::vector<int>>(n, std::vector<int>(n, center))};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b)
                op.table[a][b] = a;
            else if (depth[a] != depth[b])
                op.table[a][b] = depth[a] > depth[b] ? a : b;
            else
                op.table[a][b] = center;  // distinct uppers, or upper vs center
        }
    return op;
}

// Join table: uppers above the center; a pair of distinct uppers resolves via
// the choice map. Everything else joins to the higher argument, or to the
// center when both are low.
BinaryOperation star_join(int n, int center, const std::vector<int>& uppers,
                          const std::map<std::pair<int, int>, int>& choice,
                          const std::string& name) {
    std::vector<bool> is_upper(n, false);
    for (int u : uppers) is_upper[u] = true;
    BinaryOperation op{name, std::vector<std::vector<int>>(n, std::vector<int>(n, center))};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b)
                op.table[a][b] = a;
            else if (is_upper[a] && is_upper[b])
                op.table[a][b] = choice.at({std::min(a, b), std::max(a, b)});
            else if (is_upper[a])
                op.table[a][b] = a;
            else if (is_upper[b])
                op.table[a][b] = b;
            else
                op.table[a][b] = center;
        }
    return op;
}

FractionalPolymorphism star_small_oriented(const DirectedMetric& m, int center,
                                           const std::vector<int>& upper,
                                           const std::vector<int>& lower) {
    const int n = m.size();
    FractionalPolymorphism poly;
    // Meets: the lower part contributes weights 1/(2(l+1)) and l/(2(l+1)),
    // where l is the length ratio of its second arm to its first.
    if (lower.size() == 2) {
        Rational l = arm_length(m, center, lower[1]) / arm_length(m, center, lower[0]);
        poly.entries.push_back(
            {star_meet(n, center, lower, 0, "meet-low0"), 1 / (2 * (l + 1))});
        poly.entries.push_back(
            {star_meet(n, center, lower, 1, "meet-low1"), l / (2 * (l + 1))});
    } else {
        poly.entries.push_back({star_meet(n, center, lower, 0, "meet"), Rational(1, 2)});
    }
    if (upper.size() == 2) {
        Rational k = arm_length(m, center, upper[1]) / arm_length(m, center, upper[0]);
        std::map<std::pair<int, int>, int> pick_first{
            {{std::min(upper[0], upper[1]), std::max(upper[0], upper[1])}, upper[0]}};
        std::map<std::pair<int, int>, int> pick_second{
            {{std::min(upper[0], upper[1]), std::max(upper[0], upper[1])}, upper[1]}};
        poly.entries.push_back(
            {star_join(n, center, upper, pick_first, "join-up0"), 1 / (2 * (k + 1))});
        poly.entries.push_back(
            {star_join(n, center, upper, pick_second, "join-up1"), k / (2 * (k + 1))});
    } else {
        poly.entries.push_back(
            {star_join(n, center, upper, {}, "join"), Rational(1, 2)});
    }
    return poly;
}

}  // namespace

FractionalPolymorphism star_polymorphism_small(const DirectedMetric& m,
                                               const UnderlyingGraph& g, int center,
                                               const std::vector<std::vector<int>>& parts) {
    if (star_center(g) != center) throw Error(Errc::NotAStar, "vertex is not a star center");
    if (parts.size() > 2) throw Error(Errc::PartitionTooLarge, "more than two unbiased sets");
    for (const auto& part : parts)
        if (part.size() > 2)
            throw Error(Errc::PartitionTooLarge, "part with more than two leaves");
    std::vector<int> first = parts.empty() ? std::vector<int>{} : parts[0];
    std::vector<int> second = parts.size() > 1 ? parts[1] : std::vector<int>{};

    FractionalPolymorphism poly = star_small_oriented(m, center, first, second);
    if (!check_polymorphism(m, poly)) return poly;
    poly = star_small_oriented(m, center, second, first);
    if (!check_polymorphism(m, poly)) return poly;
    throw Error(Errc::HypothesesNotMet, "no orientation yields a certificate");
}

FractionalPolymorphism star_polymorphism_large(const DirectedMetric& m,
                                               const UnderlyingGraph& g, int center,
                                               const std::vector<std::vector<int>>& parts) {
    if (star_center(g) != center) throw Error(Errc::NotAStar, "vertex is not a star center");
    if (parts.size() > 2) throw Error(Errc::PartitionTooLarge, "more than two unbiased sets");
    std::vector<int> big, small;
    for (const auto& part : parts) {
        if (part.size() >= 3) {
            if (!big.empty()) throw Error(Errc::BothPartsLarge, "two parts of size >= 3");
            big = part;
        } else if (part.size() > small.size()) {
            small = part;
        }
    }
    if (big.size() < 3) throw Error(Errc::HypothesesNotMet, "no part of size >= 3");
    if (big.size() > 6) throw Error(Errc::PartitionTooLarge, "choice family too large");

    const int n = m.size();
    std::vector<Rational> arm(big.size());
    for (size_t i = 0; i < big.size(); ++i) {
        if (m.dist(big[i], center) != m.dist(center, big[i]))
            throw Error(Errc::SymmetryViolated,
                        "arm of " + m.point(big[i]) + " is not symmetric");
        arm[i] = m.dist(big[i], center);
    }

    FractionalPolymorphism poly;
    if (small.size() == 2) {
        Rational l = arm_length(m, center, small[1]) / arm_length(m, center, small[0]);
        poly.entries.push_back(
            {star_meet(n, center, small, 0, "meet-low0"), 1 / (2 * (l + 1))});
        poly.entries.push_back(
            {star_meet(n, center, small, 1, "meet-low1"), l / (2 * (l + 1))});
    } else {
        poly.entries.push_back({star_meet(n, center, small, 0, "meet"), Rational(1, 2)});
    }

    // One join per choice function on pairs of the large part; weight
    // proportional to the product of chosen arm lengths. The weights total
    // 1/2 because the products expand prod (a_i + a_j).
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < big.size(); ++i)
        for (size_t j = i + 1; j < big.size(); ++j) pairs.emplace_back(i, j);
    Rational denom = 1;
    for (auto [i, j] : pairs) denom *= arm[i] + arm[j];
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::map<std::pair<int, int>, int> choice;
        Rational numer = 1;
        for (size_t p = 0; p < pairs.size(); ++p) {
            auto [i, j] = pairs[p];
            int pick = (mask >> p) & 1 ? j : i;
            numer *= arm[pick];
            choice[{std::min(big[i], big[j]), std::max(big[i], big[j])}] = big[pick];
        }
        poly.entries.push_back({star_join(n, center, big, choice,
                                          "join-choice" + std::to_string(mask)),
                                numer / (2 * denom)});
    }
    if (auto violation = check_polymorphism(m, poly))
        throw Error(Errc::HypothesesNotMet, "certificate check failed");
    return poly;
}

FractionalPolymorphism star_polymorphism(const DirectedMetric& m, const UnderlyingGraph& g,
                                         int center,
                                         const std::vector<std::vector<int>>& parts) {
    bool small = std::all_of(parts.begin(), parts.end(),
                             [](const std::vector<int>& p) { return p.size() <= 2; });
    return small ? star_polymorphism_small(m, g, center, parts)
                 : star_polymorphism_large(m, g, center, parts);
}

FractionalPolymorphism certificate_polymorphism(const DirectedMetric& m, const Verdict& v) {
    if (v.outcome != Outcome::Tractable)
        throw Error(Errc::NotCertifiedTractable, "verdict is not tractable");
    if (v.certificate == TractabilityCertificate::ModularLatticeSubmodular)
        return lattice_polymorphism(*v.lattice);
    UnderlyingGraph g = UnderlyingGraph::build(m);
    return star_polymorphism(m, g, *v.center, *v.star_partition);
}

}  // namespace dzext
