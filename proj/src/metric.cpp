#include "dzext/metric.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dzext {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::ZeroDiagonalViolated: return "ZeroDiagonalViolated";
        case Errc::TriangleViolated: return "TriangleViolated";
        case Errc::SeparationViolated: return "SeparationViolated";
        case Errc::BadTableShape: return "BadTableShape";
        case Errc::DuplicatePoint: return "DuplicatePoint";
        case Errc::UnknownPoint: return "UnknownPoint";
        case Errc::SamePoint: return "SamePoint";
        case Errc::EmptySequence: return "EmptySequence";
        case Errc::DisconnectedUnderlyingGraph: return "DisconnectedUnderlyingGraph";
        case Errc::NotAPath: return "NotAPath";
        case Errc::EmptySet: return "EmptySet";
        case Errc::RepeatedPoint: return "RepeatedPoint";
        case Errc::BadWeights: return "BadWeights";
        case Errc::NotAStar: return "NotAStar";
        case Errc::PartitionTooLarge: return "PartitionTooLarge";
        case Errc::SymmetryViolated: return "SymmetryViolated";
        case Errc::BothPartsLarge: return "BothPartsLarge";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::InvalidFixing: return "InvalidFixing";
        case Errc::InvalidAssignment: return "InvalidAssignment";
        case Errc::UnknownVariable: return "UnknownVariable";
        case Errc::NotCertifiedTractable: return "NotCertifiedTractable";
        case Errc::RoundingFailed: return "RoundingFailed";
        case Errc::LpFailure: return "LpFailure";
        case Errc::HypothesesNotMet: return "HypothesesNotMet";
        case Errc::MetricIsModular: return "MetricIsModular";
        case Errc::GraphOrientable: return "GraphOrientable";
        case Errc::NoOrbitVaryingCycle: return "NoOrbitVaryingCycle";
        case Errc::NoWitnessSequence: return "NoWitnessSequence";
        case Errc::NoBiasedTriple: return "NoBiasedTriple";
        case Errc::AmbiguousDirection: return "AmbiguousDirection";
        case Errc::GadgetNotVerified: return "GadgetNotVerified";
        case Errc::ConditionFailed: return "ConditionFailed";
        case Errc::DegenerateGadget: return "DegenerateGadget";
        case Errc::BadReduction: return "BadReduction";
        case Errc::NotNPHard: return "NotNPHard";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw Error(Errc::ParseError, "not a rational: '" + text + "'"); };
    std::string s = text;
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) bad();
        Int d(den);
        if (d == 0) bad();
        return Rational(Int(num), d);
    } catch (const std::exception&) {
        bad();
    }
    return Rational(0);  // unreachable
}

std::string format_rational(const Rational& value) {
    std::ostringstream out;
    out << numerator(value);
    if (denominator(value) != 1) out << "/" << denominator(value);
    return out.str();
}

std::string format_extended(const ExtendedRational& value) {
    return value.infinite ? "inf" : format_rational(value.value);
}

DirectedMetric DirectedMetric::validate(std::vector<std::string> points,
                                        std::vector<Rational> table) {
    DirectedMetric m;
    m.n_ = static_cast<int>(points.size());
    if (table.size() != points.size() * points.size())
        throw Error(Errc::BadTableShape, "table must be n*n row-major");
    {
        std::map<std::string, int> seen;
        for (int i = 0; i < m.n_; ++i)
            if (!seen.emplace(points[i], i).second)
                throw Error(Errc::DuplicatePoint, points[i]);
    }
    m.points_ = std::move(points);
    m.table_ = std::move(table);
    const int n = m.n_;
    for (int i = 0; i < n; ++i)
        if (m.dist(i, i) != 0)
            throw Error(Errc::ZeroDiagonalViolated, m.point(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m.dist(i, j) < 0)
                throw Error(Errc::SeparationViolated,
                            "negative distance " + m.point(i) + " -> " + m.point(j));
            if (i < j && m.dist(i, j) + m.dist(j, i) == 0)
                throw Error(Errc::SeparationViolated, m.point(i) + ", " + m.point(j));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (m.dist(i, k) > m.dist(i, j) + m.dist(j, k))
                    throw Error(Errc::TriangleViolated, m.point(i) + " -> " + m.point(j) +
                                                            " -> " + m.point(k));
    return m;
}

int DirectedMetric::index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (points_[i] == name) return i;
    throw Error(Errc::UnknownPoint, name);
}

std::vector<int> interval(const DirectedMetric& m, int x, int y) {
    std::vector<int> out;
    for (int z = 0; z < m.size(); ++z)
        if (m.dist(x, y) == m.dist(x, z) + m.dist(z, y)) out.push_back(z);
    return out;
}

ExtendedRational ratio(const DirectedMetric& m, int x, int y) {
    if (x == y) throw Error(Errc::SamePoint, m.point(x));
    if (m.dist(y, x) == 0) return ExtendedRational::infinity();
    return ExtendedRational::finite(m.dist(x, y) / m.dist(y, x));
}

std::optional<int> find_median(const DirectedMetric& m, int s0, int s1, int s2) {
    const int s[3] = {s0, s1, s2};
    for (int c = 0; c < m.size(); ++c) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = 0; j < 3 && ok; ++j) {
                if (i == j) continue;
                if (m.dist(s[i], s[j]) != m.dist(s[i], c) + m.dist(c, s[j])) ok = false;
            }
        if (ok) return c;
    }
    return std::nullopt;
}

std::optional<ModularityWitness> modularity_witness(const DirectedMetric& m) {
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            for (int k = j + 1; k < m.size(); ++k)
                if (!find_median(m, i, j, k)) return ModularityWitness{{i, j, k}};
    return std::nullopt;
}

bool is_modular(const DirectedMetric& m) { return !modularity_witness(m); }

bool is_shortest_sequence(const DirectedMetric& m, const std::vector<int>& seq) {
    if (seq.empty()) throw Error(Errc::EmptySequence, "sequence has no points");
    Rational total = 0;
    for (size_t i = 0; i + 1 < seq.size(); ++i) total += m.dist(seq[i], seq[i + 1]);
    return total == m.dist(seq.front(), seq.back());
}

Rational triple_perimeter(const DirectedMetric& m, int x, int y, int z) {
    return m.dist(x, y) + m.dist(y, x) + m.dist(y, z) + m.dist(z, y) + m.dist(x, z) +
           m.dist(z, x);
}

std::optional<std::array<int, 3>> minimal_medianless_triple(const DirectedMetric& m) {
    std::optional<std::array<int, 3>> best;
    Rational best_perimeter = 0;
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            for (int k = j + 1; k < m.size(); ++k) {
                if (find_median(m, i, j, k)) continue;
                Rational p = triple_perimeter(m, i, j, k);
                if (!best || p < best_perimeter) {
                    best = {{i, j, k}};
                    best_perimeter = p;
                }
            }
    return best;
}

}  // namespace dzext
