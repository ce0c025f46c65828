#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dzext/error.hpp"
#include "dzext/rational.hpp"

namespace dzext {

/// A directed metric on a finite point set: zero diagonal, triangle
/// inequality, and mu(x,y) + mu(y,x) > 0 for distinct x, y. Symmetry is not
/// assumed. Instances are immutable after validation.
class DirectedMetric {
public:
    /// Validates the axioms in a fixed order (diagonal, separation, triangle,
    /// each scanned lexicographically) and throws Error naming the first
    /// violated axiom with its witness points.
    static DirectedMetric validate(std::vector<std::string> points, std::vector<Rational> table);

    int size() const { return n_; }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& point(int i) const { return points_[i]; }
    int index_of(const std::string& name) const;  // throws UnknownPoint

    const Rational& dist(int x, int y) const { return table_[x * n_ + y]; }
    const std::vector<Rational>& table() const { return table_; }

    friend bool operator==(const DirectedMetric& a, const DirectedMetric& b) {
        return a.points_ == b.points_ && a.table_ == b.table_;
    }

    /// Empty metric; a usable one always comes from validate().
    DirectedMetric() = default;

private:
    int n_ = 0;
    std::vector<std::string> points_;
    std::vector<Rational> table_;
};

/// Points z with mu(x,y) = mu(x,z) + mu(z,y), in point order. Includes x, y.
std::vector<int> interval(const DirectedMetric& m, int x, int y);

/// mu(x,y) / mu(y,x), infinite when mu(y,x) = 0. Throws SamePoint when x == y.
ExtendedRational ratio(const DirectedMetric& m, int x, int y);

/// A median of (s0,s1,s2): a point m with mu(si,sj) = mu(si,m) + mu(m,sj) for
/// all ordered pairs i != j. Returns the first satisfying point in point
/// order, or nullopt.
std::optional<int> find_median(const DirectedMetric& m, int s0, int s1, int s2);

struct ModularityWitness {
    std::array<int, 3> triple;  // first medianless triple, lexicographic
};

/// A directed metric is modular when every triple admits a median.
bool is_modular(const DirectedMetric& m);
std::optional<ModularityWitness> modularity_witness(const DirectedMetric& m);

/// True when the sequence telescopes: sum of consecutive distances equals
/// mu(front, back). Throws EmptySequence on an empty input.
bool is_shortest_sequence(const DirectedMetric& m, const std::vector<int>& seq);

/// Sum of all six distances among a triple of points.
Rational triple_perimeter(const DirectedMetric& m, int x, int y, int z);

/// Medianless triple minimizing triple_perimeter; ties broken
/// lexicographically. nullopt when the metric is modular.
std::optional<std::array<int, 3>> minimal_medianless_triple(const DirectedMetric& m);

}  // namespace dzext
