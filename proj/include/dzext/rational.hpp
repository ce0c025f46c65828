#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace dzext {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p", "-p" or "p/q" with q > 0 after normalization. Throws on junk.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

/// A nonnegative rational extended with a single point at infinity, used for
/// distance ratios where the denominator may vanish.
struct ExtendedRational {
    bool infinite = false;
    Rational value;  // meaningful only when !infinite

    static ExtendedRational infinity() { return {true, Rational(0)}; }
    static ExtendedRational finite(Rational v) { return {false, std::move(v)}; }

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.value == b.value;
    }
    friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) {
        return !(a == b);
    }
    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
};

std::string format_extended(const ExtendedRational& value);

}  // namespace dzext
