#pragma once

#include "meyerlab/exactnum/rational.hpp"

#include <string>

namespace meyerlab {

// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    static Interval point(const Rational& q) { return {q, q}; }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    // Upper bound on |x| for x in the interval.
    Rational magnitude() const;
    // Lower bound on |x| for x in the interval.
    Rational mignitude() const;
    double approx() const;

    bool operator==(const Interval&) const = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);
Interval abs(const Interval& a);
// Outward rounding to dyadic endpoints; keeps endpoint sizes bounded.
Interval round_out(const Interval& a, long bits);
// Hull of two intervals.
Interval hull(const Interval& a, const Interval& b);

std::string to_string(const Interval& a);

}  // namespace meyerlab
