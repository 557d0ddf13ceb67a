#include "meyerlab/exactnum/interval.hpp"

#include <algorithm>

namespace meyerlab {

Rational Interval::magnitude() const { return std::max(abs_of(lo), abs_of(hi)); }

Rational Interval::mignitude() const {
    if (lo > 0) return lo;
    if (hi < 0) return -hi;
    return Rational(0);
}

double Interval::approx() const { return midpoint().get_d(); }

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator*(const Rational& s, const Interval& a) {
    if (s >= 0) return {s * a.lo, s * a.hi};
    return {s * a.hi, s * a.lo};
}

Interval abs(const Interval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return {Rational(0), std::max(Rational(-a.lo), a.hi)};
}

Interval round_out(const Interval& a, long bits) {
    return {round_down_dyadic(a.lo, bits), round_up_dyadic(a.hi, bits)};
}

Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

std::string to_string(const Interval& a) {
    return "[" + to_fraction_string(a.lo) + ", " + to_fraction_string(a.hi) + "]";
}

}  // namespace meyerlab
