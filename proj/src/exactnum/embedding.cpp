#include "meyerlab/exactnum/embedding.hpp"

#include "meyerlab/errors.hpp"

#include <algorithm>

namespace meyerlab {

namespace {

// Recursively split (a, b] until each piece holds one root.
void isolate(const NumberField& field, const Rational& a, const Rational& b, int count, std::vector<Interval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({a, b});
        return;
    }
    Rational mid = (a + b) / 2;
    int left = count_roots(field.sturm(), a, mid);
    isolate(field, a, mid, left, out);
    isolate(field, mid, b, count - left, out);
}

Rational cauchy_bound(const NumberField& field) {
    Integer m(0);
    for (std::size_t i = 0; i + 1 < field.min_poly().size(); ++i) m = std::max(m, Integer(abs(field.min_poly()[i])));
    return Rational(m + 1);
}

}  // namespace

RealEmbedding::RealEmbedding(NumberField field, int root_index, Interval isolating, long precision_bits)
    : field_(std::move(field)), root_index_(root_index), interval_(std::move(isolating)), bits_(precision_bits) {}

RealEmbedding RealEmbedding::refined(long bits) const {
    if (interval_.width() == 0) return RealEmbedding(field_, root_index_, interval_, std::max(bits, bits_));
    const Rational target = power_of_two(-bits);
    Interval iv = interval_;
    const auto& p = field_.min_poly_q();
    int sign_lo = p.sign_at(iv.lo);
    while (iv.width() > target) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int s = p.sign_at(mid);
        if (s == 0) {
            iv = Interval::point(mid);
            break;
        }
        if (s == sign_lo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return RealEmbedding(field_, root_index_, std::move(iv), std::max(bits, bits_));
}

std::vector<RealEmbedding> real_roots(const NumberField& field) {
    std::vector<RealEmbedding> out;
    if (field.degree() == 1) {
        Rational r = -Rational(field.min_poly()[0]);
        out.emplace_back(field, 0, Interval::point(r), 0);
        return out;
    }
    const Rational bound = cauchy_bound(field);
    std::vector<Interval> pieces;
    isolate(field, -bound, bound, field.real_root_count(), pieces);
    int idx = 0;
    for (auto& iv : pieces) out.emplace_back(field, idx++, std::move(iv), 0);
    return out;
}

RealEmbedding real_place(const NumberField& field, int root_index, long bits) {
    auto roots = real_roots(field);
    if (roots.empty()) throw UsageError("field " + field.describe() + " has no real embedding");
    if (root_index < 0) root_index = static_cast<int>(roots.size()) + root_index;
    if (root_index < 0 || root_index >= static_cast<int>(roots.size()))
        throw UsageError("real root index out of range");
    return roots[static_cast<std::size_t>(root_index)].refined(bits);
}

Interval eval_embedding(const NFElem& x, const RealEmbedding& place, long precision_bits) {
    if (precision_bits < 1) throw UsageError("precision_bits must be >= 1");
    if (x.field() != place.field()) throw UsageError("element and place belong to different fields");
    if (x.is_rational()) return Interval::point(x.rational_value());
    const RationalPoly poly = x.as_poly();
    long root_bits = std::max(place.precision_bits(), precision_bits + 8);
    for (;;) {
        RealEmbedding r = place.precision_bits() >= root_bits ? place : place.refined(root_bits);
        Interval v = round_out(poly.eval(r.isolating_interval()), precision_bits + 4);
        Rational allowed = power_of_two(-precision_bits) * (1 + abs_of(v.midpoint()));
        if (v.width() <= allowed) return v;
        root_bits += 16;
    }
}

const char* to_string(AbsComparison c) {
    switch (c) {
        case AbsComparison::Less: return "LESS";
        case AbsComparison::Equal: return "EQUAL";
        case AbsComparison::Greater: return "GREATER";
    }
    return "?";
}

AbsComparison compare_abs_to(const NFElem& x, const Rational& bound, const RealEmbedding& place, long max_precision) {
    if (x.is_rational()) {
        int c = cmp(abs_of(x.rational_value()), bound);
        return c < 0 ? AbsComparison::Less : (c == 0 ? AbsComparison::Equal : AbsComparison::Greater);
    }
    // sigma(x) is irrational here, so it never equals +-bound.
    for (long bits = 32;; bits *= 2) {
        bits = std::min(bits, max_precision);
        Interval a = abs(eval_embedding(x, place, bits));
        if (a.hi < bound) return AbsComparison::Less;
        if (a.lo > bound) return AbsComparison::Greater;
        if (bits >= max_precision)
            throw PrecisionExhausted("|sigma(" + to_string(x) + ")| vs " + to_fraction_string(bound) +
                                     " undecided at " + std::to_string(max_precision) + " bits");
    }
}

AbsComparison compare_abs_to_one(const NFElem& x, const RealEmbedding& place, long max_precision) {
    return compare_abs_to(x, Rational(1), place, max_precision);
}

int sign_of(const NFElem& x, const RealEmbedding& place, long max_precision) {
    if (x.is_rational()) return sgn(x.rational_value());
    for (long bits = 32;; bits *= 2) {
        bits = std::min(bits, max_precision);
        Interval v = eval_embedding(x, place, bits);
        if (v.lo > 0) return 1;
        if (v.hi < 0) return -1;
        if (bits >= max_precision) throw PrecisionExhausted("sign of sigma(" + to_string(x) + ") undecided");
    }
}

int compare_abs(const NFElem& a, const NFElem& b, const RealEmbedding& place, long max_precision) {
    if (a == b || a == -b) return 0;
    for (long bits = 32;; bits *= 2) {
        bits = std::min(bits, max_precision);
        Interval ia = abs(eval_embedding(a, place, bits));
        Interval ib = abs(eval_embedding(b, place, bits));
        if (ia.hi < ib.lo) return -1;
        if (ib.hi < ia.lo) return 1;
        if (bits >= max_precision) throw PrecisionExhausted("|sigma| comparison undecided");
    }
}

int compare_values(const NFElem& a, const NFElem& b, const RealEmbedding& place, long max_precision) {
    return sign_of(a - b, place, max_precision);
}

}  // namespace meyerlab
