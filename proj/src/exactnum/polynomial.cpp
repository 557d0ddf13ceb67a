#include "meyerlab/exactnum/polynomial.hpp"

#include <stdexcept>

namespace meyerlab {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Interval RationalPoly::eval(const Interval& x) const {
    Interval acc = Interval::point(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Interval::point(*it);
    return acc;
}

int RationalPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

RationalPoly RationalPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
    return RationalPoly(std::move(d));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + Rational(-1) * b; }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPoly(std::move(c));
}

RationalPoly operator*(const Rational& s, const RationalPoly& a) {
    std::vector<Rational> c = a.coeffs_;
    for (auto& x : c) x *= s;
    return RationalPoly(std::move(c));
}

void RationalPoly::divmod(const RationalPoly& num, const RationalPoly& den, RationalPoly& quot, RationalPoly& rem) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> r = num.coeffs_;
    int dd = den.degree();
    std::vector<Rational> q(r.size() > static_cast<std::size_t>(dd) ? r.size() - static_cast<std::size_t>(dd) : 0);
    const Rational lead = den.leading();
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
        Rational factor = r[static_cast<std::size_t>(i)] / lead;
        if (factor == 0) continue;
        q[static_cast<std::size_t>(i - dd)] = factor;
        for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= factor * den.coeffs_[static_cast<std::size_t>(j)];
    }
    quot = RationalPoly(std::move(q));
    rem = RationalPoly(std::move(r));
}

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p) {
    std::vector<RationalPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        RationalPoly q, r;
        RationalPoly::divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.is_zero()) break;
        seq.push_back(Rational(-1) * r);
    }
    if (seq.back().is_zero()) seq.pop_back();
    return seq;
}

namespace {

int variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

int sign_variations(const std::vector<RationalPoly>& seq, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& p : seq) signs.push_back(p.sign_at(x));
    return variations(signs);
}

int sign_variations_at_infinity(const std::vector<RationalPoly>& seq, bool positive) {
    std::vector<int> signs;
    for (const auto& p : seq) {
        int s = sgn(p.leading());
        if (!positive && (p.degree() % 2 == 1)) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

int count_roots(const std::vector<RationalPoly>& seq, const Rational& a, const Rational& b) {
    return sign_variations(seq, a) - sign_variations(seq, b);
}

}  // namespace meyerlab
