#pragma once

#include "meyerlab/exactnum/interval.hpp"
#include "meyerlab/exactnum/rational.hpp"

#include <vector>

namespace meyerlab {

// Dense univariate polynomial over Q, coefficients low degree first.
// The zero polynomial has no coefficients; trailing zeros are always trimmed.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational eval(const Rational& x) const;
    Interval eval(const Interval& x) const;
    int sign_at(const Rational& x) const;
    RationalPoly derivative() const;

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const Rational& s, const RationalPoly& a);
    bool operator==(const RationalPoly&) const = default;

    // Euclidean division; divisor must be nonzero.
    static void divmod(const RationalPoly& num, const RationalPoly& den, RationalPoly& quot, RationalPoly& rem);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Sturm sequence p, p', -rem(p, p'), ... of a squarefree polynomial.
std::vector<RationalPoly> sturm_sequence(const RationalPoly& p);

// Sign variations of the sequence evaluated at x.
int sign_variations(const std::vector<RationalPoly>& seq, const Rational& x);
// Sign variations at +infinity / -infinity (from leading coefficients).
int sign_variations_at_infinity(const std::vector<RationalPoly>& seq, bool positive);

// Number of distinct real roots in (a, b], from a Sturm sequence.
int count_roots(const std::vector<RationalPoly>& seq, const Rational& a, const Rational& b);

}  // namespace meyerlab
