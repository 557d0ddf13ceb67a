#pragma once

#include "meyerlab/exactnum/polynomial.hpp"
#include "meyerlab/exactnum/rational.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace meyerlab {

// K = Q(theta) given by the monic integer minimal polynomial of theta.
// Cheap to copy; all copies share one immutable description.
class NumberField {
public:
    // Coefficients low degree first, leading coefficient 1. Irreducibility is
    // verified exactly up to degree 4; above that only the absence of rational
    // roots is checked. Throws UsageError on invalid input.
    explicit NumberField(std::vector<Integer> min_poly);

    static NumberField rationals();  // X
    static NumberField golden();     // X^2 - X - 1
    static NumberField sqrt2();      // X^2 - 2
    static NumberField sqrt5();      // X^2 - 5

    int degree() const;
    const std::vector<Integer>& min_poly() const;
    const RationalPoly& min_poly_q() const;
    const std::vector<RationalPoly>& sturm() const;
    int real_root_count() const;
    bool is_totally_real() const { return real_root_count() == degree(); }

    // theta^k reduced to the power basis, for d <= k <= 2d - 2.
    const std::vector<Rational>& reduced_power(int k) const;

    std::string describe() const;

    bool operator==(const NumberField& other) const;
    bool operator!=(const NumberField& other) const { return !(*this == other); }

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

// Element of K in the power basis 1, theta, ..., theta^{d-1}.
class NFElem {
public:
    explicit NFElem(NumberField field);
    NFElem(NumberField field, std::vector<Rational> coeffs);
    static NFElem from_rational(NumberField field, const Rational& q);
    static NFElem generator(NumberField field);

    const NumberField& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    bool is_zero() const;
    bool is_rational() const;
    // Valid when is_rational().
    const Rational& rational_value() const { return coeffs_[0]; }

    NFElem inverse() const;
    Rational norm() const;
    Rational trace() const;
    // Characteristic polynomial of multiplication by this element (monic, degree d).
    RationalPoly charpoly() const;
    // Algebraic integer test: charpoly has integer coefficients.
    bool is_integral() const;
    // Power-basis coefficients are all integers (membership in Z[theta]).
    bool has_integer_coeffs() const;
    // Nontrivial Galois conjugate; quadratic fields only.
    NFElem conjugate() const;
    RationalPoly as_poly() const { return RationalPoly(coeffs_); }

    NFElem operator-() const;
    friend NFElem operator+(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a, const NFElem& b);
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem operator*(const Rational& s, const NFElem& a);
    friend NFElem operator/(const NFElem& a, const NFElem& b);
    NFElem& operator+=(const NFElem& o);
    NFElem& operator-=(const NFElem& o);

    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

private:
    NumberField field_;
    std::vector<Rational> coeffs_;
};

NFElem nf_mul(const NFElem& a, const NFElem& b);
NFElem nf_add(const NFElem& a, const NFElem& b);
NFElem nf_inv(const NFElem& a);

// Lexicographic order on power-basis coefficients; the canonical order for
// exact point sets.
int lex_compare(const NFElem& a, const NFElem& b);

// Text form: coefficients as "num/den" joined by ':'. Degree-one fields print a
// single fraction.
std::string to_string(const NFElem& x);
NFElem parse_element(const NumberField& field, std::string_view text);

// Square matrix over Q with the handful of operations the field code needs.
using RationalMatrix = std::vector<std::vector<Rational>>;
Rational determinant(RationalMatrix m);
// Solves m * x = rhs; m must be invertible.
std::vector<Rational> solve(RationalMatrix m, std::vector<Rational> rhs);

}  // namespace meyerlab
