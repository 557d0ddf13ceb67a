#include "doctest.h"
#include "oracles.hpp"

#include "meyerlab/errors.hpp"
#include "meyerlab/exactnum/embedding.hpp"
#include "meyerlab/exactnum/number_field.hpp"
#include "meyerlab/exactnum/padic.hpp"
#include "meyerlab/exactnum/polynomial.hpp"

#include <cmath>
#include <random>

using namespace meyerlab;

namespace {

NFElem elem(const NumberField& f, std::vector<Rational> c) { return NFElem(f, std::move(c)); }

NFElem random_elem(const NumberField& f, std::mt19937_64& rng) {
    std::vector<Rational> c;
    for (int i = 0; i < f.degree(); ++i) c.push_back(oracle::random_rational(rng, 20));
    return NFElem(f, c);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_fraction_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_fraction_string(Rational(5)) == "5/1");
    CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rational("abc"), UsageError);
    CHECK(floor_of(Rational(-3, 2)) == -2);
    CHECK(ceil_of(Rational(-3, 2)) == -1);
    CHECK(round_down_dyadic(Rational(1, 3), 4) == Rational(5, 16));
    CHECK(round_up_dyadic(Rational(1, 3), 4) == Rational(3, 8));
}

TEST_CASE("field arithmetic examples") {
    const auto golden = NumberField::golden();
    const auto theta = NFElem::generator(golden);
    CHECK(nf_mul(theta, theta) == elem(golden, {1, 1}));
    const auto s5 = NumberField::sqrt5();
    const auto r = NFElem::generator(s5);
    const auto one = NFElem::from_rational(s5, 1);
    CHECK((one + r) * (one - r) == NFElem::from_rational(s5, -4));
    CHECK(theta.norm() == -1);
    CHECK(theta.trace() == 1);
    CHECK(theta.is_integral());
    CHECK_FALSE(elem(golden, {Rational(1, 2), 0}).is_integral());
    // (1 + sqrt5)/2 is an algebraic integer with non-integral power-basis coefficients.
    CHECK(elem(s5, {Rational(1, 2), Rational(1, 2)}).is_integral());
    CHECK_FALSE(elem(s5, {Rational(1, 2), Rational(1, 2)}).has_integer_coeffs());
}

TEST_CASE("field mismatch and invalid fields") {
    const auto a = NFElem::generator(NumberField::golden());
    const auto b = NFElem::generator(NumberField::sqrt2());
    CHECK_THROWS_AS(nf_mul(a, b), UsageError);
    CHECK_THROWS_AS(NumberField({-4, 0, 1}), UsageError);      // X^2 - 4 reducible
    CHECK_THROWS_AS(NumberField({1, 0, 2}), UsageError);       // not monic
    CHECK_THROWS_AS(NumberField({1, 0, 2, 0, 1}), UsageError);  // (X^2+1)^2
    CHECK_NOTHROW(NumberField({-2, 0, 0, 0, 1}));               // X^4 - 2
    CHECK_THROWS_AS(NFElem::from_rational(NumberField::golden(), 0).inverse(), UsageError);
}

TEST_CASE("ring axioms and inverses on random triples") {
    std::mt19937_64 rng(7);
    for (const auto& f : {NumberField::golden(), NumberField::sqrt2(), NumberField({-2, 0, 0, 1}), NumberField({-1, -3, 0, 1})}) {
        for (int i = 0; i < 40; ++i) {
            auto a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) + c == a + (b + c));
            if (!a.is_zero()) CHECK(a * a.inverse() == NFElem::from_rational(f, 1));
            if (!a.is_zero()) CHECK(a.norm() != 0);
            CHECK((a * b).norm() == a.norm() * b.norm());
            CHECK(a.charpoly().eval(Rational(0)) * (f.degree() % 2 ? -1 : 1) == a.norm());
        }
    }
}

TEST_CASE("text round trip of elements") {
    std::mt19937_64 rng(3);
    const auto f = NumberField::sqrt2();
    for (int i = 0; i < 20; ++i) {
        auto a = random_elem(f, rng);
        CHECK(parse_element(f, to_string(a)) == a);
    }
    CHECK(parse_element(f, "1:2") == elem(f, {1, 2}));
    CHECK_THROWS_AS(parse_element(f, "1:2:3"), UsageError);
}

TEST_CASE("real roots") {
    const auto golden = real_roots(NumberField::golden());
    REQUIRE(golden.size() == 2);
    CHECK(golden[0].refined(40).isolating_interval().approx() == doctest::Approx(-0.6180339887).epsilon(1e-9));
    CHECK(golden[1].refined(40).isolating_interval().approx() == doctest::Approx(1.6180339887).epsilon(1e-9));
    CHECK(golden[0].isolating_interval().hi <= golden[1].isolating_interval().lo);
    CHECK(real_roots(NumberField({1, 0, 1})).empty());
    const auto s2 = real_roots(NumberField::sqrt2());
    REQUIRE(s2.size() == 2);
    CHECK(s2[0].refined(20).isolating_interval().hi < 0);
    CHECK(s2[1].refined(20).isolating_interval().lo > 0);
    CHECK(s2[1].refined(40).isolating_interval().approx() == doctest::Approx(1.41421356237).epsilon(1e-9));
    CHECK(NumberField({-2, 0, 0, 1}).real_root_count() == 1);
    CHECK(NumberField({-1, -3, 0, 1}).real_root_count() == 3);
    const NumberField cubic({-1, -3, 0, 1});
    for (const auto& r : real_roots(cubic)) {
        const auto& seq = cubic.sturm();
        CHECK(count_roots(seq, r.isolating_interval().lo, r.isolating_interval().hi) == 1);
    }
}

TEST_CASE("embedding evaluation") {
    const auto f = NumberField::golden();
    const auto place = real_place(f, 1);
    auto iv = eval_embedding(NFElem::generator(f), place, 16);
    CHECK(iv.lo > Rational(161, 100));
    CHECK(iv.hi < Rational(162, 100));
    auto three = eval_embedding(NFElem::from_rational(f, 3), place, 8);
    CHECK(three.lo == 3);
    CHECK(three.hi == 3);
    CHECK_THROWS_AS(eval_embedding(NFElem::generator(f), place, 0), UsageError);

    std::mt19937_64 rng(11);
    const long double ref = (1 + std::sqrt(5.0L)) / 2;
    for (int i = 0; i < 30; ++i) {
        auto a = random_elem(f, rng), b = random_elem(f, rng);
        Interval prev{Rational(-1000000), Rational(1000000)};
        const long double value = a.coeff(0).get_d() + a.coeff(1).get_d() * ref;
        for (long bits : {8L, 32L, 96L}) {
            auto e = eval_embedding(a, place, bits);
            CHECK(e.width() <= power_of_two(-bits) * (1 + abs_of(e.midpoint())));
            CHECK(std::fabs(static_cast<double>(value) - e.approx()) <= 1e-9 * (1 + std::fabs(static_cast<double>(value))) + e.width().get_d());
            prev = e;
        }
        auto sum = eval_embedding(a, place, 40) + eval_embedding(b, place, 40);
        auto direct = eval_embedding(a + b, place, 40);
        CHECK(sum.lo <= direct.hi);
        CHECK(direct.lo <= sum.hi);
    }
}

TEST_CASE("comparison against one") {
    const auto f = NumberField::golden();
    const auto phys = real_place(f, 1), intl = real_place(f, 0);
    const auto theta = NFElem::generator(f);
    CHECK(compare_abs_to_one(NFElem::from_rational(f, 1), phys) == AbsComparison::Equal);
    CHECK(compare_abs_to_one(NFElem::from_rational(f, -1), intl) == AbsComparison::Equal);
    CHECK(compare_abs_to_one(theta, intl) == AbsComparison::Less);
    CHECK(compare_abs_to_one(theta, phys) == AbsComparison::Greater);
    CHECK(compare_abs_to_one(NFElem::from_rational(f, 2), phys) == AbsComparison::Greater);
    // A unit whose conjugate is not +-1 is never EQUAL.
    CHECK(compare_abs_to_one(theta * theta, intl) == AbsComparison::Less);
    CHECK(compare_abs_to(elem(f, {1, 1}), Rational(1), intl) == AbsComparison::Less);
    CHECK(sign_of(theta, intl) == -1);
    CHECK(compare_abs(theta, -theta, phys) == 0);
    CHECK(compare_values(theta, NFElem::from_rational(f, 2), phys) == -1);
    // Exhaustion is reported, never guessed.
    const auto tiny = elem(f, {Rational(1), Rational(1, Integer("1000000000000000000000000000000000000000000000000000000000000000000000000000000000"))});
    CHECK_THROWS_AS(compare_abs_to_one(tiny, phys, 64), PrecisionExhausted);
}

TEST_CASE("p-adic valuations") {
    CHECK(*padic_valuation(Rational(3, 2), 2) == -1);
    CHECK(*padic_valuation(Rational(9, 4), 3) == 2);
    CHECK(*padic_valuation(Rational(7), 5) == 0);
    CHECK_FALSE(padic_valuation(Rational(0), 5).has_value());
    CHECK_THROWS_AS(padic_valuation(Rational(3), 4), UsageError);
    CHECK(padic_abs(Rational(3, 2), 2) == 2);
    CHECK(padic_abs(Rational(0), 2) == 0);
    CHECK(smallest_prime_factor(91) == 7);
    auto fac = factorize(360);
    REQUIRE(fac.size() == 3);
    CHECK(fac[0] == std::pair<Integer, long>(2, 3));
}

TEST_CASE("product formula over Q, in logarithms") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        Rational q = oracle::random_rational(rng, 1000);
        if (q == 0) continue;
        Rational product = abs_of(q);
        for (const auto& [p, e] : factorize(q.get_num() * q.get_den())) product *= padic_abs(q, p);
        CHECK(product == 1);
        double logs = std::log(std::fabs(q.get_d()));
        for (const auto& [p, e] : factorize(q.get_num() * q.get_den()))
            logs -= static_cast<double>(*padic_valuation(q, p)) * std::log(p.get_d());
        CHECK(logs == doctest::Approx(0).epsilon(1e-12));
    }
}

TEST_CASE("sturm count matches real roots") {
    for (auto poly : std::vector<std::vector<Integer>>{{-1, -1, 1}, {1, 0, 1}, {-2, 0, 0, 1}, {-1, -3, 0, 1}, {-2, 0, 0, 0, 1}}) {
        NumberField f(poly);
        const auto& seq = f.sturm();
        int diff = sign_variations_at_infinity(seq, false) - sign_variations_at_infinity(seq, true);
        CHECK(diff == f.real_root_count());
        CHECK(static_cast<int>(real_roots(f).size()) == diff);
    }
}
