#include "doctest.h"
#include "oracles.hpp"

#include "meyerlab/cps/scheme.hpp"
#include "meyerlab/errors.hpp"
#include "meyerlab/heis/heisenberg.hpp"

#include <random>

using namespace meyerlab;
using namespace meyerlab::heis;

namespace {

const NumberField& Q() {
    static const NumberField f = NumberField::rationals();
    return f;
}

NFElem r(const Rational& v) { return NFElem::from_rational(Q(), v); }
HeisPoint hp(Rational x, Rational y, Rational z) { return {r(x), r(y), r(z)}; }
HeisAlgebraElem he(Rational a, Rational b, Rational c) { return {r(a), r(b), r(c)}; }

HeisPoint random_point(std::mt19937_64& rng) {
    return hp(oracle::random_rational(rng), oracle::random_rational(rng), oracle::random_rational(rng));
}
HeisAlgebraElem random_algebra(std::mt19937_64& rng) {
    return he(oracle::random_rational(rng), oracle::random_rational(rng), oracle::random_rational(rng));
}

// The law written out by hand: (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy').
std::array<Rational, 3> law(const std::array<Rational, 3>& p, const std::array<Rational, 3>& q) {
    return {p[0] + q[0], p[1] + q[1], p[2] + q[2] + p[0] * q[1]};
}

}  // namespace

TEST_CASE("group law examples") {
    CHECK(heis_mul(hp(1, 0, 0), hp(0, 1, 0)) == hp(1, 1, 1));
    CHECK(heis_mul(hp(0, 1, 0), hp(1, 0, 0)) == hp(1, 1, 0));
    auto p = hp(3, Rational(-1, 2), 7);
    CHECK(heis_mul(p, heis_inv(p)) == heis_identity(Q()));
    CHECK(heis_mul(heis_inv(p), p) == heis_identity(Q()));
    // Oracle: p q p^-1 q^-1 expanded with the written-out law.
    std::array<Rational, 3> a{1, 0, 0}, b{0, 1, 0}, ai{-1, 0, 0}, bi{0, -1, 0};
    auto c = law(law(law(a, b), ai), bi);
    CHECK(heis_commutator(hp(1, 0, 0), hp(0, 1, 0)) == hp(c[0], c[1], c[2]));
    CHECK(c[2] == 1);
    CHECK_THROWS_AS(heis_mul(hp(1, 0, 0), HeisPoint{NFElem::generator(NumberField::sqrt2()), NFElem(NumberField::sqrt2()),
                                                    NFElem(NumberField::sqrt2())}),
                    UsageError);
}

TEST_CASE("group axioms on random triples") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        auto p = random_point(rng), q = random_point(rng), s = random_point(rng);
        CHECK(heis_mul(heis_mul(p, q), s) == heis_mul(p, heis_mul(q, s)));
        CHECK(heis_mul(p, heis_inv(p)) == heis_identity(Q()));
        auto central = hp(0, 0, oracle::random_rational(rng));
        CHECK(heis_mul(central, p) == heis_mul(p, central));
        CHECK(is_central(heis_commutator(p, q)));
    }
}

TEST_CASE("exp, log and bch2") {
    CHECK(heis_exp(he(0, 0, 5)) == hp(0, 0, 5));
    CHECK(heis_exp(he(1, 1, 0)) == hp(1, 1, Rational(1, 2)));
    CHECK(bch2(he(1, 0, 0), he(0, 1, 0)) == he(1, 1, Rational(1, 2)));
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        auto u = random_algebra(rng), v = random_algebra(rng), w = random_algebra(rng);
        CHECK(heis_log(heis_exp(u)) == u);
        auto p = random_point(rng);
        CHECK(heis_exp(heis_log(p)) == p);
        CHECK(heis_exp(bch2(u, v)) == heis_mul(heis_exp(u), heis_exp(v)));
        CHECK(bch2(v, -v) == he(0, 0, 0));
        CHECK(bracket(u, v) == -bracket(v, u));
        CHECK(bracket(u + v, w) == bracket(u, w) + bracket(v, w));
        CHECK(bracket(bracket(u, v), w) == he(0, 0, 0));
    }
}

TEST_CASE("windows") {
    auto w = parse_heis_window("1,1,1");
    CHECK(window_product(w, w) == parse_heis_window("2,2,3"));
    CHECK_NOTHROW(parse_heis_window("0,0,1"));
    CHECK_THROWS_AS(parse_heis_window("1,1,0"), UsageError);
    CHECK_THROWS_AS(parse_heis_window("1,1"), UsageError);
}

TEST_CASE("Heisenberg model sets") {
    auto scheme = HeisScheme::make(NumberField::sqrt2(), parse_heis_window("1,1,2"));
    auto patch = heis_model_set(scheme, 5);
    CHECK(patch.contains(scheme.ambient.identity()));
    // (x,y)-shadow equals the abelian 2D model set patch.
    std::set<cps::Point, cps::PointLess> shadow;
    for (const auto& p : patch.points) shadow.insert({p[0], p[1]});
    auto abelian = cps::model_set_patch(cps::CutProjectScheme::galois(NumberField::sqrt2(), 2), cps::parse_window("box:1,1"), 5);
    CHECK(std::vector<cps::Point>(shadow.begin(), shadow.end()) == abelian.points);
    // Inverses land in the window inflated by cx cy in z.
    HeisWindow inflated{Rational(1), Rational(1), Rational(3)};
    for (const auto& p : patch.points) {
        CHECK(scheme.in_window(p, scheme.window));
        CHECK(scheme.in_window(scheme.ambient.inv(p), inflated));
    }
    auto sym = symmetrize(patch, scheme);
    CHECK(sym.size() < patch.size());
    for (const auto& p : sym.points) CHECK(scheme.in_window(sym.ambient.inv(p), scheme.window));
    auto big = heis_model_set(scheme, 40);
    for (const auto& p : sym.points) CHECK(big.contains(sym.ambient.inv(p)));

    auto tiny = heis_model_set(HeisScheme::make(NumberField::sqrt2(), parse_heis_window("1,1,1")), Rational(1, 2));
    for (const auto& p : tiny.points)
        for (const auto& c : p) CHECK(c.coeff(0) == 0);
}

TEST_CASE("covering certificate") {
    auto scheme = HeisScheme::make(NumberField::sqrt2(), parse_heis_window("1,1,2"));
    auto cert = heis_covering_certificate(scheme);
    CHECK(!cert.translates.empty());
    CHECK(replay(cert, scheme));
    auto broken = cert;
    broken.translates.pop_back();
    CHECK_FALSE(replay(broken, scheme));

    // Patch-level consequence: Lambda^2 subset F Lambda(W) at a small radius.
    auto patch = heis_model_set(scheme, 3);
    for (std::size_t i = 0; i < patch.size(); i += 7)
        for (std::size_t j = 0; j < patch.size(); j += 5) {
            auto w = scheme.ambient.mul(patch.points[i], patch.points[j]);
            bool ok = false;
            for (const auto& t : cert.translates)
                if (scheme.in_window(scheme.ambient.left_quotient(t, w), scheme.window)) {
                    ok = true;
                    break;
                }
            CHECK(ok);
        }

    auto central = HeisScheme::make(NumberField::sqrt2(), parse_heis_window("0,0,1"));
    auto cc = heis_covering_certificate(central);
    CHECK(cc.x_cover.steps.size() == 1);
    CHECK(replay(cc, central));
    auto line = cps::cover_interval(central.line(), Rational(2), Rational(1));
    CHECK(cc.translates.size() == line.steps.size());
}

TEST_CASE("center intersection") {
    auto scheme = HeisScheme::make(NumberField::sqrt2(), parse_heis_window("1,1,2"));
    for (Rational R : {Rational(6), Rational(10)}) {
        auto rep = center_intersection(scheme, R);
        REQUIRE_FALSE(rep.inconclusive);
        CHECK(rep.delone->uniformly_discrete());
        CHECK(rep.delone->relatively_dense());
        // Every value is w + w' - uv for a pair of patch points (oracle on a sample).
        for (const auto& z : rep.center.points) CHECK(z[0].has_integer_coeffs());
    }
}

TEST_CASE("commutator map") {
    auto scheme = HeisScheme::make(NumberField::sqrt2(), parse_heis_window("1,1,2"));
    auto patch = heis_model_set(scheme, 2);
    const auto& f = scheme.field;
    HeisPoint xi{NFElem::from_rational(f, 1), NFElem(f), NFElem(f)};
    auto rep = commutator_map(xi, patch);
    CHECK(rep.homomorphism);
    CHECK(rep.formula_matches_law);
    CHECK(rep.pairs_checked == patch.size() * patch.size());
    HeisPoint central{NFElem(f), NFElem(f), NFElem::from_rational(f, 1)};
    auto trivial = commutator_map(central, patch);
    CHECK(trivial.image.size() == 1);
    auto u = HeisPoint{NFElem(f), NFElem::from_rational(f, 1), NFElem(f)};
    CHECK(heis_commutator(xi, u) == HeisPoint{NFElem(f), NFElem(f), NFElem::from_rational(f, 1)});
}

TEST_CASE("Schreiber hull") {
    auto ambient = cps::rational_ambient(3);
    ambient.law = cps::GroupLaw::Heisenberg;
    auto line_patch = [&](long R) {
        cps::Patch p{ambient, Rational(R), "Z on the x-axis", {}};
        for (long n = -R; n <= R; ++n) p.points.push_back({r(n), r(0), r(0)});
        p.normalize();
        return p;
    };
    auto hull = schreiber_hull(line_patch(8), line_patch(16));
    REQUIRE(hull.hull.has_value());
    CHECK(*hull.hull == "X");
    CHECK(hull.candidates[1].kappa_large <= 1);

    auto scheme = HeisScheme::make(NumberField::sqrt2(), parse_heis_window("1,1,2"));
    auto full = schreiber_hull(heis_model_set(scheme, 6), heis_model_set(scheme, 12));
    REQUIRE(full.hull.has_value());
    CHECK(*full.hull == "H");
    CHECK_THROWS_AS(schreiber_hull(line_patch(8), line_patch(10)), UsageError);
}

TEST_CASE("Meyer commensurability") {
    auto scheme = HeisScheme::make(NumberField::sqrt2(), parse_heis_window("1,1,2"));
    auto patch = heis_model_set(scheme, 4);
    auto same = meyer_commensurability(patch, patch);
    CHECK(same.verdict == verify::Verdict::CommensurableAtScale);
    CHECK(same.a_in_b.translates.size() == 1);
    auto sym = symmetrize(patch, scheme);
    auto rep = meyer_commensurability(sym, patch);
    CHECK(rep.verdict == verify::Verdict::CommensurableAtScale);
    CHECK(verify::replay(rep, sym, patch));
    auto wider = heis_model_set(HeisScheme::make(NumberField::sqrt2(), parse_heis_window("1,1,3")), 4);
    CHECK(meyer_commensurability(patch, wider).verdict == verify::Verdict::CommensurableAtScale);
    auto abelian = cps::model_set_patch(cps::CutProjectScheme::galois(NumberField::sqrt2(), 3), cps::parse_window("box:1,1,2"), 4);
    CHECK_THROWS_AS(meyer_commensurability(patch, abelian), UsageError);
}
