#pragma once

#include "meyerlab/cps/interval_cover.hpp"
#include "meyerlab/cps/patch.hpp"
#include "meyerlab/exactnum/embedding.hpp"
#include "meyerlab/exactnum/number_field.hpp"
#include "meyerlab/verify/commensurability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace meyerlab::places {

// Archimedean places are real embeddings; finite places are primes of Q.
struct Place {
    enum class Kind { Archimedean, Finite };
    Kind kind = Kind::Archimedean;
    std::optional<RealEmbedding> embedding;
    Integer prime{0};

    static Place archimedean(const NumberField& field, int root_index);
    static Place finite(const NumberField& field, const Integer& p);

    bool is_archimedean() const { return kind == Kind::Archimedean; }
    int root_index() const { return embedding->root_index(); }
    // "inf" on Q, "real:<i>" otherwise, "p=<p>" for primes.
    std::string describe() const;
    bool operator==(const Place& o) const;
};

// O_{K,S}: |x|_v <= 1 for every place v outside S.
class SIntegerRing {
public:
    SIntegerRing(NumberField field, std::vector<Place> s);

    const NumberField& field() const { return field_; }
    const std::vector<Place>& places() const { return s_; }
    bool contains_archimedean(int root_index) const;
    bool contains_prime(const Integer& p) const;
    // Real embeddings not in S.
    std::vector<Place> archimedean_complement() const;
    std::vector<Integer> primes() const;
    // The single real place in S, when there is exactly one.
    std::optional<Place> physical_place() const;
    std::string describe() const;

private:
    NumberField field_;
    std::vector<Place> s_;
};

// "inf,2,3" (or "inf,p=2,p=3") over Q; "real:1" (or any list of real:<i>) in general.
SIntegerRing parse_ring(const NumberField& field, const std::string& text);

struct PlaceDecision {
    Place place;
    AbsComparison decision = AbsComparison::Less;
    // Finite places: the exact value |x|_p. Real places: an enclosure of |sigma(x)|.
    Interval value;
};

// x in O_{K,S}: one decision per place outside S that can matter. For Q the
// primes outside S not dividing num(x) den(x) all give |x|_p = 1 and are
// summarised; for K != Q integrality at every finite place is witnessed by the
// characteristic polynomial having integer coefficients.
struct PisotCertificate {
    NFElem element;
    SIntegerRing ring;
    std::vector<PlaceDecision> conjugate_bounds;
    std::optional<RationalPoly> integrality;  // K != Q
    long max_precision = kDefaultMaxPrecision;
};

struct Rejection {
    NFElem element;
    std::string place;  // "p=3", "real:0" or "place above p=2"
    std::string reason;
};

struct MembershipResult {
    std::optional<PisotCertificate> certificate;
    std::optional<Rejection> rejection;
    bool member() const { return certificate.has_value(); }
};

MembershipResult s_integer_membership(const NFElem& x, const SIntegerRing& ring, long max_precision = kDefaultMaxPrecision);
bool replay(const PisotCertificate& cert);

// prod_v |x|_v = 1. Over Q the product is exact. Over totally real K the real
// places are enclosed by intervals whose product must contain |N(x)|, and the
// finite places contribute prod_p |N(x)|_p, exactly 1/|N(x)|.
struct ProductFormulaReport {
    NFElem element;
    std::vector<std::pair<std::string, Interval>> factors;
    Interval archimedean;
    Rational norm_abs;
    Rational finite_part;
    bool exact = false;
    bool holds = false;
};

ProductFormulaReport product_formula_check(const NFElem& x, long bits = 128);

// x and 1/x both in O_{K,S} forces prod_{v in S} |x|_v = 1.
struct UnitCheck {
    bool unit = false;  // both memberships succeeded
    Interval s_product;
    bool consistent = true;
};

UnitCheck unit_obstruction_check(const NFElem& x, const SIntegerRing& ring, long max_precision = kDefaultMaxPrecision);

// Polynomial with coefficients in K, low degree first.
using KPoly = std::vector<NFElem>;
KPoly parse_kpoly(const NumberField& field, const std::string& text);
std::string format_kpoly(const KPoly& p);
NFElem evaluate(const KPoly& p, const NFElem& x);

// Lattice used for the c-window ring patch: Z[theta] (the power-basis order).
// Quadratic K, S = one real place: every P(x) with x in Z[theta],
// |sigma_int(x)| <= c lies in t + {z in Z[theta] : |sigma_int(z)| <= 1} for
// some t in T. One 1D cover per residue class of P modulo Z[theta].
struct ResidueCover {
    NFElem offset;  // P(x0) reduced modulo Z[theta]
    std::vector<NFElem> representatives;  // x0 in Z[theta] / D Z[theta] with this offset
    cps::IntervalCover cover;
};

struct PolynomialCoverCertificate {
    KPoly polynomial;
    SIntegerRing ring;
    Rational window;  // c
    Integer modulus{1};  // D
    Rational image_bound;  // B, |sigma_int(P(x))| <= B on the window
    std::vector<ResidueCover> classes;  // quadratic K
    std::vector<NFElem> translates;     // T, canonical order
    // Patch-level spot check.
    Rational check_radius{0};
    std::size_t checked_points = 0;
};

PolynomialCoverCertificate polynomial_translate_cover(const KPoly& p, const SIntegerRing& ring, const Rational& c,
                                                      const cps::IntervalCoverOptions& opts = {},
                                                      const Rational& check_radius = Rational(20));
bool replay(const PolynomialCoverCertificate& cert, const cps::IntervalCoverOptions& opts = {});

// Upper bound of sum_i |sigma_int(a_i)| delta^i.
Rational conjugate_bound(const KPoly& p, const RealEmbedding& internal, const Rational& delta, long bits = 96);

// P(0) = 0. Lambda = { x in D Z[theta] : |sigma_int(x)| <= delta } satisfies
// P(Lambda) inside the unit-window ring patch, and is compared with the
// unit-window set by two-way patch covers.
struct ShrinkCertificate {
    KPoly polynomial;
    SIntegerRing ring;
    Integer modulus{1};
    Rational delta;
    Rational bound_at_delta;  // <= 1
    Rational patch_radius;
    verify::CommensurabilityReport comparison;
};

ShrinkCertificate shrink_for_polynomial(const KPoly& p, const SIntegerRing& ring, const Rational& patch_radius = Rational(30),
                                        long denominator = 256);
bool replay(const ShrinkCertificate& cert);

// Patch of the shrunken set at a given radius (exact), for replay and tests.
cps::Patch shrunken_patch(const SIntegerRing& ring, const Integer& modulus, const Rational& delta, const Rational& radius);
// Unit-window ring patch { x in Z[theta] : |sigma_int(x)| <= c, |sigma_phys(x)| <= R }.
cps::Patch ring_patch(const SIntegerRing& ring, const Rational& c, const Rational& radius);

struct ProductFlag {
    std::size_t first;
    std::size_t second;
    NFElem product;
};

struct SumProductCertificate {
    SIntegerRing ring;
    std::vector<NFElem> elements;
    std::vector<PisotCertificate> members;
    Rational patch_bound;
    std::size_t products_checked = 0;
    std::size_t products_in_set = 0;
    std::size_t products_out_of_patch = 0;
    std::vector<ProductFlag> flagged;  // inside the bound but missing from the set
    std::string conclusion;
};

struct SumProductResult {
    std::optional<SumProductCertificate> certificate;
    std::optional<Rejection> rejection;
};

// Elements must be distinct, closed under negation and contain 0. The patch
// bound defaults to the largest physical absolute value among the elements.
SumProductResult pvs_certify_set(const std::vector<NFElem>& elements, const SIntegerRing& ring,
                                 std::optional<Rational> patch_bound = std::nullopt,
                                 long max_precision = kDefaultMaxPrecision);

// Members x of O_{K,S} with |sigma_phys(x)| <= R. Quadratic K (S one real
// place) uses Z[theta]; over Q the denominators are bounded by prod p^level.
std::vector<NFElem> enumerate_ring(const SIntegerRing& ring, const Rational& radius, long level = 0);

}  // namespace meyerlab::places
