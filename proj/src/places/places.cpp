#include "meyerlab/places/places.hpp"

#include "meyerlab/cps/scheme.hpp"
#include "meyerlab/errors.hpp"
#include "meyerlab/exactnum/padic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace meyerlab::places {

Place Place::archimedean(const NumberField& field, int root_index) {
    Place p;
    p.kind = Kind::Archimedean;
    p.embedding = real_place(field, root_index);
    return p;
}

Place Place::finite(const NumberField& field, const Integer& prime) {
    if (field.degree() != 1) throw Unsupported("finite places are only handled over Q (prime splitting is not implemented)");
    if (!is_prime(prime)) throw UsageError(prime.get_str() + " is not prime");
    Place p;
    p.kind = Kind::Finite;
    p.prime = prime;
    return p;
}

std::string Place::describe() const {
    if (!is_archimedean()) return "p=" + prime.get_str();
    if (embedding->field().degree() == 1) return "inf";
    return "real:" + std::to_string(embedding->root_index());
}

bool Place::operator==(const Place& o) const {
    if (kind != o.kind) return false;
    if (is_archimedean()) return *embedding == *o.embedding;
    return prime == o.prime;
}

SIntegerRing::SIntegerRing(NumberField field, std::vector<Place> s) : field_(std::move(field)), s_(std::move(s)) {
    if (!field_.is_totally_real()) throw Unsupported("S-integer rings need a totally real field");
    for (const auto& p : s_) {
        if (p.is_archimedean() && p.embedding->field() != field_) throw UsageError("place belongs to another field");
        if (!p.is_archimedean() && field_.degree() != 1) throw Unsupported("finite places are only handled over Q");
    }
    std::sort(s_.begin(), s_.end(), [](const Place& a, const Place& b) {
        if (a.is_archimedean() != b.is_archimedean()) return a.is_archimedean();
        if (a.is_archimedean()) return a.root_index() < b.root_index();
        return a.prime < b.prime;
    });
    s_.erase(std::unique(s_.begin(), s_.end()), s_.end());
}

bool SIntegerRing::contains_archimedean(int root_index) const {
    return std::any_of(s_.begin(), s_.end(), [&](const Place& p) { return p.is_archimedean() && p.root_index() == root_index; });
}

bool SIntegerRing::contains_prime(const Integer& q) const {
    return std::any_of(s_.begin(), s_.end(), [&](const Place& p) { return !p.is_archimedean() && p.prime == q; });
}

std::vector<Place> SIntegerRing::archimedean_complement() const {
    std::vector<Place> out;
    for (int i = 0; i < field_.degree(); ++i)
        if (!contains_archimedean(i)) out.push_back(Place::archimedean(field_, i));
    return out;
}

std::vector<Integer> SIntegerRing::primes() const {
    std::vector<Integer> out;
    for (const auto& p : s_)
        if (!p.is_archimedean()) out.push_back(p.prime);
    return out;
}

std::optional<Place> SIntegerRing::physical_place() const {
    std::optional<Place> out;
    for (const auto& p : s_) {
        if (!p.is_archimedean()) continue;
        if (out) return std::nullopt;
        out = p;
    }
    return out;
}

std::string SIntegerRing::describe() const {
    std::string out;
    for (const auto& p : s_) out += (out.empty() ? "" : ",") + p.describe();
    return out.empty() ? "none" : out;
}

SIntegerRing parse_ring(const NumberField& field, const std::string& text) {
    std::vector<Place> s;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "inf") {
            if (field.degree() != 1) throw UsageError("'inf' names the real place of Q; use real:<i> for other fields");
            s.push_back(Place::archimedean(field, 0));
        } else if (tok.rfind("real:", 0) == 0) {
            int idx = 0;
            try {
                idx = std::stoi(tok.substr(5));
            } catch (const std::exception&) {
                throw UsageError("malformed place '" + tok + "'");
            }
            s.push_back(Place::archimedean(field, idx));
        } else {
            Integer p;
            const std::string digits = tok.rfind("p=", 0) == 0 ? tok.substr(2) : tok;
            if (p.set_str(digits, 10) != 0 || p < 2) throw UsageError("malformed place '" + tok + "'");
            s.push_back(Place::finite(field, p));
        }
    }
    return SIntegerRing(field, std::move(s));
}

// ---------------------------------------------------------------------------
namespace {

Interval abs_enclosure(const NFElem& x, const RealEmbedding& e, long bits = 64) { return abs(eval_embedding(x, e, bits)); }

std::optional<Integer> first_denominator_prime(const RationalPoly& poly) {
    std::optional<Integer> best;
    for (const auto& c : poly.coeffs()) {
        if (c.get_den() == 1) continue;
        Integer p = smallest_prime_factor(c.get_den());
        if (!best || p < *best) best = p;
    }
    return best;
}

}  // namespace

MembershipResult s_integer_membership(const NFElem& x, const SIntegerRing& ring, long max_precision) {
    if (x.field() != ring.field()) throw UsageError("element and ring belong to different fields");
    MembershipResult res;
    PisotCertificate cert{x, ring, {}, std::nullopt, max_precision};
    for (const auto& place : ring.archimedean_complement()) {
        AbsComparison d = compare_abs_to_one(x, *place.embedding, max_precision);
        cert.conjugate_bounds.push_back({place, d, abs_enclosure(x, *place.embedding)});
        if (d == AbsComparison::Greater) {
            res.rejection = Rejection{x, place.describe(), "|x|_v > 1 at " + place.describe()};
            return res;
        }
    }
    if (ring.field().degree() == 1) {
        const Rational q = x.rational_value();
        if (q != 0) {
            for (const auto& [p, e] : factorize(q.get_num() * q.get_den())) {
                if (ring.contains_prime(p)) continue;
                const Rational value = padic_abs(q, p);
                const AbsComparison d = value < 1 ? AbsComparison::Less : AbsComparison::Greater;
                const Place place = Place::finite(ring.field(), p);
                cert.conjugate_bounds.push_back({place, d, Interval::point(value)});
                if (d == AbsComparison::Greater) {
                    res.rejection = Rejection{x, place.describe(), "|x|_" + p.get_str() + " = " + to_fraction_string(value) + " > 1"};
                    return res;
                }
            }
        }
    } else {
        RationalPoly cp = x.charpoly();
        if (auto p = first_denominator_prime(cp)) {
            res.rejection = Rejection{x, "place above p=" + p->get_str(), "characteristic polynomial is not integral at " + p->get_str()};
            return res;
        }
        cert.integrality = std::move(cp);
    }
    res.certificate = std::move(cert);
    return res;
}

bool replay(const PisotCertificate& cert) {
    auto again = s_integer_membership(cert.element, cert.ring, cert.max_precision);
    if (!again.member()) return false;
    const auto& fresh = *again.certificate;
    if (fresh.conjugate_bounds.size() != cert.conjugate_bounds.size()) return false;
    for (std::size_t i = 0; i < fresh.conjugate_bounds.size(); ++i) {
        const auto& a = fresh.conjugate_bounds[i];
        const auto& b = cert.conjugate_bounds[i];
        if (!(a.place == b.place) || a.decision != b.decision) return false;
        // The recorded enclosure must still be a valid enclosure.
        if (a.value.lo > b.value.hi || b.value.lo > a.value.hi) return false;
    }
    return fresh.integrality == cert.integrality;
}

// ---------------------------------------------------------------------------
ProductFormulaReport product_formula_check(const NFElem& x, long bits) {
    if (x.is_zero()) throw UsageError("product formula needs x != 0");
    const NumberField& field = x.field();
    if (!field.is_totally_real()) throw Unsupported("product formula check needs a totally real field");
    ProductFormulaReport rep{x, {}, Interval::point(Rational(1)), Rational(0), Rational(1), false, false};
    if (field.degree() == 1) {
        const Rational q = x.rational_value();
        Rational product = abs_of(q);
        rep.factors.push_back({"inf", Interval::point(abs_of(q))});
        for (const auto& [p, e] : factorize(q.get_num() * q.get_den())) {
            Rational v = padic_abs(q, p);
            rep.factors.push_back({"p=" + p.get_str(), Interval::point(v)});
            product *= v;
        }
        rep.archimedean = Interval::point(abs_of(q));
        rep.norm_abs = abs_of(q);
        rep.finite_part = product / abs_of(q);
        rep.exact = true;
        rep.holds = product == 1;
        return rep;
    }
    for (const auto& root : real_roots(field)) {
        Interval a = abs_enclosure(x, root.refined(bits), bits);
        rep.factors.push_back({"real:" + std::to_string(root.root_index()), a});
        rep.archimedean = rep.archimedean * a;
    }
    rep.norm_abs = abs_of(x.norm());
    for (const auto& [p, e] : factorize(rep.norm_abs.get_num() * rep.norm_abs.get_den())) {
        Rational v = padic_abs(rep.norm_abs, p);
        rep.factors.push_back({"above p=" + p.get_str(), Interval::point(v)});
        rep.finite_part *= v;
    }
    rep.holds = rep.archimedean.contains(rep.norm_abs) && rep.norm_abs * rep.finite_part == 1;
    return rep;
}

UnitCheck unit_obstruction_check(const NFElem& x, const SIntegerRing& ring, long max_precision) {
    UnitCheck out;
    out.s_product = Interval::point(Rational(1));
    if (x.is_zero()) return out;
    out.unit = s_integer_membership(x, ring, max_precision).member() &&
               s_integer_membership(x.inverse(), ring, max_precision).member();
    for (const auto& p : ring.places()) {
        if (p.is_archimedean())
            out.s_product = out.s_product * abs_enclosure(x, *p.embedding, 96);
        else
            out.s_product = padic_abs(x.rational_value(), p.prime) * out.s_product;
    }
    out.consistent = !out.unit || out.s_product.contains(Rational(1));
    return out;
}

// ---------------------------------------------------------------------------
KPoly parse_kpoly(const NumberField& field, const std::string& text) {
    KPoly p;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) p.push_back(parse_element(field, tok));
    if (p.empty()) throw UsageError("empty polynomial");
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    return p;
}

std::string format_kpoly(const KPoly& p) {
    std::string out;
    for (const auto& c : p) out += (out.empty() ? "" : ",") + to_string(c);
    return out;
}

NFElem evaluate(const KPoly& p, const NFElem& x) {
    NFElem acc(x.field());
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

bool is_constant(const KPoly& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (!p[i].is_zero()) return false;
    return true;
}

Integer coefficient_denominator(const KPoly& p) {
    Integer d = 1;
    for (const auto& c : p)
        for (const auto& q : c.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den().get_mpz_t());
    return d;
}

void require_field(const KPoly& p, const SIntegerRing& ring) {
    if (p.empty()) throw UsageError("empty polynomial");
    for (const auto& c : p)
        if (c.field() != ring.field()) throw UsageError("polynomial and ring belong to different fields");
}

cps::Ambient ring_ambient(const SIntegerRing& ring) {
    auto phys = ring.physical_place();
    if (ring.field().degree() != 2 || !phys || !ring.primes().empty())
        throw Unsupported("this operation needs a real quadratic field with S = one real place");
    cps::Ambient a;
    a.field = ring.field();
    a.physical = *phys->embedding;
    a.internal = real_place(ring.field(), 1 - phys->root_index());
    a.dim = 1;
    return a;
}

NFElem fractional_part(const NFElem& x) {
    std::vector<Rational> c;
    for (const auto& q : x.coeffs()) c.push_back(q - Rational(floor_of(q)));
    return NFElem(x.field(), c);
}

// u/m with 0 <= u < m and q - u/m in Z_S.
Rational reduce_mod_zs(const Rational& q, const std::vector<Integer>& primes) {
    Integer m = q.get_den(), s = 1;
    for (const auto& p : primes)
        while (m % p == 0) {
            m /= p;
            s *= p;
        }
    if (m == 1) return Rational(0);
    Integer sinv;
    mpz_invert(sinv.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
    Integer u = (q.get_num() * sinv) % m;
    if (u < 0) u += m;
    Rational out(u, m);
    out.canonicalize();
    return out;
}

bool in_zs(const Rational& q, const std::vector<Integer>& primes) { return reduce_mod_zs(q, primes) == 0; }

bool has_integer_coeffs(const NFElem& x) { return x.has_integer_coeffs(); }

std::vector<NFElem> sorted_unique(std::vector<NFElem> v) {
    std::sort(v.begin(), v.end(), [](const NFElem& a, const NFElem& b) { return lex_compare(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Translates covering y = P(x) for x in the rational ring Z_S (infinity in S).
std::vector<NFElem> rational_translates(const KPoly& p, const SIntegerRing& ring, Integer& modulus) {
    if (!ring.contains_archimedean(0)) throw Unsupported("over Q the polynomial cover needs the real place in S");
    const auto primes = ring.primes();
    Integer d = 1;
    for (const auto& c : p) {
        Integer den = c.rational_value().get_den();
        for (const auto& q : primes)
            while (den % q == 0) den /= q;
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
    if (d > 1'000'000) throw ResourceError("residue modulus " + d.get_str() + " is too large");
    modulus = d;
    std::vector<NFElem> out;
    for (unsigned long r = 0; r < d.get_ui(); ++r) {
        NFElem y = evaluate(p, NFElem::from_rational(ring.field(), Rational(static_cast<long>(r))));
        out.push_back(NFElem::from_rational(ring.field(), reduce_mod_zs(y.rational_value(), primes)));
    }
    return sorted_unique(std::move(out));
}

std::vector<std::pair<NFElem, std::vector<NFElem>>> residue_classes(const KPoly& p, const NumberField& field, const Integer& d) {
    if (d > 100) throw ResourceError("residue modulus " + d.get_str() + " is too large");
    std::map<std::vector<Rational>, std::pair<NFElem, std::vector<NFElem>>> by_offset;
    const long D = d.get_si();
    for (long a = 0; a < D; ++a)
        for (long b = 0; b < D; ++b) {
            NFElem x0(field, {Rational(a), Rational(b)});
            NFElem off = fractional_part(evaluate(p, x0));
            auto& slot = by_offset.try_emplace(off.coeffs(), off, std::vector<NFElem>{}).first->second;
            slot.second.push_back(x0);
        }
    std::vector<std::pair<NFElem, std::vector<NFElem>>> out;
    for (auto& [k, v] : by_offset) out.push_back(std::move(v));
    return out;
}

bool spot_check(const PolynomialCoverCertificate& cert) {
    if (cert.check_radius <= 0) return cert.checked_points == 0;
    const SIntegerRing& ring = cert.ring;
    std::size_t checked = 0;
    if (ring.field().degree() == 1) {
        for (const auto& x : enumerate_ring(ring, cert.check_radius, 1)) {
            NFElem y = evaluate(cert.polynomial, x);
            bool ok = std::any_of(cert.translates.begin(), cert.translates.end(), [&](const NFElem& t) {
                return in_zs((y - t).rational_value(), ring.primes());
            });
            if (!ok) return false;
            ++checked;
        }
    } else {
        const auto ambient = ring_ambient(ring);
        for (const auto& x : cps::enumerate_quadratic(ambient, cert.check_radius, cert.window)) {
            NFElem y = evaluate(cert.polynomial, x);
            bool ok = std::any_of(cert.translates.begin(), cert.translates.end(), [&](const NFElem& t) {
                NFElem r = y - t;
                return has_integer_coeffs(r) && compare_abs_to_one(r, *ambient.internal) != AbsComparison::Greater;
            });
            if (!ok) return false;
            ++checked;
        }
    }
    return checked == cert.checked_points;
}

}  // namespace

Rational conjugate_bound(const KPoly& p, const RealEmbedding& internal, const Rational& delta, long bits) {
    Rational total(0), power(1);
    for (const auto& c : p) {
        total += abs(eval_embedding(c, internal, bits)).hi * power;
        power *= delta;
    }
    return total;
}

PolynomialCoverCertificate polynomial_translate_cover(const KPoly& p, const SIntegerRing& ring, const Rational& c,
                                                      const cps::IntervalCoverOptions& opts, const Rational& check_radius) {
    require_field(p, ring);
    if (c <= 0) throw UsageError("window scale must be > 0");
    PolynomialCoverCertificate cert{p, ring, c, Integer(1), Rational(0), {}, {}, check_radius, 0};
    if (is_constant(p)) {
        cert.translates = {p[0]};
    } else if (ring.field().degree() == 1) {
        cert.translates = rational_translates(p, ring, cert.modulus);
    } else {
        const auto ambient = ring_ambient(ring);
        cert.modulus = coefficient_denominator(p);
        cert.image_bound = conjugate_bound(p, *ambient.internal, c);
        std::vector<NFElem> all;
        for (auto& [offset, reps] : residue_classes(p, ring.field(), cert.modulus)) {
            auto cover = cps::cover_interval(ambient, cert.image_bound, Rational(1), offset, opts);
            for (const auto& t : cover.translates()) all.push_back(t);
            cert.classes.push_back({offset, std::move(reps), std::move(cover)});
        }
        cert.translates = sorted_unique(std::move(all));
    }
    if (check_radius > 0) {
        std::size_t n = ring.field().degree() == 1 ? enumerate_ring(ring, check_radius, 1).size()
                                                   : cps::enumerate_quadratic(ring_ambient(ring), check_radius, c).size();
        cert.checked_points = n;
        if (!spot_check(cert)) throw std::logic_error("polynomial cover failed its own spot check");
    }
    return cert;
}

bool replay(const PolynomialCoverCertificate& cert, const cps::IntervalCoverOptions& opts) {
    (void)opts;
    const KPoly& p = cert.polynomial;
    if (is_constant(p)) return cert.translates == std::vector<NFElem>{p[0]} && spot_check(cert);
    if (cert.ring.field().degree() == 1) {
        Integer m;
        return rational_translates(p, cert.ring, m) == cert.translates && m == cert.modulus && spot_check(cert);
    }
    const auto ambient = ring_ambient(cert.ring);
    if (coefficient_denominator(p) != cert.modulus) return false;
    if (conjugate_bound(p, *ambient.internal, cert.window) != cert.image_bound) return false;
    const auto classes = residue_classes(p, cert.ring.field(), cert.modulus);
    if (classes.size() != cert.classes.size()) return false;
    std::vector<NFElem> all;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& rc = cert.classes[i];
        if (rc.offset != classes[i].first || rc.representatives != classes[i].second) return false;
        if (rc.cover.target < cert.image_bound || rc.cover.halfwidth != 1) return false;
        if (!cps::replay(rc.cover, ambient)) return false;
        for (const auto& t : rc.cover.translates()) {
            if (!(t - rc.offset).has_integer_coeffs()) return false;
            all.push_back(t);
        }
    }
    return sorted_unique(std::move(all)) == cert.translates && spot_check(cert);
}

// ---------------------------------------------------------------------------
cps::Patch ring_patch(const SIntegerRing& ring, const Rational& c, const Rational& radius) {
    const auto ambient = ring_ambient(ring);
    cps::Patch patch{ambient, radius, "ring window " + to_fraction_string(c), {}};
    for (auto& x : cps::enumerate_quadratic(ambient, radius, c)) patch.points.push_back({std::move(x)});
    patch.normalize();
    return patch;
}

cps::Patch shrunken_patch(const SIntegerRing& ring, const Integer& modulus, const Rational& delta, const Rational& radius) {
    const auto ambient = ring_ambient(ring);
    const Rational D(modulus);
    cps::Patch patch{ambient, radius, "shrunken window " + to_fraction_string(delta) + " on " + modulus.get_str() + " Z[theta]", {}};
    for (auto& x : cps::enumerate_quadratic(ambient, radius / D, delta / D)) patch.points.push_back({D * x});
    patch.normalize();
    return patch;
}

ShrinkCertificate shrink_for_polynomial(const KPoly& p, const SIntegerRing& ring, const Rational& patch_radius, long denominator) {
    require_field(p, ring);
    const auto ambient = ring_ambient(ring);
    if (!p[0].is_zero()) throw UsageError("shrink_for_polynomial needs P(0) = 0");
    if (denominator < 1) throw UsageError("denominator must be >= 1");
    ShrinkCertificate cert{p, ring, coefficient_denominator(p), Rational(0), Rational(0), patch_radius, {}};
    Integer den = denominator;
    for (int round = 0; round < 64 && cert.delta == 0; ++round, den *= 2) {
        // The bound is increasing in delta, so bisect on the numerator.
        Integer lo = 0, hi = den;
        while (lo < hi) {
            Integer mid = (lo + hi + 1) / 2;
            if (conjugate_bound(p, *ambient.internal, Rational(mid, den)) <= 1) lo = mid;
            else hi = mid - 1;
        }
        if (lo > 0) {
            cert.delta = Rational(lo, den);
            cert.delta.canonicalize();
        }
    }
    if (cert.delta == 0) throw ResourceError("no shrinking scale found");
    cert.bound_at_delta = conjugate_bound(p, *ambient.internal, cert.delta);
    cert.comparison = verify::commensurability(shrunken_patch(ring, cert.modulus, cert.delta, patch_radius),
                                               ring_patch(ring, Rational(1), patch_radius));
    return cert;
}

bool replay(const ShrinkCertificate& cert) {
    const auto ambient = ring_ambient(cert.ring);
    if (!cert.polynomial[0].is_zero() || cert.delta <= 0 || cert.delta > 1) return false;
    if (coefficient_denominator(cert.polynomial) != cert.modulus) return false;
    if (conjugate_bound(cert.polynomial, *ambient.internal, cert.delta) != cert.bound_at_delta || cert.bound_at_delta > 1)
        return false;
    const auto small = shrunken_patch(cert.ring, cert.modulus, cert.delta, cert.patch_radius);
    for (const auto& pt : small.points) {
        NFElem y = evaluate(cert.polynomial, pt[0]);
        if (!y.has_integer_coeffs() || compare_abs_to_one(y, *ambient.internal) == AbsComparison::Greater) return false;
    }
    return verify::replay(cert.comparison, small, ring_patch(cert.ring, Rational(1), cert.patch_radius));
}

// ---------------------------------------------------------------------------
SumProductResult pvs_certify_set(const std::vector<NFElem>& elements, const SIntegerRing& ring,
                                 std::optional<Rational> patch_bound, long max_precision) {
    const auto elems = sorted_unique(elements);
    if (elems.size() != elements.size()) throw UsageError("elements must be pairwise distinct");
    auto contains = [&](const NFElem& x) {
        return std::binary_search(elems.begin(), elems.end(), x,
                                  [](const NFElem& a, const NFElem& b) { return lex_compare(a, b) < 0; });
    };
    for (const auto& x : elements) {
        if (x.field() != ring.field()) throw UsageError("element and ring belong to different fields");
        if (!contains(-x)) throw UsageError("element set is not symmetric: missing -(" + to_string(x) + ")");
    }
    if (!contains(NFElem(ring.field()))) throw UsageError("element set must contain 0");

    SumProductResult res;
    SumProductCertificate cert{ring, elements, {}, Rational(0), 0, 0, 0, {}, {}};
    for (const auto& x : elements) {
        auto m = s_integer_membership(x, ring, max_precision);
        if (!m.member()) {
            res.rejection = m.rejection;
            return res;
        }
        cert.members.push_back(std::move(*m.certificate));
    }
    std::optional<Place> phys;
    for (const auto& p : ring.places())
        if (p.is_archimedean()) {
            phys = p;
            break;
        }
    if (!phys) phys = Place::archimedean(ring.field(), 0);
    const RealEmbedding& e = *phys->embedding;

    std::size_t largest = 0;
    for (std::size_t i = 1; i < elements.size(); ++i)
        if (compare_abs(elements[i], elements[largest], e, max_precision) > 0) largest = i;
    cert.patch_bound = patch_bound ? *patch_bound : abs_enclosure(elements[largest], e, 96).hi;

    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i; j < elements.size(); ++j) {
            NFElem prod = elements[i] * elements[j];
            ++cert.products_checked;
            bool inside = patch_bound ? compare_abs_to(prod, *patch_bound, e, max_precision) != AbsComparison::Greater
                                      : compare_abs(prod, elements[largest], e, max_precision) <= 0;
            if (!inside) {
                ++cert.products_out_of_patch;
            } else if (contains(prod)) {
                ++cert.products_in_set;
            } else {
                cert.flagged.push_back({i, j, std::move(prod)});
            }
        }
    cert.conclusion = "every element lies in O_{K,S} for S = {" + ring.describe() + "}";
    if (!cert.flagged.empty()) cert.conclusion += "; " + std::to_string(cert.flagged.size()) + " in-patch products missing from the set";
    res.certificate = std::move(cert);
    return res;
}

std::vector<NFElem> enumerate_ring(const SIntegerRing& ring, const Rational& radius, long level) {
    if (ring.field().degree() == 1) {
        Integer d = 1;
        for (const auto& p : ring.primes())
            for (long i = 0; i < level; ++i) d *= p;
        Rational r = ring.contains_archimedean(0) ? radius : std::min(radius, Rational(1));
        std::vector<NFElem> out;
        const Integer n = floor_of(r * d);
        if (2 * n + 1 > 50'000'000) throw ResourceError("ring enumeration exceeds the limit");
        for (Integer k = -n; k <= n; ++k) {
            Rational q(k, d);
            q.canonicalize();
            out.push_back(NFElem::from_rational(ring.field(), q));
        }
        return out;
    }
    return cps::enumerate_quadratic(ring_ambient(ring), radius, Rational(1));
}

}  // namespace meyerlab::places
