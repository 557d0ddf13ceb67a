// End-to-end acceptance run: eight criteria, one PASS/FAIL line each.
// Usage: meyerlab_acceptance [artifact-directory]

#include "oracles.hpp"

#include "meyerlab/cps/certificate.hpp"
#include "meyerlab/cps/scheme.hpp"
#include "meyerlab/cps/subgroup.hpp"
#include "meyerlab/errors.hpp"
#include "meyerlab/heis/heisenberg.hpp"
#include "meyerlab/io/csv.hpp"
#include "meyerlab/io/documents.hpp"
#include "meyerlab/io/files.hpp"
#include "meyerlab/places/places.hpp"
#include "meyerlab/verify/cover.hpp"
#include "meyerlab/verify/delone.hpp"
#include "meyerlab/verify/group.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace meyerlab;

namespace {

// Collects failed checks of one criterion.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    bool ok() const { return failures_.empty(); }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

// Every artifact is a named recipe producing bytes for a thread count.
struct Artifact {
    std::string name;
    std::function<std::string(unsigned)> make;
    std::string bytes;  // produced with one thread
};

std::vector<Artifact> g_artifacts;

const std::string& record(const std::string& name, std::function<std::string(unsigned)> make) {
    g_artifacts.push_back({name, std::move(make), {}});
    g_artifacts.back().bytes = g_artifacts.back().make(1);
    return g_artifacts.back().bytes;
}

// Computes a document, records it and replays it from its bytes.
io::Document document(Checks& c, const std::string& name, const std::string& kind, const io::Json& inputs) {
    auto make = [kind, inputs](unsigned threads) {
        io::RunOptions o;
        o.threads = threads;
        return io::compute(kind, inputs, o);
    };
    auto doc = make(1);
    g_artifacts.push_back({name, [make](unsigned t) { return io::dump(make(t).json); }, io::dump(doc.json)});
    const auto rep = io::replay_document(io::parse_json(g_artifacts.back().bytes));
    std::string why;
    for (const auto& f : rep.failed) why += " " + f;
    c.expect(rep.ok, name + " replays:" + why);
    return doc;
}

cps::EnumerationOptions threads_of(unsigned t) {
    cps::EnumerationOptions o;
    o.threads = t;
    return o;
}

std::vector<Rational> rational_points(const cps::Patch& p) {
    std::vector<Rational> out;
    for (const auto& pt : p.points) out.push_back(pt[0].rational_value());
    return out;
}

std::set<std::pair<long, long>> coefficient_set(const cps::Patch& p) {
    std::set<std::pair<long, long>> out;
    for (const auto& pt : p.points) {
        const auto a = pt[0].coeff(0), b = pt[0].coeff(1);
        if (a.get_den() != 1 || b.get_den() != 1) return {};
        out.insert({a.get_num().get_si(), b.get_num().get_si()});
    }
    return out;
}

long double quad_value(const oracle::Quadratic& q, bool larger, const std::pair<long, long>& ab) {
    return ab.first + ab.second * q.root(larger);
}

// Smallest gap of sorted doubles.
double min_gap(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    double g = 1e300;
    for (std::size_t i = 1; i < v.size(); ++i) g = std::min(g, v[i] - v[i - 1]);
    return g;
}

// |x|_p over all primes dividing the numerator or denominator, by trial division.
Rational finite_product(const Rational& x) {
    Rational out(1);
    auto strip = [&](Integer n, bool numerator) {
        n = abs(n);
        for (Integer p = 2; p * p <= n; ++p)
            while (n % p == 0) {
                n /= p;
                out *= numerator ? Rational(1, p) : Rational(p);
            }
        if (n > 1) out *= numerator ? Rational(Integer(1), n) : Rational(n);
    };
    strip(x.get_num(), true);
    strip(x.get_den(), false);
    out.canonicalize();
    return out;
}

std::vector<double> poly_coefficients(const std::string& text) {
    std::vector<double> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(parse_rational(tok).get_d());
    return out;
}

double eval(const std::vector<double>& c, double s) {
    double v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * s + c[i];
    return v;
}

// ---------------------------------------------------------------------------

bool criterion_zs(Checks& c) {
    const std::vector<std::vector<long>> prime_sets{{2}, {3}, {2, 3}};
    for (const auto& primes : prime_sets) {
        std::vector<std::vector<int>> levels{{}};
        for (std::size_t i = 0; i < primes.size(); ++i) {
            std::vector<std::vector<int>> next;
            for (const auto& l : levels)
                for (int k = 0; k <= 2; ++k) {
                    auto e = l;
                    e.push_back(k);
                    next.push_back(e);
                }
            levels = next;
        }
        std::string scheme_text = "zs:";
        for (std::size_t i = 0; i < primes.size(); ++i) scheme_text += (i ? "," : "") + std::to_string(primes[i]);
        const auto scheme = cps::parse_scheme(scheme_text);
        for (const auto& l : levels) {
            std::string window;
            Integer D = 1;
            for (std::size_t i = 0; i < primes.size(); ++i) {
                window += (i ? ",z" : "z") + std::to_string(primes[i]) + ":" + std::to_string(l[i]);
                for (int k = 0; k < l[i]; ++k) D *= primes[i];
            }
            for (long R : {3L, 10L, 50L}) {
                const std::string name = "zs/" + scheme_text + "_" + window + "_R" + std::to_string(R) + ".csv";
                const auto& csv = record(name, [=](unsigned t) {
                    return io::patch_csv(cps::model_set_patch(scheme, cps::parse_window(window), Rational(R), threads_of(t)),
                                         scheme.primes);
                });
                c.expect(rational_points(io::read_patch_csv(csv)) == oracle::scaled_integers(D, Rational(R)), name + " equals (1/D)Z in the ball");
            }
        }
    }
    return c.ok();
}

bool criterion_lattices(Checks& c) {
    struct Case {
        const char* scheme;
        oracle::Quadratic q;
    };
    for (const Case& k : {Case{"galois:golden", {-1, -1}}, Case{"galois:sqrt2", {-2, 0}}}) {
        const std::string tag = k.scheme;
        const auto scheme = cps::parse_scheme(k.scheme);
        const auto window = cps::parse_window("box:1");
        const auto cert = cps::approximate_lattice_certificate(scheme, window, Rational(50));
        c.expect(!cert.cover.trivial && !cert.cover.translates.empty(), tag + " has a global cover");
        c.expect(cert.cover.translates.size() <= 8, tag + " |F| <= 8");
        c.expect(cps::replay(cert.cover, scheme), tag + " cover replays");
        c.expect(cps::replay(cert, scheme), tag + " certificate replays");
        c.expect(cert.delone.uniformly_discrete(), tag + " minimum separation > 0");
        c.expect(cert.delone.relatively_dense(), tag + " finite covering radius");

        const auto doc = document(c, "lattice/" + tag.substr(7) + ".json", "approximate_lattice",
                                  io::Json{{"scheme", k.scheme}, {"window", "box:1"}, {"radius", "50"}});
        c.expect(doc.outcome == io::Outcome::Verified, tag + " document verified");

        // Brute-force enumeration at R = 50.
        const auto patch = cps::model_set_patch(scheme, window, Rational(50));
        const auto brute = oracle::fibonacci_like(k.q, 50, 1, 120);
        c.expect(coefficient_set(patch) == brute, tag + " patch equals brute force at R = 50");
        std::vector<double> values;
        for (const auto& ab : brute) values.push_back(static_cast<double>(quad_value(k.q, true, ab)));
        const double gap = min_gap(values);
        if (cert.delone.min_separation) {
            const auto& enc = cert.delone.min_separation->enclosure;
            c.expect(enc.lo.get_d() <= gap + 1e-9 && gap - 1e-9 <= enc.hi.get_d(), tag + " separation matches brute force");
        }
        // Lambda + Lambda inside F + Lambda, checked in floating point on a patch.
        const auto small = oracle::fibonacci_like(k.q, 15, 1, 60);
        std::vector<std::pair<long, long>> F;
        for (const auto& f : cert.cover.translates) F.push_back({f[0].coeff(0).get_num().get_si(), f[0].coeff(1).get_num().get_si()});
        bool covered = true;
        for (const auto& a : small)
            for (const auto& b : small) {
                bool hit = false;
                for (const auto& f : F) {
                    const std::pair<long, long> r{a.first + b.first - f.first, a.second + b.second - f.second};
                    if (std::fabs(static_cast<double>(quad_value(k.q, false, r))) <= 1 + 1e-9) hit = true;
                }
                covered = covered && hit;
            }
        c.expect(covered, tag + " sums of patch points land in F + Lambda");
    }
    return c.ok();
}

bool criterion_pisot(Checks& c) {
    const auto golden = NumberField::golden();
    const auto phi = places::s_integer_membership(NFElem::generator(golden), places::parse_ring(golden, "real:1"));
    c.expect(phi.member() && places::replay(*phi.certificate), "golden ratio certified");
    const auto s2 = NumberField::sqrt2();
    const auto silver = places::s_integer_membership(NFElem(s2, {1, 1}), places::parse_ring(s2, "real:1"));
    c.expect(silver.member() && places::replay(*silver.certificate), "1 + sqrt2 certified");
    const auto third = places::s_integer_membership(NFElem::from_rational(NumberField::rationals(), Rational(1, 3)),
                                                    places::parse_ring(NumberField::rationals(), "inf,2"));
    c.expect(!third.member() && third.rejection && third.rejection->place == "p=3", "1/3 rejected with witness p = 3");

    const auto gd = document(c, "pisot/golden.json", "pisot",
                             io::Json{{"field", io::to_json(golden)}, {"ring", "real:1"}, {"elements", {"0:1"}}, {"max_precision", 256}});
    c.expect(gd.outcome == io::Outcome::Verified, "golden document verified");
    const auto sd = document(c, "pisot/silver.json", "pisot",
                             io::Json{{"field", io::to_json(s2)}, {"ring", "real:1"}, {"elements", {"1:1"}}, {"max_precision", 256}});
    c.expect(sd.outcome == io::Outcome::Verified, "1 + sqrt2 document verified");
    const auto td = document(c, "pisot/third.json", "pisot",
                             io::Json{{"field", io::to_json(NumberField::rationals())}, {"ring", "inf,2"}, {"elements", {"1/3"}}, {"max_precision", 256}});
    c.expect(td.outcome == io::Outcome::Negative, "1/3 document negative");

    std::mt19937_64 rng(31415);
    int done = 0;
    while (done < 20) {
        const Rational x = oracle::random_rational(rng, 1000);
        if (x == 0) continue;
        ++done;
        const auto rep = places::product_formula_check(NFElem::from_rational(NumberField::rationals(), x));
        c.expect(rep.exact && rep.holds, "product formula for " + x.get_str());
        c.expect(rep.norm_abs == abs(x), "archimedean factor of " + x.get_str());
        c.expect(rep.finite_part == finite_product(x), "finite places of " + x.get_str() + " match trial division");
        c.expect(finite_product(x) * abs(x) == 1, "oracle product of " + x.get_str());
    }
    return c.ok();
}

// "0,1,3" -> "0_1_3", for file names.
std::string tag_of(std::string poly) {
    std::replace(poly.begin(), poly.end(), ',', '_');
    return poly;
}

bool criterion_polynomials(Checks& c) {
    const auto golden = NumberField::golden();
    const auto ring = places::parse_ring(golden, "real:1");
    const oracle::Quadratic q{-1, -1};
    std::vector<double> centres;
    for (long a = -30; a <= 30; ++a)
        for (long b = -30; b <= 30; ++b) centres.push_back(static_cast<double>(a + b * q.root(false)));
    for (const std::string poly : {"0,0,1", "0,2", "0,1,3"}) {
        const auto P = places::parse_kpoly(golden, poly);
        const auto cover = places::polynomial_translate_cover(P, ring, Rational(1));
        c.expect(places::replay(cover), poly + " cover replays");
        const auto cd = document(c, "polynomial/cover_" + tag_of(poly) + ".json", "polynomial_cover",
                                 io::Json{{"field", io::to_json(golden)}, {"ring", "real:1"}, {"polynomial", poly}, {"window", "1"}, {"check_radius", "20"}});
        c.expect(cd.outcome == io::Outcome::Verified, poly + " cover document verified");

        // Greedy oracle on the sampled image of [-1, 1].
        const auto coeffs = poly_coefficients(poly);
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i <= 200000; ++i) {
            const double v = eval(coeffs, -1 + i / 100000.0);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const std::size_t greedy = oracle::greedy_interval_cover(centres, lo, hi, 1.0);
        const std::size_t size = cover.translates.size();
        c.expect(size <= 2 * greedy && greedy <= 2 * size,
                 poly + " cover size " + std::to_string(size) + " within a factor 2 of greedy " + std::to_string(greedy));

        const auto shrink = places::shrink_for_polynomial(P, ring, Rational(20));
        c.expect(places::replay(shrink), poly + " shrink replays");
        c.expect(shrink.delta > 0 && shrink.bound_at_delta <= 1, poly + " shrink bound");
        double worst = 0;
        const double d = shrink.delta.get_d();
        for (int i = 0; i <= 20000; ++i) worst = std::max(worst, std::fabs(eval(coeffs, d * (-1 + i / 10000.0))));
        c.expect(worst <= 1 + 1e-12, poly + " shrunken window maps into the unit window");
        const auto sd = document(c, "polynomial/shrink_" + tag_of(poly) + ".json", "shrink",
                                 io::Json{{"field", io::to_json(golden)}, {"ring", "real:1"}, {"polynomial", poly}, {"radius", "20"}, {"denominator", 256}});
        c.expect(sd.outcome == io::Outcome::Verified, poly + " shrink document verified");
    }
    return c.ok();
}

bool criterion_heisenberg(Checks& c) {
    using namespace heis;
    const auto Q = NumberField::rationals();
    auto r = [&](const Rational& v) { return NFElem::from_rational(Q, v); };
    std::mt19937_64 rng(2718);
    auto rnd = [&] { return oracle::random_rational(rng); };
    bool identities = true;
    for (int i = 0; i < 1000; ++i) {
        const Rational a = rnd(), b = rnd(), cc = rnd(), a2 = rnd(), b2 = rnd(), c2 = rnd();
        const HeisAlgebraElem u{r(a), r(b), r(cc)}, v{r(a2), r(b2), r(c2)};
        // exp by hand: (a, b, c + ab/2); the law by hand: (x+x', y+y', z+z'+xy').
        const HeisPoint eu{r(a), r(b), r(cc + a * b / 2)}, ev{r(a2), r(b2), r(c2 + a2 * b2 / 2)};
        const Rational ex = a + a2, ey = b + b2, ez = cc + a * b / 2 + c2 + a2 * b2 / 2 + a * b2;
        const HeisPoint product{r(ex), r(ey), r(ez)};
        identities = identities && heis_exp(u) == eu && heis_log(eu) == u && heis_exp(heis_log(eu)) == eu;
        identities = identities && heis_mul(eu, ev) == product;
        identities = identities && heis_exp(bch2(u, v)) == product;
        // bch2 by hand: u + v + [u, v]/2 with [u, v] = (0, 0, ab' - a'b).
        identities = identities && bch2(u, v) == HeisAlgebraElem{r(a + a2), r(b + b2), r(cc + c2 + (a * b2 - a2 * b) / 2)};
    }
    c.expect(identities, "exp, log and bch2 identities on 1000 random inputs");

    const auto scheme = HeisScheme::make(NumberField::sqrt2(), parse_heis_window("1,1,2"));
    const auto cert = heis_covering_certificate(scheme);
    c.expect(!cert.translates.empty() && replay(cert, scheme), "covering certificate for (1,1,2) over Q(sqrt2)");
    const io::Json field = io::to_json(NumberField::sqrt2());
    const auto cd = document(c, "heis/cover.json", "heis_cover", io::Json{{"field", field}, {"window", "1,1,2"}});
    c.expect(cd.outcome == io::Outcome::Verified, "cover document verified");

    for (long R : {10L, 20L}) {
        const auto rep = center_intersection(scheme, Rational(R));
        const bool gap = !rep.inconclusive && rep.delone && rep.delone->uniformly_discrete();
        c.expect(gap, "centre gap > 0 at R = " + std::to_string(R));
        c.expect(rep.center.ambient.dim == 1, "centre patch is one-dimensional");
        std::vector<double> zs;
        for (const auto& z : rep.center.points) zs.push_back(z[0].coeff(0).get_d() + z[0].coeff(1).get_d() * std::sqrt(2.0));
        c.expect(zs.size() >= 2 && min_gap(zs) > 1e-9, "centre gap confirmed in floating point at R = " + std::to_string(R));
        const auto doc = document(c, "heis/center_R" + std::to_string(R) + ".json", "center",
                                  io::Json{{"field", field}, {"window", "1,1,2"}, {"radius", std::to_string(R)}});
        c.expect(doc.outcome == io::Outcome::Verified, "centre document verified");
    }

    const auto patch = heis_model_set(scheme, Rational(3));
    const auto& f = scheme.field;
    for (const HeisPoint& xi : {HeisPoint{NFElem::from_rational(f, 1), NFElem(f), NFElem(f)},
                                HeisPoint{NFElem(f, {1, 1}), NFElem(f, {Rational(1, 2), -1}), NFElem(f, {3, 0})}}) {
        const auto rep = commutator_map(xi, patch);
        c.expect(rep.homomorphism && rep.formula_matches_law, "commutator map is a homomorphism for xi = " + to_string(xi));
        c.expect(rep.pairs_checked == patch.size() * patch.size(), "commutator map checked on all pairs");
    }
    const auto comm = document(c, "heis/commutator.json", "commutator",
                               io::Json{{"field", field}, {"window", "1,1,2"}, {"radius", "3"}, {"xi", {"1:1", "1/2:-1", "3"}}});
    c.expect(comm.outcome == io::Outcome::Verified, "commutator document verified");

    const auto big = heis_model_set(scheme, Rational(6));
    const auto sym = symmetrize(big, scheme);
    const auto rep = meyer_commensurability(sym, big);
    c.expect(rep.verdict == verify::Verdict::CommensurableAtScale, "symmetrized set and model set commensurable");
    c.expect(!rep.a_in_b.translates.empty() && !rep.b_in_a.translates.empty(), "two-way covers are finite and non-empty");
    c.expect(verify::replay(rep, sym, big), "commensurability replays");
    const auto md = document(c, "heis/commensurability.json", "heis_commensurability",
                             io::Json{{"field", field}, {"window", "1,1,2"}, {"radius", "6"}, {"other", "symmetrize"}, {"translate_bound", nullptr}});
    c.expect(md.outcome == io::Outcome::Verified, "commensurability document verified");
    return c.ok();
}

bool criterion_covers(Checks& c) {
    std::mt19937_64 rng(600613);
    auto zpt = [](long v) { return cps::Point{NFElem::from_rational(NumberField::rationals(), Rational(v))}; };
    for (int trial = 0; trial < 100; ++trial) {
        const bool cyclic = trial % 2 == 0;
        const auto in = oracle::random_cell_instance(rng, cyclic);
        const std::string tag = "instance " + std::to_string(trial);
        std::vector<long> reps;
        std::size_t bound = 0;
        bool verified = false;
        if (cyclic) {
            verify::CyclicGroup g{in.modulus};
            std::vector<verify::CoverInput<long>> covers;
            for (std::size_t i = 0; i < in.F.size(); ++i) covers.push_back({in.F[i], in.Y[i]});
            const auto w = verify::cell_cover(g, in.X, covers);
            reps = w.representatives;
            bound = w.bound;
            verified = w.inclusion_verified;
        } else {
            verify::PatchGroup g{cps::rational_ambient(1)};
            auto pts = [&](const std::vector<long>& v) {
                std::vector<cps::Point> out;
                for (long e : v) out.push_back(zpt(e));
                return out;
            };
            std::vector<verify::CoverInput<cps::Point>> covers;
            for (std::size_t i = 0; i < in.F.size(); ++i) covers.push_back({pts(in.F[i]), pts(in.Y[i])});
            const auto w = verify::cell_cover(g, pts(in.X), covers);
            for (const auto& p : w.representatives) reps.push_back(p[0].rational_value().get_num().get_si());
            bound = w.bound;
            verified = w.inclusion_verified;
        }
        std::size_t product = 1;
        for (const auto& f : in.F) product *= f.size();
        c.expect(bound == product && reps.size() <= product, tag + " |F'| <= prod |F_i|");
        c.expect(verified, tag + " inclusion verified");
        const auto diffs = oracle::common_differences(in);
        std::vector<long> candidates = in.X;
        if (cyclic) {
            candidates.clear();
            for (long v = 0; v < in.modulus; ++v) candidates.push_back(v);
        }
        const std::size_t minimal = oracle::minimal_cover_size(in.X, diffs, candidates, in.modulus);
        c.expect(oracle::minimal_cover_size(in.X, diffs, reps, in.modulus) <= reps.size(), tag + " representatives cover X");
        c.expect(minimal <= reps.size() && minimal <= product, tag + " consistent with the minimal cover");
    }

    const auto scheme = cps::parse_scheme("galois:golden");
    const auto window = cps::parse_window("box:1");
    const auto cert = cps::approximate_lattice_certificate(scheme, window, Rational(10));
    const auto fib = cps::model_set_patch(scheme, window, Rational(6));
    verify::PatchGroup g{fib.ambient};
    for (int k : {2, 3, 4}) {
        const auto rep = verify::approx_power_cover<verify::PatchGroup>(
            g, fib.points, k, cert.cover.translates, [&](const cps::Point& p) { return scheme.in_window(p, window); });
        std::size_t bound = 1;
        for (int i = 1; i < k; ++i) bound *= cert.cover.translates.size();
        c.expect(rep.verified && rep.checked > 0, "power cover verified for k = " + std::to_string(k));
        c.expect(rep.bound == bound && rep.translates.size() <= bound, "|F_k| <= |F|^(k-1) for k = " + std::to_string(k));
    }

    const auto a = cps::model_set_patch(scheme, window, Rational(12));
    const auto b = cps::model_set_patch(scheme, cps::parse_window("box:1/2"), Rational(12));
    const auto cd = document(c, "covers/cell_cover.json", "cell_cover",
                             io::Json{{"x", io::to_json(a)}, {"targets", {io::to_json(b), io::to_json(a)}}});
    c.expect(cd.outcome == io::Outcome::Verified, "cell cover document verified");
    return c.ok();
}

bool criterion_subgroups(Checks& c) {
    const auto scheme = cps::parse_scheme("galois:sqrt5:2");
    const auto window = cps::parse_window("box:1,1");
    const auto first = cps::parse_subgroup("axes:0", scheme);
    const auto proj = cps::project_to_quotient(scheme, window, first, Rational(8));
    c.expect(proj.uniformly_discrete, "projection uniformly discrete");
    const auto inter = cps::intersect_with_subgroup(scheme, window, first, Rational(8));
    c.expect(inter.delone && inter.delone->delone(), "intersection Delone");
    c.expect(proj.intersection_delone && proj.equivalence_consistent, "equivalence consistent");

    // The projection of the 2D set is the 1D set; compare with brute force.
    const oracle::Quadratic s5{-5, 0};
    c.expect(coefficient_set(proj.projected) == oracle::fibonacci_like(s5, 8, 1, 60), "projection equals the brute-force 1D set");
    std::vector<double> values;
    for (const auto& ab : oracle::fibonacci_like(s5, 16, 1, 80)) values.push_back(static_cast<double>(quad_value(s5, true, ab)));
    c.expect(min_gap(values) > 1e-6, "brute-force projection gap positive at twice the radius");

    const io::Json base{{"scheme", "galois:sqrt5:2"}, {"window", "box:1,1"}, {"subgroup", "axes:0"}, {"radius", "8"}};
    c.expect(document(c, "subgroup/projection.json", "projection", base).outcome == io::Outcome::Verified, "projection document verified");
    c.expect(document(c, "subgroup/intersection.json", "intersection", base).outcome == io::Outcome::Verified, "intersection document verified");

    bool rejected = false;
    try {
        cps::aligned_axes(scheme, cps::parse_subgroup("basis:1,0:1", scheme));
    } catch (const Unsupported&) {
        rejected = true;
    }
    c.expect(rejected, "irrational slope rejected as unsupported");
    bool doc_rejected = false;
    try {
        auto in = base;
        in["subgroup"] = "basis:1,0:1";
        io::compute("intersection", in);
    } catch (const Unsupported&) {
        doc_rejected = true;
    }
    c.expect(doc_rejected, "irrational slope document request rejected as unsupported");
    return c.ok();
}

bool criterion_determinism(Checks& c) {
    for (const auto& a : g_artifacts) c.expect(a.make(8) == a.bytes, a.name + " identical with 1 and 8 threads");
    c.expect(!g_artifacts.empty(), "artifacts were produced");
    return c.ok();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string out_dir = argc > 1 ? argv[1] : "";
    struct Criterion {
        const char* name;
        bool (*run)(Checks&);
    };
    const Criterion criteria[] = {
        {"Z_S exactness", criterion_zs},
        {"model sets are approximate lattices", criterion_lattices},
        {"Pisot certification and the product formula", criterion_pisot},
        {"polynomial covers and shrinking", criterion_polynomials},
        {"Heisenberg suite", criterion_heisenberg},
        {"cell covers and power covers", criterion_covers},
        {"intersection and projection", criterion_subgroups},
        {"determinism across thread counts", criterion_determinism},
    };
    int failed = 0;
    int index = 0;
    for (const auto& crit : criteria) {
        ++index;
        Checks checks;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = crit.run(checks);
        } catch (const std::exception& e) {
            checks.expect(false, std::string("exception: ") + e.what());
        }
        ok = ok && checks.ok();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "PASS" : "FAIL") << " " << index << " " << crit.name << " (" << std::fixed << std::setprecision(1) << secs
                  << " s)\n";
        for (const auto& f : checks.failures()) std::cout << "    failed: " << f << "\n";
        failed += ok ? 0 : 1;
    }
    if (!out_dir.empty()) {
        for (const auto& a : g_artifacts) {
            const auto path = std::filesystem::path(out_dir) / a.name;
            std::filesystem::create_directories(path.parent_path());
            io::write_atomic(path.string(), a.bytes);
        }
        std::cout << g_artifacts.size() << " artifacts written to " << out_dir << "\n";
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
