#include "meyerlab/heis/heisenberg.hpp"

#include "meyerlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace meyerlab::heis {

namespace {

void same_field(const NFElem& a, const NFElem& b) {
    if (a.field() != b.field()) throw UsageError("Heisenberg points over different fields");
}

}  // namespace

HeisPoint heis_identity(const NumberField& field) { return {NFElem(field), NFElem(field), NFElem(field)}; }

HeisPoint heis_mul(const HeisPoint& p, const HeisPoint& q) {
    same_field(p.x, q.x);
    return {p.x + q.x, p.y + q.y, p.z + q.z + p.x * q.y};
}

HeisPoint heis_inv(const HeisPoint& p) { return {-p.x, -p.y, -p.z + p.x * p.y}; }

HeisPoint heis_commutator(const HeisPoint& p, const HeisPoint& q) {
    return heis_mul(heis_mul(heis_mul(p, q), heis_inv(p)), heis_inv(q));
}

bool is_central(const HeisPoint& p) { return p.x.is_zero() && p.y.is_zero(); }

HeisPoint from_point(const cps::Point& p) {
    if (p.size() != 3) throw UsageError("Heisenberg points have three coordinates");
    return {p[0], p[1], p[2]};
}

cps::Point to_point(const HeisPoint& p) { return {p.x, p.y, p.z}; }

std::string to_string(const HeisPoint& p) {
    return "(" + meyerlab::to_string(p.x) + ", " + meyerlab::to_string(p.y) + ", " + meyerlab::to_string(p.z) + ")";
}

HeisAlgebraElem operator+(const HeisAlgebraElem& u, const HeisAlgebraElem& v) { return {u.a + v.a, u.b + v.b, u.c + v.c}; }
HeisAlgebraElem operator-(const HeisAlgebraElem& u) { return {-u.a, -u.b, -u.c}; }
HeisAlgebraElem operator*(const Rational& s, const HeisAlgebraElem& u) { return {s * u.a, s * u.b, s * u.c}; }

HeisAlgebraElem bracket(const HeisAlgebraElem& u, const HeisAlgebraElem& v) {
    NFElem zero(u.a.field());
    return {zero, zero, u.a * v.b - v.a * u.b};
}

HeisPoint heis_exp(const HeisAlgebraElem& v) { return {v.a, v.b, v.c + Rational(1, 2) * (v.a * v.b)}; }

HeisAlgebraElem heis_log(const HeisPoint& p) { return {p.x, p.y, p.z - Rational(1, 2) * (p.x * p.y)}; }

HeisAlgebraElem bch2(const HeisAlgebraElem& u, const HeisAlgebraElem& v) { return u + v + Rational(1, 2) * bracket(u, v); }

// ---------------------------------------------------------------------------
std::string HeisWindow::describe() const {
    return to_fraction_string(cx) + "," + to_fraction_string(cy) + "," + to_fraction_string(cz);
}

HeisWindow parse_heis_window(const std::string& text) {
    std::vector<Rational> v;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) v.push_back(parse_rational(tok));
    if (v.size() != 3) throw UsageError("Heisenberg window needs three half-widths cx,cy,cz");
    HeisWindow w{v[0], v[1], v[2]};
    if (w.cx < 0 || w.cy < 0 || w.cz <= 0) throw UsageError("Heisenberg window needs cx, cy >= 0 and cz > 0");
    return w;
}

HeisWindow window_product(const HeisWindow& a, const HeisWindow& b) {
    return {a.cx + b.cx, a.cy + b.cy, a.cz + b.cz + a.cx * b.cy};
}

HeisScheme HeisScheme::make(const NumberField& field, const HeisWindow& window) {
    if (window.cx < 0 || window.cy < 0 || window.cz <= 0) throw UsageError("Heisenberg window needs cx, cy >= 0 and cz > 0");
    HeisScheme s;
    s.field = field;
    s.window = window;
    s.ambient = cps::CutProjectScheme::galois(field, 3).ambient;
    s.ambient.law = cps::GroupLaw::Heisenberg;
    return s;
}

cps::Ambient HeisScheme::line() const {
    cps::Ambient a = ambient;
    a.law = cps::GroupLaw::Abelian;
    a.dim = 1;
    return a;
}

bool HeisScheme::in_lattice(const cps::Point& p) const {
    return p.size() == 3 && std::all_of(p.begin(), p.end(), [&](const NFElem& c) { return c.field() == field && c.has_integer_coeffs(); });
}

bool HeisScheme::in_window(const cps::Point& p, const HeisWindow& w) const {
    if (!in_lattice(p)) return false;
    const Rational c[3] = {w.cx, w.cy, w.cz};
    for (int i = 0; i < 3; ++i)
        if (compare_abs_to(p[i], c[i], internal()) == AbsComparison::Greater) return false;
    return true;
}

std::string HeisScheme::describe() const { return "heis:" + field.describe() + " window " + window.describe(); }

namespace {

std::vector<NFElem> axis(const HeisScheme& s, const Rational& radius, const Rational& c, const cps::EnumerationOptions& opts) {
    if (c == 0) return {NFElem(s.field)};
    return cps::enumerate_quadratic(s.line(), radius, c, opts);
}

}  // namespace

cps::Patch heis_model_set(const HeisScheme& scheme, const Rational& radius, const cps::EnumerationOptions& opts) {
    if (radius <= 0) throw UsageError("radius must be > 0");
    const auto xs = axis(scheme, radius, scheme.window.cx, opts);
    const auto ys = axis(scheme, radius, scheme.window.cy, opts);
    const auto zs = axis(scheme, radius, scheme.window.cz, opts);
    if (xs.size() * ys.size() * zs.size() > opts.max_candidates) throw ResourceError("Heisenberg patch exceeds the enumeration limit");
    cps::Patch patch{scheme.ambient, radius, scheme.describe(), {}};
    patch.points.reserve(xs.size() * ys.size() * zs.size());
    for (const auto& x : xs)
        for (const auto& y : ys)
            for (const auto& z : zs) patch.points.push_back({x, y, z});
    patch.normalize();
    return patch;
}

cps::Patch symmetrize(const cps::Patch& patch, const HeisScheme& scheme) {
    cps::Patch out{patch.ambient, patch.radius, "symmetrised " + patch.provenance, {}};
    for (const auto& p : patch.points)
        if (scheme.in_window(patch.ambient.inv(p), scheme.window)) out.points.push_back(p);
    return out;
}

// ---------------------------------------------------------------------------
namespace {

cps::IntervalCover axis_cover(const cps::Ambient& line, const Rational& target, const Rational& halfwidth,
                              const cps::IntervalCoverOptions& opts) {
    if (halfwidth == 0) return cps::cover_interval(line, Rational(0), Rational(0), opts);
    return cps::cover_interval(line, target, halfwidth, opts);
}

Rational shear_target(const HeisScheme& scheme, const HeisWindow& product, const NFElem& t1, long bits) {
    return product.cz + abs(eval_embedding(t1, scheme.internal(), bits)).hi * scheme.window.cy;
}

bool axis_cover_ok(const cps::IntervalCover& cover, const cps::Ambient& line, const Rational& target, const Rational& halfwidth) {
    if (cover.halfwidth != halfwidth) return false;
    if (halfwidth == 0) return cover.steps.size() == 1 && cover.steps[0].translate.is_zero();
    return cover.target >= target && cps::replay(cover, line);
}

}  // namespace

HeisCoveringCertificate heis_covering_certificate(const HeisScheme& scheme, const cps::IntervalCoverOptions& opts) {
    const HeisWindow& w = scheme.window;
    HeisCoveringCertificate cert;
    cert.scheme = scheme.describe();
    cert.window = w;
    cert.product = window_product(w, w);
    const auto line = scheme.line();
    cert.x_cover = axis_cover(line, cert.product.cx, w.cx, opts);
    cert.y_cover = axis_cover(line, cert.product.cy, w.cy, opts);
    for (const auto& t1 : cert.x_cover.translates()) {
        Rational target = shear_target(scheme, cert.product, t1, opts.bits);
        cert.z_covers.push_back({t1, target, cps::cover_interval(line, target, w.cz, opts)});
    }
    for (const auto& zc : cert.z_covers)
        for (const auto& t2 : cert.y_cover.translates())
            for (const auto& t3 : zc.cover.translates()) cert.translates.push_back({zc.t1, t2, t3});
    std::sort(cert.translates.begin(), cert.translates.end(), cps::PointLess{});
    return cert;
}

bool replay(const HeisCoveringCertificate& cert, const HeisScheme& scheme) {
    const HeisWindow& w = scheme.window;
    if (!(cert.window == w) || !(cert.product == window_product(w, w))) return false;
    const auto line = scheme.line();
    if (!axis_cover_ok(cert.x_cover, line, cert.product.cx, w.cx)) return false;
    if (!axis_cover_ok(cert.y_cover, line, cert.product.cy, w.cy)) return false;
    const auto t1s = cert.x_cover.translates();
    if (t1s.size() != cert.z_covers.size()) return false;
    std::vector<cps::Point> expected;
    for (std::size_t i = 0; i < t1s.size(); ++i) {
        const auto& zc = cert.z_covers[i];
        if (zc.t1 != t1s[i]) return false;
        if (zc.target < shear_target(scheme, cert.product, zc.t1, zc.cover.bits)) return false;
        if (!axis_cover_ok(zc.cover, line, zc.target, w.cz)) return false;
        for (const auto& t2 : cert.y_cover.translates())
            for (const auto& t3 : zc.cover.translates()) expected.push_back({zc.t1, t2, t3});
    }
    std::sort(expected.begin(), expected.end(), cps::PointLess{});
    if (expected != cert.translates) return false;
    for (const auto& t : cert.translates)
        if (!scheme.in_lattice(t)) return false;

    // Sampled grid of W W: each w has a translate with t^{-1} w in W, exactly.
    const std::size_t n = std::max<std::size_t>(cert.grid_per_axis, 2);
    auto grid = [n](const Rational& c) {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(-c + 2 * c * Rational(static_cast<long>(i), static_cast<long>(n - 1)));
        return v;
    };
    const NumberField& f = scheme.field;
    for (const auto& a : grid(cert.product.cx))
        for (const auto& b : grid(cert.product.cy))
            for (const auto& c : grid(cert.product.cz)) {
                const cps::Point wp{NFElem::from_rational(f, a), NFElem::from_rational(f, b), NFElem::from_rational(f, c)};
                bool ok = false;
                for (const auto& t : cert.translates) {
                    // sigma_2 is a ring map, so sigma_2(t^{-1} w) is decided inside K.
                    const cps::Point r = scheme.ambient.left_quotient(t, wp);
                    const Rational bounds[3] = {w.cx, w.cy, w.cz};
                    bool inside = true;
                    for (int i = 0; i < 3 && inside; ++i)
                        inside = compare_abs_to(r[i], bounds[i], scheme.internal()) != AbsComparison::Greater;
                    if (inside) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) return false;
            }
    return true;
}

// ---------------------------------------------------------------------------
CenterReport center_intersection(const HeisScheme& scheme, const Rational& radius, const cps::EnumerationOptions& opts) {
    const auto lambda = heis_model_set(scheme, radius, opts);
    const auto& amb = lambda.ambient;
    const auto line = scheme.line();
    auto approx = [&](const NFElem& e) { return cps::physical_approx(line, {e})[0]; };

    // z-fibres over each (x, y); equal fibres are interned so that each pair
    // of fibres contributes one sumset.
    std::map<cps::Point, cps::Point, cps::PointLess> fibre_of;
    for (const auto& p : lambda.points) fibre_of[{p[0], p[1]}].push_back(p[2]);
    std::map<cps::Point, std::size_t, cps::PointLess> intern;
    std::map<cps::Point, std::size_t, cps::PointLess> xy_fibre;
    for (const auto& [xy, zs] : fibre_of) xy_fibre[xy] = intern.emplace(zs, intern.size()).first->second;
    std::vector<const cps::Point*> fibres(intern.size());
    for (const auto& [zs, id] : intern) fibres[id] = &zs;

    struct Sum {
        NFElem value;
        double approx;
    };
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Sum>> sumsets;
    auto sumset = [&](std::size_t a, std::size_t b) -> const std::vector<Sum>& {
        auto [it, fresh] = sumsets.try_emplace({a, b});
        if (!fresh) return it->second;
        cps::Point all;
        for (const auto& u : *fibres[a])
            for (const auto& v : *fibres[b]) all.push_back(u + v);
        std::sort(all.begin(), all.end(), [](const NFElem& u, const NFElem& v) { return cps::point_compare({u}, {v}) < 0; });
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (auto& e : all) it->second.push_back({e, approx(e)});
        return it->second;
    };

    // The z-coordinate of (x, y, z)(-x, -y, z') is z + z' plus a term in x, y.
    // Floating values decide membership in the ball away from its boundary;
    // their error is far below the margin.
    const double r = radius.get_d();
    const double margin = 1e-9 * (1 + r);
    std::set<cps::Point, cps::PointLess> values;
    for (const auto& [xy, fid] : xy_fibre) {
        auto it = xy_fibre.find({-xy[0], -xy[1]});
        if (it == xy_fibre.end()) continue;
        NFElem zero(xy[0].field());
        const NFElem shift = amb.mul({xy[0], xy[1], zero}, {-xy[0], -xy[1], zero})[2];
        const double shift_approx = approx(shift);
        for (const auto& s : sumset(fid, it->second)) {
            const double v = std::fabs(s.approx + shift_approx);
            if (v > r + margin) continue;
            cps::Point z{s.value + shift};
            if (v < r - margin || cps::norm_at_most(line, z, radius)) values.insert(std::move(z));
        }
    }
    CenterReport rep;
    rep.center = cps::Patch{line, radius, "Lambda^2 cap Z for " + scheme.describe(), {values.begin(), values.end()}};
    rep.center.normalize();
    if (rep.center.size() < 2) {
        rep.inconclusive = true;
        return rep;
    }
    rep.delone = verify::delone_certify(rep.center, radius / 2);
    return rep;
}

CommutatorReport commutator_map(const HeisPoint& xi, const cps::Patch& patch) {
    if (patch.ambient.law != cps::GroupLaw::Heisenberg) throw UsageError("commutator map needs a Heisenberg patch");
    if (xi.x.field() != patch.ambient.field) throw UsageError("xi and the patch belong to different fields");
    cps::Ambient line = patch.ambient;
    line.law = cps::GroupLaw::Abelian;
    line.dim = 1;
    CommutatorReport rep{xi, cps::Patch{line, patch.radius, "commutator image", {}}, 0, true, true, std::nullopt, std::nullopt};
    auto phi = [&](const HeisPoint& u) {
        NFElem zero(u.x.field());
        return HeisPoint{zero, zero, xi.x * u.y - xi.y * u.x};
    };
    std::vector<HeisPoint> pts;
    std::vector<HeisPoint> images;
    for (const auto& p : patch.points) {
        pts.push_back(from_point(p));
        images.push_back(phi(pts.back()));
        if (!(heis_commutator(xi, pts.back()) == images.back())) rep.formula_matches_law = false;
        cps::Point z{images.back().z};
        if (cps::norm_at_most(line, z, patch.radius)) rep.image.points.push_back(std::move(z));
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            ++rep.pairs_checked;
            if (!(phi(heis_mul(pts[i], pts[j])) == heis_mul(images[i], images[j]))) rep.homomorphism = false;
        }
    rep.image.normalize();
    if (rep.image.size() >= 2) {
        rep.min_gap = verify::min_separation(rep.image);
        rep.covering = verify::covering_radius(rep.image, patch.radius / 2);
    }
    return rep;
}

// ---------------------------------------------------------------------------
namespace {

struct Subgroup {
    const char* name;
    std::vector<int> axes;
};

const std::vector<Subgroup>& coordinate_subgroups() {
    static const std::vector<Subgroup> list{{"e", {}},        {"X", {0}},       {"Y", {1}},         {"Z", {2}},
                                            {"XZ", {0, 2}},   {"YZ", {1, 2}},   {"H", {0, 1, 2}}};
    return list;
}

// Upper bound of the two-sided distance between the patch and the subgroup
// U', measured on the inner ball of half the patch radius.
Rational kappa(const cps::Patch& patch, const std::vector<int>& axes, const Rational& mesh) {
    Rational out(0);
    std::vector<std::vector<Interval>> enclosures;
    std::vector<std::vector<double>> approx;
    for (const auto& p : patch.points) {
        enclosures.push_back(cps::physical_intervals(patch.ambient, p));
        std::vector<double> a;
        for (const auto& iv : enclosures.back()) a.push_back(iv.approx());
        approx.push_back(std::move(a));
        for (int i = 0; i < 3; ++i)
            if (std::find(axes.begin(), axes.end(), i) == axes.end()) out = std::max(out, enclosures.back()[i].magnitude());
    }
    if (patch.points.empty()) return out;
    verify::NearestSearch search(approx);
    const Rational inner = patch.radius / 2;
    const Integer steps = floor_of(inner / mesh);
    std::vector<Rational> ticks;
    for (Integer k = -steps; k <= steps; ++k) ticks.push_back(Rational(k) * mesh);
    verify::Grid grid{3, axes, ticks};
    Rational worst = axes.empty() ? Rational(0) : verify::grid_distance(grid, search, enclosures).worst;
    if (!axes.empty()) worst += mesh / 2;
    return std::max(out, worst);
}

}  // namespace

HullReport schreiber_hull(const cps::Patch& small, const cps::Patch& large) {
    if (small.ambient.dim != 3 || large.ambient.dim != 3) throw UsageError("Schreiber hull needs Heisenberg patches");
    if (large.radius < 2 * small.radius) throw UsageError("the large patch radius must be at least twice the small one");
    HullReport rep;
    rep.mesh = small.radius / 48;
    for (const auto& s : coordinate_subgroups()) {
        HullCandidate c{s.name, s.axes, kappa(small, s.axes, rep.mesh), kappa(large, s.axes, rep.mesh), false};
        c.stable = 10 * c.kappa_large <= 11 * c.kappa_small;
        if (c.stable && !rep.hull) rep.hull = c.name;
        rep.candidates.push_back(std::move(c));
    }
    return rep;
}

verify::CommensurabilityReport meyer_commensurability(const cps::Patch& a, const cps::Patch& b, std::optional<Rational> translate_bound) {
    if (a.ambient.law != b.ambient.law || a.ambient.dim != b.ambient.dim || a.ambient.field != b.ambient.field)
        throw UsageError("patches live in different ambient groups");
    return verify::commensurability(a, b, translate_bound);
}

}  // namespace meyerlab::heis
