#include "meyerlab/cps/subgroup.hpp"

#include "meyerlab/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace meyerlab::cps {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

Point unit_vector(const CutProjectScheme& scheme, std::size_t axis) {
    Point p = scheme.ambient.identity();
    p[axis] = NFElem::from_rational(scheme.field, Rational(1));
    return p;
}

}  // namespace

SubgroupSpec parse_subgroup(const std::string& text, const CutProjectScheme& scheme) {
    SubgroupSpec spec;
    if (text == "zero") return spec;
    if (text == "all") {
        for (std::size_t i = 0; i < scheme.dim; ++i) spec.basis.push_back(unit_vector(scheme, i));
        return spec;
    }
    if (text.rfind("axes:", 0) == 0) {
        for (const auto& a : split(text.substr(5), ',')) {
            std::size_t axis = 0;
            try {
                axis = std::stoul(a);
            } catch (const std::exception&) {
                throw UsageError("malformed axis '" + a + "'");
            }
            if (axis >= scheme.dim) throw UsageError("axis " + a + " out of range");
            spec.basis.push_back(unit_vector(scheme, axis));
        }
        return spec;
    }
    if (text.rfind("basis:", 0) == 0) {
        for (const auto& v : split(text.substr(6), ';')) {
            Point p;
            for (const auto& e : split(v, ',')) p.push_back(parse_element(scheme.field, e));
            if (p.size() != scheme.dim) throw UsageError("basis vector '" + v + "' has the wrong length");
            spec.basis.push_back(std::move(p));
        }
        return spec;
    }
    throw UsageError("malformed subgroup '" + text + "' (zero | all | axes:i,j | basis:v;w)");
}

std::vector<std::size_t> aligned_axes(const CutProjectScheme& scheme, const SubgroupSpec& spec) {
    // Reduced row echelon form over K; the span is a coordinate subspace iff
    // every nonzero row is a unit vector.
    std::vector<Point> rows = spec.basis;
    for (const auto& r : rows)
        if (r.size() != scheme.dim) throw UsageError("subgroup basis vector has the wrong length");
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < scheme.dim && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const NFElem inv = rows[rank][col].inverse();
        for (auto& x : rows[rank]) x = x * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const NFElem f = rows[r][col];
            for (std::size_t c = 0; c < scheme.dim; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < scheme.dim; ++c)
            if (c != pivots[r] && !rows[r][c].is_zero())
                throw Unsupported("subgroup is not spanned by coordinate axes; only coordinate-aligned subgroups are handled");
    if (scheme.kind == SchemeKind::ZS && !pivots.empty() && pivots.size() != scheme.dim)
        throw Unsupported("ZS schemes support only N = 0 or N = G");
    return pivots;
}

CutProjectScheme restrict_scheme(const CutProjectScheme& scheme, std::size_t axes) {
    if (scheme.kind == SchemeKind::ZS) return scheme;
    return CutProjectScheme::galois(scheme.field, axes);
}

Window restrict_window(const Window& window, const std::vector<std::size_t>& axes) {
    if (window.real_boxes.empty()) return window;
    Window w;
    for (auto a : axes) w.real_boxes.push_back(window.real_boxes[a]);
    return w;
}

Point select_axes(const Point& p, const std::vector<std::size_t>& axes) {
    Point q;
    for (auto a : axes) q.push_back(p[a]);
    return q;
}

IntersectionReport intersect_with_subgroup(const CutProjectScheme& scheme, const Window& window, const SubgroupSpec& spec,
                                           const Rational& radius, const EnumerationOptions& opts) {
    scheme.check_window(window);
    IntersectionReport rep;
    rep.axes = aligned_axes(scheme, spec);
    if (rep.axes.empty()) {
        rep.trivial = true;
        Ambient zero = scheme.ambient;
        zero.dim = 0;
        rep.intersection = Patch{zero, radius, "N = {0}", {Point{}}};
        rep.induced_patch = rep.intersection;
        return rep;
    }
    std::vector<std::size_t> off;
    for (std::size_t i = 0; i < scheme.dim; ++i)
        if (std::find(rep.axes.begin(), rep.axes.end(), i) == rep.axes.end()) off.push_back(i);

    const Patch lambda = model_set_patch(scheme, window, radius, opts);
    rep.induced = restrict_scheme(scheme, rep.axes.size());
    rep.induced_window = restrict_window(window, rep.axes);

    // Sums p + q with vanishing off-axis coordinates: group by off-axis part.
    std::map<Point, std::vector<std::size_t>, PointLess> by_off;
    for (std::size_t i = 0; i < lambda.points.size(); ++i) by_off[select_axes(lambda.points[i], off)].push_back(i);
    rep.intersection = Patch{rep.induced->ambient, radius, "(Lambda+Lambda) cap N", {}};
    for (std::size_t i = 0; i < lambda.points.size(); ++i) {
        Point neg_off = select_axes(lambda.ambient.inv(lambda.points[i]), off);
        auto it = by_off.find(neg_off);
        if (it == by_off.end()) continue;
        for (std::size_t j : it->second) {
            Point s = select_axes(lambda.ambient.mul(lambda.points[i], lambda.points[j]), rep.axes);
            if (norm_at_most(rep.induced->ambient, s, radius)) rep.intersection.points.push_back(std::move(s));
        }
    }
    rep.intersection.normalize();
    rep.induced_patch = model_set_patch(*rep.induced, rep.induced_window, radius, opts);
    rep.comparison = verify::commensurability(rep.intersection, rep.induced_patch);
    rep.delone = verify::delone_certify(rep.intersection, radius / 2);
    return rep;
}

namespace {

Patch project(const Patch& lambda, const std::vector<std::size_t>& axes, const Ambient& target) {
    Patch out{target, lambda.radius, "projection of " + lambda.provenance, {}};
    for (const auto& p : lambda.points) out.points.push_back(select_axes(p, axes));
    out.normalize();
    return out;
}

}  // namespace

ProjectionReport project_to_quotient(const CutProjectScheme& scheme, const Window& window, const SubgroupSpec& spec,
                                     const Rational& radius, const EnumerationOptions& opts) {
    scheme.check_window(window);
    const auto axes = aligned_axes(scheme, spec);
    ProjectionReport rep;
    for (std::size_t i = 0; i < scheme.dim; ++i)
        if (std::find(axes.begin(), axes.end(), i) == axes.end()) rep.quotient_axes.push_back(i);

    const IntersectionReport inter = intersect_with_subgroup(scheme, window, spec, radius, opts);
    rep.intersection_delone = inter.trivial || (inter.delone && inter.delone->delone());

    if (rep.quotient_axes.empty()) {
        // G/N trivial: the projection is a single point.
        Ambient zero = scheme.ambient;
        zero.dim = 0;
        rep.projected = Patch{zero, radius, "G/N = 0", {Point{}}};
        rep.projected_large = Patch{zero, 2 * radius, "G/N = 0", {Point{}}};
        rep.uniformly_discrete = true;
    } else {
        const Ambient target = restrict_scheme(scheme, rep.quotient_axes.size()).ambient;
        rep.projected = project(model_set_patch(scheme, window, radius, opts), rep.quotient_axes, target);
        rep.projected_large = project(model_set_patch(scheme, window, 2 * radius, opts), rep.quotient_axes, target);
        if (rep.projected.size() >= 2 && rep.projected_large.size() >= 2) {
            rep.separation = verify::min_separation(rep.projected);
            rep.separation_large = verify::min_separation(rep.projected_large);
            rep.uniformly_discrete = rep.separation_large->enclosure.lo > 0 &&
                                     2 * rep.separation_large->enclosure.hi >= rep.separation->enclosure.lo;
        }
    }
    rep.equivalence_consistent = rep.uniformly_discrete == rep.intersection_delone;
    return rep;
}

}  // namespace meyerlab::cps
