#include "meyerlab/cps/patch.hpp"

#include "meyerlab/errors.hpp"

#include <algorithm>

namespace meyerlab::cps {

const char* to_string(GroupLaw law) { return law == GroupLaw::Abelian ? "abelian" : "heisenberg"; }

GroupLaw parse_group_law(const std::string& s) {
    if (s == "abelian") return GroupLaw::Abelian;
    if (s == "heisenberg") return GroupLaw::Heisenberg;
    throw UsageError("unknown group law '" + s + "'");
}

Point Ambient::identity() const { return Point(dim, NFElem(field)); }

Point Ambient::mul(const Point& a, const Point& b) const {
    Point r(dim, NFElem(field));
    for (std::size_t i = 0; i < dim; ++i) r[i] = a[i] + b[i];
    if (law == GroupLaw::Heisenberg) r[2] += a[0] * b[1];
    return r;
}

Point Ambient::inv(const Point& a) const {
    Point r(dim, NFElem(field));
    for (std::size_t i = 0; i < dim; ++i) r[i] = -a[i];
    if (law == GroupLaw::Heisenberg) r[2] += a[0] * a[1];
    return r;
}

Ambient rational_ambient(std::size_t dim) {
    auto q = NumberField::rationals();
    return Ambient{q, real_place(q, 0), std::nullopt, GroupLaw::Abelian, dim};
}

int point_compare(const Point& a, const Point& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = lex_compare(a[i], b[i]);
        if (c != 0) return c;
    }
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

void Patch::normalize() {
    std::sort(points.begin(), points.end(), PointLess{});
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool Patch::contains(const Point& p) const { return std::binary_search(points.begin(), points.end(), p, PointLess{}); }

std::vector<Interval> physical_intervals(const Ambient& ambient, const Point& p, long bits) {
    std::vector<Interval> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(eval_embedding(c, ambient.physical, bits));
    return out;
}

std::vector<double> physical_approx(const Ambient& ambient, const Point& p) {
    std::vector<double> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(eval_embedding(c, ambient.physical, 64).approx());
    return out;
}

Rational norm_upper(const Ambient& ambient, const Point& p, long bits) {
    Rational m(0);
    for (const auto& c : p) m = std::max(m, eval_embedding(c, ambient.physical, bits).magnitude());
    return m;
}

Rational norm_lower(const Ambient& ambient, const Point& p, long bits) {
    Rational m(0);
    for (const auto& c : p) m = std::max(m, eval_embedding(c, ambient.physical, bits).mignitude());
    return m;
}

bool norm_at_most(const Ambient& ambient, const Point& p, const Rational& bound, long max_precision) {
    for (const auto& c : p)
        if (compare_abs_to(c, bound, ambient.physical, max_precision) == AbsComparison::Greater) return false;
    return true;
}

Interval sup_distance(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    Interval d = Interval::point(Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        Interval di = abs(a[i] - b[i]);
        d = {std::max(d.lo, di.lo), std::max(d.hi, di.hi)};
    }
    return d;
}

}  // namespace meyerlab::cps
