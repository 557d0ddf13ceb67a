#pragma once

#include "meyerlab/exactnum/embedding.hpp"
#include "meyerlab/exactnum/number_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace meyerlab::cps {

// Group structure on K^dim: coordinatewise addition, or the 3-dimensional
// Heisenberg law (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y').
enum class GroupLaw { Abelian, Heisenberg };

const char* to_string(GroupLaw law);
GroupLaw parse_group_law(const std::string& s);

// A lattice element. The coordinates are the exact preimage in K^dim; the
// physical coordinate is sigma_phys applied coordinatewise.
using Point = std::vector<NFElem>;

// Where the points of a patch live.
struct Ambient {
    NumberField field = NumberField::rationals();
    RealEmbedding physical = real_place(NumberField::rationals(), 0);
    std::optional<RealEmbedding> internal;  // real internal place, if any
    GroupLaw law = GroupLaw::Abelian;
    std::size_t dim = 1;

    Point identity() const;
    Point mul(const Point& a, const Point& b) const;
    Point inv(const Point& a) const;
    // f^{-1} a, the quantity every covering check looks at.
    Point left_quotient(const Point& f, const Point& a) const { return mul(inv(f), a); }
};

Ambient rational_ambient(std::size_t dim = 1);

// Lexicographic on coordinates, then on power-basis coefficients.
int point_compare(const Point& a, const Point& b);
struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return point_compare(a, b) < 0; }
};

// Finite fragment of a point set, physical sup-norm <= radius, in canonical order.
struct Patch {
    Ambient ambient;
    Rational radius;
    std::string provenance;
    std::vector<Point> points;

    std::size_t size() const { return points.size(); }
    // Sorts canonically and removes duplicates.
    void normalize();
    bool contains(const Point& p) const;
};

// Physical coordinates of one point as rational enclosures.
std::vector<Interval> physical_intervals(const Ambient& ambient, const Point& p, long bits = 96);
std::vector<double> physical_approx(const Ambient& ambient, const Point& p);

// Certified upper / lower bound of the sup-norm of the physical coordinates.
Rational norm_upper(const Ambient& ambient, const Point& p, long bits = 96);
Rational norm_lower(const Ambient& ambient, const Point& p, long bits = 96);
// Exact test: sup_i |sigma(p_i)| <= bound.
bool norm_at_most(const Ambient& ambient, const Point& p, const Rational& bound,
                  long max_precision = kDefaultMaxPrecision);

// Sup-norm distance of physical coordinates (bi-Lipschitz proxy for the
// Heisenberg group, measured in coordinates).
Interval sup_distance(const std::vector<Interval>& a, const std::vector<Interval>& b);

}  // namespace meyerlab::cps
