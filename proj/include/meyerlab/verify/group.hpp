#pragma once

#include "meyerlab/cps/patch.hpp"

#include <concepts>
#include <string>

namespace meyerlab::verify {

// What the combinatorial cover algorithms need from a group.
template <class G>
concept CoverGroup = requires(const G& g, const typename G::Element& a, const Rational& bound) {
    { g.identity() } -> std::convertible_to<typename G::Element>;
    { g.mul(a, a) } -> std::convertible_to<typename G::Element>;
    { g.inv(a) } -> std::convertible_to<typename G::Element>;
    { g.less(a, a) } -> std::convertible_to<bool>;
    { g.approx_norm(a) } -> std::convertible_to<double>;
    { g.norm_at_most(a, bound) } -> std::convertible_to<bool>;
    { g.format(a) } -> std::convertible_to<std::string>;
};

// Points of a patch ambient (abelian K^n or Heisenberg) with the physical
// sup-norm.
struct PatchGroup {
    using Element = cps::Point;
    cps::Ambient ambient;

    Element identity() const { return ambient.identity(); }
    Element mul(const Element& a, const Element& b) const { return ambient.mul(a, b); }
    Element inv(const Element& a) const { return ambient.inv(a); }
    bool less(const Element& a, const Element& b) const { return cps::point_compare(a, b) < 0; }
    double approx_norm(const Element& a) const;
    bool norm_at_most(const Element& a, const Rational& bound) const { return cps::norm_at_most(ambient, a, bound); }
    std::string format(const Element& a) const;
};

// Z/NZ with the distance to 0 as norm.
struct CyclicGroup {
    using Element = long;
    long modulus = 1;

    Element identity() const { return 0; }
    Element mul(Element a, Element b) const { return ((a + b) % modulus + modulus) % modulus; }
    Element inv(Element a) const { return (modulus - a % modulus) % modulus; }
    bool less(Element a, Element b) const { return a < b; }
    double approx_norm(Element a) const { return static_cast<double>(std::min(a, modulus - a)); }
    bool norm_at_most(Element a, const Rational& bound) const { return Rational(std::min(a, modulus - a)) <= bound; }
    std::string format(Element a) const { return std::to_string(a); }
};

static_assert(CoverGroup<PatchGroup>);
static_assert(CoverGroup<CyclicGroup>);

}  // namespace meyerlab::verify
