#pragma once

#include "meyerlab/cps/scheme.hpp"
#include "meyerlab/verify/commensurability.hpp"
#include "meyerlab/verify/delone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace meyerlab::cps {

// A subspace N of the physical space K^n given by spanning vectors.
struct SubgroupSpec {
    std::vector<Point> basis;
};

// "zero", "all", "axes:0,2" or "basis:1,0;0,1" (entries in element syntax).
SubgroupSpec parse_subgroup(const std::string& text, const CutProjectScheme& scheme);

// Axes spanning N. Throws Unsupported unless the span is a coordinate subspace
// (decided exactly by row reduction over K).
std::vector<std::size_t> aligned_axes(const CutProjectScheme& scheme, const SubgroupSpec& spec);

// Scheme on the coordinate subspace picked out by `axes` and the restricted window.
CutProjectScheme restrict_scheme(const CutProjectScheme& scheme, std::size_t axes);
Window restrict_window(const Window& window, const std::vector<std::size_t>& axes);
Point select_axes(const Point& p, const std::vector<std::size_t>& axes);

struct IntersectionReport {
    std::vector<std::size_t> axes;
    bool trivial = false;  // N = {0}
    std::optional<CutProjectScheme> induced;
    Window induced_window;
    Patch intersection;    // (Lambda + Lambda) cap N cap B_R, in N-coordinates
    Patch induced_patch;   // model set of the induced scheme, same radius
    std::optional<verify::CommensurabilityReport> comparison;
    std::optional<verify::DeloneReport> delone;
};

IntersectionReport intersect_with_subgroup(const CutProjectScheme& scheme, const Window& window, const SubgroupSpec& spec,
                                           const Rational& radius, const EnumerationOptions& opts = {});

struct ProjectionReport {
    std::vector<std::size_t> quotient_axes;
    Patch projected;        // p(Lambda cap B_R)
    Patch projected_large;  // p(Lambda cap B_2R)
    std::optional<verify::ExactDistance> separation;
    std::optional<verify::ExactDistance> separation_large;
    // Positive separation at R and 2R, not collapsing by more than half.
    bool uniformly_discrete = false;
    bool intersection_delone = false;
    bool equivalence_consistent = false;
};

ProjectionReport project_to_quotient(const CutProjectScheme& scheme, const Window& window, const SubgroupSpec& spec,
                                     const Rational& radius, const EnumerationOptions& opts = {});

}  // namespace meyerlab::cps
