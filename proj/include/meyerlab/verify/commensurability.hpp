#pragma once

#include "meyerlab/cps/patch.hpp"
#include "meyerlab/verify/cover.hpp"

#include <optional>

namespace meyerlab::verify {

enum class Verdict { CommensurableAtScale, NotCommensurableAtScale };
const char* to_string(Verdict v);

// Two-way patch-scope covers A_in subset F_1 B and B_in subset F_2 A. A_in and
// B_in are the points within min(R_A, R_B) - M of the identity, where M bounds
// the translate norms; with |f| <= M every needed residual lies inside the
// comparison patch, so truncation cannot cause a false negative.
struct CommensurabilityReport {
    Rational translate_bound;
    Rational inner_radius;
    std::vector<cps::Point> a_inner;
    std::vector<cps::Point> b_inner;
    PatchCover<cps::Point> a_in_b;
    PatchCover<cps::Point> b_in_a;
    Verdict verdict = Verdict::CommensurableAtScale;
    std::optional<cps::Point> witness;
};

// Default M is a quarter of the smaller patch radius.
CommensurabilityReport commensurability(const cps::Patch& a, const cps::Patch& b,
                                        std::optional<Rational> translate_bound = std::nullopt);

// Points of the patch with sup-norm <= radius (exact).
std::vector<cps::Point> inner_points(const cps::Patch& patch, const Rational& radius);

bool replay(const CommensurabilityReport& report, const cps::Patch& a, const cps::Patch& b);

}  // namespace meyerlab::verify
