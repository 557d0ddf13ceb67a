#include "meyerlab/verify/commensurability.hpp"

#include "meyerlab/errors.hpp"

#include <algorithm>

namespace meyerlab::verify {

const char* to_string(Verdict v) {
    return v == Verdict::CommensurableAtScale ? "COMMENSURABLE-AT-SCALE" : "NOT-COMMENSURABLE-AT-SCALE";
}

std::vector<cps::Point> inner_points(const cps::Patch& patch, const Rational& radius) {
    std::vector<cps::Point> out;
    for (const auto& p : patch.points)
        if (cps::norm_at_most(patch.ambient, p, radius)) out.push_back(p);
    return out;
}

CommensurabilityReport commensurability(const cps::Patch& a, const cps::Patch& b, std::optional<Rational> translate_bound) {
    if (a.ambient.field != b.ambient.field || a.ambient.law != b.ambient.law || a.ambient.dim != b.ambient.dim)
        throw UsageError("commensurability needs patches in the same ambient group");
    const Rational r = std::min(a.radius, b.radius);
    CommensurabilityReport rep;
    rep.translate_bound = translate_bound.value_or(r / 4);
    rep.inner_radius = r - rep.translate_bound;
    if (rep.inner_radius <= 0) throw UsageError("translate bound leaves an empty inner ball");
    rep.a_inner = inner_points(a, rep.inner_radius);
    rep.b_inner = inner_points(b, rep.inner_radius);

    PatchGroup g{a.ambient};
    GreedyOptions opts{rep.translate_bound};
    rep.a_in_b = greedy_cover(g, rep.a_inner, b.points, opts);
    rep.b_in_a = greedy_cover(g, rep.b_inner, a.points, opts);
    if (!rep.a_in_b.feasible) {
        rep.verdict = Verdict::NotCommensurableAtScale;
        rep.witness = rep.a_in_b.witness;
    } else if (!rep.b_in_a.feasible) {
        rep.verdict = Verdict::NotCommensurableAtScale;
        rep.witness = rep.b_in_a.witness;
    }
    return rep;
}

bool replay(const CommensurabilityReport& report, const cps::Patch& a, const cps::Patch& b) {
    if (report.verdict != Verdict::CommensurableAtScale) return false;
    PatchGroup g{a.ambient};
    if (inner_points(a, report.inner_radius) != report.a_inner) return false;
    if (inner_points(b, report.inner_radius) != report.b_inner) return false;
    auto short_enough = [&](const PatchCover<cps::Point>& c) {
        return std::all_of(c.translates.begin(), c.translates.end(),
                           [&](const cps::Point& f) { return g.norm_at_most(f, report.translate_bound); });
    };
    return replay_cover(g, report.a_inner, b.points, report.a_in_b) && replay_cover(g, report.b_inner, a.points, report.b_in_a) &&
           short_enough(report.a_in_b) && short_enough(report.b_in_a);
}

}  // namespace meyerlab::verify
