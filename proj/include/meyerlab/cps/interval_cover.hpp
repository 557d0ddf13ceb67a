#pragma once

#include "meyerlab/cps/patch.hpp"

#include <vector>

namespace meyerlab::cps {

// One greedy step: translate t (a lattice point, optionally shifted by a fixed
// offset), the recorded enclosure of sigma_int(t), and the right end of the
// region certified covered after this step.
struct CoverStep {
    NFElem translate;
    Interval conjugate;
    Rational reach;
};

// Certificate that [-target, target] is covered by the closed intervals
// sigma_int(t) + [-halfwidth, halfwidth] over the listed translates.
struct IntervalCover {
    Rational target;
    Rational halfwidth;
    long bits = 64;
    std::vector<CoverStep> steps;

    std::vector<NFElem> translates() const;
};

struct IntervalCoverOptions {
    Rational initial_search_radius{4};
    Rational max_search_radius{4096};
    long bits = 64;
    unsigned threads = 1;
};

// Greedy left-to-right cover. Candidates are offset + x for x in Z[theta] with
// |sigma_phys(x)| <= search radius; the radius doubles whenever the greedy
// stalls. Throws ResourceError (with the covered frontier) when the cap is hit.
IntervalCover cover_interval(const Ambient& ambient, const Rational& target, const Rational& halfwidth,
                             const NFElem& offset, const IntervalCoverOptions& opts = {});
IntervalCover cover_interval(const Ambient& ambient, const Rational& target, const Rational& halfwidth,
                             const IntervalCoverOptions& opts = {});

// Re-derives every enclosure from the translates and checks the chain of
// closed intervals leaves no gap in [-target, target].
bool replay(const IntervalCover& cover, const Ambient& ambient);

}  // namespace meyerlab::cps
