#pragma once

#include "meyerlab/cps/interval_cover.hpp"
#include "meyerlab/cps/scheme.hpp"
#include "meyerlab/verify/delone.hpp"

#include <vector>

namespace meyerlab::cps {

// Lambda(W1) subset F + Lambda(W2) for the whole model set, witnessed in the
// internal space: W1 subset union (t* + W2) over the internal images t* of the
// Gamma-points t in F.
struct GlobalCoveringCertificate {
    std::string scheme;
    Window outer;  // W1
    Window inner;  // W2
    bool trivial = false;  // W1 subset W2, F = {0}
    // GALOIS: one 1D cover per real internal coordinate; F is their product.
    std::vector<IntervalCover> real_covers;
    // ZS: F = { j * coset_step : 0 <= j < coset_count }, one per coset of W2 in W1.
    Rational coset_step{0};
    std::size_t coset_count = 0;
    std::vector<Point> translates;
};

struct GlobalCoverOptions {
    IntervalCoverOptions interval;
};

GlobalCoveringCertificate global_covering_certificate(const CutProjectScheme& scheme, const Window& outer, const Window& inner,
                                                      const GlobalCoverOptions& opts = {});

// Re-verifies every containment from the recorded data alone.
bool replay(const GlobalCoveringCertificate& cert, const CutProjectScheme& scheme);

// Lambda(W) + Lambda(W) subset Lambda(W + W) subset F + Lambda(W), plus Delone
// constants of the patch at `patch_radius` (inner ball of half that radius).
struct ApproximateLatticeCertificate {
    Window window;
    Window doubled;
    GlobalCoveringCertificate cover;
    Rational patch_radius;
    verify::DeloneReport delone;
};

ApproximateLatticeCertificate approximate_lattice_certificate(const CutProjectScheme& scheme, const Window& window,
                                                              const Rational& patch_radius = Rational(50),
                                                              const EnumerationOptions& enumeration = {},
                                                              const GlobalCoverOptions& opts = {});

bool replay(const ApproximateLatticeCertificate& cert, const CutProjectScheme& scheme);

}  // namespace meyerlab::cps
