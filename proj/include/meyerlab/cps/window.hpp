#pragma once

#include "meyerlab/exactnum/rational.hpp"

#include <string>
#include <vector>

namespace meyerlab::cps {

// p^{-level} Z_p, i.e. { x : v_p(x) >= -level }.
struct PadicBall {
    Integer prime;
    long level = 0;
    bool operator==(const PadicBall&) const = default;
};

// Closed symmetric window: a box prod [-c_i, c_i] in the real internal
// coordinates times a product of p-adic balls.
struct Window {
    std::vector<Rational> real_boxes;
    std::vector<PadicBall> padic_balls;

    // Throws UsageError unless every half-width is > 0 and primes are prime
    // and distinct.
    void validate() const;
    // Componentwise inclusion; shapes must match.
    bool subset_of(const Window& other) const;
    std::string describe() const;
    bool operator==(const Window&) const = default;
};

// W1 + W2 for abelian internal spaces.
Window window_product(const Window& a, const Window& b);

// "box:1,1/2" or "z2:0,z3:1" (also "box:1;z2:0").
Window parse_window(const std::string& text);

}  // namespace meyerlab::cps
