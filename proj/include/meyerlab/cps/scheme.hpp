#pragma once

#include "meyerlab/cps/patch.hpp"
#include "meyerlab/cps/window.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace meyerlab::cps {

enum class SchemeKind { Galois, ZS };

// (G, H, Gamma). GALOIS: K real quadratic, Gamma = Z[theta]^n embedded by
// (sigma_phys, sigma_int). ZS: Gamma = Z[1/(p_1...p_m)] diagonal in
// R x prod Q_{p_i}.
struct CutProjectScheme {
    SchemeKind kind = SchemeKind::ZS;
    NumberField field = NumberField::rationals();
    std::size_t dim = 1;
    std::vector<Integer> primes;
    Ambient ambient = rational_ambient();

    static CutProjectScheme galois(const NumberField& field, std::size_t dim);
    static CutProjectScheme zs(std::vector<Integer> primes);

    // "galois:<c0>,<c1>,1:<n>" or "zs:<p>,<q>".
    std::string describe() const;
    const RealEmbedding& internal() const { return *ambient.internal; }

    // Throws UsageError if the window does not fit this scheme's internal space.
    void check_window(const Window& w) const;
    bool in_lattice(const Point& p) const;
    // Exact: p in Gamma and its internal image in W.
    bool in_window(const Point& p, const Window& w, long max_precision = kDefaultMaxPrecision) const;
};

// "golden", "sqrt2", "sqrt5", "rationals" or minimal-polynomial coefficients
// "c0,c1,...,1".
NumberField parse_field_spec(const std::string& name);

// Accepts "zs:2,3", "galois:golden[:n]", "galois:sqrt2[:n]", "galois:sqrt5[:n]"
// and "galois:c0,c1,1[:n]".
CutProjectScheme parse_scheme(const std::string& text);

struct EnumerationOptions {
    unsigned threads = 1;
    std::size_t max_candidates = 50'000'000;
};

// All x in Z[theta] with |sigma_phys(x)| <= radius and |sigma_int(x)| <= c,
// found by scanning the exact coefficient parallelogram's bounding box and
// filtering exactly. Canonical order.
std::vector<NFElem> enumerate_quadratic(const Ambient& ambient, const Rational& radius, const Rational& c,
                                        const EnumerationOptions& opts = {});

// Complete patch Lambda(W) cap B_R.
Patch model_set_patch(const CutProjectScheme& scheme, const Window& window, const Rational& radius,
                      const EnumerationOptions& opts = {});

}  // namespace meyerlab::cps
