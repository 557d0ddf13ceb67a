#pragma once

#include "meyerlab/cps/interval_cover.hpp"
#include "meyerlab/cps/patch.hpp"
#include "meyerlab/cps/scheme.hpp"
#include "meyerlab/verify/commensurability.hpp"
#include "meyerlab/verify/delone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace meyerlab::heis {

// (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy').
struct HeisPoint {
    NFElem x, y, z;
    bool operator==(const HeisPoint& o) const { return x == o.x && y == o.y && z == o.z; }
};

HeisPoint heis_identity(const NumberField& field);
HeisPoint heis_mul(const HeisPoint& p, const HeisPoint& q);
HeisPoint heis_inv(const HeisPoint& p);
// p q p^{-1} q^{-1}.
HeisPoint heis_commutator(const HeisPoint& p, const HeisPoint& q);
bool is_central(const HeisPoint& p);
HeisPoint from_point(const cps::Point& p);
cps::Point to_point(const HeisPoint& p);
std::string to_string(const HeisPoint& p);

// Lie algebra with [(a,b,c),(a',b',c')] = (0, 0, ab' - a'b).
struct HeisAlgebraElem {
    NFElem a, b, c;
    bool operator==(const HeisAlgebraElem& o) const { return a == o.a && b == o.b && c == o.c; }
};

HeisAlgebraElem operator+(const HeisAlgebraElem& u, const HeisAlgebraElem& v);
HeisAlgebraElem operator-(const HeisAlgebraElem& u);
HeisAlgebraElem operator*(const Rational& s, const HeisAlgebraElem& u);
HeisAlgebraElem bracket(const HeisAlgebraElem& u, const HeisAlgebraElem& v);
// exp(a,b,c) = (a, b, c + ab/2); log is its inverse.
HeisPoint heis_exp(const HeisAlgebraElem& v);
HeisAlgebraElem heis_log(const HeisPoint& p);
// u + v + [u,v]/2, so that exp(bch2(u,v)) = exp(u) exp(v).
HeisAlgebraElem bch2(const HeisAlgebraElem& u, const HeisAlgebraElem& v);

// Box [-cx,cx] x [-cy,cy] x [-cz,cz] in internal coordinates.
struct HeisWindow {
    Rational cx, cy, cz;
    bool operator==(const HeisWindow&) const = default;
    std::string describe() const;
};

// "cx,cy,cz". cx and cy may be 0 (central window); cz must be > 0.
HeisWindow parse_heis_window(const std::string& text);
// W1 W2 under the group law: (cx1+cx2, cy1+cy2, cz1+cz2+cx1 cy2).
HeisWindow window_product(const HeisWindow& a, const HeisWindow& b);

// Gamma = H3(Z[theta]) in H3(R) x H3(R) through (sigma_1, sigma_2)
// coordinatewise. sigma_1 is the larger real root.
struct HeisScheme {
    NumberField field = NumberField::sqrt2();
    HeisWindow window{Rational(1), Rational(1), Rational(2)};
    cps::Ambient ambient;

    static HeisScheme make(const NumberField& field, const HeisWindow& window);
    const RealEmbedding& internal() const { return *ambient.internal; }
    // Abelian 1D ambient of the same field (for covers and central patches).
    cps::Ambient line() const;
    bool in_lattice(const cps::Point& p) const;
    // Exact: p in Gamma and sigma_2(p) in the window w.
    bool in_window(const cps::Point& p, const HeisWindow& w) const;
    std::string describe() const;
};

cps::Patch heis_model_set(const HeisScheme& scheme, const Rational& radius, const cps::EnumerationOptions& opts = {});
// Lambda cap Lambda^{-1}: patch points whose inverse also satisfies the window.
cps::Patch symmetrize(const cps::Patch& patch, const HeisScheme& scheme);

struct ZCover {
    NFElem t1;
    Rational target;
    cps::IntervalCover cover;
};

// Lambda(W) Lambda(W) subset F Lambda(W): W W is covered by sigma_2(t) W.
// t1 and t2 come from 1D covers of [-2cx,2cx] and [-2cy,2cy]; for each t1 the
// z-interval is widened by |sigma_2(t1)| cy to absorb the shear t1 (w2 - t2).
struct HeisCoveringCertificate {
    std::string scheme;
    HeisWindow window;
    HeisWindow product;
    cps::IntervalCover x_cover;
    cps::IntervalCover y_cover;
    std::vector<ZCover> z_covers;
    std::vector<cps::Point> translates;
    std::size_t grid_per_axis = 5;
};

HeisCoveringCertificate heis_covering_certificate(const HeisScheme& scheme, const cps::IntervalCoverOptions& opts = {});
bool replay(const HeisCoveringCertificate& cert, const HeisScheme& scheme);

struct CenterReport {
    cps::Patch center;  // z-coordinates of Lambda^2 cap Z, |z| <= R
    std::optional<verify::DeloneReport> delone;
    bool inconclusive = false;
};

CenterReport center_intersection(const HeisScheme& scheme, const Rational& radius, const cps::EnumerationOptions& opts = {});

struct CommutatorReport {
    HeisPoint xi;
    cps::Patch image;  // central z-values within the patch radius
    std::size_t pairs_checked = 0;
    bool homomorphism = true;
    bool formula_matches_law = true;
    std::optional<verify::ExactDistance> min_gap;
    std::optional<verify::CoveringRadius> covering;
};

CommutatorReport commutator_map(const HeisPoint& xi, const cps::Patch& patch);

struct HullCandidate {
    std::string name;   // "e", "X", "Y", "Z", "XZ", "YZ", "H"
    std::vector<int> axes;
    Rational kappa_small;
    Rational kappa_large;
    bool stable = false;
};

struct HullReport {
    std::vector<HullCandidate> candidates;
    std::optional<std::string> hull;  // nullopt: hull not aligned
    Rational mesh;
};

// Coordinate subgroups of H3 ordered by dimension; the first whose two-sided
// patch distance kappa does not grow by more than 10% from R1 to R2 >= 2 R1.
HullReport schreiber_hull(const cps::Patch& small, const cps::Patch& large);

verify::CommensurabilityReport meyer_commensurability(const cps::Patch& a, const cps::Patch& b,
                                                      std::optional<Rational> translate_bound = std::nullopt);

}  // namespace meyerlab::heis
