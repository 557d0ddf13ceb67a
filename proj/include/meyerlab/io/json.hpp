#pragma once

#include "meyerlab/cps/certificate.hpp"
#include "meyerlab/cps/subgroup.hpp"
#include "meyerlab/heis/heisenberg.hpp"
#include "meyerlab/places/places.hpp"
#include "meyerlab/verify/commensurability.hpp"
#include "meyerlab/verify/cover.hpp"
#include "meyerlab/verify/delone.hpp"

#include <json.hpp>

namespace meyerlab::io {

// Keys keep insertion order so documents are byte-stable.
using Json = nlohmann::ordered_json;

// Exact values: rationals as "num/den", elements as arrays of those, fields
// as {"min_poly": [c0, ..., 1]}. Readers throw UsageError on malformed input.
Json to_json(const Rational& q);
Rational read_rational(const Json& j);
Json to_json(const NumberField& field);
// Accepts {"min_poly": [...]} or a field name understood by parse_field_spec.
NumberField read_field(const Json& j);
Json to_json(const NFElem& x);
NFElem read_elem(const NumberField& field, const Json& j);
Json to_json(const cps::Point& p);
cps::Point read_point(const NumberField& field, const Json& j);
Json to_json(const std::vector<cps::Point>& pts);
std::vector<cps::Point> read_points(const NumberField& field, const Json& j);
Json to_json(const Interval& a);
Interval read_interval(const Json& j);

Json to_json(const cps::Ambient& a);
cps::Ambient read_ambient(const Json& j);
Json to_json(const cps::Patch& p);
cps::Patch read_patch(const Json& j);

Json to_json(const cps::IntervalCover& c);
cps::IntervalCover read_interval_cover(const NumberField& field, const Json& j);
Json to_json(const cps::GlobalCoveringCertificate& c);
cps::GlobalCoveringCertificate read_global_cover(const Json& j);
Json to_json(const verify::ExactDistance& d);
Json to_json(const verify::CoveringRadius& c);
Json to_json(const verify::DeloneReport& r);
Json to_json(const cps::ApproximateLatticeCertificate& c);
cps::ApproximateLatticeCertificate read_approximate_lattice(const Json& j);
Json to_json(const cps::IntersectionReport& r);
Json to_json(const cps::ProjectionReport& r);

Json to_json(const verify::PatchCover<cps::Point>& c);
verify::PatchCover<cps::Point> read_patch_cover(const NumberField& field, const Json& j);
Json to_json(const verify::CommensurabilityReport& r);
verify::CommensurabilityReport read_commensurability(const NumberField& field, const Json& j);
Json to_json(const verify::CoverBoundWitness<cps::Point>& w);
Json to_json(const verify::PowerCoverReport<cps::Point>& r);

places::Place read_place(const NumberField& field, const std::string& text);
Json to_json(const places::PisotCertificate& c);
places::PisotCertificate read_pisot(const Json& j);
Json to_json(const places::Rejection& r);
Json to_json(const places::ProductFormulaReport& r);
Json to_json(const places::PolynomialCoverCertificate& c);
places::PolynomialCoverCertificate read_polynomial_cover(const Json& j);
Json to_json(const places::ShrinkCertificate& c);
places::ShrinkCertificate read_shrink(const Json& j);
Json to_json(const places::SumProductCertificate& c);

Json to_json(const heis::HeisPoint& p);
Json to_json(const heis::HeisCoveringCertificate& c);
heis::HeisCoveringCertificate read_heis_cover(const NumberField& field, const Json& j);
Json to_json(const heis::CenterReport& r);
Json to_json(const heis::CommutatorReport& r);
Json to_json(const heis::HullReport& r);

// Member access with a message naming the missing field.
const Json& field_of(const Json& j, const char* key);

}  // namespace meyerlab::io
