#include "meyerlab/io/json.hpp"

#include "meyerlab/errors.hpp"

namespace meyerlab::io {

const Json& field_of(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
    return j.at(key);
}

namespace {

std::string text_of(const Json& j, const char* what) {
    if (!j.is_string()) throw UsageError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

template <class T, class F>
Json array_of(const std::vector<T>& xs, F&& f) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(f(x));
    return out;
}

template <class T>
Json array_of(const std::vector<T>& xs) {
    return array_of(xs, [](const T& x) { return to_json(x); });
}

template <class F>
auto read_array(const Json& j, const char* what, F&& f) {
    if (!j.is_array()) throw UsageError(std::string(what) + " must be an array");
    std::vector<decltype(f(j))> out;
    for (const auto& e : j) out.push_back(f(e));
    return out;
}

Json optional_json(const auto& opt) {
    if (!opt) return nullptr;
    return to_json(*opt);
}

std::size_t read_size(const Json& j) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw UsageError("expected a non-negative integer");
    return j.get<std::size_t>();
}

Json window_json(const cps::Window& w) { return w.describe(); }
cps::Window read_window(const Json& j) { return cps::parse_window(text_of(j, "window")); }

Json heis_window_json(const heis::HeisWindow& w) { return w.describe(); }
heis::HeisWindow read_heis_window(const Json& j) { return heis::parse_heis_window(text_of(j, "window")); }

Json ring_json(const places::SIntegerRing& r) {
    Json j;
    j["field"] = to_json(r.field());
    j["places"] = r.describe();
    return j;
}

places::SIntegerRing read_ring(const Json& j) {
    const NumberField f = read_field(field_of(j, "field"));
    const std::string s = text_of(field_of(j, "places"), "places");
    return places::parse_ring(f, s == "none" ? "" : s);
}

Json kpoly_json(const places::KPoly& p) { return array_of(p, [](const NFElem& c) { return to_json(c); }); }

places::KPoly read_kpoly(const NumberField& f, const Json& j) {
    return read_array(j, "polynomial", [&](const Json& e) { return read_elem(f, e); });
}

Json rationals_json(const std::vector<Rational>& v) { return array_of(v, [](const Rational& q) { return to_json(q); }); }

}  // namespace

// ---------------------------------------------------------------------------
Json to_json(const Rational& q) { return to_fraction_string(q); }

Rational read_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    return parse_rational(text_of(j, "rational"));
}

Json to_json(const NumberField& field) {
    Json coeffs = Json::array();
    for (const auto& c : field.min_poly()) {
        if (c.fits_slong_p())
            coeffs.push_back(c.get_si());
        else
            coeffs.push_back(c.get_str());
    }
    Json j;
    j["min_poly"] = coeffs;
    return j;
}

NumberField read_field(const Json& j) {
    if (j.is_string()) return cps::parse_field_spec(j.get<std::string>());
    std::vector<Integer> coeffs;
    for (const auto& c : field_of(j, "min_poly")) {
        if (c.is_number_integer()) {
            coeffs.emplace_back(static_cast<long>(c.get<long long>()));
        } else {
            Integer v;
            if (!c.is_string() || v.set_str(c.get<std::string>(), 10) != 0) throw UsageError("min_poly entries must be integers");
            coeffs.push_back(v);
        }
    }
    return NumberField(coeffs);
}

Json to_json(const NFElem& x) { return rationals_json(x.coeffs()); }

NFElem read_elem(const NumberField& field, const Json& j) {
    if (j.is_string()) return parse_element(field, j.get<std::string>());
    auto coeffs = read_array(j, "element", [](const Json& e) { return read_rational(e); });
    if (static_cast<int>(coeffs.size()) != field.degree()) throw UsageError("element has the wrong number of coefficients");
    return NFElem(field, std::move(coeffs));
}

Json to_json(const cps::Point& p) { return array_of(p, [](const NFElem& x) { return to_json(x); }); }

cps::Point read_point(const NumberField& field, const Json& j) {
    return read_array(j, "point", [&](const Json& e) { return read_elem(field, e); });
}

Json to_json(const std::vector<cps::Point>& pts) {
    return array_of(pts, [](const cps::Point& p) { return to_json(p); });
}

std::vector<cps::Point> read_points(const NumberField& field, const Json& j) {
    return read_array(j, "points", [&](const Json& e) { return read_point(field, e); });
}

Json to_json(const Interval& a) {
    Json j;
    j["lo"] = to_json(a.lo);
    j["hi"] = to_json(a.hi);
    return j;
}

Interval read_interval(const Json& j) { return {read_rational(field_of(j, "lo")), read_rational(field_of(j, "hi"))}; }

// ---------------------------------------------------------------------------
Json to_json(const cps::Ambient& a) {
    Json j;
    j["field"] = to_json(a.field);
    j["law"] = cps::to_string(a.law);
    j["dim"] = a.dim;
    j["physical_root"] = a.physical.root_index();
    j["internal_root"] = a.internal ? Json(a.internal->root_index()) : Json(nullptr);
    return j;
}

cps::Ambient read_ambient(const Json& j) {
    cps::Ambient a;
    a.field = read_field(field_of(j, "field"));
    a.law = cps::parse_group_law(text_of(field_of(j, "law"), "law"));
    a.dim = read_size(field_of(j, "dim"));
    a.physical = real_place(a.field, field_of(j, "physical_root").get<int>());
    const auto& internal = field_of(j, "internal_root");
    if (!internal.is_null()) a.internal = real_place(a.field, internal.get<int>());
    return a;
}

Json to_json(const cps::Patch& p) {
    Json j;
    j["ambient"] = to_json(p.ambient);
    j["radius"] = to_json(p.radius);
    j["provenance"] = p.provenance;
    j["size"] = p.size();
    j["points"] = to_json(p.points);
    return j;
}

cps::Patch read_patch(const Json& j) {
    cps::Patch p;
    p.ambient = read_ambient(field_of(j, "ambient"));
    p.radius = read_rational(field_of(j, "radius"));
    p.provenance = text_of(field_of(j, "provenance"), "provenance");
    p.points = read_points(p.ambient.field, field_of(j, "points"));
    for (const auto& pt : p.points)
        if (pt.size() != p.ambient.dim) throw UsageError("patch point has the wrong dimension");
    p.normalize();
    return p;
}

// ---------------------------------------------------------------------------
Json to_json(const cps::IntervalCover& c) {
    Json j;
    j["target"] = to_json(c.target);
    j["halfwidth"] = to_json(c.halfwidth);
    j["bits"] = c.bits;
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json e;
        e["translate"] = to_json(s.translate);
        e["conjugate"] = to_json(s.conjugate);
        e["reach"] = to_json(s.reach);
        steps.push_back(e);
    }
    j["steps"] = steps;
    return j;
}

cps::IntervalCover read_interval_cover(const NumberField& field, const Json& j) {
    cps::IntervalCover c;
    c.target = read_rational(field_of(j, "target"));
    c.halfwidth = read_rational(field_of(j, "halfwidth"));
    c.bits = field_of(j, "bits").get<long>();
    c.steps = read_array(field_of(j, "steps"), "steps", [&](const Json& e) {
        return cps::CoverStep{read_elem(field, field_of(e, "translate")), read_interval(field_of(e, "conjugate")),
                              read_rational(field_of(e, "reach"))};
    });
    return c;
}

Json to_json(const cps::GlobalCoveringCertificate& c) {
    Json j;
    j["scheme"] = c.scheme;
    j["outer"] = window_json(c.outer);
    j["inner"] = window_json(c.inner);
    j["trivial"] = c.trivial;
    j["real_covers"] = array_of(c.real_covers, [](const cps::IntervalCover& r) { return to_json(r); });
    j["coset_step"] = to_json(c.coset_step);
    j["coset_count"] = c.coset_count;
    j["translates"] = to_json(c.translates);
    return j;
}

cps::GlobalCoveringCertificate read_global_cover(const Json& j) {
    cps::GlobalCoveringCertificate c;
    c.scheme = text_of(field_of(j, "scheme"), "scheme");
    const auto scheme = cps::parse_scheme(c.scheme);
    c.outer = read_window(field_of(j, "outer"));
    c.inner = read_window(field_of(j, "inner"));
    c.trivial = field_of(j, "trivial").get<bool>();
    c.real_covers = read_array(field_of(j, "real_covers"), "real_covers",
                               [&](const Json& e) { return read_interval_cover(scheme.field, e); });
    c.coset_step = read_rational(field_of(j, "coset_step"));
    c.coset_count = read_size(field_of(j, "coset_count"));
    c.translates = read_points(scheme.field, field_of(j, "translates"));
    return c;
}

Json to_json(const verify::ExactDistance& d) {
    Json j;
    j["element"] = to_json(d.element);
    j["enclosure"] = to_json(d.enclosure);
    j["pair"] = {d.first, d.second};
    return j;
}

Json to_json(const verify::CoveringRadius& c) {
    Json j;
    j["bound"] = c.bound ? to_json(*c.bound) : Json(nullptr);
    j["mesh"] = to_json(c.mesh);
    j["inner_radius"] = to_json(c.inner_radius);
    j["grid_points"] = c.grid_points;
    return j;
}

Json to_json(const verify::DeloneReport& r) {
    Json j;
    j["metric"] = r.metric;
    j["min_separation"] = optional_json(r.min_separation);
    j["covering_radius"] = to_json(r.covering);
    j["uniformly_discrete"] = r.uniformly_discrete();
    j["relatively_dense"] = r.relatively_dense();
    j["delone"] = r.delone();
    return j;
}

Json to_json(const cps::ApproximateLatticeCertificate& c) {
    Json j;
    j["window"] = window_json(c.window);
    j["doubled"] = window_json(c.doubled);
    j["cover"] = to_json(c.cover);
    j["patch_radius"] = to_json(c.patch_radius);
    j["delone"] = to_json(c.delone);
    return j;
}

cps::ApproximateLatticeCertificate read_approximate_lattice(const Json& j) {
    cps::ApproximateLatticeCertificate c;
    c.window = read_window(field_of(j, "window"));
    c.doubled = read_window(field_of(j, "doubled"));
    c.cover = read_global_cover(field_of(j, "cover"));
    c.patch_radius = read_rational(field_of(j, "patch_radius"));
    return c;
}

namespace {

Json axes_json(const std::vector<std::size_t>& axes) {
    Json a = Json::array();
    for (auto x : axes) a.push_back(x);
    return a;
}

}  // namespace

Json to_json(const cps::IntersectionReport& r) {
    Json j;
    j["axes"] = axes_json(r.axes);
    j["trivial"] = r.trivial;
    j["induced_scheme"] = r.induced ? Json(r.induced->describe()) : Json(nullptr);
    j["induced_window"] = r.induced ? window_json(r.induced_window) : Json(nullptr);
    j["intersection"] = to_json(r.intersection);
    j["induced_patch"] = to_json(r.induced_patch);
    j["comparison"] = optional_json(r.comparison);
    j["delone"] = optional_json(r.delone);
    return j;
}

Json to_json(const cps::ProjectionReport& r) {
    Json j;
    j["quotient_axes"] = axes_json(r.quotient_axes);
    j["projected"] = to_json(r.projected);
    j["projected_large_size"] = r.projected_large.size();
    j["separation"] = optional_json(r.separation);
    j["separation_large"] = optional_json(r.separation_large);
    j["uniformly_discrete"] = r.uniformly_discrete;
    j["intersection_delone"] = r.intersection_delone;
    j["equivalence_consistent"] = r.equivalence_consistent;
    return j;
}

// ---------------------------------------------------------------------------
Json to_json(const verify::PatchCover<cps::Point>& c) {
    Json j;
    j["feasible"] = c.feasible;
    j["translates"] = to_json(c.translates);
    Json as = Json::array();
    for (const auto& a : c.assignment) {
        Json e;
        e["point"] = a.point;
        e["translate"] = a.translate;
        e["residual"] = to_json(a.residual);
        as.push_back(e);
    }
    j["assignment"] = as;
    j["witness"] = optional_json(c.witness);
    return j;
}

verify::PatchCover<cps::Point> read_patch_cover(const NumberField& field, const Json& j) {
    verify::PatchCover<cps::Point> c;
    c.feasible = field_of(j, "feasible").get<bool>();
    c.translates = read_points(field, field_of(j, "translates"));
    c.assignment = read_array(field_of(j, "assignment"), "assignment", [&](const Json& e) {
        return verify::CoverAssignment<cps::Point>{read_size(field_of(e, "point")), read_size(field_of(e, "translate")),
                                                   read_point(field, field_of(e, "residual"))};
    });
    const auto& w = field_of(j, "witness");
    if (!w.is_null()) c.witness = read_point(field, w);
    return c;
}

Json to_json(const verify::CommensurabilityReport& r) {
    Json j;
    j["verdict"] = verify::to_string(r.verdict);
    j["translate_bound"] = to_json(r.translate_bound);
    j["inner_radius"] = to_json(r.inner_radius);
    j["a_inner"] = to_json(r.a_inner);
    j["b_inner"] = to_json(r.b_inner);
    j["a_in_b"] = to_json(r.a_in_b);
    j["b_in_a"] = to_json(r.b_in_a);
    j["witness"] = optional_json(r.witness);
    return j;
}

verify::CommensurabilityReport read_commensurability(const NumberField& field, const Json& j) {
    verify::CommensurabilityReport r;
    const std::string v = text_of(field_of(j, "verdict"), "verdict");
    if (v == verify::to_string(verify::Verdict::CommensurableAtScale))
        r.verdict = verify::Verdict::CommensurableAtScale;
    else if (v == verify::to_string(verify::Verdict::NotCommensurableAtScale))
        r.verdict = verify::Verdict::NotCommensurableAtScale;
    else
        throw UsageError("unknown verdict '" + v + "'");
    r.translate_bound = read_rational(field_of(j, "translate_bound"));
    r.inner_radius = read_rational(field_of(j, "inner_radius"));
    r.a_inner = read_points(field, field_of(j, "a_inner"));
    r.b_inner = read_points(field, field_of(j, "b_inner"));
    r.a_in_b = read_patch_cover(field, field_of(j, "a_in_b"));
    r.b_in_a = read_patch_cover(field, field_of(j, "b_in_a"));
    const auto& w = field_of(j, "witness");
    if (!w.is_null()) r.witness = read_point(field, w);
    return r;
}

Json to_json(const verify::CoverBoundWitness<cps::Point>& w) {
    Json j;
    j["representatives"] = to_json(w.representatives);
    Json cells = Json::array();
    for (const auto& c : w.cells) cells.push_back(c);
    j["cells"] = cells;
    j["point_cell"] = w.point_cell;
    j["bound"] = w.bound;
    j["inclusion_verified"] = w.inclusion_verified;
    return j;
}

Json to_json(const verify::PowerCoverReport<cps::Point>& r) {
    Json j;
    j["k"] = r.k;
    j["base_size"] = r.base_size;
    j["translates"] = to_json(r.translates);
    j["bound"] = r.bound;
    j["checked"] = r.checked;
    j["verified"] = r.verified;
    j["witness"] = optional_json(r.witness);
    return j;
}

// ---------------------------------------------------------------------------
places::Place read_place(const NumberField& field, const std::string& text) {
    if (text == "inf") return places::Place::archimedean(field, 0);
    if (text.rfind("real:", 0) == 0) return places::Place::archimedean(field, std::stoi(text.substr(5)));
    if (text.rfind("p=", 0) == 0) {
        Integer p;
        if (p.set_str(text.substr(2), 10) != 0) throw UsageError("malformed place '" + text + "'");
        return places::Place::finite(field, p);
    }
    throw UsageError("malformed place '" + text + "'");
}

Json to_json(const places::PisotCertificate& c) {
    Json j;
    j["element"] = to_json(c.element);
    j["ring"] = ring_json(c.ring);
    Json bounds = Json::array();
    for (const auto& d : c.conjugate_bounds) {
        Json e;
        e["place"] = d.place.describe();
        e["decision"] = meyerlab::to_string(d.decision);
        e["value"] = to_json(d.value);
        bounds.push_back(e);
    }
    j["conjugate_bounds"] = bounds;
    j["integrality"] = c.integrality ? rationals_json(c.integrality->coeffs()) : Json(nullptr);
    j["max_precision"] = c.max_precision;
    return j;
}

places::PisotCertificate read_pisot(const Json& j) {
    auto ring = read_ring(field_of(j, "ring"));
    const auto& f = ring.field();
    places::PisotCertificate c{read_elem(f, field_of(j, "element")), ring, {}, std::nullopt,
                               field_of(j, "max_precision").get<long>()};
    for (const auto& e : field_of(j, "conjugate_bounds")) {
        places::PlaceDecision d{read_place(f, text_of(field_of(e, "place"), "place")), AbsComparison::Less,
                                read_interval(field_of(e, "value"))};
        const std::string dec = text_of(field_of(e, "decision"), "decision");
        if (dec == meyerlab::to_string(AbsComparison::Less))
            d.decision = AbsComparison::Less;
        else if (dec == meyerlab::to_string(AbsComparison::Equal))
            d.decision = AbsComparison::Equal;
        else if (dec == meyerlab::to_string(AbsComparison::Greater))
            d.decision = AbsComparison::Greater;
        else
            throw UsageError("unknown decision '" + dec + "'");
        c.conjugate_bounds.push_back(std::move(d));
    }
    const auto& integ = field_of(j, "integrality");
    if (!integ.is_null()) c.integrality = RationalPoly(read_array(integ, "integrality", [](const Json& e) { return read_rational(e); }));
    return c;
}

Json to_json(const places::Rejection& r) {
    Json j;
    j["element"] = to_json(r.element);
    j["place"] = r.place;
    j["reason"] = r.reason;
    return j;
}

Json to_json(const places::ProductFormulaReport& r) {
    Json j;
    j["element"] = to_json(r.element);
    Json factors = Json::array();
    for (const auto& [place, value] : r.factors) {
        Json e;
        e["place"] = place;
        e["value"] = to_json(value);
        factors.push_back(e);
    }
    j["factors"] = factors;
    j["archimedean"] = to_json(r.archimedean);
    j["norm_abs"] = to_json(r.norm_abs);
    j["finite_part"] = to_json(r.finite_part);
    j["exact"] = r.exact;
    j["holds"] = r.holds;
    return j;
}

Json to_json(const places::PolynomialCoverCertificate& c) {
    Json j;
    j["polynomial"] = kpoly_json(c.polynomial);
    j["ring"] = ring_json(c.ring);
    j["window"] = to_json(c.window);
    j["modulus"] = c.modulus.get_str();
    j["image_bound"] = to_json(c.image_bound);
    Json classes = Json::array();
    for (const auto& rc : c.classes) {
        Json e;
        e["offset"] = to_json(rc.offset);
        e["representatives"] = array_of(rc.representatives, [](const NFElem& x) { return to_json(x); });
        e["cover"] = to_json(rc.cover);
        classes.push_back(e);
    }
    j["classes"] = classes;
    j["translates"] = array_of(c.translates, [](const NFElem& x) { return to_json(x); });
    j["check_radius"] = to_json(c.check_radius);
    j["checked_points"] = c.checked_points;
    return j;
}

places::PolynomialCoverCertificate read_polynomial_cover(const Json& j) {
    auto ring = read_ring(field_of(j, "ring"));
    const auto& f = ring.field();
    places::PolynomialCoverCertificate c{read_kpoly(f, field_of(j, "polynomial")), ring, read_rational(field_of(j, "window")), 1, 0, {}, {}, 0, 0};
    if (c.modulus.set_str(text_of(field_of(j, "modulus"), "modulus"), 10) != 0) throw UsageError("malformed modulus");
    c.image_bound = read_rational(field_of(j, "image_bound"));
    for (const auto& e : field_of(j, "classes")) {
        c.classes.push_back({read_elem(f, field_of(e, "offset")),
                             read_array(field_of(e, "representatives"), "representatives",
                                        [&](const Json& x) { return read_elem(f, x); }),
                             read_interval_cover(f, field_of(e, "cover"))});
    }
    c.translates = read_array(field_of(j, "translates"), "translates", [&](const Json& x) { return read_elem(f, x); });
    c.check_radius = read_rational(field_of(j, "check_radius"));
    c.checked_points = read_size(field_of(j, "checked_points"));
    return c;
}

Json to_json(const places::ShrinkCertificate& c) {
    Json j;
    j["polynomial"] = kpoly_json(c.polynomial);
    j["ring"] = ring_json(c.ring);
    j["modulus"] = c.modulus.get_str();
    j["delta"] = to_json(c.delta);
    j["bound_at_delta"] = to_json(c.bound_at_delta);
    j["patch_radius"] = to_json(c.patch_radius);
    j["comparison"] = to_json(c.comparison);
    return j;
}

places::ShrinkCertificate read_shrink(const Json& j) {
    auto ring = read_ring(field_of(j, "ring"));
    const auto& f = ring.field();
    places::ShrinkCertificate c{read_kpoly(f, field_of(j, "polynomial")), ring, 1, 0, 0, 0, {}};
    if (c.modulus.set_str(text_of(field_of(j, "modulus"), "modulus"), 10) != 0) throw UsageError("malformed modulus");
    c.delta = read_rational(field_of(j, "delta"));
    c.bound_at_delta = read_rational(field_of(j, "bound_at_delta"));
    c.patch_radius = read_rational(field_of(j, "patch_radius"));
    c.comparison = read_commensurability(f, field_of(j, "comparison"));
    return c;
}

Json to_json(const places::SumProductCertificate& c) {
    Json j;
    j["ring"] = ring_json(c.ring);
    j["elements"] = array_of(c.elements, [](const NFElem& x) { return to_json(x); });
    j["members"] = array_of(c.members, [](const places::PisotCertificate& m) { return to_json(m); });
    j["patch_bound"] = to_json(c.patch_bound);
    j["products_checked"] = c.products_checked;
    j["products_in_set"] = c.products_in_set;
    j["products_out_of_patch"] = c.products_out_of_patch;
    Json flagged = Json::array();
    for (const auto& fl : c.flagged) {
        Json e;
        e["pair"] = {fl.first, fl.second};
        e["product"] = to_json(fl.product);
        flagged.push_back(e);
    }
    j["flagged"] = flagged;
    j["conclusion"] = c.conclusion;
    return j;
}

// ---------------------------------------------------------------------------
Json to_json(const heis::HeisPoint& p) { return to_json(heis::to_point(p)); }

Json to_json(const heis::HeisCoveringCertificate& c) {
    Json j;
    j["scheme"] = c.scheme;
    j["window"] = heis_window_json(c.window);
    j["product"] = heis_window_json(c.product);
    j["x_cover"] = to_json(c.x_cover);
    j["y_cover"] = to_json(c.y_cover);
    Json zs = Json::array();
    for (const auto& z : c.z_covers) {
        Json e;
        e["t1"] = to_json(z.t1);
        e["target"] = to_json(z.target);
        e["cover"] = to_json(z.cover);
        zs.push_back(e);
    }
    j["z_covers"] = zs;
    j["translates"] = to_json(c.translates);
    j["grid_per_axis"] = c.grid_per_axis;
    return j;
}

heis::HeisCoveringCertificate read_heis_cover(const NumberField& field, const Json& j) {
    heis::HeisCoveringCertificate c;
    c.scheme = text_of(field_of(j, "scheme"), "scheme");
    c.window = read_heis_window(field_of(j, "window"));
    c.product = read_heis_window(field_of(j, "product"));
    c.x_cover = read_interval_cover(field, field_of(j, "x_cover"));
    c.y_cover = read_interval_cover(field, field_of(j, "y_cover"));
    for (const auto& e : field_of(j, "z_covers"))
        c.z_covers.push_back({read_elem(field, field_of(e, "t1")), read_rational(field_of(e, "target")),
                              read_interval_cover(field, field_of(e, "cover"))});
    c.translates = read_points(field, field_of(j, "translates"));
    c.grid_per_axis = read_size(field_of(j, "grid_per_axis"));
    return c;
}

Json to_json(const heis::CenterReport& r) {
    Json j;
    j["center"] = to_json(r.center);
    j["delone"] = optional_json(r.delone);
    j["inconclusive"] = r.inconclusive;
    return j;
}

Json to_json(const heis::CommutatorReport& r) {
    Json j;
    j["xi"] = to_json(r.xi);
    j["image"] = to_json(r.image);
    j["pairs_checked"] = r.pairs_checked;
    j["homomorphism"] = r.homomorphism;
    j["formula_matches_law"] = r.formula_matches_law;
    j["min_gap"] = optional_json(r.min_gap);
    j["covering"] = optional_json(r.covering);
    return j;
}

Json to_json(const heis::HullReport& r) {
    Json j;
    Json cands = Json::array();
    for (const auto& c : r.candidates) {
        Json e;
        e["name"] = c.name;
        e["axes"] = c.axes;
        e["kappa_small"] = to_json(c.kappa_small);
        e["kappa_large"] = to_json(c.kappa_large);
        e["stable"] = c.stable;
        cands.push_back(e);
    }
    j["candidates"] = cands;
    j["hull"] = r.hull ? Json(*r.hull) : Json(nullptr);
    j["mesh"] = to_json(r.mesh);
    return j;
}

}  // namespace meyerlab::io
