#include "meyerlab/io/documents.hpp"

#include "meyerlab/errors.hpp"

#include <functional>
#include <map>

namespace meyerlab::io {

namespace {

constexpr const char* kFormat = "meyerlab/1";

std::string str_in(const Json& in, const char* key) {
    const auto& v = field_of(in, key);
    if (!v.is_string()) throw UsageError(std::string("input '") + key + "' must be a string");
    return v.get<std::string>();
}

Rational rat_in(const Json& in, const char* key) { return read_rational(field_of(in, key)); }

std::optional<Rational> opt_rat_in(const Json& in, const char* key) {
    const auto& v = field_of(in, key);
    if (v.is_null()) return std::nullopt;
    return read_rational(v);
}

long long_in(const Json& in, const char* key) {
    const auto& v = field_of(in, key);
    if (!v.is_number_integer()) throw UsageError(std::string("input '") + key + "' must be an integer");
    return v.get<long>();
}

cps::EnumerationOptions enumeration(const RunOptions& o) {
    cps::EnumerationOptions e;
    e.threads = o.threads;
    return e;
}

heis::HeisScheme heis_scheme_in(const Json& in) {
    return heis::HeisScheme::make(read_field(field_of(in, "field")), heis::parse_heis_window(str_in(in, "window")));
}

Outcome verdict_outcome(verify::Verdict v) {
    return v == verify::Verdict::CommensurableAtScale ? Outcome::Verified : Outcome::Negative;
}

Outcome when(bool ok) { return ok ? Outcome::Verified : Outcome::Negative; }

struct Computed {
    Json result;
    Outcome outcome;
};

using Handler = std::function<Computed(const Json&, const RunOptions&)>;

// Evidence checks read only the document. Each returns (name, passed) pairs.
using Checker = std::function<std::vector<std::pair<std::string, bool>>(const Json& inputs, const Json& result)>;

Computed approximate_lattice(const Json& in, const RunOptions& o) {
    const auto scheme = cps::parse_scheme(str_in(in, "scheme"));
    const auto cert = cps::approximate_lattice_certificate(scheme, cps::parse_window(str_in(in, "window")), rat_in(in, "radius"),
                                                           enumeration(o));
    return {to_json(cert), when(cert.delone.delone() && !cert.cover.translates.empty())};
}

Computed global_cover(const Json& in, const RunOptions&) {
    const auto scheme = cps::parse_scheme(str_in(in, "scheme"));
    const auto cert =
        cps::global_covering_certificate(scheme, cps::parse_window(str_in(in, "outer")), cps::parse_window(str_in(in, "inner")));
    return {to_json(cert), Outcome::Verified};
}

Computed intersection(const Json& in, const RunOptions& o) {
    const auto scheme = cps::parse_scheme(str_in(in, "scheme"));
    const auto spec = cps::parse_subgroup(str_in(in, "subgroup"), scheme);
    const auto rep = cps::intersect_with_subgroup(scheme, cps::parse_window(str_in(in, "window")), spec, rat_in(in, "radius"),
                                                  enumeration(o));
    bool ok = rep.trivial || (rep.comparison && rep.comparison->verdict == verify::Verdict::CommensurableAtScale &&
                              rep.delone && rep.delone->delone());
    return {to_json(rep), when(ok)};
}

Computed projection(const Json& in, const RunOptions& o) {
    const auto scheme = cps::parse_scheme(str_in(in, "scheme"));
    const auto spec = cps::parse_subgroup(str_in(in, "subgroup"), scheme);
    const auto rep =
        cps::project_to_quotient(scheme, cps::parse_window(str_in(in, "window")), spec, rat_in(in, "radius"), enumeration(o));
    return {to_json(rep), when(rep.equivalence_consistent && rep.uniformly_discrete && rep.intersection_delone)};
}

Computed heis_cover(const Json& in, const RunOptions&) {
    const auto cert = heis::heis_covering_certificate(heis_scheme_in(in));
    return {to_json(cert), Outcome::Verified};
}

Computed center(const Json& in, const RunOptions& o) {
    const auto rep = heis::center_intersection(heis_scheme_in(in), rat_in(in, "radius"), enumeration(o));
    if (rep.inconclusive) return {to_json(rep), Outcome::Inconclusive};
    return {to_json(rep), when(rep.delone && rep.delone->delone())};
}

Computed commutator(const Json& in, const RunOptions& o) {
    const auto scheme = heis_scheme_in(in);
    const auto patch = heis::heis_model_set(scheme, rat_in(in, "radius"), enumeration(o));
    const auto xi = heis::from_point(read_point(scheme.field, field_of(in, "xi")));
    const auto rep = heis::commutator_map(xi, patch);
    return {to_json(rep), when(rep.homomorphism && rep.formula_matches_law)};
}

Computed hull(const Json& in, const RunOptions& o) {
    const auto scheme = heis_scheme_in(in);
    const auto small = heis::heis_model_set(scheme, rat_in(in, "radius_small"), enumeration(o));
    const auto large = heis::heis_model_set(scheme, rat_in(in, "radius_large"), enumeration(o));
    const auto rep = heis::schreiber_hull(small, large);
    return {to_json(rep), when(rep.hull.has_value())};
}

std::pair<cps::Patch, cps::Patch> heis_pair(const Json& in, const RunOptions& o) {
    const auto scheme = heis_scheme_in(in);
    const auto base = heis::heis_model_set(scheme, rat_in(in, "radius"), enumeration(o));
    const std::string other = str_in(in, "other");
    if (other == "symmetrize") return {heis::symmetrize(base, scheme), base};
    const auto wider = heis::HeisScheme::make(scheme.field, heis::parse_heis_window(other));
    return {heis::heis_model_set(wider, rat_in(in, "radius"), enumeration(o)), base};
}

Computed heis_commensurability(const Json& in, const RunOptions& o) {
    const auto [a, b] = heis_pair(in, o);
    const auto rep = heis::meyer_commensurability(a, b, opt_rat_in(in, "translate_bound"));
    Json result;
    result["a_size"] = a.size();
    result["b_size"] = b.size();
    result["report"] = to_json(rep);
    return {result, verdict_outcome(rep.verdict)};
}

Computed pisot(const Json& in, const RunOptions&) {
    const auto field = read_field(field_of(in, "field"));
    const auto ring = places::parse_ring(field, str_in(in, "ring"));
    const long prec = long_in(in, "max_precision");
    std::vector<NFElem> elems;
    for (const auto& e : field_of(in, "elements")) elems.push_back(read_elem(field, e));
    Json members = Json::array();
    bool all = true;
    for (const auto& x : elems) {
        const auto m = places::s_integer_membership(x, ring, prec);
        Json e;
        e["element"] = to_json(x);
        e["member"] = m.member();
        e["certificate"] = m.certificate ? to_json(*m.certificate) : Json(nullptr);
        e["rejection"] = m.rejection ? to_json(*m.rejection) : Json(nullptr);
        members.push_back(e);
        all = all && m.member();
    }
    Json result;
    result["ring"] = ring.describe();
    result["members"] = members;
    result["sum_product"] = nullptr;
    result["sum_product_note"] = nullptr;
    if (all) {
        try {
            const auto sp = places::pvs_certify_set(elems, ring, std::nullopt, prec);
            if (sp.certificate) result["sum_product"] = to_json(*sp.certificate);
        } catch (const UsageError& e) {
            result["sum_product_note"] = std::string("not applicable: ") + e.what();
        }
    }
    return {result, when(all)};
}

Computed ring_enumeration(const Json& in, const RunOptions&) {
    const auto field = read_field(field_of(in, "field"));
    const auto ring = places::parse_ring(field, str_in(in, "ring"));
    const auto elems = places::enumerate_ring(ring, rat_in(in, "radius"), long_in(in, "level"));
    Json result;
    result["ring"] = ring.describe();
    result["count"] = elems.size();
    Json list = Json::array();
    for (const auto& x : elems) list.push_back(to_json(x));
    result["elements"] = list;
    return {result, Outcome::Verified};
}

Computed polynomial_cover(const Json& in, const RunOptions&) {
    const auto field = read_field(field_of(in, "field"));
    const auto ring = places::parse_ring(field, str_in(in, "ring"));
    const auto p = places::parse_kpoly(field, str_in(in, "polynomial"));
    const auto cert = places::polynomial_translate_cover(p, ring, rat_in(in, "window"), {}, rat_in(in, "check_radius"));
    return {to_json(cert), Outcome::Verified};
}

Computed shrink(const Json& in, const RunOptions&) {
    const auto field = read_field(field_of(in, "field"));
    const auto ring = places::parse_ring(field, str_in(in, "ring"));
    const auto p = places::parse_kpoly(field, str_in(in, "polynomial"));
    const auto cert = places::shrink_for_polynomial(p, ring, rat_in(in, "radius"), long_in(in, "denominator"));
    return {to_json(cert), verdict_outcome(cert.comparison.verdict)};
}

Computed delone(const Json& in, const RunOptions&) {
    const auto patch = read_patch(field_of(in, "patch"));
    const auto rep = verify::delone_certify(patch, rat_in(in, "inner_radius"));
    return {to_json(rep), when(rep.delone())};
}

Computed patch_cover(const Json& in, const RunOptions&) {
    const auto a = read_patch(field_of(in, "a"));
    const auto b = read_patch(field_of(in, "b"));
    if (a.ambient.field != b.ambient.field || a.ambient.law != b.ambient.law || a.ambient.dim != b.ambient.dim)
        throw UsageError("patches live in different ambient groups");
    verify::PatchGroup g{a.ambient};
    const auto cover = verify::greedy_cover(g, a.points, b.points, verify::GreedyOptions{opt_rat_in(in, "translate_bound")});
    return {to_json(cover), when(cover.feasible)};
}

Computed commensurability(const Json& in, const RunOptions&) {
    const auto a = read_patch(field_of(in, "a"));
    const auto b = read_patch(field_of(in, "b"));
    if (a.ambient.field != b.ambient.field || a.ambient.law != b.ambient.law || a.ambient.dim != b.ambient.dim)
        throw UsageError("patches live in different ambient groups");
    const auto rep = verify::commensurability(a, b, opt_rat_in(in, "translate_bound"));
    return {to_json(rep), verdict_outcome(rep.verdict)};
}

Computed cell_cover(const Json& in, const RunOptions&) {
    const auto x = read_patch(field_of(in, "x"));
    verify::PatchGroup g{x.ambient};
    std::vector<verify::CoverInput<cps::Point>> covers;
    Json result;
    Json fs = Json::array();
    for (const auto& tj : field_of(in, "targets")) {
        const auto y = read_patch(tj);
        if (y.ambient.field != x.ambient.field || y.ambient.dim != x.ambient.dim || y.ambient.law != x.ambient.law)
            throw UsageError("patches live in different ambient groups");
        const auto f = verify::greedy_cover(g, x.points, y.points);
        fs.push_back(to_json(f.translates));
        covers.push_back({f.translates, y.points});
    }
    result["covers"] = fs;
    try {
        const auto w = verify::cell_cover(g, x.points, covers);
        result["witness"] = to_json(w);
        result["error"] = nullptr;
        return {result, when(w.inclusion_verified && w.representatives.size() <= w.bound)};
    } catch (const verify::CellCoverError& e) {
        result["witness"] = nullptr;
        result["error"] = e.what();
        return {result, Outcome::Negative};
    }
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"approximate_lattice", approximate_lattice},
        {"global_cover", global_cover},
        {"intersection", intersection},
        {"projection", projection},
        {"heis_cover", heis_cover},
        {"center", center},
        {"commutator", commutator},
        {"hull", hull},
        {"heis_commensurability", heis_commensurability},
        {"pisot", pisot},
        {"ring_enumeration", ring_enumeration},
        {"polynomial_cover", polynomial_cover},
        {"shrink", shrink},
        {"delone", delone},
        {"patch_cover", patch_cover},
        {"commensurability", commensurability},
        {"cell_cover", cell_cover},
    };
    return h;
}

using Checks = std::vector<std::pair<std::string, bool>>;

const std::map<std::string, Checker>& checkers() {
    static const std::map<std::string, Checker> c{
        {"approximate_lattice",
         [](const Json& in, const Json& r) -> Checks {
             return {{"global cover replay", cps::replay(read_approximate_lattice(r), cps::parse_scheme(str_in(in, "scheme")))}};
         }},
        {"global_cover",
         [](const Json& in, const Json& r) -> Checks {
             return {{"global cover replay", cps::replay(read_global_cover(r), cps::parse_scheme(str_in(in, "scheme")))}};
         }},
        {"heis_cover",
         [](const Json& in, const Json& r) -> Checks {
             const auto scheme = heis_scheme_in(in);
             return {{"Heisenberg cover replay", heis::replay(read_heis_cover(scheme.field, r), scheme)}};
         }},
        {"pisot",
         [](const Json&, const Json& r) -> Checks {
             Checks out;
             for (const auto& m : field_of(r, "members")) {
                 const auto& cert = field_of(m, "certificate");
                 if (!cert.is_null()) out.push_back({"membership replay", places::replay(read_pisot(cert))});
             }
             return out;
         }},
        {"polynomial_cover",
         [](const Json&, const Json& r) -> Checks {
             return {{"polynomial cover replay", places::replay(read_polynomial_cover(r))}};
         }},
        {"shrink",
         [](const Json&, const Json& r) -> Checks {
             const auto cert = read_shrink(r);
             if (cert.comparison.verdict != verify::Verdict::CommensurableAtScale) return {};
             return {{"shrink replay", places::replay(cert)}};
         }},
        {"heis_commensurability",
         [](const Json& in, const Json& r) -> Checks {
             const auto [a, b] = heis_pair(in, {});
             const auto rep = read_commensurability(a.ambient.field, field_of(r, "report"));
             if (rep.verdict != verify::Verdict::CommensurableAtScale) return {};
             return {{"two-way cover replay", verify::replay(rep, a, b)}};
         }},
        {"commensurability",
         [](const Json& in, const Json& r) -> Checks {
             const auto a = read_patch(field_of(in, "a"));
             const auto b = read_patch(field_of(in, "b"));
             const auto rep = read_commensurability(a.ambient.field, r);
             if (rep.verdict != verify::Verdict::CommensurableAtScale) return {};
             return {{"two-way cover replay", verify::replay(rep, a, b)}};
         }},
        {"patch_cover",
         [](const Json& in, const Json& r) -> Checks {
             const auto a = read_patch(field_of(in, "a"));
             const auto b = read_patch(field_of(in, "b"));
             const auto cover = read_patch_cover(a.ambient.field, r);
             if (!cover.feasible) return {};
             return {{"cover replay", verify::replay_cover(verify::PatchGroup{a.ambient}, a.points, b.points, cover)}};
         }},
    };
    return c;
}

}  // namespace

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Verified: return "verified";
        case Outcome::Negative: return "negative";
        case Outcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

Document compute(const std::string& kind, const Json& inputs, const RunOptions& opts) {
    auto it = handlers().find(kind);
    if (it == handlers().end()) throw UsageError("unknown document kind '" + kind + "'");
    if (!inputs.is_object()) throw UsageError("inputs must be an object");
    Computed c = it->second(inputs, opts);
    Document d;
    d.outcome = c.outcome;
    d.json["kind"] = kind;
    d.json["format"] = kFormat;
    d.json["inputs"] = inputs;
    d.json["outcome"] = to_string(c.outcome);
    d.json["result"] = std::move(c.result);
    return d;
}

ReplayResult replay_document(const Json& doc, const RunOptions& opts) {
    ReplayResult r;
    r.kind = field_of(doc, "kind").get<std::string>();
    if (field_of(doc, "format") != kFormat) throw UsageError("unsupported document format");
    const auto& inputs = field_of(doc, "inputs");
    const auto& result = field_of(doc, "result");
    auto record = [&](const std::string& name, bool ok) {
        (ok ? r.passed : r.failed).push_back(name);
        r.ok = r.ok && ok;
    };
    if (auto it = checkers().find(r.kind); it != checkers().end()) {
        for (const auto& [name, ok] : it->second(inputs, result)) record(name, ok);
    }
    const auto again = compute(r.kind, inputs, opts);
    record("recomputation matches", dump(again.json) == dump(doc));
    return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace meyerlab::io
