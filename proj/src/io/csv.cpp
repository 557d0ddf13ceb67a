#include "meyerlab/io/csv.hpp"

#include "meyerlab/errors.hpp"
#include "meyerlab/exactnum/padic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace meyerlab::io {

namespace {

std::string join_poly(const NumberField& f) {
    std::string out;
    for (const auto& c : f.min_poly()) out += (out.empty() ? "" : ",") + c.get_str();
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> coordinate_names(const cps::Ambient& ambient) {
    if (ambient.law == cps::GroupLaw::Heisenberg) return {"x", "y", "z"};
    if (ambient.dim == 1) return {"x"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ambient.dim; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

std::string patch_csv(const cps::Patch& patch, const std::vector<Integer>& primes) {
    const auto& a = patch.ambient;
    const bool conj = a.internal.has_value() && a.field.degree() == 2;
    std::ostringstream os;
    os << "# meyerlab patch\n";
    os << "# field: " << join_poly(a.field) << "\n";
    os << "# law: " << cps::to_string(a.law) << "\n";
    os << "# dim: " << a.dim << "\n";
    os << "# physical_root: " << a.physical.root_index() << "\n";
    os << "# internal_root: " << (a.internal ? std::to_string(a.internal->root_index()) : "none") << "\n";
    os << "# radius: " << to_fraction_string(patch.radius) << "\n";
    os << "# provenance: " << patch.provenance << "\n";
    os << "# points: " << patch.size() << "\n";

    const auto names = coordinate_names(a);
    std::string header;
    for (const auto& n : names) {
        header += (header.empty() ? "" : ",") + n;
        if (conj) header += "," + n + "_int";
    }
    for (const auto& p : primes) header += ",v_" + p.get_str();
    os << header << "\n";
    for (const auto& pt : patch.points) {
        std::string row;
        for (std::size_t i = 0; i < pt.size(); ++i) {
            row += (i ? "," : "") + to_string(pt[i]);
            if (conj) row += "," + to_string(pt[i].conjugate());
        }
        for (const auto& p : primes) {
            std::optional<long> v;
            for (const auto& c : pt) {
                if (!c.is_rational()) throw UsageError("v_p columns need rational coordinates");
                auto vc = padic_valuation(c.rational_value(), p);
                if (vc && (!v || *vc < *v)) v = vc;
            }
            row += "," + (v ? std::to_string(*v) : std::string("inf"));
        }
        os << row << "\n";
    }
    return os.str();
}

cps::Patch read_patch_csv(const std::string& text) {
    std::map<std::string, std::string> meta;
    std::vector<std::string> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto colon = line.find(':');
            if (colon != std::string::npos) meta[trim(line.substr(1, colon - 1))] = trim(line.substr(colon + 1));
            continue;
        }
        rows.push_back(line);
    }
    auto need = [&](const char* key) -> const std::string& {
        auto it = meta.find(key);
        if (it == meta.end()) throw UsageError(std::string("patch CSV lacks '# ") + key + ":' metadata");
        return it->second;
    };
    std::vector<Integer> poly;
    for (const auto& c : split(need("field"), ',')) {
        Integer v;
        if (v.set_str(trim(c), 10) != 0) throw UsageError("malformed field in patch CSV");
        poly.push_back(v);
    }
    cps::Patch patch;
    auto& a = patch.ambient;
    a.field = NumberField(poly);
    a.law = cps::parse_group_law(need("law"));
    try {
        a.dim = std::stoul(need("dim"));
        a.physical = real_place(a.field, std::stoi(need("physical_root")));
        if (need("internal_root") != "none") a.internal = real_place(a.field, std::stoi(need("internal_root")));
    } catch (const std::logic_error&) {
        throw UsageError("malformed ambient metadata in patch CSV");
    }
    patch.radius = parse_rational(need("radius"));
    patch.provenance = meta.count("provenance") ? meta["provenance"] : "";
    if (rows.empty()) throw UsageError("patch CSV lacks a header row");

    const auto header = split(rows[0], ',');
    std::vector<std::size_t> columns;
    for (const auto& n : coordinate_names(a)) {
        auto it = std::find(header.begin(), header.end(), n);
        if (it == header.end()) throw UsageError("patch CSV lacks column '" + n + "'");
        columns.push_back(static_cast<std::size_t>(it - header.begin()));
    }
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto cells = split(rows[r], ',');
        if (cells.size() != header.size()) throw UsageError("patch CSV row " + std::to_string(r) + " has the wrong width");
        cps::Point pt;
        for (auto c : columns) pt.push_back(parse_element(a.field, trim(cells[c])));
        patch.points.push_back(std::move(pt));
    }
    patch.normalize();
    return patch;
}

}  // namespace meyerlab::io
