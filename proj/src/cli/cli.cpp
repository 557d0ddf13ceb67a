#include "meyerlab/cli/cli.hpp"

#include "meyerlab/errors.hpp"
#include "meyerlab/io/csv.hpp"
#include "meyerlab/io/documents.hpp"
#include "meyerlab/io/files.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace meyerlab::cli {

namespace {

using io::Json;

struct RunConfig {
    unsigned threads = 1;
    long max_precision = kDefaultMaxPrecision;
    std::string out;
    std::uint64_t seed = 0;
};

// Field given by name, minimal-polynomial coefficients, or a JSON file.
Json field_input(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) return io::to_json(io::read_field(io::parse_json(io::read_text_file(spec))));
    return io::to_json(cps::parse_field_spec(spec));
}

cps::Patch load_patch(const std::string& path) {
    const std::string text = io::read_text_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j = io::parse_json(text);
        // A patch document, or a JSON patch.
        if (j.contains("patch")) j = j.at("patch");
        return io::read_patch(j);
    }
    return io::read_patch_csv(text);
}

// One element per line ('#' comments allowed) or a JSON array.
Json element_list(const std::string& path) {
    const std::string text = io::read_text_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') return io::parse_json(text);
    Json list = Json::array();
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        list.push_back(line.substr(b, e - b + 1));
    }
    return list;
}

// Rejects values the given parser does not accept; CLI11 prefixes the option name.
template <class Parse>
CLI::Validator parsed_by(Parse parse, const std::string& what) {
    return CLI::Validator(
        [parse](std::string& value) -> std::string {
            try {
                parse(value);
            } catch (const std::exception& e) {
                return e.what();
            }
            return {};
        },
        what);
}

Json rational_or_null(const std::string& text) {
    if (text.empty()) return nullptr;
    return io::to_json(parse_rational(text));
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    void emit(const std::string& content) const {
        if (cfg.out.empty())
            out_ << content;
        else
            io::write_atomic(cfg.out, content);
    }

    int document(const std::string& kind, const Json& inputs) const {
        const auto doc = io::compute(kind, inputs, options());
        emit(io::dump(doc.json));
        if (doc.outcome != io::Outcome::Verified) {
            err_ << kind << ": " << io::to_string(doc.outcome) << "\n";
            return kNegative;
        }
        return kOk;
    }

    io::RunOptions options() const {
        io::RunOptions o;
        o.threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
        return o;
    }

    RunConfig cfg;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Runner runner(out, err);
    auto& cfg = runner.cfg;
    std::function<int()> action;

    const auto rational = parsed_by([](const std::string& v) { parse_rational(v); }, "RATIONAL");
    const auto scheme_spec = parsed_by([](const std::string& v) { cps::parse_scheme(v); }, "SCHEME");
    const auto window_spec = parsed_by([](const std::string& v) { cps::parse_window(v); }, "WINDOW");
    const auto heis_window = parsed_by([](const std::string& v) { heis::parse_heis_window(v); }, "CX,CY,CZ");

    CLI::App app{"Model sets, approximate lattices and their certificates", "meyerlab"};
    app.fallthrough();
    app.require_subcommand(1);
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_config("--config", "", "key=value configuration file; command-line values take precedence");
    app.add_option("--threads", cfg.threads, "Worker threads (0: all cores); never changes outputs")->capture_default_str();
    app.add_option("--max-precision", cfg.max_precision, "Interval refinement cap in bits")
        ->envname("MEYERLAB_MAX_PRECISION")
        ->check(CLI::Range(1L, 1L << 20))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "Output file (written atomically); standard output if omitted");
    app.add_option("--seed", cfg.seed, "Seed for randomized test data; core algorithms are deterministic")->capture_default_str();
    bool print_config = false;
    app.add_flag("--print-config", print_config, "Print the effective configuration and exit")->configurable(false);

    // ---------------------------------------------------------------- cps
    auto* cps_cmd = app.add_subcommand("cps", "Cut-and-project schemes over R, R^n and R x Q_p");
    cps_cmd->require_subcommand(1);
    struct {
        std::string scheme, window, inner, subgroup, radius = "50", format = "csv";
    } c;
    auto scheme_opts = [&](CLI::App* s) {
        s->add_option("--scheme", c.scheme, "zs:2,3 | galois:golden[:n] | galois:sqrt2[:n] | galois:c0,c1,1[:n]")->check(scheme_spec)->required();
        s->add_option("--window", c.window, "box:1,1/2 | z2:0,z3:1")->check(window_spec)->required();
    };
    auto* gen = cps_cmd->add_subcommand("generate", "Complete model-set patch");
    scheme_opts(gen);
    gen->add_option("--radius", c.radius, "Physical sup-norm radius")->check(rational)->required();
    gen->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    gen->callback([&] {
        action = [&] {
            const auto scheme = cps::parse_scheme(c.scheme);
            const auto patch = cps::model_set_patch(scheme, cps::parse_window(c.window), parse_rational(c.radius),
                                                    cps::EnumerationOptions{runner.options().threads});
            runner.emit(c.format == "csv" ? io::patch_csv(patch, scheme.primes) : io::dump(io::to_json(patch)));
            return static_cast<int>(kOk);
        };
    });
    auto* cert = cps_cmd->add_subcommand("certify", "Approximate-lattice certificate, or a cover of one window by another");
    scheme_opts(cert);
    cert->add_option("--radius", c.radius, "Patch radius for the Delone constants")->check(rational)->capture_default_str();
    cert->add_option("--inner", c.inner, "Cover --window by translates of this window instead")->check(window_spec);
    cert->callback([&] {
        action = [&] {
            Json in;
            in["scheme"] = c.scheme;
            if (!c.inner.empty()) {
                in["outer"] = c.window;
                in["inner"] = c.inner;
                return runner.document("global_cover", in);
            }
            in["window"] = c.window;
            in["radius"] = io::to_json(parse_rational(c.radius));
            return runner.document("approximate_lattice", in);
        };
    });
    for (const char* name : {"intersect", "project"}) {
        const std::string n = name;
        auto* s = cps_cmd->add_subcommand(n, n == "intersect" ? "Intersection of the doubled set with a coordinate subgroup"
                                                               : "Projection to the quotient by a coordinate subgroup");
        scheme_opts(s);
        s->add_option("--subgroup", c.subgroup, "zero | all | axes:0,1 | basis:1,0;0,1")->required();
        s->add_option("--radius", c.radius, "Patch radius")->check(rational)->required();
        s->callback([&, n] {
            action = [&, n] {
                Json in;
                in["scheme"] = c.scheme;
                in["window"] = c.window;
                in["subgroup"] = c.subgroup;
                in["radius"] = io::to_json(parse_rational(c.radius));
                return runner.document(n == "intersect" ? "intersection" : "projection", in);
            };
        });
    }

    // --------------------------------------------------------------- heis
    auto* heis_cmd = app.add_subcommand("heis", "Heisenberg group over a real quadratic field");
    heis_cmd->require_subcommand(1);
    struct {
        std::string field = "sqrt2", window = "1,1,2", radius = "5", large, other = "symmetrize", bound, xi = "1,0,0";
        bool symmetrize = false;
    } h;
    auto heis_opts = [&](CLI::App* s, bool radius) {
        s->add_option("--field", h.field, "Field name, coefficients c0,c1,1 or a JSON file")->capture_default_str();
        s->add_option("--window", h.window, "Internal half-widths cx,cy,cz")->check(heis_window)->capture_default_str();
        if (radius) s->add_option("--radius", h.radius, "Physical radius")->check(rational)->capture_default_str();
    };
    auto heis_inputs = [&](bool radius) {
        Json in;
        in["field"] = field_input(h.field);
        in["window"] = h.window;
        if (radius) in["radius"] = io::to_json(parse_rational(h.radius));
        return in;
    };
    auto* hgen = heis_cmd->add_subcommand("generate", "Heisenberg model-set patch (CSV)");
    heis_opts(hgen, true);
    hgen->add_flag("--symmetrize", h.symmetrize, "Keep only points whose inverse is also in the set");
    hgen->callback([&] {
        action = [&] {
            const auto scheme = heis::HeisScheme::make(io::read_field(field_input(h.field)), heis::parse_heis_window(h.window));
            auto patch = heis::heis_model_set(scheme, parse_rational(h.radius), cps::EnumerationOptions{runner.options().threads});
            if (h.symmetrize) patch = heis::symmetrize(patch, scheme);
            runner.emit(io::patch_csv(patch));
            return static_cast<int>(kOk);
        };
    });
    auto* hcert = heis_cmd->add_subcommand("certify", "Global cover Lambda Lambda in F Lambda");
    heis_opts(hcert, false);
    hcert->callback([&] { action = [&] { return runner.document("heis_cover", heis_inputs(false)); }; });
    auto* hcenter = heis_cmd->add_subcommand("center", "Doubled set intersected with the centre");
    heis_opts(hcenter, true);
    hcenter->callback([&] { action = [&] { return runner.document("center", heis_inputs(true)); }; });
    auto* hhull = heis_cmd->add_subcommand("hull", "Coordinate subgroup with stable two-sided distance");
    heis_opts(hhull, true);
    hhull->add_option("--large", h.large, "Second radius (default twice --radius)")->check(rational);
    hhull->callback([&] {
        action = [&] {
            Json in = heis_inputs(false);
            const Rational r = parse_rational(h.radius);
            in["radius_small"] = io::to_json(r);
            in["radius_large"] = io::to_json(h.large.empty() ? Rational(2 * r) : parse_rational(h.large));
            return runner.document("hull", in);
        };
    });
    auto* hcomm = heis_cmd->add_subcommand("commensurate", "Two-way patch covers between related Heisenberg sets");
    heis_opts(hcomm, true);
    hcomm->add_option("--other", h.other, "'symmetrize' or a second window cx,cy,cz")->capture_default_str();
    hcomm->add_option("--bound", h.bound, "Translate norm bound (default a quarter of the radius)")->check(rational);
    hcomm->callback([&] {
        action = [&] {
            Json in = heis_inputs(true);
            in["other"] = h.other;
            in["translate_bound"] = rational_or_null(h.bound);
            return runner.document("heis_commensurability", in);
        };
    });
    auto* hcom = heis_cmd->add_subcommand("commutator", "Commutator map u -> [xi, u] on a patch");
    heis_opts(hcom, true);
    hcom->add_option("--xi", h.xi, "Group element x,y,z (coefficients joined by ':')")->capture_default_str();
    hcom->callback([&] {
        action = [&] {
            Json in = heis_inputs(true);
            Json xi = Json::array();
            std::istringstream is(h.xi);
            std::string tok;
            while (std::getline(is, tok, ',')) xi.push_back(tok);
            if (xi.size() != 3) throw UsageError("--xi needs three coordinates");
            in["xi"] = xi;
            return runner.document("commutator", in);
        };
    });

    // -------------------------------------------------------------- pisot
    auto* pisot_cmd = app.add_subcommand("pisot", "S-integer rings and Pisot certificates");
    pisot_cmd->require_subcommand(1);
    struct {
        std::string field, ring, elements, radius = "10", poly, window = "1", check_radius = "20", shrink_radius = "30";
        long level = 0, denominator = 256;
        bool shrink = false;
    } p;
    auto ring_opts = [&](CLI::App* s) {
        s->add_option("--field", p.field, "Field name, coefficients c0,c1,1 or a JSON file {\"min_poly\": [...]}")->required();
        s->add_option("--ring", p.ring, "Places in S: inf,2,3 over Q; real:<i> otherwise")->required();
    };
    auto ring_inputs = [&] {
        Json in;
        in["field"] = field_input(p.field);
        in["ring"] = p.ring;
        return in;
    };
    auto* pcert = pisot_cmd->add_subcommand("certify", "Membership certificates and the sum-product check");
    ring_opts(pcert);
    pcert->add_option("--elements", p.elements, "File with one element per line, or a JSON array")->required()->check(CLI::ExistingFile);
    pcert->callback([&] {
        action = [&] {
            Json in = ring_inputs();
            in["elements"] = element_list(p.elements);
            in["max_precision"] = cfg.max_precision;
            return runner.document("pisot", in);
        };
    });
    auto* penum = pisot_cmd->add_subcommand("enumerate", "Ring elements of bounded physical size");
    ring_opts(penum);
    penum->add_option("--radius", p.radius, "Physical bound")->check(rational)->capture_default_str();
    penum->add_option("--level", p.level, "Denominator exponent over Q")->capture_default_str();
    penum->callback([&] {
        action = [&] {
            Json in = ring_inputs();
            in["radius"] = io::to_json(parse_rational(p.radius));
            in["level"] = p.level;
            return runner.document("ring_enumeration", in);
        };
    });
    auto* ppoly = pisot_cmd->add_subcommand("polycover", "Translate cover of P(ring), or a shrunken window for P");
    ring_opts(ppoly);
    ppoly->add_option("--poly", p.poly, "Coefficients c0,c1,... low degree first")->required();
    ppoly->add_option("--window", p.window, "Conjugate bound c of the ring patch")->check(rational)->capture_default_str();
    ppoly->add_option("--check-radius", p.check_radius, "Radius of the patch spot check")->check(rational)->capture_default_str();
    ppoly->add_flag("--shrink", p.shrink, "Find delta with P(delta-window) inside the unit window instead");
    ppoly->add_option("--radius", p.shrink_radius, "Patch radius of the shrink comparison")->check(rational)->capture_default_str();
    ppoly->add_option("--denominator", p.denominator, "Starting denominator of the delta search")->capture_default_str();
    ppoly->callback([&] {
        action = [&] {
            Json in = ring_inputs();
            in["polynomial"] = p.poly;
            if (p.shrink) {
                in["radius"] = io::to_json(parse_rational(p.shrink_radius));
                in["denominator"] = p.denominator;
                return runner.document("shrink", in);
            }
            in["window"] = io::to_json(parse_rational(p.window));
            in["check_radius"] = io::to_json(parse_rational(p.check_radius));
            return runner.document("polynomial_cover", in);
        };
    });

    // ------------------------------------------------------------- verify
    auto* verify_cmd = app.add_subcommand("verify", "Checks on patch files and certificate replay");
    verify_cmd->require_subcommand(1);
    struct {
        std::string a, b, inner, bound;
        std::vector<std::string> targets;
        bool two_way = false;
    } v;
    auto* vdel = verify_cmd->add_subcommand("delone", "Minimum separation and covering radius of a patch");
    vdel->add_option("patch", v.a, "Patch CSV or JSON")->required()->check(CLI::ExistingFile);
    vdel->add_option("--inner", v.inner, "Inner radius (default half the patch radius)")->check(rational);
    vdel->callback([&] {
        action = [&] {
            const auto patch = load_patch(v.a);
            Json in;
            in["patch"] = io::to_json(patch);
            in["inner_radius"] = io::to_json(v.inner.empty() ? Rational(patch.radius / 2) : parse_rational(v.inner));
            return runner.document("delone", in);
        };
    });
    auto* vcov = verify_cmd->add_subcommand("cover", "Greedy cover A in F B (or both ways with --two-way)");
    vcov->add_option("a", v.a, "Patch A")->required()->check(CLI::ExistingFile);
    vcov->add_option("b", v.b, "Patch B")->required()->check(CLI::ExistingFile);
    vcov->add_option("--bound", v.bound, "Translate norm bound")->check(rational);
    vcov->add_flag("--two-way", v.two_way, "Commensurability at scale on the inner ball");
    vcov->callback([&] {
        action = [&] {
            Json in;
            in["a"] = io::to_json(load_patch(v.a));
            in["b"] = io::to_json(load_patch(v.b));
            in["translate_bound"] = rational_or_null(v.bound);
            return runner.document(v.two_way ? "commensurability" : "patch_cover", in);
        };
    });
    auto* vcell = verify_cmd->add_subcommand("cellcover", "Common refinement X in F'(Y1^-1 Y1 cap ... cap Yn^-1 Yn)");
    vcell->add_option("x", v.a, "Patch X")->required()->check(CLI::ExistingFile);
    vcell->add_option("--target", v.targets, "Patch Y_i (repeatable)")->required()->check(CLI::ExistingFile);
    vcell->callback([&] {
        action = [&] {
            Json in;
            in["x"] = io::to_json(load_patch(v.a));
            Json ts = Json::array();
            for (const auto& t : v.targets) ts.push_back(io::to_json(load_patch(t)));
            in["targets"] = ts;
            return runner.document("cell_cover", in);
        };
    });
    auto* vrep = verify_cmd->add_subcommand("replay", "Re-verify a certificate document");
    vrep->add_option("file", v.a, "Document produced by this tool")->required()->check(CLI::ExistingFile);
    vrep->callback([&] {
        action = [&] {
            const auto res = io::replay_document(io::parse_json(io::read_text_file(v.a)), runner.options());
            std::ostringstream os;
            for (const auto& s : res.passed) os << "pass " << s << "\n";
            for (const auto& s : res.failed) os << "FAIL " << s << "\n";
            os << res.kind << ": " << (res.ok ? "replayed" : "replay failed") << "\n";
            runner.emit(os.str());
            return static_cast<int>(res.ok ? kOk : kNegative);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (print_config) {
        out << app.config_to_str(true, false);
        return kOk;
    }
    try {
        if (!action) throw UsageError("no subcommand given");
        return action();
    } catch (const PrecisionExhausted& e) {
        err << "error: precision exhausted: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace meyerlab::cli
