#include "doctest.h"

#include "meyerlab/cli/cli.hpp"
#include "meyerlab/cps/certificate.hpp"
#include "meyerlab/cps/scheme.hpp"
#include "meyerlab/errors.hpp"
#include "meyerlab/heis/heisenberg.hpp"
#include "meyerlab/io/csv.hpp"
#include "meyerlab/io/documents.hpp"
#include "meyerlab/io/files.hpp"
#include "meyerlab/io/json.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace meyerlab;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli_run(std::vector<std::string> args) {
    args.insert(args.begin(), "meyerlab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / ("meyerlab_io_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string scratch(const std::string& name, const std::string& content = "") {
    const auto p = (scratch_dir() / name).string();
    if (!content.empty()) io::write_atomic(p, content);
    return p;
}

}  // namespace

TEST_CASE("json round trips") {
    const auto q = parse_rational("-7/12");
    CHECK(io::read_rational(io::to_json(q)) == q);
    CHECK(io::read_rational(io::Json(5)) == Rational(5));

    const auto f = NumberField::golden();
    CHECK(io::read_field(io::to_json(f)) == f);
    CHECK(io::read_field(io::Json("golden")) == f);

    const auto x = parse_element(f, "3/2:-1");
    CHECK(io::read_elem(f, io::to_json(x)) == x);

    const auto scheme = cps::parse_scheme("galois:golden:2");
    const auto patch = cps::model_set_patch(scheme, cps::parse_window("box:1,1/2"), Rational(6));
    REQUIRE(patch.size() > 10);
    CHECK(io::dump(io::to_json(io::read_patch(io::to_json(patch)))) == io::dump(io::to_json(patch)));

    const auto cover = cps::global_covering_certificate(scheme, cps::parse_window("box:2,1"), cps::parse_window("box:1,1/2"));
    const auto back = io::read_global_cover(io::to_json(cover));
    CHECK(io::dump(io::to_json(back)) == io::dump(io::to_json(cover)));
}

TEST_CASE("malformed json inputs are usage errors") {
    CHECK_THROWS_AS(io::parse_json("{\"kind\": "), UsageError);
    CHECK_THROWS_AS(io::read_rational(io::Json("1/0")), UsageError);
    CHECK_THROWS_AS(io::read_patch(io::Json::object()), UsageError);
    CHECK_THROWS_AS(io::compute("no_such_kind", io::Json::object()), UsageError);
    CHECK_THROWS_AS(io::compute("approximate_lattice", io::Json{{"scheme", "zs:2"}}), UsageError);
}

TEST_CASE("csv round trips") {
    SUBCASE("quadratic field with conjugate columns") {
        const auto patch = cps::model_set_patch(cps::parse_scheme("galois:sqrt2:2"), cps::parse_window("box:1,1"), Rational(5));
        const auto text = io::patch_csv(patch);
        CHECK(text.find("x0,x0_int,x1,x1_int\n") != std::string::npos);
        CHECK(io::patch_csv(io::read_patch_csv(text)) == text);
    }
    SUBCASE("S-integers with valuation columns") {
        const auto scheme = cps::parse_scheme("zs:2,3");
        const auto patch = cps::model_set_patch(scheme, cps::parse_window("z2:0,z3:0"), Rational(4));
        const auto text = io::patch_csv(patch, scheme.primes);
        CHECK(text.find("x,v_2,v_3\n") != std::string::npos);
        CHECK(io::patch_csv(io::read_patch_csv(text), scheme.primes) == text);
    }
    SUBCASE("Heisenberg") {
        const auto scheme = heis::HeisScheme::make(NumberField::sqrt2(), heis::parse_heis_window("1,1,2"));
        const auto patch = heis::heis_model_set(scheme, Rational(3));
        const auto text = io::patch_csv(patch);
        CHECK(text.find("x,x_int,y,y_int,z,z_int\n") != std::string::npos);
        CHECK(io::patch_csv(io::read_patch_csv(text)) == text);
    }
    SUBCASE("rejects broken files") {
        CHECK_THROWS_AS(io::read_patch_csv("x\n1\n"), UsageError);
        const auto good = io::patch_csv(cps::model_set_patch(cps::parse_scheme("zs:2"), cps::parse_window("z2:0"), Rational(2)));
        CHECK_THROWS_AS(io::read_patch_csv(good + "1,2,3\n"), UsageError);
    }
}

TEST_CASE("cli generates the integers") {
    const auto r = cli_run({"cps", "generate", "--scheme", "zs:2", "--window", "z2:0", "--radius", "3"});
    REQUIRE(r.code == cli::kOk);
    const auto patch = io::read_patch_csv(r.out);
    REQUIRE(patch.size() == 7);
    for (long n = -3; n <= 3; ++n) CHECK(patch.points[static_cast<std::size_t>(n + 3)][0] == NFElem::from_rational(NumberField::rationals(), Rational(n)));
}

TEST_CASE("cli usage errors exit with 1") {
    CHECK(cli_run({"cps", "generate", "--scheme", "zs:2", "--window", "z2:0", "--radius", "3", "--frobnicate"}).code == cli::kUsage);
    CHECK(cli_run({"cps", "generate", "--scheme", "zs:2", "--window", "z2:0"}).code == cli::kUsage);
    CHECK(cli_run({"cps", "generate", "--scheme", "nonsense", "--window", "z2:0", "--radius", "3"}).code == cli::kUsage);
    CHECK(cli_run({"verify", "delone", scratch("missing.csv")}).code == cli::kUsage);
    CHECK(cli_run({}).code == cli::kUsage);
    CHECK(cli_run({"--help"}).code == cli::kOk);
}

TEST_CASE("cli exit codes follow the outcome") {
    const auto powers = scratch("golden_powers.txt", "# golden ratio and its square\n0:1\n1:1\n");
    const auto ok = cli_run({"pisot", "certify", "--field", "golden", "--ring", "real:1", "--elements", powers});
    CHECK(ok.code == cli::kOk);
    CHECK(io::parse_json(ok.out).at("outcome") == "verified");

    const auto third = scratch("third.txt", "1/3\n");
    const auto neg = cli_run({"pisot", "certify", "--field", "rationals", "--ring", "inf,2", "--elements", third});
    CHECK(neg.code == cli::kNegative);
    CHECK(io::parse_json(neg.out).at("outcome") == "negative");
}

TEST_CASE("emitted documents replay") {
    const auto a = scratch("a.csv");
    const auto b = scratch("b.csv");
    REQUIRE(cli_run({"--out", a, "cps", "generate", "--scheme", "galois:golden", "--window", "box:1", "--radius", "15"}).code == 0);
    REQUIRE(cli_run({"--out", b, "cps", "generate", "--scheme", "galois:golden", "--window", "box:1/2", "--radius", "15"}).code == 0);
    const auto powers = scratch("powers.txt", "0:1\n1:1\n1:2\n");

    const std::vector<std::vector<std::string>> commands{
        {"cps", "certify", "--scheme", "galois:golden", "--window", "box:1", "--radius", "20"},
        {"cps", "certify", "--scheme", "zs:2,3", "--window", "z2:0,z3:0", "--inner", "z2:1,z3:1"},
        {"cps", "intersect", "--scheme", "galois:sqrt5:2", "--window", "box:1,1", "--subgroup", "axes:0", "--radius", "5"},
        {"cps", "project", "--scheme", "galois:sqrt5:2", "--window", "box:1,1", "--subgroup", "axes:0", "--radius", "5"},
        {"heis", "certify", "--field", "sqrt2", "--window", "1,1,2"},
        {"heis", "center", "--radius", "6"},
        {"heis", "commutator", "--radius", "3", "--xi", "1,0:1,0"},
        {"heis", "commensurate", "--radius", "4"},
        {"pisot", "certify", "--field", "golden", "--ring", "real:1", "--elements", powers},
        {"pisot", "enumerate", "--field", "rationals", "--ring", "inf,2", "--radius", "3", "--level", "2"},
        {"pisot", "polycover", "--field", "golden", "--ring", "real:1", "--poly", "0,0,1"},
        {"pisot", "polycover", "--field", "golden", "--ring", "real:1", "--poly", "0,2", "--shrink"},
        {"verify", "delone", a},
        {"verify", "cover", a, b},
        {"verify", "cover", a, b, "--two-way"},
        {"verify", "cellcover", a, "--target", b, "--target", a},
    };
    int index = 0;
    for (const auto& cmd : commands) {
        const auto doc = scratch("doc" + std::to_string(index++) + ".json");
        auto args = cmd;
        args.insert(args.begin(), {"--out", doc});
        const auto made = cli_run(args);
        INFO(cmd[0] << " " << cmd[1] << ": " << made.err);
        CHECK(made.code == cli::kOk);
        const auto replay = cli_run({"verify", "replay", doc});
        INFO(replay.out << replay.err);
        CHECK(replay.code == cli::kOk);
    }
}

TEST_CASE("tampered documents fail replay") {
    auto doc = io::compute("global_cover", io::Json{{"scheme", "galois:golden"}, {"outer", "box:2"}, {"inner", "box:1"}}).json;
    REQUIRE(doc.at("outcome") == "verified");
    CHECK(io::replay_document(doc).ok);

    auto broken = doc;
    auto& steps = broken["result"]["real_covers"][0]["steps"];
    REQUIRE(steps.size() > 1);
    steps.erase(steps.begin());
    const auto res = io::replay_document(broken);
    CHECK_FALSE(res.ok);
    CHECK_FALSE(res.failed.empty());

    auto relabelled = doc;
    relabelled["inputs"]["inner"] = "box:1/2";
    CHECK_FALSE(io::replay_document(relabelled).ok);

    const auto path = scratch("tampered.json", io::dump(broken));
    CHECK(cli_run({"verify", "replay", path}).code == cli::kNegative);
}

TEST_CASE("thread count never changes outputs") {
    const std::vector<std::vector<std::string>> commands{
        {"cps", "generate", "--scheme", "galois:golden:2", "--window", "box:1,1", "--radius", "8"},
        {"cps", "certify", "--scheme", "galois:sqrt2", "--window", "box:1", "--radius", "30"},
        {"heis", "generate", "--radius", "4"},
        {"heis", "center", "--radius", "6"},
    };
    for (const auto& cmd : commands) {
        auto one = cmd;
        one.insert(one.begin(), {"--threads", "1"});
        auto eight = cmd;
        eight.insert(eight.begin(), {"--threads", "8"});
        const auto r1 = cli_run(one);
        const auto r8 = cli_run(eight);
        CHECK(r1.code == 0);
        CHECK(r1.out == r8.out);
    }
}

TEST_CASE("options from files and the environment") {
    const auto powers = scratch("env_powers.txt", "0:1\n");
    ::setenv("MEYERLAB_MAX_PRECISION", "128", 1);
    const auto viaenv = cli_run({"pisot", "certify", "--field", "golden", "--ring", "real:1", "--elements", powers});
    ::unsetenv("MEYERLAB_MAX_PRECISION");
    REQUIRE(viaenv.code == 0);
    CHECK(io::parse_json(viaenv.out).at("inputs").at("max_precision") == 128);

    const auto flag = cli_run({"--max-precision", "64", "pisot", "certify", "--field", "golden", "--ring", "real:1", "--elements", powers});
    CHECK(io::parse_json(flag.out).at("inputs").at("max_precision") == 64);

    const auto out = scratch("from_config.csv");
    const auto config = scratch("run.ini", "out=\"" + out + "\"\n[cps.generate]\nscheme=\"zs:3\"\nwindow=\"z3:1\"\nradius=9\n");
    const auto r = cli_run({"--config", config, "cps", "generate"});
    INFO(r.err);
    REQUIRE(r.code == 0);
    const auto patch = io::read_patch_csv(io::read_text_file(out));
    CHECK(patch.size() == 55);  // thirds in [-9, 9]

    const auto bad_value = scratch("bad_value.ini", "[cps.generate]\nscheme=\"zs:2\"\nwindow=\"z2:0\"\nradius=\"x/y\"\n");
    const auto bv = cli_run({"--config", bad_value, "cps", "generate"});
    CHECK(bv.code == cli::kUsage);
    CHECK(bv.err.find("--radius") != std::string::npos);

    const auto unknown = scratch("unknown.ini", "colour=\"blue\"\n");
    const auto uk = cli_run({"--config", unknown, "cps", "generate", "--scheme", "zs:2", "--window", "z2:0", "--radius", "3"});
    CHECK(uk.code == cli::kUsage);
    CHECK(uk.err.find("colour") != std::string::npos);
}
