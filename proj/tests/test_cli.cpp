#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tvbounds/cli.hpp"
#include "tvbounds/config.hpp"
#include "tvbounds/report.hpp"
#include "tvbounds/sweep.hpp"

using namespace tvbounds;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"tvbounds"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code =
        run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/tvbounds_test_") + name;
}

}  // namespace

TEST_CASE("bounds --probs emits a tight n=1 report") {
    const CliResult r = cli({"bounds", "--probs", "0.1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(std::abs(j["exact_tv"].get<double>() - 0.009516258196404043) < 1e-12);
    // n=1: the BH upper bound coincides with the exact TV distance.
    CHECK(std::abs(j["bounds"]["bh_upper"].get<double>() -
                   j["exact_tv"].get<double>()) < 1e-14);
}

TEST_CASE("bounds --lambda --n sandwich holds end to end") {
    const CliResult r =
        cli({"bounds", "--lambda", "1", "--n", "10", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["sum_p2"].get<double>() - 0.1) < 1e-14);
    const double tv = j["exact_tv"].get<double>();
    CHECK(j["bounds"]["corollary_lower"].get<double>() <= tv);
    CHECK(j["bounds"]["k1_lower"].get<double>() <= tv);
    CHECK(tv <= j["bounds"]["bh_upper"].get<double>());
    CHECK(j["bounds"]["bh_upper"].get<double>() <=
          j["bounds"]["le_cam"].get<double>() + 1e-15);
    // Lower bounds keep their coefficient ordering.
    CHECK(j["bounds"]["bh_lower"].get<double>() <=
          j["bounds"]["corollary_lower"].get<double>() + 1e-9);
    CHECK(j["bounds"]["corollary_lower"].get<double>() <=
          j["bounds"]["k1_common_alpha_lower"].get<double>() + 1e-9);
    CHECK(j["bounds"]["k1_common_alpha_lower"].get<double>() <=
          j["bounds"]["k1_lower"].get<double>() + 1e-9);
}

TEST_CASE("bounds input validation") {
    CHECK(cli({"bounds", "--probs", ""}).code == 2);
    CHECK(cli({"bounds"}).code == 2);
    CHECK(cli({"bounds", "--probs", "0.1", "--lambda", "1", "--n", "2"}).code == 2);
    CHECK(cli({"bounds", "--probs", "1.5"}).code == 2);
    CHECK(cli({"bounds", "--probs", "0.1,zzz"}).code == 2);
    CHECK(cli({"bounds", "--lambda", "1"}).code == 2);
    CHECK(cli({"bounds", "--lambda", "5", "--n", "2"}).code == 2);  // p > 1
    CHECK(cli({"bounds", "--probs", "0.2", "--variants", "bogus"}).code == 2);
}

TEST_CASE("bounds reads probability files") {
    const std::string path = temp_path("probs.txt");
    {
        std::ofstream f(path);
        f << "0.1, 0.2\n0.3\n";
    }
    const CliResult r =
        cli({"bounds", "--probs-file", path, "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(std::abs(j["lambda"].get<double>() - 0.6) < 1e-14);
    std::remove(path.c_str());

    CHECK(cli({"bounds", "--probs-file", "/nonexistent/probs.txt"}).code == 3);
}

TEST_CASE("bounds --out failures map to exit 3") {
    CHECK(cli({"bounds", "--probs", "0.1", "--out",
               "/nonexistent-dir/report.json"}).code == 3);
}

TEST_CASE("report JSON round-trips") {
    const BoundReport r = make_bound_report(ProbVector({0.1, 0.2, 0.3}));
    CHECK(parse_report(render_report(r)) == r);

    // Variant gating leaves nulls that must survive the round trip too.
    const BoundReport gated = make_bound_report(
        ProbVector({0.5}), VariantSelection{false, false, true});
    CHECK(!gated.k1_three_coeff.has_value());
    CHECK(parse_report(render_report(gated)) == gated);

    // Oversized instances keep an explicit null exact_tv.
    const std::string text = render_report(gated);
    CHECK(nlohmann::json::parse(text).contains("exact_tv"));
    BoundReport no_tv = gated;
    no_tv.exact_tv.reset();
    const std::string null_text = render_report(no_tv);
    CHECK(nlohmann::json::parse(null_text)["exact_tv"].is_null());
    CHECK(parse_report(null_text) == no_tv);
}

TEST_CASE("sweep CSV is byte-stable and gates columns") {
    const std::vector<std::string> args{"sweep",   "--lambda-min", "0.1",
                                        "--lambda-max", "10",     "--points",
                                        "6",       "--variants",  "closed"};
    const CliResult a = cli(args);
    const CliResult b = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    std::istringstream in(a.out);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "lambda,upper_coeff,k1_three,k1_common,k1_closed,bh_lower_coeff,"
          "ratio_three,ratio_common,ratio_closed,ratio_bh");
    std::string row;
    std::getline(in, row);
    // k1_three and k1_common cells are empty when gated off.
    std::istringstream cells(row);
    std::vector<std::string> fields;
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    REQUIRE(fields.size() >= 9);
    CHECK(fields[2].empty());
    CHECK(fields[3].empty());
    CHECK(!fields[4].empty());
}

TEST_CASE("sweep row invariants") {
    const auto rows = run_sweep(0.1, 50.0, 8, SweepScale::log);
    for (const auto& r : rows) {
        CHECK(*r.ratio_three <= *r.ratio_common + 1e-6);
        CHECK(*r.ratio_common <= *r.ratio_closed + 1e-6);
        CHECK(*r.ratio_closed <= r.ratio_bh + 1e-6);
        CHECK(*r.ratio_three ==
              doctest::Approx(r.upper_coeff / *r.k1_three).epsilon(1e-12));
        // Closed algebra for the BH ratio.
        const double expect = 32.0 * (-std::expm1(-r.lambda)) *
                              std::max(1.0, r.lambda) / r.lambda;
        CHECK(r.ratio_bh == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("sweep ratio curve reaches its large-lambda plateau") {
    const auto rows = run_sweep(0.1, 100.0, 50, SweepScale::log,
                                VariantSelection{false, false, true});
    const auto& last = rows.back();
    CHECK(last.lambda == doctest::Approx(100.0));
    CHECK(std::abs(*last.ratio_closed - 10.539) / 10.539 < 0.05);
}

TEST_CASE("sweep argument validation") {
    CHECK(cli({"sweep", "--lambda-min", "5", "--lambda-max", "1"}).code == 2);
    CHECK(cli({"sweep", "--lambda-min", "0", "--lambda-max", "1"}).code == 2);
    CHECK(cli({"sweep", "--points", "1"}).code == 2);
    CHECK(cli({"sweep", "--scale", "cubic"}).code == 2);
}

TEST_CASE("sweep writes --out files") {
    const std::string path = temp_path("sweep.csv");
    const CliResult r = cli({"sweep", "--lambda-min", "1", "--lambda-max", "2",
                             "--points", "2", "--variants", "closed", "--out",
                             path});
    REQUIRE(r.code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header.rfind("lambda,", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("verify subcommand exit codes") {
    CHECK(cli({"verify", "--suite", "limits"}).code == 0);
    CHECK(cli({"verify", "--suite", "nonsense"}).code == 2);
    const CliResult r = cli({"verify", "--suite", "limits"});
    CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("optimizer config file parsing") {
    OptimizerConfig cfg = parse_optimizer_config(
        "# comment\n"
        "grid_theta = 6\n"
        "simplex_tol = 1e-10\n"
        "box_theta_pad = 42.5\n");
    CHECK(cfg.grid_theta == 6);
    CHECK(cfg.simplex_tol == 1e-10);
    CHECK(cfg.box_theta_pad == 42.5);
    CHECK(cfg.grid_alpha1 == 12);  // untouched default

    CHECK_THROWS_AS(parse_optimizer_config("nonsense_key = 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_optimizer_config("grid_theta == 5\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_optimizer_config("grid_theta\n"),
                    std::invalid_argument);
}

TEST_CASE("config file flag and environment fallback") {
    const std::string path = temp_path("opt.cfg");
    {
        std::ofstream f(path);
        f << "grid_alpha1 = 4\ngrid_alpha2 = 4\ngrid_theta = 4\n";
    }
    CHECK(cli({"bounds", "--probs", "0.3", "--config", path}).code == 0);
    CHECK(cli({"bounds", "--probs", "0.3", "--config", "/nonexistent.cfg"}).code ==
          3);

    setenv("TVBOUNDS_CONFIG", path.c_str(), 1);
    CHECK(cli({"bounds", "--probs", "0.3"}).code == 0);
    setenv("TVBOUNDS_CONFIG", "/nonexistent.cfg", 1);
    CHECK(cli({"bounds", "--probs", "0.3"}).code == 3);
    unsetenv("TVBOUNDS_CONFIG");

    {
        std::ofstream f(path);
        f << "grid_alpha1 = oops\n";
    }
    CHECK(cli({"bounds", "--probs", "0.3", "--config", path}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("--opt overrides configuration values") {
    OptimizerConfig cfg = parse_optimizer_config("grid_theta = 4\n");
    CHECK(cfg.grid_theta == 4);
    cfg = parse_optimizer_config("grid_theta = 9\n", cfg);
    CHECK(cfg.grid_theta == 9);

    CHECK(cli({"bounds", "--probs", "0.3", "--opt", "grid_theta=5", "--opt",
               "refine_starts=2"}).code == 0);
    CHECK(cli({"bounds", "--probs", "0.3", "--opt", "bogus=5"}).code == 2);
    CHECK(cli({"bounds", "--probs", "0.3", "--opt", "grid_theta=0"}).code == 2);

    const std::string path = temp_path("opt_override.cfg");
    {
        std::ofstream f(path);
        f << "grid_theta = 64\nsimplex_max_iter = 1\n";
    }
    // The flag-overridden run must differ in cost, not in validity.
    const CliResult heavy = cli({"bounds", "--probs", "0.4,0.6", "--config", path,
                                 "--format", "json"});
    const CliResult light =
        cli({"bounds", "--probs", "0.4,0.6", "--config", path, "--opt",
             "grid_theta=3", "--format", "json"});
    CHECK(heavy.code == 0);
    CHECK(light.code == 0);
    std::remove(path.c_str());
}

TEST_CASE("config validation bounds") {
    CHECK_THROWS_AS(parse_optimizer_config("grid_alpha1 = 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_optimizer_config("box_theta_lo = -1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_optimizer_config("simplex_tol = 0\n"),
                    std::invalid_argument);
}

TEST_CASE("sweep --format json renders gated nulls") {
    const CliResult r = cli({"sweep", "--lambda-min", "0.5", "--lambda-max", "2",
                             "--points", "3", "--variants", "closed",
                             "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][0]["k1_three"].is_null());
    CHECK(!j["rows"][0]["k1_closed"].is_null());
    CHECK(j["rows"][2]["lambda"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("verify output is reproducible for a fixed seed") {
    const CliResult a = cli({"verify", "--suite", "stein", "--seed", "99"});
    const CliResult b = cli({"verify", "--suite", "stein", "--seed", "99"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("bounds csv and table formats") {
    const CliResult csv = cli({"bounds", "--probs", "0.1,0.2", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("lambda,n,sum_p2,", 0) == 0);

    const CliResult table = cli({"bounds", "--probs", "0.1,0.2"});
    REQUIRE(table.code == 0);
    CHECK(table.out.find("exact_tv") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({}).code == 2);
}
