#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aoi/cli.hpp"

namespace fs = std::filesystem;
using namespace aoi;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::initializer_list<std::string> args) {
    std::vector<std::string> holder{"aoikit"};
    holder.insert(holder.end(), args);
    std::vector<const char*> argv;
    argv.reserve(holder.size());
    for (const std::string& s : holder) argv.push_back(s.c_str());
    std::ostringstream out, err;
    int code = cli::main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("aoikit_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("report prints the closed-form age") {
    CliResult r = run_cli({"report", "--protocol", "sa", "--n", "10", "--q", "0.1",
                           "--tpk", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("26.3117479171") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli({"report", "--bogus-flag"}).code == 1);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"report", "--protocol", "csma"}).code == 1);
    CliResult r = run_cli({"report", "--q", "0.1", "--pi", "0.2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("at most one") != std::string::npos);
    CHECK(run_cli({"report", "--protocol", "sa", "--n", "0"}).code == 1);
    CHECK(run_cli({"simulate", "--protocol", "sa", "--rounds", "10", "--warmup",
                   "20"}).code == 1);
}

TEST_CASE("help exits cleanly") {
    CliResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("report") != std::string::npos);
}

TEST_CASE("sweep writes a versioned deterministic table") {
    fs::path dir = fresh_dir("sweep");
    auto args = {std::string("sweep"), std::string("--protocol"), std::string("fsa"),
                 std::string("--n"), std::string("10"), std::string("--k"),
                 std::string("5"), std::string("--tpk"), std::string("1"),
                 std::string("--probs"), std::string("0.1,0.2,0.3"),
                 std::string("--out-dir"), dir.string()};
    CliResult r = run_cli(args);
    CHECK(r.code == 0);
    std::string first = slurp(dir / "sweep.csv");
    CHECK(first.rfind("# aoikit sweep.v1\n", 0) == 0);
    CHECK(first.find("protocol,access_prob,load,avg_aoi,avg_power") != std::string::npos);
    CHECK(std::count(first.begin(), first.end(), '\n') == 5);  // header x2 + 3 rows

    CliResult again = run_cli(args);
    CHECK(again.code == 0);
    CHECK(slurp(dir / "sweep.csv") == first);
    fs::remove_all(dir);
}

TEST_CASE("json output carries the schema token and typed rows") {
    fs::path dir = fresh_dir("json");
    CliResult r = run_cli({"sweep", "--protocol", "sa", "--n", "10", "--tpk", "1",
                           "--probs", "0.1,0.2", "--format", "json", "--out-dir",
                           dir.string()});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(slurp(dir / "sweep.json"));
    CHECK(j.at("schema") == "sweep.v1");
    REQUIRE(j.at("rows").size() == 2);
    CHECK(j.at("rows")[0].at("protocol") == "sa");
    CHECK(j.at("rows")[0].at("avg_aoi").get<double>() ==
          doctest::Approx(26.311747917131964).epsilon(1e-12));
    fs::remove_all(dir);
}

TEST_CASE("validate compares simulation to the closed form") {
    fs::path dir = fresh_dir("validate");
    CliResult r = run_cli({"validate", "--protocol", "sa", "--n", "5", "--q", "0.2",
                           "--tpk", "1", "--rounds", "20000", "--warmup", "100",
                           "--out-dir", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("all 1 rows pass") != std::string::npos);
    std::string csv = slurp(dir / "validate.csv");
    CHECK(csv.rfind("# aoikit validate.v1\n", 0) == 0);
    CHECK(csv.find(",true,") != std::string::npos);
    CHECK(csv.find(",ok\n") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("simulate reports a no-update outcome without failing") {
    fs::path dir = fresh_dir("noupdate");
    CliResult r = run_cli({"simulate", "--protocol", "sa", "--n", "2", "--q", "1.0",
                           "--tpk", "1", "--rounds", "2000", "--warmup", "100",
                           "--out", (dir / "s.csv").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("no successful update") != std::string::npos);
    CHECK(slurp(dir / "s.csv").find("no_update") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("figure preset files are byte-stable") {
    fs::path dir = fresh_dir("fig4a");
    CliResult r = run_cli({"figures", "fig4a", "--out-dir", dir.string()});
    CHECK(r.code == 0);
    std::string first = slurp(dir / "fig4a.csv");
    CHECK(first.rfind("# aoikit fig4a.v1\n", 0) == 0);
    CliResult again = run_cli({"figures", "fig4a", "--out-dir", dir.string()});
    CHECK(again.code == 0);
    CHECK(slurp(dir / "fig4a.csv") == first);
    fs::remove_all(dir);

    CHECK(run_cli({"figures", "fig99"}).code == 1);
}

TEST_CASE("config file seeds the spec and flags override it") {
    fs::path dir = fresh_dir("config");
    fs::path cfg = dir / "exp.json";
    {
        std::ofstream f(cfg);
        f << R"({"protocol": "fsa", "n": 5, "k": 3, "access_prob": 0.4, "tpk": 1.0})";
    }
    CliResult r = run_cli({"report", "--config", cfg.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("fsa N=5 k=3 prob=0.4") != std::string::npos);

    r = run_cli({"report", "--config", cfg.string(), "--n", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fsa N=7 k=3") != std::string::npos);

    CHECK(run_cli({"report", "--config", (dir / "missing.json").string()}).code == 1);
    {
        std::ofstream f(cfg);
        f << "{ definitely not json";
    }
    CHECK(run_cli({"report", "--config", cfg.string()}).code == 1);
    fs::remove_all(dir);
}

TEST_CASE("output directory falls back to the environment variable") {
    fs::path dir = fresh_dir("envdir");
    setenv(cli::kOutDirEnvVar, dir.string().c_str(), 1);
    CliResult r = run_cli({"sweep", "--protocol", "sa", "--n", "10", "--tpk", "1",
                           "--probs", "0.25"});
    unsetenv(cli::kOutDirEnvVar);
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "sweep.csv"));
    fs::remove_all(dir);
}

TEST_CASE("unwritable output locations exit with the runtime code") {
    CliResult r = run_cli({"sweep", "--protocol", "sa", "--n", "10", "--tpk", "1",
                           "--probs", "0.25", "--out-dir",
                           "/nonexistent_dir_for_tests/deep"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("timing resolution order: overrides, then payload") {
    cli::ExperimentSpec spec;
    TimingModel t = cli::spec_timing(spec);  // default 128-byte payload
    CHECK(t.t_pk == doctest::Approx(237.0 + 2.0 / 3.0).epsilon(1e-12));
    CHECK(t.t_r == doctest::Approx(52.0 + 2.0 / 3.0).epsilon(1e-12));

    spec.t_pk_override = 3.0;
    t = cli::spec_timing(spec);
    CHECK(t.t_pk == 3.0);
    CHECK(t.t_r == 3.0);  // normalized runs default the request slot to t_pk

    spec.t_r_override = 0.5;
    t = cli::spec_timing(spec);
    CHECK(t.t_pk == 3.0);
    CHECK(t.t_r == 0.5);

    spec.t_pk_override.reset();
    spec.payload_bytes = 16;
    t = cli::spec_timing(spec);
    CHECK(t.t_pk == doctest::Approx(88.0 + 1.0 / 3.0).epsilon(1e-12));
    CHECK(t.t_r == 0.5);
}

TEST_CASE("frontier command emits one row per budget") {
    fs::path dir = fresh_dir("frontier");
    CliResult r = run_cli({"frontier", "--protocol", "sa", "--n", "10", "--tpk", "1",
                           "--budgets", "0.05,0.1,0.3", "--out-dir", dir.string()});
    CHECK(r.code == 0);
    std::string csv = slurp(dir / "frontier.csv");
    CHECK(csv.rfind("# aoikit frontier.v1\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK(csv.find("protocol,n,power_budget,best_prob,min_aoi,binding") !=
          std::string::npos);
    fs::remove_all(dir);
}
