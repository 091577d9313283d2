#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wsham/models.hpp"
#include "wsham/polynomial.hpp"
#include "wsham/quadric.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(WSHAM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("wsham_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("derive writes the surface and the step log") {
    const fs::path dir = fresh_dir("derive");
    REQUIRE(run_cli("derive kg1p1 --mass 0 --out " + dir.string()) == 0);

    const auto j = nlohmann::json::parse(slurp(dir / "surface.json"));
    CHECK(j.at("model") == "kg1p1");
    const wsham::ImplicitSurface s = wsham::ImplicitSurface::from_json(j.at("surface"));
    CHECK(wsham::max_coeff_difference(s.eta, wsham::kg_1p1(0.0).expected_surface.eta) <=
          1e-12);

    const std::string log = slurp(dir / "derivation.log");
    for (const char* step : {"(a)", "(b)", "(c)", "(d)", "(e)"})
        CHECK(log.find(step) != std::string::npos);
}

TEST_CASE("verify exit codes") {
    const fs::path dir = fresh_dir("verify");
    CHECK(run_cli("verify kg1p1 --mass 1 --samples 60 --seed 7 --out " + dir.string()) == 0);
    const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
    CHECK(report.at("pass") == true);
    CHECK(report.at("seed") == 7);

    // An impossible tolerance fails deterministically with exit 1.
    CHECK(run_cli("verify kg1p1 --samples 20 --tol 0 --out " + dir.string()) == 1);
}

TEST_CASE("simulate emits CSVs and flags CFL misconfiguration") {
    const fs::path dir = fresh_dir("simulate");
    REQUIRE(run_cli("simulate kg1p1 --mass 1 --k 2 --nodes 128 --T 2 --out " +
                    dir.string()) == 0);
    const std::string traj = slurp(dir / "trajectory.csv");
    CHECK(traj.rfind("t,node,phi,P0,P1,Pphi,eta\n", 0) == 0);
    const std::string diag = slurp(dir / "diagnostics.csv");
    CHECK(diag.rfind("t,energy,max_abs_eta\n", 0) == 0);

    CHECK(run_cli("simulate kg1p1 --nodes 64 --dt 1.0 --T 1 --out " + dir.string()) == 2);
    CHECK(run_cli("simulate nosuchmodel --out " + dir.string()) == 2);
    CHECK(run_cli("simulate ed1p1 --phi0 0.5 --out " + dir.string()) == 2);
}

TEST_CASE("identical configuration gives byte-identical outputs") {
    const fs::path a = fresh_dir("det_a");
    const fs::path b = fresh_dir("det_b");
    const std::string verify_args = "verify ed1p1 --c0 0.25 --samples 40 --seed 11 --out ";
    REQUIRE(run_cli(verify_args + a.string()) == 0);
    REQUIRE(run_cli(verify_args + b.string()) == 0);
    CHECK(slurp(a / "report.json") == slurp(b / "report.json"));

    const std::string sim_args = "simulate ed1p1 --nodes 64 --T 1 --f01 0.7 --out ";
    REQUIRE(run_cli(sim_args + a.string()) == 0);
    REQUIRE(run_cli(sim_args + b.string()) == 0);
    CHECK(slurp(a / "trajectory.csv") == slurp(b / "trajectory.csv"));
    CHECK(slurp(a / "diagnostics.csv") == slurp(b / "diagnostics.csv"));
    CHECK(slurp(a / "summary.json") == slurp(b / "summary.json"));
}
