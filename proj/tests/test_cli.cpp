#include <catch2/catch.hpp>

#include <cstdio>
#include <sstream>

#include <json.hpp> // vendored nlohmann, parse side only

#include "cli_runner.hpp"
#include "diracfac/evolution.hpp"
#include "diracfac/heat.hpp"

namespace {

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

} // namespace

TEST_CASE("cli: verify reports and exit codes") {
    const CliResult ok = run_cli("verify --family lambda");
    REQUIRE(ok.exit_code == 0);
    const auto doc = parse(ok.output);
    CHECK(doc["family"] == "lambda");
    CHECK(doc["order"] == 3);
    CHECK(doc["passed"] == true);
    CHECK(doc["identities"].size() >= 10);
    for (const auto& id : doc["identities"]) {
        CHECK(id.contains("name"));
        CHECK(id.contains("residual"));
    }

    CHECK(run_cli("verify --family sigma").exit_code == 0);
    CHECK(run_cli("verify --family quaternion").exit_code == 0);
    CHECK(run_cli("verify --family phi").exit_code == 0);
    CHECK(run_cli("verify --family chi").exit_code == 0);
    CHECK(run_cli("verify --family tau --n 6").exit_code == 0);

    // usage errors, including unknown flags
    CHECK(run_cli("verify --family bogus").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("verify --family sigma --frobnicate").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli: determinism with a fixed seed") {
    const std::string cmd = "verify --family sigma --seed 7 --trials 40";
    CHECK(run_cli(cmd).output == run_cli(cmd).output);

    const CliResult a = run_cli("enumerate --n 3 --out /tmp/diracfac_cat_a.json");
    const CliResult b = run_cli("enumerate --n 3 --out /tmp/diracfac_cat_b.json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(read_file("/tmp/diracfac_cat_a.json") == read_file("/tmp/diracfac_cat_b.json"));
    CHECK(a.output == b.output); // summary line

    const std::string ev = "evolve --n 2 --a 1 --t 0.3 --method exact --grid 128 --length 20";
    CHECK(run_cli(ev).output == run_cli(ev).output);
}

TEST_CASE("cli: enumerate catalog content") {
    const CliResult res = run_cli("enumerate --n 3 --out /tmp/diracfac_cat.json");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("member_phase_orbits=24") != std::string::npos);
    CHECK(res.output.find("unordered=648") != std::string::npos);

    const auto doc = parse(read_file("/tmp/diracfac_cat.json"));
    CHECK(doc["search_space"] == 162);
    CHECK(doc["unital_candidates"] == 45);
    CHECK(doc["counts"]["member_phase_orbits"] == 24);
    CHECK(doc["triples"].size() == 648);
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& t = doc["triples"][i];
        CHECK(t["passed"] == true);
        CHECK(t["order"] == 3);
        CHECK(t["matrices"].size() == 3);
        CHECK(t["matrices"][0]["rows"] == 3);
        CHECK(t["matrices"][0]["entries"].size() == 9);
    }

    CHECK(run_cli("enumerate --n 4").exit_code == 2);
}

TEST_CASE("cli: frac evaluates the displayed operator") {
    const CliResult res = run_cli("frac --kind half --a 1 --x 1 --check-power");
    REQUIRE(res.exit_code == 0);
    const auto doc = parse(res.output);
    CHECK(doc["kind"] == "half");
    const auto entries = doc["matrix"]["entries"]; // row-major [re, im] pairs
    const double inv_sqrt_pi = 0.5641895835477563;
    CHECK(entries[0][0].get<double>() == Approx(inv_sqrt_pi).margin(1e-15));  // (0,0) = 1/sqrt(pi)
    CHECK(entries[1][1].get<double>() == Approx(-1.0).margin(1e-15));         // (0,1) = -i
    CHECK(entries[2][1].get<double>() == Approx(1.0).margin(1e-15));          // (1,0) = +i
    CHECK(entries[3][0].get<double>() == Approx(-inv_sqrt_pi).margin(1e-15)); // (1,1)
    CHECK(doc["power_check"]["passed"] == true);
    CHECK(doc["power_check"]["max_relative_error"].get<double>() <= 1e-12);

    // without the flag the output is the bare matrix schema
    const CliResult bare = run_cli("frac --kind half --a 0 --x 1");
    REQUIRE(bare.exit_code == 0);
    const auto mat = parse(bare.output);
    CHECK(mat["rows"] == 2);
    CHECK(mat["entries"].size() == 4);

    CHECK(run_cli("frac --kind third --a 2 --x 1 --check-power").exit_code == 0);
    CHECK(run_cli("frac --kind nope --a 1 --x 1").exit_code == 2);
    CHECK(run_cli("frac --kind half --a -1 --x 1").exit_code == 2);
}

TEST_CASE("cli: evolve writes the snapshot schema") {
    const CliResult res =
        run_cli("evolve --n 3 --a 1 --t 0.2 --method exact --grid 128 --length 20 "
                "--init gaussian:sigma=1");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.rfind("x,component,re,im\n", 0) == 0);
    // 3 components x 128 points + header
    std::size_t lines = 0;
    for (char c : res.output)
        if (c == '\n') ++lines;
    CHECK(lines == 3 * 128 + 1);

    const CliResult scan = run_cli("evolve --n 2 --a 1 --p 1 --bch-scan");
    REQUIRE(scan.exit_code == 0);
    CHECK(scan.output.rfind("t,residual,slope\n", 0) == 0);
    const std::size_t last_comma = scan.output.find_last_of(',');
    const double slope = std::stod(scan.output.substr(last_comma + 1));
    CHECK(slope == Approx(3.0).margin(0.1));

    CHECK(run_cli("evolve --n 2 --method nope").exit_code == 2);
    CHECK(run_cli("evolve --n 2 --init tophat").exit_code == 2);
    CHECK(run_cli("evolve --n 2 --grid 100").exit_code == 2);
}

TEST_CASE("cli: evolve CSV values match a direct library call") {
    const CliResult res =
        run_cli("evolve --n 2 --a 1 --t 0.3 --method exact --grid 128 --length 20");
    REQUIRE(res.exit_code == 0);

    using namespace diracfac;
    const SpectralField f = SpectralField::gaussian(20.0, 128, 1.0);
    const VectorSpectralField phi =
        evolve(VectorSpectralField::uniform(f, 2), {2, 1.0, 0.3, PropagatorMethod::exact});
    const std::vector<Cx> c0 = phi.components[0].to_real_space();
    const std::vector<Cx> c1 = phi.components[1].to_real_space();

    std::istringstream lines(res.output);
    std::string line;
    std::getline(lines, line); // header
    std::size_t row = 0;
    while (std::getline(lines, line)) {
        double x, re, im;
        int component;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%d,%lf,%lf", &x, &component, &re, &im) == 4);
        const std::size_t j = row % 128;
        CHECK(x == Approx(20.0 * double(j) / 128.0).margin(1e-14));
        const Cx want = component == 0 ? c0[j] : c1[j];
        CHECK(re == Approx(want.real()).margin(1e-12));
        CHECK(im == Approx(want.imag()).margin(1e-12));
        ++row;
    }
    CHECK(row == 2 * 128);
}

TEST_CASE("cli: heat CSV values match a direct library call") {
    const CliResult res = run_cli("heat --n 2 --k 0 --t 0.4 --solver levy --grid 128 --length 20");
    REQUIRE(res.exit_code == 0);

    using namespace diracfac;
    const SpectralField f = SpectralField::gaussian(20.0, 128, 1.0);
    const std::vector<Cx> want = heat_solve_levy(HeatProblem(2, 0.0, f, 0.4)).to_real_space();

    std::istringstream lines(res.output);
    std::string line;
    std::getline(lines, line);
    std::size_t row = 0;
    while (std::getline(lines, line)) {
        double x, re, im;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &re, &im) == 3);
        CHECK(re == Approx(want[row].real()).margin(1e-12));
        CHECK(im == Approx(want[row].imag()).margin(1e-12));
        ++row;
    }
    CHECK(row == 128);
}

TEST_CASE("cli: heat solves and cross-validates") {
    const CliResult res = run_cli("heat --n 2 --k 1 --t 0.5 --solver both --grid 128 "
                                  "--out /tmp/diracfac_heat.csv");
    REQUIRE(res.exit_code == 0);
    const auto doc = parse(res.output);
    CHECK(doc["relative_l2_discrepancy"].get<double>() <= 1e-4);
    CHECK(doc["passed"] == true);
    const std::string csv = read_file("/tmp/diracfac_heat.csv");
    CHECK(csv.rfind("x,re,im\n", 0) == 0);

    CHECK(run_cli("heat --n 3 --k 0 --t 0.3 --solver levy --grid 128").exit_code == 0);
    CHECK(run_cli("heat --n 2 --k -1 --t 0.1").exit_code == 2);
}

TEST_CASE("cli: levy identity report and failure exit code") {
    const CliResult res = run_cli("levy --nu 1/3 --check-identity --c 1 --pmin 0.1 --pmax 10");
    REQUIRE(res.exit_code == 0);
    const auto doc = parse(res.output);
    CHECK(doc["nu"] == "1/3");
    CHECK(doc["max_error"].get<double>() <= 1e-6);
    CHECK(doc["passed"] == true);

    // the tolerance floor turns an otherwise-passing check into exit 1
    const CliResult fail = run_cli("levy --nu 1/2 --check-identity --c 1 --tol 1e-30");
    CHECK(fail.exit_code == 1);
    CHECK(parse(fail.output)["passed"] == false);
}
