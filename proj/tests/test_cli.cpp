#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "qsd/io.hpp"

using namespace qsd;
using io::json;

namespace {

// The binary under test comes from the build system via QSDKIT_CLI.
const char* cli_path() { return std::getenv("QSDKIT_CLI"); }

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run(const std::string& args) {
    const std::string command = std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    std::array<char, 4096> buffer;
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const json& doc) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << doc.dump();
    return path;
}

}  // namespace

TEST_CASE("cli runs end to end" * doctest::skip(cli_path() == nullptr)) {
    SUBCASE("bound prints zero for orthogonal states") {
        const CliResult r = run("bound --r0 0,0,1 --r1 0,0,-1");
        CHECK(r.exit_code == 0);
        CHECK(r.output == "0\n");
    }

    SUBCASE("bound emits JSON on request") {
        const CliResult r = run("bound --r0 1,0,0 --r1 0,0,1 --json");
        CHECK(r.exit_code == 0);
        const json doc = json::parse(r.output);
        CHECK(doc.at("helstrom_bound").get<double>() == doctest::Approx(0.146447));
    }

    SUBCASE("scenario document matches the library") {
        const CliResult r = run("scenario --r0 0.8,0,0 --r1 -0.8,0,0 --json");
        CHECK(r.exit_code == 0);
        const Scenario s = io::scenario_from_json(json::parse(r.output));
        CHECK(s.p == doctest::Approx(5.0 / 9.0));
        CHECK(s.delta_hat.x == doctest::Approx(-1.0));
    }

    SUBCASE("degenerate scenarios exit with the domain code") {
        CHECK(run("scenario --r0 0.5,0,0 --r1 0.5,0,0").exit_code == 1);
        CHECK(run("bound --r0 2,0,0 --r1 0,0,1").exit_code == 1);
    }

    SUBCASE("usage problems exit with the usage code") {
        CHECK(run("scenario --r0 0.5,0,0").exit_code == 2);
        CHECK(run("bound --r0 0,0,1 --r1 nonsense").exit_code == 2);
        CHECK(run("frobnicate").exit_code == 2);
        CHECK(run("scan --r0 1,0,0 --r1 0,0,1 --grid 4").exit_code == 2);
    }

    SUBCASE("steer reports the steering weights") {
        const CliResult r = run("steer --r0 0.8,0,0 --r1 -0.8,0,0");
        CHECK(r.exit_code == 0);
        const json doc = json::parse(r.output);
        const SteeringMeasurement m0 = io::steering_from_json(doc.at("m0"));
        REQUIRE(m0.outcomes.size() == 2);
        CHECK(m0.outcomes[0].target_weight == doctest::Approx(5.0 / 9.0));
        CHECK(m0.outcomes[1].target_weight == doctest::Approx(4.0 / 9.0));
        const Scenario s = io::scenario_from_json(doc.at("scenario"));
        CHECK(s.p == doctest::Approx(5.0 / 9.0));
    }

    SUBCASE("blackbox flags the perfect discriminator") {
        const auto scenario_path = write_temp(
            "qsdkit_cli_scenario.json",
            json{{"r0", {0.6, 0.0, 0.0}}, {"r1", {-0.6, 0.0, 0.0}}});
        const auto responses_path = write_temp(
            "qsdkit_cli_responses.json",
            json{{"p0_rho0", 1.0},
                 {"p0_rho1", 0.0},
                 {"p0_delta_plus", nullptr},
                 {"p0_delta_minus", nullptr}});
        const CliResult r = run("blackbox --scenario " + scenario_path.string() +
                                " --responses " + responses_path.string() + " --json");
        CHECK(r.exit_code == 0);
        const SignallingReport report = io::report_from_json(json::parse(r.output));
        CHECK(report.signalling);
        CHECK(report.gap.lo == doctest::Approx(0.25));
        CHECK(report.error_rate == 0.0);
        CHECK(report.nosignal_floor == doctest::Approx(0.2));
    }

    SUBCASE("blackbox rejects malformed response files") {
        const auto bad = write_temp("qsdkit_cli_bad.json", json::array({1, 2, 3}));
        const CliResult r = run("blackbox --r0 0.6,0,0 --r1 -0.6,0,0 --responses " +
                                bad.string());
        CHECK(r.exit_code == 2);
        CHECK(run("blackbox --r0 0.6,0,0 --r1 -0.6,0,0 --responses /no/such/file.json")
                  .exit_code == 2);
    }

    SUBCASE("simulate is reproducible and writes records") {
        const auto records_path =
            std::filesystem::temp_directory_path() / "qsdkit_cli_records.csv";
        const std::string flags = "simulate --r0 0.6,0,0 --r1 -0.6,0,0 --rounds 50 --seed 7 "
                                  "--records " + records_path.string() + " --json";
        const CliResult first = run(flags);
        const CliResult second = run(flags);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);

        const SimReport report = io::sim_report_from_json(json::parse(first.output));
        CHECK(report.rounds == 50);

        std::ifstream records(records_path);
        REQUIRE(records.good());
        std::string line;
        int lines = 0;
        while (std::getline(records, line)) {
            ++lines;
        }
        CHECK(lines == 51);
    }

    SUBCASE("simulate accepts a detector document") {
        const auto detector_path = write_temp(
            "qsdkit_cli_detector.json",
            json{{"kind", "povm"}, {"a", 0.5}, {"b", {0.0, 0.0, 0.0}}});
        const CliResult r = run("simulate --r0 0.6,0,0 --r1 -0.6,0,0 --rounds 400 --seed 3 "
                                "--detector " + detector_path.string() + " --json");
        CHECK(r.exit_code == 0);
        const SimReport report = io::sim_report_from_json(json::parse(r.output));
        // A coin-flip detector errs about half the time.
        CHECK(report.e_hat > 0.35);
        CHECK(report.e_hat < 0.65);
    }

    SUBCASE("scan stays above the bound") {
        const CliResult r = run("scan --r0 1,0,0 --r1 0,0,1 --grid 8 --refine 1 --json");
        CHECK(r.exit_code == 0);
        const ScanResult result = io::scan_from_json(json::parse(r.output));
        const double bound = helstrom_bound({1, 0, 0}, {0, 0, 1});
        CHECK(result.min_error >= bound - 1e-12);
        CHECK(result.max_abs_gap <= 1e-12);
    }
}
