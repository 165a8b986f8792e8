#include "qsd/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qsd/io.hpp"

namespace qsd {

namespace {

using io::json;

BlochVector parse_vector(const std::string& text) {
    BlochVector v;
    char tail = 0;
    std::istringstream in(text);
    char c1 = 0, c2 = 0;
    if (!(in >> v.x >> c1 >> v.y >> c2 >> v.z) || c1 != ',' || c2 != ',' || (in >> tail)) {
        throw CLI::ValidationError("expected a vector of the form x,y,z: '" + text + "'");
    }
    return v;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw CLI::ValidationError("cannot open file '" + path + "'");
    }
    return json::parse(in);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_vector(const BlochVector& v) {
    return "(" + format_double(v.x) + ", " + format_double(v.y) + ", " + format_double(v.z) + ")";
}

// Per-subcommand inputs, filled by CLI11 before the callback runs.
struct Args {
    std::string r0_text, r1_text;
    std::string scenario_path, detector_path, responses_path, records_path;
    bool as_json = false;
    int grid = 64;
    int refine = 3;
    std::uint64_t rounds = 100000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

Scenario scenario_from_args(const Args& a) {
    if (!a.scenario_path.empty()) {
        return io::scenario_from_json(load_json(a.scenario_path));
    }
    if (a.r0_text.empty() || a.r1_text.empty()) {
        throw CLI::ValidationError("provide either --scenario FILE or both --r0 and --r1");
    }
    return build_scenario(parse_vector(a.r0_text), parse_vector(a.r1_text));
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void add_pair_flags(CLI::App* cmd, Args& a, bool required) {
    auto* r0 = cmd->add_option("--r0", a.r0_text, "Bloch vector of rho_0 as x,y,z");
    auto* r1 = cmd->add_option("--r1", a.r1_text, "Bloch vector of rho_1 as x,y,z");
    if (required) {
        r0->required();
        r1->required();
    }
}

void add_scenario_flags(CLI::App* cmd, Args& a) {
    add_pair_flags(cmd, a, false);
    cmd->add_option("--scenario", a.scenario_path, "scenario JSON document")
        ->excludes("--r0")
        ->excludes("--r1");
}

void run_bound(const Args& a) {
    const BlochVector r0 = parse_vector(a.r0_text);
    const BlochVector r1 = parse_vector(a.r1_text);
    const double bound = helstrom_bound(r0, r1);
    if (a.as_json) {
        emit(json{{"helstrom_bound", bound}});
    } else {
        std::cout << format_double(bound) << "\n";
    }
}

void run_scenario(const Args& a) {
    const Scenario s = scenario_from_args(a);
    if (a.as_json) {
        emit(io::scenario_to_json(s));
        return;
    }
    std::cout << "p         = " << format_double(s.p) << "\n"
              << "delta_hat = " << format_vector(s.delta_hat) << "\n"
              << "r_B       = " << format_vector(s.r_b) << "\n"
              << "residual  = " << format_double(verify_ensemble_equality(s)) << "\n";
}

void run_steer(const Args& a) {
    const Scenario s = scenario_from_args(a);
    const JointPureState psi = purify(bloch_to_density(s.r_b));
    const SteeringMeasurement m0 = steering_measurement(psi, ensemble_components(s, 0));
    const SteeringMeasurement m1 = steering_measurement(psi, ensemble_components(s, 1));

    json amps = json::array();
    for (const Complex& c : psi.amp) {
        amps.push_back(json::array({c.real(), c.imag()}));
    }
    emit(json{{"scenario", io::scenario_to_json(s)},
              {"purification", amps},
              {"m0", io::steering_to_json(m0)},
              {"m1", io::steering_to_json(m1)}});
}

void run_scan(const Args& a) {
    const Scenario s = scenario_from_args(a);
    const ScanResult r = scan(s, a.grid, a.refine);
    if (a.as_json) {
        emit(io::scan_to_json(r));
        return;
    }
    std::cout << "min_error      = " << format_double(r.min_error) << "\n"
              << "helstrom_bound = " << format_double(helstrom_bound(s.r0, s.r1)) << "\n"
              << "argmin a       = " << format_double(r.best_a) << "\n"
              << "argmin b       = " << format_vector(r.best_b) << "\n"
              << "max |gap|      = " << format_double(r.max_abs_gap) << "\n"
              << "detectors      = " << r.detectors_scanned << "\n";
}

void run_blackbox(const Args& a) {
    const Scenario s = scenario_from_args(a);
    const BlackBoxResponse b = io::blackbox_from_json(load_json(a.responses_path));
    const SignallingReport r = blackbox_report(b, s);
    if (a.as_json) {
        emit(io::report_to_json(r));
        return;
    }
    auto iv = [](const Interval& v) {
        return v.is_point() ? format_double(v.lo)
                            : "[" + format_double(v.lo) + ", " + format_double(v.hi) + "]";
    };
    std::cout << "D00            = " << iv(r.d00) << "\n"
              << "D11            = " << iv(r.d11) << "\n"
              << "gap            = " << iv(r.gap) << "\n"
              << "error_rate     = " << format_double(r.error_rate) << "\n"
              << "nosignal_floor = " << format_double(r.nosignal_floor) << "\n"
              << "helstrom_floor = " << format_double(r.helstrom_floor) << "\n"
              << "signalling     = " << (r.signalling ? "true" : "false") << "\n";
}

void run_simulate(const Args& a) {
    const Scenario s = scenario_from_args(a);
    SimConfig config;
    config.scenario = s;
    config.detector = a.detector_path.empty()
                          ? helstrom_detector(s.r0, s.r1)
                          : io::resolve_detector(
                                io::detector_doc_from_json(load_json(a.detector_path)), s);
    config.rounds = a.rounds;
    config.seed = a.seed;
    config.threads = a.threads;

    const SimReport report = run_protocol(config);
    if (!a.records_path.empty()) {
        std::ofstream out(a.records_path);
        if (!out) {
            throw CLI::ValidationError("cannot open records file '" + a.records_path + "'");
        }
        write_records(report, out);
    }
    if (a.as_json) {
        emit(io::sim_report_to_json(report));
        return;
    }
    std::cout << "rounds        = " << report.rounds << "\n"
              << "e_hat         = " << format_double(report.e_hat) << " (se "
              << format_double(report.se_e_hat) << ")\n"
              << "empirical gap = " << format_double(empirical_gap(report)) << "\n"
              << "elapsed       = " << format_double(report.elapsed_seconds) << " s\n";
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Qubit state-discrimination toolkit: Helstrom bounds, equal-average "
                 "ensembles, steering measurements, no-signalling analysis, and "
                 "Monte-Carlo protocol simulation"};
    app.require_subcommand(1);
    Args a;

    CLI::App* bound = app.add_subcommand("bound", "minimum-error probability for a state pair");
    add_pair_flags(bound, a, true);
    bound->add_flag("--json", a.as_json, "emit JSON");
    bound->callback([&a] { run_bound(a); });

    CLI::App* scenario =
        app.add_subcommand("scenario", "build the equal-average two-ensemble scenario");
    add_scenario_flags(scenario, a);
    scenario->add_flag("--json", a.as_json, "emit the scenario document");
    scenario->callback([&a] { run_scenario(a); });

    CLI::App* steer =
        app.add_subcommand("steer", "purification and Alice's steering measurements");
    add_scenario_flags(steer, a);
    steer->callback([&a] { run_steer(a); });

    CLI::App* scan_cmd = app.add_subcommand("scan", "grid-search detectors for minimum error");
    add_scenario_flags(scan_cmd, a);
    scan_cmd->add_option("--grid", a.grid, "grid points per axis")
        ->check(CLI::Range(8, 1024))
        ->capture_default_str();
    scan_cmd->add_option("--refine", a.refine, "local refinement levels")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
    scan_cmd->add_flag("--json", a.as_json, "emit JSON");
    scan_cmd->callback([&a] { run_scan(a); });

    CLI::App* blackbox =
        app.add_subcommand("blackbox", "bound-chain analysis of a black-box detector");
    add_scenario_flags(blackbox, a);
    blackbox->add_option("--responses", a.responses_path, "black-box response JSON document")
        ->required();
    blackbox->add_flag("--json", a.as_json, "emit the signalling report document");
    blackbox->callback([&a] { run_blackbox(a); });

    CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo protocol run");
    add_scenario_flags(simulate, a);
    simulate->add_option("--detector", a.detector_path,
                         "detector JSON document (default: the optimal detector)");
    simulate->add_option("--rounds", a.rounds, "number of protocol rounds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--seed", a.seed, "RNG seed")->capture_default_str();
    simulate->add_option("--threads", a.threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--records", a.records_path, "write per-round CSV records to this file");
    simulate->add_flag("--json", a.as_json, "emit the report document");
    simulate->callback([&a] { run_simulate(a); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qsd
