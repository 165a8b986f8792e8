#include "qsd/io.hpp"

#include <cmath>
#include <string>

namespace qsd::io {

namespace {

constexpr double kDocumentTol = 1e-9;

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json interval_to_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

Interval interval_from_json(const json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json grid2_to_json(const std::array<std::array<double, 2>, 2>& g) {
    return json{{"d00", g[0][0]}, {"d10", g[1][0]}, {"d01", g[0][1]}, {"d11", g[1][1]}};
}

std::array<std::array<double, 2>, 2> grid2_from_json(const json& j) {
    std::array<std::array<double, 2>, 2> g{};
    auto read = [&j](const char* key) {
        const json& v = j.at(key);
        return v.is_null() ? std::nan("") : v.get<double>();
    };
    g[0][0] = read("d00");
    g[1][0] = read("d10");
    g[0][1] = read("d01");
    g[1][1] = read("d11");
    return g;
}

}  // namespace

json matrix_to_json(const Mat2& m) {
    return json::array({json::array({complex_to_json(m.e00), complex_to_json(m.e01)}),
                        json::array({complex_to_json(m.e10), complex_to_json(m.e11)})});
}

Mat2 matrix_from_json(const json& j) {
    return {complex_from_json(j.at(0).at(0)), complex_from_json(j.at(0).at(1)),
            complex_from_json(j.at(1).at(0)), complex_from_json(j.at(1).at(1))};
}

json bloch_to_json(const BlochVector& v) { return json::array({v.x, v.y, v.z}); }

BlochVector bloch_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw InvalidState("expected a 3-element Bloch vector array");
    }
    return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

json scenario_to_json(const Scenario& s) {
    return json{{"r0", bloch_to_json(s.r0)},
                {"r1", bloch_to_json(s.r1)},
                {"p", s.p},
                {"delta_hat", bloch_to_json(s.delta_hat)},
                {"r_B", bloch_to_json(s.r_b)}};
}

Scenario scenario_from_json(const json& j) {
    const Scenario s = build_scenario(bloch_from_json(j.at("r0")), bloch_from_json(j.at("r1")));

    double residual = 0.0;
    if (j.contains("p")) {
        residual = std::max(residual, std::abs(j.at("p").get<double>() - s.p));
    }
    if (j.contains("delta_hat")) {
        residual = std::max(residual, (bloch_from_json(j.at("delta_hat")) - s.delta_hat).norm());
    }
    if (j.contains("r_B")) {
        residual = std::max(residual, (bloch_from_json(j.at("r_B")) - s.r_b).norm());
    }
    if (residual > kDocumentTol) {
        throw InvalidState("scenario document inconsistent with its r0/r1 (residual " +
                           std::to_string(residual) + ")");
    }
    return s;
}

json detector_to_json(const BinaryPovm& d) {
    const auto [a, b] = povm_params(d);
    return json{{"kind", "povm"}, {"a", a}, {"b", bloch_to_json(b)}};
}

DetectorDoc detector_doc_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "helstrom") {
        return {true, 0.0, {}};
    }
    if (kind == "povm") {
        return {false, j.at("a").get<double>(), bloch_from_json(j.at("b"))};
    }
    throw InvalidState("unknown detector kind '" + kind + "'");
}

BinaryPovm resolve_detector(const DetectorDoc& doc, const Scenario& s) {
    if (doc.helstrom) {
        return helstrom_detector(s.r0, s.r1);
    }
    return povm_from_params(doc.a, doc.b);
}

json blackbox_to_json(const BlackBoxResponse& b) {
    json j{{"p0_rho0", b.p0_rho0}, {"p0_rho1", b.p0_rho1}};
    j["p0_delta_plus"] = b.p0_delta_plus ? json(*b.p0_delta_plus) : json(nullptr);
    j["p0_delta_minus"] = b.p0_delta_minus ? json(*b.p0_delta_minus) : json(nullptr);
    return j;
}

BlackBoxResponse blackbox_from_json(const json& j) {
    BlackBoxResponse b;
    b.p0_rho0 = j.at("p0_rho0").get<double>();
    b.p0_rho1 = j.at("p0_rho1").get<double>();
    if (j.contains("p0_delta_plus") && !j.at("p0_delta_plus").is_null()) {
        b.p0_delta_plus = j.at("p0_delta_plus").get<double>();
    }
    if (j.contains("p0_delta_minus") && !j.at("p0_delta_minus").is_null()) {
        b.p0_delta_minus = j.at("p0_delta_minus").get<double>();
    }
    for (const double v : {b.p0_rho0, b.p0_rho1, b.p0_delta_plus.value_or(0.0),
                           b.p0_delta_minus.value_or(0.0)}) {
        if (v < 0.0 || v > 1.0) {
            throw InvalidState("black-box probability outside [0, 1]");
        }
    }
    return b;
}

json report_to_json(const SignallingReport& r) {
    return json{{"d00", interval_to_json(r.d00)},
                {"d10", interval_to_json(r.d10)},
                {"d01", interval_to_json(r.d01)},
                {"d11", interval_to_json(r.d11)},
                {"gap", interval_to_json(r.gap)},
                {"error_rate", r.error_rate},
                {"nosignal_floor", r.nosignal_floor},
                {"helstrom_floor", r.helstrom_floor},
                {"checks",
                 {{"d00_dominates_main", r.checks.d00_dominates_main},
                  {"d11_dominates_main", r.checks.d11_dominates_main},
                  {"no_signalling_satisfiable", r.checks.no_signalling_satisfiable},
                  {"success_sum_bounded", r.checks.success_sum_bounded},
                  {"error_above_nosignal_floor", r.checks.error_above_nosignal_floor},
                  {"error_above_helstrom_floor", r.checks.error_above_helstrom_floor}}},
                {"signalling", r.signalling}};
}

SignallingReport report_from_json(const json& j) {
    SignallingReport r;
    r.d00 = interval_from_json(j.at("d00"));
    r.d10 = interval_from_json(j.at("d10"));
    r.d01 = interval_from_json(j.at("d01"));
    r.d11 = interval_from_json(j.at("d11"));
    r.gap = interval_from_json(j.at("gap"));
    r.error_rate = j.at("error_rate").get<double>();
    r.nosignal_floor = j.at("nosignal_floor").get<double>();
    r.helstrom_floor = j.at("helstrom_floor").get<double>();
    const json& c = j.at("checks");
    r.checks.d00_dominates_main = c.at("d00_dominates_main").get<bool>();
    r.checks.d11_dominates_main = c.at("d11_dominates_main").get<bool>();
    r.checks.no_signalling_satisfiable = c.at("no_signalling_satisfiable").get<bool>();
    r.checks.success_sum_bounded = c.at("success_sum_bounded").get<bool>();
    r.checks.error_above_nosignal_floor = c.at("error_above_nosignal_floor").get<bool>();
    r.checks.error_above_helstrom_floor = c.at("error_above_helstrom_floor").get<bool>();
    r.signalling = j.at("signalling").get<bool>();
    return r;
}

json steering_to_json(const SteeringMeasurement& m) {
    json outcomes = json::array();
    for (const SteeringOutcome& o : m.outcomes) {
        outcomes.push_back(json{{"element", matrix_to_json(o.element)},
                                {"weight", o.target_weight},
                                {"target", matrix_to_json(o.target_state)}});
    }
    return json{{"outcomes", outcomes}};
}

SteeringMeasurement steering_from_json(const json& j) {
    SteeringMeasurement m;
    for (const json& o : j.at("outcomes")) {
        m.outcomes.push_back({matrix_from_json(o.at("element")),
                              o.at("weight").get<double>(),
                              matrix_from_json(o.at("target"))});
    }
    return m;
}

json sim_report_to_json(const SimReport& r) {
    return json{{"rounds", r.rounds},
                {"e_hat", r.e_hat},
                {"se_e_hat", r.se_e_hat},
                {"d_hat", grid2_to_json(r.d_hat)},
                {"se_d_hat", grid2_to_json(r.se_d_hat)},
                {"choice_counts", r.choice_counts},
                {"component_counts", r.component_counts},
                {"component_errors", r.component_errors},
                {"component_error_rate",
                 {{"j0_main", r.component_error_rate[0][0]},
                  {"j0_flag", r.component_error_rate[0][1]},
                  {"j1_main", r.component_error_rate[1][0]},
                  {"j1_flag", r.component_error_rate[1][1]}}},
                {"empirical_gap", empirical_gap(r)},
                {"elapsed_seconds", r.elapsed_seconds}};
}

SimReport sim_report_from_json(const json& j) {
    SimReport r;
    r.rounds = j.at("rounds").get<std::uint64_t>();
    r.e_hat = j.at("e_hat").get<double>();
    r.se_e_hat = j.at("se_e_hat").get<double>();
    r.d_hat = grid2_from_json(j.at("d_hat"));
    r.se_d_hat = grid2_from_json(j.at("se_d_hat"));
    r.choice_counts = j.at("choice_counts").get<std::array<std::uint64_t, 2>>();
    r.component_counts =
        j.at("component_counts").get<std::array<std::array<std::uint64_t, 2>, 2>>();
    r.component_errors =
        j.at("component_errors").get<std::array<std::array<std::uint64_t, 2>, 2>>();
    const json& cer = j.at("component_error_rate");
    auto rate = [&cer](const char* key) {
        const json& v = cer.at(key);
        return v.is_null() ? std::nan("") : v.get<double>();
    };
    r.component_error_rate[0][0] = rate("j0_main");
    r.component_error_rate[0][1] = rate("j0_flag");
    r.component_error_rate[1][0] = rate("j1_main");
    r.component_error_rate[1][1] = rate("j1_flag");
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    return r;
}

json scan_to_json(const ScanResult& r) {
    return json{{"min_error", r.min_error},
                {"argmin", {{"kind", "povm"}, {"a", r.best_a}, {"b", bloch_to_json(r.best_b)}}},
                {"max_abs_gap", r.max_abs_gap},
                {"detectors_scanned", r.detectors_scanned}};
}

ScanResult scan_from_json(const json& j) {
    ScanResult r;
    r.min_error = j.at("min_error").get<double>();
    const DetectorDoc doc = detector_doc_from_json(j.at("argmin"));
    r.best_a = doc.a;
    r.best_b = doc.b;
    r.best_detector = povm_from_params(doc.a, doc.b);
    r.max_abs_gap = j.at("max_abs_gap").get<double>();
    r.detectors_scanned = j.at("detectors_scanned").get<std::uint64_t>();
    return r;
}

}  // namespace qsd::io
