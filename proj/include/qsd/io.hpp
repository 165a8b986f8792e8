#pragma once

#include <json.hpp>

#include "qsd/nosignal.hpp"
#include "qsd/scan.hpp"
#include "qsd/scenario.hpp"
#include "qsd/simulate.hpp"
#include "qsd/steering.hpp"

namespace qsd::io {

using nlohmann::json;

/// Matrices serialize row-major with [re, im] entries.
json matrix_to_json(const Mat2& m);
Mat2 matrix_from_json(const json& j);

json bloch_to_json(const BlochVector& v);
BlochVector bloch_from_json(const json& j);

json scenario_to_json(const Scenario& s);

/// Accepts documents carrying only r0/r1 and recomputes the rest. Documents
/// that also carry p/delta_hat/r_B are checked against the recomputation and
/// rejected (InvalidState) when any field deviates by more than 1e-9.
Scenario scenario_from_json(const json& j);

/// Detector document: {"kind":"povm","a":...,"b":[x,y,z]} or {"kind":"helstrom"}.
struct DetectorDoc {
    bool helstrom = false;
    double a = 0.0;
    BlochVector b;
};

json detector_to_json(const BinaryPovm& d);
DetectorDoc detector_doc_from_json(const json& j);
BinaryPovm resolve_detector(const DetectorDoc& doc, const Scenario& s);

json blackbox_to_json(const BlackBoxResponse& b);
BlackBoxResponse blackbox_from_json(const json& j);

/// Interval fields serialize as [lo, hi].
json report_to_json(const SignallingReport& r);
SignallingReport report_from_json(const json& j);

json steering_to_json(const SteeringMeasurement& m);
SteeringMeasurement steering_from_json(const json& j);

json sim_report_to_json(const SimReport& r);
/// Restores the summary fields; per-round records travel separately as CSV.
SimReport sim_report_from_json(const json& j);

json scan_to_json(const ScanResult& r);
ScanResult scan_from_json(const json& j);

}  // namespace qsd::io
