#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qsd/discrimination.hpp"
#include "qsd/nosignal.hpp"
#include "qsd/qubit.hpp"
#include "qsd/scan.hpp"
#include "qsd/scenario.hpp"
#include "qsd/simulate.hpp"
#include "qsd/steering.hpp"

namespace py = pybind11;
using namespace qsd;

namespace {

BlochVector vector_from_sequence(const py::sequence& s) {
    if (py::len(s) != 3) {
        throw py::value_error("Bloch vector needs exactly three components");
    }
    return {s[0].cast<double>(), s[1].cast<double>(), s[2].cast<double>()};
}

Mat2 matrix_from_rows(const std::array<std::array<Complex, 2>, 2>& rows) {
    return {rows[0][0], rows[0][1], rows[1][0], rows[1][1]};
}

std::array<std::array<Complex, 2>, 2> matrix_rows(const Mat2& m) {
    return {{{m.e00, m.e01}, {m.e10, m.e11}}};
}

std::string format_vector(const BlochVector& v) {
    std::ostringstream out;
    out << "BlochVector(" << v.x << ", " << v.y << ", " << v.z << ")";
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Qubit state discrimination: Helstrom bounds, equal-average ensembles, "
              "steering, no-signalling analysis, and protocol simulation";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<BallViolation>(m, "BallViolation", m.attr("DomainError"));
    py::register_exception<InvalidState>(m, "InvalidState", m.attr("DomainError"));
    py::register_exception<DegenerateScenario>(m, "DegenerateScenario", m.attr("DomainError"));
    py::register_exception<MismatchedAverage>(m, "MismatchedAverage", m.attr("DomainError"));
    py::register_exception<NearSingularAverage>(m, "NearSingularAverage", m.attr("DomainError"));
    py::register_exception<ZeroProbability>(m, "ZeroProbability", m.attr("DomainError"));

    py::class_<BlochVector>(m, "BlochVector")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def(py::init(&vector_from_sequence))
        .def_readwrite("x", &BlochVector::x)
        .def_readwrite("y", &BlochVector::y)
        .def_readwrite("z", &BlochVector::z)
        .def("norm", &BlochVector::norm)
        .def("dot", &BlochVector::dot)
        .def("__repr__", &format_vector)
        .def("__iter__", [](const BlochVector& v) {
            return py::iter(py::make_tuple(v.x, v.y, v.z));
        });
    py::implicitly_convertible<py::sequence, BlochVector>();

    py::class_<Mat2>(m, "Matrix2")
        .def(py::init(&matrix_from_rows))
        .def_property_readonly("rows", &matrix_rows)
        .def("trace", &Mat2::trace)
        .def("adjoint", &Mat2::adjoint)
        .def("transpose", &Mat2::transpose)
        .def("hermiticity_error", &Mat2::hermiticity_error)
        .def("__add__", [](const Mat2& a, const Mat2& b) { return a + b; })
        .def("__sub__", [](const Mat2& a, const Mat2& b) { return a - b; })
        .def("__matmul__", [](const Mat2& a, const Mat2& b) { return a * b; })
        .def("__mul__", [](const Mat2& a, Complex s) { return a * s; })
        .def("__repr__", [](const Mat2& m2) {
            std::ostringstream out;
            out << "Matrix2([[" << m2.e00 << ", " << m2.e01 << "], [" << m2.e10 << ", "
                << m2.e11 << "]])";
            return out.str();
        });
    py::implicitly_convertible<py::sequence, Mat2>();

    py::class_<EigenPair2>(m, "EigenPair2")
        .def_readonly("values", &EigenPair2::values)
        .def_readonly("vectors", &EigenPair2::vectors);

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("r0", &Scenario::r0)
        .def_readonly("r1", &Scenario::r1)
        .def_readonly("p", &Scenario::p)
        .def_readonly("delta_hat", &Scenario::delta_hat)
        .def_readonly("r_b", &Scenario::r_b)
        .def("__repr__", [](const Scenario& s) {
            std::ostringstream out;
            out << "Scenario(p=" << s.p << ", delta_hat=" << format_vector(s.delta_hat) << ")";
            return out.str();
        });

    py::class_<WeightedPure>(m, "WeightedPure")
        .def_readonly("weight", &WeightedPure::weight)
        .def_readonly("state", &WeightedPure::state);

    py::class_<BinaryPovm>(m, "BinaryPovm")
        .def(py::init<Mat2, Mat2>(), py::arg("element0"), py::arg("element1"))
        .def_readonly("element0", &BinaryPovm::element0)
        .def_readonly("element1", &BinaryPovm::element1);

    py::class_<DetectorResponse>(m, "DetectorResponse")
        .def_readonly("p0", &DetectorResponse::p0)
        .def_readonly("p1", &DetectorResponse::p1);

    py::class_<JointPureState>(m, "JointPureState")
        .def_readonly("amp", &JointPureState::amp)
        .def("norm", &JointPureState::norm);

    py::class_<SteeringOutcome>(m, "SteeringOutcome")
        .def_readonly("element", &SteeringOutcome::element)
        .def_readonly("target_weight", &SteeringOutcome::target_weight)
        .def_readonly("target_state", &SteeringOutcome::target_state);

    py::class_<SteeringMeasurement>(m, "SteeringMeasurement")
        .def_readonly("outcomes", &SteeringMeasurement::outcomes);

    py::class_<Interval>(m, "Interval")
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi)
        .def("is_point", &Interval::is_point)
        .def("contains", &Interval::contains)
        .def("__repr__", [](const Interval& iv) {
            std::ostringstream out;
            out << "Interval(" << iv.lo << ", " << iv.hi << ")";
            return out.str();
        });

    py::class_<BlackBoxResponse>(m, "BlackBoxResponse")
        .def(py::init([](double p0_rho0, double p0_rho1, std::optional<double> dp,
                         std::optional<double> dm) {
                 return BlackBoxResponse{p0_rho0, p0_rho1, dp, dm};
             }),
             py::arg("p0_rho0"), py::arg("p0_rho1"), py::arg("p0_delta_plus") = py::none(),
             py::arg("p0_delta_minus") = py::none())
        .def_readwrite("p0_rho0", &BlackBoxResponse::p0_rho0)
        .def_readwrite("p0_rho1", &BlackBoxResponse::p0_rho1)
        .def_readwrite("p0_delta_plus", &BlackBoxResponse::p0_delta_plus)
        .def_readwrite("p0_delta_minus", &BlackBoxResponse::p0_delta_minus);

    py::class_<ChainChecks>(m, "ChainChecks")
        .def_readonly("d00_dominates_main", &ChainChecks::d00_dominates_main)
        .def_readonly("d11_dominates_main", &ChainChecks::d11_dominates_main)
        .def_readonly("no_signalling_satisfiable", &ChainChecks::no_signalling_satisfiable)
        .def_readonly("success_sum_bounded", &ChainChecks::success_sum_bounded)
        .def_readonly("error_above_nosignal_floor", &ChainChecks::error_above_nosignal_floor)
        .def_readonly("error_above_helstrom_floor", &ChainChecks::error_above_helstrom_floor);

    py::class_<SignallingReport>(m, "SignallingReport")
        .def_readonly("d00", &SignallingReport::d00)
        .def_readonly("d10", &SignallingReport::d10)
        .def_readonly("d01", &SignallingReport::d01)
        .def_readonly("d11", &SignallingReport::d11)
        .def_readonly("gap", &SignallingReport::gap)
        .def_readonly("error_rate", &SignallingReport::error_rate)
        .def_readonly("nosignal_floor", &SignallingReport::nosignal_floor)
        .def_readonly("helstrom_floor", &SignallingReport::helstrom_floor)
        .def_readonly("checks", &SignallingReport::checks)
        .def_readonly("signalling", &SignallingReport::signalling);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init([](const Scenario& s, const BinaryPovm& d, std::uint64_t rounds,
                         std::uint64_t seed, unsigned threads) {
                 return SimConfig{s, d, rounds, seed, threads};
             }),
             py::arg("scenario"), py::arg("detector"), py::arg("rounds"), py::arg("seed") = 0,
             py::arg("threads") = 1)
        .def_readwrite("rounds", &SimConfig::rounds)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("threads", &SimConfig::threads);

    py::class_<SimRecord>(m, "SimRecord")
        .def_readonly("round", &SimRecord::round)
        .def_readonly("alice_choice", &SimRecord::alice_choice)
        .def_readonly("alice_outcome", &SimRecord::alice_outcome)
        .def_readonly("bob_outcome", &SimRecord::bob_outcome)
        .def_readonly("correct", &SimRecord::correct);

    py::class_<SimReport>(m, "SimReport")
        .def_readonly("rounds", &SimReport::rounds)
        .def_readonly("e_hat", &SimReport::e_hat)
        .def_readonly("se_e_hat", &SimReport::se_e_hat)
        .def_readonly("d_hat", &SimReport::d_hat)
        .def_readonly("se_d_hat", &SimReport::se_d_hat)
        .def_readonly("choice_counts", &SimReport::choice_counts)
        .def_readonly("component_counts", &SimReport::component_counts)
        .def_readonly("component_errors", &SimReport::component_errors)
        .def_readonly("component_error_rate", &SimReport::component_error_rate)
        .def_readonly("elapsed_seconds", &SimReport::elapsed_seconds)
        .def_readonly("records", &SimReport::records);

    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("min_error", &ScanResult::min_error)
        .def_readonly("best_a", &ScanResult::best_a)
        .def_readonly("best_b", &ScanResult::best_b)
        .def_readonly("best_detector", &ScanResult::best_detector)
        .def_readonly("max_abs_gap", &ScanResult::max_abs_gap)
        .def_readonly("detectors_scanned", &ScanResult::detectors_scanned);

    m.def("bloch_to_density", &qsd::bloch_to_density, py::arg("v"));
    m.def("density_to_bloch", &qsd::density_to_bloch, py::arg("rho"));
    m.def("eig2", &qsd::eig2, py::arg("h"));
    m.def("trace_norm_distance", &qsd::trace_norm_distance, py::arg("rho"), py::arg("sigma"));
    m.def("validate_density", &qsd::validate_density, py::arg("rho"));

    m.def("build_scenario", &qsd::build_scenario, py::arg("r0"), py::arg("r1"));
    m.def("verify_ensemble_equality", &qsd::verify_ensemble_equality, py::arg("scenario"));
    m.def("pure_decomposition", &qsd::pure_decomposition, py::arg("rho"));
    m.def("ensemble_components", &qsd::ensemble_components, py::arg("scenario"), py::arg("j"));

    m.def("helstrom_bound", &qsd::helstrom_bound, py::arg("r0"), py::arg("r1"));
    m.def("helstrom_detector", &qsd::helstrom_detector, py::arg("r0"), py::arg("r1"));
    m.def("povm_from_params", &qsd::povm_from_params, py::arg("a"), py::arg("b"));
    m.def("response", &qsd::response, py::arg("detector"), py::arg("rho"));
    m.def("error_rate", &qsd::error_rate, py::arg("detector"), py::arg("r0"), py::arg("r1"));
    m.def("canonicalize", &qsd::canonicalize, py::arg("detector"), py::arg("r0"), py::arg("r1"));

    m.def("purify", &qsd::purify, py::arg("rho_b"));
    m.def("steering_measurement", &qsd::steering_measurement, py::arg("psi"), py::arg("components"));
    m.def("conditional_state", &qsd::conditional_state, py::arg("psi"), py::arg("element"));
    m.def("bob_marginal", &qsd::bob_marginal, py::arg("psi"));
    m.def("alice_marginal", &qsd::alice_marginal, py::arg("psi"));

    m.def("ensemble_response", &qsd::ensemble_response, py::arg("detector"), py::arg("scenario"),
          py::arg("j"));
    m.def("signalling_gap", &qsd::signalling_gap, py::arg("detector"), py::arg("scenario"));
    m.def("blackbox_report", &qsd::blackbox_report, py::arg("responses"), py::arg("scenario"));
    m.def("nosignal_error_bound", &qsd::nosignal_error_bound, py::arg("scenario"));

    m.def("run_protocol", &qsd::run_protocol, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("empirical_gap", &qsd::empirical_gap, py::arg("report"));
    m.def("reports_equal", &qsd::reports_equal, py::arg("a"), py::arg("b"));
    m.def("counter_uniform", &qsd::counter_uniform, py::arg("seed"), py::arg("round"),
          py::arg("draw"));

    m.def("scan", &qsd::scan, py::arg("scenario"), py::arg("n"), py::arg("refine_levels") = 3,
          py::call_guard<py::gil_scoped_release>());

    m.attr("__version__") = "0.1.0";
}
