#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qsd/discrimination.hpp"
#include "qsd/scenario.hpp"

namespace qsd {

/// Keyed counter generator: each value is a pure function of
/// (seed, round, draw), so results never depend on thread scheduling.
/// Returns a uniform double in [0, 1).
double counter_uniform(std::uint64_t seed, std::uint64_t round, std::uint64_t draw);

struct SimConfig {
    Scenario scenario;
    BinaryPovm detector;
    std::uint64_t rounds = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/// One protocol round. alice_outcome 0 is the main component rho_j,
/// 1 the flag state; correct means Bob's guess i equals Alice's choice j.
struct SimRecord {
    std::uint64_t round = 0;
    std::uint8_t alice_choice = 0;
    std::uint8_t alice_outcome = 0;
    std::uint8_t bob_outcome = 0;
    bool correct = false;

    friend bool operator==(const SimRecord&, const SimRecord&) = default;
};

struct SimReport {
    std::uint64_t rounds = 0;

    /// Empirical error rate and its binomial standard error.
    double e_hat = 0.0;
    double se_e_hat = 0.0;

    /// d_hat[i][j]: frequency of detector outcome i given Alice chose j.
    /// Row 1 is the exact complement of row 0. NaN when choice j never occurred.
    std::array<std::array<double, 2>, 2> d_hat{};
    std::array<std::array<double, 2>, 2> se_d_hat{};

    std::array<std::uint64_t, 2> choice_counts{};

    /// Counts and conditional error rates indexed by [alice_choice][alice_outcome].
    std::array<std::array<std::uint64_t, 2>, 2> component_counts{};
    std::array<std::array<std::uint64_t, 2>, 2> component_errors{};
    std::array<std::array<double, 2>, 2> component_error_rate{};

    double elapsed_seconds = 0.0;
    std::vector<SimRecord> records;
};

/// Field-wise equality ignoring elapsed_seconds (wall time is not reproducible).
bool reports_equal(const SimReport& a, const SimReport& b);

/// Runs the steered-preparation protocol: per round, Alice picks j uniformly,
/// her steering outcome selects a component of ensemble j, and Bob's detector
/// fires on that component. Identical (seed, rounds) give identical reports
/// for any thread count. Sampling order per round is fixed:
/// draw 0 = j, draw 1 = Alice outcome, draw 2 = Bob outcome.
SimReport run_protocol(const SimConfig& c);

/// D00 + D11 - 1 from the empirical table.
double empirical_gap(const SimReport& r);

/// CSV rows `round,alice_choice,alice_outcome,bob_outcome,correct`, one per
/// round, header included. I/O failures surface as std::ios_base::failure.
void write_records(const SimReport& r, std::ostream& sink);

}  // namespace qsd
