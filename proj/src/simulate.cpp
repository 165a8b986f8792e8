#include "qsd/simulate.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include "qsd/steering.hpp"

namespace qsd {

namespace {

constexpr std::uint64_t kRoundKey = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kDrawKey = 0xD1B54A32D192ED03ull;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

struct Tally {
    std::uint64_t errors = 0;
    std::array<std::uint64_t, 2> choice{};
    std::array<std::array<std::uint64_t, 2>, 2> bob{};        // [j][i]
    std::array<std::array<std::uint64_t, 2>, 2> component{};  // [j][k]
    std::array<std::array<std::uint64_t, 2>, 2> comp_err{};   // [j][k]

    void merge(const Tally& o) {
        errors += o.errors;
        for (int j = 0; j < 2; ++j) {
            choice[j] += o.choice[j];
            for (int k = 0; k < 2; ++k) {
                bob[j][k] += o.bob[j][k];
                component[j][k] += o.component[j][k];
                comp_err[j][k] += o.comp_err[j][k];
            }
        }
    }
};

double binomial_se(double rate, std::uint64_t n) {
    if (n == 0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return std::sqrt(rate * (1.0 - rate) / static_cast<double>(n));
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t round, std::uint64_t draw) {
    std::uint64_t h = mix64(seed ^ kRoundKey);
    h = mix64(h + round * kRoundKey);
    h = mix64(h + draw * kDrawKey);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

bool reports_equal(const SimReport& a, const SimReport& b) {
    return a.rounds == b.rounds && a.e_hat == b.e_hat && a.se_e_hat == b.se_e_hat &&
           a.d_hat == b.d_hat && a.se_d_hat == b.se_d_hat &&
           a.choice_counts == b.choice_counts && a.component_counts == b.component_counts &&
           a.component_errors == b.component_errors &&
           a.component_error_rate == b.component_error_rate && a.records == b.records;
}

SimReport run_protocol(const SimConfig& c) {
    if (c.rounds < 1) {
        throw InvalidState("simulation requires at least one round");
    }
    if (c.threads < 1) {
        throw InvalidState("thread count must be positive");
    }
    const auto start = std::chrono::steady_clock::now();

    // Constructibility gate: building both steering measurements validates the
    // scenario (it raises on near-singular averages or mismatched components).
    const JointPureState psi = purify(bloch_to_density(c.scenario.r_b));
    const std::array<SteeringMeasurement, 2> steer = {
        steering_measurement(psi, ensemble_components(c.scenario, 0)),
        steering_measurement(psi, ensemble_components(c.scenario, 1))};

    // Born-rule tables; rounds then reduce to three uniform draws each.
    std::array<std::array<double, 2>, 2> p0{};  // [j][component]
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            p0[j][k] = response(c.detector, steer[j].outcomes[k].target_state).p0;
        }
    }
    const double p = c.scenario.p;

    SimReport report;
    report.rounds = c.rounds;
    report.records.resize(c.rounds);

    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(c.threads, c.rounds));
    std::vector<Tally> tallies(workers);

    auto worker = [&](unsigned w) {
        Tally& t = tallies[w];
        const std::uint64_t lo = c.rounds * w / workers;
        const std::uint64_t hi = c.rounds * (w + 1) / workers;
        for (std::uint64_t r = lo; r < hi; ++r) {
            const int j = counter_uniform(c.seed, r, 0) < 0.5 ? 0 : 1;
            const int k = counter_uniform(c.seed, r, 1) < p ? 0 : 1;
            const int i = counter_uniform(c.seed, r, 2) < p0[j][k] ? 0 : 1;
            const bool correct = (i == j);

            t.choice[j] += 1;
            t.bob[j][i] += 1;
            t.component[j][k] += 1;
            if (!correct) {
                t.errors += 1;
                t.comp_err[j][k] += 1;
            }
            report.records[r] = {r, static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(k),
                                 static_cast<std::uint8_t>(i), correct};
        }
    };

    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker, w);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    Tally total;
    for (const Tally& t : tallies) {
        total.merge(t);
    }

    report.e_hat = static_cast<double>(total.errors) / static_cast<double>(c.rounds);
    report.se_e_hat = binomial_se(report.e_hat, c.rounds);
    report.choice_counts = total.choice;
    for (int j = 0; j < 2; ++j) {
        const std::uint64_t n = total.choice[j];
        const double d0 = static_cast<double>(total.bob[j][0]) / static_cast<double>(n);
        report.d_hat[0][j] = d0;
        report.d_hat[1][j] = 1.0 - d0;
        report.se_d_hat[0][j] = binomial_se(d0, n);
        report.se_d_hat[1][j] = report.se_d_hat[0][j];
        for (int k = 0; k < 2; ++k) {
            report.component_counts[j][k] = total.component[j][k];
            report.component_errors[j][k] = total.comp_err[j][k];
            report.component_error_rate[j][k] =
                static_cast<double>(total.comp_err[j][k]) /
                static_cast<double>(total.component[j][k]);
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

double empirical_gap(const SimReport& r) {
    return r.d_hat[0][0] + r.d_hat[1][1] - 1.0;
}

void write_records(const SimReport& r, std::ostream& sink) {
    sink << "round,alice_choice,alice_outcome,bob_outcome,correct\n";
    for (const SimRecord& rec : r.records) {
        sink << rec.round << ',' << int(rec.alice_choice) << ',' << int(rec.alice_outcome)
             << ',' << int(rec.bob_outcome) << ',' << int(rec.correct) << '\n';
    }
    if (!sink) {
        throw std::ios_base::failure("failed to write simulation records");
    }
}

}  // namespace qsd
