#pragma once

#include <cstdint>
#include <optional>

#include "ico/qswitch.hpp"

namespace ico {

struct DegenerateCycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AttemptCapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reservoir temperatures and working-qubit gap for one fridge
/// configuration. Cold must be colder than hot (beta_c > beta_h).
struct CycleParams {
    double beta_c;        // cold inverse temperature
    double beta_h;        // hot inverse temperature
    double beta_r;        // resetting reservoir for register erasure
    double delta = 1.0;   // level gap of the working qubit
    double alpha = 0.5;   // control weight; analytic ledger requires 1/2

    void validate() const;
    ThermalSpec cold() const { return ThermalSpec::qubit(beta_c, delta); }
    ThermalSpec hot() const { return ThermalSpec::qubit(beta_h, delta); }
    double r_c() const { return cold().r(); }
    double r_h() const { return hot().r(); }
};

/// Per-step heat bookkeeping. Sign convention: positive means heat flows
/// INTO that reservoir; q_cold_cycle < 0 is successful refrigeration.
struct HeatLedger {
    double q_cold_i = 0.0;
    double q_hot_ii = 0.0;
    double q_cold_iii = 0.0;
    double q_cold_cycle = 0.0;
};

struct CycleReport {
    HeatLedger ledger;
    double p_minus = 0.0;
    double mean_attempts = 0.0;
    double entropy_nats = 0.0;    // register entropy per measurement
    double work_per_cycle = 0.0;  // Landauer erasure cost
    double cop = 0.0;
    double carnot_cop = 0.0;      // beta_h / (beta_c - beta_h)
    bool prc_satisfied = false;
    bool analytic_ledger = false; // closed forms used (alpha = 1/2)
};

/// Working-qubit state after a successful minus-branch ICO interaction at
/// alpha = 1/2, as a closed form in r_c = e^{-beta_c * delta}:
/// diag((r+2)/(3(1+r)), (2r+1)/(3(1+r))).
DensityOperator step_i_state(double r_c);

/// Closed-form per-step heat flows (requires alpha = 1/2).
HeatLedger heat_flows(const CycleParams& params);

/// Same ledger computed by simulating the success path with density
/// operators; valid for any alpha in (0,1).
HeatLedger success_path_ledger(const CycleParams& params);

/// (2r_c+1)/(3(1+r_c)) > r_h/(1+r_h); equivalent to q_cold_cycle < 0.
bool positive_refrigeration(const CycleParams& params);

/// Assembles the full per-cycle report: measurement statistics, erasure
/// work, COP against the Carnot bound.
CycleReport work_and_cop(const CycleParams& params);

struct TrialRecord {
    long attempts = 0;
    double q_cold_cycle = 0.0;
};

/// Aggregates over a seeded repeat-until-minus Monte Carlo run.
struct StochasticReport {
    std::vector<TrialRecord> per_trial;
    CycleReport analytic;           // reference values for the same params
    std::uint64_t seed = 0;
    int trials = 0;
    long total_attempts = 0;
    long rehomogenize_events = 0;   // one per completed cycle
    double mean_attempts = 0.0;
    double se_attempts = 0.0;       // standard error of the mean
    double mean_q_cold_cycle = 0.0;
    double se_q_cold_cycle = 0.0;
    double max_failed_attempt_residual = 0.0;  // |net heat| of + branches
};

inline constexpr long kAttemptCap = 1000000;

StochasticReport run_cycle_stochastic(const CycleParams& params,
                                      std::uint64_t seed, int trials);

/// Records the end-of-cycle classical rehomogenization of the cold
/// reservoir ensemble. Ideal reservoirs: the marker transfers no heat.
void reservoir_rehomogenize(StochasticReport& report);

}  // namespace ico
