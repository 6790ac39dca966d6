#include "ico/fridge.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace ico {

void CycleParams::validate() const {
    if (!(delta > 0.0)) throw std::invalid_argument("CycleParams: delta must be > 0");
    if (beta_c < 0.0 || beta_h < 0.0 || beta_r < 0.0)
        throw std::invalid_argument("CycleParams: inverse temperatures must be >= 0");
    if (beta_c < beta_h)
        throw std::invalid_argument("CycleParams: cold reservoir must be colder (beta_c >= beta_h)");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("CycleParams: alpha must be in (0,1)");
}

DensityOperator step_i_state(double r_c) {
    if (!(r_c > 0.0))
        throw std::invalid_argument("step_i_state: r_c must be > 0 (formula excludes r_c = 0)");
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = (r_c + 2.0) / (3.0 * (1.0 + r_c));
    m(1, 1) = (2.0 * r_c + 1.0) / (3.0 * (1.0 + r_c));
    return DensityOperator(std::move(m));
}

HeatLedger heat_flows(const CycleParams& params) {
    if (params.alpha != 0.5)
        throw std::invalid_argument("heat_flows: closed forms require alpha = 1/2");
    const double rc = params.r_c();
    const double rh = params.r_h();
    const double d = params.delta;
    HeatLedger l;
    l.q_cold_i = (rc - 1.0) / (3.0 * (1.0 + rc)) * d;
    l.q_hot_ii = ((2.0 * rc + 1.0) / (3.0 * (1.0 + rc)) - rh / (1.0 + rh)) * d;
    l.q_cold_iii = (rh / (1.0 + rh) - rc / (1.0 + rc)) * d;
    l.q_cold_cycle = l.q_cold_i + l.q_cold_iii;
    return l;
}

HeatLedger success_path_ledger(const CycleParams& params) {
    const ThermalSpec cold = params.cold();
    const ThermalSpec hot = params.hot();
    const DensityOperator t_c = thermal_state(cold);
    const DensityOperator t_h = thermal_state(hot);

    const auto outcome =
        measure_control_pm(closed_form_ico(cold, t_c, params.alpha));
    if (!outcome.rho_minus)
        throw DegenerateCycleError("success_path_ledger: p_minus is degenerate");
    const DensityOperator& rho1 = *outcome.rho_minus;
    const double d = params.delta;

    HeatLedger l;
    l.q_cold_i = -(rho1.population(1) - t_c.population(1)) * d;
    l.q_hot_ii = -(t_h.population(1) - rho1.population(1)) * d;
    l.q_cold_iii = -(t_c.population(1) - t_h.population(1)) * d;
    l.q_cold_cycle = l.q_cold_i + l.q_cold_iii;
    return l;
}

bool positive_refrigeration(const CycleParams& params) {
    const double rc = params.r_c();
    const double rh = params.r_h();
    return (2.0 * rc + 1.0) / (3.0 * (1.0 + rc)) > rh / (1.0 + rh);
}

CycleReport work_and_cop(const CycleParams& params) {
    params.validate();
    const ThermalSpec cold = params.cold();
    const DensityOperator t_c = thermal_state(cold);
    const auto outcome =
        measure_control_pm(closed_form_ico(cold, t_c, params.alpha));
    if (outcome.p_minus < kDegenerateBranchTol)
        throw DegenerateCycleError("work_and_cop: p_minus below degeneracy threshold");

    CycleReport rep;
    rep.p_minus = outcome.p_minus;
    rep.mean_attempts = 1.0 / outcome.p_minus;
    rep.entropy_nats = shannon_entropy({outcome.p_plus, outcome.p_minus});
    rep.work_per_cycle = rep.entropy_nats / (params.beta_r * outcome.p_minus);
    rep.analytic_ledger = (params.alpha == 0.5);
    rep.ledger = rep.analytic_ledger ? heat_flows(params)
                                     : success_path_ledger(params);
    rep.cop = -rep.ledger.q_cold_cycle / rep.work_per_cycle;
    rep.carnot_cop = params.beta_c > params.beta_h
                         ? params.beta_h / (params.beta_c - params.beta_h)
                         : std::numeric_limits<double>::infinity();
    rep.prc_satisfied = positive_refrigeration(params);
    return rep;
}

StochasticReport run_cycle_stochastic(const CycleParams& params,
                                      std::uint64_t seed, int trials) {
    if (trials < 1)
        throw std::invalid_argument("run_cycle_stochastic: trials must be >= 1");
    StochasticReport rep;
    rep.analytic = work_and_cop(params);
    rep.seed = seed;
    rep.trials = trials;

    const ThermalSpec cold = params.cold();
    const DensityOperator t_c = thermal_state(cold);
    const auto outcome =
        measure_control_pm(closed_form_ico(cold, t_c, params.alpha));
    const double p_minus = outcome.p_minus;
    const HeatLedger success = success_path_ledger(params);
    const double d = params.delta;

    // A failed attempt books the + branch's ICO heat into the cold ensemble
    // and then the recovery thermalization back to T_c; the two entries
    // cancel, and the residual is tracked rather than assumed zero.
    double q_plus_residual = 0.0;
    if (outcome.rho_plus) {
        const double q_ico = -(outcome.rho_plus->population(1) - t_c.population(1)) * d;
        const double q_recovery = -(t_c.population(1) - outcome.rho_plus->population(1)) * d;
        q_plus_residual = q_ico + q_recovery;
    }

    double sum_attempts = 0.0, sumsq_attempts = 0.0;
    double sum_q = 0.0, sumsq_q = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        std::seed_seq sseq{static_cast<std::uint64_t>(trial), seed};
        std::mt19937_64 rng(sseq);
        std::bernoulli_distribution minus_draw(p_minus);

        long attempts = 1;
        double q_cycle = 0.0;
        while (!minus_draw(rng)) {
            q_cycle += q_plus_residual;
            rep.max_failed_attempt_residual = std::max(
                rep.max_failed_attempt_residual, std::abs(q_plus_residual));
            if (++attempts > kAttemptCap)
                throw AttemptCapExceededError(
                    "run_cycle_stochastic: attempt cap exceeded");
        }
        q_cycle += success.q_cold_cycle;
        reservoir_rehomogenize(rep);

        rep.per_trial.push_back({attempts, q_cycle});
        rep.total_attempts += attempts;
        sum_attempts += static_cast<double>(attempts);
        sumsq_attempts += static_cast<double>(attempts) * attempts;
        sum_q += q_cycle;
        sumsq_q += q_cycle * q_cycle;
    }

    const double n = static_cast<double>(trials);
    rep.mean_attempts = sum_attempts / n;
    rep.mean_q_cold_cycle = sum_q / n;
    if (trials > 1) {
        const double var_a =
            std::max(0.0, (sumsq_attempts - n * rep.mean_attempts * rep.mean_attempts) / (n - 1.0));
        const double var_q =
            std::max(0.0, (sumsq_q - n * rep.mean_q_cold_cycle * rep.mean_q_cold_cycle) / (n - 1.0));
        rep.se_attempts = std::sqrt(var_a / n);
        rep.se_q_cold_cycle = std::sqrt(var_q / n);
    }
    return rep;
}

void reservoir_rehomogenize(StochasticReport& report) {
    ++report.rehomogenize_events;
}

}  // namespace ico
