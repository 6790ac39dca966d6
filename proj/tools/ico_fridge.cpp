// Command-line harness for the ICO refrigeration cycle: closed-form
// simulation, parameter sweeps, oracle verification, and Monte Carlo runs.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ico/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInvalidArgs = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitIo = 4;

// 17 significant digits round-trip doubles exactly.
std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Relative output paths resolve against ICO_FRIDGE_OUTPUT_DIR when set.
std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("ICO_FRIDGE_OUTPUT_DIR"))
            return std::filesystem::path(dir) / p;
    }
    return p;
}

void write_or_print(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    const auto path = resolve_output(output);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open output file: " + path.string());
    f << text;
    if (!f) throw std::ios_base::failure("write failed: " + path.string());
}

struct ParamFlags {
    double beta_c_delta = 0.0;
    double beta_h_delta = 0.0;
    double beta_r_delta = -1.0;  // default: beta_h_delta
    double delta = 1.0;
    double alpha = 0.5;

    ico::CycleParams params() const {
        const double br = beta_r_delta < 0.0 ? beta_h_delta : beta_r_delta;
        return ico::CycleParams{beta_c_delta / delta, beta_h_delta / delta,
                                br / delta, delta, alpha};
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& p) {
    cmd->add_option("--beta-c", p.beta_c_delta,
                    "cold reservoir beta_C*Delta (dimensionless)")->required();
    cmd->add_option("--beta-h", p.beta_h_delta,
                    "hot reservoir beta_H*Delta (dimensionless)")->required();
    cmd->add_option("--beta-r", p.beta_r_delta,
                    "resetting reservoir beta_R*Delta (default: beta-h)");
    cmd->add_option("--delta", p.delta, "level gap of the working qubit")
        ->default_val(1.0);
    cmd->add_option("--alpha", p.alpha, "control weight alpha in (0,1)")
        ->default_val(0.5);
}

nlohmann::ordered_json report_json(const ico::CycleParams& p,
                                   const ico::CycleReport& r) {
    return nlohmann::ordered_json{
        {"beta_c", p.beta_c},      {"beta_h", p.beta_h},
        {"beta_r", p.beta_r},      {"delta", p.delta},
        {"alpha", p.alpha},        {"r_c", p.r_c()},
        {"r_h", p.r_h()},          {"q_cold_i", r.ledger.q_cold_i},
        {"q_hot_ii", r.ledger.q_hot_ii},
        {"q_cold_iii", r.ledger.q_cold_iii},
        {"q_cold_cycle", r.ledger.q_cold_cycle},
        {"p_minus", r.p_minus},    {"mean_attempts", r.mean_attempts},
        {"entropy_nats", r.entropy_nats},
        {"work_per_cycle", r.work_per_cycle},
        {"cop", r.cop},            {"carnot_cop", r.carnot_cop},
        {"prc_satisfied", r.prc_satisfied},
        {"analytic_ledger", r.analytic_ledger}};
}

std::string report_text(const ico::CycleParams& p, const ico::CycleReport& r) {
    std::ostringstream os;
    os << "ICO fridge cycle report\n"
       << "  beta_c*delta     " << fmt(p.beta_c * p.delta) << "\n"
       << "  beta_h*delta     " << fmt(p.beta_h * p.delta) << "\n"
       << "  beta_r*delta     " << fmt(p.beta_r * p.delta) << "\n"
       << "  alpha            " << fmt(p.alpha) << "\n"
       << "  q_cold_i         " << fmt(r.ledger.q_cold_i) << "\n"
       << "  q_hot_ii         " << fmt(r.ledger.q_hot_ii) << "\n"
       << "  q_cold_iii       " << fmt(r.ledger.q_cold_iii) << "\n"
       << "  q_cold_cycle     " << fmt(r.ledger.q_cold_cycle) << "\n"
       << "  p_minus          " << fmt(r.p_minus) << "\n"
       << "  mean_attempts    " << fmt(r.mean_attempts) << "\n"
       << "  entropy_nats     " << fmt(r.entropy_nats) << "\n"
       << "  work_per_cycle   " << fmt(r.work_per_cycle) << "\n"
       << "  cop              " << fmt(r.cop) << "\n"
       << "  carnot_cop       " << fmt(r.carnot_cop) << "\n"
       << "  prc_satisfied    " << (r.prc_satisfied ? "yes" : "no") << "\n"
       << "  ledger           " << (r.analytic_ledger ? "analytic" : "numeric")
       << "\n";
    return os.str();
}

int cmd_simulate(const ParamFlags& flags, bool json, const std::string& output) {
    const ico::CycleParams p = flags.params();
    const ico::CycleReport r = ico::work_and_cop(p);
    write_or_print(json ? report_json(p, r).dump(2) + "\n" : report_text(p, r),
                   output);
    return kExitOk;
}

struct AxisFlags {
    double min = 0.0, max = 0.0;
    int steps = 0;
    bool log_spacing = false;

    std::vector<double> values() const {
        std::vector<double> v;
        for (int i = 0; i < steps; ++i) {
            const double f = static_cast<double>(i) / (steps - 1);
            if (log_spacing)
                v.push_back(min * std::pow(max / min, f));
            else
                v.push_back(min + (max - min) * f);
        }
        return v;
    }
};

int cmd_sweep(const AxisFlags& axis_c, const AxisFlags& axis_h, double delta,
              double alpha, double beta_r_delta, const std::string& output) {
    if (axis_c.steps < 2 || axis_h.steps < 2)
        throw CLI::ValidationError("sweep", "each axis needs at least 2 steps");
    if (!(axis_c.min < axis_c.max) || !(axis_h.min < axis_h.max))
        throw CLI::ValidationError("sweep", "axis min must be < max");
    if ((axis_c.log_spacing && axis_c.min <= 0.0) ||
        (axis_h.log_spacing && axis_h.min <= 0.0))
        throw CLI::ValidationError("sweep", "log spacing needs min > 0");

    std::ostringstream os;
    os << "beta_c_delta,beta_h_delta,alpha,beta_r_delta,r_c,r_h,"
          "q_cold_i,q_hot_ii,q_cold_iii,q_cold_cycle,p_minus,mean_attempts,"
          "entropy_nats,work_per_cycle,cop,carnot_cop,prc,skipped\n";
    for (double bc : axis_c.values()) {
        for (double bh : axis_h.values()) {
            const double br = beta_r_delta < 0.0 ? bh : beta_r_delta;
            os << fmt(bc) << "," << fmt(bh) << "," << fmt(alpha) << ","
               << fmt(br) << ",";
            if (!(bc > bh)) {
                // grid point violates beta_c > beta_h: flagged, not dropped
                const double rc = std::exp(-bc), rh = std::exp(-bh);
                os << fmt(rc) << "," << fmt(rh) << ",,,,,,,,,,,," << "1\n";
                continue;
            }
            const ico::CycleParams p{bc / delta, bh / delta, br / delta, delta,
                                     alpha};
            const ico::CycleReport r = ico::work_and_cop(p);
            os << fmt(p.r_c()) << "," << fmt(p.r_h()) << ","
               << fmt(r.ledger.q_cold_i) << "," << fmt(r.ledger.q_hot_ii) << ","
               << fmt(r.ledger.q_cold_iii) << ","
               << fmt(r.ledger.q_cold_cycle) << "," << fmt(r.p_minus) << ","
               << fmt(r.mean_attempts) << "," << fmt(r.entropy_nats) << ","
               << fmt(r.work_per_cycle) << "," << fmt(r.cop) << ","
               << fmt(r.carnot_cop) << "," << (r.prc_satisfied ? 1 : 0)
               << ",0\n";
        }
    }
    write_or_print(os.str(), output);
    return kExitOk;
}

int cmd_verify(int trials, double tolerance, std::uint64_t seed, bool json,
               const std::string& output) {
    const auto results = ico::run_verification(trials, tolerance, seed);
    bool all_pass = true;
    std::ostringstream os;
    nlohmann::ordered_json jout = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.passed;
        os << (r.passed ? "PASS" : "FAIL") << "  " << r.name
           << "  max deviation " << fmt(r.max_deviation) << "\n";
        jout.push_back({{"check", r.name},
                        {"max_deviation", r.max_deviation},
                        {"passed", r.passed}});
    }
    os << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
    write_or_print(json ? jout.dump(2) + "\n" : os.str(), output);
    return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_montecarlo(const ParamFlags& flags, std::uint64_t seed, int trials,
                   bool json, const std::string& output,
                   const std::string& trials_csv) {
    const ico::CycleParams p = flags.params();
    const ico::StochasticReport r = ico::run_cycle_stochastic(p, seed, trials);

    if (!trials_csv.empty()) {
        std::ostringstream os;
        os << "trial,attempts,q_cold_cycle\n";
        for (std::size_t i = 0; i < r.per_trial.size(); ++i)
            os << i << "," << r.per_trial[i].attempts << ","
               << fmt(r.per_trial[i].q_cold_cycle) << "\n";
        write_or_print(os.str(), trials_csv);
    }

    if (json) {
        nlohmann::ordered_json j{
            {"seed", r.seed},
            {"trials", r.trials},
            {"total_attempts", r.total_attempts},
            {"rehomogenize_events", r.rehomogenize_events},
            {"mean_attempts", r.mean_attempts},
            {"se_attempts", r.se_attempts},
            {"mean_q_cold_cycle", r.mean_q_cold_cycle},
            {"se_q_cold_cycle", r.se_q_cold_cycle},
            {"max_failed_attempt_residual", r.max_failed_attempt_residual},
            {"analytic_mean_attempts", r.analytic.mean_attempts},
            {"analytic_q_cold_cycle", r.analytic.ledger.q_cold_cycle}};
        write_or_print(j.dump(2) + "\n", output);
    } else {
        std::ostringstream os;
        os << "Monte Carlo run (seed " << r.seed << ", " << r.trials
           << " trials)\n"
           << "  mean attempts      " << fmt(r.mean_attempts) << " +- "
           << fmt(r.se_attempts) << "  (analytic "
           << fmt(r.analytic.mean_attempts) << ")\n"
           << "  mean q_cold_cycle  " << fmt(r.mean_q_cold_cycle) << " +- "
           << fmt(r.se_q_cold_cycle) << "  (analytic "
           << fmt(r.analytic.ledger.q_cold_cycle) << ")\n"
           << "  total attempts     " << r.total_attempts << "\n"
           << "  rehomogenizations  " << r.rehomogenize_events << "\n"
           << "  max +branch residual " << fmt(r.max_failed_attempt_residual)
           << "\n";
        write_or_print(os.str(), output);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ICO fridge: quantum-SWITCH refrigeration cycle simulator"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_config("--config");

    bool json = false;
    std::string output;
    std::uint64_t seed = 12345;
    double tolerance = 1e-12;
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_option("--output", output, "output file (default: stdout)");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--tolerance", tolerance, "verification tolerance");

    ParamFlags sim_flags;
    auto* simulate = app.add_subcommand(
        "simulate", "closed-form per-cycle heat flows, work cost, and COP");
    add_param_flags(simulate, sim_flags);

    AxisFlags axis_c, axis_h;
    double sweep_delta = 1.0, sweep_alpha = 0.5, sweep_beta_r = -1.0;
    auto* sweep = app.add_subcommand(
        "sweep", "grid sweep over (beta_c*delta, beta_h*delta), CSV output");
    sweep->add_option("--beta-c-min", axis_c.min)->required();
    sweep->add_option("--beta-c-max", axis_c.max)->required();
    sweep->add_option("--beta-c-steps", axis_c.steps)->required();
    sweep->add_flag("--beta-c-log", axis_c.log_spacing, "log spacing");
    sweep->add_option("--beta-h-min", axis_h.min)->required();
    sweep->add_option("--beta-h-max", axis_h.max)->required();
    sweep->add_option("--beta-h-steps", axis_h.steps)->required();
    sweep->add_flag("--beta-h-log", axis_h.log_spacing, "log spacing");
    sweep->add_option("--delta", sweep_delta)->default_val(1.0);
    sweep->add_option("--alpha", sweep_alpha)->default_val(0.5);
    sweep->add_option("--beta-r", sweep_beta_r,
                      "beta_R*Delta (default: per-point beta-h)");

    int verify_trials = 100;
    auto* verify = app.add_subcommand(
        "verify", "triple-oracle and invariant suites over random draws");
    verify->add_option("--trials", verify_trials, "random draws per check")
        ->default_val(100);

    ParamFlags mc_flags;
    int mc_trials = 10000;
    std::string mc_trials_csv;
    auto* montecarlo = app.add_subcommand(
        "montecarlo", "seeded stochastic repeat-until-minus cycle runs");
    add_param_flags(montecarlo, mc_flags);
    montecarlo->add_option("--trials", mc_trials)->default_val(10000);
    montecarlo->add_option("--trials-csv", mc_trials_csv,
                           "write per-trial records to this CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalidArgs;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(sim_flags, json, output);
        if (sweep->parsed())
            return cmd_sweep(axis_c, axis_h, sweep_delta, sweep_alpha,
                             sweep_beta_r, output);
        if (verify->parsed())
            return cmd_verify(verify_trials, tolerance, seed, json, output);
        if (montecarlo->parsed())
            return cmd_montecarlo(mc_flags, seed, mc_trials, json, output,
                                  mc_trials_csv);
    } catch (const ico::DegenerateCycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidArgs;
    }
    return kExitInvalidArgs;
}
