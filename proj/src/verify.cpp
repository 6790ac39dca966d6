#include "ico/verify.hpp"

#include <cmath>

namespace ico {

namespace {

Matrix ginibre(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    return g;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

DensityOperator random_density(int d, std::mt19937_64& rng) {
    Matrix g = ginibre(d, d, rng);
    Matrix m = g * g.adjoint();
    return DensityOperator(m / m.trace().real());
}

Matrix random_isometry(int rows, int cols, std::mt19937_64& rng) {
    Matrix g = ginibre(rows, cols, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
    return q;
}

KrausChannel random_channel(int d, int kraus_count, std::mt19937_64& rng) {
    Matrix v = random_isometry(d * kraus_count, d, rng);
    std::vector<Matrix> ops;
    for (int i = 0; i < kraus_count; ++i)
        ops.push_back(v.block(i * d, 0, d, d));
    return KrausChannel(d, std::move(ops));
}

std::vector<CheckResult> run_verification(int trials, double tolerance,
                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> beta_draw(0.0, 5.0);
    std::uniform_real_distribution<double> delta_draw(0.1, 5.0);
    std::uniform_real_distribution<double> alpha_draw(0.0, 1.0);

    CheckResult switch_vs_closed{"switch_apply vs closed_form_ico"};
    CheckResult switch_vs_dilation{"switch_apply vs run_dilation"};
    CheckResult closed_vs_dilation{"closed_form_ico vs run_dilation"};
    CheckResult cptp{"channel completeness sum K^dag K = I"};
    CheckResult output_valid{"channel output trace/Hermiticity deviation"};
    CheckResult therm_constant{"thermalizing channel constancy"};
    CheckResult remix{"Kraus-remix invariance of the SWITCH"};
    CheckResult conservation{"three-step heat conservation"};
    CheckResult prob_norm{"control measurement p_+ + p_- = 1"};

    for (int t = 0; t < trials; ++t) {
        const int d = 2;
        const double beta = beta_draw(rng);
        const double delta = delta_draw(rng);
        const double alpha = alpha_draw(rng);
        const ThermalSpec spec = ThermalSpec::qubit(beta, delta);
        const DensityOperator rho = random_density(d, rng);
        const ControlState ctrl(alpha);

        const KrausChannel therm = thermalizing(spec);
        const Matrix via_switch = switch_apply(therm, therm, ctrl, rho).matrix();
        const Matrix via_closed = closed_form_ico(spec, rho, alpha).matrix();
        const Matrix via_dilation = run_dilation(ctrl, rho, spec).matrix();
        switch_vs_closed.max_deviation = std::max(
            switch_vs_closed.max_deviation, max_abs_diff(via_switch, via_closed));
        switch_vs_dilation.max_deviation = std::max(
            switch_vs_dilation.max_deviation, max_abs_diff(via_switch, via_dilation));
        closed_vs_dilation.max_deviation = std::max(
            closed_vs_dilation.max_deviation, max_abs_diff(via_closed, via_dilation));

        // random CPTP channel properties
        std::uniform_int_distribution<int> kcount(1, 4);
        const KrausChannel ch = random_channel(d, kcount(rng), rng);
        Matrix acc = Matrix::Zero(d, d);
        for (const Matrix& k : ch.kraus_ops()) acc += k.adjoint() * k;
        cptp.max_deviation = std::max(
            cptp.max_deviation, max_abs_diff(acc, Matrix::Identity(d, d)));
        const DensityOperator out = ch.apply(rho);  // validity enforced on wrap
        output_valid.max_deviation = std::max(
            {output_valid.max_deviation,
             std::abs(out.matrix().trace().real() - 1.0),
             max_abs_diff(out.matrix(), out.matrix().adjoint())});

        // constancy: two random inputs map to the same output
        const DensityOperator rho2 = random_density(d, rng);
        therm_constant.max_deviation = std::max(
            therm_constant.max_deviation,
            max_abs_diff(therm.apply(rho).matrix(), therm.apply(rho2).matrix()));

        // remix each channel's Kraus list by a random isometry
        const std::size_t n_ops = therm.kraus_ops().size();
        const int extra = 2;
        Matrix v = random_isometry(static_cast<int>(n_ops) + extra,
                                   static_cast<int>(n_ops), rng);
        std::vector<Matrix> remixed(n_ops + extra, Matrix::Zero(d, d));
        for (std::size_t m = 0; m < n_ops + extra; ++m)
            for (std::size_t i = 0; i < n_ops; ++i)
                remixed[m] += v(static_cast<int>(m), static_cast<int>(i)) *
                              therm.kraus_ops()[i];
        const KrausChannel therm_remixed(d, std::move(remixed));
        remix.max_deviation = std::max(
            remix.max_deviation,
            max_abs_diff(switch_apply(therm_remixed, therm_remixed, ctrl, rho).matrix(),
                         via_switch));

        // heat conservation over random fridge parameters
        const double bh = beta_draw(rng);
        CycleParams params{std::max(beta, bh), std::min(beta, bh),
                           std::max(std::min(beta, bh), 1e-3), delta, 0.5};
        const HeatLedger l = heat_flows(params);
        conservation.max_deviation = std::max(
            conservation.max_deviation,
            std::abs(l.q_cold_i + l.q_hot_ii + l.q_cold_iii));

        const auto outcome = measure_control_pm(closed_form_ico(spec, rho, alpha));
        prob_norm.max_deviation = std::max(
            prob_norm.max_deviation,
            std::abs(outcome.p_plus + outcome.p_minus - 1.0));
    }

    std::vector<CheckResult> results{
        switch_vs_closed, switch_vs_dilation, closed_vs_dilation, cptp,
        output_valid, therm_constant, remix, conservation, prob_norm};
    for (CheckResult& r : results) r.passed = r.max_deviation <= tolerance;
    return results;
}

}  // namespace ico
