#include <doctest.h>

#include <cmath>
#include <random>

#include "ico/qswitch.hpp"
#include "ico/verify.hpp"

using namespace ico;

TEST_CASE("definite order reduces to sequential constant maps") {
    std::mt19937_64 rng(1);
    ThermalSpec spec = ThermalSpec::qubit(1.3, 0.7);
    KrausChannel therm = thermalizing(spec);
    DensityOperator rho = random_density(2, rng);

    Matrix t = thermal_state(spec).matrix();
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;

    Matrix at_one = switch_apply(therm, therm, ControlState(1.0), rho).matrix();
    CHECK((at_one - tensor(p0, t)).cwiseAbs().maxCoeff() < 1e-12);
    Matrix at_zero = switch_apply(therm, therm, ControlState(0.0), rho).matrix();
    CHECK((at_zero - tensor(p1, t)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("switch_apply matches the closed form for thermalizing channels") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> beta(0.0, 5.0), alpha(0.0, 1.0);
    for (int rep = 0; rep < 25; ++rep) {
        ThermalSpec spec = ThermalSpec::qubit(beta(rng), 0.1 + beta(rng));
        KrausChannel therm = thermalizing(spec);
        DensityOperator rho = random_density(2, rng);
        const double a = alpha(rng);
        Matrix via_switch =
            switch_apply(therm, therm, ControlState(a), rho).matrix();
        Matrix via_closed = closed_form_ico(spec, rho, a).matrix();
        CHECK((via_switch - via_closed).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("switch output stays valid for generic channel pairs") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> kcount(1, 4);
    std::uniform_real_distribution<double> alpha(0.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        KrausChannel n1 = random_channel(2, kcount(rng), rng);
        KrausChannel n2 = random_channel(2, kcount(rng), rng);
        DensityOperator rho = random_density(2, rng);
        // the DensityOperator wrap validates trace/Hermiticity/positivity
        DensityOperator out =
            switch_apply(n1, n2, ControlState(alpha(rng)), rho);
        CHECK(out.dim() == 4);
    }
}

TEST_CASE("switch output is invariant under Kraus remixing") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> kcount(2, 4);
    for (int rep = 0; rep < 10; ++rep) {
        KrausChannel n1 = random_channel(2, kcount(rng), rng);
        KrausChannel n2 = random_channel(2, kcount(rng), rng);
        DensityOperator rho = random_density(2, rng);
        ControlState ctrl(0.3);

        const auto remix = [&](const KrausChannel& ch) {
            const int n = static_cast<int>(ch.kraus_ops().size());
            Matrix v = random_isometry(n + 1, n, rng);
            std::vector<Matrix> ops(n + 1, Matrix::Zero(2, 2));
            for (int m = 0; m < n + 1; ++m)
                for (int i = 0; i < n; ++i) ops[m] += v(m, i) * ch.kraus_ops()[i];
            return KrausChannel(2, std::move(ops));
        };
        Matrix base = switch_apply(n1, n2, ctrl, rho).matrix();
        Matrix remixed = switch_apply(remix(n1), remix(n2), ctrl, rho).matrix();
        CHECK((base - remixed).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("closed form at alpha = 0 collapses the coherence") {
    std::mt19937_64 rng(5);
    ThermalSpec spec = ThermalSpec::qubit(2.0, 1.0);
    DensityOperator rho = random_density(2, rng);
    Matrix out = closed_form_ico(spec, rho, 0.0).matrix();
    Matrix p1 = Matrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    CHECK((out - tensor(p1, thermal_state(spec).matrix())).cwiseAbs().maxCoeff() <
          1e-14);
}

TEST_CASE("closed form off-diagonal block is T^3 at beta = 0, rho = T") {
    ThermalSpec spec = ThermalSpec::qubit(0.0, 1.0);
    DensityOperator t = thermal_state(spec);
    Matrix out = closed_form_ico(spec, t, 0.5).matrix();
    // system block between |0><1|_c: entries (0..1, 2..3)
    Matrix off = out.topRightCorner(2, 2);
    CHECK((off - 0.5 * Matrix::Identity(2, 2) / 8.0).cwiseAbs().maxCoeff() <
          1e-15);
}

TEST_CASE("pm measurement of a coherence-free joint splits evenly") {
    ThermalSpec spec = ThermalSpec::qubit(1.0, 1.0);
    Matrix p0 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    DensityOperator joint =
        DensityOperator(tensor(p0, thermal_state(spec).matrix()));
    SwitchOutcome out = measure_control_pm(joint);
    CHECK(out.p_plus == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(out.p_minus == doctest::Approx(0.5).epsilon(1e-14));
    REQUIRE(out.rho_plus);
    REQUIRE(out.rho_minus);
    Matrix t = thermal_state(spec).matrix();
    CHECK((out.rho_plus->matrix() - t).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((out.rho_minus->matrix() - t).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("p_minus closed-form values") {
    // beta = 0: p_- = 1/2 - Tr[(I/2)^3]/2 = 3/8
    ThermalSpec flat = ThermalSpec::qubit(0.0, 1.0);
    SwitchOutcome at_zero =
        measure_control_pm(closed_form_ico(flat, thermal_state(flat), 0.5));
    CHECK(std::abs(at_zero.p_minus - 0.375) < 1e-14);

    // beta*delta = 1
    ThermalSpec unit = ThermalSpec::qubit(1.0, 1.0);
    SwitchOutcome at_one =
        measure_control_pm(closed_form_ico(unit, thermal_state(unit), 0.5));
    CHECK(at_one.p_minus ==
          doctest::Approx(0.29491789986222283).epsilon(1e-12));
    CHECK(at_one.p_plus + at_one.p_minus == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("probabilities are normalized for random joints") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> beta(0.0, 5.0), alpha(0.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        ThermalSpec spec = ThermalSpec::qubit(beta(rng), 0.1 + beta(rng));
        DensityOperator rho = random_density(2, rng);
        SwitchOutcome out =
            measure_control_pm(closed_form_ico(spec, rho, alpha(rng)));
        CHECK(out.p_plus >= 0.0);
        CHECK(out.p_minus >= 0.0);
        CHECK(std::abs(out.p_plus + out.p_minus - 1.0) < 1e-12);
    }
}

TEST_CASE("definite order leaves both branches exactly thermal") {
    std::mt19937_64 rng(7);
    ThermalSpec spec = ThermalSpec::qubit(1.7, 0.9);
    Matrix t = thermal_state(spec).matrix();
    KrausChannel therm = thermalizing(spec);
    for (double a : {0.0, 1.0}) {
        DensityOperator rho = random_density(2, rng);
        SwitchOutcome out = measure_control_pm(
            switch_apply(therm, therm, ControlState(a), rho));
        REQUIRE(out.rho_plus);
        REQUIRE(out.rho_minus);
        CHECK((out.rho_plus->matrix() - t).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((out.rho_minus->matrix() - t).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("minus branch is colder, plus branch hotter, for rho = T") {
    std::uniform_real_distribution<double> beta(0.2, 4.0), alpha(0.05, 0.95);
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 30; ++rep) {
        ThermalSpec spec = ThermalSpec::qubit(beta(rng), 1.0);
        DensityOperator t = thermal_state(spec);
        SwitchOutcome out =
            measure_control_pm(closed_form_ico(spec, t, alpha(rng)));
        REQUIRE(out.rho_plus);
        REQUIRE(out.rho_minus);
        // excited-state population orders the effective temperatures
        CHECK(out.rho_minus->population(1) > t.population(1));
        CHECK(out.rho_plus->population(1) < t.population(1));
    }
}

TEST_CASE("degenerate branch is flagged absent") {
    // pure |-> control times anything leaves p_+ = 0
    Matrix minus(2, 2);
    minus << 0.5, -0.5, -0.5, 0.5;
    DensityOperator joint =
        DensityOperator(tensor(minus, 0.5 * Matrix::Identity(2, 2)));
    SwitchOutcome out = measure_control_pm(joint);
    CHECK(out.p_plus < kDegenerateBranchTol);
    CHECK(!out.rho_plus);
    REQUIRE(out.rho_minus);
}

TEST_CASE("dimension mismatches are rejected") {
    ThermalSpec spec = ThermalSpec::qubit(1.0, 1.0);
    DensityOperator rho3 = DensityOperator(Matrix::Identity(3, 3) / 3.0);
    CHECK_THROWS_AS(closed_form_ico(spec, rho3, 0.5), DimensionError);
    KrausChannel therm = thermalizing(spec);
    CHECK_THROWS_AS(switch_apply(therm, therm, ControlState(0.5), rho3),
                    DimensionError);
    CHECK_THROWS(ControlState(1.5));
}
