#include <doctest.h>

#include <cmath>
#include <random>

#include "ico/channels.hpp"
#include "ico/verify.hpp"

using namespace ico;

TEST_CASE("identity channel leaves states unchanged") {
    std::mt19937_64 rng(1);
    KrausChannel id(2, {Matrix::Identity(2, 2)});
    DensityOperator rho = random_density(2, rng);
    CHECK((id.apply(rho).matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("channel construction rejects incomplete Kraus sets") {
    CHECK_THROWS(KrausChannel(2, {0.5 * Matrix::Identity(2, 2)}));
    CHECK_THROWS(KrausChannel(2, {Matrix::Identity(3, 3)}));
}

TEST_CASE("orthogonal unitary basis") {
    for (int d : {2, 3, 4}) {
        auto basis = orthogonal_unitary_basis(d);
        REQUIRE(basis.size() == static_cast<std::size_t>(d * d));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK((basis[i].adjoint() * basis[i] - Matrix::Identity(d, d))
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const Complex gram = (basis[i].adjoint() * basis[j]).trace();
                const double expect = (i == j) ? d : 0.0;
                CHECK(std::abs(gram - Complex(expect, 0.0)) < 1e-12);
            }
        }
    }
    // d = 2 is the Pauli set
    auto pauli = orthogonal_unitary_basis(2);
    Matrix y(2, 2);
    y << 0, Complex(0, -1), Complex(0, 1), 0;
    CHECK((pauli[2] - y).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("depolarizing channel maps everything to I/d") {
    std::mt19937_64 rng(2);
    for (int d : {2, 3}) {
        KrausChannel depol = depolarizing(d);
        Matrix mixed = Matrix::Identity(d, d) / d;
        for (int rep = 0; rep < 10; ++rep) {
            DensityOperator rho = random_density(d, rng);
            CHECK((depol.apply(rho).matrix() - mixed).cwiseAbs().maxCoeff() <
                  1e-12);
        }
        // fixed point
        CHECK((depol.apply(DensityOperator(mixed)).matrix() - mixed)
                  .cwiseAbs()
                  .maxCoeff() < 1e-14);
    }
    // |+><+| specifically
    Matrix plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    CHECK((depolarizing(2).apply(DensityOperator(plus)).matrix() -
           0.5 * Matrix::Identity(2, 2))
              .cwiseAbs()
              .maxCoeff() < 1e-14);
}

TEST_CASE("thermal state populations") {
    // beta = 0: maximally mixed
    CHECK((thermal_state(ThermalSpec::qubit(0.0, 1.0)).matrix() -
           0.5 * Matrix::Identity(2, 2))
              .cwiseAbs()
              .maxCoeff() == 0.0);
    // beta -> infinity: ground state
    DensityOperator ground = thermal_state(ThermalSpec::qubit_ground(1.0));
    CHECK(ground.population(0) == 1.0);
    CHECK(ground.population(1) == 0.0);
    // beta = delta = 1
    DensityOperator t = thermal_state(ThermalSpec::qubit(1.0, 1.0));
    CHECK(t.population(0) == doctest::Approx(0.7310585786300049).epsilon(1e-12));
    CHECK(t.population(1) == doctest::Approx(0.2689414213699951).epsilon(1e-12));
}

TEST_CASE("thermalizing channel on |1><1| at beta = delta = 1") {
    Matrix excited = Matrix::Zero(2, 2);
    excited(1, 1) = 1.0;
    DensityOperator out =
        thermalizing(ThermalSpec::qubit(1.0, 1.0)).apply(DensityOperator(excited));
    CHECK(out.population(0) == doctest::Approx(0.7310585786300049).epsilon(1e-12));
    CHECK(out.population(1) == doctest::Approx(0.2689414213699951).epsilon(1e-12));
    CHECK(std::abs(out(0, 1)) < 1e-14);
}

TEST_CASE("thermalizing channel is a constant map") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> beta(0.0, 5.0);
    for (int rep = 0; rep < 20; ++rep) {
        ThermalSpec spec = ThermalSpec::qubit(beta(rng), 0.1 + beta(rng));
        KrausChannel ch = thermalizing(spec);
        Matrix t = thermal_state(spec).matrix();
        DensityOperator a = random_density(2, rng);
        DensityOperator b = random_density(2, rng);
        CHECK((ch.apply(a).matrix() - t).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((ch.apply(a).matrix() - ch.apply(b).matrix()).cwiseAbs().maxCoeff() <
              1e-12);
        // completeness re-checked explicitly
        Matrix acc = Matrix::Zero(2, 2);
        for (const Matrix& k : ch.kraus_ops()) acc += k.adjoint() * k;
        CHECK((acc - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("beta = 0 thermalizing equals depolarizing as a map") {
    std::mt19937_64 rng(4);
    for (int d : {2, 3}) {
        std::vector<double> levels(d);
        for (int j = 0; j < d; ++j) levels[j] = j;
        KrausChannel therm = thermalizing(ThermalSpec::levels(0.0, levels));
        KrausChannel depol = depolarizing(d);
        for (int rep = 0; rep < 5; ++rep) {
            DensityOperator rho = random_density(d, rng);
            CHECK((therm.apply(rho).matrix() - depol.apply(rho).matrix())
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("apply preserves trace, Hermiticity, positivity") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> kcount(1, 4);
    for (int rep = 0; rep < 100; ++rep) {
        KrausChannel ch = random_channel(2, kcount(rng), rng);
        DensityOperator rho = random_density(2, rng);
        // wrapping the output enforces all three invariants
        DensityOperator out = ch.apply(rho);
        CHECK(std::abs(out.matrix().trace().real() - 1.0) < 1e-12);
    }
}

TEST_CASE("classical thermalization is the constant thermal map") {
    ThermalSpec spec = ThermalSpec::qubit(1.0, 1.0);
    Matrix t = thermal_state(spec).matrix();
    Matrix zero = Matrix::Zero(2, 2), one = Matrix::Zero(2, 2);
    zero(0, 0) = 1.0;
    one(1, 1) = 1.0;
    for (const Matrix& m : {zero, one, Matrix(0.5 * Matrix::Identity(2, 2))}) {
        CHECK((classical_thermalize(DensityOperator(m), spec).matrix() - t)
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }
    CHECK_THROWS_AS(
        classical_thermalize(DensityOperator(Matrix::Identity(3, 3) / 3.0), spec),
        DimensionError);
}

TEST_CASE("thermal spec sanity") {
    CHECK_THROWS(ThermalSpec::qubit(-1.0, 1.0));
    CHECK_THROWS(ThermalSpec::qubit(1.0, 0.0));
    CHECK(ThermalSpec::qubit(1.0, 1.0).r() == doctest::Approx(std::exp(-1.0)));
    CHECK(ThermalSpec::qubit_ground(1.0).r() == 0.0);
    CHECK(ThermalSpec::qubit(0.0, 2.0).partition() == 2.0);
}
