#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ico/dilation.hpp"
#include "ico/fridge.hpp"

namespace ico {

/// Random valid density operator: G G^dag / Tr, Ginibre-distributed.
DensityOperator random_density(int d, std::mt19937_64& rng);

/// Random CPTP channel from a Haar-ish Stinespring isometry with
/// `kraus_count` Kraus operators.
KrausChannel random_channel(int d, int kraus_count, std::mt19937_64& rng);

/// Random isometry (rows x cols, rows >= cols) with V^dag V = I.
Matrix random_isometry(int rows, int cols, std::mt19937_64& rng);

/// One named verification check: the maximum deviation observed over all
/// random draws, to be compared against a tolerance.
struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    bool passed = false;
};

/// Runs the oracle and invariant suites over `trials` random draws:
/// triple-oracle agreement (switch_apply / closed_form_ico / run_dilation),
/// CPTP completeness and channel output validity, thermalizing constancy,
/// Kraus-remix invariance, heat conservation, measurement normalization.
std::vector<CheckResult> run_verification(int trials, double tolerance,
                                          std::uint64_t seed);

}  // namespace ico
