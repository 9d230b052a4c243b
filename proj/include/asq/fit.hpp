#pragma once

// Least-squares fit of step-function counts against lambda*log(x) + kappa.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace asq {

struct FitResult {
    double lambda = 0.0;
    double kappa = 0.0;
    double residual_rms = 0.0;
    std::string sample_mode;  // "dense" or "jumps"
    std::uint64_t samples = 0;
};

// points: step function as (x, count) with counts nondecreasing in x; the
// last point fixes x_max. Dense mode samples every integer x in
// [first positive-count x, x_max]; jumps mode fits the jump points alone.
// Points with x <= 1 are ignored (log undefined).
FitResult fit_loglinear(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points,
                        bool dense);

// Ordinary least squares of y against log(x) over arbitrary samples.
FitResult ols_loglinear(const std::vector<std::pair<double, double>>& samples);

}  // namespace asq
