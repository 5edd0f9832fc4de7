#ifndef UNCKIT_BEURLING_HPP_
#define UNCKIT_BEURLING_HPP_

#include <optional>
#include <vector>

#include "unckit/funcmodel.hpp"
#include "unckit/quad.hpp"

namespace unckit {

struct ScanResult {
    std::vector<double> lambdas;
    std::vector<double> values;  // I(lambda) up to the divergence point, if any
    std::vector<double> errs;    // quadrature error estimates
    std::optional<double> exponent;  // fitted N-hat
    double residual = 0.0;           // RMS of the log-log fit
    std::optional<double> diverged_at;
};

/// Default scan schedule lambda_k = 1 - 2^{-k}, k = 2..12.
std::vector<double> default_schedule();

/// I(lambda) = integral over R^2 of |f(x) fhat(y)| e^{lambda |x y|},
/// reduced to a first-quadrant integral.  Requires real f, lambda in [0, 1).
QuadrantOutcome uncertainty_integral(const GaussPoly& f, double lambda,
                                     double tol = 1e-8);

/// Evaluates I along the schedule and fits the growth exponent: the
/// least-squares slope of log I against -log(1 - lambda) over the last
/// four points.  Divergence is recorded in diverged_at, exponent unset.
ScanResult scan_growth(const GaussPoly& f, const std::vector<double>& schedule,
                       double tol = 1e-8, int threads = 1);

/// min(1, sqrt(a/b)): the lambda beyond which the mixed-width quadrant
/// integral diverges (1 means finite on all of [0, 1)).
double mixed_blowup_threshold(double a, double b);

/// The weighted integral with (1 + x + y)^{-N} folded in; integrable on
/// the ridge even at lambda = 1 when N is large enough.
QuadrantOutcome bdj_integral(const GaussPoly& f, double big_n, double lambda,
                             double tol = 1e-6);

/// max over min(|x|,|y|) >= 1 of e^{(lambda-1)|xy|} (1+|x|+|y|)^N,
/// attained on the boundary |x| = 1 or |y| = 1, hence a 1-D maximization
/// of e^{(lambda-1)t} (2+t)^N over t >= 1.
double bdj_max_bound(double big_n, double lambda);

}  // namespace unckit

#endif
