#ifndef UNCKIT_QUAD_HPP_
#define UNCKIT_QUAD_HPP_

#include <cstdint>
#include <functional>
#include <variant>

#include "unckit/errors.hpp"

namespace unckit {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::int64_t evaluations = 0;
};

// Growth detected along the truncation boundary of the first-quadrant
// integral; witness_scale is the radius at which it was seen.
struct Divergence {
    double lambda = 0.0;
    double witness_scale = 0.0;
};

using QuadrantOutcome = std::variant<QuadResult, Divergence>;

// Gaussian-decay envelope |g(x)| <= amplitude (1+|x|)^poly_degree
// e^{-width x^2/2 + exp_rate |x|}.
struct Envelope {
    double amplitude = 1.0;
    double width = 1.0;
    double exp_rate = 0.0;
    int poly_degree = 0;
};

inline constexpr std::int64_t kDefaultEvalBudget = 1'000'000;

/// Adaptive Gauss-Kronrod integration on a finite interval.  Stops when
/// the error estimate is below max(abs_tol, rel_tol |value|); throws
/// ToleranceNotMet when the budget runs out first.
QuadResult integrate_interval(const std::function<double(double)>& g, double a,
                              double b, double rel_tol, double abs_tol = 0.0,
                              std::int64_t budget = kDefaultEvalBudget);

/// Integral of g over the whole line.  The envelope fixes the truncation
/// radius and bounds the tail remainder.
QuadResult integrate_line(const std::function<double(double)>& g,
                          const Envelope& env, double tol,
                          std::int64_t budget = kDefaultEvalBudget);

/// Integral of a nonnegative h(x, y) = w(x) v(y) e^{lambda x y} over the
/// first quadrant, with w, v bounded by the declared envelopes.  The
/// integration runs in coordinates rotated so the diagonal ridge that
/// forms as lambda -> 1- aligns with an axis.  Divergence is an outcome,
/// not an error.
QuadrantOutcome integrate_quadrant(
    const std::function<double(double, double)>& h, double lambda,
    const Envelope& env_x, const Envelope& env_y, double tol,
    std::int64_t budget = kDefaultEvalBudget);

}  // namespace unckit

#endif
