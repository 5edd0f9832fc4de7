#ifndef UNCKIT_RECOVER_HPP_
#define UNCKIT_RECOVER_HPP_

#include <cmath>
#include <utility>
#include <vector>

#include "unckit/errors.hpp"
#include "unckit/mellin.hpp"

namespace unckit {

// Samples (x_i, f(x_i)) on a symmetric, strictly increasing grid.
struct SampledFn {
    std::vector<double> xs;
    std::vector<double> ys;

    SampledFn(std::vector<double> x, std::vector<double> y);
};

/// Gaussian width a of f ~ p gamma_a, by linear regression of log|f|
/// against (-x^2/2, log|x|, 1) over the outer third of the grid; the
/// log|x| regressor absorbs the polynomial's leading behavior.
double fit_gaussian_width(const SampledFn& s);

/// Monomial coefficients of p, by least squares on f(x) e^{a x^2/2}.
/// The degree is the smallest whose residual RMS is below
/// 1e-6 max|ys|.
std::vector<double> recover_polynomial(const SampledFn& s, double a);

/// Hadamard-form fit Theta(z) ~ r(z) e^{rate z} from real samples
/// (z_i, Theta_i): rate from a log-slope regression, then r by least
/// squares on Theta e^{-rate z}.
ThetaFit fit_theta_exponent(
    const std::vector<std::pair<double, double>>& values);

/// Width-rate dictionary: gamma_a has Theta rate -ln(a/2)/2, inverted by
/// a = 2 e^{-2 rate}.
inline double width_from_rate(double rate) {
    return 2.0 * std::exp(-2.0 * rate);
}

}  // namespace unckit

#endif
