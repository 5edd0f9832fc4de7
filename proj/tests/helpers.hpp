#ifndef UNCKIT_TESTS_HELPERS_HPP_
#define UNCKIT_TESTS_HELPERS_HPP_

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "unckit/funcmodel.hpp"

namespace unckit_test {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2Pi = 2.5066282746310005;

// Fixed-grid midpoint rule over [0,r]^2, refined until two successive
// doublings agree; independent of the adaptive integrator under test.
inline double riemann_quadrant(
    const std::function<double(double, double)>& h, double r, double rel_tol,
    int n0 = 64) {
    double prev = 0.0;
    for (int n = n0; n <= 4096; n *= 2) {
        const double step = r / n;
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = (i + 0.5) * step;
            double row = 0.0;
            for (int j = 0; j < n; ++j) {
                row += h(x, (j + 0.5) * step);
            }
            s += row;
        }
        s *= step * step;
        if (n > n0 && std::abs(s - prev) <= rel_tol * std::abs(s)) {
            return s;
        }
        prev = s;
    }
    return prev;
}

// Trapezoid refinement over [a,b] until stable.
inline double riemann_line(const std::function<double(double)>& g, double a,
                           double b, double rel_tol) {
    double prev = 0.0;
    for (int n = 256; n <= 1 << 22; n *= 2) {
        const double step = (b - a) / n;
        double s = 0.5 * (g(a) + g(b));
        for (int i = 1; i < n; ++i) {
            s += g(a + i * step);
        }
        s *= step;
        if (n > 256 && std::abs(s - prev) <= rel_tol * std::abs(s)) {
            return s;
        }
        prev = s;
    }
    return prev;
}

// Random single-width GaussPoly with real coefficients.
inline unckit::GaussPoly random_gausspoly(std::mt19937& rng, int max_degree,
                                          double width) {
    std::uniform_int_distribution<int> degree_dist(0, max_degree);
    std::uniform_real_distribution<double> coeff_dist(-2.0, 2.0);
    const int deg = degree_dist(rng);
    std::vector<double> c(deg + 1);
    for (double& v : c) v = coeff_dist(rng);
    if (c.back() == 0.0) c.back() = 1.0;
    return unckit::GaussPoly::single(c, width);
}

}  // namespace unckit_test

#endif
