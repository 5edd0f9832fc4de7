#ifndef UNCKIT_MELLIN_HPP_
#define UNCKIT_MELLIN_HPP_

#include <vector>

#include "unckit/funcmodel.hpp"
#include "unckit/specfun.hpp"

namespace unckit {

struct MellinValue {
    Complex z;
    int k = 0;  // parity index, 0 or 1
    Complex value;
};

// Factored form Theta(z) ~ poly(z) e^{exp_rate z} of a fit, or the
// polynomial p^k of the Theta(z) Theta(-z) product (exp_rate 0 there).
struct ThetaFit {
    std::vector<Complex> poly_coeffs;
    double exp_rate = 0.0;
    double residual = 0.0;
};

/// M^k_f(z) = (1/sqrt(2 pi)) integral of f(x) sgn^k(x) |x|^{z-1/2} by
/// quadrature after the substitution x = u^2.  Requires |Re z| < 1/2.
Complex mellin_numeric(const GaussPoly& f, int k, Complex z, double tol = 1e-10);

/// Exact Mellin transform of a GaussPoly: each monomial x^m gamma_a with
/// m = k (mod 2) contributes
/// (1/sqrt(2 pi)) (a/2)^{-z/2 - m/2 - 1/4} Gamma(z/2 + m/2 + 1/4).
Complex mellin_gausspoly_closed(const GaussPoly& f, int k, Complex z);

/// Theta^k_f(z) = M^k_f(z) / Gamma(z/2 + k/2 + 1/4), with the Gamma
/// ratios taken as finite rising products so no pole is ever crossed.
Complex theta(const GaussPoly& f, int k, Complex z);

/// Gamma-sum Mellin transform of the partial-fraction form of F.
Complex mellin_F_closed(const PartialFractionF& pf, int k, Complex z);

/// Max relative deviation of M^k_F(it) from M^k_f(it) M^k_f(-it) over the
/// grid.  f must be single-width, real, and of pure parity.
double verify_product_identity(const GaussPoly& f,
                               const std::vector<double>& t_grid);

/// |Theta^k_{fhat}(z) - i^{-k} 2^z Theta^k_f(-z)|.
double theta_hat_relation(const GaussPoly& f, int k, Complex z);

/// Least-squares polynomial fit of Theta(z) Theta(-z) on the grid, degree
/// chosen as the smallest with residual below 1e-8.
ThetaFit theta_product_poly(const GaussPoly& f, int k,
                            const std::vector<double>& z_grid);

/// Evenly spaced real grid, a convenience for the fit above.
std::vector<double> real_grid(double lo, double hi, int n);

}  // namespace unckit

#endif
