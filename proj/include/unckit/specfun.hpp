#ifndef UNCKIT_SPECFUN_HPP_
#define UNCKIT_SPECFUN_HPP_

#include <complex>
#include <vector>

#include "unckit/errors.hpp"

namespace unckit {

using Complex = std::complex<double>;

inline constexpr int kHermiteDegreeCap = 32;

/// Principal-branch log Gamma(z).  Lanczos (g = 7, 9 coefficients) for
/// Re z >= 0.5, reflection formula below.  Relative error <= 1e-12 for
/// |z| <= 50.  Throws PoleError at z in {0, -1, -2, ...}.
Complex complex_log_gamma(Complex z);

/// Gamma(z) = exp(complex_log_gamma(z)).
Complex complex_gamma(Complex z);

/// Integral of x^(2m) e^(-s x^2 / 2) over the real line:
/// (2m-1)!! sqrt(2 pi) s^(-m - 1/2).  Throws DomainError for s <= 0.
double gaussian_moment(int m, double s);

/// Monomial coefficients of the physicists' Hermite polynomial H_n,
/// via H_{n+1} = 2 x H_n - 2 n H_{n-1}.  Index j is the coefficient
/// of x^j.  Throws CapExceeded above the degree cap.
std::vector<double> hermite_coeffs(int n, int cap = kHermiteDegreeCap);

/// Error function, absolute error <= 1e-14.
double erf(double x);

/// Gaussian tail bound: integral of e^(-w x^2 / 2) over [r, inf).
double gaussian_tail(double w, double r);

}  // namespace unckit

#endif
