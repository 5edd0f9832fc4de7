#include "unckit/specfun.hpp"

#include <array>
#include <cmath>

namespace unckit {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr double kPi = 3.14159265358979323846;

// Lanczos, g = 7.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

// log sin(pi z), stable for large |Im z| (linear-space sin overflows
// past |Im z| ~ 220).
Complex log_sin_pi(Complex z) {
    if (std::abs(z.imag()) < 10.0) {
        return std::log(std::sin(kPi * z));
    }
    const Complex i(0.0, 1.0);
    if (z.imag() > 0.0) {
        // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
        return -i * kPi * z + std::log(Complex(0.0, 0.5)) +
               std::log(1.0 - std::exp(2.0 * i * kPi * z));
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

Complex log_gamma_core(Complex z) {
    // Valid for Re z >= 0.5.
    z -= 1.0;
    Complex sum = kLanczos[0];
    for (int k = 1; k < 9; ++k) {
        sum += kLanczos[k] / (z + static_cast<double>(k));
    }
    const Complex t = z + 7.5;
    return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

Complex complex_log_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("complex_log_gamma: non-finite argument");
    }
    if (z.imag() == 0.0 && z.real() <= 0.0 &&
        z.real() == std::floor(z.real())) {
        throw PoleError("complex_log_gamma: pole at non-positive integer");
    }
    if (z.real() >= 0.5) {
        return log_gamma_core(z);
    }
    // Reflection: log Gamma(z) = log(pi) - log sin(pi z) - log Gamma(1 - z).
    return std::log(kPi) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

Complex complex_gamma(Complex z) {
    return std::exp(complex_log_gamma(z));
}

double gaussian_moment(int m, double s) {
    if (s <= 0.0 || !std::isfinite(s)) {
        throw DomainError("gaussian_moment: width must be positive");
    }
    if (m < 0) {
        throw DomainError("gaussian_moment: order must be nonnegative");
    }
    double dfact = 1.0;  // (2m-1)!!
    for (int k = 3; k <= 2 * m - 1; k += 2) {
        dfact *= k;
    }
    return dfact * std::sqrt(2.0 * kPi) * std::pow(s, -m - 0.5);
}

std::vector<double> hermite_coeffs(int n, int cap) {
    if (n < 0) {
        throw DomainError("hermite_coeffs: order must be nonnegative");
    }
    if (n > cap) {
        throw CapExceeded("hermite_coeffs: order above degree cap");
    }
    std::vector<double> prev = {1.0};  // H_0
    if (n == 0) return prev;
    std::vector<double> cur = {0.0, 2.0};  // H_1
    for (int k = 1; k < n; ++k) {
        std::vector<double> next(k + 2, 0.0);
        for (std::size_t j = 0; j < cur.size(); ++j) {
            next[j + 1] += 2.0 * cur[j];
        }
        for (std::size_t j = 0; j < prev.size(); ++j) {
            next[j] -= 2.0 * k * prev[j];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double erf(double x) {
    return std::erf(x);
}

double gaussian_tail(double w, double r) {
    if (w <= 0.0) {
        throw DomainError("gaussian_tail: width must be positive");
    }
    return std::sqrt(kPi / (2.0 * w)) * std::erfc(r * std::sqrt(0.5 * w));
}

}  // namespace unckit
