#include "unckit/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "unckit/lstsq.hpp"
#include "unckit/quad.hpp"

namespace unckit {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005;
constexpr double kLn2 = 0.69314718055994531;

Complex cpow_real_base(double base, Complex p) {
    return std::exp(p * std::log(base));
}

}  // namespace

Complex mellin_numeric(const GaussPoly& f, int k, Complex z, double tol) {
    if (k != 0 && k != 1) throw DomainError("mellin_numeric: k must be 0 or 1");
    if (std::abs(z.real()) >= 0.5) {
        throw DomainError("mellin_numeric: need |Re z| < 1/2");
    }
    // x = u^2 removes the endpoint singularity of |x|^{z-1/2}.
    const double sign = (k == 0) ? 1.0 : -1.0;
    auto g = [&](double u) -> Complex {
        const double x = u * u;
        const Complex fs = f.eval(x) + sign * f.eval(-x);
        return fs * std::exp(2.0 * z * std::log(u));
    };
    const double r = std::pow(90.0 / f.min_width(), 0.25) + 2.0;

    const double scale =
        integrate_interval([&](double u) { return std::abs(g(u)); }, 1e-30, r,
                           1e-3, 1e-290)
            .value +
        1e-290;
    const double abs_tol = 0.25 * tol * scale;
    const double re = integrate_interval([&](double u) { return g(u).real(); },
                                         0.0, r, tol / 4.0, abs_tol)
                          .value;
    const double im = integrate_interval([&](double u) { return g(u).imag(); },
                                         0.0, r, tol / 4.0, abs_tol)
                          .value;
    return 2.0 * Complex(re, im) / kSqrt2Pi;
}

Complex mellin_gausspoly_closed(const GaussPoly& f, int k, Complex z) {
    if (k != 0 && k != 1) {
        throw DomainError("mellin_gausspoly_closed: k must be 0 or 1");
    }
    Complex sum = 0.0;
    for (const auto& term : f.terms()) {
        const double half_a = 0.5 * term.width;
        for (std::size_t m = 0; m < term.coeffs.size(); ++m) {
            if (static_cast<int>(m % 2) != k) continue;
            const Complex c = term.coeffs[m];
            if (c == Complex(0.0, 0.0)) continue;
            const Complex expo = -0.5 * z - 0.5 * static_cast<double>(m) - 0.25;
            sum += c * std::exp(expo * std::log(half_a) +
                                complex_log_gamma(0.5 * z +
                                                  0.5 * static_cast<double>(m) +
                                                  0.25));
        }
    }
    return sum / kSqrt2Pi;
}

Complex theta(const GaussPoly& f, int k, Complex z) {
    if (k != 0 && k != 1) throw DomainError("theta: k must be 0 or 1");
    const Complex w = 0.5 * z + 0.5 * static_cast<double>(k) + 0.25;
    Complex sum = 0.0;
    for (const auto& term : f.terms()) {
        const double half_a = 0.5 * term.width;
        for (std::size_t m = 0; m < term.coeffs.size(); ++m) {
            if (static_cast<int>(m % 2) != k) continue;
            const Complex c = term.coeffs[m];
            if (c == Complex(0.0, 0.0)) continue;
            // Gamma(w + j)/Gamma(w) as a rising product: entire in z.
            const int j = (static_cast<int>(m) - k) / 2;
            Complex ratio = 1.0;
            for (int i = 0; i < j; ++i) {
                ratio *= w + static_cast<double>(i);
            }
            const Complex expo = -0.5 * z - 0.5 * static_cast<double>(m) - 0.25;
            sum += c * ratio * cpow_real_base(half_a, expo);
        }
    }
    return sum / kSqrt2Pi;
}

Complex mellin_F_closed(const PartialFractionF& pf, int k, Complex z) {
    if (k != 0 && k != 1) {
        throw DomainError("mellin_F_closed: k must be 0 or 1");
    }
    Complex sum = 0.0;
    const auto& coef = (k == 0) ? pf.t : pf.u;
    for (std::size_t j = 0; j < coef.size(); ++j) {
        if (coef[j] == 0.0) continue;
        const double dj = static_cast<double>(j);
        Complex lg;
        if (k == 0) {
            lg = complex_log_gamma(0.5 * z + 0.25) +
                 complex_log_gamma(dj - 0.5 * z + 0.25) -
                 complex_log_gamma(dj + 0.5);
        } else {
            lg = complex_log_gamma(0.5 * z + 0.75) +
                 complex_log_gamma(dj - 0.5 * z - 0.25) -
                 complex_log_gamma(dj + 0.5);
        }
        sum += coef[j] * std::exp(lg);
    }
    return sum / kSqrt2Pi;
}

double verify_product_identity(const GaussPoly& f,
                               const std::vector<double>& t_grid) {
    const double width = f.common_width();
    (void)width;
    auto [even, odd] = parity_parts(f);
    int k;
    if (odd.empty()) {
        k = 0;
    } else if (even.empty()) {
        k = 1;
    } else {
        throw DomainError("verify_product_identity: f must have pure parity");
    }
    const PartialFractionF pf = autocorr_closed(f);
    double worst = 0.0;
    for (double t : t_grid) {
        const Complex z(0.0, t);
        const Complex lhs = mellin_F_closed(pf, k, z);
        const Complex rhs = mellin_gausspoly_closed(f, k, z) *
                            mellin_gausspoly_closed(f, k, -z);
        const double denom = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
        worst = std::max(worst, std::abs(lhs - rhs) / denom);
    }
    return worst;
}

double theta_hat_relation(const GaussPoly& f, int k, Complex z) {
    if (std::abs(z.real()) >= 0.5) {
        throw DomainError("theta_hat_relation: need |Re z| < 1/2");
    }
    const GaussPoly fh = fourier(f);
    const Complex ik = (k == 0) ? Complex(1.0, 0.0) : Complex(0.0, -1.0);
    const Complex lhs = theta(fh, k, z);
    const Complex rhs = ik * std::exp(z * kLn2) * theta(f, k, -z);
    return std::abs(lhs - rhs);
}

ThetaFit theta_product_poly(const GaussPoly& f, int k,
                            const std::vector<double>& z_grid) {
    const double width = f.common_width();
    (void)width;
    const std::size_t n = z_grid.size();
    if (n < 4) throw DegenerateData("theta_product_poly: grid too small");

    std::vector<Complex> vals(n);
    for (std::size_t i = 0; i < n; ++i) {
        vals[i] = theta(f, k, Complex(z_grid[i], 0.0)) *
                  theta(f, k, Complex(-z_grid[i], 0.0));
    }

    const int dmax = std::min(f.degree() + 1, static_cast<int>(n) - 2);
    ThetaFit best;
    best.residual = std::numeric_limits<double>::infinity();
    for (int deg = 0; deg <= dmax; ++deg) {
        std::vector<std::vector<double>> rows(n,
                                              std::vector<double>(deg + 1));
        std::vector<double> re(n), im(n);
        for (std::size_t i = 0; i < n; ++i) {
            double p = 1.0;
            for (int j = 0; j <= deg; ++j) {
                rows[i][j] = p;
                p *= z_grid[i];
            }
            re[i] = vals[i].real();
            im[i] = vals[i].imag();
        }
        const std::vector<double> cre = least_squares(rows, re);
        const std::vector<double> cim = least_squares(rows, im);
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex fit = 0.0;
            for (int j = deg; j >= 0; --j) {
                fit = fit * z_grid[i] + Complex(cre[j], cim[j]);
            }
            ss += std::norm(vals[i] - fit);
        }
        const double rms = std::sqrt(ss / static_cast<double>(n));
        if (rms < best.residual) {
            best.poly_coeffs.assign(deg + 1, 0.0);
            for (int j = 0; j <= deg; ++j) {
                best.poly_coeffs[j] = Complex(cre[j], cim[j]);
            }
            best.exp_rate = 0.0;
            best.residual = rms;
        }
        if (rms <= 1e-8) break;
    }
    return best;
}

std::vector<double> real_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        g[i] = lo + (hi - lo) * i / (n - 1.0);
    }
    return g;
}

}  // namespace unckit
