#include "unckit/beurling.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

namespace unckit {

namespace {

Envelope poly_gauss_envelope(const GaussPoly& f, double extra_amp = 1.0) {
    double amp = 0.0;
    for (const auto& t : f.terms()) {
        for (const Complex& c : t.coeffs) amp += std::abs(c);
    }
    return Envelope{2.0 * extra_amp * std::max(amp, 1e-300), f.min_width(), 0.0,
                    f.degree()};
}

// log|p(x)| for one term's polynomial, stable for large |x| (factor out
// the leading power instead of overflowing Horner).
double log_abs_poly(const std::vector<Complex>& c, double x) {
    const int deg = static_cast<int>(c.size()) - 1;
    if (std::abs(x) <= 1.0) {
        Complex acc = 0.0;
        for (int j = deg; j >= 0; --j) acc = acc * x + c[j];
        return std::log(std::abs(acc));
    }
    const double u = 1.0 / x;
    Complex acc = 0.0;
    for (int j = 0; j <= deg; ++j) acc = acc * u + c[j];
    return deg * std::log(std::abs(x)) + std::log(std::abs(acc));
}

// log(|f(x)| + |f(-x)|): folds both half-axes onto the first quadrant.
// Computed per term in log space so the gaussian decay never underflows
// and the integrand stays smooth arbitrarily far out.
auto log_folded(const GaussPoly& f) {
    return [f](double x) {
        double m = -std::numeric_limits<double>::infinity();
        std::vector<double> ls;
        for (double s : {x, -x}) {
            for (const auto& t : f.terms()) {
                const double l =
                    log_abs_poly(t.coeffs, s) - 0.5 * t.width * s * s;
                ls.push_back(l);
                m = std::max(m, l);
            }
        }
        if (!std::isfinite(m)) return m;
        double acc = 0.0;
        for (double l : ls) acc += std::exp(l - m);
        return m + std::log(acc);
    };
}

}  // namespace

std::vector<double> default_schedule() {
    std::vector<double> s;
    for (int k = 2; k <= 12; ++k) {
        s.push_back(1.0 - std::pow(2.0, -k));
    }
    return s;
}

QuadrantOutcome uncertainty_integral(const GaussPoly& f, double lambda,
                                     double tol) {
    if (!f.is_real(0.0)) {
        throw DomainError("uncertainty_integral: f must be real");
    }
    if (lambda < 0.0 || lambda >= 1.0) {
        throw DomainError("uncertainty_integral: lambda must lie in [0, 1)");
    }
    const GaussPoly fh = fourier(f);
    auto gx = log_folded(f);
    auto gy = log_folded(fh);
    auto h = [gx, gy, lambda](double x, double y) {
        return std::exp(gx(x) + gy(y) + lambda * x * y);
    };
    return integrate_quadrant(h, lambda, poly_gauss_envelope(f),
                              poly_gauss_envelope(fh), tol);
}

ScanResult scan_growth(const GaussPoly& f, const std::vector<double>& schedule,
                       double tol, int threads) {
    if (schedule.size() < 4) {
        throw ScheduleTooShort("scan_growth: need at least 4 schedule points");
    }
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i] < 0.0 || schedule[i] >= 1.0 ||
            (i > 0 && schedule[i] <= schedule[i - 1])) {
            throw DomainError("scan_growth: schedule must ascend within [0, 1)");
        }
    }

    std::vector<QuadrantOutcome> outcomes(schedule.size());
    if (threads > 1) {
        std::vector<std::future<QuadrantOutcome>> futs;
        futs.reserve(schedule.size());
        for (double l : schedule) {
            futs.push_back(std::async(std::launch::async, [&f, l, tol] {
                return uncertainty_integral(f, l, tol);
            }));
        }
        for (std::size_t i = 0; i < futs.size(); ++i) {
            outcomes[i] = futs[i].get();
        }
    } else {
        for (std::size_t i = 0; i < schedule.size(); ++i) {
            outcomes[i] = uncertainty_integral(f, schedule[i], tol);
        }
    }

    ScanResult res;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (const auto* div = std::get_if<Divergence>(&outcomes[i])) {
            res.diverged_at = div->lambda;
            return res;
        }
        res.lambdas.push_back(schedule[i]);
        res.values.push_back(std::get<QuadResult>(outcomes[i]).value);
        res.errs.push_back(std::get<QuadResult>(outcomes[i]).err_estimate);
    }

    // Slope of log I against -log(1 - lambda) over the last four points.
    const std::size_t n = res.lambdas.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = n - 4; i < n; ++i) {
        const double x = -std::log1p(-res.lambdas[i]);
        const double y = std::log(res.values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (4.0 * sxy - sx * sy) / (4.0 * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / 4.0;
    double ss = 0.0;
    for (std::size_t i = n - 4; i < n; ++i) {
        const double x = -std::log1p(-res.lambdas[i]);
        const double r = std::log(res.values[i]) - (intercept + slope * x);
        ss += r * r;
    }
    res.exponent = slope;
    res.residual = std::sqrt(ss / 4.0);
    return res;
}

double mixed_blowup_threshold(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("mixed_blowup_threshold: widths must be positive");
    }
    return std::min(1.0, std::sqrt(a / b));
}

QuadrantOutcome bdj_integral(const GaussPoly& f, double big_n, double lambda,
                             double tol) {
    if (!f.is_real(0.0)) {
        throw DomainError("bdj_integral: f must be real");
    }
    if (lambda < 0.0 || lambda > 1.0) {
        throw DomainError("bdj_integral: lambda must lie in [0, 1]");
    }
    const GaussPoly fh = fourier(f);
    auto gx = log_folded(f);
    auto gy = log_folded(fh);
    auto h = [gx, gy, lambda, big_n](double x, double y) {
        return std::exp(gx(x) + gy(y) + lambda * x * y -
                        big_n * std::log1p(x + y));
    };
    return integrate_quadrant(h, lambda, poly_gauss_envelope(f),
                              poly_gauss_envelope(fh), tol);
}

double bdj_max_bound(double big_n, double lambda) {
    if (!(lambda > 0.0) || !(lambda < 1.0)) {
        throw DomainError("bdj_max_bound: lambda must lie in (0, 1)");
    }
    if (big_n < 0.0) {
        throw DomainError("bdj_max_bound: N must be nonnegative");
    }
    const double t = std::max(1.0, big_n / (1.0 - lambda) - 2.0);
    return std::exp((lambda - 1.0) * t) * std::pow(2.0 + t, big_n);
}

}  // namespace unckit
