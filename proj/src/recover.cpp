#include "unckit/recover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "unckit/lstsq.hpp"

namespace unckit {

namespace {

constexpr int kMaxRecoverDegree = 16;
constexpr double kGolden = 0.6180339887498949;

double sample_max(const SampledFn& s) {
    double ymax = 0.0;
    for (double y : s.ys) ymax = std::max(ymax, std::abs(y));
    return ymax;
}

// Least-squares fit of p(x) e^{-aa x^2/2} against the samples at a fixed
// degree and width; returns the residual RMS.  Fitting in sample space
// keeps the residual commensurate with the sample noise.
double fit_at(const SampledFn& s, int deg, double aa, std::vector<double>& c) {
    const std::size_t n = s.xs.size();
    std::vector<std::vector<double>> rows(n, std::vector<double>(deg + 1));
    for (std::size_t i = 0; i < n; ++i) {
        const double g = std::exp(-0.5 * aa * s.xs[i] * s.xs[i]);
        double p = g;
        for (int j = 0; j <= deg; ++j) {
            rows[i][j] = p;
            p *= s.xs[i];
        }
    }
    c = least_squares(rows, s.ys);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double fit = 0.0;
        for (int j = deg; j >= 0; --j) {
            fit = fit * s.xs[i] + c[j];
        }
        fit *= std::exp(-0.5 * aa * s.xs[i] * s.xs[i]);
        const double r = s.ys[i] - fit;
        ss += r * r;
    }
    return std::sqrt(ss / static_cast<double>(n));
}

// Golden-section search over the width bracket, minimizing the fit RMS at
// a fixed degree.
double refine_width(const SampledFn& s, int deg, double lo, double hi,
                    double& rms, std::vector<double>& c) {
    std::vector<double> tmp;
    double m1 = hi - kGolden * (hi - lo);
    double m2 = lo + kGolden * (hi - lo);
    double r1 = fit_at(s, deg, m1, tmp);
    double r2 = fit_at(s, deg, m2, tmp);
    while (hi - lo > 1e-7 * hi) {
        if (r1 <= r2) {
            hi = m2;
            m2 = m1;
            r2 = r1;
            m1 = hi - kGolden * (hi - lo);
            r1 = fit_at(s, deg, m1, tmp);
        } else {
            lo = m1;
            m1 = m2;
            r1 = r2;
            m2 = lo + kGolden * (hi - lo);
            r2 = fit_at(s, deg, m2, tmp);
        }
    }
    const double a = 0.5 * (lo + hi);
    rms = fit_at(s, deg, a, c);
    return a;
}

struct JointFit {
    double a = 0.0;
    double rms = 0.0;
    std::vector<double> coeffs;
};

// Degree selection with per-degree width refinement: the smallest degree
// whose refined residual falls below the threshold wins, else the best
// seen.  Each center in `centers` seeds a bracket [c/spread, c*spread];
// several centers guard against a badly biased initial width (low degrees
// are tried across every center before a higher degree can overfit).
JointFit joint_fit(const SampledFn& s, const std::vector<double>& centers,
                   double spread, double threshold) {
    const int dmax = std::min<int>(kMaxRecoverDegree,
                                   static_cast<int>(s.xs.size()) - 2);
    JointFit best;
    best.rms = std::numeric_limits<double>::infinity();
    for (int deg = 0; deg <= dmax; ++deg) {
        for (double a0 : centers) {
            std::vector<double> c;
            double rms = 0.0;
            const double a =
                refine_width(s, deg, a0 / spread, a0 * spread, rms, c);
            if (rms < best.rms) {
                best = {a, rms, std::move(c)};
            }
        }
        if (best.rms <= threshold) break;
    }
    return best;
}

// Log-space regression of log|y| on (-x^2/2, log|x|, 1) over the outer
// third of the signal-bearing range; seeds the joint fit.  Returns NaN
// when the data does not support it.
double crude_width(const SampledFn& s, double ymax) {
    const double floor = 1e-5 * ymax;
    double xm = 0.0;
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
        if (std::abs(s.ys[i]) >= floor) {
            xm = std::max(xm, std::abs(s.xs[i]));
        }
    }
    const double cut = (2.0 / 3.0) * xm;
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
        const double x = s.xs[i];
        const double ax = std::abs(s.ys[i]);
        if (std::abs(x) < cut || ax < floor) continue;
        rows.push_back({-0.5 * x * x, std::log(std::abs(x)), 1.0});
        rhs.push_back(std::log(ax));
    }
    if (rows.size() < 4) {
        // Fall back to the radius where the signal meets the floor.
        return xm > 0.0 ? 2.0 * std::log(1e5) / (xm * xm)
                        : std::numeric_limits<double>::quiet_NaN();
    }
    try {
        const double a = least_squares(rows, rhs)[0];
        if (a > 0.0 && std::isfinite(a)) return a;
    } catch (const DegenerateData&) {
    }
    return xm > 0.0 ? 2.0 * std::log(1e5) / (xm * xm)
                    : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

SampledFn::SampledFn(std::vector<double> x, std::vector<double> y)
    : xs(std::move(x)), ys(std::move(y)) {
    if (xs.size() != ys.size() || xs.size() < 8) {
        throw ValidationError("SampledFn: need matching grids of length >= 8");
    }
    const double span = xs.back() - xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] <= xs[i - 1]) {
            throw ValidationError("SampledFn: grid must strictly increase");
        }
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (std::abs(xs[i] + xs[xs.size() - 1 - i]) > 1e-9 * span) {
            throw ValidationError("SampledFn: grid must be symmetric about 0");
        }
    }
}

double fit_gaussian_width(const SampledFn& s) {
    const double ymax = sample_max(s);
    if (ymax <= 0.0) {
        throw DegenerateData("fit_gaussian_width: all samples are zero");
    }
    // Crude log-space estimate first, then a joint polynomial-and-width
    // fit: the crude slope carries a bias from subleading polynomial
    // terms, which the refinement removes.
    const double a0 = crude_width(s, ymax);
    if (!(a0 > 0.0) || !std::isfinite(a0)) {
        throw DegenerateData("fit_gaussian_width: no gaussian decay found");
    }
    const JointFit fit = joint_fit(
        s, {0.25 * a0, 0.5 * a0, a0, 2.0 * a0, 4.0 * a0}, 2.0, 1e-6 * ymax);
    if (!(fit.a > 0.0) || !std::isfinite(fit.a)) {
        throw DegenerateData("fit_gaussian_width: no gaussian decay found");
    }
    return fit.a;
}

std::vector<double> recover_polynomial(const SampledFn& s, double a) {
    if (!(a > 0.0)) {
        throw DomainError("recover_polynomial: width must be positive");
    }
    const double ymax = sample_max(s);
    if (ymax == 0.0) {
        throw DegenerateData("recover_polynomial: all samples are zero");
    }
    // The incoming width estimate may carry a small residual bias; let the
    // joint fit absorb it in the width rather than in the coefficients.
    return joint_fit(s, {a}, 1.05, 1e-6 * ymax).coeffs;
}

ThetaFit fit_theta_exponent(
    const std::vector<std::pair<double, double>>& values) {
    if (values.size() < 8) {
        throw DegenerateData("fit_theta_exponent: need >= 8 samples");
    }
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (const auto& [z, th] : values) {
        if (th == 0.0) continue;
        rows.push_back({z, std::log1p(std::abs(z)), 1.0});
        rhs.push_back(std::log(std::abs(th)));
    }
    if (rows.size() * 2 < values.size()) {
        throw DegenerateData("fit_theta_exponent: too many vanishing samples");
    }
    const double rate = least_squares(rows, rhs)[0];
    if (!std::isfinite(rate)) {
        throw DegenerateData("fit_theta_exponent: rate did not converge");
    }

    // Polynomial part from Theta e^{-rate z}, smallest adequate degree.
    const std::size_t n = values.size();
    std::vector<double> target(n);
    double tmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        target[i] = values[i].second * std::exp(-rate * values[i].first);
        tmax = std::max(tmax, std::abs(target[i]));
    }
    ThetaFit fit;
    fit.exp_rate = rate;
    fit.residual = std::numeric_limits<double>::infinity();
    const int dmax = std::min<int>(8, static_cast<int>(n) - 4);
    for (int deg = 0; deg <= dmax; ++deg) {
        std::vector<std::vector<double>> prows(n,
                                               std::vector<double>(deg + 1));
        for (std::size_t i = 0; i < n; ++i) {
            double p = 1.0;
            for (int j = 0; j <= deg; ++j) {
                prows[i][j] = p;
                p *= values[i].first;
            }
        }
        const std::vector<double> c = least_squares(prows, target);
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double v = 0.0;
            for (int j = deg; j >= 0; --j) {
                v = v * values[i].first + c[j];
            }
            ss += (target[i] - v) * (target[i] - v);
        }
        const double rms = std::sqrt(ss / static_cast<double>(n));
        if (rms < fit.residual) {
            fit.residual = rms;
            fit.poly_coeffs.assign(c.begin(), c.end());
        }
        if (rms <= 1e-8 * std::max(1.0, tmax)) break;
    }
    return fit;
}

}  // namespace unckit
