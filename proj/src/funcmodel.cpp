#include "unckit/funcmodel.hpp"

#include <algorithm>
#include <cmath>

#include "unckit/quad.hpp"

namespace unckit {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005;

std::vector<Complex> trim(std::vector<Complex> c) {
    while (!c.empty() && c.back() == Complex(0.0, 0.0)) {
        c.pop_back();
    }
    return c;
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

}  // namespace

GaussPolyTerm::GaussPolyTerm(std::vector<Complex> c, double a)
    : coeffs(trim(std::move(c))), width(a) {
    if (!(width > 0.0) || !std::isfinite(width)) {
        throw ValidationError("GaussPolyTerm: width must be positive");
    }
    if (coeffs.empty()) {
        throw ValidationError("GaussPolyTerm: zero polynomial");
    }
    if (degree() > kTermDegreeCap) {
        throw CapExceeded("GaussPolyTerm: degree above cap");
    }
    for (const Complex& v : coeffs) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw ValidationError("GaussPolyTerm: non-finite coefficient");
        }
    }
}

GaussPolyTerm::GaussPolyTerm(std::vector<double> c, double a)
    : GaussPolyTerm(std::vector<Complex>(c.begin(), c.end()), a) {}

bool GaussPolyTerm::is_real(double tol) const {
    return std::all_of(coeffs.begin(), coeffs.end(), [tol](const Complex& v) {
        return std::abs(v.imag()) <= tol;
    });
}

GaussPoly::GaussPoly(std::vector<GaussPolyTerm> terms)
    : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(),
              [](const GaussPolyTerm& a, const GaussPolyTerm& b) {
                  return a.width < b.width;
              });
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        if (terms_[i].width == terms_[i - 1].width) {
            throw ValidationError("GaussPoly: duplicate width");
        }
    }
}

GaussPoly GaussPoly::single(std::vector<double> coeffs, double width) {
    std::vector<GaussPolyTerm> t;
    t.emplace_back(std::move(coeffs), width);
    return GaussPoly(std::move(t));
}

bool GaussPoly::is_real(double tol) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [tol](const GaussPolyTerm& t) { return t.is_real(tol); });
}

int GaussPoly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.degree());
    return d;
}

double GaussPoly::min_width() const {
    if (terms_.empty()) throw DomainError("GaussPoly: empty");
    return terms_.front().width;
}

double GaussPoly::max_width() const {
    if (terms_.empty()) throw DomainError("GaussPoly: empty");
    return terms_.back().width;
}

double GaussPoly::common_width() const {
    if (terms_.empty()) throw DomainError("GaussPoly: empty");
    if (terms_.size() > 1) {
        throw MixedWidthError("GaussPoly: terms have distinct widths");
    }
    return terms_.front().width;
}

Complex GaussPoly::eval(double x) const {
    Complex s = 0.0;
    for (const auto& t : terms_) {
        Complex p = 0.0;
        for (auto it = t.coeffs.rbegin(); it != t.coeffs.rend(); ++it) {
            p = p * x + *it;
        }
        s += p * std::exp(-0.5 * t.width * x * x);
    }
    return s;
}

double GaussPoly::eval_real(double x) const {
    return eval(x).real();
}

double PartialFractionF::eval(double lambda) const {
    const double w = lambda * lambda + 1.0;
    double s = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
        s += t[j] * std::pow(w, -(static_cast<double>(j) + 0.5));
    }
    for (std::size_t j = 0; j < u.size(); ++j) {
        s += u[j] * lambda * std::pow(w, -(static_cast<double>(j) + 0.5));
    }
    return s;
}

GaussPoly fourier(const GaussPoly& f) {
    std::vector<GaussPolyTerm> out;
    for (const auto& term : f.terms()) {
        const double a = term.width;
        const double sa = std::sqrt(a);
        const int deg = term.degree();

        // Rescale to unit width: p(u/sqrt(a)) in the monomial basis.
        std::vector<Complex> mono(term.coeffs);
        for (int j = 0; j <= deg; ++j) {
            mono[j] *= std::pow(sa, -j);
        }

        // Hermite expansion; H_n gamma_1 is a Fourier eigenfunction with
        // eigenvalue (-i)^n under this convention.
        std::vector<Complex> herm(deg + 1, 0.0);
        for (int n = deg; n >= 0; --n) {
            const std::vector<double> hn = hermite_coeffs(n);
            const Complex b = mono[n] / hn[n];
            herm[n] = b;
            for (int j = 0; j <= n; ++j) {
                mono[j] -= b * hn[j];
            }
        }

        const Complex mi(0.0, -1.0);
        std::vector<Complex> img(deg + 1, 0.0);
        Complex phase = 1.0;
        for (int n = 0; n <= deg; ++n) {
            if (herm[n] != Complex(0.0, 0.0)) {
                const std::vector<double> hn = hermite_coeffs(n);
                for (int j = 0; j <= n; ++j) {
                    img[j] += phase * herm[n] * hn[j] * std::pow(sa, -j - 1);
                }
            }
            phase *= mi;
        }
        out.emplace_back(std::move(img), 1.0 / a);
    }
    return GaussPoly(std::move(out));
}

std::pair<GaussPoly, GaussPoly> parity_parts(const GaussPoly& f) {
    std::vector<GaussPolyTerm> even, odd;
    for (const auto& term : f.terms()) {
        std::vector<Complex> ce(term.coeffs.size(), 0.0);
        std::vector<Complex> co(term.coeffs.size(), 0.0);
        for (std::size_t j = 0; j < term.coeffs.size(); ++j) {
            (j % 2 == 0 ? ce : co)[j] = term.coeffs[j];
        }
        if (!trim(ce).empty()) even.emplace_back(std::move(ce), term.width);
        if (!trim(co).empty()) odd.emplace_back(std::move(co), term.width);
    }
    return {GaussPoly(std::move(even)), GaussPoly(std::move(odd))};
}

double exp_moment(const GaussPoly& f, double eps, double tol) {
    if (eps < 0.0) throw DomainError("exp_moment: eps must be nonnegative");
    double amp = 0.0;
    for (const auto& t : f.terms()) {
        for (const Complex& c : t.coeffs) amp += std::abs(c);
    }
    Envelope env{std::max(amp, 1e-300), f.min_width(), eps, f.degree()};
    auto g = [&](double x) {
        return std::abs(f.eval(x)) * std::exp(eps * std::abs(x));
    };
    return integrate_line(g, env, tol).value;
}

double autocorr_eval(const GaussPoly& f, double lambda) {
    if (!f.is_real(0.0)) {
        throw DomainError("autocorr_eval: coefficients must be real");
    }
    double s = 0.0;
    for (const auto& t1 : f.terms()) {
        for (const auto& t2 : f.terms()) {
            const double sw = t1.width + t2.width * lambda * lambda;
            for (std::size_t m = 0; m < t1.coeffs.size(); ++m) {
                for (std::size_t n = 0; n < t2.coeffs.size(); ++n) {
                    if ((m + n) % 2 != 0) continue;
                    const double c = t1.coeffs[m].real() * t2.coeffs[n].real();
                    if (c == 0.0) continue;
                    s += c * std::pow(lambda, static_cast<double>(n)) *
                         gaussian_moment(static_cast<int>((m + n) / 2), sw);
                }
            }
        }
    }
    return s / kSqrt2Pi;
}

PartialFractionF autocorr_closed(const GaussPoly& f) {
    if (!f.is_real(0.0)) {
        throw DomainError("autocorr_closed: coefficients must be real");
    }
    const double a = f.common_width();
    const auto& coeffs = f.terms().front().coeffs;
    const int deg = f.degree();

    PartialFractionF pf;
    pf.t.assign(deg + 1, 0.0);
    pf.u.assign(deg + 1, 0.0);

    for (int m = 0; m <= deg; ++m) {
        for (int n = 0; n <= deg; ++n) {
            if ((m + n) % 2 != 0) continue;
            const double c = coeffs[m].real() * coeffs[n].real();
            if (c == 0.0) continue;
            const int big_k = (m + n) / 2;
            // Moment of x^{m+n} against e^{-a(1+l^2)x^2/2}:
            // (m+n-1)!! a^{-K-1/2} (1+l^2)^{-K-1/2}.
            double dfact = 1.0;
            for (int q = 3; q <= m + n - 1; q += 2) dfact *= q;
            const double base = c * dfact * std::pow(a, -big_k - 0.5);
            // Exact division: l^{2r} = ((l^2+1) - 1)^r.
            const int r = n / 2;
            auto& target = (n % 2 == 0) ? pf.t : pf.u;
            for (int i = 0; i <= r; ++i) {
                target[big_k - i] +=
                    base * binom(r, i) * ((r - i) % 2 == 0 ? 1.0 : -1.0);
            }
        }
    }
    return pf;
}

double reflection_residual(const GaussPoly& f, double lambda) {
    if (lambda == 0.0) {
        throw DomainError("reflection_residual: lambda must be nonzero");
    }
    return std::abs(autocorr_eval(f, 1.0 / lambda) -
                    std::abs(lambda) * autocorr_eval(f, lambda));
}

}  // namespace unckit
