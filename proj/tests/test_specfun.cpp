#include "unckit/specfun.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "unckit/quad.hpp"

using namespace unckit;
using unckit_test::kPi;
using unckit_test::kSqrt2Pi;

TEST_CASE("log gamma at classical points") {
    CHECK(std::abs(complex_log_gamma(1.0)) < 1e-14);
    CHECK(complex_log_gamma(0.5).real() ==
          doctest::Approx(std::log(std::sqrt(kPi))).epsilon(1e-13));
    CHECK(std::abs(complex_log_gamma(0.5).imag()) < 1e-14);
}

TEST_CASE("gamma(1/4) against the defining integral") {
    // Oracle: integral of t^{-3/4} e^{-t}; the substitution t = u^4 makes
    // the integrand 4 e^{-u^4}, smooth at the origin.
    const double oracle =
        integrate_interval([](double u) { return 4.0 * std::exp(-std::pow(u, 4)); },
                           0.0, 3.5, 1e-12)
            .value;
    CHECK(oracle == doctest::Approx(3.6256099082219083).epsilon(1e-11));
    CHECK(std::exp(complex_log_gamma(0.25).real()) ==
          doctest::Approx(oracle).epsilon(1e-11));
}

TEST_CASE("gamma poles rejected") {
    CHECK_THROWS_AS(complex_log_gamma(0.0), PoleError);
    CHECK_THROWS_AS(complex_log_gamma(-3.0), PoleError);
    CHECK_NOTHROW(complex_log_gamma(Complex(-3.0, 0.5)));
}

TEST_CASE("recurrence property: Gamma(z+1) = z Gamma(z)") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-20.0, 20.0);
    int tested = 0;
    while (tested < 1000) {
        const Complex z(dist(rng), dist(rng));
        if (std::abs(z.imag()) < 0.1 &&
            std::abs(z.real() - std::round(z.real())) < 0.1) {
            continue;  // too close to a pole
        }
        ++tested;
        const Complex lhs = std::exp(complex_log_gamma(z + 1.0));
        const Complex rhs = z * std::exp(complex_log_gamma(z));
        CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(lhs));
    }
}

TEST_CASE("reflection property: Gamma(z) Gamma(1-z) sin(pi z) = pi") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-8.0, 8.0);
    int tested = 0;
    while (tested < 200) {
        const Complex z(dist(rng), dist(rng));
        if (std::abs(z.imag()) < 0.1 &&
            std::abs(z.real() - std::round(z.real())) < 0.1) {
            continue;
        }
        ++tested;
        const Complex prod = std::exp(complex_log_gamma(z) +
                                      complex_log_gamma(1.0 - z)) *
                             std::sin(kPi * z);
        CHECK(std::abs(prod - kPi) <= 1e-10 * kPi);
    }
}

TEST_CASE("|Gamma(1/4 + it/2)| is even and decreasing in |t|") {
    double prev = 1e300;
    for (int i = 0; i <= 40; ++i) {
        const double t = static_cast<double>(i);
        const double up =
            std::exp(complex_log_gamma(Complex(0.25, 0.5 * t)).real());
        const double dn =
            std::exp(complex_log_gamma(Complex(0.25, -0.5 * t)).real());
        CHECK(up == doctest::Approx(dn).epsilon(1e-12));
        if (i > 0) CHECK(up < prev);
        prev = up;
    }
}

TEST_CASE("gaussian moments: closed form and quadrature oracle") {
    CHECK(gaussian_moment(0, 1.0) == doctest::Approx(kSqrt2Pi).epsilon(1e-14));
    CHECK(gaussian_moment(1, 1.0) == doctest::Approx(kSqrt2Pi).epsilon(1e-14));
    CHECK(gaussian_moment(2, 2.0) ==
          doctest::Approx(3.0 * std::sqrt(kPi) / 4.0).epsilon(1e-13));
    CHECK_THROWS_AS(gaussian_moment(1, 0.0), DomainError);
    CHECK_THROWS_AS(gaussian_moment(1, -2.0), DomainError);

    for (double s : {0.5, 1.0, 2.0, 4.0}) {
        for (int m = 0; m <= 8; ++m) {
            const double r = std::sqrt(110.0 / s);
            const double quad =
                integrate_interval(
                    [m, s](double x) {
                        return std::pow(x, 2 * m) * std::exp(-0.5 * s * x * x);
                    },
                    -r, r, 1e-12)
                    .value;
            CHECK(gaussian_moment(m, s) == doctest::Approx(quad).epsilon(1e-9));
        }
    }
}

TEST_CASE("hermite coefficients") {
    CHECK(hermite_coeffs(0) == std::vector<double>{1.0});
    CHECK(hermite_coeffs(1) == std::vector<double>{0.0, 2.0});
    CHECK(hermite_coeffs(3) == std::vector<double>{0.0, -12.0, 0.0, 8.0});
    CHECK_THROWS_AS(hermite_coeffs(33), CapExceeded);
    CHECK_THROWS_AS(hermite_coeffs(-1), DomainError);

    for (int n = 0; n <= 12; ++n) {
        const auto c = hermite_coeffs(n);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if ((static_cast<int>(j) - n) % 2 != 0) {
                CHECK(c[j] == 0.0);
            }
        }
    }
}

TEST_CASE("erf") {
    CHECK(unckit::erf(0.0) == 0.0);
    CHECK(unckit::erf(10.0) == doctest::Approx(1.0).epsilon(1e-15));
    // Taylor oracle: erf(1) = (2/sqrt(pi)) sum (-1)^n / (n! (2n+1)).
    double sum = 0.0;
    double term = 1.0;
    for (int n = 0; n < 30; ++n) {
        sum += term / (2 * n + 1);
        term *= -1.0 / (n + 1);
    }
    const double oracle = 2.0 / std::sqrt(kPi) * sum;
    CHECK(oracle == doctest::Approx(0.8427007929497149).epsilon(1e-14));
    CHECK(unckit::erf(1.0) == doctest::Approx(oracle).epsilon(1e-14));
}
