#include "unckit/mellin.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "unckit/quad.hpp"

using namespace unckit;
using unckit_test::kPi;
using unckit_test::kSqrt2Pi;

namespace {

const GaussPoly g1 = GaussPoly::single({1.0}, 1.0);
const GaussPoly xg1 = GaussPoly::single({0.0, 1.0}, 1.0);

}  // namespace

TEST_CASE("mellin numeric at checkpoints") {
    // (gamma_1, k=0, z=0) -> 2^{1/4} Gamma(1/4) / sqrt(2 pi)
    const double expect =
        std::pow(2.0, 0.25) * std::exp(complex_log_gamma(0.25).real()) / kSqrt2Pi;
    CHECK(expect == doctest::Approx(1.7200).epsilon(1e-4));
    CHECK(std::abs(mellin_numeric(g1, 0, 0.0) - Complex(expect)) < 1e-8 * expect);

    CHECK(std::abs(mellin_numeric(xg1, 0, Complex(0.1, 0.7))) < 1e-10);

    const double odd_expect =
        std::pow(2.0, 0.75) * std::exp(complex_log_gamma(0.75).real()) / kSqrt2Pi;
    CHECK(odd_expect == doctest::Approx(0.8222).epsilon(1e-4));
    CHECK(std::abs(mellin_numeric(xg1, 1, 0.0) - Complex(odd_expect)) <
          1e-8 * odd_expect);

    CHECK_THROWS_AS(mellin_numeric(g1, 0, Complex(0.6, 0.0)), DomainError);
}

TEST_CASE("closed-form mellin matches the numeric route") {
    std::mt19937 rng(3);
    for (int i = 0; i < 8; ++i) {
        const GaussPoly f = unckit_test::random_gausspoly(
            rng, 4, std::uniform_real_distribution<double>(0.5, 3.0)(rng));
        for (int k = 0; k <= 1; ++k) {
            for (double t : {0.0, 1.0, 3.0, 7.0}) {
                const Complex z(0.0, t);
                const Complex closed = mellin_gausspoly_closed(f, k, z);
                const Complex numeric = mellin_numeric(f, k, z);
                const double scale = std::max(std::abs(closed), 1e-3);
                CHECK(std::abs(closed - numeric) <= 1e-7 * scale);
            }
        }
    }
}

TEST_CASE("closed form values") {
    const double m0 = std::abs(mellin_gausspoly_closed(g1, 0, 0.0));
    CHECK(m0 == doctest::Approx(1.7200).epsilon(1e-4));
    CHECK(std::abs(mellin_gausspoly_closed(g1, 1, Complex(0.1, 2.0))) == 0.0);
    CHECK(std::abs(mellin_gausspoly_closed(xg1, 1, 0.0)) ==
          doctest::Approx(0.8222).epsilon(1e-4));
}

TEST_CASE("conjugate symmetry for real f") {
    std::mt19937 rng(17);
    for (int i = 0; i < 6; ++i) {
        const GaussPoly f = unckit_test::random_gausspoly(rng, 4, 1.7);
        for (int k = 0; k <= 1; ++k) {
            for (double t : {0.5, 2.0, 9.0}) {
                const Complex z(0.2, t);
                const Complex a = mellin_gausspoly_closed(f, k, std::conj(z));
                const Complex b = std::conj(mellin_gausspoly_closed(f, k, z));
                CHECK(std::abs(a - b) <= 1e-12 * std::max(1e-30, std::abs(b)));
                const double up = std::abs(theta(f, k, Complex(0.0, t)));
                const double dn = std::abs(theta(f, k, Complex(0.0, -t)));
                CHECK(up == doctest::Approx(dn).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("theta closed form for gamma_1") {
    const double expect = std::pow(2.0, 0.25) / kSqrt2Pi;
    CHECK(std::abs(theta(g1, 0, 0.0) - Complex(expect)) < 1e-13);
    CHECK(expect == doctest::Approx(0.4744).epsilon(1e-4));
    // Theta(z) Theta(-z) constant sqrt(2)/(2 pi)
    for (double z : {-2.0, 0.3, 1.7}) {
        const Complex prod = theta(g1, 0, z) * theta(g1, 0, -z);
        CHECK(prod.real() ==
              doctest::Approx(std::sqrt(2.0) / (2.0 * kPi)).epsilon(1e-12));
        CHECK(std::abs(prod.imag()) < 1e-15);
    }
    CHECK(std::abs(theta(g1, 1, Complex(0.4, 1.0))) == 0.0);
}

TEST_CASE("theta grows at most polynomially on the imaginary axis") {
    std::mt19937 rng(29);
    for (int i = 0; i < 6; ++i) {
        const GaussPoly f = unckit_test::random_gausspoly(rng, 5, 1.2);
        for (int k = 0; k <= 1; ++k) {
            double bound = 0.0;
            for (int t = 0; t <= 40; ++t) {
                const double v = std::abs(theta(f, k, Complex(0.0, (double)t)));
                bound = std::max(bound, v / std::pow(1.0 + t, f.degree()));
            }
            // the ratio must not blow up toward the end of the range
            const double tail =
                std::abs(theta(f, k, Complex(0.0, 40.0))) / std::pow(41.0, f.degree());
            CHECK(tail <= bound + 1e-12);
            CHECK(std::isfinite(bound));
        }
    }
}

TEST_CASE("mellin of F via gamma sums") {
    PartialFractionF pf;
    pf.t = {1.0};
    pf.u = {0.0};
    const double expect =
        std::exp(2.0 * complex_log_gamma(0.25).real()) / (kSqrt2Pi * std::sqrt(kPi));
    CHECK(expect == doctest::Approx(2.9587).epsilon(1e-4));
    CHECK(std::abs(mellin_F_closed(pf, 0, 0.0) - Complex(expect)) < 1e-12);

    // against the numeric Mellin transform of lambda -> (1+lambda^2)^{-1/2}
    const GaussPoly f_of_lambda = g1;  // F of gamma_1 is (1+l^2)^{-1/2}
    for (double t : {0.0, 1.0, 4.0}) {
        const Complex z(0.0, t);
        const Complex lhs = mellin_F_closed(pf, 0, z);
        const Complex rhs = mellin_gausspoly_closed(f_of_lambda, 0, z) *
                            mellin_gausspoly_closed(f_of_lambda, 0, -z);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
    }

    PartialFractionF pfo;
    pfo.t = {0.0, 0.0};
    pfo.u = {0.0, 1.0};
    const double g34 = std::exp(complex_log_gamma(0.75).real());
    const double expect1 = g34 * g34 / (kSqrt2Pi * 0.5 * std::sqrt(kPi));
    CHECK(std::abs(mellin_F_closed(pfo, 1, 0.0) - Complex(expect1)) < 1e-12);
}

TEST_CASE("product identity M_F = M_f(z) M_f(-z)") {
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(0.5 * i);
    CHECK(verify_product_identity(g1, grid) <= 1e-9);
    CHECK(verify_product_identity(xg1, grid) <= 1e-9);
    CHECK(verify_product_identity(GaussPoly::single({1.0, 0.0, 0.7}, 2.0),
                                  grid) <= 1e-9);

    std::vector<GaussPolyTerm> terms;
    terms.emplace_back(std::vector<double>{1.0}, 1.0);
    terms.emplace_back(std::vector<double>{1.0}, 2.0);
    CHECK_THROWS_AS(
        verify_product_identity(GaussPoly{std::move(terms)}, grid),
        MixedWidthError);
}

TEST_CASE("theta-hat relation") {
    CHECK(theta_hat_relation(g1, 0, Complex(0.0, 0.2)) < 1e-10);
    CHECK(theta_hat_relation(xg1, 1, 0.0) < 1e-10);
    CHECK(theta_hat_relation(GaussPoly::single({1.0}, 4.0), 0, Complex(0.1, 0.0)) <
          1e-9);
    std::mt19937 rng(41);
    for (int i = 0; i < 6; ++i) {
        const GaussPoly f = unckit_test::random_gausspoly(rng, 4, 0.8);
        for (int k = 0; k <= 1; ++k) {
            CHECK(theta_hat_relation(f, k, Complex(0.2, 1.3)) < 1e-9);
        }
    }
}

TEST_CASE("theta product polynomial fit") {
    const auto grid = real_grid(-3.0, 3.0, 61);
    ThetaFit fit = theta_product_poly(g1, 0, grid);
    CHECK(fit.poly_coeffs.size() == 1);
    CHECK(fit.residual <= 1e-8);
    CHECK(fit.poly_coeffs[0].real() ==
          doctest::Approx(std::sqrt(2.0) / (2.0 * kPi)).epsilon(1e-10));

    fit = theta_product_poly(xg1, 1, grid);
    CHECK(fit.poly_coeffs.size() == 1);
    CHECK(fit.poly_coeffs[0].real() ==
          doctest::Approx(std::pow(2.0, 1.5) / (2.0 * kPi)).epsilon(1e-10));

    // (x^2 + c) gamma_1 has an even degree-2 product polynomial.
    fit = theta_product_poly(GaussPoly::single({0.7, 0.0, 1.0}, 1.0), 0, grid);
    CHECK(fit.poly_coeffs.size() == 3);
    CHECK(fit.residual <= 1e-8);
    CHECK(std::abs(fit.poly_coeffs[1]) < 1e-9);
}

TEST_CASE("theta exponential rate follows the width") {
    for (double a : {0.5, 1.0, 2.0, 4.0}) {
        const GaussPoly f = GaussPoly::single({1.0}, a);
        // |Theta(1)| / |Theta(0)| = (a/2)^{-1/2}
        const double ratio = std::abs(theta(f, 0, 1.0)) / std::abs(theta(f, 0, 0.0));
        CHECK(std::log(ratio) ==
              doctest::Approx(-0.5 * std::log(a / 2.0)).epsilon(1e-12));
    }
}
