#ifndef UNCKIT_FUNCMODEL_HPP_
#define UNCKIT_FUNCMODEL_HPP_

#include <complex>
#include <utility>
#include <vector>

#include "unckit/errors.hpp"
#include "unckit/specfun.hpp"

namespace unckit {

inline constexpr int kTermDegreeCap = 32;

// One polynomial-times-gaussian term p(x) e^{-width x^2/2}.  Coefficients
// are complex-capable: Fourier images of odd-degree monomials pick up
// factors of -i.
struct GaussPolyTerm {
    std::vector<Complex> coeffs;  // coeffs[j] multiplies x^j
    double width = 1.0;

    GaussPolyTerm(std::vector<Complex> c, double a);
    GaussPolyTerm(std::vector<double> c, double a);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_real(double tol = 0.0) const;
};

// Finite sum of GaussPolyTerm, at most one term per width, widths ascending.
class GaussPoly {
  public:
    GaussPoly() = default;
    explicit GaussPoly(std::vector<GaussPolyTerm> terms);

    static GaussPoly single(std::vector<double> coeffs, double width);

    const std::vector<GaussPolyTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    bool is_real(double tol = 0.0) const;
    int degree() const;
    double min_width() const;
    double max_width() const;
    // Width shared by all terms; throws MixedWidthError otherwise.
    double common_width() const;

    Complex eval(double x) const;
    double eval_real(double x) const;

  private:
    std::vector<GaussPolyTerm> terms_;
};

// Coefficients of F(lambda) = sum_j t_j (l^2+1)^{-j-1/2} + u_j l (l^2+1)^{-j-1/2}.
struct PartialFractionF {
    std::vector<double> t;
    std::vector<double> u;

    double eval(double lambda) const;
};

/// Closed-form Fourier transform under the e^{-ixy}/sqrt(2 pi) convention:
/// each term p gamma_a maps to ptilde gamma_{1/a}.
GaussPoly fourier(const GaussPoly& f);

/// (even part, odd part); the parts sum back to f.
std::pair<GaussPoly, GaussPoly> parity_parts(const GaussPoly& f);

/// Integral of |f(x)| e^{eps |x|} over the line, by adaptive quadrature
/// with gaussian tail truncation.  Finite for every GaussPoly.
double exp_moment(const GaussPoly& f, double eps, double tol = 1e-10);

/// Autocorrelation F(lambda) = (1/sqrt(2 pi)) integral of f(x) f(lambda x),
/// evaluated in closed form via gaussian moments.  Requires real f.
double autocorr_eval(const GaussPoly& f, double lambda);

/// Partial-fraction coefficients of F for a single-width real f.
PartialFractionF autocorr_closed(const GaussPoly& f);

/// |F(1/lambda) - |lambda| F(lambda)|, which is zero analytically.
double reflection_residual(const GaussPoly& f, double lambda);

}  // namespace unckit

#endif
