#include "unckit/lstsq.hpp"

#include <cmath>

namespace unckit {

std::vector<double> least_squares(const std::vector<std::vector<double>>& rows,
                                  const std::vector<double>& rhs) {
    const std::size_t n = rows.size();
    if (n == 0 || rhs.size() != n) {
        throw DegenerateData("least_squares: empty or mismatched data");
    }
    const std::size_t m = rows[0].size();
    if (m == 0 || m > n) {
        throw DegenerateData("least_squares: underdetermined system");
    }

    // Normal equations A^T A x = A^T b.
    std::vector<std::vector<double>> ata(m, std::vector<double>(m, 0.0));
    std::vector<double> atb(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            atb[j] += rows[i][j] * rhs[i];
            for (std::size_t k = j; k < m; ++k) {
                ata[j][k] += rows[i][j] * rows[i][k];
            }
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            ata[j][k] = ata[k][j];
        }
    }

    // Gaussian elimination with partial pivoting.
    double scale = 0.0;
    for (std::size_t j = 0; j < m; ++j) scale = std::max(scale, ata[j][j]);
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m; ++r) {
            if (std::abs(ata[r][col]) > std::abs(ata[piv][col])) piv = r;
        }
        if (std::abs(ata[piv][col]) < 1e-13 * scale) {
            throw DegenerateData("least_squares: rank-deficient system");
        }
        std::swap(ata[col], ata[piv]);
        std::swap(atb[col], atb[piv]);
        for (std::size_t r = col + 1; r < m; ++r) {
            const double fac = ata[r][col] / ata[col][col];
            for (std::size_t c = col; c < m; ++c) {
                ata[r][c] -= fac * ata[col][c];
            }
            atb[r] -= fac * atb[col];
        }
    }
    std::vector<double> x(m, 0.0);
    for (std::size_t col = m; col-- > 0;) {
        double s = atb[col];
        for (std::size_t c = col + 1; c < m; ++c) {
            s -= ata[col][c] * x[c];
        }
        x[col] = s / ata[col][col];
    }
    return x;
}

}  // namespace unckit
