#ifndef UNCKIT_LSTSQ_HPP_
#define UNCKIT_LSTSQ_HPP_

#include <vector>

#include "unckit/errors.hpp"

namespace unckit {

// Dense least squares via normal equations; rows is the design matrix
// (n x m, row-major).  Throws DegenerateData when rank-deficient.
std::vector<double> least_squares(const std::vector<std::vector<double>>& rows,
                                  const std::vector<double>& rhs);

}  // namespace unckit

#endif
