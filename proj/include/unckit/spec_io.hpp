#ifndef UNCKIT_SPEC_IO_HPP_
#define UNCKIT_SPEC_IO_HPP_

#include <string>

#include "unckit/funcmodel.hpp"

namespace unckit {

/// Parses a function-spec document: an object with key "terms", a list of
/// {"coeffs": [numbers], "width": positive number}.  Throws ParseError on
/// malformed JSON (with byte position) and ValidationError when an
/// invariant is violated.
GaussPoly parse_function_spec(const std::string& document);

/// Inverse of the above, in canonical term order.
std::string function_spec_to_json(const GaussPoly& f);

/// Doubles serialized with 17 significant digits (round-trip exact).
std::string format_double(double v);

}  // namespace unckit

#endif
