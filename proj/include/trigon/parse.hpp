#pragma once

#include "trigon/mpoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace trigon {

// Parse the canonical polynomial syntax: integer or rational literals,
// the given variable names, + - * ^ and parentheses. No implicit
// multiplication. Coefficients are embedded into `field`.
MPoly parse_poly(std::string_view text, const std::vector<std::string>& names = {"x", "y", "z"},
                 const Field& field = Field::rationals());

// Integer or a/b literal, embedded into `field`.
Scalar parse_scalar(std::string_view text, const Field& field = Field::rationals());

} // namespace trigon
