#pragma once

#include "trigon/matrix.hpp"
#include "trigon/mpoly.hpp"

#include <array>
#include <vector>

namespace trigon {

using ProjPoint = std::array<Scalar, 3>;

// Chart used by default for p: the last coordinate that is nonzero.
std::size_t default_chart(const ProjPoint& p);

// Homogeneous Taylor pieces of degrees 0..order of a ternary form f at p,
// computed in the affine chart {x_chart = 1} with p moved to the origin.
// Pieces are forms in the two remaining variables (the chart variable has
// exponent zero throughout).
std::vector<MPoly> local_expansion(const MPoly& f, const ProjPoint& p, int order);
std::vector<MPoly> local_expansion(const MPoly& f, const ProjPoint& p, int order, std::size_t chart);

// Linear conditions on the coefficients of a form supported on `monos` for
// all its Taylor pieces of order <= order at p to vanish. One row per
// coefficient of those pieces.
std::vector<Vec> vanishing_conditions(const std::vector<Exponent>& monos, const ProjPoint& p, int order, const Field& field);

// Least degree with a nonzero Taylor piece (0 when p is off the curve).
int multiplicity(const MPoly& f, const ProjPoint& p);

// True if the binary form (in the variables other than `chart`) splits
// into deg distinct linear factors over the algebraic closure.
bool has_distinct_factors(const MPoly& binary_form, std::size_t chart);

bool on_curve(const MPoly& f, const ProjPoint& p);
bool is_zero_point(const ProjPoint& p);
// Projective equality.
bool same_point(const ProjPoint& a, const ProjPoint& b);
// Scale so the last nonzero coordinate is 1.
ProjPoint normalized(const ProjPoint& p);
std::string to_string(const ProjPoint& p);

} // namespace trigon
