#pragma once

#include "trigon/curve.hpp"
#include "trigon/matrix.hpp"

#include <vector>

namespace trigon {

// g adjoint forms of degree d-3; together they define the canonical map.
struct CanonicalMap {
  std::vector<MPoly> omega;
  int degree = 0; // d - 3

  std::size_t genus() const { return omega.size(); }
};

// Forms of degree k in g variables vanishing on the canonical image.
// basis holds coefficient vectors over monomials(g, k), in reduced echelon form.
struct FormSpace {
  std::size_t ambient_dim = 0;
  int degree = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  MPoly form(std::size_t i) const;
  std::vector<MPoly> forms() const;
};

CanonicalMap adjoint_basis(const PlaneCurve& c);

FormSpace forms_through_image(const PlaneCurve& c, const CanonicalMap& cm, int k);

// Checks exactly that every basis form, with the variables replaced by omega,
// is divisible by f.
bool forms_vanish_on_curve(const PlaneCurve& c, const CanonicalMap& cm, const FormSpace& space);

// Expected dimensions for a non-hyperelliptic canonical curve.
std::size_t expected_quadric_dim(std::size_t g);
std::size_t expected_cubic_dim(std::size_t g);

// true for (g-1)(g-2)/2 quadrics, false for (g-2)(g-3)/2, UnexpectedDimension otherwise.
bool hyperelliptic_test(std::size_t g, std::size_t quadric_dim);

enum class PetriVerdict { GeneratedByQuadrics, QuadricsInsufficient };
std::string_view to_string(PetriVerdict v);

PetriVerdict petri_test(const FormSpace& quadrics, const FormSpace& cubics, std::size_t g);

// Coefficient vector of a form over monomials(nvars, degree).
Vec coefficient_vector(const MPoly& p, int degree);
MPoly form_from_vector(const Vec& v, std::size_t nvars, int degree);

} // namespace trigon
