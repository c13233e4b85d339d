#pragma once

#include "trigon/canonical.hpp"
#include "trigon/liealg.hpp"

#include <array>
#include <optional>
#include <vector>

namespace trigon {

// Ambient space split into irreducible sl2 chains v_k = f^k v_0.
struct WeightChains {
  std::vector<std::vector<Vec>> chains; // ordered by length, then echelon order
  Mat basis;                            // chain vectors as columns
  Mat dual;                             // inverse of basis: row r is the functional of chain vector r

  // Row index in `dual` of chain c, position k.
  std::size_t offset(std::size_t c) const;
};

WeightChains weight_chains(const Sl2Triple& t, std::size_t g);

// Scroll matrix: each column is a pair of linear forms, as coefficient
// vectors over the g ambient coordinates.
struct ScrollMat {
  std::size_t g = 0;
  std::vector<std::array<Vec, 2>> columns;
};

ScrollMat scroll_matrix(const WeightChains& w);

// 2x2 minors as quadratic forms in g variables.
std::vector<MPoly> scroll_minors(const ScrollMat& a);

// Exact subspace equality of span(minors) and the quadric space.
bool minors_span_quadrics(const ScrollMat& a, const FormSpace& quadrics);

// Pencil (P:Q) on the plane curve, forms of degree d-3.
struct PencilMap {
  MPoly p{3}, q{3};
  std::size_t column = 0;
  std::optional<long> extension;
};

PencilMap ruling_map(const ScrollMat& a, const CanonicalMap& cm, const PlaneCurve& c);

// P1 Q2 - P2 Q1 divisible by f for every pair of admissible columns.
bool columns_agree(const ScrollMat& a, const CanonicalMap& cm, const PlaneCurve& c);

MPoly pull_back(const Vec& linear_form, const CanonicalMap& cm);

// One pencil per sl2 ideal of a P1xP1 Levi subalgebra; entries that could not
// be built are nullopt.
std::vector<std::optional<PencilMap>> p1xp1_rulings(const Classification& cls, const CanonicalMap& cm, const PlaneCurve& c);

} // namespace trigon
