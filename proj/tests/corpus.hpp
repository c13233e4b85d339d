#pragma once

#include "trigon/curve.hpp"
#include "trigon/parse.hpp"
#include "trigon/rng.hpp"

#include <string>
#include <vector>

namespace corpus {

using namespace trigon;

inline PlaneCurve hand(const char* f) { return validate_curve(parse_poly(f)); }

inline std::vector<SingularPoint> random_points(std::size_t n, int multiplicity, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SingularPoint> pts;
  while (pts.size() < n) {
    ProjPoint p{Scalar(rng.uniform(-4, 4)), Scalar(rng.uniform(-4, 4)), Scalar(rng.uniform(1, 3))};
    bool fresh = true;
    for (const auto& q : pts) fresh = fresh && !same_point(p, q.coords);
    if (fresh) pts.push_back({normalized(p), multiplicity});
  }
  return pts;
}

// Sextic with five ordinary nodes, genus 5; generically not trigonal.
inline PlaneCurve nodal_sextic(std::uint64_t seed) {
  return gen_with_singularities(6, random_points(5, 2, seed), 3, seed).curve;
}

// Quintic with two ordinary nodes, genus 4.
inline PlaneCurve two_node_quintic(std::uint64_t seed) {
  return gen_with_singularities(5, random_points(2, 2, seed), 3, seed).curve;
}

// Degree d with an ordinary point of multiplicity d-2: genus d-2, hyperelliptic.
inline PlaneCurve hyperelliptic(int d, std::uint64_t seed) {
  return gen_with_singularities(d, random_points(1, d - 2, seed), 3, seed).curve;
}

inline const char* fermat_quintic = "x^5 + y^5 + z^5";
inline const char* klein_quartic = "x^3*y + y^3*z + z^3*x";

} // namespace corpus
