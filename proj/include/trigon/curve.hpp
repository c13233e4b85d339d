#pragma once

#include "trigon/local.hpp"
#include "trigon/mpoly.hpp"
#include "trigon/upoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trigon {

struct SingularPoint {
  ProjPoint coords;
  int multiplicity = 0;
};

struct PlaneCurve {
  MPoly f{3};
  int degree = 0;
  std::vector<SingularPoint> sings;
  int genus = 0;
  bool validated = false;

  Field field() const { return f.field(); }
};

struct SingularLocus {
  std::vector<SingularPoint> points; // singular points with coordinates in the ground field
  int residual_degree = 0;           // singular points not defined over the ground field
};

// Singular points of a plane curve found via resultants of the partial
// derivatives in two sheared frames, plus the count of singular points whose
// coordinates leave the ground field. ReducibleSuspected if a resultant
// vanishes identically.
SingularLocus singular_locus(const MPoly& f);

// Same analysis restricted to the line z = 0; cheap, used to reject bad
// candidates early.
SingularLocus singular_locus_at_infinity(const MPoly& f);

// Validates the singular data (declared or detected), checks ordinarity and
// computes the genus; rejects genus < 3.
PlaneCurve validate_curve(const MPoly& f, const std::optional<std::vector<SingularPoint>>& declared = std::nullopt);

// (d-1)(d-2)/2 - sum m(m-1)/2.
int genus(int d, const std::vector<int>& multiplicities);

struct GeneratedCurve {
  PlaneCurve curve;
  std::string method;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::optional<ProjPoint> marked_point; // projection centre (projection generator)
};

inline constexpr int kDefaultResampleBudget = 50;

// Degree-d form with an ordinary point of multiplicity d-3 at (0:0:1) and no
// other singularity; genus 2d-5, projection from (0:0:1) is 3:1.
GeneratedCurve gen_trigonal_projection(int d, int coeff_height, std::uint64_t seed, int budget = kDefaultResampleBudget);

// Random degree-d form with the given multiplicity at each given point,
// drawn from the kernel of the vanishing conditions. Accepted when validation
// finds exactly the prescribed singular points.
GeneratedCurve gen_with_singularities(int d, const std::vector<SingularPoint>& points, int coeff_height, std::uint64_t seed,
                                      int budget = kDefaultResampleBudget);

// Raw candidates: y-degree 3 and x-degree deg_x (homogenized), and the
// resultant construction with a_1..a_5 of degree d.
MPoly sample_method1(int deg_x, int coeff_height, std::uint64_t seed);
MPoly sample_method2(int d, int coeff_height, std::uint64_t seed);
// a_1..a_5 (coefficients in u) behind sample_method2 with the same arguments.
std::vector<UPoly> method2_coefficients(int d, int coeff_height, std::uint64_t seed);

// Candidates gated behind validation with a resample budget.
GeneratedCurve gen_method1(int deg_x, int coeff_height, std::uint64_t seed, int budget = kDefaultResampleBudget);
GeneratedCurve gen_method2(int d, int coeff_height, std::uint64_t seed, int budget = kDefaultResampleBudget);

// Line-oriented curve file: `f = <poly>`, `sing = (a:b:c) mult m`,
// `point = (a:b:c)`, `field = Q | Fp <p>`; `#` starts a comment.
struct CurveFile {
  MPoly f{3};
  std::optional<std::vector<SingularPoint>> sings;
  std::optional<ProjPoint> point;
  Field field;
  std::vector<std::string> comments;
};

CurveFile parse_curve_file(const std::string& text);
std::string write_curve_file(const CurveFile& file);

ProjPoint parse_point(const std::string& text, const Field& field = Field::rationals());

} // namespace trigon
