#pragma once

#include "trigon/canonical.hpp"
#include "trigon/curve.hpp"
#include "trigon/liealg.hpp"
#include "trigon/scroll.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trigon {

struct FiberCount {
  int degree = 0;          // majority over the draws
  std::vector<int> draws;  // one fiber degree per draw
  std::vector<long> shears;
  bool unanimous = false;
};

// Degree of (P:Q) restricted to the curve, by resultants against two fibers
// and removal of the common (base) part. DegenerateFiber when no two of the
// three draws agree.
FiberCount map_degree(const PlaneCurve& c, const PencilMap& p, std::uint64_t seed = 0);

// Pencil of canonical divisors through a point of a genus-3 curve.
PencilMap g3_map(const PlaneCurve& c, const CanonicalMap& cm, const ProjPoint& point);

enum class CaseKind { Genus3, Scroll, P1xP1, Veronese, CurveCutByQuadrics, Undetermined };
std::string_view to_string(CaseKind c);

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct Report {
  std::string f;
  std::string field;
  std::vector<SingularPoint> sings;
  std::optional<ProjPoint> base_point;
  std::uint64_t seed = 0;

  int degree = 0;
  int genus = 0;
  std::size_t adjoint_dim = 0;
  std::size_t quadric_dim = 0;
  std::optional<std::size_t> cubic_dim;
  std::optional<std::size_t> lie_dim;
  std::optional<std::size_t> radical_dim;
  std::optional<std::size_t> levi_dim;
  std::string levi_type;

  CaseKind case_kind = CaseKind::Undetermined;
  std::optional<bool> trigonal;
  bool map_available = false;
  std::optional<PencilMap> map;
  std::string map_source;
  std::optional<int> verified_degree;
  std::vector<int> fiber_draws;
  std::vector<std::optional<int>> ruling_degrees; // P1xP1: one entry per ruling
  std::optional<PetriVerdict> petri;
  std::optional<bool> agreement;
  std::vector<std::string> notes;
  std::vector<StageTiming> timings;
};

struct DecideOptions {
  std::optional<ProjPoint> base_point;
  std::uint64_t seed = 0;
};

Report decide(const PlaneCurve& c, const DecideOptions& opts = {});

// Stable key order; timings only on request.
std::string report_json(const Report& r, bool include_timings = false);

} // namespace trigon
