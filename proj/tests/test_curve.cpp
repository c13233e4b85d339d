#include "doctest.h"

#include "trigon/curve.hpp"
#include "trigon/error.hpp"
#include "trigon/parse.hpp"
#include "trigon/rng.hpp"

using namespace trigon;

namespace {

MPoly P(const char* s) { return parse_poly(s); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

bool partials_vanish(const MPoly& f, const ProjPoint& p) {
  std::vector<Scalar> v{p[0], p[1], p[2]};
  bool ok = f.evaluate(v).is_zero();
  for (std::size_t i = 0; i < 3; ++i) ok = ok && f.derivative(i).evaluate(v).is_zero();
  return ok;
}

// Random quintic through (0:0:1) and (1:0:0) with both points double.
MPoly two_node_quintic(std::uint64_t seed) {
  Rng rng(seed);
  MPoly f(3);
  for (const auto& e : monomials(3, 5)) {
    if (e[0] + e[1] <= 1 || e[1] + e[2] <= 1) continue;
    f.add_term(e, Scalar(rng.uniform(-5, 5)));
  }
  return f;
}

} // namespace

TEST_CASE("genus formula") {
  CHECK(genus(4, {}) == 3);
  CHECK(genus(6, {3}) == 7);
  CHECK(genus(5, {2, 2}) == 4);
  CHECK(kind_of([] { genus(4, {3, 2}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("smooth curves") {
  for (const char* s : {"x^4 + y^4 + z^4", "x^3*y + y^3*z + z^3*x"}) {
    MPoly f = P(s);
    SingularLocus loc = singular_locus(f);
    CHECK(loc.points.empty());
    CHECK(loc.residual_degree == 0);
    PlaneCurve c = validate_curve(f);
    CHECK(c.genus == 3);
    CHECK(c.validated);
  }
}

TEST_CASE("node found, genus too small") {
  MPoly f = P("x^4 + y^4 - x*y*z^2");
  SingularLocus loc = singular_locus(f);
  REQUIRE(loc.points.size() == 1);
  CHECK(same_point(loc.points[0].coords, {Scalar(0), Scalar(0), Scalar(1)}));
  CHECK(loc.points[0].multiplicity == 2);
  CHECK(kind_of([&] { validate_curve(f); }) == ErrorKind::GenusTooSmall);
}

TEST_CASE("cusps are rejected") {
  CHECK(kind_of([] { validate_curve(P("y^2*z - x^3")); }) == ErrorKind::NonOrdinarySingularity);
  CHECK(kind_of([] { validate_curve(P("y^2*z^3 - x^5 - x^4*y")); }) == ErrorKind::NonOrdinarySingularity);
}

TEST_CASE("quintic with two ordinary nodes has genus 4") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed < 10 && checked < 3; ++seed) {
    MPoly f = two_node_quintic(seed);
    SingularLocus loc = singular_locus(f);
    if (loc.points.size() != 2) continue;
    for (const auto& s : loc.points) {
      CHECK(partials_vanish(f, s.coords));
      CHECK(s.multiplicity == 2);
    }
    PlaneCurve c = validate_curve(f);
    CHECK(c.genus == 4);
    // Declared data is cross-checked against the detected locus.
    std::vector<SingularPoint> declared{{{Scalar(1), Scalar(0), Scalar(0)}, 2}, {{Scalar(0), Scalar(0), Scalar(7)}, 2}};
    CHECK(validate_curve(f, declared).genus == 4);
    declared.pop_back();
    CHECK(kind_of([&] { validate_curve(f, declared); }) == ErrorKind::InvalidInput);
    declared.push_back({{Scalar(0), Scalar(0), Scalar(1)}, 3});
    CHECK(kind_of([&] { validate_curve(f, declared); }) == ErrorKind::InvalidInput);
    ++checked;
  }
  CHECK(checked == 3);
}

TEST_CASE("singular points off the ground field") {
  // Nodes at (+-sqrt(2) : 0 : 1).
  MPoly f = P("(x^2 - 2*z^2)^2 + y^2*(z^2 + x*y)");
  SingularLocus loc = singular_locus(f);
  CHECK(loc.residual_degree == 2);
  CHECK(kind_of([&] { validate_curve(f); }) == ErrorKind::IrrationalSingularLocus);
}

TEST_CASE("repeated components") {
  CHECK(kind_of([] { validate_curve(P("(x + y + z)^2*(x^2 + y*z)")); }) == ErrorKind::ReducibleSuspected);
  CHECK(kind_of([] { validate_curve(P("x^2 + y*z")); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { validate_curve(P("x^3 + y*z")); }) == ErrorKind::InvalidInput);
}

TEST_CASE("prime field curves") {
  MPoly f = parse_poly("x^3*y + y^3*z + z^3*x", {"x", "y", "z"}, Field::prime(101));
  PlaneCurve c = validate_curve(f);
  CHECK(c.genus == 3);
  CHECK(c.field().kind == FieldKind::Prime);
}

TEST_CASE("projection generator") {
  for (int d : {4, 5, 6}) {
    GeneratedCurve a = gen_trigonal_projection(d, 3, 42);
    GeneratedCurve b = gen_trigonal_projection(d, 3, 42);
    CHECK(a.curve.f == b.curve.f);
    CHECK(a.curve.genus == 2 * d - 5);
    CHECK(a.curve.degree == d);
    REQUIRE(a.marked_point);
    CHECK(multiplicity(a.curve.f, *a.marked_point) == (d == 4 ? 1 : d - 3));
    for (const auto& s : a.curve.sings) CHECK(partials_vanish(a.curve.f, s.coords));
  }
  CHECK(!(gen_trigonal_projection(5, 3, 1).curve.f == gen_trigonal_projection(5, 3, 2).curve.f));
  CHECK(kind_of([] { gen_trigonal_projection(3, 3, 1); }) == ErrorKind::InvalidInput);
}

TEST_CASE("method 1 curves with deg_x = 3 have genus 4") {
  MPoly raw = sample_method1(3, 5, 7);
  CHECK(raw.degree_in(1) == 3);
  CHECK(raw.degree_in(0) == 3);
  CHECK(raw.total_degree() == 6);
  CHECK(raw == sample_method1(3, 5, 7));
  GeneratedCurve g = gen_method1(3, 5, 11);
  CHECK(g.curve.genus == 4);
  CHECK(g.curve.degree == 6);
  CHECK(g.method == "m1");
}

TEST_CASE("method 2 sampling") {
  CHECK(kind_of([] { sample_method2(0, 2, 1); }) == ErrorKind::InvalidInput);
  MPoly raw = sample_method2(2, 2, 3);
  CHECK(raw.is_homogeneous());
  CHECK(raw.nvars() == 3);
  // y enters linearly in G, so Res_u has y-degree deg_u F = 2
  CHECK(raw.degree_in(1) == 2);
  CHECK(raw == sample_method2(2, 2, 3));
}

TEST_CASE("curve files round trip") {
  CurveFile file = parse_curve_file("# a node\nf = x^4 + y^4 - x*y*z^2\nsing = (0:0:1) mult 2\npoint = (1:0:-1)\n");
  CHECK(file.f == P("x^4 + y^4 - x*y*z^2"));
  REQUIRE(file.sings);
  CHECK(file.sings->size() == 1);
  CHECK((*file.sings)[0].multiplicity == 2);
  REQUIRE(file.point);
  CHECK(file.comments == std::vector<std::string>{"a node"});
  CurveFile again = parse_curve_file(write_curve_file(file));
  CHECK(again.f == file.f);
  CHECK(same_point(*again.point, *file.point));

  CurveFile fp = parse_curve_file("field = Fp 7\nf = x^3 + 8*y^3 + z^3\n");
  CHECK(fp.field.kind == FieldKind::Prime);
  CHECK(fp.f == parse_poly("x^3 + y^3 + z^3", {"x", "y", "z"}, Field::prime(7)));

  CHECK(kind_of([] { parse_curve_file("g = x\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_curve_file("sing = (0:0:1) mult 2\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_curve_file("f = x^3 +\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_point("(0:0:0)"); }) == ErrorKind::ParseError);
}
