#include "doctest.h"

#include "corpus.hpp"
#include "trigon/canonical.hpp"
#include "trigon/error.hpp"

using namespace trigon;

namespace {

MPoly P(const char* s) { return parse_poly(s); }

void check_adjoint_conditions(const PlaneCurve& c, const CanonicalMap& cm) {
  CHECK(static_cast<int>(cm.genus()) == c.genus);
  for (const auto& w : cm.omega) {
    CHECK(w.total_degree() == c.degree - 3);
    for (const auto& s : c.sings) CHECK(multiplicity(w, s.coords) >= s.multiplicity - 1);
  }
  std::vector<Vec> vs;
  for (const auto& w : cm.omega) vs.push_back(coefficient_vector(w, c.degree - 3));
  CHECK(span_basis(vs, vs[0].size()).size() == cm.genus());
}

} // namespace

TEST_CASE("smooth quartic: omega is the identity and no quadric vanishes") {
  PlaneCurve c = corpus::hand(corpus::klein_quartic);
  CanonicalMap cm = adjoint_basis(c);
  REQUIRE(cm.genus() == 3);
  CHECK(cm.omega[0] == P("x"));
  CHECK(cm.omega[1] == P("y"));
  CHECK(cm.omega[2] == P("z"));
  FormSpace q = forms_through_image(c, cm, 2);
  CHECK(q.dim() == 0);
  CHECK(!hyperelliptic_test(3, q.dim()));
  FormSpace cubics = forms_through_image(c, cm, 3);
  CHECK(cubics.dim() == 0);
}

TEST_CASE("two-node quintic: four conics, one quadric") {
  PlaneCurve c = corpus::two_node_quintic(3);
  REQUIRE(c.genus == 4);
  CanonicalMap cm = adjoint_basis(c);
  check_adjoint_conditions(c, cm);
  FormSpace q = forms_through_image(c, cm, 2);
  CHECK(q.dim() == 1);
  CHECK(forms_vanish_on_curve(c, cm, q));
  FormSpace cubics = forms_through_image(c, cm, 3);
  CHECK(cubics.dim() == expected_cubic_dim(4));
  CHECK(forms_vanish_on_curve(c, cm, cubics));
  CHECK(petri_test(q, cubics, 4) == PetriVerdict::QuadricsInsufficient);
}

TEST_CASE("sextic with an ordinary triple point: seven cubic adjoints") {
  GeneratedCurve g = gen_trigonal_projection(6, 3, 5);
  CanonicalMap cm = adjoint_basis(g.curve);
  CHECK(cm.genus() == 7);
  check_adjoint_conditions(g.curve, cm);
  FormSpace q = forms_through_image(g.curve, cm, 2);
  CHECK(q.dim() == expected_quadric_dim(7));
  CHECK(forms_vanish_on_curve(g.curve, cm, q));
  FormSpace cubics = forms_through_image(g.curve, cm, 3);
  CHECK(cubics.dim() == expected_cubic_dim(7));
  CHECK(petri_test(q, cubics, 7) == PetriVerdict::QuadricsInsufficient);
}

TEST_CASE("Fermat quintic: six quadrics, Petri needs cubics") {
  PlaneCurve c = corpus::hand(corpus::fermat_quintic);
  CanonicalMap cm = adjoint_basis(c);
  CHECK(cm.genus() == 6);
  FormSpace q = forms_through_image(c, cm, 2);
  CHECK(q.dim() == 6);
  CHECK(forms_vanish_on_curve(c, cm, q));
  FormSpace cubics = forms_through_image(c, cm, 3);
  CHECK(cubics.dim() == expected_cubic_dim(6));
  CHECK(petri_test(q, cubics, 6) == PetriVerdict::QuadricsInsufficient);
}

TEST_CASE("generic five-nodal sextic is cut out by quadrics") {
  PlaneCurve c = corpus::nodal_sextic(1);
  REQUIRE(c.genus == 5);
  CanonicalMap cm = adjoint_basis(c);
  check_adjoint_conditions(c, cm);
  FormSpace q = forms_through_image(c, cm, 2);
  CHECK(q.dim() == 3);
  CHECK(forms_vanish_on_curve(c, cm, q));
  FormSpace cubics = forms_through_image(c, cm, 3);
  CHECK(cubics.dim() == expected_cubic_dim(5));
  CHECK(petri_test(q, cubics, 5) == PetriVerdict::GeneratedByQuadrics);
}

TEST_CASE("hyperelliptic inputs hit the other branch of the dichotomy") {
  for (int d : {5, 6, 7}) {
    PlaneCurve c = corpus::hyperelliptic(d, 11);
    const std::size_t g = static_cast<std::size_t>(d - 2);
    CHECK(c.genus == d - 2);
    CanonicalMap cm = adjoint_basis(c);
    CHECK(cm.genus() == g);
    FormSpace q = forms_through_image(c, cm, 2);
    CHECK(q.dim() == (g - 1) * (g - 2) / 2);
    CHECK(hyperelliptic_test(g, q.dim()));
  }
}

TEST_CASE("hyperelliptic_test examples") {
  CHECK(hyperelliptic_test(3, 1));
  CHECK(!hyperelliptic_test(3, 0));
  CHECK(!hyperelliptic_test(5, 3));
  CHECK_THROWS_AS(hyperelliptic_test(5, 4), Error);
}

TEST_CASE("a wrong quadric fails the divisibility check") {
  PlaneCurve c = corpus::two_node_quintic(3);
  CanonicalMap cm = adjoint_basis(c);
  FormSpace q = forms_through_image(c, cm, 2);
  FormSpace bogus = q;
  bogus.basis[0] = coefficient_vector(P("x^2").compose({MPoly::variable(4, 0), MPoly::variable(4, 1), MPoly::variable(4, 2)}), 2);
  CHECK(!forms_vanish_on_curve(c, cm, bogus));
}

TEST_CASE("prime field pipeline dimensions") {
  MPoly f = parse_poly("x^5 + y^5 + z^5", {"x", "y", "z"}, Field::prime(101));
  PlaneCurve c = validate_curve(f);
  CanonicalMap cm = adjoint_basis(c);
  CHECK(forms_through_image(c, cm, 2).dim() == 6);
}
