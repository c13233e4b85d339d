#include "trigon/canonical.hpp"

#include "trigon/error.hpp"

#include <map>

namespace trigon {

namespace {

using Index = std::map<Exponent, std::size_t>;

Index index_of(const std::vector<Exponent>& monos) {
  Index idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
  return idx;
}

// omega^e for every exponent e of degree k in g variables, keyed by e.
std::map<Exponent, MPoly> omega_products(const CanonicalMap& cm, int k) {
  const std::size_t g = cm.genus();
  std::map<Exponent, MPoly> prev;
  prev.emplace(Exponent(g, 0), MPoly::constant(3, Scalar(1).in(cm.omega[0].field())));
  for (int level = 1; level <= k; ++level) {
    std::map<Exponent, MPoly> next;
    for (const auto& e : monomials(g, level)) {
      std::size_t i = 0;
      while (e[i] == 0) ++i;
      Exponent lower = e;
      --lower[i];
      next.emplace(e, prev.at(lower) * cm.omega[i]);
    }
    prev = std::move(next);
  }
  return prev;
}

Field field_of(const PlaneCurve& c) { return c.f.field(); }

} // namespace

Vec coefficient_vector(const MPoly& p, int degree) {
  const auto monos = monomials(p.nvars(), degree);
  const Index idx = index_of(monos);
  Vec v(monos.size(), Scalar(0).in(p.field()));
  for (const auto& [e, c] : p.terms()) {
    auto it = idx.find(e);
    if (it == idx.end()) fail(ErrorKind::InvalidInput, "form is not homogeneous of degree " + std::to_string(degree));
    v[it->second] = c;
  }
  return v;
}

MPoly form_from_vector(const Vec& v, std::size_t nvars, int degree) {
  const auto monos = monomials(nvars, degree);
  if (monos.size() != v.size()) fail(ErrorKind::InvalidInput, "coefficient vector has the wrong length");
  MPoly p(nvars);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) p.add_term(monos[i], v[i]);
  return p;
}

MPoly FormSpace::form(std::size_t i) const { return form_from_vector(basis.at(i), ambient_dim, degree); }

std::vector<MPoly> FormSpace::forms() const {
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.push_back(form(i));
  return out;
}

CanonicalMap adjoint_basis(const PlaneCurve& c) {
  const int d = c.degree;
  if (d < 4) fail(ErrorKind::InvalidInput, "adjoints need a curve of degree at least 4");
  const Field field = field_of(c);
  const auto monos = monomials(3, d - 3);

  // One row per Taylor coefficient of order <= m-2 at each singular point.
  std::vector<Vec> rows;
  for (const auto& s : c.sings) {
    auto local = vanishing_conditions(monos, s.coords, s.multiplicity - 2, field);
    rows.insert(rows.end(), local.begin(), local.end());
  }

  std::vector<Vec> kernel;
  if (rows.empty()) {
    for (std::size_t j = 0; j < monos.size(); ++j) {
      Vec v(monos.size(), Scalar(0).in(field));
      v[j] = Scalar(1).in(field);
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = kernel_basis(Mat::from_rows(rows, monos.size()));
  }
  if (static_cast<int>(kernel.size()) != c.genus)
    fail(ErrorKind::AdjointDimensionMismatch,
         "adjoint space has dimension " + std::to_string(kernel.size()) + ", genus is " + std::to_string(c.genus));

  CanonicalMap cm;
  cm.degree = d - 3;
  for (const auto& v : kernel) cm.omega.push_back(form_from_vector(v, 3, d - 3));
  return cm;
}

FormSpace forms_through_image(const PlaneCurve& c, const CanonicalMap& cm, int k) {
  if (k != 2 && k != 3) fail(ErrorKind::InvalidInput, "only quadrics and cubics are supported");
  const std::size_t g = cm.genus();
  const Field field = field_of(c);
  const int target = k * cm.degree;
  const auto rows = monomials(3, target);
  const Index row_idx = index_of(rows);
  const auto forms = monomials(g, k);
  const auto products = omega_products(cm, k);
  const int multiplier_degree = target - c.degree;
  const auto multipliers = multiplier_degree >= 0 ? monomials(3, multiplier_degree) : std::vector<Exponent>{};

  Mat m(rows.size(), forms.size() + multipliers.size(), field);
  for (std::size_t j = 0; j < forms.size(); ++j)
    for (const auto& [e, coeff] : products.at(forms[j]).terms()) m(row_idx.at(e), j) = coeff;
  for (std::size_t j = 0; j < multipliers.size(); ++j) {
    const MPoly shifted = c.f * MPoly::monomial(multipliers[j], Scalar(1).in(field));
    for (const auto& [e, coeff] : shifted.terms()) m(row_idx.at(e), forms.size() + j) = coeff;
  }

  std::vector<Vec> projected;
  for (const auto& v : kernel_basis(m)) projected.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(forms.size()));
  FormSpace out;
  out.ambient_dim = g;
  out.degree = k;
  out.basis = projected.empty() ? projected : span_basis(projected, forms.size());
  return out;
}

bool forms_vanish_on_curve(const PlaneCurve& c, const CanonicalMap& cm, const FormSpace& space) {
  const auto forms = monomials(cm.genus(), space.degree);
  const auto products = omega_products(cm, space.degree);
  for (const auto& v : space.basis) {
    MPoly image(3);
    for (std::size_t j = 0; j < forms.size(); ++j)
      if (!v[j].is_zero()) image = image + products.at(forms[j]) * v[j];
    if (!divides(c.f, image)) return false;
  }
  return true;
}

std::size_t expected_quadric_dim(std::size_t g) { return (g - 2) * (g - 3) / 2; }

std::size_t expected_cubic_dim(std::size_t g) { return (g + 2) * (g + 1) * g / 6 - (5 * g - 5); }

bool hyperelliptic_test(std::size_t g, std::size_t quadric_dim) {
  if (g < 3) fail(ErrorKind::InvalidInput, "genus must be at least 3");
  if (quadric_dim == (g - 1) * (g - 2) / 2) return true;
  if (quadric_dim == expected_quadric_dim(g)) return false;
  fail(ErrorKind::UnexpectedDimension, "quadric space of dimension " + std::to_string(quadric_dim) + " for genus " + std::to_string(g));
}

std::string_view to_string(PetriVerdict v) {
  return v == PetriVerdict::GeneratedByQuadrics ? "GeneratedByQuadrics" : "QuadricsInsufficient";
}

PetriVerdict petri_test(const FormSpace& quadrics, const FormSpace& cubics, std::size_t g) {
  std::vector<Vec> products;
  for (const auto& q : quadrics.forms())
    for (std::size_t i = 0; i < g; ++i) {
      const MPoly xq = q * MPoly::variable(g, i);
      products.push_back(coefficient_vector(xq, 3));
    }
  const std::size_t dim = products.empty() ? 0 : span_basis(products, monomials(g, 3).size()).size();
  return dim == cubics.dim() ? PetriVerdict::GeneratedByQuadrics : PetriVerdict::QuadricsInsufficient;
}

} // namespace trigon
