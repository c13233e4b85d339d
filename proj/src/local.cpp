#include "trigon/local.hpp"

#include "trigon/error.hpp"
#include "trigon/upoly.hpp"

#include <map>

namespace trigon {

bool is_zero_point(const ProjPoint& p) { return p[0].is_zero() && p[1].is_zero() && p[2].is_zero(); }

std::size_t default_chart(const ProjPoint& p) {
  for (std::size_t i = 3; i-- > 0;)
    if (!p[i].is_zero()) return i;
  fail(ErrorKind::InvalidInput, "the point (0:0:0) is not a projective point");
}

std::vector<MPoly> local_expansion(const MPoly& f, const ProjPoint& p, int order) {
  return local_expansion(f, p, order, default_chart(p));
}

std::vector<MPoly> local_expansion(const MPoly& f, const ProjPoint& p, int order, std::size_t chart) {
  if (f.nvars() != 3) fail(ErrorKind::InvalidInput, "local expansion expects a ternary form");
  if (is_zero_point(p)) fail(ErrorKind::InvalidInput, "the point (0:0:0) is not a projective point");
  if (chart > 2 || p[chart].is_zero()) fail(ErrorKind::InvalidInput, "chart does not contain the point");
  const Scalar inv = p[chart].inverse();
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == chart)
      images.push_back(MPoly::constant(3, Scalar(1)));
    else
      images.push_back(MPoly::variable(3, i) + MPoly::constant(3, p[i] * inv));
  }
  const MPoly g = f.compose(images);
  std::vector<MPoly> pieces;
  for (int k = 0; k <= order; ++k) pieces.push_back(g.homogeneous_part(k));
  return pieces;
}

std::vector<Vec> vanishing_conditions(const std::vector<Exponent>& monos, const ProjPoint& p, int order, const Field& field) {
  std::vector<Vec> rows;
  if (order < 0) return rows;
  const std::size_t chart = default_chart(p);
  std::map<Exponent, std::size_t> row_of;
  for (std::size_t j = 0; j < monos.size(); ++j) {
    const auto pieces = local_expansion(MPoly::monomial(monos[j], Scalar(1).in(field)), p, order, chart);
    for (const auto& piece : pieces)
      for (const auto& [e, coeff] : piece.terms()) {
        auto [it, fresh] = row_of.emplace(e, rows.size());
        if (fresh) rows.emplace_back(monos.size(), Scalar(0).in(field));
        rows[it->second][j] = coeff;
      }
  }
  return rows;
}

int multiplicity(const MPoly& f, const ProjPoint& p) {
  const int d = f.total_degree();
  auto pieces = local_expansion(f, p, d);
  for (int k = 0; k <= d; ++k)
    if (!pieces[k].is_zero()) return k;
  return d + 1;
}

bool has_distinct_factors(const MPoly& form, std::size_t chart) {
  if (form.is_zero()) return false;
  const int m = form.total_degree();
  // b(t) = form(t, 1) in the first non-chart variable
  const std::size_t u = chart == 0 ? 1 : 0;
  std::vector<Scalar> c(m + 1);
  for (const auto& [e, coeff] : form.terms()) c[e[u]] = coeff;
  UPoly b(std::move(c));
  const int at_infinity = m - b.degree();
  if (at_infinity > 1) return false;
  if (b.degree() <= 1) return true;
  return gcd(b, b.derivative()).degree() == 0;
}

bool on_curve(const MPoly& f, const ProjPoint& p) { return f.evaluate({p[0], p[1], p[2]}).is_zero(); }

bool same_point(const ProjPoint& a, const ProjPoint& b) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return !is_zero_point(a) && !is_zero_point(b);
}

ProjPoint normalized(const ProjPoint& p) {
  const Scalar inv = p[default_chart(p)].inverse();
  return {p[0] * inv, p[1] * inv, p[2] * inv};
}

std::string to_string(const ProjPoint& p) {
  return "(" + p[0].to_string() + ":" + p[1].to_string() + ":" + p[2].to_string() + ")";
}

} // namespace trigon
