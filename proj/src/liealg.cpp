#include "trigon/liealg.hpp"

#include "trigon/error.hpp"

namespace trigon {

namespace {

Vec flatten(const Mat& m) { return m.entries(); }

Field vec_field(const Vec& v, Field f = Field::rationals()) {
  for (const auto& x : v) f = join(f, x.field());
  return f;
}

Vec zeros(std::size_t n, const Field& f) { return Vec(n, f.zero()); }

Scalar dot(const Vec& x, const Vec& y) {
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  return s;
}

// Reduce v against a reduced echelon basis with unit pivots.
Vec reduce(Vec v, const std::vector<Vec>& rows, const std::vector<std::size_t>& pivots) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Scalar c = v[pivots[k]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!rows[k][j].is_zero()) v[j] -= c * rows[k][j];
  }
  return v;
}

std::vector<std::size_t> pivots_of(const std::vector<Vec>& rows) {
  std::vector<std::size_t> p;
  for (const auto& r : rows) {
    std::size_t j = 0;
    while (r[j].is_zero()) ++j;
    p.push_back(j);
  }
  return p;
}

std::vector<Vec> span_or_empty(const std::vector<Vec>& vs, std::size_t dim) {
  std::vector<Vec> nonzero;
  for (const auto& v : vs)
    if (!is_zero(v)) nonzero.push_back(v);
  return nonzero.empty() ? nonzero : span_basis(nonzero, dim);
}

} // namespace

LieAlg::LieAlg(std::vector<Mat> basis, std::size_t n) : n_(n), basis_(std::move(basis)) {
  field_ = Field::rationals();
  std::vector<Vec> flat;
  for (const auto& b : basis_) {
    if (b.rows() != n || b.cols() != n) fail(ErrorKind::InvalidInput, "basis matrix has the wrong size");
    flat.push_back(flatten(b));
    field_ = vec_field(flat.back(), field_);
  }
  for (auto& v : flat)
    for (auto& x : v) x = x.in(field_);
  for (auto& b : basis_) b = Mat(n, n, flatten(b)) * field_.one();
  if (!flat.empty() && span_basis(flat, n * n).size() != flat.size()) fail(ErrorKind::InvalidInput, "Lie algebra basis is dependent");
  coords_ = Coordinates(flat, n * n);
  const std::size_t d = dim();
  sc_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    sc_[i * d + i] = zeros(d, field_);
    for (std::size_t j = i + 1; j < d; ++j) {
      auto c = coords_.coords(flatten(trigon::bracket(basis_[i], basis_[j])));
      if (!c) fail(ErrorKind::VerificationFailed, "span is not closed under the bracket");
      sc_[j * d + i] = scaled(*c, Scalar(-1));
      sc_[i * d + j] = std::move(*c);
    }
  }
}

Mat LieAlg::element(const Vec& coords) const {
  Mat m(n_, n_, vec_field(coords, field_));
  for (std::size_t i = 0; i < dim(); ++i)
    if (!coords[i].is_zero()) m = m + basis_[i] * coords[i];
  return m;
}

std::optional<Vec> LieAlg::coords(const Mat& m) const {
  if (dim() == 0) return m.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
  return coords_.coords(flatten(m));
}

Vec LieAlg::bracket(const Vec& x, const Vec& y) const {
  Vec out = zeros(dim(), join(vec_field(x, field_), vec_field(y)));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Scalar c = x[i] * y[j];
      const Vec& s = structure(i, j);
      for (std::size_t k = 0; k < dim(); ++k)
        if (!s[k].is_zero()) out[k] += c * s[k];
    }
  }
  return out;
}

Mat LieAlg::ad(const Vec& x) const {
  const std::size_t d = dim();
  Mat m(d, d, vec_field(x, field_));
  for (std::size_t j = 0; j < d; ++j) {
    const Vec col = bracket(x, unit(j));
    for (std::size_t k = 0; k < d; ++k) m(k, j) = col[k];
  }
  return m;
}

Vec LieAlg::unit(std::size_t i) const {
  Vec v = zeros(dim(), field_);
  v[i] = field_.one();
  return v;
}

MPoly derivation(const Mat& m, const MPoly& q) {
  const std::size_t n = q.nvars();
  MPoly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const MPoly di = q.derivative(i);
    if (di.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) out = out + di * MPoly::variable(n, j) * m(i, j);
  }
  return out;
}

bool stabilizes(const FormSpace& space, const Mat& m) {
  if (space.basis.empty()) return true;
  const auto pivots = pivots_of(space.basis);
  for (const auto& q : space.forms()) {
    const MPoly dq = derivation(m, q);
    if (dq.is_zero()) continue;
    if (!is_zero(reduce(coefficient_vector(dq, space.degree), space.basis, pivots))) return false;
  }
  return true;
}

LieAlg stabilizer_algebra(const FormSpace& quadrics, std::size_t g) {
  if (quadrics.ambient_dim != g) fail(ErrorKind::InvalidInput, "form space lives in the wrong number of variables");
  if (quadrics.basis.empty()) fail(ErrorKind::InvalidInput, "stabilizer of an empty form space");
  const Field field = vec_field(quadrics.basis[0]);
  const auto pivots = pivots_of(quadrics.basis);
  const std::size_t width = quadrics.basis[0].size();
  std::vector<bool> is_pivot(width, false);
  for (auto p : pivots) is_pivot[p] = true;

  // Unknown M_ij sits in column i*g + j.
  std::vector<Vec> rows;
  for (const auto& q : quadrics.forms()) {
    std::vector<Vec> residuals(g * g);
    for (std::size_t i = 0; i < g; ++i) {
      const MPoly di = q.derivative(i);
      for (std::size_t j = 0; j < g; ++j) {
        const MPoly t = di * MPoly::variable(g, j);
        residuals[i * g + j] = t.is_zero() ? zeros(width, field) : reduce(coefficient_vector(t, 2), quadrics.basis, pivots);
      }
    }
    for (std::size_t c = 0; c < width; ++c) {
      if (is_pivot[c]) continue;
      Vec row = zeros(g * g, field);
      bool any = false;
      for (std::size_t u = 0; u < g * g; ++u) {
        row[u] = residuals[u][c];
        any = any || !row[u].is_zero();
      }
      if (any) rows.push_back(std::move(row));
    }
  }

  std::vector<Vec> solutions;
  if (rows.empty()) {
    for (std::size_t u = 0; u < g * g; ++u) {
      Vec v = zeros(g * g, field);
      v[u] = field.one();
      solutions.push_back(std::move(v));
    }
  } else {
    solutions = kernel_basis(Mat::from_rows(rows, g * g));
  }

  const Mat id = Mat::identity(g, field);
  if (!Coordinates(solutions, g * g).contains(flatten(id)))
    fail(ErrorKind::VerificationFailed, "identity does not stabilize the quadrics");
  const Scalar inv_g = Scalar(static_cast<long>(g)).in(field);
  if (inv_g.is_zero()) fail(ErrorKind::CurveUnsupported, "genus is divisible by the characteristic");

  std::vector<Vec> traceless;
  for (const auto& s : solutions) {
    Mat m(g, g, s);
    traceless.push_back(flatten(m - id * (m.trace() / inv_g)));
  }
  traceless = span_or_empty(traceless, g * g);
  if (traceless.size() + 1 != solutions.size())
    fail(ErrorKind::VerificationFailed, "trace-zero part has the wrong dimension");
  std::vector<Mat> basis;
  for (const auto& v : traceless) basis.emplace_back(g, g, v);
  return LieAlg(std::move(basis), g);
}

Mat killing_form(const LieAlg& l) {
  const std::size_t d = l.dim();
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < d; ++i) ads.push_back(l.ad(l.unit(i)));
  Mat k(d, d, l.field());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Scalar t = (ads[i] * ads[j]).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

std::vector<Vec> derived_algebra(const LieAlg& l) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) vs.push_back(l.structure(i, j));
  return span_or_empty(vs, l.dim());
}

std::vector<Vec> radical(const LieAlg& l) {
  const std::size_t d = l.dim();
  if (d == 0) return {};
  if (l.field().kind == FieldKind::Prime) fail(ErrorKind::InvalidInput, "radical needs characteristic zero");
  const auto derived = derived_algebra(l);
  std::vector<Vec> all;
  for (std::size_t i = 0; i < d; ++i) all.push_back(l.unit(i));
  if (derived.empty()) return all;
  const Mat k = killing_form(l);
  std::vector<Vec> rows;
  for (const auto& y : derived) rows.push_back(k * y);
  return kernel_basis(Mat::from_rows(rows, d));
}

LieAlg subalgebra(const LieAlg& l, const std::vector<Vec>& coords) {
  std::vector<Mat> mats;
  for (const auto& c : coords) mats.push_back(l.element(c));
  return LieAlg(std::move(mats), l.n());
}

LieAlg levi(const LieAlg& l) {
  const std::size_t d = l.dim();
  const auto rad = radical(l);
  if (rad.empty()) return l;
  if (rad.size() == d) return LieAlg({}, l.n());
  const Field field = l.field();

  // Derived series of the radical.
  std::vector<std::vector<Vec>> series{rad};
  while (!series.back().empty()) {
    const auto& r = series.back();
    std::vector<Vec> next;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j) next.push_back(l.bracket(r[i], r[j]));
    next = span_or_empty(next, d);
    if (next.size() == r.size()) fail(ErrorKind::LiftingFailed, "radical is not solvable");
    series.push_back(std::move(next));
  }

  // Complement spanned by unit vectors off the radical's pivots.
  std::vector<bool> pivot(d, false);
  for (auto p : pivots_of(rad)) pivot[p] = true;
  std::vector<Vec> y;
  for (std::size_t i = 0; i < d; ++i)
    if (!pivot[i]) y.push_back(l.unit(i));
  const std::size_t m = y.size();

  // Structure constants of L/R in the complement basis.
  std::vector<Vec> full = y;
  full.insert(full.end(), rad.begin(), rad.end());
  const Coordinates frame(full, d);
  std::vector<Vec> gamma(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec c = *frame.coords(l.bracket(y[i], y[j]));
      gamma[i * m + j] = Vec(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m));
    }

  auto error_of = [&](std::size_t i, std::size_t j) {
    Vec e = l.bracket(y[i], y[j]);
    for (std::size_t k = 0; k < m; ++k)
      if (!gamma[i * m + j][k].is_zero()) e = add(e, scaled(y[k], -gamma[i * m + j][k]));
    return e;
  };

  for (std::size_t level = 0; level + 1 < series.size(); ++level) {
    const auto& w = series[level];
    const auto& below = series[level + 1];
    // Functionals vanishing on the next term of the series.
    std::vector<Vec> phis;
    if (below.empty()) {
      for (std::size_t i = 0; i < d; ++i) phis.push_back(l.unit(i));
    } else {
      phis = kernel_basis(Mat::from_rows(below, d));
    }
    const std::size_t r = w.size();
    std::vector<Vec> rows;
    Vec rhs;
    bool consistent_already = true;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const Vec e = error_of(i, j);
        std::vector<Vec> yi_w, yj_w;
        for (std::size_t a = 0; a < r; ++a) {
          yi_w.push_back(l.bracket(y[i], w[a]));
          yj_w.push_back(l.bracket(y[j], w[a]));
        }
        for (const auto& phi : phis) {
          Vec row = zeros(m * r, field);
          for (std::size_t a = 0; a < r; ++a) {
            row[j * r + a] += dot(phi, yi_w[a]);
            row[i * r + a] -= dot(phi, yj_w[a]);
            const Scalar pw = dot(phi, w[a]);
            if (pw.is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k)
              if (!gamma[i * m + j][k].is_zero()) row[k * r + a] -= gamma[i * m + j][k] * pw;
          }
          const Scalar target = -dot(phi, e);
          consistent_already = consistent_already && target.is_zero();
          rows.push_back(std::move(row));
          rhs.push_back(target);
        }
      }
    if (consistent_already) continue;
    auto sol = solve(Mat::from_rows(rows, m * r), rhs);
    if (!sol) fail(ErrorKind::LiftingFailed, "Levi lifting equations are inconsistent");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t a = 0; a < r; ++a)
        if (!(*sol)[i * r + a].is_zero()) y[i] = add(y[i], scaled(w[a], (*sol)[i * r + a]));
  }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!is_zero(error_of(i, j))) fail(ErrorKind::LiftingFailed, "lifted complement is not a subalgebra");
  LieAlg s = subalgebra(l, y);
  if (rank(killing_form(s)) != s.dim()) fail(ErrorKind::LiftingFailed, "Levi candidate is not semisimple");
  return s;
}

std::string_view to_string(SurfaceCase c) {
  switch (c) {
  case SurfaceCase::CurveCutByQuadrics: return "CurveCutByQuadrics";
  case SurfaceCase::Scroll: return "Scroll";
  case SurfaceCase::P1xP1: return "P1xP1";
  case SurfaceCase::Veronese: return "Veronese";
  case SurfaceCase::Unexpected: return "Unexpected";
  }
  return "Unexpected";
}

std::vector<LieAlg> split_ideals(const LieAlg& s, std::optional<long>& extension) {
  extension.reset();
  const std::size_t d = s.dim();
  const Field field = s.field();
  // Centroid: maps phi commuting with every ad b. Unknown phi_rk in column r*d + k.
  std::vector<Vec> rows;
  for (std::size_t b = 0; b < d; ++b) {
    const Mat a = s.ad(s.unit(b));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        Vec row = zeros(d * d, field);
        for (std::size_t k = 0; k < d; ++k) {
          row[r * d + k] += a(k, c);
          row[k * d + c] -= a(r, k);
        }
        rows.push_back(std::move(row));
      }
  }
  const auto centroid = kernel_basis(Mat::from_rows(rows, d * d));
  if (centroid.size() != 2) return {};
  const Mat id = Mat::identity(d, field);
  const Coordinates scalars({flatten(id)}, d * d);
  Mat phi(d, d, centroid[0]);
  if (scalars.contains(flatten(phi))) phi = Mat(d, d, centroid[1]);
  // phi^2 = a*phi + b*id
  const auto ab = Coordinates({flatten(phi), flatten(id)}, d * d).coords(flatten(phi * phi));
  if (!ab) return {};
  const Scalar a = (*ab)[0], b = (*ab)[1];
  if (!a.is_rational_value() || !b.is_rational_value()) return {};
  const mpq_class disc = a.to_rational() * a.to_rational() + 4 * b.to_rational();
  if (sgn(disc) == 0) return {};
  Field ext = field;
  Scalar root;
  if (auto q = rational_sqrt(disc)) {
    root = Scalar(*q).in(field);
  } else {
    if (!field.is_rational()) return {};
    const mpz_class kernel = squarefree_kernel(disc.get_num() * disc.get_den());
    if (!kernel.fits_slong_p()) return {};
    ext = Field::quadratic(kernel.get_si());
    root = *sqrt_in(disc, ext);
    extension = kernel.get_si();
  }
  std::vector<LieAlg> ideals;
  const Scalar half = Scalar::rational(1, 2);
  for (const Scalar& lambda : {(a + root) * half, (a - root) * half}) {
    Mat shifted = phi * ext.one() - id * lambda;
    auto ker = kernel_basis(shifted);
    if (ker.size() != 3) return {};
    ideals.push_back(subalgebra(s, ker));
  }
  return ideals;
}

Classification classify(const LieAlg& l, const LieAlg& s, std::size_t g) {
  Classification out;
  if (l.dim() == 0) {
    out.kind = SurfaceCase::CurveCutByQuadrics;
  } else if (s.dim() == 3) {
    out.kind = SurfaceCase::Scroll;
  } else if (s.dim() == 6) {
    out.ideals = split_ideals(s, out.extension);
    out.kind = out.ideals.size() == 2 ? SurfaceCase::P1xP1 : SurfaceCase::Unexpected;
  } else if (s.dim() == 8 && g == 6) {
    out.kind = SurfaceCase::Veronese;
  } else {
    out.kind = SurfaceCase::Unexpected;
  }
  return out;
}

bool triple_relations_hold(const Sl2Triple& t) {
  return bracket(t.h, t.e) == t.e * Scalar(2) && bracket(t.h, t.f) == t.f * Scalar(-2) && bracket(t.e, t.f) == t.h;
}

namespace {

// Small integer coordinate vectors in a fixed order: entries in {-1,0,1}
// first, then {-2..2}.
std::vector<Vec> candidates(std::size_t dim, const Field& field) {
  std::vector<Vec> out;
  for (long bound : {1L, 2L}) {
    const long span = 2 * bound + 1;
    long total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= span;
    for (long code = 0; code < total; ++code) {
      Vec v(dim);
      long c = code;
      bool inner = true;
      for (std::size_t i = 0; i < dim; ++i) {
        const long x = c % span - bound;
        c /= span;
        v[i] = Scalar(x).in(field);
        inner = inner && x >= -bound + 1 && x <= bound - 1;
      }
      if (is_zero(v) || (bound == 2 && inner)) continue;
      out.push_back(std::move(v));
    }
  }
  return out;
}

Sl2Triple triple_from_h(const LieAlg& s, const Vec& h, std::optional<long> extension) {
  const Field field = vec_field(h, s.field());
  const Mat adh = s.ad(h);
  const Mat id = Mat::identity(s.dim(), field);
  auto ke = kernel_basis(adh - id * Scalar(2));
  auto kf = kernel_basis(adh + id * Scalar(2));
  if (ke.size() != 1 || kf.size() != 1) fail(ErrorKind::NotSl2, "ad h does not have eigenvalues 2 and -2");
  const Vec e = ke[0];
  Vec f = kf[0];
  const Vec ef = s.bracket(e, f);
  // [e, f] = c*h
  std::size_t k = 0;
  while (k < h.size() && h[k].is_zero()) ++k;
  const Scalar c = ef[k] / h[k];
  if (c.is_zero() || !is_zero(add(ef, scaled(h, -c)))) fail(ErrorKind::NotSl2, "[e,f] is not a multiple of h");
  f = scaled(f, c.inverse());
  return {s.element(e), s.element(h), s.element(f), extension};
}

Sl2Triple triple_from_nilpotent(const LieAlg& s, const Vec& e) {
  const std::size_t d = s.dim();
  const Mat ade = s.ad(e);
  // h = [e, y] with [h, e] = 2e, i.e. -ad_e(ad_e(y)) = 2e.
  const Mat lhs = (ade * ade) * Scalar(-1);
  auto y = solve(lhs, scaled(e, Scalar(2)));
  if (!y) fail(ErrorKind::NotSl2, "nilpotent element has no sl2 completion");
  const Vec h = ade * *y;
  // f with [h, f] = -2f and [e, f] = h.
  const Mat adh = s.ad(h);
  const Field field = s.field();
  Mat sys(2 * d, d, field);
  Vec rhs(2 * d, field.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      sys(i, j) = adh(i, j) + (i == j ? Scalar(2) : Scalar(0));
      sys(d + i, j) = ade(i, j);
    }
  for (std::size_t i = 0; i < d; ++i) rhs[d + i] = h[i];
  auto f = solve(sys, rhs);
  if (!f) fail(ErrorKind::NotSl2, "no f completes the triple");
  return {s.element(e), s.element(h), s.element(*f), std::nullopt};
}

} // namespace

Sl2Triple split_sl2(const LieAlg& s) {
  if (s.dim() != 3) fail(ErrorKind::NotSl2, "expected a 3-dimensional algebra, got dimension " + std::to_string(s.dim()));
  const Mat k = killing_form(s);
  if (rank(k) != 3) fail(ErrorKind::NotSl2, "Killing form is degenerate");
  const Field field = s.field();
  std::optional<Vec> fallback;
  mpq_class fallback_value;
  for (const auto& x : candidates(3, field)) {
    const Scalar kx = dot(x, k * x);
    if (kx.is_zero()) {
      Sl2Triple t = triple_from_nilpotent(s, x);
      if (!triple_relations_hold(t)) fail(ErrorKind::NotSl2, "triple relations fail");
      return t;
    }
    if (!kx.is_rational_value()) continue;
    // kappa(h, h) = 8 for a standard h.
    const mpq_class target = kx.to_rational() / 8;
    if (auto r = rational_sqrt(target)) {
      Sl2Triple t = triple_from_h(s, scaled(x, Scalar(*r).in(field).inverse()), field.kind == FieldKind::Quadratic ? std::optional<long>(field.param) : std::nullopt);
      if (!triple_relations_hold(t)) fail(ErrorKind::NotSl2, "triple relations fail");
      return t;
    }
    if (field.kind == FieldKind::Quadratic) {
      if (auto r = sqrt_in(target, field)) {
        Sl2Triple t = triple_from_h(s, scaled(x, r->inverse()), field.param);
        if (!triple_relations_hold(t)) fail(ErrorKind::NotSl2, "triple relations fail");
        return t;
      }
    }
    if (!fallback) {
      fallback = x;
      fallback_value = target;
    }
  }
  if (!fallback || !field.is_rational()) fail(ErrorKind::SplitFailedOverExtension, "no split Cartan element over " + field.name());
  const mpz_class kernel = squarefree_kernel(fallback_value.get_num() * fallback_value.get_den());
  if (!kernel.fits_slong_p()) fail(ErrorKind::SplitFailedOverExtension, "extension parameter too large");
  const Field ext = Field::quadratic(kernel.get_si());
  auto r = sqrt_in(fallback_value, ext);
  if (!r) fail(ErrorKind::SplitFailedOverExtension, "square root not found in " + ext.name());
  Vec h = *fallback;
  for (auto& c : h) c = c.in(ext);
  Sl2Triple t = triple_from_h(s, scaled(h, r->inverse()), kernel.get_si());
  if (!triple_relations_hold(t)) fail(ErrorKind::SplitFailedOverExtension, "triple relations fail over " + ext.name());
  return t;
}

} // namespace trigon
