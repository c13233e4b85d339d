#include "trigon/scroll.hpp"

#include "trigon/error.hpp"

#include <algorithm>

namespace trigon {

namespace {

Field field_of(const Sl2Triple& t) { return join(join(t.e.field(), t.h.field()), t.f.field()); }

Mat stacked(const Mat& top, const Mat& bottom) {
  Mat m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
  return m;
}

bool independent(const MPoly& p, const MPoly& q, int degree) {
  if (p.is_zero() || q.is_zero()) return false;
  return span_basis({coefficient_vector(p, degree), coefficient_vector(q, degree)}, monomials(3, degree).size()).size() == 2;
}

} // namespace

std::size_t WeightChains::offset(std::size_t c) const {
  std::size_t o = 0;
  for (std::size_t i = 0; i < c; ++i) o += chains[i].size();
  return o;
}

WeightChains weight_chains(const Sl2Triple& t, std::size_t g) {
  if (!triple_relations_hold(t)) fail(ErrorKind::DecompositionFailed, "triple relations fail");
  const Field field = field_of(t);
  const Mat id = Mat::identity(g, field);
  WeightChains w;
  std::size_t total = 0;
  for (std::size_t top = 0; top < g; ++top) {
    const Scalar weight = Scalar(static_cast<long>(top)).in(field);
    for (const auto& v0 : kernel_basis(stacked(t.e, t.h - id * weight))) {
      std::vector<Vec> chain{v0};
      for (std::size_t k = 0; k < top; ++k) chain.push_back(t.f * chain.back());
      if (!is_zero(t.f * chain.back())) fail(ErrorKind::DecompositionFailed, "chain does not terminate at the expected length");
      const long len = static_cast<long>(top) + 1;
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        // e v_{k+1} = (k+1)(len-1-k) v_k
        const long coeff = static_cast<long>(k + 1) * (len - 1 - static_cast<long>(k));
        if (t.e * chain[k + 1] != scaled(chain[k], Scalar(coeff))) fail(ErrorKind::DecompositionFailed, "chain coefficients are not standard");
      }
      total += chain.size();
      w.chains.push_back(std::move(chain));
    }
  }
  if (total != g) fail(ErrorKind::DecompositionFailed, "chains span " + std::to_string(total) + " of " + std::to_string(g) + " dimensions");
  w.basis = Mat(g, g, field);
  std::size_t col = 0;
  for (const auto& chain : w.chains)
    for (const auto& v : chain) {
      for (std::size_t i = 0; i < g; ++i) w.basis(i, col) = v[i];
      ++col;
    }
  auto inv = inverse(w.basis);
  if (!inv) fail(ErrorKind::DecompositionFailed, "chain vectors are dependent");
  w.dual = *inv;
  return w;
}

ScrollMat scroll_matrix(const WeightChains& w) {
  const std::size_t effective = static_cast<std::size_t>(
      std::count_if(w.chains.begin(), w.chains.end(), [](const auto& c) { return c.size() >= 2; }));
  if (w.chains.size() > 2 || effective == 0)
    fail(ErrorKind::ChainCountUnexpected,
         std::to_string(w.chains.size()) + " chains (" + std::to_string(effective) + " of length >= 2)");
  ScrollMat a;
  a.g = w.dual.cols();
  for (std::size_t c = 0; c < w.chains.size(); ++c) {
    const std::size_t o = w.offset(c);
    // Divided powers: k! v_k* makes the entries of a column proportional
    // to (s, t) along each ruling.
    mpz_class fact = 1;
    for (std::size_t k = 0; k + 1 < w.chains[c].size(); ++k) {
      const Vec lo = scaled(w.dual.row_vec(o + k), Scalar(fact));
      fact *= static_cast<unsigned long>(k + 1);
      const Vec hi = scaled(w.dual.row_vec(o + k + 1), Scalar(fact));
      a.columns.push_back({lo, hi});
    }
  }
  return a;
}

std::vector<MPoly> scroll_minors(const ScrollMat& a) {
  auto linear = [&](const Vec& v) {
    MPoly p(a.g);
    for (std::size_t i = 0; i < a.g; ++i)
      if (!v[i].is_zero()) p = p + MPoly::variable(a.g, i) * v[i];
    return p;
  };
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < a.columns.size(); ++i)
    for (std::size_t j = i + 1; j < a.columns.size(); ++j)
      out.push_back(linear(a.columns[i][0]) * linear(a.columns[j][1]) - linear(a.columns[i][1]) * linear(a.columns[j][0]));
  return out;
}

bool minors_span_quadrics(const ScrollMat& a, const FormSpace& quadrics) {
  std::vector<Vec> vs;
  for (const auto& m : scroll_minors(a))
    if (!m.is_zero()) vs.push_back(coefficient_vector(m, 2));
  const std::size_t width = monomials(a.g, 2).size();
  const auto minors = vs.empty() ? vs : span_basis(vs, width);
  if (minors.size() != quadrics.dim()) return false;
  if (minors.empty()) return true;
  const Field f = join(Mat::from_rows(minors, width).field(), Mat::from_rows(quadrics.basis, width).field());
  auto lift = [&](std::vector<Vec> b) {
    for (auto& v : b)
      for (auto& x : v) x = x.in(f);
    return span_basis(b, width);
  };
  return lift(minors) == lift(quadrics.basis);
}

MPoly pull_back(const Vec& linear_form, const CanonicalMap& cm) {
  MPoly p(3);
  for (std::size_t i = 0; i < cm.omega.size(); ++i)
    if (!linear_form[i].is_zero()) p = p + cm.omega[i] * linear_form[i];
  return p;
}

PencilMap ruling_map(const ScrollMat& a, const CanonicalMap& cm, const PlaneCurve& c) {
  for (std::size_t k = 0; k < a.columns.size(); ++k) {
    MPoly p = pull_back(a.columns[k][0], cm), q = pull_back(a.columns[k][1], cm);
    if (!independent(p, q, cm.degree)) continue;
    PencilMap out;
    out.p = std::move(p);
    out.q = std::move(q);
    out.column = k;
    const Field f = join(out.p.field(), out.q.field());
    if (f.kind == FieldKind::Quadratic) out.extension = f.param;
    (void)c;
    return out;
  }
  fail(ErrorKind::AllColumnsDegenerate, "every column of the scroll matrix pulls back to proportional forms");
}

bool columns_agree(const ScrollMat& a, const CanonicalMap& cm, const PlaneCurve& c) {
  std::vector<std::pair<MPoly, MPoly>> maps;
  for (const auto& col : a.columns) {
    MPoly p = pull_back(col[0], cm), q = pull_back(col[1], cm);
    if (independent(p, q, cm.degree)) maps.emplace_back(std::move(p), std::move(q));
  }
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j)
      if (!divides(c.f, maps[i].first * maps[j].second - maps[i].second * maps[j].first)) return false;
  return true;
}

std::vector<std::optional<PencilMap>> p1xp1_rulings(const Classification& cls, const CanonicalMap& cm, const PlaneCurve& c) {
  std::vector<std::optional<PencilMap>> out(cls.ideals.size());
  for (std::size_t i = 0; i < cls.ideals.size(); ++i) {
    try {
      const Sl2Triple t = split_sl2(cls.ideals[i]);
      PencilMap& p = out[i].emplace(ruling_map(scroll_matrix(weight_chains(t, cm.genus())), cm, c));
      if (!p.extension) p.extension = t.extension ? t.extension : cls.extension;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SplitFailedOverExtension && e.kind() != ErrorKind::NotSl2 &&
          e.kind() != ErrorKind::ChainCountUnexpected && e.kind() != ErrorKind::DecompositionFailed)
        throw;
      out[i].reset();
    }
  }
  return out;
}

} // namespace trigon
