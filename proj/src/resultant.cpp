#include "trigon/resultant.hpp"

#include "trigon/error.hpp"

namespace trigon {

namespace {

template <class R>
std::vector<std::vector<R>> sylvester(const std::vector<R>& a, const std::vector<R>& b, const R& zero) {
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  std::vector<std::vector<R>> s(m + n, std::vector<R>(m + n, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k <= n; ++k) s[n + j][j + k] = b[n - k];
  return s;
}

} // namespace

MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var) {
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::InvalidInput, "resultant of a zero polynomial");
  if (var >= f.nvars() || f.nvars() != g.nvars()) fail(ErrorKind::InvalidInput, "resultant variable out of range");
  const int m = f.degree_in(var), n = g.degree_in(var);
  if (m == 0 && n == 0) fail(ErrorKind::InvalidInput, "resultant: both polynomials are constant in the variable");
  if (m == 0) return f.pow(static_cast<unsigned>(n));
  if (n == 0) return g.pow(static_cast<unsigned>(m));

  const std::size_t nv = f.nvars();
  const MPoly zero(nv), one = MPoly::constant(nv, Scalar(1));
  auto s = sylvester(f.coefficients_in(var), g.coefficients_in(var), zero);
  return bareiss_determinant(std::move(s), zero, one, [](const MPoly& a, const MPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) fail(ErrorKind::VerificationFailed, "inexact division in Bareiss elimination");
    return *q;
  });
}

BiPoly to_bipoly(const MPoly& p, std::size_t xvar, std::size_t yvar) {
  BiPoly out(std::max(p.degree_in(yvar) + 1, 0));
  std::vector<std::vector<Scalar>> dense(out.size());
  const int dx = std::max(p.degree_in(xvar), 0);
  for (auto& d : dense) d.assign(dx + 1, Scalar());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != xvar && i != yvar && e[i] != 0) fail(ErrorKind::InvalidInput, "polynomial is not bivariate in the requested variables");
    dense[e[yvar]][e[xvar]] = c;
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = UPoly(std::move(dense[k]));
  return out;
}

UPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  if (f.empty() || g.empty()) fail(ErrorKind::InvalidInput, "resultant of a zero polynomial");
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  auto upow = [](const UPoly& u, std::size_t k) {
    UPoly r = UPoly::constant(Scalar(1));
    for (std::size_t i = 0; i < k; ++i) r = r * u;
    return r;
  };
  if (m == 0 && n == 0) fail(ErrorKind::InvalidInput, "resultant: both polynomials are constant in y");
  if (m == 0) return upow(f[0], n);
  if (n == 0) return upow(g[0], m);
  const UPoly zero, one = UPoly::constant(Scalar(1));
  auto s = sylvester(f, g, zero);
  return bareiss_determinant(std::move(s), zero, one, [](const UPoly& a, const UPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) fail(ErrorKind::VerificationFailed, "inexact division in Bareiss elimination");
    return *q;
  });
}

} // namespace trigon
