#include "trigon/matrix.hpp"

#include "trigon/error.hpp"

#include <utility>

namespace trigon {

Mat::Mat(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), entries_(rows * cols, f.zero()) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    fail(ErrorKind::InvalidInput, "matrix entry count does not match shape");
}

Mat Mat::identity(std::size_t n, const Field& f) {
  Mat m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) fail(ErrorKind::InvalidInput, "ragged rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Mat(rows.size(), cols, std::move(entries));
}

Field Mat::field() const {
  Field f;
  for (const auto& e : entries_) {
    if (e.kind() != FieldKind::Rational) f = join(f, e.field());
  }
  return f;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Mat::trace() const {
  Scalar s;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

bool Mat::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::InvalidInput, "matrix product shape mismatch");
  Mat p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) p(i, j) += a * b;
      }
    }
  return p;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::InvalidInput, "matrix sum shape mismatch");
  Mat s = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] += o.entries_[i];
  return s;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::InvalidInput, "matrix difference shape mismatch");
  Mat s = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] -= o.entries_[i];
  return s;
}

Mat Mat::operator*(const Scalar& c) const {
  Mat s = *this;
  for (auto& e : s.entries_) e *= c;
  return s;
}

Vec Mat::operator*(const Vec& v) const {
  if (v.size() != cols_) fail(ErrorKind::InvalidInput, "matrix-vector shape mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool operator==(const Mat& x, const Mat& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
}

Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

Echelon rref(const Mat& m) {
  const Field f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Vec> a(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    a[i].reserve(cols);
    for (const auto& e : m.row(i)) a[i].push_back(e.in(f));
  }

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_size = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      std::size_t sz = a[i][c].size_hint();
      if (best == rows || sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);

    Scalar inv = a[r][c].inverse();
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (a[r][j].is_zero()) continue;
      a[r][j] *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar factor = a[i][c];
      for (std::size_t j : support) a[i][j] -= factor * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return {Mat::from_rows(a, cols), std::move(pivots)};
}

std::vector<Vec> kernel_basis(const Mat& m) {
  const Field f = m.field();
  Echelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  return span_basis(basis, cols);
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) fail(ErrorKind::InvalidInput, "solve: right-hand side length mismatch");
  const std::size_t cols = m.cols();
  Mat aug(m.rows(), cols + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  Echelon e = rref(aug);
  Vec x(cols, e.reduced.field().zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, cols);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidInput, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.field();
  Mat aug(n, 2 * n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Echelon e = rref(Mat::from_rows(vectors, dim));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row_vec(i));
  return out;
}

Coordinates::Coordinates(std::vector<Vec> basis, std::size_t dim) : basis_(std::move(basis)), dim_(dim) {
  const std::size_t k = basis_.size();
  if (k == 0) return;
  Echelon e = rref(Mat::from_rows(basis_, dim_));
  if (e.pivots.size() != k) fail(ErrorKind::InvalidInput, "coordinate family is linearly dependent");
  pivots_ = e.pivots;
  Mat sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = basis_[i][pivots_[j]];
  pivot_inverse_ = *inverse(sub);
}

std::optional<Vec> Coordinates::coords(const Vec& v) const {
  if (v.size() != dim_) fail(ErrorKind::InvalidInput, "coordinate vector length mismatch");
  const std::size_t k = basis_.size();
  // c * sub = v restricted to pivots  =>  c = v_P * sub^{-1}
  Vec c(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Scalar& vp = v[pivots_[j]];
    if (vp.is_zero()) continue;
    for (std::size_t i = 0; i < k; ++i) c[i] += vp * pivot_inverse_(j, i);
  }
  Vec recon(dim_);
  for (std::size_t i = 0; i < k; ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t t = 0; t < dim_; ++t)
      if (!basis_[i][t].is_zero()) recon[t] += c[i] * basis_[i][t];
  }
  for (std::size_t t = 0; t < dim_; ++t)
    if (recon[t] != v[t]) return std::nullopt;
  return c;
}

Vec add(const Vec& x, const Vec& y) {
  Vec out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

Vec scaled(const Vec& x, const Scalar& s) {
  Vec out = x;
  for (auto& e : out) e *= s;
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

} // namespace trigon
