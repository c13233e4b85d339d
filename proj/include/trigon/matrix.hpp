#pragma once

#include "trigon/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace trigon {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over one exact field.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const Field& f = Field::rationals());
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Mat identity(std::size_t n, const Field& f = Field::rationals());
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
  const std::vector<Scalar>& entries() const { return entries_; }

  // Common field of all entries; InvalidInput for mixed variants.
  Field field() const;

  Mat transpose() const;
  Scalar trace() const;
  bool is_zero() const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Scalar& s) const;
  Vec operator*(const Vec& v) const;

  friend bool operator==(const Mat& x, const Mat& y);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Mat bracket(const Mat& x, const Mat& y);

struct Echelon {
  Mat reduced;                     // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots; // pivot column of each row
};

// Reduced row echelon form. Pivot choice is deterministic: within a column,
// the eligible entry of smallest size, lowest row index on ties.
Echelon rref(const Mat& m);

// Right null space basis, returned in reduced echelon form.
std::vector<Vec> kernel_basis(const Mat& m);

std::size_t rank(const Mat& m);

// Some x with m*x = b, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);

std::optional<Mat> inverse(const Mat& m);

// Reduced echelon basis of span(vectors).
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim);

// Coordinates of vectors relative to a fixed linearly independent family.
class Coordinates {
public:
  Coordinates() = default;
  Coordinates(std::vector<Vec> basis, std::size_t dim);

  std::size_t size() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  // Coefficients c with sum c_i basis_i = v, or nullopt if v is outside.
  std::optional<Vec> coords(const Vec& v) const;
  bool contains(const Vec& v) const { return coords(v).has_value(); }

private:
  std::vector<Vec> basis_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> pivots_;
  Mat pivot_inverse_; // inverse of the basis restricted to pivot columns
};

Vec add(const Vec& x, const Vec& y);
Vec scaled(const Vec& x, const Scalar& s);
bool is_zero(const Vec& v);

} // namespace trigon
