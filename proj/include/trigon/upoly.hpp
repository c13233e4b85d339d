#pragma once

#include "trigon/mpoly.hpp"
#include "trigon/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace trigon {

// Dense univariate polynomial, lowest degree first, no trailing zeros.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coeffs);
  static UPoly constant(const Scalar& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Scalar(0), Scalar(1)}); }
  // x - r
  static UPoly linear_root(const Scalar& r) { return UPoly({-r, Scalar(1)}); }

  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& leading() const { return c_.back(); }
  Scalar coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Scalar(); }
  Field field() const;

  Scalar operator()(const Scalar& x) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Scalar& s);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly derivative() const;
  UPoly monic() const;

  std::string to_string(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Scalar> c_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Quotient if b divides a.
std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b);

// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

// u / gcd(u, u'), monic.
UPoly squarefree_part(const UPoly& u);

// Rational roots with multiplicity (each root repeated by its multiplicity),
// sorted ascending. Coefficients must be rational.
std::vector<Scalar> rational_roots(const UPoly& u);

// Same result computed by p-adic lifting and rational reconstruction;
// rational_roots falls back to it when divisor enumeration is too large.
std::vector<Scalar> rational_roots_padic(const UPoly& u);

// Distinct roots lying in the coefficient field (Q or F_p).
std::vector<Scalar> distinct_field_roots(const UPoly& u);

// Conversions between an MPoly involving only `var` and a UPoly.
UPoly to_upoly(const MPoly& p, std::size_t var);
MPoly from_upoly(const UPoly& u, std::size_t nvars, std::size_t var);

} // namespace trigon
