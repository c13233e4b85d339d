#pragma once

#include "trigon/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trigon {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// Graded lexicographic order, larger first: higher total degree wins, ties
// broken lexicographically with variable 0 most significant.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// All exponent vectors of total degree `degree` in `nvars` variables, in
// graded-lex (descending) order.
std::vector<Exponent> monomials(std::size_t nvars, int degree);

// Sparse multivariate polynomial; terms are kept in graded-lex order and
// never hold a zero coefficient.
class MPoly {
public:
  using Terms = std::map<Exponent, Scalar, GrlexGreater>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Scalar& c);
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly monomial(Exponent e, const Scalar& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool is_constant() const;

  Scalar coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Scalar& c);
  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Scalar& leading_coeff() const { return terms_.begin()->second; }

  // Common field of the coefficients.
  Field field() const;
  MPoly in(const Field& f) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Scalar& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Scalar& c) { return a *= c; }
  friend MPoly operator*(const Scalar& c, MPoly a) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  MPoly pow(unsigned k) const;
  MPoly derivative(std::size_t var) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;

  // Replace variable i by images[i]; all images share one ring.
  MPoly compose(const std::vector<MPoly>& images) const;
  MPoly substitute(std::size_t var, const MPoly& value) const;
  // Set var to the given value, keeping the number of variables.
  MPoly specialize(std::size_t var, const Scalar& value) const;

  // Coefficients c_k with f = sum c_k var^k (var absent from each c_k).
  std::vector<MPoly> coefficients_in(std::size_t var) const;

  // Homogenize into nvars+1 variables using the new last variable, to the
  // given degree (defaults to the total degree).
  MPoly homogenize(int degree = -1) const;

  // Terms of exactly the given total degree.
  MPoly homogeneous_part(int degree) const;

  // Maximum bit height of the coefficients (rational coefficients only).
  unsigned long bit_height() const;

  // Over Q: clear denominators and divide by the integer content, with a
  // positive leading coefficient. Other fields: make monic.
  MPoly primitive() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  std::size_t nvars_;
  Terms terms_;
};

std::vector<std::string> default_names(std::size_t nvars);

// Quotient if b divides a exactly.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

// Remainder of a modulo the single polynomial b (graded-lex division);
// zero exactly when b divides a.
MPoly remainder(const MPoly& a, const MPoly& b);

inline bool divides(const MPoly& b, const MPoly& a) { return remainder(a, b).is_zero(); }

} // namespace trigon
