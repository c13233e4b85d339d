#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace trigon {

enum class FieldKind : std::uint8_t { Rational, Quadratic, Prime };

class Scalar;

// The ground field of a computation: Q, Q(sqrt(delta)) or F_p.
struct Field {
  FieldKind kind = FieldKind::Rational;
  long param = 0; // delta for Quadratic, p for Prime

  static Field rationals() { return {}; }
  static Field quadratic(long delta);
  static Field prime(long p);

  Scalar zero() const;
  Scalar one() const;
  Scalar from(const mpq_class& q) const;

  bool is_rational() const { return kind == FieldKind::Rational; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

// Exact field element. Rationals are kept in lowest terms; quadratic
// elements are a + b*sqrt(delta); prime-field elements live in [0, p).
//
// Mixed arithmetic promotes a Rational operand into the other operand's
// field. Quadratic and Prime operands never mix, nor do two different
// deltas or moduli.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}
  Scalar(int v) : a_(v) {}
  Scalar(mpq_class v) : a_(std::move(v)) { a_.canonicalize(); }
  Scalar(const mpz_class& v) : a_(v) {}

  static Scalar rational(long num, long den);
  static Scalar quadratic(mpq_class a, mpq_class b, long delta);
  static Scalar modp(const mpz_class& v, long p);

  FieldKind kind() const { return kind_; }
  long param() const { return param_; }
  Field field() const { return {kind_, param_}; }

  // Rational part (Quadratic: the a in a + b*sqrt(delta); Prime: residue).
  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational_value() const { return kind_ == FieldKind::Rational || (kind_ == FieldKind::Quadratic && sgn(b_) == 0); }

  // Value as a rational; throws InvalidInput unless the element is rational.
  const mpq_class& to_rational() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  // Rough size used for pivot choice (bits of numerators and denominators).
  std::size_t size_hint() const;

  std::string to_string() const;

  // Embed into field f (Rational -> anything). Throws on incompatible fields.
  Scalar in(const Field& f) const;

private:
  void promote_pair(Scalar& o);
  void reduce_mod();

  FieldKind kind_ = FieldKind::Rational;
  long param_ = 0;
  mpq_class a_;
  mpq_class b_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Field that two scalars share after promotion; throws InvalidInput if none.
Field join(const Field& x, const Field& y);

// Square-free kernel of a nonzero integer (trial division; a large cofactor
// that is not a perfect square is kept as is).
mpz_class squarefree_kernel(const mpz_class& n);

// If q is the square of a rational, return the root.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

// Square root of q inside Q(sqrt(delta)), if it exists there.
std::optional<Scalar> sqrt_in(const mpq_class& q, const Field& f);

unsigned long bit_height(const mpq_class& q);

} // namespace trigon
