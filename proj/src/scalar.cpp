#include "trigon/scalar.hpp"

#include "trigon/error.hpp"

#include <ostream>
#include <sstream>

namespace trigon {

namespace {

bool is_perfect_square(const mpz_class& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

} // namespace

Field Field::quadratic(long delta) {
  if (delta == 0 || delta == 1 || (delta > 0 && is_perfect_square(mpz_class(delta))))
    fail(ErrorKind::InvalidInput, "quadratic extension needs a non-square delta, got " + std::to_string(delta));
  return {FieldKind::Quadratic, delta};
}

Field Field::prime(long p) {
  if (p < 3 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0)
    fail(ErrorKind::InvalidInput, "prime field needs an odd prime, got " + std::to_string(p));
  return {FieldKind::Prime, p};
}

Scalar Field::zero() const { return Scalar(0).in(*this); }
Scalar Field::one() const { return Scalar(1).in(*this); }
Scalar Field::from(const mpq_class& q) const { return Scalar(q).in(*this); }

std::string Field::name() const {
  switch (kind) {
  case FieldKind::Rational: return "Q";
  case FieldKind::Quadratic: return "Q(sqrt(" + std::to_string(param) + "))";
  case FieldKind::Prime: return "Fp " + std::to_string(param);
  }
  return "?";
}

Field join(const Field& x, const Field& y) {
  if (x == y) return x;
  if (x.kind == FieldKind::Rational) return y;
  if (y.kind == FieldKind::Rational) return x;
  fail(ErrorKind::InvalidInput, "mixed field variants: " + x.name() + " and " + y.name());
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::quadratic(mpq_class a, mpq_class b, long delta) {
  Field f = Field::quadratic(delta);
  Scalar s;
  s.kind_ = f.kind;
  s.param_ = f.param;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.a_.canonicalize();
  s.b_.canonicalize();
  return s;
}

Scalar Scalar::modp(const mpz_class& v, long p) {
  Scalar s;
  s.kind_ = FieldKind::Prime;
  s.param_ = p;
  s.a_ = v;
  s.reduce_mod();
  return s;
}

void Scalar::reduce_mod() {
  mpz_class p(param_);
  mpz_class num = a_.get_num();
  mpz_class den = a_.get_den();
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      fail(ErrorKind::InvalidInput, "denominator not invertible mod " + std::to_string(param_));
    num *= inv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  a_ = r;
  b_ = 0;
}

Scalar Scalar::in(const Field& f) const {
  Field target = join(field(), f);
  if (target == field()) return *this;
  Scalar s = *this;
  s.kind_ = target.kind;
  s.param_ = target.param;
  if (target.kind == FieldKind::Prime) s.reduce_mod();
  return s;
}

void Scalar::promote_pair(Scalar& o) {
  if (kind_ == o.kind_ && param_ == o.param_) return;
  Field f = join(field(), o.field());
  *this = in(f);
  o = o.in(f);
}

const mpq_class& Scalar::to_rational() const {
  if (!is_rational_value()) fail(ErrorKind::InvalidInput, "scalar " + to_string() + " is not rational");
  return a_;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.a_ = -s.a_;
  s.b_ = -s.b_;
  if (kind_ == FieldKind::Prime) s.reduce_mod();
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (kind_ == o.kind_ && param_ == o.param_) {
    a_ += o.a_;
    if (kind_ == FieldKind::Quadratic) b_ += o.b_;
    if (kind_ == FieldKind::Prime) reduce_mod();
    return *this;
  }
  Scalar y = o;
  promote_pair(y);
  return *this += y;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (kind_ == o.kind_ && param_ == o.param_) {
    a_ -= o.a_;
    if (kind_ == FieldKind::Quadratic) b_ -= o.b_;
    if (kind_ == FieldKind::Prime) reduce_mod();
    return *this;
  }
  Scalar y = o;
  promote_pair(y);
  return *this -= y;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (kind_ != o.kind_ || param_ != o.param_) {
    Scalar y = o;
    promote_pair(y);
    return *this *= y;
  }
  switch (kind_) {
  case FieldKind::Rational: a_ *= o.a_; break;
  case FieldKind::Prime:
    a_ *= o.a_;
    reduce_mod();
    break;
  case FieldKind::Quadratic: {
    mpq_class na = a_ * o.a_ + b_ * o.b_ * param_;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    break;
  }
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
  Scalar s = *this;
  switch (kind_) {
  case FieldKind::Rational: s.a_ = 1 / a_; break;
  case FieldKind::Prime: {
    mpz_class inv, p(param_);
    mpz_class v = a_.get_num();
    mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    s.a_ = inv;
    break;
  }
  case FieldKind::Quadratic: {
    mpq_class norm = a_ * a_ - b_ * b_ * param_;
    s.a_ = a_ / norm;
    s.b_ = -b_ / norm;
    break;
  }
  }
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.kind_ == y.kind_ && x.param_ == y.param_) return x.a_ == y.a_ && x.b_ == y.b_;
  Scalar u = x, v = y;
  u.promote_pair(v);
  return u.a_ == v.a_ && u.b_ == v.b_;
}

std::size_t Scalar::size_hint() const {
  auto bits = [](const mpq_class& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
  };
  return bits(a_) + (kind_ == FieldKind::Quadratic ? bits(b_) : 0);
}

std::string Scalar::to_string() const {
  if (kind_ != FieldKind::Quadratic || sgn(b_) == 0) return a_.get_str();
  std::ostringstream os;
  os << "(";
  if (sgn(a_) != 0) os << a_.get_str() << (sgn(b_) > 0 ? "+" : "");
  if (b_ == -1)
    os << "-";
  else if (b_ != 1)
    os << b_.get_str() << "*";
  os << "sqrt(" << param_ << "))";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

mpz_class squarefree_kernel(const mpz_class& n) {
  if (sgn(n) == 0) fail(ErrorKind::InvalidInput, "squarefree kernel of zero");
  mpz_class m = abs(n);
  mpz_class out = sgn(n) < 0 ? -1 : 1;
  for (unsigned long p = 2; p <= 1000000 && p * p <= m; ++p) {
    unsigned count = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++count;
    }
    if (count % 2 == 1) out *= p;
  }
  if (!is_perfect_square(m)) out *= m;
  return out;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!is_perfect_square(n) || !is_perfect_square(d)) return std::nullopt;
  return mpq_class(sqrt(n), sqrt(d));
}

std::optional<Scalar> sqrt_in(const mpq_class& q, const Field& f) {
  if (auto r = rational_sqrt(q)) return Scalar(*r).in(f);
  if (f.kind != FieldKind::Quadratic) return std::nullopt;
  // q = delta * s^2  =>  sqrt(q) = s*sqrt(delta)
  auto s = rational_sqrt(q / f.param);
  if (!s) return std::nullopt;
  return Scalar::quadratic(0, *s, f.param);
}

unsigned long bit_height(const mpq_class& q) {
  if (sgn(q) == 0) return 0;
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

} // namespace trigon
