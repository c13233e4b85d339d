#include "trigon/upoly.hpp"

#include "trigon/error.hpp"

#include <algorithm>
#include <sstream>

namespace trigon {

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Field UPoly::field() const {
  Field f;
  for (const auto& c : c_)
    if (c.kind() != FieldKind::Rational) f = join(f, c.field());
  return f;
}

Scalar UPoly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly operator*(UPoly a, const Scalar& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

UPoly UPoly::operator-() const {
  UPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<long>(i)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

std::string UPoly::to_string(const std::string& var) const {
  return from_upoly(*this, 1, 0).to_string({var});
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidInput, "division by zero polynomial");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Scalar> r = a.coeffs();
  std::vector<Scalar> q(a.degree() - b.degree() + 1);
  const Scalar inv = b.leading().inverse();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    Scalar t = r[k] * inv;
    q[k - db] = t;
    for (int j = 0; j <= db; ++j)
      if (!b.coeffs()[j].is_zero()) r[k - db + j] -= t * b.coeffs()[j];
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

namespace {

using ZPoly = std::vector<mpz_class>; // lowest first, no trailing zeros

void ztrim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Primitive integer multiple of a rational polynomial (positive leading).
ZPoly to_primitive(const UPoly& u) {
  mpz_class den = 1;
  for (const auto& c : u.coeffs()) {
    const mpq_class& q = c.to_rational();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  ZPoly z;
  for (const auto& c : u.coeffs()) {
    const mpq_class& q = c.to_rational();
    z.push_back(q.get_num() * (den / q.get_den()));
  }
  ztrim(z);
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(g) == 0) return z;
  if (sgn(z.back()) < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

void make_primitive(ZPoly& z) {
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(g) == 0) return;
  if (sgn(z.back()) < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

UPoly from_z(const ZPoly& z) {
  std::vector<Scalar> c;
  for (const auto& v : z) c.emplace_back(v);
  return UPoly(std::move(c));
}

ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lc = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpz_class lead = a.back();
    for (auto& c : a) c *= lc;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= lead * b[j];
    ztrim(a);
  }
  return a;
}

UPoly gcd_rational(const UPoly& x, const UPoly& y) {
  ZPoly a = to_primitive(x), b = to_primitive(y);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return from_z(a).monic();
}

} // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Field f = join(a.field(), b.field());
  if (f.kind == FieldKind::Rational) return gcd_rational(a, b);
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& u) {
  if (u.is_zero()) fail(ErrorKind::InvalidInput, "square-free part of the zero polynomial");
  if (u.degree() == 0) return UPoly::constant(Scalar(1));
  UPoly g = gcd(u, u.derivative());
  return divmod(u, g).first.monic();
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;
constexpr std::size_t kMaxCandidates = 200000;

// Positive divisors of |n|, or nullopt if n cannot be factored by trial
// division (a composite cofactor beyond the trial limit).
std::optional<std::vector<mpz_class>> divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  for (unsigned long p = 2; p <= kTrialLimit && mpz_class(p) * p <= m; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(mpz_class(p), e);
  }
  if (m > 1) {
    if (m > mpz_class(kTrialLimit) * kTrialLimit && mpz_probab_prime_p(m.get_mpz_t(), 30) == 0) return std::nullopt;
    factors.emplace_back(m, 1);
  }
  std::vector<mpz_class> divs = {1};
  for (const auto& [p, e] : factors) {
    const std::size_t n0 = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n0; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > kMaxCandidates) return std::nullopt;
  }
  return divs;
}

mpz_class zeval_mod(const ZPoly& z, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = z.rbegin(); it != z.rend(); ++it) {
    acc = acc * x + *it;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

bool zroot(const ZPoly& z, const mpq_class& r) {
  mpq_class acc = 0;
  for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * r + mpq_class(*it);
  return sgn(acc) == 0;
}

// Distinct nonzero rational roots of a squarefree primitive polynomial
// with nonzero constant term, via divisor candidates.
std::optional<std::vector<mpq_class>> roots_by_divisors(const ZPoly& s) {
  auto num = divisors(s.front());
  auto den = divisors(s.back());
  if (!num || !den || num->size() * den->size() > kMaxCandidates) return std::nullopt;
  std::vector<mpq_class> out;
  for (const auto& a : *num)
    for (const auto& b : *den) {
      if (gcd(a, b) != 1) continue;
      for (int sign : {1, -1}) {
        mpq_class r(sign * a, b);
        r.canonicalize();
        if (zroot(s, r)) out.push_back(r);
      }
    }
  return out;
}

bool rational_reconstruct(const mpz_class& value, const mpz_class& modulus, const mpz_class& bound, mpq_class& out) {
  mpz_class r0 = modulus, r1 = value, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (sgn(t1) == 0 || abs(t1) > bound) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

std::vector<mpq_class> roots_by_lifting(const ZPoly& s) {
  const ZPoly ds = [&] {
    ZPoly d;
    for (std::size_t i = 1; i < s.size(); ++i) d.push_back(s[i] * static_cast<unsigned long>(i));
    return d;
  }();
  mpz_class bound = abs(s.front()) > abs(s.back()) ? mpz_class(abs(s.front())) : mpz_class(abs(s.back()));
  const mpz_class target = 2 * bound * bound;

  for (unsigned long p = 10007;; p += 2) {
    if (mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0) continue;
    if (mpz_divisible_ui_p(s.back().get_mpz_t(), p)) continue;
    // s must stay squarefree mod p so that every root lifts uniquely.
    std::vector<Scalar> sp, dsp;
    for (const auto& c : s) sp.push_back(Scalar::modp(c, static_cast<long>(p)));
    for (const auto& c : ds) dsp.push_back(Scalar::modp(c, static_cast<long>(p)));
    if (gcd(UPoly(sp), UPoly(dsp)).degree() > 0) continue;

    std::vector<unsigned long> coeffs;
    for (const auto& c : s) coeffs.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    std::vector<mpq_class> out;
    for (unsigned long x = 0; x < p; ++x) {
      unsigned long acc = 0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it) % p;
      if (acc != 0) continue;
      mpz_class m = p, r = x;
      while (m <= target) {
        m = m * m;
        mpz_class fr = zeval_mod(s, r, m), dr = zeval_mod(ds, r, m), inv;
        mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), m.get_mpz_t());
        r = r - fr * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
      }
      mpq_class cand;
      if (rational_reconstruct(r, m, bound, cand) && zroot(s, cand)) out.push_back(cand);
    }
    return out;
  }
}

std::vector<Scalar> with_multiplicities(const UPoly& u, std::vector<mpq_class> distinct, int zero_mult) {
  std::vector<Scalar> out;
  for (int k = 0; k < zero_mult; ++k) out.emplace_back(0);
  for (const auto& r : distinct) {
    UPoly rest = u;
    const UPoly lin = UPoly::linear_root(Scalar(r));
    while (auto q = divide_exact(rest, lin)) {
      out.emplace_back(r);
      rest = *q;
    }
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.a() < b.a(); });
  return out;
}

// Shared preprocessing: strip the root at zero, take the squarefree
// primitive remainder.
std::pair<ZPoly, int> prepare(const UPoly& u) {
  if (u.is_zero()) fail(ErrorKind::InvalidInput, "rational roots of the zero polynomial");
  for (const auto& c : u.coeffs()) (void)c.to_rational();
  int zero_mult = 0;
  while (u.coeff(zero_mult).is_zero()) ++zero_mult;
  std::vector<Scalar> shifted(u.coeffs().begin() + zero_mult, u.coeffs().end());
  ZPoly s = to_primitive(squarefree_part(UPoly(std::move(shifted))));
  return {s, zero_mult};
}

} // namespace

std::vector<Scalar> rational_roots(const UPoly& u) {
  auto [s, zero_mult] = prepare(u);
  if (s.size() <= 1) return with_multiplicities(u, {}, zero_mult);
  auto distinct = roots_by_divisors(s);
  return with_multiplicities(u, distinct ? *distinct : roots_by_lifting(s), zero_mult);
}

std::vector<Scalar> rational_roots_padic(const UPoly& u) {
  auto [s, zero_mult] = prepare(u);
  if (s.size() <= 1) return with_multiplicities(u, {}, zero_mult);
  return with_multiplicities(u, roots_by_lifting(s), zero_mult);
}

std::vector<Scalar> distinct_field_roots(const UPoly& u) {
  if (u.is_zero()) fail(ErrorKind::InvalidInput, "roots of the zero polynomial");
  const Field f = u.field();
  std::vector<Scalar> out;
  switch (f.kind) {
  case FieldKind::Rational:
    for (const auto& r : rational_roots(u))
      if (out.empty() || out.back() != r) out.push_back(r);
    return out;
  case FieldKind::Prime:
    if (f.param > 2000000) fail(ErrorKind::InvalidInput, "root search needs p <= 2000000");
    for (long x = 0; x < f.param; ++x) {
      Scalar v = Scalar::modp(x, f.param);
      if (u(v).is_zero()) out.push_back(v);
    }
    return out;
  case FieldKind::Quadratic:
    break;
  }
  fail(ErrorKind::InvalidInput, "root search over a quadratic extension is not supported");
}

UPoly to_upoly(const MPoly& p, std::size_t var) {
  std::vector<Scalar> c(std::max(p.degree_in(var) + 1, 0));
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) fail(ErrorKind::InvalidInput, "polynomial is not univariate in the requested variable");
    c[e[var]] = v;
  }
  return UPoly(std::move(c));
}

MPoly from_upoly(const UPoly& u, std::size_t nvars, std::size_t var) {
  MPoly p(nvars);
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    Exponent e(nvars, 0);
    e[var] = static_cast<int>(k);
    p.add_term(e, u.coeffs()[k]);
  }
  return p;
}

} // namespace trigon
