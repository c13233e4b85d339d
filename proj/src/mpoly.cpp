#include "trigon/mpoly.hpp"

#include "trigon/error.hpp"

#include <numeric>
#include <sstream>

namespace trigon {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

std::vector<Exponent> monomials(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  // Lex-descending enumeration of compositions of `degree`.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(std::move(e), Scalar(1));
}

MPoly MPoly::monomial(Exponent e, const Scalar& c) {
  MPoly p(e.size());
  p.add_term(e, c);
  return p;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, trigon::total_degree(e));
  return d;
}

int MPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = trigon::total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (trigon::total_degree(e) != d) return false;
  return true;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && trigon::total_degree(terms_.begin()->first) == 0); }

Scalar MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

void MPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) fail(ErrorKind::InvalidInput, "exponent length does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Field MPoly::field() const {
  Field f;
  for (const auto& [e, c] : terms_)
    if (c.kind() != FieldKind::Rational) f = join(f, c.field());
  return f;
}

MPoly MPoly::in(const Field& f) const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, c.in(f));
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_) fail(ErrorKind::InvalidInput, "polynomial rings differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.nvars_ != nvars_) fail(ErrorKind::InvalidInput, "polynomial rings differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) fail(ErrorKind::InvalidInput, "polynomial rings differ");
  MPoly p(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result = constant(nvars_, Scalar(1));
  MPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    p.add_term(d, c * Scalar(e[var]));
  }
  return p;
}

Scalar MPoly::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) fail(ErrorKind::InvalidInput, "evaluation point has wrong dimension");
  Scalar sum;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
  if (images.size() != nvars_) fail(ErrorKind::InvalidInput, "compose needs one image per variable");
  const std::size_t m = images.empty() ? 0 : images.front().nvars();
  std::vector<std::vector<MPoly>> powers(nvars_);
  auto power = [&](std::size_t i, int k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(m, Scalar(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MPoly out(m);
  for (const auto& [e, c] : terms_) {
    MPoly t = constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < nvars_; ++i) images.push_back(i == var ? value : variable(nvars_, i));
  return compose(images);
}

MPoly MPoly::specialize(std::size_t var, const Scalar& value) const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    Scalar t = c;
    for (int k = 0; k < e[var]; ++k) t *= value;
    p.add_term(f, t);
  }
  return p;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
  std::vector<MPoly> out(std::max(degree_in(var) + 1, 0), MPoly(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

MPoly MPoly::homogenize(int degree) const {
  if (degree < 0) degree = total_degree();
  MPoly p(nvars_ + 1);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    const int td = trigon::total_degree(e);
    if (td > degree) fail(ErrorKind::InvalidInput, "homogenization degree below total degree");
    f.push_back(degree - td);
    p.add_term(f, c);
  }
  return p;
}

MPoly MPoly::homogeneous_part(int degree) const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_)
    if (trigon::total_degree(e) == degree) p.terms_.emplace(e, c);
  return p;
}

unsigned long MPoly::bit_height() const {
  unsigned long h = 0;
  for (const auto& [e, c] : terms_) h = std::max(h, trigon::bit_height(c.to_rational()));
  return h;
}

MPoly MPoly::primitive() const {
  if (terms_.empty()) return *this;
  if (!field().is_rational()) return *this * leading_coeff().inverse();
  mpz_class lcm_den = 1, content = 0;
  for (const auto& [e, c] : terms_) {
    const mpq_class& q = c.to_rational();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  }
  for (const auto& [e, c] : terms_) {
    mpz_class n = c.to_rational().get_num() * (lcm_den / c.to_rational().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class scale(lcm_den, content);
  if (sgn(leading_coeff().to_rational()) < 0) scale = -scale;
  return *this * Scalar(scale);
}

std::vector<std::string> default_names(std::size_t nvars) {
  static const std::vector<std::string> xyz = {"x", "y", "z", "u"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(nvars <= 4 ? xyz[i] : "x" + std::to_string(i));
  return names;
}

std::string MPoly::to_string(const std::vector<std::string>& given) const {
  if (terms_.empty()) return "0";
  const auto names = given.empty() ? default_names(nvars_) : given;
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      os << coeff;
    else if (coeff == "1")
      os << mono;
    else
      os << coeff << "*" << mono;
  }
  return os.str();
}

namespace {

bool exponent_divides(const Exponent& small, const Exponent& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

Exponent exponent_minus(const Exponent& big, const Exponent& small) {
  Exponent e = big;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= small[i];
  return e;
}

// r -= t * b where t = coeff * x^shift.
void subtract_shifted(MPoly& r, const MPoly& b, const Exponent& shift, const Scalar& coeff) {
  Exponent e(shift.size());
  for (const auto& [eb, cb] : b.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = eb[i] + shift[i];
    r.add_term(e, -(coeff * cb));
  }
}

} // namespace

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidInput, "division by zero polynomial");
  MPoly q(a.nvars()), r = a;
  const Exponent& lb = b.leading_exponent();
  const Scalar lc_inv = b.leading_coeff().inverse();
  while (!r.is_zero()) {
    const Exponent lr = r.leading_exponent();
    if (!exponent_divides(lb, lr)) return std::nullopt;
    Exponent shift = exponent_minus(lr, lb);
    Scalar c = r.leading_coeff() * lc_inv;
    q.add_term(shift, c);
    subtract_shifted(r, b, shift, c);
  }
  return q;
}

MPoly remainder(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidInput, "division by zero polynomial");
  MPoly rem(a.nvars()), r = a;
  const Exponent& lb = b.leading_exponent();
  const Scalar lc_inv = b.leading_coeff().inverse();
  while (!r.is_zero()) {
    const Exponent lr = r.leading_exponent();
    const Scalar lc = r.leading_coeff();
    if (exponent_divides(lb, lr)) {
      subtract_shifted(r, b, exponent_minus(lr, lb), lc * lc_inv);
    } else {
      rem.add_term(lr, lc);
      r.add_term(lr, -lc);
    }
  }
  return rem;
}

} // namespace trigon
