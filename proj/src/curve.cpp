#include "trigon/curve.hpp"

#include "trigon/error.hpp"
#include "trigon/parse.hpp"
#include "trigon/resultant.hpp"
#include "trigon/rng.hpp"
#include "trigon/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace trigon {

namespace {

struct FrameResult {
  std::vector<ProjPoint> points;
  int residual = 0;
};

// x -> x + lambda*y
MPoly shear(const MPoly& f, const Scalar& lambda) {
  return f.compose({MPoly::variable(3, 0) + MPoly::variable(3, 1) * lambda, MPoly::variable(3, 1), MPoly::variable(3, 2)});
}

ProjPoint unshear(const ProjPoint& p, const Scalar& lambda) { return {p[0] + lambda * p[1], p[1], p[2]}; }

// Shear parameters 0, 1, -1, 2, -2, ... making the point (0:1:0) lie off f.
std::vector<Scalar> shear_parameters(const MPoly& f, std::size_t count) {
  std::vector<Scalar> out;
  const Field field = f.field();
  for (long k = 0; out.size() < count; ++k) {
    if (k > 200) fail(ErrorKind::ReducibleSuspected, "no shear moves (0:1:0) off the curve");
    long lambda = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    Scalar l = Scalar(lambda).in(field);
    if (!f.evaluate({l, Scalar(1), Scalar(0)}).is_zero()) out.push_back(l);
  }
  return out;
}

bool all_partials_vanish(const MPoly& g, const ProjPoint& p) {
  const std::vector<Scalar> v{p[0], p[1], p[2]};
  if (!g.evaluate(v).is_zero()) return false;
  for (std::size_t i = 0; i < 3; ++i)
    if (!g.derivative(i).evaluate(v).is_zero()) return false;
  return true;
}

UPoly univariate_gcd(const std::vector<UPoly>& polys) {
  UPoly g;
  for (const auto& p : polys) g = gcd(g, p);
  return g;
}

// Singular points of g in the chart z = 1, assuming g is monic in y.
FrameResult affine_part(const MPoly& g) {
  const MPoly a = g.specialize(2, Scalar(1));
  const MPoly ax = a.derivative(0), ay = a.derivative(1);
  if (ax.is_zero() || ay.is_zero()) fail(ErrorKind::ReducibleSuspected, "a partial derivative vanishes identically");
  const BiPoly ab = to_bipoly(a, 0, 1);
  const UPoly r1 = resultant_y(ab, to_bipoly(ax, 0, 1));
  const UPoly r2 = resultant_y(ab, to_bipoly(ay, 0, 1));
  if (r1.is_zero() || r2.is_zero())
    fail(ErrorKind::ReducibleSuspected, "curve shares a factor with a partial derivative (resultant vanishes identically)");

  FrameResult out;
  const UPoly common = gcd(r1, r2);
  if (common.degree() <= 0) return out;
  const UPoly sq = squarefree_part(common);
  const auto xs = distinct_field_roots(sq);
  out.residual = sq.degree() - static_cast<int>(xs.size());
  for (const auto& x0 : xs) {
    const UPoly h = univariate_gcd({to_upoly(a.specialize(0, x0), 1), to_upoly(ax.specialize(0, x0), 1),
                                    to_upoly(ay.specialize(0, x0), 1)});
    if (h.degree() <= 0) continue;
    for (const auto& y0 : distinct_field_roots(h)) {
      ProjPoint p{x0, y0, Scalar(1).in(g.field())};
      if (all_partials_vanish(g, p)) out.points.push_back(p);
    }
  }
  return out;
}

// Singular points of g on z = 0; (0:1:0) is off the curve by the shear.
FrameResult infinity_part(const MPoly& g) {
  const Field field = g.field();
  std::vector<UPoly> parts;
  auto on_line = [](const MPoly& p) { return to_upoly(p.specialize(2, Scalar(0)).specialize(1, Scalar(1)), 0); };
  parts.push_back(on_line(g));
  for (std::size_t i = 0; i < 3; ++i) parts.push_back(on_line(g.derivative(i)));
  const UPoly h = univariate_gcd(parts);
  if (h.is_zero()) fail(ErrorKind::ReducibleSuspected, "the line z = 0 is a multiple component");
  FrameResult out;
  const ProjPoint corner{Scalar(1).in(field), Scalar(0).in(field), Scalar(0).in(field)};
  if (all_partials_vanish(g, corner)) out.points.push_back(corner);
  if (h.degree() <= 0) return out;
  const UPoly sq = squarefree_part(h);
  const auto xs = distinct_field_roots(sq);
  out.residual = sq.degree() - static_cast<int>(xs.size());
  for (const auto& x0 : xs) out.points.push_back({x0, Scalar(1).in(field), Scalar(0).in(field)});
  return out;
}

FrameResult analyse_frame(const MPoly& f, const Scalar& lambda, bool include_affine) {
  const MPoly g = shear(f, lambda);
  FrameResult inf = infinity_part(g);
  if (include_affine) {
    FrameResult aff = affine_part(g);
    inf.points.insert(inf.points.end(), aff.points.begin(), aff.points.end());
    inf.residual += aff.residual;
  }
  for (auto& p : inf.points) p = unshear(p, lambda);
  return inf;
}

void check_ternary_form(const MPoly& f) {
  if (f.nvars() != 3) fail(ErrorKind::InvalidInput, "curve equation must be in x, y, z");
  if (f.is_zero()) fail(ErrorKind::InvalidInput, "curve equation is zero");
  if (!f.is_homogeneous()) fail(ErrorKind::InvalidInput, "curve equation is not homogeneous");
}

SingularLocus finish(const MPoly& f, FrameResult frame) {
  SingularLocus loc;
  loc.residual_degree = frame.residual;
  for (const auto& p : frame.points) {
    ProjPoint q = normalized(p);
    loc.points.push_back({q, multiplicity(f, q)});
  }
  return loc;
}

SingularLocus locus(const MPoly& f, bool include_affine) {
  check_ternary_form(f);
  const auto lambdas = shear_parameters(f, 2);
  FrameResult first = analyse_frame(f, lambdas[0], include_affine);
  if (first.residual > 0) {
    // Spurious common roots of the two resultants disappear under a second
    // shear; genuine non-rational singular points do not.
    FrameResult second = analyse_frame(f, lambdas[1], include_affine);
    first.residual = std::min(first.residual, second.residual);
  }
  return finish(f, std::move(first));
}

bool is_ordinary(const MPoly& f, const SingularPoint& s) {
  const std::size_t chart = default_chart(s.coords);
  auto pieces = local_expansion(f, s.coords, s.multiplicity, chart);
  return has_distinct_factors(pieces[s.multiplicity], chart);
}

void check_ordinary(const MPoly& f, const SingularPoint& s) {
  if (!is_ordinary(f, s))
    fail(ErrorKind::NonOrdinarySingularity, "singular point " + to_string(s.coords) + " of multiplicity " +
                                                std::to_string(s.multiplicity) + " is not ordinary");
}

// A curve without repeated components meets a general line in d distinct
// points; a handful of lines is enough to certify that cheaply.
bool some_line_meets_transversally(const MPoly& f) {
  const int d = f.total_degree();
  const Field field = f.field();
  const MPoly t = MPoly::variable(3, 0);
  const long params[][3] = {{2, 3, 5}, {-3, 7, 2}, {5, -2, -7}, {11, 13, -3}, {-7, 17, 19}, {23, -5, 29}};
  for (const auto& q : params) {
    const Scalar a = Scalar(q[0]).in(field), b = Scalar(q[1]).in(field), c = Scalar(q[2]).in(field);
    if (f.evaluate({Scalar(1), b, Scalar(0)}).is_zero()) continue;
    const MPoly one = MPoly::constant(3, Scalar(1).in(field));
    const MPoly r = f.compose({t + one * a, t * b + one * c, one});
    const UPoly u = to_upoly(r, 0);
    if (u.degree() == d && gcd(u, u.derivative()).degree() == 0) return true;
  }
  return false;
}

long height_bound(int coeff_height) {
  if (coeff_height < 1 || coeff_height > 62) fail(ErrorKind::InvalidInput, "coefficient height must be in [1, 62]");
  return (1L << coeff_height) - 1;
}

} // namespace

SingularLocus singular_locus(const MPoly& f) { return locus(f, true); }

SingularLocus singular_locus_at_infinity(const MPoly& f) { return locus(f, false); }

int genus(int d, const std::vector<int>& multiplicities) {
  int g = (d - 1) * (d - 2) / 2;
  for (int m : multiplicities) g -= m * (m - 1) / 2;
  if (g < 0) fail(ErrorKind::InvalidInput, "genus formula gives " + std::to_string(g) + ": inconsistent singular data");
  return g;
}

PlaneCurve validate_curve(const MPoly& f, const std::optional<std::vector<SingularPoint>>& declared) {
  check_ternary_form(f);
  const int d = f.total_degree();
  if (d < 3) fail(ErrorKind::InvalidInput, "curve degree must be at least 3");

  // Repeated components would otherwise surface as non-ordinary points.
  if (!some_line_meets_transversally(f)) (void)singular_locus(f);

  // Points at infinity first: cheap, and where generated candidates
  // usually fail.
  const SingularLocus inf = singular_locus_at_infinity(f);
  if (inf.residual_degree > 0)
    fail(ErrorKind::IrrationalSingularLocus, std::to_string(inf.residual_degree) + " singular point(s) at infinity are not defined over the ground field");
  for (const auto& s : inf.points) check_ordinary(f, s);

  const SingularLocus loc = singular_locus(f);
  if (loc.residual_degree > 0)
    fail(ErrorKind::IrrationalSingularLocus, std::to_string(loc.residual_degree) + " singular point(s) are not defined over the ground field");

  PlaneCurve c;
  c.f = f;
  c.degree = d;
  if (declared) {
    for (const auto& s : *declared) {
      if (is_zero_point(s.coords)) fail(ErrorKind::InvalidInput, "declared singular point (0:0:0)");
      if (!on_curve(f, s.coords)) fail(ErrorKind::InvalidInput, "declared singular point " + to_string(s.coords) + " is not on the curve");
      const int m = multiplicity(f, s.coords);
      if (m != s.multiplicity)
        fail(ErrorKind::InvalidInput, "declared multiplicity " + std::to_string(s.multiplicity) + " at " + to_string(s.coords) +
                                          " but the curve has multiplicity " + std::to_string(m));
      if (m < 2) fail(ErrorKind::InvalidInput, "declared singular point " + to_string(s.coords) + " is smooth");
    }
    for (const auto& s : loc.points) {
      bool listed = std::any_of(declared->begin(), declared->end(), [&](const SingularPoint& t) { return same_point(s.coords, t.coords); });
      if (!listed) fail(ErrorKind::InvalidInput, "singular point " + to_string(s.coords) + " is missing from the declared list");
    }
    c.sings = *declared;
  } else {
    c.sings = loc.points;
  }

  std::vector<int> mults;
  for (const auto& s : c.sings) {
    check_ordinary(f, s);
    mults.push_back(s.multiplicity);
  }
  c.genus = genus(d, mults);
  if (c.genus < 3) fail(ErrorKind::GenusTooSmall, "genus " + std::to_string(c.genus) + " < 3");
  c.validated = true;
  return c;
}

GeneratedCurve gen_trigonal_projection(int d, int coeff_height, std::uint64_t seed, int budget) {
  if (d < 4) fail(ErrorKind::InvalidInput, "projection generator needs d >= 4");
  const long bound = height_bound(coeff_height);
  const ProjPoint centre{Scalar(0), Scalar(0), Scalar(1)};
  const Rng root(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    Rng rng = root.split(static_cast<std::uint64_t>(attempt));
    MPoly f(3);
    for (const auto& e : monomials(3, d))
      if (e[0] + e[1] >= d - 3) f.add_term(e, Scalar(rng.uniform(-bound, bound)));
    try {
      PlaneCurve c = validate_curve(f);
      const bool only_centre = d == 4 ? c.sings.empty()
                                      : c.sings.size() == 1 && same_point(c.sings[0].coords, centre) && c.sings[0].multiplicity == d - 3;
      if (!only_centre || c.genus != 2 * d - 5) continue;
      return {std::move(c), "projection", seed, attempt + 1, centre};
    } catch (const Error& e) {
      if (!is_input_error(e.kind())) throw;
    }
  }
  fail(ErrorKind::GenerationFailed, "projection generator exhausted its budget of " + std::to_string(budget));
}

GeneratedCurve gen_with_singularities(int d, const std::vector<SingularPoint>& points, int coeff_height, std::uint64_t seed, int budget) {
  if (d < 3) fail(ErrorKind::InvalidInput, "degree must be at least 3");
  const long bound = height_bound(coeff_height);
  Field field = Field::rationals();
  for (const auto& p : points)
    for (const auto& x : p.coords) field = join(field, x.field());
  const auto monos = monomials(3, d);
  std::vector<Vec> rows;
  for (const auto& p : points) {
    if (p.multiplicity < 1) fail(ErrorKind::InvalidInput, "multiplicity must be positive");
    auto local = vanishing_conditions(monos, p.coords, p.multiplicity - 1, field);
    rows.insert(rows.end(), local.begin(), local.end());
  }
  const auto basis = rows.empty() ? std::vector<Vec>{} : kernel_basis(Mat::from_rows(rows, monos.size()));
  if (!rows.empty() && basis.empty()) fail(ErrorKind::GenerationFailed, "no form of degree " + std::to_string(d) + " has the prescribed singularities");

  const Rng root(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    Rng rng = root.split(static_cast<std::uint64_t>(attempt));
    MPoly f(3);
    if (rows.empty()) {
      for (const auto& e : monos) f.add_term(e, Scalar(rng.uniform(-bound, bound)).in(field));
    } else {
      Vec v(monos.size(), Scalar(0).in(field));
      for (const auto& b : basis) v = add(v, scaled(b, Scalar(rng.uniform(-bound, bound))));
      for (std::size_t j = 0; j < monos.size(); ++j)
        if (!v[j].is_zero()) f.add_term(monos[j], v[j]);
    }
    if (f.is_zero()) continue;
    f = f.primitive();
    try {
      PlaneCurve c = validate_curve(f);
      if (c.sings.size() != points.size()) continue;
      bool match = std::all_of(points.begin(), points.end(), [&](const SingularPoint& p) {
        return std::any_of(c.sings.begin(), c.sings.end(), [&](const SingularPoint& s) {
          return same_point(s.coords, p.coords) && s.multiplicity == p.multiplicity;
        });
      });
      if (!match) continue;
      return {std::move(c), "prescribed", seed, attempt + 1, std::nullopt};
    } catch (const Error& e) {
      if (!is_input_error(e.kind())) throw;
    }
  }
  fail(ErrorKind::GenerationFailed, "prescribed-singularity generator exhausted its budget of " + std::to_string(budget));
}

MPoly sample_method1(int deg_x, int coeff_height, std::uint64_t seed) {
  if (deg_x < 2) fail(ErrorKind::InvalidInput, "method 1 needs deg_x >= 2");
  const long bound = height_bound(coeff_height);
  Rng rng(seed);
  const int total = deg_x + 3;
  MPoly f(3);
  for (int j = 0; j <= 3; ++j)
    for (int i = 0; i <= deg_x; ++i) {
      long c = rng.uniform(-bound, bound);
      while (i == deg_x && j == 3 && c == 0) c = rng.uniform(-bound, bound);
      f.add_term({i, j, total - i - j}, Scalar(c));
    }
  return f;
}

std::vector<UPoly> method2_coefficients(int d, int coeff_height, std::uint64_t seed) {
  if (d < 1) fail(ErrorKind::InvalidInput, "method 2 needs d >= 1");
  const long bound = height_bound(coeff_height);
  Rng rng(seed);
  std::vector<UPoly> a;
  for (int k = 0; k < 5; ++k) {
    std::vector<Scalar> c;
    for (int i = 0; i <= d; ++i) {
      long v = rng.uniform(-bound, bound);
      while (i == d && v == 0) v = rng.uniform(-bound, bound);
      c.emplace_back(v);
    }
    a.emplace_back(std::move(c));
  }
  return a;
}

MPoly sample_method2(int d, int coeff_height, std::uint64_t seed) {
  // Ring (x, y, z, u); z stays unused until homogenization.
  std::vector<MPoly> a;
  for (const auto& c : method2_coefficients(d, coeff_height, seed)) a.push_back(from_upoly(c, 4, 3));
  const MPoly x = MPoly::variable(4, 0), y = MPoly::variable(4, 1);
  const MPoly big_f = x.pow(3) - a[0] * x - a[1];
  const MPoly big_g = y - a[2] - a[3] * x - a[4] * x.pow(2);
  const MPoly r = resultant(big_f, big_g, 3);
  if (r.is_zero()) fail(ErrorKind::DegenerateResultant, "resultant vanishes identically");
  MPoly affine(2);
  for (const auto& [e, c] : r.terms()) affine.add_term({e[0], e[1]}, c);
  return affine.homogenize().primitive();
}

namespace {

GeneratedCurve gated(const std::string& method, std::uint64_t seed, int budget, auto&& sample) {
  const Rng root(seed);
  std::string last;
  for (int attempt = 0; attempt < budget; ++attempt) {
    const std::uint64_t s = root.split(static_cast<std::uint64_t>(attempt)).next();
    try {
      PlaneCurve c = validate_curve(sample(s));
      return {std::move(c), method, seed, attempt + 1, std::nullopt};
    } catch (const Error& e) {
      if (!is_input_error(e.kind())) throw;
      last = std::string(to_string(e.kind()));
    }
  }
  fail(ErrorKind::GenerationFailed, method + " generator exhausted its budget of " + std::to_string(budget) + " (last rejection: " + last + ")");
}

} // namespace

GeneratedCurve gen_method1(int deg_x, int coeff_height, std::uint64_t seed, int budget) {
  if (deg_x < 2) fail(ErrorKind::InvalidInput, "method 1 needs deg_x >= 2");
  return gated("m1", seed, budget, [&](std::uint64_t s) { return sample_method1(deg_x, coeff_height, s); });
}

GeneratedCurve gen_method2(int d, int coeff_height, std::uint64_t seed, int budget) {
  if (d < 1) fail(ErrorKind::InvalidInput, "method 2 needs d >= 1");
  return gated("m2", seed, budget, [&](std::uint64_t s) { return sample_method2(d, coeff_height, s); });
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

} // namespace

ProjPoint parse_point(const std::string& text, const Field& field) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') fail(ErrorKind::ParseError, "point must look like (a:b:c)");
  t = t.substr(1, t.size() - 2);
  std::vector<std::string> parts;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) fail(ErrorKind::ParseError, "point must have three coordinates");
  ProjPoint p{parse_scalar(parts[0], field), parse_scalar(parts[1], field), parse_scalar(parts[2], field)};
  if (is_zero_point(p)) fail(ErrorKind::ParseError, "(0:0:0) is not a projective point");
  return p;
}

CurveFile parse_curve_file(const std::string& text) {
  struct Line {
    int number;
    std::string key, value;
  };
  std::vector<Line> lines;
  CurveFile out;
  std::stringstream ss(text);
  std::string raw;
  for (int number = 1; std::getline(ss, raw); ++number) {
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      out.comments.push_back(trim(line.substr(1)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::ParseError, "line " + std::to_string(number) + ": expected key = value");
    lines.push_back({number, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
  }

  auto located = [](int number, const Error& e) {
    return Error(ErrorKind::ParseError, "line " + std::to_string(number) + ": " + e.what());
  };

  for (const auto& l : lines) {
    if (l.key != "field") continue;
    std::stringstream fs(l.value);
    std::string kind;
    fs >> kind;
    if (kind == "Q") {
      out.field = Field::rationals();
    } else if (kind == "Fp") {
      long p = 0;
      if (!(fs >> p)) fail(ErrorKind::ParseError, "line " + std::to_string(l.number) + ": expected 'Fp <p>'");
      try {
        out.field = Field::prime(p);
      } catch (const Error& e) {
        throw located(l.number, e);
      }
    } else {
      fail(ErrorKind::ParseError, "line " + std::to_string(l.number) + ": unknown field '" + l.value + "'");
    }
  }

  bool have_f = false;
  for (const auto& l : lines) {
    try {
      if (l.key == "f") {
        out.f = parse_poly(l.value, {"x", "y", "z"}, out.field);
        have_f = true;
      } else if (l.key == "sing") {
        const auto close = l.value.find(')');
        if (close == std::string::npos) fail(ErrorKind::ParseError, "expected '(a:b:c) mult m'");
        ProjPoint p = parse_point(l.value.substr(0, close + 1), out.field);
        std::stringstream rest(l.value.substr(close + 1));
        std::string word;
        int m = 0;
        if (!(rest >> word >> m) || word != "mult" || m < 1) fail(ErrorKind::ParseError, "expected '(a:b:c) mult m'");
        if (!out.sings) out.sings.emplace();
        out.sings->push_back({p, m});
      } else if (l.key == "point") {
        out.point = parse_point(l.value, out.field);
      } else if (l.key != "field") {
        fail(ErrorKind::ParseError, "unknown key '" + l.key + "'");
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ParseError && e.kind() != ErrorKind::InvalidInput) throw;
      throw located(l.number, e);
    }
  }
  if (!have_f) fail(ErrorKind::ParseError, "missing 'f = <poly>' line");
  return out;
}

std::string write_curve_file(const CurveFile& file) {
  std::ostringstream os;
  for (const auto& c : file.comments) os << "# " << c << "\n";
  os << "field = " << (file.field.kind == FieldKind::Prime ? "Fp " + std::to_string(file.field.param) : std::string("Q")) << "\n";
  os << "f = " << file.f.to_string() << "\n";
  if (file.sings)
    for (const auto& s : *file.sings) os << "sing = " << to_string(s.coords) << " mult " << s.multiplicity << "\n";
  if (file.point) os << "point = " << to_string(*file.point) << "\n";
  return os.str();
}

} // namespace trigon
