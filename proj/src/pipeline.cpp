#include "trigon/pipeline.hpp"

#include "trigon/error.hpp"
#include "trigon/resultant.hpp"
#include "trigon/rng.hpp"
#include "trigon/upoly.hpp"

#include "json.hpp"

#include <chrono>
#include <map>

namespace trigon {

namespace {

int y_degree(const BiPoly& b) {
  for (std::size_t k = b.size(); k-- > 0;)
    if (!b[k].is_zero()) return static_cast<int>(k);
  return -1;
}

bool proportional(const MPoly& p, const MPoly& q) {
  if (p.is_zero() || q.is_zero()) return true;
  if (p.total_degree() != q.total_degree()) return false;
  const int d = p.total_degree();
  return rank(Mat::from_rows({coefficient_vector(p, d), coefficient_vector(q, d)}, monomials(3, d).size())) < 2;
}

int fiber_degree(const BiPoly& curve, const BiPoly& f1, const BiPoly& f2) {
  const UPoly r1 = resultant_y(curve, f1), r2 = resultant_y(curve, f2);
  if (r1.is_zero() || r2.is_zero()) return -1;
  const UPoly base = gcd(r1, r2);
  const auto moving = divide_exact(r1, base);
  if (!moving) return -1;
  return moving->degree() <= 0 ? 0 : squarefree_part(*moving).degree();
}

} // namespace

FiberCount map_degree(const PlaneCurve& c, const PencilMap& p, std::uint64_t seed) {
  if (p.p.nvars() != 3 || p.q.nvars() != 3) fail(ErrorKind::InvalidInput, "pencil forms must be ternary");
  if (proportional(p.p, p.q)) fail(ErrorKind::DegenerateFiber, "pencil forms are proportional");
  const Rng root(seed);
  FiberCount out;
  for (std::uint64_t draw = 0; draw < 3; ++draw) {
    Rng rng = root.split(draw);
    // Fiber points are told apart by x after the shear, so a fiber equation
    // free of y (all points on one vertical line) is useless.
    for (int tries = 0;; ++tries) {
      if (tries > 200) fail(ErrorKind::DegenerateFiber, "no admissible shear for this pencil");
      const long lambda = rng.uniform(-5, 5);
      const long t1 = rng.uniform(-10000, 10000);
      long t2 = t1;
      while (t2 == t1) t2 = rng.uniform(-10000, 10000);
      if (c.f.evaluate({Scalar(lambda), Scalar(1), Scalar(0)}).is_zero()) continue;
      const std::vector<MPoly> images{MPoly::variable(3, 0) + MPoly::variable(3, 1) * Scalar(lambda), MPoly::variable(3, 1),
                                      MPoly::constant(3, Scalar(1))};
      const MPoly ph = p.p.compose(images), qh = p.q.compose(images);
      const BiPoly f1 = to_bipoly(ph - qh * Scalar(t1), 0, 1), f2 = to_bipoly(ph - qh * Scalar(t2), 0, 1);
      if (y_degree(f1) < 1 || y_degree(f2) < 1) continue;
      out.draws.push_back(fiber_degree(to_bipoly(c.f.compose(images), 0, 1), f1, f2));
      out.shears.push_back(lambda);
      break;
    }
  }
  std::map<int, int> votes;
  for (int d : out.draws) ++votes[d];
  for (const auto& [d, n] : votes)
    if (n >= 2) out.degree = d;
  if (votes.size() == out.draws.size()) fail(ErrorKind::DegenerateFiber, "fiber counts of all three draws disagree");
  out.unanimous = votes.size() == 1;
  return out;
}

PencilMap g3_map(const PlaneCurve& c, const CanonicalMap& cm, const ProjPoint& point) {
  if (cm.genus() != 3) fail(ErrorKind::InvalidInput, "line pencils are only used in genus 3");
  if (is_zero_point(point) || !on_curve(c.f, point)) fail(ErrorKind::PointNotOnCurve, "base point " + to_string(point) + " is not on the curve");
  if (multiplicity(c.f, point) != 1) fail(ErrorKind::PointNotOnCurve, "base point " + to_string(point) + " is a singular point of the plane model");
  Vec values;
  for (const auto& w : cm.omega) values.push_back(w.evaluate({point[0], point[1], point[2]}));
  const auto pencil = kernel_basis(Mat::from_rows({values}, cm.genus()));
  if (pencil.size() != 2) fail(ErrorKind::VerificationFailed, "canonical image of the base point is undefined");
  PencilMap out;
  out.p = pull_back(pencil[0], cm);
  out.q = pull_back(pencil[1], cm);
  const Field f = join(out.p.field(), out.q.field());
  if (f.kind == FieldKind::Quadratic) out.extension = f.param;
  return out;
}

std::string_view to_string(CaseKind c) {
  switch (c) {
  case CaseKind::Genus3: return "Genus3";
  case CaseKind::Scroll: return "Scroll";
  case CaseKind::P1xP1: return "P1xP1";
  case CaseKind::Veronese: return "Veronese";
  case CaseKind::CurveCutByQuadrics: return "CurveCutByQuadrics";
  case CaseKind::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

namespace {

class Stages {
public:
  explicit Stages(Report& r) : report_(r) {}

  template <class Fn>
  auto run(const std::string& name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto record = [&] {
      report_.timings.push_back({name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
    };
    try {
      if constexpr (std::is_void_v<decltype(fn())>) {
        fn();
        record();
      } else {
        auto out = fn();
        record();
        return out;
      }
    } catch (const Error& e) {
      throw e.with_stage(name);
    }
  }

private:
  Report& report_;
};

std::string levi_name(std::size_t dim) {
  switch (dim) {
  case 0: return "0";
  case 3: return "sl2";
  case 6: return "sl2+sl2";
  case 8: return "sl3";
  default: return "dim " + std::to_string(dim);
  }
}

void verify_degree_three(Report& r, const PlaneCurve& c, const PencilMap& map, std::uint64_t seed, const std::string& source) {
  const FiberCount fc = map_degree(c, map, seed);
  if (fc.degree != 3) fail(ErrorKind::VerificationFailed, source + " has fiber degree " + std::to_string(fc.degree) + ", not 3");
  r.map = map;
  r.map_available = true;
  r.map_source = source;
  r.verified_degree = 3;
  r.fiber_draws = fc.draws;
}

} // namespace

Report decide(const PlaneCurve& c, const DecideOptions& opts) {
  if (!c.validated) fail(ErrorKind::InvalidInput, "curve has not been validated");
  Report r;
  r.f = c.f.to_string();
  r.field = c.field().name();
  r.sings = c.sings;
  r.base_point = opts.base_point;
  r.seed = opts.seed;
  r.degree = c.degree;
  r.genus = c.genus;
  const std::size_t g = static_cast<std::size_t>(c.genus);
  const bool prime_field = c.field().kind == FieldKind::Prime;
  Stages stages(r);

  const CanonicalMap cm = stages.run("adjoints", [&] { return adjoint_basis(c); });
  r.adjoint_dim = cm.genus();

  const FormSpace quadrics = stages.run("quadrics", [&] {
    FormSpace q = forms_through_image(c, cm, 2);
    if (!forms_vanish_on_curve(c, cm, q)) fail(ErrorKind::VerificationFailed, "a quadric does not vanish on the canonical image");
    return q;
  });
  r.quadric_dim = quadrics.dim();

  stages.run("hyperelliptic", [&] {
    bool hyper = false;
    try {
      hyper = hyperelliptic_test(g, quadrics.dim());
    } catch (const Error& e) {
      fail(ErrorKind::CurveUnsupported, e.what());
    }
    if (hyper) fail(ErrorKind::HyperellipticInput, "the curve is hyperelliptic: " + std::to_string(quadrics.dim()) + " quadrics in genus " + std::to_string(g));
  });

  if (g == 3) {
    r.case_kind = CaseKind::Genus3;
    r.trigonal = true;
    if (opts.base_point) {
      stages.run("genus3_map", [&] {
        PencilMap map = g3_map(c, cm, *opts.base_point);
        verify_degree_three(r, c, map, opts.seed, "line pencil");
      });
    } else {
      r.notes.push_back("NoPointProvided: genus 3 is always trigonal; a base point on the curve is needed to build the map");
    }
    return r;
  }

  const FormSpace cubics = stages.run("cubics", [&] {
    FormSpace c3 = forms_through_image(c, cm, 3);
    if (c3.dim() != expected_cubic_dim(g))
      fail(ErrorKind::CurveUnsupported, "cubic space has dimension " + std::to_string(c3.dim()) + ", expected " + std::to_string(expected_cubic_dim(g)));
    return c3;
  });
  r.cubic_dim = cubics.dim();
  r.petri = stages.run("petri", [&] { return petri_test(quadrics, cubics, g); });

  const LieAlg l = stages.run("stabilizer", [&] { return stabilizer_algebra(quadrics, g); });
  r.lie_dim = l.dim();
  if (prime_field) {
    r.case_kind = CaseKind::Undetermined;
    r.notes.push_back("prime field: Levi decomposition needs characteristic zero, only the Lie algebra dimension is reported");
    return r;
  }

  const LieAlg s = stages.run("levi", [&] {
    r.radical_dim = radical(l).size();
    return levi(l);
  });
  r.levi_dim = s.dim();
  r.levi_type = levi_name(s.dim());

  const Classification cls = stages.run("classify", [&] {
    Classification out = classify(l, s, g);
    if (out.kind == SurfaceCase::Unexpected)
      fail(ErrorKind::CurveUnsupported, "Lie algebra of dimension " + std::to_string(l.dim()) + " with Levi part " + levi_name(s.dim()) + " fits no case");
    return out;
  });

  switch (cls.kind) {
  case SurfaceCase::CurveCutByQuadrics:
    r.case_kind = CaseKind::CurveCutByQuadrics;
    r.trigonal = false;
    break;
  case SurfaceCase::Veronese:
    r.case_kind = CaseKind::Veronese;
    r.trigonal = false;
    r.notes.push_back("plane quintic: not trigonal");
    break;
  case SurfaceCase::Scroll:
    r.case_kind = CaseKind::Scroll;
    r.trigonal = true;
    stages.run("scroll", [&] {
      Sl2Triple t;
      try {
        t = split_sl2(s);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SplitFailedOverExtension) throw;
        r.notes.push_back(std::string("no map: ") + e.what());
        return;
      }
      if (t.extension) r.notes.push_back("sl2 split over Q(sqrt(" + std::to_string(*t.extension) + "))");
      const ScrollMat a = scroll_matrix(weight_chains(t, g));
      if (!minors_span_quadrics(a, quadrics)) fail(ErrorKind::VerificationFailed, "2x2 minors of the scroll matrix do not span the quadrics");
      const PencilMap map = ruling_map(a, cm, c);
      verify_degree_three(r, c, map, opts.seed, "scroll column " + std::to_string(map.column));
    });
    break;
  case SurfaceCase::P1xP1:
    r.case_kind = CaseKind::P1xP1;
    r.trigonal = true;
    stages.run("rulings", [&] {
      if (cls.extension) r.notes.push_back("rulings defined over Q(sqrt(" + std::to_string(*cls.extension) + "))");
      const auto rulings = p1xp1_rulings(cls, cm, c);
      std::optional<std::size_t> chosen;
      for (std::size_t i = 0; i < rulings.size(); ++i) {
        if (!rulings[i]) {
          r.ruling_degrees.push_back(std::nullopt);
          continue;
        }
        const FiberCount fc = map_degree(c, *rulings[i], opts.seed);
        r.ruling_degrees.push_back(fc.degree);
        if (fc.degree == 3 && !chosen) chosen = i;
      }
      if (chosen) {
        verify_degree_three(r, c, *rulings[*chosen], opts.seed, "ruling " + std::to_string(*chosen));
      } else if (std::any_of(rulings.begin(), rulings.end(), [](const auto& x) { return x.has_value(); })) {
        fail(ErrorKind::VerificationFailed, "no ruling of the quadric surface has fiber degree 3");
      } else {
        r.notes.push_back("no map: neither ruling splits over the available fields");
      }
    });
    break;
  case SurfaceCase::Unexpected:
    break;
  }

  const bool lie_says_special = r.case_kind == CaseKind::Scroll || r.case_kind == CaseKind::P1xP1 || r.case_kind == CaseKind::Veronese;
  r.agreement = (*r.petri == PetriVerdict::QuadricsInsufficient) == lie_says_special;
  return r;
}

std::string report_json(const Report& r, bool include_timings) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json input;
  input["f"] = r.f;
  input["field"] = r.field;
  ordered_json sings = ordered_json::array();
  for (const auto& s : r.sings) sings.push_back({{"point", to_string(s.coords)}, {"multiplicity", s.multiplicity}});
  input["singular_points"] = sings;
  input["base_point"] = r.base_point ? ordered_json(to_string(*r.base_point)) : ordered_json(nullptr);
  j["input"] = input;
  j["seed"] = r.seed;
  j["degree"] = r.degree;
  j["genus"] = r.genus;
  j["adjoint_dim"] = r.adjoint_dim;
  j["quadric_dim"] = r.quadric_dim;
  auto opt = [](const auto& o) { return o ? ordered_json(*o) : ordered_json(nullptr); };
  j["cubic_dim"] = opt(r.cubic_dim);
  j["lie_dim"] = opt(r.lie_dim);
  j["radical_dim"] = opt(r.radical_dim);
  j["levi_dim"] = opt(r.levi_dim);
  j["levi_type"] = r.levi_type.empty() ? ordered_json(nullptr) : ordered_json(r.levi_type);
  j["case"] = std::string(to_string(r.case_kind));
  j["trigonal"] = opt(r.trigonal);
  j["map_available"] = r.map_available;
  if (r.map) {
    ordered_json m;
    m["P"] = r.map->p.to_string();
    m["Q"] = r.map->q.to_string();
    m["field"] = r.map->extension ? "Q(sqrt(" + std::to_string(*r.map->extension) + "))" : std::string("rational");
    m["source"] = r.map_source;
    j["map"] = m;
  } else {
    j["map"] = nullptr;
  }
  j["verified_degree"] = opt(r.verified_degree);
  j["fiber_draws"] = r.fiber_draws;
  ordered_json rulings = ordered_json::array();
  for (const auto& d : r.ruling_degrees) rulings.push_back(opt(d));
  j["ruling_degrees"] = rulings;
  j["petri"] = r.petri ? ordered_json(std::string(to_string(*r.petri))) : ordered_json(nullptr);
  j["agreement"] = opt(r.agreement);
  j["notes"] = r.notes;
  if (include_timings) {
    ordered_json t;
    for (const auto& s : r.timings) t[s.stage] = s.seconds;
    j["timings"] = t;
  }
  return j.dump(2);
}

} // namespace trigon
