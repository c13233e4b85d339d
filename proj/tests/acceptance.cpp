// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "corpus.hpp"
#include "trigon/cli.hpp"
#include "trigon/error.hpp"
#include "trigon/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace trigon;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

struct Entry {
  std::string name;
  std::string source; // hand, projection, m1, nodal
  PlaneCurve curve;
  std::optional<Report> report;
  std::string error;
  double seconds = 0;
};

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

void print(int n, const std::string& title, Verdict& v) {
  std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << title << "): " << v.detail.str();
  for (const auto& p : v.problems) std::cout << " | " << p;
  std::cout << std::endl;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

Entry run(const std::string& name, const std::string& source, PlaneCurve c) {
  Entry e{name, source, std::move(c), std::nullopt, "", 0};
  const auto t = std::chrono::steady_clock::now();
  try {
    e.report = decide(e.curve);
  } catch (const Error& err) {
    e.error = std::string(to_string(err.kind())) + ": " + err.what();
  }
  e.seconds = seconds_since(t);
  return e;
}

std::vector<Entry> build_corpus() {
  std::vector<Entry> out;
  out.push_back(run("klein quartic", "hand", corpus::hand(corpus::klein_quartic)));
  out.push_back(run("fermat quartic", "hand", corpus::hand("x^4 + y^4 + z^4")));
  out.push_back(run("fermat quintic", "hand", corpus::hand(corpus::fermat_quintic)));
  out.push_back(run("quintic", "hand", corpus::hand("x^5 + y^5 + z^5 + 2*x^2*y^2*z - x*z^4")));
  for (int d : {4, 5, 6})
    for (std::uint64_t seed : {1u, 2u}) out.push_back(run("projection d=" + std::to_string(d), "projection", gen_trigonal_projection(d, 3, seed).curve));
  for (std::uint64_t seed : {1u, 2u, 3u}) out.push_back(run("m1 deg_x=3", "m1", gen_method1(3, 5, seed).curve));
  for (std::uint64_t seed : {3u, 4u, 5u}) out.push_back(run("two-node quintic", "nodal", corpus::two_node_quintic(seed)));
  out.push_back(run("one-node quintic", "nodal", gen_with_singularities(5, corpus::random_points(1, 2, 6), 3, 6).curve));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) out.push_back(run("five-node sextic", "nodal", corpus::nodal_sextic(seed)));
  out.push_back(run("four-node sextic", "nodal", gen_with_singularities(6, corpus::random_points(4, 2, 7), 3, 7).curve));
  out.push_back(run("three-node sextic", "nodal", gen_with_singularities(6, corpus::random_points(3, 2, 8), 3, 8).curve));
  out.push_back(run("two-node sextic", "nodal", gen_with_singularities(6, corpus::random_points(2, 2, 9), 3, 9).curve));
  out.push_back(run("triple-point sextic", "nodal", gen_with_singularities(6, corpus::random_points(1, 3, 10), 3, 10).curve));
  return out;
}

struct LieData {
  CanonicalMap cm;
  FormSpace quadrics;
  LieAlg l, s;
  Classification cls;
};

LieData lie_data(const PlaneCurve& c) {
  LieData d{adjoint_basis(c), {}, {}, {}, {}};
  d.quadrics = forms_through_image(c, d.cm, 2);
  d.l = stabilizer_algebra(d.quadrics, d.cm.genus());
  d.s = levi(d.l);
  d.cls = classify(d.l, d.s, d.cm.genus());
  return d;
}

// --- 1 ---
void dimension_laws(const std::vector<Entry>& corpus, Verdict& v) {
  int count = 0, gmin = 99, gmax = 0;
  double worst = 0;
  for (const auto& e : corpus) {
    const std::size_t g = static_cast<std::size_t>(e.curve.genus);
    if (g < 3 || g > 8) continue;
    CanonicalMap cm = adjoint_basis(e.curve);
    FormSpace q = forms_through_image(e.curve, cm, 2);
    v.require(cm.genus() == g, e.name + ": adjoint dim " + std::to_string(cm.genus()) + " != g " + std::to_string(g));
    v.require(q.dim() == (g - 2) * (g - 3) / 2, e.name + ": quadric dim " + std::to_string(q.dim()));
    v.require(e.seconds < 60, e.name + " took " + fmt(e.seconds) + " s");
    worst = std::max(worst, e.seconds);
    ++count;
    gmin = std::min(gmin, static_cast<int>(g));
    gmax = std::max(gmax, static_cast<int>(g));
  }
  v.require(count >= 20, "only " + std::to_string(count) + " curves");
  int hyper = 0;
  for (int d : {5, 6, 7}) {
    PlaneCurve c = corpus::hyperelliptic(d, static_cast<std::uint64_t>(d));
    const std::size_t g = static_cast<std::size_t>(c.genus);
    CanonicalMap cm = adjoint_basis(c);
    FormSpace q = forms_through_image(c, cm, 2);
    v.require(q.dim() == (g - 1) * (g - 2) / 2, "hyperelliptic d=" + std::to_string(d) + ": quadric dim " + std::to_string(q.dim()));
    try {
      decide(c);
      v.require(false, "hyperelliptic d=" + std::to_string(d) + " was decided");
    } catch (const Error& e) {
      v.require(e.kind() == ErrorKind::HyperellipticInput, "hyperelliptic d=" + std::to_string(d) + " raised " + std::string(to_string(e.kind())));
    }
    ++hyper;
  }
  v.detail << count << " curves of genus " << gmin << ".." << gmax << ", " << hyper << " hyperelliptic inputs, slowest decide " << fmt(worst) << " s";
}

// --- 2 ---
void trigonal_positives(Verdict& v) {
  int n = 0;
  for (int d : {5, 6, 7, 8})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      PlaneCurve c = gen_trigonal_projection(d, 3, 100 + seed).curve;
      const std::string tag = "d=" + std::to_string(d) + " seed " + std::to_string(100 + seed);
      try {
        Report r = decide(c);
        bool draws_agree = r.fiber_draws.size() == 3;
        for (int x : r.fiber_draws) draws_agree = draws_agree && x == 3;
        v.require(r.trigonal == true && r.map_available && r.verified_degree == 3 && draws_agree, tag + ": not verified at degree 3");
        v.require(r.agreement == true, tag + ": Lie verdict and Petri disagree");
      } catch (const Error& e) {
        v.require(false, tag + ": " + e.what());
      }
      ++n;
    }
  v.detail << n << " projection curves, d in {5,6,7,8}";
}

const Entry& find(const std::vector<Entry>& corpus, const std::string& name) {
  for (const auto& e : corpus)
    if (e.name == name) return e;
  throw std::runtime_error("missing corpus entry " + name);
}

// --- 3 ---
void veronese(const std::vector<Entry>& corpus, Verdict& v) {
  const Entry& e = find(corpus, "fermat quintic");
  v.require(e.report.has_value(), "fermat quintic: " + e.error);
  if (!e.report) return;
  const Report& r = *e.report;
  v.require(r.genus == 6 && r.lie_dim == 8 && r.case_kind == CaseKind::Veronese && r.trigonal == false &&
                r.petri == PetriVerdict::QuadricsInsufficient,
            "fermat quintic report differs");
  v.detail << "genus " << r.genus << ", lie_dim " << r.lie_dim.value_or(0) << ", case " << to_string(r.case_kind) << ", trigonal "
           << (r.trigonal == true ? "true" : "false");
}

// --- 4 ---
void generic_negative(const std::vector<Entry>& corpus, Verdict& v) {
  int sextics = 0, compared = 0;
  for (const auto& e : corpus) {
    if (e.name == "five-node sextic") {
      ++sextics;
      v.require(e.report.has_value(), e.name + ": " + e.error);
      if (e.report)
        v.require(e.report->genus == 5 && e.report->lie_dim == 0 && e.report->trigonal == false &&
                      e.report->petri == PetriVerdict::GeneratedByQuadrics,
                  e.name + ": report differs");
    }
    if (e.report && e.report->agreement) {
      ++compared;
      v.require(*e.report->agreement, e.name + ": Lie verdict and Petri disagree");
    }
  }
  v.require(sextics >= 5, "only " + std::to_string(sextics) + " sextics");
  v.detail << sextics << " five-node sextics; Lie/Petri agree on " << compared << " of " << compared << " compared corpus curves";
}

// --- 5 ---
void genus_four(const std::vector<Entry>& corpus, Verdict& v) {
  int curves = 0, both_rational = 0;
  for (const auto& e : corpus) {
    if (e.name != "two-node quintic") continue;
    ++curves;
    v.require(e.report.has_value(), e.name + ": " + e.error);
    if (!e.report) continue;
    const Report& r = *e.report;
    v.require(r.case_kind == CaseKind::P1xP1 || r.case_kind == CaseKind::Scroll, e.name + ": case " + std::string(to_string(r.case_kind)));
    v.require(r.map_available && r.verified_degree == 3, e.name + ": no ruling verified at degree 3");
    if (r.case_kind != CaseKind::P1xP1) continue;
    LieData d = lie_data(e.curve);
    auto rulings = p1xp1_rulings(d.cls, d.cm, e.curve);
    bool all_rational = rulings.size() == 2;
    for (const auto& p : rulings) all_rational = all_rational && p && !p->extension;
    if (!all_rational) continue;
    ++both_rational;
    for (const auto& p : rulings) v.require(map_degree(e.curve, *p).degree == 3, e.name + ": a rational ruling has degree != 3");
  }
  v.require(curves >= 1, "no two-node quintic");
  v.detail << curves << " two-node quintics verified; both rulings rational and of degree 3 on " << both_rational;
}

// Genus of x^3 = a1(u) x + a2(u) as a 3:1 cover of the u-line (Riemann-Hurwitz),
// for even d with squarefree discriminant. nullopt when that shortcut does not apply.
std::optional<int> cover_genus(const std::vector<UPoly>& a, int d) {
  if (d % 2 != 0) return std::nullopt;
  const UPoly disc = a[0] * a[0] * a[0] * Scalar(4) - a[1] * a[1] * Scalar(27);
  if (disc.degree() != 3 * d || squarefree_part(disc).degree() != disc.degree()) return std::nullopt;
  // Above u = oo the branches are x ~ +-sqrt(c) u^(d/2) and x ~ const: unramified.
  return 1 + (-6 + disc.degree()) / 2;
}

// --- 6 ---
void reference_genera(Verdict& v) {
  struct Row {
    const char* label;
    int primary, height, genus;
    bool m2;
  };
  const int n = 10;
  for (Row row : {Row{"m1 deg_x=3", 3, 5, 4, false}, Row{"m1 deg_x=6", 6, 5, 10, false}, Row{"m2 (d,e)=(4,2)", 4, 2, 4, true}}) {
    int accepted = 0, cover = 0;
    std::string rejection;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t seed = Rng(2024).split(static_cast<std::uint64_t>(i)).next();
      try {
        GeneratedCurve g = row.m2 ? gen_method2(row.primary, row.height, seed, 1) : gen_method1(row.primary, row.height, seed, 1);
        ++accepted;
        v.require(g.curve.genus == row.genus, std::string(row.label) + ": accepted curve of genus " + std::to_string(g.curve.genus));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::GenerationFailed) throw;
        rejection = e.what();
      }
      if (row.m2) {
        const auto cg = cover_genus(method2_coefficients(row.primary, row.height, Rng(seed).split(0).next()), row.primary);
        if (cg && *cg == row.genus) ++cover;
      }
    }
    v.detail << row.label << ": " << accepted << "/" << n << " accepted";
    if (accepted > 0) v.detail << ", genus " << row.genus;
    if (row.m2) {
      if (accepted == 0) v.detail << " (genus check vacuous; " << rejection << ")";
      v.detail << ", cover-model genus " << row.genus << " on " << cover << "/" << n;
    }
    if (!row.m2) v.detail << "; ";
    if (!row.m2) v.require(accepted > 0, std::string(row.label) + ": nothing accepted");
  }
}

bool killing_invariant(const LieAlg& l) {
  const Mat k = killing_form(l);
  if (k != k.transpose()) return false;
  const std::size_t n = l.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        // kappa([a,b],c) == kappa(a,[b,c])
        const Vec ab = l.bracket(l.unit(a), l.unit(b)), bc = l.bracket(l.unit(b), l.unit(c));
        Scalar lhs, rhs;
        for (std::size_t i = 0; i < n; ++i) {
          lhs += ab[i] * k(i, c);
          rhs += k(a, i) * bc[i];
        }
        if (lhs != rhs) return false;
      }
  return true;
}

// --- 7 and 8 ---
void lie_and_scroll(const std::vector<Entry>& corpus, Verdict& lie, Verdict& scroll) {
  int reached = 0, triples = 0, scrolls = 0;
  for (const auto& e : corpus) {
    if (e.curve.genus < 4) continue;
    LieData d = lie_data(e.curve);
    ++reached;
    lie.require(stabilizes(d.quadrics, Mat::identity(d.cm.genus())), e.name + ": identity does not stabilize");
    for (const auto& x : d.l.basis())
      for (const auto& y : d.l.basis()) lie.require(d.l.coords(bracket(x, y)).has_value(), e.name + ": bracket leaves the algebra");
    lie.require(killing_invariant(d.l), e.name + ": Killing form not symmetric/invariant");
    lie.require(radical(d.s).empty(), e.name + ": Levi part has a radical");
    std::vector<LieAlg> simple;
    if (d.s.dim() == 3) simple.push_back(d.s);
    if (d.s.dim() == 6) simple = d.cls.ideals;
    for (const auto& ideal : simple) {
      try {
        lie.require(triple_relations_hold(split_sl2(ideal)), e.name + ": sl2 triple relations fail");
        ++triples;
      } catch (const Error& err) {
        lie.require(err.kind() == ErrorKind::SplitFailedOverExtension, e.name + ": " + err.what());
      }
    }
    if (d.cls.kind == SurfaceCase::Scroll) {
      ++scrolls;
      const ScrollMat a = scroll_matrix(weight_chains(split_sl2(d.s), d.cm.genus()));
      scroll.require(minors_span_quadrics(a, d.quadrics), e.name + ": minors span differs from the quadrics");
    }
  }
  lie.detail << reached << " curves reached the Lie stage, " << triples << " sl2 triples checked";
  scroll.require(scrolls > 0, "no scroll case in the corpus");
  scroll.detail << scrolls << " scroll cases, minors equal the quadric space on all";
}

// --- 9 ---
Mat random_unimodular(Rng& rng) {
  Mat p = Mat::identity(3);
  for (int k = 0; k < 6; ++k) {
    const std::size_t i = rng.next() % 3, j = rng.next() % 3;
    if (i == j) continue;
    Mat e = Mat::identity(3);
    e(i, j) = Scalar(rng.uniform(-2, 2));
    p = p * e;
  }
  return p;
}

MPoly change_coordinates(const MPoly& f, const Mat& p) {
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < 3; ++i) {
    MPoly row(3);
    for (std::size_t j = 0; j < 3; ++j)
      if (!p(i, j).is_zero()) row = row + MPoly::variable(3, j) * p(i, j);
    images.push_back(row);
  }
  return f.compose(images);
}

void invariance(const std::vector<Entry>& corpus, Verdict& v) {
  const std::vector<std::string> names{"projection d=5", "fermat quintic", "five-node sextic", "two-node quintic", "m1 deg_x=3"};
  Rng rng(77);
  int checked = 0;
  for (const auto& name : names) {
    const Entry& e = find(corpus, name);
    if (!e.report) {
      v.require(false, name + ": " + e.error);
      continue;
    }
    const Report& base = *e.report;
    auto same = [&](const Report& r, const std::string& how) {
      v.require(r.genus == base.genus && r.adjoint_dim == base.adjoint_dim && r.quadric_dim == base.quadric_dim && r.lie_dim == base.lie_dim &&
                    r.levi_type == base.levi_type && r.case_kind == base.case_kind && r.trigonal == base.trigonal,
                name + " under " + how + ": report changed");
    };
    try {
      same(decide(validate_curve(e.curve.f * Scalar(mpq_class(-5, 3)))), "scaling");
      for (int t = 0; t < 5; ++t) {
        const Mat p = random_unimodular(rng);
        same(decide(validate_curve(change_coordinates(e.curve.f, p))), "a coordinate change");
        ++checked;
      }
    } catch (const Error& err) {
      v.require(false, name + ": " + err.what());
    }
  }
  v.detail << names.size() << " curves x (1 scaling + 5 unimodular changes), " << checked << " coordinate changes compared";
}

// --- 10 ---
void performance(const std::vector<Entry>& corpus, Verdict& v) {
  double worst = 0;
  for (const auto& e : corpus) worst = std::max(worst, e.seconds);
  const auto t = std::chrono::steady_clock::now();
  PlaneCurve big = gen_method1(6, 5, 3).curve;
  Report r = decide(big);
  const double g10 = seconds_since(t);
  v.require(r.genus == 10 && g10 <= 300, "genus 10 decide took " + fmt(g10) + " s");
  v.require(worst <= 300, "slowest corpus decide " + fmt(worst) + " s");

  const auto tb = std::chrono::steady_clock::now();
  const auto rows = run_bench(parse_bench_spec("method=m1 params=3 n=10 height=5\n", 1));
  const std::string csv = bench_csv(rows);
  const double bench = seconds_since(tb);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  v.require(csv.rfind(kBenchHeader, 0) == 0 && lines == 11, "bench CSV has " + std::to_string(lines) + " lines");
  v.detail << "genus-10 decide " << fmt(g10) << " s, slowest corpus decide " << fmt(worst) << " s, 10-sample bench " << fmt(bench) << " s";
}

} // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  auto guarded = [&](int n, const std::string& title, const std::function<void(Verdict&)>& fn) {
    Verdict v;
    try {
      fn(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    print(n, title, v);
    all = all && v.pass;
  };

  std::vector<Entry> corpus = build_corpus();
  guarded(1, "dimension laws", [&](Verdict& v) { dimension_laws(corpus, v); });
  guarded(2, "trigonal positives", trigonal_positives);
  guarded(3, "Veronese negative", [&](Verdict& v) { veronese(corpus, v); });
  guarded(4, "generic negative and oracle agreement", [&](Verdict& v) { generic_negative(corpus, v); });
  guarded(5, "genus-4 branch", [&](Verdict& v) { genus_four(corpus, v); });
  guarded(6, "generator genera", reference_genera);
  {
    Verdict lie, scroll;
    try {
      lie_and_scroll(corpus, lie, scroll);
    } catch (const std::exception& e) {
      lie.require(false, std::string("exception: ") + e.what());
      scroll.require(false, "not reached");
    }
    print(7, "Lie structure", lie);
    print(8, "scroll ideal equality", scroll);
    all = all && lie.pass && scroll.pass;
  }
  guarded(9, "invariance", [&](Verdict& v) { invariance(corpus, v); });
  guarded(10, "desk-scale performance", [&](Verdict& v) { performance(corpus, v); });
  std::cout << "total " << fmt(seconds_since(start)) << " s" << std::endl;
  return all ? 0 : 1;
}
