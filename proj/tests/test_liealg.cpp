#include "doctest.h"

#include "corpus.hpp"
#include "trigon/error.hpp"
#include "trigon/liealg.hpp"

#include <random>

using namespace trigon;

namespace {

Mat M(std::size_t n, std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.emplace_back(x);
  return Mat(n, n, std::move(v));
}

Mat unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = Scalar(1);
  return m;
}

LieAlg standard_sl2() { return LieAlg({M(2, {0, 1, 0, 0}), M(2, {1, 0, 0, -1}), M(2, {0, 0, 1, 0})}, 2); }

// sl2 acting on the first two coordinates of 3-space plus translations.
LieAlg affine_sl2() {
  return LieAlg({M(3, {0, 1, 0, 0, 0, 0, 0, 0, 0}), M(3, {1, 0, 0, 0, -1, 0, 0, 0, 0}), M(3, {0, 0, 0, 1, 0, 0, 0, 0, 0}), unit(3, 0, 2),
                 unit(3, 1, 2)},
                3);
}

Mat conjugate(const Mat& x, const Mat& p) { return p * x * *inverse(p); }

Mat random_unimodular(std::size_t n, std::mt19937_64& rng) {
  Mat p = Mat::identity(n);
  for (int k = 0; k < 6; ++k) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    Mat e = Mat::identity(n);
    e(i, j) = Scalar(static_cast<long>(rng() % 5) - 2);
    p = p * e;
  }
  return p;
}

void check_structure(const LieAlg& l) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) CHECK(l.coords(bracket(l.basis()[i], l.basis()[j])).has_value());
  for (const auto& b : l.basis()) CHECK(b.trace().is_zero());
  const Mat k = killing_form(l);
  CHECK(k == k.transpose());
  std::mt19937_64 rng(1);
  for (int t = 0; t < 4 && l.dim() > 0; ++t) {
    Vec x = l.unit(rng() % l.dim()), y = l.unit(rng() % l.dim()), z = l.unit(rng() % l.dim());
    x = add(x, scaled(l.unit(rng() % l.dim()), Scalar(2)));
    Vec xy = l.bracket(x, y), yz = l.bracket(y, z);
    Scalar lhs = 0, rhs = 0;
    for (std::size_t i = 0; i < l.dim(); ++i) {
      lhs += xy[i] * (k * z)[i];
      rhs += x[i] * (k * yz)[i];
    }
    CHECK(lhs == rhs);
  }
}

FormSpace quadric_space(const char* text, std::size_t g) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g; ++i) names.push_back("x" + std::to_string(i));
  FormSpace q;
  q.ambient_dim = g;
  q.degree = 2;
  q.basis = {coefficient_vector(parse_poly(text, names), 2)};
  return q;
}

struct Chain {
  PlaneCurve curve;
  FormSpace quadrics;
  LieAlg l, s;
  Classification cls;
};

Chain run(const PlaneCurve& c) {
  Chain out{c, {}, {}, {}, {}};
  CanonicalMap cm = adjoint_basis(c);
  out.quadrics = forms_through_image(c, cm, 2);
  out.l = stabilizer_algebra(out.quadrics, cm.genus());
  out.s = levi(out.l);
  out.cls = classify(out.l, out.s, cm.genus());
  return out;
}

} // namespace

TEST_CASE("Killing form examples") {
  Mat k = killing_form(standard_sl2());
  CHECK(k(1, 1) == Scalar(8));
  CHECK(k(0, 2) == Scalar(4));
  CHECK(k(0, 1) == Scalar(0));
  CHECK(k(0, 0) == Scalar(0));
  CHECK(killing_form(LieAlg({M(3, {1, 0, 0, 0, -1, 0, 0, 0, 0}), M(3, {0, 0, 0, 0, 1, 0, 0, 0, -1})}, 3)).is_zero());

  // Two commuting sl2 blocks in gl4.
  std::vector<Mat> blocks;
  const LieAlg sl2 = standard_sl2();
  for (std::size_t off : {0u, 2u}) {
    for (const auto& b : sl2.basis()) {
      Mat m(4, 4);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(off + i, off + j) = b(i, j);
      blocks.push_back(m);
    }
  }
  LieAlg two(blocks, 4);
  Mat k2 = killing_form(two);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j) CHECK(k2(i, j).is_zero());
  std::optional<long> ext;
  auto ideals = split_ideals(two, ext);
  CHECK(ideals.size() == 2);
  CHECK(!ext);
}

TEST_CASE("radical and Levi") {
  CHECK(radical(standard_sl2()).empty());
  CHECK(levi(standard_sl2()).dim() == 3);
  LieAlg ab({M(3, {1, 0, 0, 0, -1, 0, 0, 0, 0}), M(3, {0, 0, 0, 0, 1, 0, 0, 0, -1})}, 3);
  CHECK(radical(ab).size() == 2);
  CHECK(levi(ab).dim() == 0);

  LieAlg aff = affine_sl2();
  auto rad = radical(aff);
  REQUIRE(rad.size() == 2);
  for (const auto& r : rad) {
    Mat m = aff.element(r);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(m(i, j).is_zero());
  }
  // Shift the complement so lifting has work to do.
  std::mt19937_64 rng(4);
  Mat p = random_unimodular(3, rng);
  std::vector<Mat> conj;
  for (const auto& b : aff.basis()) conj.push_back(conjugate(b, p));
  conj[0] = conj[0] + conj[3] * Scalar(3);
  conj[1] = conj[1] - conj[4];
  LieAlg twisted(conj, 3);
  LieAlg s = levi(twisted);
  CHECK(s.dim() == 3);
  CHECK(radical(s).empty());
  std::vector<Vec> all;
  for (const auto& b : s.basis()) all.push_back(*twisted.coords(b));
  for (const auto& r : radical(twisted)) all.push_back(r);
  CHECK(span_basis(all, 5).size() == 5);
  Sl2Triple t = split_sl2(s);
  CHECK(triple_relations_hold(t));
}

TEST_CASE("split_sl2 on presentations of sl2") {
  Sl2Triple t = split_sl2(standard_sl2());
  CHECK(triple_relations_hold(t));
  CHECK(!t.extension);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Mat> b;
    const LieAlg sl2 = standard_sl2();
    for (int i = 0; i < 3; ++i) {
      Mat m(2, 2);
      for (const auto& s : sl2.basis()) m = m + s * Scalar(static_cast<long>(rng() % 7) - 3);
      b.push_back(m);
    }
    if (rank(Mat::from_rows({b[0].entries(), b[1].entries(), b[2].entries()}, 4)) < 3) continue;
    Sl2Triple u = split_sl2(LieAlg(b, 2));
    CHECK(triple_relations_hold(u));
  }

  // so(3): no rational nilpotent, split only over an extension.
  LieAlg so3({M(3, {0, 1, 0, -1, 0, 0, 0, 0, 0}), M(3, {0, 0, 1, 0, 0, 0, -1, 0, 0}), M(3, {0, 0, 0, 0, 0, 1, 0, -1, 0})}, 3);
  Sl2Triple w = split_sl2(so3);
  CHECK(w.extension.has_value());
  CHECK(triple_relations_hold(w));

  CHECK_THROWS_AS(split_sl2(affine_sl2()), Error);
}

TEST_CASE("stabilizer of a conic is sl2") {
  FormSpace q = quadric_space("x0*x2 - x1^2", 3);
  CHECK(stabilizes(q, Mat::identity(3)));
  LieAlg l = stabilizer_algebra(q, 3);
  CHECK(l.dim() == 3);
  check_structure(l);
  CHECK(radical(l).empty());
  CHECK(triple_relations_hold(split_sl2(l)));
}

TEST_CASE("corpus: Veronese, generic and trigonal cases") {
  Chain v = run(corpus::hand(corpus::fermat_quintic));
  CHECK(v.l.dim() == 8);
  CHECK(v.s.dim() == 8);
  CHECK(v.cls.kind == SurfaceCase::Veronese);
  check_structure(v.l);

  Chain n = run(corpus::nodal_sextic(1));
  CHECK(n.l.dim() == 0);
  CHECK(n.cls.kind == SurfaceCase::CurveCutByQuadrics);

  for (int d : {5, 6}) {
    Chain t = run(gen_trigonal_projection(d, 3, 9).curve);
    check_structure(t.l);
    CHECK(t.s.dim() == 3);
    CHECK(t.cls.kind == SurfaceCase::Scroll);
    CHECK(radical(t.s).empty());
    Sl2Triple tr = split_sl2(t.s);
    CHECK(triple_relations_hold(tr));
  }
}

TEST_CASE("corpus: genus 4 lands on a quadric surface") {
  for (std::uint64_t seed : {3u, 4u}) {
    Chain c = run(corpus::two_node_quintic(seed));
    CHECK(c.quadrics.dim() == 1);
    check_structure(c.l);
    REQUIRE(c.cls.kind == SurfaceCase::P1xP1);
    REQUIRE(c.cls.ideals.size() == 2);
    for (const auto& ideal : c.cls.ideals) {
      CHECK(ideal.dim() == 3);
      try {
        CHECK(triple_relations_hold(split_sl2(ideal)));
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SplitFailedOverExtension);
      }
    }
  }
}
