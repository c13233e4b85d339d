#pragma once

#include "trigon/canonical.hpp"
#include "trigon/matrix.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace trigon {

// Matrix Lie algebra inside gl_n with a fixed basis. Elements are handled by
// their coordinate vectors in that basis.
class LieAlg {
public:
  LieAlg() = default;
  // Computes structure constants; VerificationFailed if the span is not
  // closed under the bracket, InvalidInput if the basis is dependent.
  LieAlg(std::vector<Mat> basis, std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }
  Field field() const { return field_; }

  // Coordinates of [b_i, b_j].
  const Vec& structure(std::size_t i, std::size_t j) const { return sc_[i * dim() + j]; }

  Mat element(const Vec& coords) const;
  std::optional<Vec> coords(const Mat& m) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  // Matrix of ad x acting on coordinate columns.
  Mat ad(const Vec& x) const;
  Vec unit(std::size_t i) const;

private:
  std::size_t n_ = 0;
  std::vector<Mat> basis_;
  std::vector<Vec> sc_;
  Coordinates coords_;
  Field field_;
};

// Derivation D_M q = sum M_ij x_j dq/dx_i.
MPoly derivation(const Mat& m, const MPoly& q);

// True if D_M maps every form of the space back into the space.
bool stabilizes(const FormSpace& space, const Mat& m);

// Trace-zero stabilizer of the span of quadrics, identity direction removed.
LieAlg stabilizer_algebra(const FormSpace& quadrics, std::size_t g);

Mat killing_form(const LieAlg& l);

// Echelon bases in coordinates of l.
std::vector<Vec> derived_algebra(const LieAlg& l);
std::vector<Vec> radical(const LieAlg& l);

LieAlg subalgebra(const LieAlg& l, const std::vector<Vec>& coords);

// Semisimple complement of the radical; LiftingFailed if the lifting
// equations are inconsistent.
LieAlg levi(const LieAlg& l);

enum class SurfaceCase { CurveCutByQuadrics, Scroll, P1xP1, Veronese, Unexpected };
std::string_view to_string(SurfaceCase c);

struct Classification {
  SurfaceCase kind = SurfaceCase::Unexpected;
  std::vector<LieAlg> ideals; // the two sl2 ideals in the P1xP1 case
  std::optional<long> extension; // delta when the ideals need Q(sqrt delta)
};

// Splits a 6-dimensional semisimple algebra into two 3-dimensional ideals via
// its centroid. Empty when the centroid is not 2-dimensional.
std::vector<LieAlg> split_ideals(const LieAlg& s, std::optional<long>& extension);

Classification classify(const LieAlg& l, const LieAlg& s, std::size_t g);

struct Sl2Triple {
  Mat e, h, f;
  std::optional<long> extension; // set when built over Q(sqrt delta)
};

bool triple_relations_hold(const Sl2Triple& t);

// Standard triple in a 3-dimensional semisimple algebra.
Sl2Triple split_sl2(const LieAlg& s);

} // namespace trigon
