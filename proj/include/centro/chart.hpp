#pragma once

#include "centro/forms.hpp"
#include "centro/homogeneous.hpp"
#include "centro/types.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace centro {

/// A hyperplane E = base + span(basis) transversal to the radial direction,
/// used as a chart of the level set {h = 1} by central projection.
///
/// Frames built by `atSeed` have base p on {h = 1}, E = E_p the affine tangent
/// plane and an orthonormal basis of ker dh_p oriented so that det(p, basis) > 0.
class ChartFrame {
 public:
  static ChartFrame atSeed(const HomogeneousFunction& h, const Vec& seed);
  /// Arbitrary hyperplane chart; `base` must lie in the cone and `basis` must
  /// have independent columns spanning a hyperplane not through the origin.
  static ChartFrame onHyperplane(const HomogeneousFunction& h, const Vec& base, const Mat& basis);

  const HomogeneousFunction& h() const { return h_; }
  double degree() const { return h_.degree(); }
  int ambientDim() const { return h_.dim(); }
  int n() const { return h_.dim() - 1; }

  const Vec& p() const { return base_; }
  /// Position vector at the base point.
  const Vec& xi() const { return base_; }
  /// Euclidean gradient of h at the base point.
  const Vec& normal() const { return grad_; }
  const Mat& basis() const { return basis_; }
  /// Unit normal of E and the offset <planeNormal, y> shared by all y in E.
  const Vec& planeNormal() const { return planeNormal_; }
  double offset() const { return offset_; }

  Vec ambient(const Vec& c) const { return base_ + basis_ * c; }
  /// Coordinates of a point of E.
  Vec coordsOf(const Vec& x) const { return coordMap_ * (x - base_); }
  /// Central projection of a cone point onto E.
  Vec project(const Vec& x) const;
  /// Chart coordinates of the cone point x, via central projection.
  Vec chartCoords(const Vec& x) const { return coordsOf(project(x)); }

  double hval(const Vec& c) const { return h_.value(ambient(c)); }
  bool contains(const Vec& c) const;
  /// h at the chart point of a point q with h(q) = 1, computed as lambda^k with
  /// lambda = offset / <n, q>; keeps full relative precision near the boundary.
  double hbarOfLevelPoint(const Vec& q) const;

  /// Smallest t > 0 with c + t dir on the boundary of B; +inf if the ray never
  /// leaves (a closedness failure). Polynomials use the exact restriction.
  double rayExit(const Vec& c, const Vec& dir) const;
  /// Min over deterministic directions of the Euclidean (ambient) exit distance.
  double boundaryDistance(const Vec& c, int directions = 0) const;

 private:
  ChartFrame(HomogeneousFunction h, Vec base, Mat basis);

  HomogeneousFunction h_;
  Vec base_;
  Mat basis_;
  Vec grad_;
  Vec planeNormal_;
  double offset_ = 0.0;
  Mat coordMap_;
};

/// psi(x) = x / h(x)^{1/k}.
Vec radialProjection(const HomogeneousFunction& h, const Vec& x);
inline Vec radialProjection(const ChartFrame& f, const Vec& x) { return radialProjection(f.h(), x); }

/// Orthonormal basis of ker dh_q.
Mat levelTangentBasis(const HomogeneousFunction& h, const Vec& q);

/// Gram matrix of -(1/k) Hess h_q on the given tangent vectors (columns).
Form centroaffineMetricAmbient(const HomogeneousFunction& h, const Vec& q, const Mat& tangent);
/// Same on an orthonormal basis of T_q.
Form centroaffineMetricAmbient(const ChartFrame& f, const Vec& q);

enum class MetricMethod { Pullback, PsiFormula, UFormula };
std::string label(MetricMethod m);

/// Metric of the level set pulled back to chart coordinates.
Form chartMetric(const ChartFrame& f, const Vec& c, MetricMethod method);
/// Largest entrywise disagreement of the three formulas relative to the metric scale.
double chartMetricDisagreement(const ChartFrame& f, const Vec& c);
/// Runs all three formulas and throws ConsistencyError if they differ by more than tol (relative).
Form chartMetricChecked(const ChartFrame& f, const Vec& c, double tol = 1e-6);

enum class Classification { Hyperbolic, Elliptic, Indefinite };
std::string label(Classification c);

struct ClassifySample {
  Vec coords;
  Signature signature;
  Classification cls;
};

struct ClassifyResult {
  Classification aggregate = Classification::Indefinite;
  std::vector<ClassifySample> samples;
  /// The origin sample followed by every sample of a different class; empty when unanimous.
  std::vector<ClassifySample> witnesses;
};

/// Signature of the chart metric at the origin and at deterministic sample
/// points of B. The aggregate is definite only if every sample agrees.
ClassifyResult classify(const ChartFrame& f, int sampleSize, double tol = kDefaultFormTol);

/// -(1/k) Hess h at x, without signature checks.
Form lorentzForm(const HomogeneousFunction& h, const Vec& x);
/// As lorentzForm, raising an Error listing the eigenvalues if the signature is not (n, 1, 0).
Form lorentzMetric(const HomogeneousFunction& h, const Vec& x, double tol = kDefaultFormTol);

struct ConeIdentityOptions {
  double fdStep = 1e-5;
  /// Use s = (k/2) h^{1/k} and the unscaled cross-section metric.
  bool literal = false;
  /// Replaces the Gram matrix of g at psi(x) on the adapted tangent frame.
  std::optional<Mat> metricOverride;
};

/// Compares g_L at x with the metric cone -ds^2 + s^2 g~ on the frame
/// (x, ker dh_x). Here s = (2/k) sqrt((k-1) h) and g~ = k^2 / (4 (k-1)) g,
/// with ds obtained by central differences along the ray. The result is the
/// max entry difference divided by max(1, |g_L|).
double coneIdentityResidual(const ChartFrame& f, const Vec& x, const ConeIdentityOptions& opt = {});

}  // namespace centro
