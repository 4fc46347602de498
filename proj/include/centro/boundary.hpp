#pragma once

#include "centro/chart.hpp"
#include "centro/forms.hpp"
#include "centro/polynomial.hpp"

#include <optional>
#include <vector>

namespace centro {

struct BoundaryPoint {
  /// Boundary point scaled to unit Euclidean norm.
  Vec x;
  /// Chart ray: origin and direction in chart coordinates, exit parameter t.
  Vec origin;
  Vec direction;
  double t = 0.0;
  /// h at x; for maps whose domain ends at the boundary this is the limit 0.
  double hval = 0.0;
  /// Gradient at x; empty when h cannot be evaluated on the boundary.
  std::optional<Vec> gradient;
};

/// Default direction count: 500 for n <= 3, 5000 above.
int defaultBoundaryDirections(int n);

/// First boundary crossing along each chart ray from the origin of the frame.
/// Throws ClosednessFailure if some ray stays in the cone beyond 1e6 |p|.
std::vector<BoundaryPoint> boundaryScan(const ChartFrame& f, const std::vector<Vec>& directions);
std::vector<BoundaryPoint> boundaryScan(const ChartFrame& f, int count = 0);

struct LorentzExtension {
  /// Gram matrix of beta in the basis (eta, xi, e_1, ..., e_{n-1}).
  Mat gram;
  double determinant = 0.0;
  Signature signature;
  /// beta(xi, eta) and its predicted value -(k-1) |eta|^2.
  double c = 0.0;
  double cPredicted = 0.0;
  bool lorentzian = false;
};

struct RegularityEntry {
  BoundaryPoint point;
  double gradientNorm = 0.0;
  bool condition1 = false;
  /// beta = -Hess h positive definite on T dB = ker dh_x cap ker n_E; not set when (i) fails.
  std::optional<bool> condition2;
  /// beta on ker dh_x: positive semidefinite flag and kernel dimension.
  std::optional<bool> psdOnTangent;
  std::optional<int> kernelDim;
  /// |beta(xi, xi)| and max |beta(xi, y)| over a basis y of T dB.
  double betaXiXi = 0.0;
  double betaXiY = 0.0;
  std::optional<LorentzExtension> lorentz;
  bool regular() const { return condition1 && condition2.value_or(false); }
};

struct RegularityReport {
  std::vector<RegularityEntry> entries;
  bool regular = false;
  int failures = 0;
};

/// Characteristic gradient magnitude |grad h(p / |p|)| used to scale tolerances.
double gradientScale(const ChartFrame& f);

RegularityEntry regularBoundaryCheck(const ChartFrame& f, const BoundaryPoint& bp, double tol = kDefaultFormTol);
RegularityReport regularBoundaryCheck(const ChartFrame& f, const std::vector<BoundaryPoint>& points,
                                      double tol = kDefaultFormTol);

/// Adapted-basis Gram determinant of beta at a boundary point with dh != 0.
LorentzExtension lorentzExtensionCheck(const ChartFrame& f, const BoundaryPoint& bp, double tol = kDefaultFormTol);

struct CompactnessBound {
  /// Radius of the ball B_delta around the chart origin (chart coordinates).
  double delta = 0.0;
  /// Smallest value of -lambda_max(Hess u) sampled on B_delta.
  double hessianBound = 0.0;
  /// Curvature constant of the comparison function, hessianBound / 2.
  double epsilon = 0.0;
  double u0 = 0.0;
  double gradientAtOrigin = 0.0;
  /// Outer radius of {v >= 0}.
  double radius = 0.0;
  int samples = 0;
  int violations = 0;
  /// Largest exit parameter over the verification rays.
  double maxBoundaryDistance = 0.0;
};

/// Comparison function v(c) = u0 - eps |c|^2 on B_delta, u0 + eps delta^2 - 2 eps delta |c|
/// outside, checked against u = h^{1/k} on B.
double comparisonFunction(const CompactnessBound& b, const Vec& c);
CompactnessBound compactnessBound(const ChartFrame& f, int samples = 1000);

struct Perturbation {
  HomogeneousPolynomial h;
  ChartFrame frame;
  double eps;
};

/// h_eps = h - eps (dh_p(y)/k)^k, with the chart of the component through p.
Perturbation genPerturb(const ChartFrame& f, double eps);

}  // namespace centro
