#pragma once

#include "centro/boundary.hpp"
#include "centro/chart.hpp"
#include "centro/forms.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace centro {

struct SegmentTestResult {
  /// Line x + t v in the ambient space; x lies in E.
  Vec x;
  Vec v;
  /// Interval (a, b) around t = 0 on which h0(t) = h(x + t v) > 0.
  double a = 0.0;
  double b = 0.0;
  /// max of f0 = 2 h0 h0'' - h0'^2 over [a, b], and where it is attained.
  double maxF0 = 0.0;
  double argMax = 0.0;
  double f0a = 0.0;
  double f0b = 0.0;
  /// -h0'(a)^2 and -h0'(b)^2.
  double endpointA = 0.0;
  double endpointB = 0.0;
  /// Largest |h0| of the coefficients; tolerances are relative to it.
  double scale = 0.0;
  bool monotone = false;
  bool pass = false;
};

struct SegmentTestSummary {
  std::vector<SegmentTestResult> lines;
  int failures = 0;
  /// Largest maxF0 / scale^2 over all lines.
  double worstRelative = -std::numeric_limits<double>::infinity();
  bool pass = false;
};

struct LineSampleSpec {
  int lines = 2000;
  /// Fractions of the exit distance used for the base points, cycled.
  std::vector<double> radialFractions{0.0, 0.25, 0.5, 0.75, 0.95};
  double relTol = 1e-9;
};

/// f0 on one line through the chart point c with chart direction dir. Needs a
/// cubic polynomial; throws ClosednessFailure if h0 stays positive on a half line.
SegmentTestResult cubicSegmentTest(const ChartFrame& f, const Vec& c, const Vec& dir, double relTol = 1e-9);
SegmentTestSummary cubicSegmentTest(const ChartFrame& f, const LineSampleSpec& spec = {});

struct ConcavityResult {
  double eps = 0.0;
  bool pass = false;
  int samples = 0;
  /// First failing sample and the positive eigenvalue found there.
  std::optional<Vec> witness;
  double witnessEigenvalue = 0.0;
};

/// Eigenvalues of Hess (h^{1/(k - eps)}) in chart coordinates.
Vec concavityEigenvalues(const ChartFrame& f, const Vec& c, double eps);
/// Samples the chart origin and points of B up to 1 - 1e-3 of the exit distance.
ConcavityResult concavityTest(const ChartFrame& f, double eps, int samples = 1000, double tol = 1e-9);
/// {k/8, k/4, k/2, 3k/4, k - k/8}.
std::vector<double> defaultEpsGrid(double k);

/// (1/k) sqrt(eps / (k - eps)).
double logLengthConstant(double k, double eps);
double logLengthBound(double k, double eps, double hStart, double hEnd);

struct CurveTrace {
  std::vector<double> t;
  std::vector<Vec> coords;
  /// Points on {h = 1}.
  std::vector<Vec> ambient;
  /// h at the chart point.
  std::vector<double> h;
  std::vector<double> length;
  void push(double tt, Vec c, Vec x, double hh, double len);
  std::size_t size() const { return t.size(); }
  void writeCsv(std::ostream& os) const;
};

double logLengthBound(const ChartFrame& f, const CurveTrace& trace, double eps);

struct ChartPath {
  std::function<Vec(double)> point;
  std::function<Vec(double)> velocity;
  double s0 = 0.0;
  double s1 = 1.0;
};

/// Straight chart segment c0 -> c1 parametrized on [0, 1].
ChartPath segmentPath(const Vec& c0, const Vec& c1);

/// Centroaffine length of a chart path by adaptive quadrature. Throws DomainError
/// if a quadrature node lies outside B.
double curveLength(const ChartFrame& f, const ChartPath& path, double quadTol = 1e-10);

enum class GeodesicStop { MaxLength, MinH, Boundary };
std::string label(GeodesicStop s);

struct GeodesicOptions {
  double maxLength = 50.0;
  double stepTol = 1e-10;
  /// Stop once h at the chart point drops below this value.
  double minH = 0.0;
  /// Stop when the chart boundary distance falls below this fraction of diam(B);
  /// 0 disables the check.
  double boundaryFraction = 1e-8;
  double initialStep = 1e-2;
  double minStep = 1e-14;
  int maxSteps = 1000000;
};

struct GeodesicResult {
  CurveTrace trace;
  GeodesicStop stop = GeodesicStop::MaxLength;
  double length = 0.0;
  double finalH = 0.0;
  /// max |g(v, v) - 1| along the trace, before renormalization.
  double maxSpeedDrift = 0.0;
  int steps = 0;
  int rejected = 0;
};

/// Unit-speed geodesic of the centroaffine metric, integrated on {h = 1} in
/// ambient coordinates. The direction is rescaled to unit length.
GeodesicResult geodesicShoot(const ChartFrame& f, const Vec& start, const Vec& dir, const GeodesicOptions& opt = {});

struct MonomialFace {
  /// Face s = 0 (index 0) or t = 0 (index 1) of the normalized quadrant.
  int face = 0;
  int l = 0;
  double coefficient = 0.0;
  double signValue = 0.0;
  bool pass = false;
};

struct MonomialTestResult {
  /// Linear map taking the quadrant onto the cone; columns are the boundary rays.
  Mat normalization;
  std::optional<HomogeneousPolynomial> normalized;
  std::vector<MonomialFace> faces;
  bool pass = false;
};

/// Needs n = 1 and a polynomial. Throws PreconditionError if the cone is not a
/// proper sector or h does not vanish on both boundary rays.
MonomialTestResult n1MonomialTest(const ChartFrame& f);

struct LengthWitness {
  Vec origin;
  Vec direction;
  /// Ray parameter scale: the path is origin + s * span * direction, s in [0, 1).
  double span = 0.0;
  /// Lengths up to s = 1 - delta for the listed deltas.
  std::vector<double> deltas;
  std::vector<double> partial;
  double tail = 0.0;
  double length = 0.0;
  bool finite = false;
  /// The ray ends where the metric degenerates rather than at the boundary of B.
  bool degenerate = false;
};

/// Length of the chart ray from c in direction dir up to the boundary of B (or
/// to the first point where the metric stops being definite).
LengthWitness rayLengthWitness(const ChartFrame& f, const Vec& c, const Vec& dir, double quadTol = 1e-10);

struct IncompletenessWitness {
  std::vector<LengthWitness> rays;
  /// Total length of the two opposite rays forming a chart line.
  double length = 0.0;
  bool finite = false;
};

/// Tries the lines through the chart origin along the coordinate axes and a
/// few sphere directions; reports the first one with finite length in both
/// directions.
std::optional<IncompletenessWitness> incompletenessWitness(const ChartFrame& f, int directions = 4,
                                                           double quadTol = 1e-10);

enum class VerdictStatus { Complete, Incomplete, NumericallyCertified, Inconclusive };
std::string label(VerdictStatus s);

struct VerdictConfig {
  int classifySamples = 200;
  int segmentLines = 2000;
  int boundaryDirections = 0;
  int concavitySamples = 1000;
  std::vector<double> epsGrid;
  double tolDef = kDefaultFormTol;
  double quadTol = 1e-10;
  int witnessDirections = 4;
  bool useQuadric = true;
  bool useCubic = true;
  bool useRegular = true;
  bool useMonomial = true;
  bool useConcavity = true;
  bool useWitness = true;
};

struct RouteAttempt {
  std::string route;
  std::string outcome;
};

struct CompletenessVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  /// quadric, cubic-criterion, regular-boundary, n1-monomial, concavity, finite-length-witness.
  std::string route;
  std::optional<double> eps;
  std::vector<RouteAttempt> attempts;
  std::optional<SegmentTestSummary> segment;
  std::optional<RegularityReport> regularity;
  std::optional<MonomialTestResult> monomial;
  std::optional<ConcavityResult> concavity;
  std::optional<IncompletenessWitness> witness;
  /// Closedness was not established; the chart is assumed to cover the component.
  bool chartCoverageAssumed = false;
  bool decided() const { return status != VerdictStatus::Inconclusive; }
};

/// Throws PreconditionError unless the chart classifies as hyperbolic.
CompletenessVerdict completenessVerdict(const ChartFrame& f, const VerdictConfig& config = {});

}  // namespace centro
