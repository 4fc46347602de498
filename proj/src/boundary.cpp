#include "centro/boundary.hpp"

#include "centro/sampling.hpp"

#include <limits>
#include <sstream>

namespace centro {

namespace {

// Basis of ker dh_x cap ker n_E.
Mat boundaryTangent(const Vec& grad, const Vec& planeNormal) {
  const int d = static_cast<int>(grad.size());
  Mat a(2, d);
  a.row(0) = grad.transpose().normalized();
  a.row(1) = planeNormal.transpose();
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(d - 2);
}

double uValue(const ChartFrame& f, const Vec& c) { return std::pow(f.hval(c), 1.0 / f.degree()); }

Mat uHessian(const ChartFrame& f, const Vec& c) {
  const Vec x = f.ambient(c);
  const double k = f.degree(), hx = f.h().value(x);
  const Vec g = f.h().gradient(x);
  const Mat H = (1.0 / k) * std::pow(hx, 1.0 / k - 1.0) * (f.h().hessian(x) + (1.0 / k - 1.0) * g * g.transpose() / hx);
  return f.basis().transpose() * H * f.basis();
}

std::vector<Vec> chartDirections(int n, int count) {
  std::vector<Vec> dirs;
  for (int i = 0; i < n; ++i) {
    dirs.push_back(Vec::Unit(n, i));
    dirs.push_back(-Vec::Unit(n, i));
  }
  for (const Vec& d : sphereDirections(n, count)) dirs.push_back(d);
  return dirs;
}

}  // namespace

int defaultBoundaryDirections(int n) { return n <= 3 ? 500 : 5000; }

std::vector<BoundaryPoint> boundaryScan(const ChartFrame& f, const std::vector<Vec>& directions) {
  std::vector<BoundaryPoint> out;
  out.reserve(directions.size());
  const Vec origin = Vec::Zero(f.n());
  const double limit = 1e6 * f.p().norm();
  for (const Vec& d : directions) {
    if (d.size() != f.n() || d.norm() == 0.0) throw PreconditionError("boundary scan direction must be a nonzero chart vector");
    const double t = f.rayExit(origin, d);
    const Vec y = f.ambient(t * d);
    if (!std::isfinite(t) || (y - f.p()).norm() > limit) {
      std::ostringstream os;
      os << "ray from the chart origin stays in the cone beyond radius " << limit;
      throw ClosednessFailure(os.str(), f.p(), f.basis() * d);
    }
    BoundaryPoint bp;
    bp.x = y / y.norm();
    bp.origin = origin;
    bp.direction = d;
    bp.t = t;
    if (f.h().inDomain(bp.x)) {
      bp.hval = f.h().value(bp.x);
      bp.gradient = f.h().gradient(bp.x);
    }
    out.push_back(std::move(bp));
  }
  return out;
}

std::vector<BoundaryPoint> boundaryScan(const ChartFrame& f, int count) {
  const int m = count > 0 ? count : defaultBoundaryDirections(f.n());
  return boundaryScan(f, sphereDirections(f.n(), m));
}

double gradientScale(const ChartFrame& f) {
  const double r = f.p().norm();
  return f.normal().norm() / std::pow(r, f.degree() - 1.0);
}

LorentzExtension lorentzExtensionCheck(const ChartFrame& f, const BoundaryPoint& bp, double tol) {
  if (!bp.gradient || !(bp.gradient->norm() > tol * gradientScale(f)))
    throw PreconditionError("Lorentz extension check needs dh != 0 at the boundary point");
  const Vec& eta = *bp.gradient;
  const Vec& xi = bp.x;
  const Mat T = boundaryTangent(eta, f.planeNormal());
  const int d = static_cast<int>(xi.size());
  Mat basis(d, d);
  basis << eta, xi, T;
  if (std::abs(basis.determinant()) <= 1e-12 * std::pow(basis.colwise().norm().maxCoeff(), d))
    throw ConsistencyError("adapted boundary basis is degenerate");
  const Mat beta = -f.h().hessian(xi);
  LorentzExtension r;
  r.gram = basis.transpose() * beta * basis;
  r.determinant = r.gram.determinant();
  r.signature = signature(Form(r.gram), tol);
  r.c = xi.dot(beta * eta);
  r.cPredicted = -(f.degree() - 1.0) * eta.squaredNorm();
  r.lorentzian = r.determinant < 0 && r.signature.isLorentzian();
  return r;
}

RegularityEntry regularBoundaryCheck(const ChartFrame& f, const BoundaryPoint& bp, double tol) {
  RegularityEntry e;
  e.point = bp;
  if (!bp.gradient) return e;
  const Vec& g = *bp.gradient;
  e.gradientNorm = g.norm();
  e.condition1 = e.gradientNorm > tol * gradientScale(f);
  if (!e.condition1) return e;

  const Mat beta = -f.h().hessian(bp.x);
  const Mat T = boundaryTangent(g, f.planeNormal());
  e.condition2 = isDefinite(restrict(Form(beta), T, tol), +1, tol);
  const auto [psd, ker] = psdWithKernelDim(restrict(Form(beta), levelTangentBasis(f.h(), bp.x), tol), tol);
  e.psdOnTangent = psd;
  e.kernelDim = ker;
  e.betaXiXi = std::abs(bp.x.dot(beta * bp.x));
  for (int i = 0; i < T.cols(); ++i) e.betaXiY = std::max(e.betaXiY, std::abs(bp.x.dot(beta * T.col(i))));
  e.lorentz = lorentzExtensionCheck(f, bp, tol);
  return e;
}

RegularityReport regularBoundaryCheck(const ChartFrame& f, const std::vector<BoundaryPoint>& points, double tol) {
  RegularityReport r;
  for (const auto& bp : points) {
    r.entries.push_back(regularBoundaryCheck(f, bp, tol));
    if (!r.entries.back().regular()) ++r.failures;
  }
  r.regular = !points.empty() && r.failures == 0;
  return r;
}

double comparisonFunction(const CompactnessBound& b, const Vec& c) {
  const double r = c.norm();
  if (r <= b.delta) return b.u0 - b.epsilon * r * r;
  return b.u0 + b.epsilon * b.delta * b.delta - 2.0 * b.epsilon * b.delta * r;
}

CompactnessBound compactnessBound(const ChartFrame& f, int samples) {
  const int n = f.n();
  const Vec origin = Vec::Zero(n);
  CompactnessBound b;
  b.u0 = uValue(f, origin);
  {
    const Vec x = f.ambient(origin);
    const double k = f.degree(), hx = f.h().value(x);
    b.gradientAtOrigin = ((1.0 / k) * std::pow(hx, 1.0 / k - 1.0) * f.basis().transpose() * f.h().gradient(x)).norm();
  }
  double dist = std::numeric_limits<double>::infinity();
  for (const Vec& d : chartDirections(n, 8 * n + 8)) dist = std::min(dist, f.rayExit(origin, d));
  if (!std::isfinite(dist)) throw ClosednessFailure("chart domain is unbounded", f.p(), Vec());
  b.delta = 0.5 * dist;

  double mu = std::numeric_limits<double>::infinity();
  const auto hdirs = sphereDirections(n, samples);
  for (int i = 0; i <= samples; ++i) {
    Vec c = origin;
    if (i > 0) {
      const double frac = (i % 4 == 0) ? 1.0 : std::pow(radicalInverse(static_cast<std::uint64_t>(i), 3), 1.0 / n);
      c = hdirs[static_cast<std::size_t>(i - 1)] * (frac * b.delta);
    }
    const Eigen::SelfAdjointEigenSolver<Mat> es(uHessian(f, c), Eigen::EigenvaluesOnly);
    mu = std::min(mu, -es.eigenvalues().maxCoeff());
  }
  if (!(mu > 0)) throw PreconditionError("no Hessian bound on B_delta: u is not strictly concave near p");
  b.hessianBound = mu;
  b.epsilon = 0.5 * mu;
  const double inner = std::sqrt(b.u0 / b.epsilon);
  b.radius = inner <= b.delta ? inner : (b.u0 + b.epsilon * b.delta * b.delta) / (2.0 * b.epsilon * b.delta);

  const auto vdirs = sphereDirections(n, samples);
  for (int i = 0; i < samples; ++i) {
    const Vec& d = vdirs[static_cast<std::size_t>(i)];
    const double exit = f.rayExit(origin, d);
    if (!std::isfinite(exit)) throw ClosednessFailure("chart domain is unbounded", f.p(), f.basis() * d);
    b.maxBoundaryDistance = std::max(b.maxBoundaryDistance, exit);
    const Vec c = d * (0.999 * radicalInverse(static_cast<std::uint64_t>(i + 1), 2) * exit);
    ++b.samples;
    if (comparisonFunction(b, c) < uValue(f, c) - 1e-12 * b.u0) ++b.violations;
  }
  return b;
}

Perturbation genPerturb(const ChartFrame& f, double eps) {
  const auto* poly = f.h().polynomial();
  if (!poly) throw PreconditionError("perturbation needs a polynomial");
  if (!(eps > 0 && eps < 1)) throw PreconditionError("perturbation parameter must lie in (0, 1)");
  const int k = poly->degree();
  const Vec l = f.h().gradient(f.p()) / static_cast<double>(k);
  HomogeneousPolynomial he = *poly - HomogeneousPolynomial::powerOfLinearForm(l, k) * eps;
  ChartFrame fr = ChartFrame::atSeed(he, f.p());
  return {std::move(he), std::move(fr), eps};
}

}  // namespace centro
