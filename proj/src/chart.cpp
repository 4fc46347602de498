#include "centro/chart.hpp"

#include "centro/sampling.hpp"

#include <sstream>

namespace centro {

namespace {

Mat orthogonalComplement(const Vec& v) {
  const int d = static_cast<int>(v.size());
  const Mat m = v;
  Eigen::HouseholderQR<Mat> qr(m);
  const Mat q = qr.householderQ();
  return q.rightCols(d - 1);
}

}  // namespace

ChartFrame::ChartFrame(HomogeneousFunction h, Vec base, Mat basis)
    : h_(std::move(h)), base_(std::move(base)), basis_(std::move(basis)) {
  grad_ = h_.gradient(base_);
  // Normal of E: the left null vector of the basis.
  Eigen::JacobiSVD<Mat> svd(basis_, Eigen::ComputeFullU);
  planeNormal_ = svd.matrixU().col(basis_.cols());
  offset_ = planeNormal_.dot(base_);
  if (offset_ < 0) {
    planeNormal_ = -planeNormal_;
    offset_ = -offset_;
  }
  if (!(offset_ > 1e-12 * base_.norm())) throw PreconditionError("chart hyperplane passes through the origin");
  coordMap_ = (basis_.transpose() * basis_).inverse() * basis_.transpose();
}

ChartFrame ChartFrame::atSeed(const HomogeneousFunction& h, const Vec& seed) {
  if (seed.size() != h.dim()) throw PreconditionError("seed has the wrong dimension");
  if (h.dim() < 2) throw PreconditionError("ambient dimension must be at least 2");
  if (!h.inDomain(seed)) throw DomainError("seed lies outside the domain of h");
  const double hs = h.value(seed);
  if (!(hs > 0)) {
    std::ostringstream os;
    os << "h(seed) = " << hs << " <= 0";
    throw PreconditionError(os.str());
  }
  const Vec p = seed / std::pow(hs, 1.0 / h.degree());
  const Vec g = h.gradient(p);
  if (!(g.norm() > 1e-12 * std::max(1.0, p.norm()))) throw PreconditionError("gradient of h vanishes at the base point");
  Mat basis = orthogonalComplement(g);
  Mat pb(p.size(), p.size());
  pb << p, basis;
  if (pb.determinant() < 0) basis.col(basis.cols() - 1) *= -1.0;
  return ChartFrame(h, p, basis);
}

ChartFrame ChartFrame::onHyperplane(const HomogeneousFunction& h, const Vec& base, const Mat& basis) {
  if (base.size() != h.dim() || basis.rows() != h.dim() || basis.cols() != h.dim() - 1)
    throw PreconditionError("hyperplane chart has inconsistent dimensions");
  if (!h.inDomain(base) || !(h.value(base) > 0)) throw PreconditionError("chart base point is not in the cone");
  Eigen::JacobiSVD<Mat> svd(basis);
  const auto sv = svd.singularValues();
  if (sv.size() > 0 && !(sv[sv.size() - 1] > 1e-12 * sv[0])) throw PreconditionError("chart basis is rank deficient");
  return ChartFrame(h, base, basis);
}

Vec ChartFrame::project(const Vec& x) const {
  const double s = planeNormal_.dot(x);
  if (!(s > 0)) throw DomainError("point does not project onto the chart hyperplane");
  return x * (offset_ / s);
}

bool ChartFrame::contains(const Vec& c) const {
  const Vec x = ambient(c);
  return h_.inDomain(x) && h_.value(x) > 0;
}

double ChartFrame::hbarOfLevelPoint(const Vec& q) const {
  const double s = planeNormal_.dot(q);
  if (!(s > 0)) throw DomainError("point does not project onto the chart hyperplane");
  return std::pow(offset_ / s, degree());
}

double ChartFrame::rayExit(const Vec& c, const Vec& dir) const {
  const Vec x = ambient(c);
  const Vec v = basis_ * dir;
  if (v.norm() == 0.0) throw PreconditionError("ray direction must be nonzero");
  if (!contains(c)) throw DomainError("ray starts outside the chart domain");
  if (const auto* poly = h_.polynomial()) {
    const auto h0 = poly->restrictToLine(x, v);
    for (const auto& r : realRoots(h0))
      if (r.value > 0) return r.value;
    return std::numeric_limits<double>::infinity();
  }
  auto inside = [&](double t) {
    const Vec y = x + t * v;
    return h_.inDomain(y) && h_.value(y) > 0;
  };
  double lo = 0.0, hi = 1e-3 * std::max(1.0, x.norm()) / v.norm();
  const double far = 1e6 * std::max(1.0, x.norm()) / v.norm();
  while (inside(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > far) return std::numeric_limits<double>::infinity();
  }
  for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
    const double m = 0.5 * (lo + hi);
    (inside(m) ? lo : hi) = m;
  }
  return lo;
}

double ChartFrame::boundaryDistance(const Vec& c, int directions) const {
  const int m = directions > 0 ? directions : 8 * n() + 8;
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const Vec& d) {
    const double t = rayExit(c, d);
    best = std::min(best, t * (basis_ * d).norm());
  };
  for (int i = 0; i < n(); ++i) {
    consider(Vec::Unit(n(), i));
    consider(-Vec::Unit(n(), i));
  }
  for (const Vec& d : sphereDirections(n(), m)) consider(d);
  return best;
}

Vec radialProjection(const HomogeneousFunction& h, const Vec& x) {
  const double hx = h.value(x);
  if (!(hx > 0)) throw DomainError("radial projection needs h > 0");
  return x / std::pow(hx, 1.0 / h.degree());
}

Mat levelTangentBasis(const HomogeneousFunction& h, const Vec& q) {
  const Vec g = h.gradient(q);
  if (!(g.norm() > 0)) throw PreconditionError("degenerate gradient: level set tangent space undefined");
  return orthogonalComplement(g);
}

Form centroaffineMetricAmbient(const HomogeneousFunction& h, const Vec& q, const Mat& tangent) {
  if (std::abs(h.value(q) - 1.0) > 1e-10) throw PreconditionError("point is not on the level set {h = 1}");
  if (!(h.gradient(q).norm() > 0)) throw PreconditionError("degenerate gradient at the point");
  return Form(-(1.0 / h.degree()) * tangent.transpose() * h.hessian(q) * tangent);
}

Form centroaffineMetricAmbient(const ChartFrame& f, const Vec& q) {
  return centroaffineMetricAmbient(f.h(), q, levelTangentBasis(f.h(), q));
}

std::string label(MetricMethod m) {
  switch (m) {
    case MetricMethod::Pullback: return "pullback";
    case MetricMethod::PsiFormula: return "psi_formula";
    case MetricMethod::UFormula: return "u_formula";
  }
  return "?";
}

Form chartMetric(const ChartFrame& f, const Vec& c, MetricMethod method) {
  const Vec x = f.ambient(c);
  if (!f.h().inDomain(x)) throw DomainError("chart point outside the domain of h");
  const double hx = f.h().value(x);
  if (!(hx > 0)) throw DomainError("chart point outside B (h <= 0)");
  const double k = f.degree();
  const Mat& B = f.basis();
  const Vec grad = f.h().gradient(x);
  switch (method) {
    case MetricMethod::Pullback: {
      const Vec q = x / std::pow(hx, 1.0 / k);
      const Mat J = std::pow(hx, -1.0 / k) * (B - x * (grad.transpose() * B) / (k * hx));
      return Form(-(1.0 / k) * J.transpose() * f.h().hessian(q) * J);
    }
    case MetricMethod::PsiFormula: {
      const Vec a = B.transpose() * grad;
      const Mat H = f.h().hessian(x);
      return Form((1.0 / k) * (-(1.0 / hx) * B.transpose() * H * B + ((k - 1.0) / (k * hx * hx)) * a * a.transpose()));
    }
    case MetricMethod::UFormula: {
      const double u = std::pow(hx, 1.0 / k);
      const Mat H = f.h().hessian(x);
      const Mat hessU = (1.0 / k) * std::pow(hx, 1.0 / k - 1.0) * (H + (1.0 / k - 1.0) * grad * grad.transpose() / hx);
      return Form(-(1.0 / u) * B.transpose() * hessU * B);
    }
  }
  throw PreconditionError("unknown metric method");
}

double chartMetricDisagreement(const ChartFrame& f, const Vec& c) {
  const Form a = chartMetric(f, c, MetricMethod::Pullback);
  const Form b = chartMetric(f, c, MetricMethod::PsiFormula);
  const Form u = chartMetric(f, c, MetricMethod::UFormula);
  const double scale = std::max({a.scale(), b.scale(), u.scale()});
  const double d = std::max({(a - b).scale(), (a - u).scale(), (b - u).scale()});
  return scale > 0 ? d / scale : d;
}

Form chartMetricChecked(const ChartFrame& f, const Vec& c, double tol) {
  const double d = chartMetricDisagreement(f, c);
  if (d > tol) {
    std::ostringstream os;
    os << "chart metric formulas disagree: relative difference " << d;
    throw ConsistencyError(os.str());
  }
  return chartMetric(f, c, MetricMethod::PsiFormula);
}

std::string label(Classification c) {
  switch (c) {
    case Classification::Hyperbolic: return "hyperbolic";
    case Classification::Elliptic: return "elliptic";
    case Classification::Indefinite: return "indefinite";
  }
  return "?";
}

ClassifyResult classify(const ChartFrame& f, int sampleSize, double tol) {
  if (sampleSize < 1) throw PreconditionError("classify needs at least one sample");
  ClassifyResult r;
  const int n = f.n();
  const auto dirs = sphereDirections(n, sampleSize);
  for (int i = 0; i < sampleSize; ++i) {
    Vec c = Vec::Zero(n);
    if (i > 0) {
      const double exit = f.rayExit(c, dirs[static_cast<std::size_t>(i)]);
      const double frac = 0.95 * radicalInverse(static_cast<std::uint64_t>(i), 2);
      c = dirs[static_cast<std::size_t>(i)] * (frac * (std::isfinite(exit) ? exit : 10.0));
    }
    ClassifySample s{c, signature(chartMetric(f, c, MetricMethod::PsiFormula), tol), Classification::Indefinite};
    if (s.signature.positive == n)
      s.cls = Classification::Hyperbolic;
    else if (s.signature.negative == n)
      s.cls = Classification::Elliptic;
    r.samples.push_back(std::move(s));
  }
  const Classification first = r.samples.front().cls;
  for (const auto& s : r.samples)
    if (s.cls != first) r.witnesses.push_back(s);
  if (r.witnesses.empty()) {
    r.aggregate = first;
  } else {
    r.witnesses.insert(r.witnesses.begin(), r.samples.front());
    r.aggregate = Classification::Indefinite;
  }
  return r;
}

Form lorentzForm(const HomogeneousFunction& h, const Vec& x) { return Form(-(1.0 / h.degree()) * h.hessian(x)); }

Form lorentzMetric(const HomogeneousFunction& h, const Vec& x, double tol) {
  if (!(h.value(x) > 0)) throw DomainError("Lorentz metric needs h(x) > 0");
  const Form g = lorentzForm(h, x);
  const Signature s = signature(g, tol);
  if (!s.isLorentzian()) {
    std::ostringstream os;
    os << "g_L is not Lorentzian: signature (" << s.positive << "," << s.negative << "," << s.zero
       << "), eigenvalues";
    const Vec ev = g.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) os << ' ' << ev[i];
    throw Error(os.str());
  }
  return g;
}

double coneIdentityResidual(const ChartFrame& f, const Vec& x, const ConeIdentityOptions& opt) {
  const auto& h = f.h();
  const double k = h.degree();
  const double hx = h.value(x);
  if (!(hx > 0)) throw DomainError("cone identity needs h(x) > 0");
  if (!(opt.fdStep > 0)) throw PreconditionError("fd_step must be positive");

  auto s = [&](const Vec& y) {
    const double hy = h.value(y);
    return opt.literal ? 0.5 * k * std::pow(hy, 1.0 / k) : (2.0 / k) * std::sqrt((k - 1.0) * hy);
  };
  const double crossScale = opt.literal ? 1.0 : k * k / (4.0 * (k - 1.0));

  const Mat T = levelTangentBasis(h, x);
  const int n = static_cast<int>(T.cols());
  Mat F(x.size(), n + 1);
  F << x, T;
  const Mat gl = F.transpose() * lorentzForm(h, x).matrix() * F;

  const double d = opt.fdStep;
  const double ds = (s(x * (1.0 + d)) - s(x * (1.0 - d))) / (2.0 * d);
  const double r = std::pow(hx, 1.0 / k);
  const Vec q = x / r;
  const Mat dpsiT = T / r;
  Mat gq;
  if (opt.metricOverride) {
    gq = *opt.metricOverride;
  } else {
    gq = -(1.0 / k) * dpsiT.transpose() * h.hessian(q) * dpsiT;
  }
  if (gq.rows() != n || gq.cols() != n) throw PreconditionError("metric override has the wrong size");

  Mat cone = Mat::Zero(n + 1, n + 1);
  cone(0, 0) = -ds * ds;
  const double sx = s(x);
  cone.bottomRightCorner(n, n) = sx * sx * crossScale * gq;
  return (gl - cone).cwiseAbs().maxCoeff() / std::max(1.0, gl.cwiseAbs().maxCoeff());
}

}  // namespace centro
