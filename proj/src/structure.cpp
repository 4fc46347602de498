#include "centro/structure.hpp"

#include <sstream>

namespace centro {

namespace {

const HomogeneousPolynomial& requireCubic(const ChartFrame& f) {
  const auto* p = f.h().polynomial();
  if (!p || p->degree() != 3) throw PreconditionError("operation requires a cubic polynomial");
  return *p;
}

double stepFor(const ChartFrame& f, const Vec& c, double fdStep) {
  return fdStep > 0 ? fdStep : defaultFdStep(f, c);
}

// Central difference of the chart metric along coordinate l.
Mat metricDerivative(const ChartFrame& f, const Vec& c, int l, double d) {
  const Vec e = Vec::Unit(c.size(), l) * d;
  return (chartMetric(f, c + e, MetricMethod::PsiFormula).matrix() -
          chartMetric(f, c - e, MetricMethod::PsiFormula).matrix()) /
         (2 * d);
}

std::vector<std::vector<Mat>> gammaDerivatives(const ChartFrame& f, const Vec& c, double d) {
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<Mat>> out(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    const Vec e = Vec::Unit(n, l) * d;
    const auto plus = gaussSplit(f, c + e), minus = gaussSplit(f, c - e);
    for (int m = 0; m < n; ++m)
      out[static_cast<std::size_t>(l)].push_back((plus.gamma[static_cast<std::size_t>(m)] -
                                                   minus.gamma[static_cast<std::size_t>(m)]) /
                                                  (2 * d));
  }
  return out;
}

}  // namespace

double ConnectionSample::torsion() const {
  double t = 0.0;
  for (const Mat& g : gamma) t = std::max(t, (g - g.transpose()).cwiseAbs().maxCoeff());
  return t;
}

EmbeddingJet embeddingJet(const ChartFrame& f, const Vec& c) {
  const Vec x = f.ambient(c);
  if (!f.contains(c)) throw DomainError("chart point outside B");
  const double k = f.degree();
  const double hx = f.h().value(x);
  const Mat& B = f.basis();
  const int n = f.n();
  const Vec hi = B.transpose() * f.h().gradient(x);
  const Mat hij = B.transpose() * f.h().hessian(x) * B;
  const double w = std::pow(hx, -1.0 / k);
  const Vec dw = -(1.0 / k) * w * hi / hx;
  const Mat ddw = (1.0 / k) * (1.0 / k + 1.0) * w * hi * hi.transpose() / (hx * hx) - (1.0 / k) * w * hij / hx;

  EmbeddingJet j;
  j.phi = w * x;
  j.d1 = w * B + x * dw.transpose();
  j.d2.assign(static_cast<std::size_t>(n), Mat(x.size(), n));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) j.d2[static_cast<std::size_t>(i)].col(l) = dw[l] * B.col(i) + dw[i] * B.col(l) + x * ddw(i, l);
  return j;
}

ConnectionSample gaussSplit(const ChartFrame& f, const Vec& c) {
  const EmbeddingJet j = embeddingJet(f, c);
  const int n = f.n();
  ConnectionSample s;
  s.coords = c;
  s.frame.resize(n + 1, n + 1);
  s.frame << j.d1, j.phi;
  Eigen::JacobiSVD<Mat> svd(s.frame);
  const auto sv = svd.singularValues();
  s.condition = sv[0] / sv[sv.size() - 1];
  if (!(s.condition <= 1e8)) {
    std::ostringstream os;
    os << "Gauss frame is ill-conditioned (condition " << s.condition << ")";
    throw ConsistencyError(os.str());
  }
  const auto lu = s.frame.partialPivLu();
  s.gamma.assign(static_cast<std::size_t>(n), Mat(n, n));
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const Vec coef = lu.solve(Vec(j.d2[static_cast<std::size_t>(i)].col(l)));
      for (int m = 0; m < n; ++m) s.gamma[static_cast<std::size_t>(m)](i, l) = coef[m];
      g(i, l) = coef[n];
    }
  s.metric = Form(g);
  return s;
}

double volumeForm(const ChartFrame& f, const Vec& c) {
  const EmbeddingJet j = embeddingJet(f, c);
  Mat m(j.phi.size(), j.phi.size());
  m << j.phi, j.d1;
  return m.determinant();
}

double defaultFdStep(const ChartFrame& f, const Vec& c) {
  const double basisScale = f.basis().colwise().norm().maxCoeff();
  return 1e-4 * f.boundaryDistance(c) / basisScale;
}

Tensor3 cubicForm(const ChartFrame& f, const Vec& c, CubicMethod method, double fdStep) {
  const int n = f.n();
  Tensor3 C(n);
  if (method == CubicMethod::Polarization) {
    const Tensor3 H = requireCubic(f).polarization();
    const EmbeddingJet j = embeddingJet(f, c);
    Tensor3 p = H.pullback(j.d1);
    p *= -2.0;
    return p;
  }
  const double d = stepFor(f, c, fdStep);
  const auto cs = gaussSplit(f, c);
  const Mat& g = cs.metric.matrix();
  for (int i = 0; i < n; ++i) {
    const Mat dg = metricDerivative(f, c, i, d);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double v = dg(a, b);
        for (int m = 0; m < n; ++m)
          v -= cs.gamma[static_cast<std::size_t>(m)](i, a) * g(m, b) + cs.gamma[static_cast<std::size_t>(m)](i, b) * g(a, m);
        C(i, a, b) = v;
      }
  }
  return C;
}

Form metricViaPolarization(const ChartFrame& f, const Vec& c) {
  const Tensor3 H = requireCubic(f).polarization();
  const EmbeddingJet j = embeddingJet(f, c);
  return Form(-2.0 * j.d1.transpose() * H.contract(j.phi) * j.d1);
}

double fundEquationResidual(const ChartFrame& f, const Vec& c, double fdStep) {
  requireCubic(f);
  const int n = f.n();
  const double d = stepFor(f, c, fdStep);
  const auto cs = gaussSplit(f, c);
  const Mat& g = cs.metric.matrix();
  const Tensor3 C = cubicForm(f, c, CubicMethod::Polarization);
  std::vector<Tensor3> dC;
  for (int i = 0; i < n; ++i) {
    const Vec e = Vec::Unit(n, i) * d;
    Tensor3 t = cubicForm(f, c + e, CubicMethod::Polarization) - cubicForm(f, c - e, CubicMethod::Polarization);
    t *= 1.0 / (2 * d);
    dC.push_back(t);
  }
  auto G = [&](int m, int i, int j) { return cs.gamma[static_cast<std::size_t>(m)](i, j); };
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = dC[static_cast<std::size_t>(i)](j, k, l);
          for (int m = 0; m < n; ++m) v -= G(m, i, j) * C(m, k, l) + G(m, i, k) * C(j, m, l) + G(m, i, l) * C(j, k, m);
          const double target = g(i, j) * g(k, l) + g(i, k) * g(j, l) + g(i, l) * g(j, k);
          worst = std::max(worst, std::abs(v - target));
        }
  const double s = std::max(1.0, cs.metric.scale());
  return worst / (s * s);
}

double curvatureResidual(const std::vector<Mat>& gamma, const std::vector<std::vector<Mat>>& dGamma, const Mat& g) {
  const int n = static_cast<int>(g.rows());
  auto G = [&](int l, int i, int j) { return gamma[static_cast<std::size_t>(l)](i, j); };
  auto dG = [&](int d, int l, int i, int j) { return dGamma[static_cast<std::size_t>(d)][static_cast<std::size_t>(l)](i, j); };
  double worst = 0.0;
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double r = dG(i, l, j, k) - dG(j, l, i, k);
          for (int m = 0; m < n; ++m) r += G(l, i, m) * G(m, j, k) - G(l, j, m) * G(m, i, k);
          const double target = -(g(j, k) * (l == i ? 1.0 : 0.0) - g(i, k) * (l == j ? 1.0 : 0.0));
          worst = std::max(worst, std::abs(r - target));
        }
  return worst / std::max(1.0, g.cwiseAbs().maxCoeff());
}

double curvatureResidual(const ChartFrame& f, const Vec& c, double fdStep) {
  const double d = stepFor(f, c, fdStep);
  const auto cs = gaussSplit(f, c);
  return curvatureResidual(cs.gamma, gammaDerivatives(f, c, d), cs.metric.matrix());
}

double volumeParallelResidual(const ChartFrame& f, const Vec& c, double fdStep) {
  const int n = f.n();
  const double d = stepFor(f, c, fdStep);
  const double nu = volumeForm(f, c);
  const auto cs = gaussSplit(f, c);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec e = Vec::Unit(n, i) * d;
    const double dnu = (volumeForm(f, c + e) - volumeForm(f, c - e)) / (2 * d);
    double trace = 0.0;
    for (int j = 0; j < n; ++j) trace += cs.gamma[static_cast<std::size_t>(j)](j, i);
    worst = std::max(worst, std::abs(dnu - trace * nu));
  }
  return worst / std::abs(nu);
}

}  // namespace centro
