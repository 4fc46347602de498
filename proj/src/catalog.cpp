#include "centro/catalog.hpp"

namespace centro {

namespace {

Vec vec(std::initializer_list<double> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double a : v) out[i++] = a;
  return out;
}

// q = xy/s with s = x + y, and its derivatives up to order three.
struct QJet {
  double q;
  double d1[2];
  double d2[2][2];
  double d3[2][2][2];
};

QJet qJet(double x, double y) {
  const double s = x + y, s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  QJet j{};
  j.q = x * y / s;
  j.d1[0] = y * y / s2;
  j.d1[1] = x * x / s2;
  j.d2[0][0] = -2 * y * y / s3;
  j.d2[0][1] = j.d2[1][0] = 2 * x * y / s3;
  j.d2[1][1] = -2 * x * x / s3;
  const double xxx = 6 * y * y / s4, xxy = (2 * y * y - 4 * x * y) / s4, xyy = (2 * x * x - 4 * x * y) / s4,
               yyy = 6 * x * x / s4;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const int ny = a + b + c;
        j.d3[a][b][c] = ny == 0 ? xxx : ny == 1 ? xxy : ny == 2 ? xyy : yyy;
      }
  return j;
}

}  // namespace

SmoothHomogeneousMap analyticExample(double k) {
  if (!(k > 1.0)) throw PreconditionError("analytic example needs k > 1");
  auto domain = [](const Vec& x) { return x.size() == 2 && x[0] > 0 && x[1] > 0; };
  auto value = [k](const Vec& x) { return std::pow(x[0] * x[1] / (x[0] + x[1]), k); };
  auto gradient = [k](const Vec& x) {
    const QJet j = qJet(x[0], x[1]);
    const double f1 = k * std::pow(j.q, k - 1);
    Vec g(2);
    g << f1 * j.d1[0], f1 * j.d1[1];
    return g;
  };
  auto hessian = [k](const Vec& x) {
    const QJet j = qJet(x[0], x[1]);
    const double f1 = k * std::pow(j.q, k - 1), f2 = k * (k - 1) * std::pow(j.q, k - 2);
    Mat H(2, 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) H(a, b) = f2 * j.d1[a] * j.d1[b] + f1 * j.d2[a][b];
    return H;
  };
  auto third = [k](const Vec& x) {
    const QJet j = qJet(x[0], x[1]);
    const double f1 = k * std::pow(j.q, k - 1), f2 = k * (k - 1) * std::pow(j.q, k - 2),
                 f3 = k * (k - 1) * (k - 2) * std::pow(j.q, k - 3);
    Tensor3 T(2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          T(a, b, c) = f3 * j.d1[a] * j.d1[b] * j.d1[c] +
                       f2 * (j.d2[a][b] * j.d1[c] + j.d2[a][c] * j.d1[b] + j.d2[b][c] * j.d1[a]) + f1 * j.d3[a][b][c];
    return T;
  };
  return SmoothHomogeneousMap(2, k, value, gradient, hessian, third, domain);
}

ChartFrame analyticChart(double k) {
  Mat basis(2, 1);
  basis << 1, -1;
  return ChartFrame::onHyperplane(analyticExample(k), vec({0.5, 0.5}), basis);
}

UnivariatePolynomial<double> quarticEta(double a) {
  if (!(a >= 0)) throw PreconditionError("quartic family needs a >= 0");
  const UnivariatePolynomial<double> base{0.0, 1.0, -1.0};
  const UnivariatePolynomial<double> shifted{-3.0 / 20, 1.0};
  return base * (shifted * shifted + UnivariatePolynomial<double>{51.0 / 400 + a});
}

UnivariatePolynomial<double> quarticP(double a) {
  const auto e = quarticEta(a);
  const auto d1 = e.derivative(), d2 = e.derivative(2);
  return 0.75 * (d1 * d1) - e * d2;
}

UnivariatePolynomial<double> quarticQ() { return {9.0, -24.0, -42.0, 188.0, -80.0}; }

UnivariatePolynomial<double> quarticPDisplayed(double a) {
  const UnivariatePolynomial<double> r{-3.0, 6.0, 14.0};
  return (3.0 / 1600.0) * (r * r) + (a / 40.0) * quarticQ() + (a * a / 4.0) * UnivariatePolynomial<double>{3.0, -4.0, 4.0};
}

double quarticX0() {
  for (const auto& r : realRoots(UnivariatePolynomial<double>{-3.0, 6.0, 14.0}))
    if (r.value >= 0 && r.value <= 1) return r.value;
  throw ConsistencyError("14x^2 + 6x - 3 has no root in [0, 1]");
}

double quarticRatio(double a, double x) {
  const auto e = quarticEta(a);
  const double d1 = e.derivative()(x);
  return e(x) * e.derivative(2)(x) / (d1 * d1);
}

HomogeneousPolynomial quarticPolynomial(double a) {
  if (!(a >= 0)) throw PreconditionError("quartic family needs a >= 0");
  // x y ((x - (3/20)(x + y))^2 + (51/400 + a)(x + y)^2)
  const double c = 51.0 / 400 + a;
  const double u = 17.0 / 20, v = -3.0 / 20;
  TermMap t;
  t[{3, 1}] = u * u + c;
  t[{2, 2}] = 2 * u * v + 2 * c;
  t[{1, 3}] = v * v + c;
  return HomogeneousPolynomial(2, t);
}

QuarticClaims quarticClaims() {
  QuarticClaims r;
  r.x0 = quarticX0();
  r.x0Closed = -3.0 / 14 + std::sqrt(51.0) / 14;
  r.q = quarticQ()(r.x0);
  r.etaPrime = quarticEta(0).derivative()(r.x0);
  r.pAtX0 = quarticP(0)(r.x0);
  for (double a : {1e-2, 1e-3, 1e-4}) {
    const auto P = quarticP(a);
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 10000; ++i) m = std::min(m, P(i / 10000.0));
    r.pMin.emplace_back(a, m);
  }
  for (double a : {1e-1, 1e-2, 1e-3, 1e-4}) r.ratio.emplace_back(a, quarticRatio(a, r.x0));
  for (double a : {0.0, 1.0}) {
    const auto P = quarticP(a), D = quarticPDisplayed(a);
    for (int i = 0; i < 100; ++i) {
      const double x = i / 99.0;
      r.expansionDeviation = std::max(r.expansionDeviation, std::abs(P(x) - D(x)));
    }
  }
  return r;
}

std::vector<CatalogEntry> cubicCurves() {
  return {
      {"cubic-regular", "x(x^2 - y^2) = 1, x > 0", parsePolynomial("x^3 - x*y^2"), vec({1, 0}), true, "complete",
       "cubic-criterion"},
      {"cubic-irregular", "x^2 y = 1, x > 0", parsePolynomial("x^2*y"), vec({1, 1}), false, "complete",
       "cubic-criterion"},
  };
}

std::vector<CatalogEntry> catalogCubics() {
  auto out = cubicCurves();
  out.push_back({"cubic-xyz", "xyz = 1 in the positive octant", parsePolynomial("x*y*z"), vec({1, 1, 1}), false,
                 "complete", "cubic-criterion"});
  return out;
}

std::vector<CatalogEntry> catalog() {
  auto out = catalogCubics();
  out.push_back({"cubic-nonclosed", "x^3 - x y^2 + y^3 through (1, 0); not closed", parsePolynomial("x^3 - x*y^2 + y^3"),
                 vec({1, 0}), std::nullopt, "", ""});
  out.push_back({"quadric-lorentz", "x^2 - y^2 - z^2 = 1, x > 0", parsePolynomial("x^2 - y^2 - z^2"), vec({1, 0, 0}),
                 true, "complete", "quadric"});
  out.push_back({"analytic", "(xy/(x+y))^2 on the quadrant", analyticExample(2.0), vec({1, 1}), std::nullopt,
                 "incomplete", "finite-length-witness"});
  out.push_back({"analytic-k3", "(xy/(x+y))^3 on the quadrant", analyticExample(3.0), vec({1, 1}), std::nullopt,
                 "incomplete", "finite-length-witness"});
  out.push_back({"quartic", "x y ((x - 3(x+y)/20)^2 + (51/400)(x+y)^2)", quarticPolynomial(0.0), vec({1, 1}),
                 std::nullopt, "", ""});
  return out;
}

CatalogEntry catalogEntry(const std::string& id) {
  for (auto& e : catalog())
    if (e.id == id) return e;
  throw PreconditionError("unknown catalog entry: " + id);
}

}  // namespace centro
