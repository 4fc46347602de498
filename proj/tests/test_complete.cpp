#include "doctest.h"

#include "centro/catalog.hpp"
#include "centro/complete.hpp"
#include "centro/sampling.hpp"

#include <sstream>

using namespace centro;

namespace {

Vec vec(std::initializer_list<double> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double a : v) out[i++] = a;
  return out;
}

Vec one(double t) { return Vec::Constant(1, t); }

// x^3 - x y^2 through (1, 0): chart coordinate t with chart point (1, +-t).
ChartFrame cubicPair() { return ChartFrame::atSeed(parsePolynomial("x^3 - x*y^2"), vec({1, 0})); }

// Chart of the quartic on {x + y = 1} with coordinate x - 1/2.
ChartFrame quarticLineChart(double a) {
  Mat b(2, 1);
  b << 1, -1;
  return ChartFrame::onHyperplane(quarticPolynomial(a), vec({0.5, 0.5}), b);
}

}  // namespace

TEST_CASE("segment test on x^3 - x y^2") {
  const auto f = cubicPair();
  const auto r = cubicSegmentTest(f, Vec::Zero(1), one(1));
  CHECK(r.a == doctest::Approx(-1));
  CHECK(r.b == doctest::Approx(1));
  // h0 = 1 - t^2 gives f0 = -4 identically.
  CHECK(r.maxF0 == doctest::Approx(-4));
  CHECK(r.f0a == doctest::Approx(-4));
  CHECK(r.endpointB == doctest::Approx(-4));
  CHECK(r.monotone);
  CHECK(r.pass);
  CHECK_THROWS_AS(cubicSegmentTest(f, Vec::Zero(1), one(0)), PreconditionError);
}

TEST_CASE("segment test on x^2 y lines") {
  const auto f = ChartFrame::atSeed(parsePolynomial("x^2*y"), vec({1, 1}));
  LineSampleSpec spec;
  spec.lines = 200;
  const auto s = cubicSegmentTest(f, spec);
  CHECK(s.pass);
  CHECK(s.lines.size() == 200);
  const auto& poly = *f.h().polynomial();
  for (const auto& r : s.lines) {
    const auto h0 = poly.restrictToLine(r.x, r.v);
    CHECK(std::abs(h0(r.a)) <= 1e-10 * r.scale);
    CHECK(std::abs(h0(r.b)) <= 1e-10 * r.scale);
    CHECK(std::abs(r.f0a - r.endpointA) <= 1e-9 * r.scale * r.scale);
    CHECK(r.monotone);
    // sqrt(h0) has nonpositive second differences.
    constexpr int m = 1000;
    const double w = (r.b - r.a) / (m + 1);
    int bad = 0;
    for (int i = 1; i < m - 1; ++i) {
      const double t = r.a + w * (i + 1);
      const double dd = std::sqrt(h0(t + w)) - 2 * std::sqrt(h0(t)) + std::sqrt(h0(t - w));
      if (dd > 1e-12 * std::sqrt(r.scale)) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("segment test reports non-closed pieces") {
  const auto f = ChartFrame::atSeed(parsePolynomial("x^3 - x*y^2 + y^3"), vec({1, 0}));
  const Vec up = f.basis().col(0)[1] > 0 ? one(1) : one(-1);
  try {
    cubicSegmentTest(f, Vec::Zero(1), up);
    FAIL("expected a closedness failure");
  } catch (const ClosednessFailure& e) {
    CHECK(e.direction()[1] > 0);
    // The witness half line stays in {h > 0}.
    const auto& h = f.h();
    for (double t : {1.0, 10.0, 1e3}) CHECK(h.value(e.origin() + t * e.direction()) > 0);
  }
  CHECK_THROWS_AS(cubicSegmentTest(f, LineSampleSpec{}), ClosednessFailure);
  CHECK_THROWS_AS(cubicSegmentTest(ChartFrame::atSeed(parsePolynomial("x^2 - y^2"), vec({1, 0})), LineSampleSpec{}),
                  PreconditionError);
}

TEST_CASE("concavity certificate") {
  const auto f = cubicPair();
  const auto r = concavityTest(f, 1.0, 500);
  CHECK(r.pass);
  CHECK(r.samples == 501);
  // sqrt(1 - t^2) has second derivative -(1 - t^2)^{-3/2}.
  for (double t : {0.0, 0.5, -0.9}) {
    const double s = f.basis().col(0).norm();
    CHECK(concavityEigenvalues(f, one(t / s), 1.0)[0] == doctest::Approx(-std::pow(1 - t * t, -1.5) / (s * s)));
  }
  CHECK_FALSE(concavityTest(f, 3.0 - 3.0 / 8, 500).pass);
  CHECK_THROWS_AS(concavityTest(f, 0.0), PreconditionError);
  CHECK_THROWS_AS(concavityTest(f, 3.0), PreconditionError);

  // At eps = k - 1 the function is h = u^k itself, which is convex near the ends.
  const auto a = analyticChart(2.0);
  const auto ra = concavityTest(a, 1.0, 500);
  CHECK_FALSE(ra.pass);
  REQUIRE(ra.witness);
  const double x = (*ra.witness)[0] + 0.5;
  const double u = x * (1 - x);
  CHECK(ra.witnessEigenvalue == doctest::Approx(2 * (1 - 2 * x) * (1 - 2 * x) - 4 * u));

  // Quartic along x + y = 1: eta^{1/3} fails to be concave near x0.
  const auto q = quarticLineChart(0.0);
  const double x0 = quarticX0();
  const auto eta = quarticEta(0.0);
  const auto d1 = eta.derivative(), d2 = eta.derivative(2);
  const double oracle = eta(x0) * d2(x0) - (2.0 / 3) * d1(x0) * d1(x0);
  CHECK(oracle > 0);
  CHECK(concavityEigenvalues(q, one(x0 - 0.5), 1.0)[0] > 0);
  CHECK_FALSE(concavityTest(q, 1.0, 500).pass);
  // eta^{1/4} is concave (P_0 >= 0), so eps -> 0 is fine along this line.
  CHECK(concavityEigenvalues(q, one(x0 - 0.5), 1e-12)[0] <= 1e-9);
}

TEST_CASE("log length bound") {
  const double c = logLengthConstant(3, 1);
  CHECK(c == doctest::Approx(1.0 / (3 * std::sqrt(2.0))));
  CHECK(logLengthBound(3, 1, 1, 1e-6) == doctest::Approx(c * std::log(1e6)));
  CHECK(logLengthBound(3, 1, 1, 1e-6) == doctest::Approx(13.815510557964274 / (3 * std::sqrt(2.0))));
  CHECK(logLengthBound(3, 1, 0.3, 0.3) == 0.0);

  const auto f = cubicPair();
  CurveTrace flat;
  flat.push(0, one(0), f.p(), 1.0, 0.0);
  flat.push(1, one(0), f.p(), 1.0, 0.0);
  CHECK(logLengthBound(f, flat, 1.0) == 0.0);

  Rng rng(7);
  const double s = f.basis().col(0).norm();
  for (int i = 0; i < 100; ++i) {
    const Vec c0 = one(rng.uniform(-0.999, 0.999) / s), c1 = one(rng.uniform(-0.999, 0.999) / s);
    const double len = curveLength(f, segmentPath(c0, c1), 1e-10);
    for (double eps : {0.375, 0.75, 1.5}) {
      CHECK(logLengthBound(3, eps, f.hval(c0), f.hval(c1)) <= len + 1e-10);
    }
  }
}

TEST_CASE("curve length of the analytic curve") {
  const auto a = analyticChart(2.0);
  const double full = curveLength(a, segmentPath(one(-0.5), one(0.5)), 1e-10);
  CHECK(std::abs(full - analyticTotalLength()) <= 1e-6);
  const double half = curveLength(a, segmentPath(one(-0.5), one(0.0)), 1e-10);
  CHECK(std::abs(half - analyticTotalLength() / 2) <= 1e-6);
  // x = sin^2(theta / 2) makes the integrand constant.
  ChartPath smooth{[](double th) { return one(std::sin(th / 2) * std::sin(th / 2) - 0.5); },
                   [](double th) { return one(std::sin(th / 2) * std::cos(th / 2)); }, 0.0, M_PI};
  CHECK(curveLength(a, smooth, 1e-12) == doctest::Approx(analyticTotalLength()).epsilon(1e-12));
  CHECK(curveLength(a, segmentPath(one(0.1), one(0.1)), 1e-10) == 0.0);
  CHECK_THROWS_AS(curveLength(a, segmentPath(one(0.0), one(0.7)), 1e-10), DomainError);
}

TEST_CASE("geodesics") {
  const auto a = analyticChart(2.0);
  CHECK_THROWS_AS(geodesicShoot(a, Vec::Zero(1), one(0)), PreconditionError);
  const auto ga = geodesicShoot(a, Vec::Zero(1), one(1));
  CHECK(ga.stop == GeodesicStop::Boundary);
  CHECK(std::abs(ga.length - analyticTotalLength() / 2) <= 1e-3);
  for (std::size_t i = 1; i < ga.trace.size(); ++i) CHECK(ga.trace.length[i] >= ga.trace.length[i - 1]);

  const auto f = cubicPair();
  GeodesicOptions opt;
  opt.boundaryFraction = 0;
  opt.minH = 1e-20;
  opt.maxLength = 100;
  const auto g = geodesicShoot(f, Vec::Zero(1), one(1), opt);
  CHECK(g.stop == GeodesicStop::MinH);
  CHECK(g.finalH <= 1e-20);
  CHECK(g.maxSpeedDrift <= 1e-6 * g.length);
  // In one dimension the geodesic is the curve; compare with quadrature.
  std::size_t mid = 0;
  while (g.trace.h[mid] > 1e-6) ++mid;
  const double q = curveLength(f, segmentPath(Vec::Zero(1), g.trace.coords[mid]), 1e-10);
  CHECK(g.trace.length[mid] == doctest::Approx(q).epsilon(1e-8));
  // Closed form of the length to the point where h = 1e-20 is about 22, well short of 50.
  CHECK(g.length == doctest::Approx(22.0).epsilon(0.02));
  for (std::size_t i = 0; i < g.trace.size(); ++i) {
    CHECK(g.trace.h[i] > 0);
    CHECK(logLengthBound(3, 1.5, 1.0, g.trace.h[i]) <= g.trace.length[i] + 1e-9);
  }

  std::ostringstream os;
  ga.trace.writeCsv(os);
  const std::string csv = os.str();
  CHECK(csv.rfind("t,c_1,x_0,x_1,h,cum_length\n", 0) == 0);
}

TEST_CASE("monomial criterion") {
  const auto r = n1MonomialTest(ChartFrame::atSeed(parsePolynomial("x^2*y"), vec({1, 1})));
  CHECK(r.pass);
  REQUIRE(r.faces.size() == 2);
  std::vector<int> ls{r.faces[0].l, r.faces[1].l};
  std::sort(ls.begin(), ls.end());
  CHECK(ls == std::vector<int>{1, 2});

  const auto q = n1MonomialTest(ChartFrame::atSeed(parsePolynomial("x*y^3"), vec({1, 1})));
  CHECK(q.pass);
  for (const auto& face : q.faces) {
    if (face.l == 1) CHECK(face.signValue == -2);
    if (face.l == 3) CHECK(face.signValue == 0);
  }
  CHECK(n1MonomialTest(cubicPair()).pass);
  CHECK_THROWS_AS(n1MonomialTest(ChartFrame::atSeed(parsePolynomial("x^3 - x*y^2 + y^3"), vec({1, 0}))),
                  PreconditionError);
  CHECK_THROWS_AS(n1MonomialTest(ChartFrame::atSeed(parsePolynomial("x*y*z"), vec({1, 1, 1}))), PreconditionError);
}

TEST_CASE("length witnesses") {
  const auto a = analyticChart(2.0);
  const auto w = incompletenessWitness(a);
  REQUIRE(w);
  CHECK(w->rays[0].finite);
  CHECK(w->rays[1].finite);
  CHECK(std::abs(w->length - analyticTotalLength()) <= 1e-5);

  const auto f = cubicPair();
  const auto r = rayLengthWitness(f, Vec::Zero(1), one(1));
  CHECK_FALSE(r.finite);
  CHECK_FALSE(incompletenessWitness(f).has_value());
}

TEST_CASE("completeness verdicts") {
  VerdictConfig cfg;
  cfg.segmentLines = 300;
  const auto v1 = completenessVerdict(cubicPair(), cfg);
  CHECK(v1.status == VerdictStatus::Complete);
  CHECK(v1.route == "cubic-criterion");
  CHECK_FALSE(v1.chartCoverageAssumed);

  const auto xy = ChartFrame::atSeed(parsePolynomial("x^2*y"), vec({1, 1}));
  const auto v2 = completenessVerdict(xy, cfg);
  CHECK(v2.status == VerdictStatus::Complete);
  CHECK(v2.route == "cubic-criterion");

  VerdictConfig noCubic = cfg;
  noCubic.useCubic = false;
  const auto v3 = completenessVerdict(xy, noCubic);
  REQUIRE(v3.regularity);
  CHECK_FALSE(v3.regularity->regular);
  CHECK(v3.status == VerdictStatus::Complete);
  CHECK(v3.route == "n1-monomial");
  const auto v4 = completenessVerdict(cubicPair(), noCubic);
  CHECK(v4.route == "regular-boundary");

  const auto va = completenessVerdict(ChartFrame::atSeed(analyticExample(2.0), vec({1, 1})), cfg);
  CHECK(va.status == VerdictStatus::Incomplete);
  CHECK(va.route == "finite-length-witness");
  REQUIRE(va.witness);
  CHECK(std::abs(va.witness->length - analyticTotalLength()) <= 1e-5);

  const auto vq = completenessVerdict(ChartFrame::atSeed(parsePolynomial("x^2 - y^2 - z^2"), vec({1, 0, 0})), cfg);
  CHECK(vq.route == "quadric");

  CHECK_THROWS_AS(completenessVerdict(ChartFrame::atSeed(parsePolynomial("x^2 + y^2 + z^2"), vec({1, 0, 0})), cfg),
                  PreconditionError);

  // Switching routes on only ever moves an inconclusive verdict to a decided one.
  VerdictConfig none = cfg;
  none.useQuadric = none.useCubic = none.useRegular = none.useMonomial = none.useConcavity = none.useWitness = false;
  for (const auto& e : catalogCubics()) {
    const auto fr = ChartFrame::atSeed(e.h, e.seed);
    const auto off = completenessVerdict(fr, none);
    CHECK(off.status == VerdictStatus::Inconclusive);
    VerdictConfig some = none;
    some.useRegular = some.useConcavity = true;
    const auto mid = completenessVerdict(fr, some);
    const auto all = completenessVerdict(fr, cfg);
    CHECK(all.status == VerdictStatus::Complete);
    CHECK(mid.status != VerdictStatus::Incomplete);
  }
}

TEST_CASE("moving frame and ambient geodesics agree on a curve") {
  const auto poly = parsePolynomial("x^2*y");
  const auto f = ChartFrame::atSeed(poly, vec({1, 1}));
  const auto m = ChartFrame::onHyperplane(HomogeneousFunction(mapFromPolynomial(poly)), f.p(), f.basis());
  GeodesicOptions opt;
  opt.maxLength = 4;
  const Vec dir = vec({-1});
  const auto a = geodesicShoot(f, Vec::Zero(1), dir, opt);
  const auto b = geodesicShoot(m, Vec::Zero(1), dir, opt);
  CHECK(a.stop == GeodesicStop::MaxLength);
  CHECK((a.trace.ambient.back() - b.trace.ambient.back()).norm() <= 1e-7 * a.trace.ambient.back().norm());
  CHECK(a.maxSpeedDrift <= 1e-8);
  CHECK(std::abs(poly.value(a.trace.ambient.back()) - 1) <= 1e-8);
}

TEST_CASE("long geodesic on x y z = 1 is a straight line in log coordinates") {
  // The metric is flat in the coordinates log x_i, so log y and log z are affine in t.
  const auto f = ChartFrame::atSeed(parsePolynomial("x*y*z"), vec({1, 1, 1}));
  GeodesicOptions opt;
  opt.maxLength = 20;
  opt.boundaryFraction = 0;
  const auto g = geodesicShoot(f, Vec::Zero(2), vec({0.654655, 0.755928}), opt);
  REQUIRE(g.stop == GeodesicStop::MaxLength);
  CHECK(g.maxSpeedDrift <= 1e-9);
  const auto& tr = g.trace;
  const std::size_t last = tr.size() - 1, mid = last / 2;
  for (int i : {1, 2}) {
    auto lg = [&](std::size_t j) { return std::log(tr.ambient[j][i]); };
    const double slope = (lg(last) - lg(0)) / (tr.t[last] - tr.t[0]);
    CHECK(std::abs(lg(mid) - lg(0) - slope * (tr.t[mid] - tr.t[0])) <= 1e-7 * std::abs(lg(last)));
  }
  CHECK(g.finalH < 1e-15);
}
