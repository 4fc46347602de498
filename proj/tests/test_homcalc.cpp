#include "doctest.h"

#include "centro/catalog.hpp"
#include "centro/homogeneous.hpp"
#include "centro/polynomial.hpp"

#include <random>

using namespace centro;

namespace {

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("parse x^3 - x*y^2") {
  const auto h = parsePolynomial("x^3 - x*y^2");
  CHECK(h.dim() == 2);
  CHECK(h.degree() == 3);
  CHECK(h.terms().size() == 2);
  CHECK(h.coefficient({3, 0}) == 1.0);
  CHECK(h.coefficient({1, 2}) == -1.0);
}

TEST_CASE("parse x^2*y") {
  const auto h = parsePolynomial("x^2*y");
  CHECK(h.degree() == 3);
  CHECK(h.coefficient({2, 1}) == 1.0);
  CHECK(h.terms().size() == 1);
}

TEST_CASE("mixed degree is rejected with both monomials named") {
  try {
    parsePolynomial("x^3 + x^2");
    FAIL("expected MixedDegreeError");
  } catch (const MixedDegreeError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("x^3") != std::string::npos);
    CHECK(msg.find("x^2") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(parsePolynomial("x^3 + * y^3"), ParseError);
  try {
    parsePolynomial("x^2*y + 2*q^3");
  } catch (const ParseError& e) {
    CHECK(e.position() == 10);
  }
  CHECK_THROWS_AS(parsePolynomial("x^2 + x0^2"), ParseError);
}

TEST_CASE("text and json round trips") {
  for (const char* s : {"x^3 - x*y^2", "x^2*y", "0.25*x*y*z - 3*z^3 + 1e-3*x^2*z", "x0^2*x4 - 2.5*x1*x2*x3"}) {
    const auto h = parsePolynomial(s);
    CHECK((parsePolynomial(toText(h), h.dim()) == h));
    CHECK((polynomialFromJson(polynomialToJson(h)) == h));
  }
  const auto j = polynomialFromJson(R"({"dim":2,"degree":3,"terms":[{"exp":[3,0],"c":1.0},{"exp":[1,2],"c":-1.0}]})");
  CHECK((j == parsePolynomial("x^3 - x*y^2")));
  CHECK_THROWS(polynomialFromJson(R"({"dim":2,"degree":2,"terms":[{"exp":[3,0],"c":1.0}]})"));
}

TEST_CASE("evaluate") {
  CHECK(parsePolynomial("x^3 - x*y^2").value(v2(1, 0)) == 1.0);
  CHECK(parsePolynomial("x^2*y").value(v2(2, 1)) == 4.0);
  const auto a = analyticExample(2.0);
  CHECK(a.value(v2(1, 1)) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(a.value(v2(-1, 1)), DomainError);
}

TEST_CASE("hessian examples") {
  const Mat h1 = parsePolynomial("x^3 - x*y^2").hessian(v2(1, 0));
  Mat e1(2, 2);
  e1 << 6, 0, 0, -2;
  CHECK((h1 - e1).norm() == 0.0);
  const Mat h2 = parsePolynomial("x^2*y").hessian(v2(1, 1));
  Mat e2(2, 2);
  e2 << 2, 2, 2, 0;
  CHECK((h2 - e2).norm() == 0.0);
  for (const char* s : {"x^2 - y^2 - z^2", "x*y*z", "x^4 + y^4 - 3*x^2*z^2"}) {
    const auto h = parsePolynomial(s);
    CHECK(h.gradient(Vec::Zero(h.dim())).norm() == 0.0);
  }
}

TEST_CASE("euler residual") {
  const auto h = parsePolynomial("x^3 - x*y^2");
  CHECK(std::abs(eulerResidual(h, v2(2, 1))) <= 1e-12);
  Vec x(2);
  x << 1, 2;
  CHECK(std::abs(eulerResidual(analyticExample(3.0), x)) <= 1e-10);

  // Gradient of x^3 - x*y^2 paired with a value table for x^3 + x*y^2.
  const auto good = parsePolynomial("x^3 - x*y^2");
  const auto bad = parsePolynomial("x^3 + x*y^2");
  auto gp = std::make_shared<HomogeneousPolynomial>(good);
  auto bp = std::make_shared<HomogeneousPolynomial>(bad);
  SmoothHomogeneousMap corrupted(
      2, 3.0, [bp](const Vec& z) { return bp->value(z); }, [gp](const Vec& z) { return gp->gradient(z); },
      [gp](const Vec& z) { return gp->hessian(z); }, [gp](const Vec& z) { return gp->thirdTensor(z); },
      [](const Vec&) { return true; });
  CHECK(std::abs(eulerResidual(corrupted, v2(2, 1))) > 1.0);
}

TEST_CASE("euler and scaling covariance on random points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-2, 2), L(0.1, 10);
  for (const char* s : {"x^3 - x*y^2", "x^2*y", "x*y*z", "x^4 - 2*x^2*y*z + 0.5*y^3*z"}) {
    const auto h = parsePolynomial(s);
    for (int i = 0; i < 1000; ++i) {
      Vec x(h.dim());
      for (int j = 0; j < h.dim(); ++j) x[j] = U(rng);
      const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
      CHECK(std::abs(eulerResidual(h, x)) <= 1e-12 * (1 + std::abs(h.value(x))) * std::pow(scale, h.degree()));
      if (i < 100) CHECK(scalingCovarianceResidual(h, x, L(rng)) <= 1e-10);
    }
  }
}

TEST_CASE("position identity") {
  CHECK(positionIdentityResidual(parsePolynomial("x^2*y"), v2(1, 1)) == 0.0);
  const Vec hx = parsePolynomial("x^2*y").hessian(v2(1, 1)) * v2(1, 1);
  CHECK(hx[0] == 4.0);
  CHECK(hx[1] == 2.0);
  Vec z(3);
  z << 0.3, -1.7, 2.2;
  CHECK(positionIdentityResidual(parsePolynomial("x^2 - 3*y*z + z^2"), z) == 0.0);
  CHECK(positionIdentityResidual(analyticExample(2.0), v2(1, 1)) <= 1e-9);
  CHECK(positionIdentityResidual(analyticExample(2.7), v2(0.3, 2)) <= 1e-9);
}

TEST_CASE("restriction to lines") {
  const auto r1 = restrictToLine(parsePolynomial("x^3 - x*y^2"), v2(1, 0), v2(0, 1));
  REQUIRE(r1.isPolynomial());
  const auto& c1 = r1.coefficients();
  CHECK(c1.degree() == 2);
  CHECK(c1.coeff(0) == 1.0);
  CHECK(c1.coeff(1) == 0.0);
  CHECK(c1.coeff(2) == -1.0);

  const auto h2 = parsePolynomial("x^2*y");
  const auto r2 = restrictToLine(h2, v2(1, 1), v2(1, -2));
  const UnivariatePolynomial<double> oracle = UnivariatePolynomial<double>{1, 1} * UnivariatePolynomial<double>{1, 1} *
                                              UnivariatePolynomial<double>{1, -2};
  for (int i = 0; i <= 3; ++i) CHECK(r2.coefficients().coeff(i) == doctest::Approx(oracle.coeff(i)));
  for (int i = 0; i < 50; ++i) {
    const double t = -1.5 + 3.0 * i / 49.0;
    const double direct = h2.value(v2(1 + t, 1 - 2 * t));
    CHECK(std::abs(r2(t) - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
  }
  CHECK_THROWS_AS(restrictToLine(h2, v2(1, 1), v2(0, 0)), PreconditionError);

  const auto ra = restrictToLine(analyticExample(2.0), v2(0.5, 0.5), v2(1, -1));
  CHECK_FALSE(ra.isPolynomial());
  CHECK(ra(0.0) == doctest::Approx(1.0 / 16));
}

TEST_CASE("polarization") {
  const auto h = parsePolynomial("x^2*y");
  const Tensor3 H = polarization(h);
  CHECK(H(0, 0, 1) == doctest::Approx(1.0 / 3));
  CHECK(H(0, 0, 0) == 0.0);
  CHECK(H(0, 1, 1) == 0.0);
  CHECK(H(1, 1, 1) == 0.0);
  CHECK(H.contract(v2(1, -2), v2(1, -2), v2(1, -2)) == doctest::Approx(-2.0));
  CHECK(polarization(parsePolynomial("x^3", 1))(0, 0, 0) == 1.0);
  CHECK_THROWS(polarization(parsePolynomial("x^4 + y^4")));

  std::mt19937_64 rng(3);
  std::normal_distribution<double> N;
  const auto c = parsePolynomial("x^3 - 2*x*y*z + 0.5*y^2*z - z^3");
  const Tensor3 Hc = polarization(c);
  for (int i = 0; i < 100; ++i) {
    Vec v(3);
    for (int j = 0; j < 3; ++j) v[j] = N(rng);
    CHECK(std::abs(Hc.contract(v, v, v) - c.value(v)) <= 1e-12 * std::max(1.0, std::abs(c.value(v))));
  }
}

TEST_CASE("substitution and powers of linear forms") {
  const auto h = parsePolynomial("x^2*y");
  Mat m(2, 2);
  m << 1, 2, -1, 3;
  const auto s = h.substitute(m);
  for (int i = 0; i < 10; ++i) {
    const Vec y = v2(0.3 * i - 1, 0.7 - 0.2 * i);
    CHECK(s.value(y) == doctest::Approx(h.value(m * y)));
  }
  const auto p = HomogeneousPolynomial::powerOfLinearForm(v2(1, -2), 3);
  CHECK(p.value(v2(0.5, 1.0)) == doctest::Approx(std::pow(0.5 - 2.0, 3)));
}

TEST_CASE("analytic map derivatives agree with central differences") {
  for (double k : {1.5, 2.0, 3.0}) {
    const auto h = analyticExample(k);
    const Vec x = v2(0.7, 1.3);
    const double step = 1e-5;
    for (int i = 0; i < 2; ++i) {
      Vec e = Vec::Zero(2);
      e[i] = step;
      const double dv = (h.value(x + e) - h.value(x - e)) / (2 * step);
      CHECK(dv == doctest::Approx(h.gradient(x)[i]).epsilon(1e-7));
      const Vec dg = (h.gradient(x + e) - h.gradient(x - e)) / (2 * step);
      const Mat H = h.hessian(x);
      for (int j = 0; j < 2; ++j) CHECK(std::abs(dg[j] - H(i, j)) <= 1e-7 * std::max(1.0, std::abs(H(i, j))));
      const Mat dH = (h.hessian(x + e) - h.hessian(x - e)) / (2 * step);
      const Tensor3 T = h.thirdTensor(x);
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) CHECK(std::abs(dH(j, l) - T(i, j, l)) <= 1e-7 * std::max(1.0, std::abs(T(i, j, l))));
    }
  }
}
