#include "doctest.h"

#include "centro/forms.hpp"

#include <random>

using namespace centro;

namespace {

Form form2(double a, double b, double c) {
  Mat m(2, 2);
  m << a, b, b, c;
  return Form(m);
}

}  // namespace

TEST_CASE("signature examples") {
  CHECK(signature(form2(6, 0, -2)) == Signature{1, 1, 0});
  CHECK(signature(Form::zero(3)) == Signature{0, 0, 3});
  CHECK(signature(form2(0, -2, 0)) == Signature{1, 1, 0});
  CHECK(signature(form2(6, 0, -2)).tol == kDefaultFormTol);
  CHECK_THROWS(signature(form2(1, 0, 1), 0.0));
}

TEST_CASE("only the upper triangle is read") {
  Mat m(2, 2);
  m << 1, 5, -100, 2;
  const Form f(m);
  CHECK(f(1, 0) == 5.0);
  CHECK(f(0, 1) == 5.0);
}

TEST_CASE("restrict") {
  const Form f = form2(2, 2, 0);
  Mat b(2, 1);
  b << 1, -2;
  const Form r = restrict(f, b);
  CHECK(r.dim() == 1);
  CHECK(r(0, 0) == -6.0);
  CHECK((restrict(f, Mat::Identity(2, 2)).matrix() - f.matrix()).norm() == 0.0);
  CHECK(restrict(f, Mat(2, 0)).dim() == 0);
  Mat dep(2, 2);
  dep << 1, 2, 1, 2;
  CHECK_THROWS_AS(restrict(f, dep), PreconditionError);
}

TEST_CASE("definiteness") {
  Mat m(1, 1);
  m << -6;
  CHECK(isDefinite(Form(m), -1));
  CHECK_FALSE(isDefinite(form2(6, 0, -2), 1));
  CHECK_FALSE(isDefinite(form2(6, 0, -2), -1));
  CHECK(isDefinite(Form::zero(0), 1));
  CHECK(isDefinite(Form::zero(0), -1));
}

TEST_CASE("psd with kernel") {
  CHECK(psdWithKernelDim(form2(0, 0, 3)) == std::pair<bool, int>{true, 1});
  CHECK(psdWithKernelDim(form2(0, -2, 0)) == std::pair<bool, int>{false, 0});
  CHECK(psdWithKernelDim(Form::zero(1)) == std::pair<bool, int>{true, 1});
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> N;
  std::uniform_real_distribution<double> U(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 4;
    Mat q = Mat::Zero(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) q(i, j) = N(rng);
    Eigen::HouseholderQR<Mat> qr(q);
    const Mat Q = qr.householderQ();
    Vec s(d);
    for (int i = 0; i < d; ++i) s[i] = std::pow(10.0, 1.5 * i / (d - 1));
    const Mat A = Q * s.asDiagonal();
    Vec ev(d);
    for (int i = 0; i < d; ++i) ev[i] = (i % 3 == 0) ? 0.0 : (U(rng) > 0 ? 1.0 : -1.0) * (0.5 + std::abs(U(rng)));
    const Form f(Q.transpose() * ev.asDiagonal() * Q);
    const Form g(A.transpose() * f.matrix() * A);
    CHECK(signature(f, 1e-8) == signature(g, 1e-8));
  }
}

TEST_CASE("lorentzian determinant sign") {
  Mat m(3, 3);
  m << -1, 0.2, 0, 0.2, 2, 0.1, 0, 0.1, 1;
  const Form f(m);
  const auto s = signature(f);
  CHECK(s.isLorentzian());
  CHECK(f.determinant() < 0);
  CHECK(restrict(f, Mat::Identity(3, 3) * 3.0).determinant() < 0);
}
