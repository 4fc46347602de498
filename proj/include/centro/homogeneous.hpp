#pragma once

#include "centro/polynomial.hpp"
#include "centro/types.hpp"
#include "centro/univariate.hpp"

#include <functional>
#include <memory>

namespace centro {

/// A smooth positively homogeneous function of real degree k > 1 given by
/// closed-form derivative callables on an open cone.
class SmoothHomogeneousMap {
 public:
  using ValueFn = std::function<double(const Vec&)>;
  using GradientFn = std::function<Vec(const Vec&)>;
  using HessianFn = std::function<Mat(const Vec&)>;
  using ThirdFn = std::function<Tensor3(const Vec&)>;
  using DomainFn = std::function<bool(const Vec&)>;

  SmoothHomogeneousMap(int dim, double degree, ValueFn value, GradientFn gradient, HessianFn hessian,
                       ThirdFn third, DomainFn domain);

  int dim() const { return dim_; }
  double degree() const { return degree_; }
  bool inDomain(const Vec& x) const { return domain_(x); }

  double value(const Vec& x) const;
  Vec gradient(const Vec& x) const;
  Mat hessian(const Vec& x) const;
  Tensor3 thirdTensor(const Vec& x) const;

 private:
  void require(const Vec& x) const;

  int dim_;
  double degree_;
  ValueFn value_;
  GradientFn gradient_;
  HessianFn hessian_;
  ThirdFn third_;
  DomainFn domain_;
};

/// Either a homogeneous polynomial or a general smooth homogeneous map behind
/// one derivative interface. Polynomial-only routes query `polynomial()`.
class HomogeneousFunction {
 public:
  HomogeneousFunction(HomogeneousPolynomial p);  // NOLINT(google-explicit-constructor)
  HomogeneousFunction(SmoothHomogeneousMap m);   // NOLINT(google-explicit-constructor)

  int dim() const { return map_->dim(); }
  double degree() const { return map_->degree(); }
  bool inDomain(const Vec& x) const { return map_->inDomain(x); }

  double value(const Vec& x) const { return map_->value(x); }
  Vec gradient(const Vec& x) const { return map_->gradient(x); }
  Mat hessian(const Vec& x) const { return map_->hessian(x); }
  Tensor3 thirdTensor(const Vec& x) const { return map_->thirdTensor(x); }

  /// Null for non-polynomial maps.
  const HomogeneousPolynomial* polynomial() const { return poly_.get(); }
  const SmoothHomogeneousMap& map() const { return *map_; }

 private:
  std::shared_ptr<const HomogeneousPolynomial> poly_;
  std::shared_ptr<const SmoothHomogeneousMap> map_;
};

/// t -> h(x + t v), exact coefficients for polynomials, callables otherwise.
class UnivariateRestriction {
 public:
  static UnivariateRestriction of(const HomogeneousFunction& h, const Vec& x, const Vec& v);

  const Vec& base() const { return x_; }
  const Vec& direction() const { return v_; }
  bool isPolynomial() const { return poly_.has_value(); }
  /// Only for polynomial sources.
  const UnivariatePolynomial<double>& coefficients() const;

  double operator()(double t) const;
  double derivative(double t) const;
  double secondDerivative(double t) const;

 private:
  UnivariateRestriction(HomogeneousFunction h, Vec x, Vec v) : h_(std::move(h)), x_(std::move(x)), v_(std::move(v)) {}

  HomogeneousFunction h_;
  Vec x_;
  Vec v_;
  std::optional<UnivariatePolynomial<double>> poly_;
};

inline UnivariateRestriction restrictToLine(const HomogeneousFunction& h, const Vec& x, const Vec& v) {
  return UnivariateRestriction::of(h, x, v);
}

/// <x, grad h(x)> - k h(x).
double eulerResidual(const HomogeneousFunction& h, const Vec& x);

/// max-norm of Hess h_x(x, .) - (k-1) dh_x.
double positionIdentityResidual(const HomogeneousFunction& h, const Vec& x);

/// Polarization of a cubic polynomial; throws for any other degree.
Tensor3 polarization(const HomogeneousPolynomial& h);

/// Largest relative violation of grad^l h(lambda x) = lambda^{k-l} grad^l h(x), l = 0..3.
double scalingCovarianceResidual(const HomogeneousFunction& h, const Vec& x, double lambda);

/// Wraps a polynomial with overridden derivative callables; used to build
/// deliberately inconsistent inputs for the negative-control checks.
SmoothHomogeneousMap mapFromPolynomial(const HomogeneousPolynomial& p);

}  // namespace centro
