#include "centro/homogeneous.hpp"

namespace centro {

SmoothHomogeneousMap::SmoothHomogeneousMap(int dim, double degree, ValueFn value, GradientFn gradient,
                                           HessianFn hessian, ThirdFn third, DomainFn domain)
    : dim_(dim),
      degree_(degree),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      hessian_(std::move(hessian)),
      third_(std::move(third)),
      domain_(std::move(domain)) {
  if (dim < 1) throw PreconditionError("map dimension must be positive");
  if (!(degree > 1.0)) throw PreconditionError("homogeneity degree of a map must exceed 1");
}

void SmoothHomogeneousMap::require(const Vec& x) const {
  if (x.size() != dim_) throw PreconditionError("point has wrong dimension");
  if (!domain_(x)) throw DomainError("point lies outside the domain cone of the map");
}

double SmoothHomogeneousMap::value(const Vec& x) const {
  require(x);
  return value_(x);
}

Vec SmoothHomogeneousMap::gradient(const Vec& x) const {
  require(x);
  return gradient_(x);
}

Mat SmoothHomogeneousMap::hessian(const Vec& x) const {
  require(x);
  return hessian_(x);
}

Tensor3 SmoothHomogeneousMap::thirdTensor(const Vec& x) const {
  require(x);
  return third_(x);
}

SmoothHomogeneousMap mapFromPolynomial(const HomogeneousPolynomial& p) {
  auto shared = std::make_shared<const HomogeneousPolynomial>(p);
  return SmoothHomogeneousMap(
      p.dim(), p.degree(), [shared](const Vec& x) { return shared->value(x); },
      [shared](const Vec& x) { return shared->gradient(x); }, [shared](const Vec& x) { return shared->hessian(x); },
      [shared](const Vec& x) { return shared->thirdTensor(x); }, [](const Vec&) { return true; });
}

HomogeneousFunction::HomogeneousFunction(HomogeneousPolynomial p)
    : poly_(std::make_shared<const HomogeneousPolynomial>(std::move(p))),
      map_(std::make_shared<const SmoothHomogeneousMap>(mapFromPolynomial(*poly_))) {}

HomogeneousFunction::HomogeneousFunction(SmoothHomogeneousMap m)
    : map_(std::make_shared<const SmoothHomogeneousMap>(std::move(m))) {}

UnivariateRestriction UnivariateRestriction::of(const HomogeneousFunction& h, const Vec& x, const Vec& v) {
  if (v.norm() == 0.0) throw PreconditionError("line direction must be nonzero");
  UnivariateRestriction r(h, x, v);
  if (const auto* p = h.polynomial()) r.poly_ = p->restrictToLine(x, v);
  return r;
}

const UnivariatePolynomial<double>& UnivariateRestriction::coefficients() const {
  if (!poly_) throw PreconditionError("restriction of a non-polynomial map has no coefficients");
  return *poly_;
}

double UnivariateRestriction::operator()(double t) const {
  if (poly_) return (*poly_)(t);
  return h_.value(x_ + t * v_);
}

double UnivariateRestriction::derivative(double t) const {
  if (poly_) return poly_->derivative()(t);
  return h_.gradient(x_ + t * v_).dot(v_);
}

double UnivariateRestriction::secondDerivative(double t) const {
  if (poly_) return poly_->derivative(2)(t);
  return v_.dot(h_.hessian(x_ + t * v_) * v_);
}

double eulerResidual(const HomogeneousFunction& h, const Vec& x) {
  return x.dot(h.gradient(x)) - h.degree() * h.value(x);
}

double positionIdentityResidual(const HomogeneousFunction& h, const Vec& x) {
  const Vec lhs = h.hessian(x) * x;
  const Vec rhs = (h.degree() - 1.0) * h.gradient(x);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

Tensor3 polarization(const HomogeneousPolynomial& h) { return h.polarization(); }

double scalingCovarianceResidual(const HomogeneousFunction& h, const Vec& x, double lambda) {
  const double k = h.degree();
  const Vec y = lambda * x;
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  double worst = rel(h.value(y), std::pow(lambda, k) * h.value(x));
  const Vec g0 = std::pow(lambda, k - 1.0) * h.gradient(x);
  const Vec g1 = h.gradient(y);
  const double gs = std::max(1.0, g0.cwiseAbs().maxCoeff());
  worst = std::max(worst, (g1 - g0).cwiseAbs().maxCoeff() / gs);
  const Mat h0 = std::pow(lambda, k - 2.0) * h.hessian(x);
  const Mat h1 = h.hessian(y);
  worst = std::max(worst, (h1 - h0).cwiseAbs().maxCoeff() / std::max(1.0, h0.cwiseAbs().maxCoeff()));
  Tensor3 t0 = h.thirdTensor(x);
  t0 *= std::pow(lambda, k - 3.0);
  const Tensor3 t1 = h.thirdTensor(y);
  worst = std::max(worst, (t1 - t0).maxAbs() / std::max(1.0, t0.maxAbs()));
  return worst;
}

}  // namespace centro
