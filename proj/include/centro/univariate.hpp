#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

namespace centro {

/// Dense univariate polynomial, coefficients in ascending powers of t.
template <typename Scalar>
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  UnivariatePolynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static UnivariatePolynomial monomial(int power, Scalar coeff = Scalar(1)) {
    std::vector<Scalar> c(static_cast<std::size_t>(power) + 1, Scalar(0));
    c.back() = coeff;
    return UnivariatePolynomial(std::move(c));
  }

  /// Degree; the zero polynomial reports -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }

  Scalar coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar operator()(Scalar t) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  /// Sum of |c_i| |t|^i: the natural magnitude against which p(t) is rounded.
  Scalar magnitudeAt(Scalar t) const {
    Scalar acc(0);
    const Scalar a = std::abs(t);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + std::abs(*it);
    return acc;
  }

  Scalar maxAbsCoeff() const {
    Scalar m(0);
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  UnivariatePolynomial derivative(int order = 1) const {
    std::vector<Scalar> d = c_;
    for (int o = 0; o < order && !d.empty(); ++o) {
      std::vector<Scalar> next;
      for (std::size_t i = 1; i < d.size(); ++i) next.push_back(d[i] * Scalar(static_cast<double>(i)));
      d = std::move(next);
    }
    return UnivariatePolynomial(std::move(d));
  }

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UnivariatePolynomial(std::move(c));
  }

  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a + b * Scalar(-1);
  }

  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePolynomial(std::move(c));
  }

  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, Scalar s) {
    std::vector<Scalar> c = a.c_;
    for (auto& v : c) v *= s;
    return UnivariatePolynomial(std::move(c));
  }
  friend UnivariatePolynomial operator*(Scalar s, const UnivariatePolynomial& a) { return a * s; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

template <typename Scalar>
struct RealRoot {
  Scalar value;
  int multiplicity;
};

/// Real roots with multiplicity, ascending.
///
/// Eigenvalues of the companion matrix are clustered; a cluster of size m is
/// polished by Newton iteration on the (m-1)-th derivative, which restores full
/// precision for touching (even-multiplicity) zeros that a sign test would miss.
template <typename Scalar>
std::vector<RealRoot<Scalar>> realRoots(const UnivariatePolynomial<Scalar>& poly,
                                        Scalar relTrim = Scalar(1e-14)) {
  std::vector<Scalar> c = poly.coeffs();
  const Scalar scale = poly.maxAbsCoeff();
  while (!c.empty() && std::abs(c.back()) <= relTrim * scale) c.pop_back();
  const int deg = static_cast<int>(c.size()) - 1;
  std::vector<RealRoot<Scalar>> out;
  if (deg < 1) return out;
  const UnivariatePolynomial<Scalar> p(c);

  // Zero roots are split off exactly so the eigenproblem never sees them.
  int zeroMult = 0;
  while (zeroMult < deg && c[static_cast<std::size_t>(zeroMult)] == Scalar(0)) ++zeroMult;
  std::vector<Scalar> reduced(c.begin() + zeroMult, c.end());
  const int rdeg = static_cast<int>(reduced.size()) - 1;

  std::vector<std::pair<Scalar, Scalar>> eig;
  if (rdeg == 1) {
    eig.emplace_back(-reduced[0] / reduced[1], Scalar(0));
  } else if (rdeg > 1) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Matrix comp = Matrix::Zero(rdeg, rdeg);
    for (int i = 1; i < rdeg; ++i) comp(i, i - 1) = Scalar(1);
    for (int i = 0; i < rdeg; ++i) comp(i, rdeg - 1) = -reduced[static_cast<std::size_t>(i)] / reduced.back();
    Eigen::EigenSolver<Matrix> es(comp, false);
    for (int i = 0; i < rdeg; ++i) eig.emplace_back(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
  }

  const Scalar looseTol = Scalar(1e-5);
  std::vector<Scalar> candidates;
  for (const auto& [re, im] : eig)
    if (std::abs(im) <= looseTol * (Scalar(1) + std::abs(re))) candidates.push_back(re);
  std::sort(candidates.begin(), candidates.end());

  std::size_t i = 0;
  while (i < candidates.size()) {
    std::size_t j = i + 1;
    while (j < candidates.size() &&
           std::abs(candidates[j] - candidates[j - 1]) <= looseTol * (Scalar(1) + std::abs(candidates[j])))
      ++j;
    const int mult = static_cast<int>(j - i);
    Scalar r(0);
    for (std::size_t q = i; q < j; ++q) r += candidates[q];
    r /= Scalar(static_cast<double>(mult));
    const auto f = p.derivative(mult - 1);
    const auto df = f.derivative();
    for (int it = 0; it < 60; ++it) {
      const Scalar d = df(r);
      if (d == Scalar(0)) break;
      const Scalar step = f(r) / d;
      r -= step;
      if (std::abs(step) <= Scalar(1e-16) * (Scalar(1) + std::abs(r))) break;
    }
    if (std::abs(p(r)) <= Scalar(1e-9) * p.magnitudeAt(r)) out.push_back({r, mult});
    i = j;
  }
  if (zeroMult > 0) out.push_back({Scalar(0), zeroMult});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

}  // namespace centro
