#pragma once

#include "centro/types.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <utility>

namespace centro {

/// Relative zero threshold for eigenvalues of symmetric forms.
inline constexpr double kDefaultFormTol = 1e-9;

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  double tol = 0.0;

  int dim() const { return positive + negative + zero; }
  bool isLorentzian() const { return negative == 1 && zero == 0 && positive == dim() - 1; }
  bool operator==(const Signature& o) const {
    return positive == o.positive && negative == o.negative && zero == o.zero;
  }
};

/// Symmetric bilinear form on R^d. Only the upper triangle of the input is read,
/// so symmetry holds exactly.
template <typename Scalar>
class SymmetricForm {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  SymmetricForm() = default;
  explicit SymmetricForm(const Matrix& m) : m_(m.template selfadjointView<Eigen::Upper>()) {
    if (m.rows() != m.cols()) throw PreconditionError("symmetric form needs a square matrix");
  }

  static SymmetricForm zero(Eigen::Index d) { return SymmetricForm(Matrix::Zero(d, d)); }

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Scalar operator()(const Vector& u, const Vector& v) const { return u.dot(m_ * v); }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  /// Max absolute entry; the magnitude used for relative tolerances.
  Scalar scale() const { return m_.size() == 0 ? Scalar(0) : m_.cwiseAbs().maxCoeff(); }

  Vector eigenvalues() const {
    if (dim() == 0) return Vector();
    Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }

  Scalar determinant() const { return dim() == 0 ? Scalar(1) : m_.determinant(); }

  SymmetricForm operator*(Scalar s) const { return SymmetricForm(m_ * s); }
  friend SymmetricForm operator+(const SymmetricForm& a, const SymmetricForm& b) { return SymmetricForm(a.m_ + b.m_); }
  friend SymmetricForm operator-(const SymmetricForm& a, const SymmetricForm& b) { return SymmetricForm(a.m_ - b.m_); }

 private:
  Matrix m_;
};

using Form = SymmetricForm<double>;

/// Eigenvalues with |lambda| <= tol * max(1, scale) count as zero.
template <typename Scalar>
Signature signature(const SymmetricForm<Scalar>& f, double tol = kDefaultFormTol) {
  if (!(tol > 0)) throw PreconditionError("signature tolerance must be positive");
  Signature s;
  s.tol = tol;
  const double thresh = tol * std::max(1.0, static_cast<double>(f.scale()));
  const auto ev = f.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double l = static_cast<double>(ev[i]);
    if (std::abs(l) <= thresh)
      ++s.zero;
    else if (l > 0)
      ++s.positive;
    else
      ++s.negative;
  }
  return s;
}

/// Gram matrix f(b_i, b_j) for the columns of `basis`, which must be independent.
template <typename Scalar>
SymmetricForm<Scalar> restrict(const SymmetricForm<Scalar>& f,
                               const typename SymmetricForm<Scalar>::Matrix& basis,
                               double tol = kDefaultFormTol) {
  using Matrix = typename SymmetricForm<Scalar>::Matrix;
  if (basis.cols() == 0) return SymmetricForm<Scalar>(Matrix::Zero(0, 0));
  if (basis.rows() != f.dim()) throw PreconditionError("basis vectors have the wrong dimension");
  const Matrix gram = basis.transpose() * basis;
  const SymmetricForm<Scalar> g(gram);
  if (signature(g, tol).zero > 0) throw PreconditionError("restriction basis is rank deficient");
  return SymmetricForm<Scalar>(basis.transpose() * f.matrix() * basis);
}

/// sign = +1 for positive definite, -1 for negative definite. Empty forms are definite.
template <typename Scalar>
bool isDefinite(const SymmetricForm<Scalar>& f, int sign, double tol = kDefaultFormTol) {
  const Signature s = signature(f, tol);
  return sign > 0 ? s.positive == s.dim() : s.negative == s.dim();
}

/// (positive semidefinite?, kernel dimension).
template <typename Scalar>
std::pair<bool, int> psdWithKernelDim(const SymmetricForm<Scalar>& f, double tol = kDefaultFormTol) {
  const Signature s = signature(f, tol);
  return {s.negative == 0, s.zero};
}

}  // namespace centro
