#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace centro {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point was handed to a map outside of its open domain cone.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A ray or line inside the cone that never meets the boundary: the level set
/// component is not closed in the ambient space.
class ClosednessFailure : public Error {
 public:
  ClosednessFailure(const std::string& what, Eigen::VectorXd origin, Eigen::VectorXd direction)
      : Error(what), origin_(std::move(origin)), direction_(std::move(direction)) {}
  const Eigen::VectorXd& origin() const { return origin_; }
  const Eigen::VectorXd& direction() const { return direction_; }

 private:
  Eigen::VectorXd origin_;
  Eigen::VectorXd direction_;
};

/// Dense symmetric 3-tensor on R^d, stored in full for simple indexing.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {}

  int dim() const { return dim_; }

  double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

  /// T(u, v, w).
  double contract(const Vec& u, const Vec& v, const Vec& w) const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) s += (*this)(i, j, k) * u[i] * v[j] * w[k];
    return s;
  }

  /// The covector T(u, v, .).
  Vec contract(const Vec& u, const Vec& v) const {
    Vec out = Vec::Zero(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) out[k] += (*this)(i, j, k) * u[i] * v[j];
    return out;
  }

  /// The bilinear form T(u, ., .).
  Mat contract(const Vec& u) const {
    Mat out = Mat::Zero(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) out(j, k) += (*this)(i, j, k) * u[i];
    return out;
  }

  /// Pull back along the linear map given by the columns of `frame`.
  Tensor3 pullback(const Mat& frame) const {
    const int m = static_cast<int>(frame.cols());
    Tensor3 out(m);
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b)
        for (int c = b; c < m; ++c) {
          const double v = contract(frame.col(a), frame.col(b), frame.col(c));
          out.setSymmetric(a, b, c, v);
        }
    return out;
  }

  void setSymmetric(int i, int j, int k, double v) {
    (*this)(i, j, k) = v;
    (*this)(i, k, j) = v;
    (*this)(j, i, k) = v;
    (*this)(j, k, i) = v;
    (*this)(k, i, j) = v;
    (*this)(k, j, i) = v;
  }

  double maxAbs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Largest deviation from total symmetry.
  double asymmetry() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) {
          const double v = (*this)(i, j, k);
          m = std::max({m, std::abs(v - (*this)(j, i, k)), std::abs(v - (*this)(i, k, j)),
                        std::abs(v - (*this)(k, j, i))});
        }
    return m;
  }

  Tensor3& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }

  friend Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
    Tensor3 out(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }

  int dim_ = 0;
  std::vector<double> data_;
};

}  // namespace centro
