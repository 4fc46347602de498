#pragma once

#include "centro/types.hpp"
#include "centro/univariate.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace centro {

using ExponentVector = std::vector<int>;

/// Graded lexicographic order; the leading term comes first.
struct GradedLexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

using TermMap = std::map<ExponentVector, double, GradedLexGreater>;

/// Raised by the text and JSON readers.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class MixedDegreeError : public Error {
 public:
  using Error::Error;
};

/// Homogeneous polynomial on R^{dim} with exact (symbolic) differentiation.
class HomogeneousPolynomial {
 public:
  /// Collects terms, drops zero coefficients and checks a common degree >= 2.
  HomogeneousPolynomial(int dim, const TermMap& terms);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  double coefficient(const ExponentVector& e) const;
  double maxAbsCoefficient() const;

  double value(const Vec& x) const;
  Vec gradient(const Vec& x) const;
  Mat hessian(const Vec& x) const;
  Tensor3 thirdTensor(const Vec& x) const;

  /// Exact expansion of t -> h(x + t v).
  UnivariatePolynomial<double> restrictToLine(const Vec& x, const Vec& v) const;

  /// The polynomial y -> h(M y); M maps the new coordinates to the old ones.
  HomogeneousPolynomial substitute(const Mat& m) const;

  /// Symmetric trilinear form with H(v, v, v) = h(v). Cubic only.
  Tensor3 polarization() const;

  HomogeneousPolynomial operator*(double s) const;
  friend HomogeneousPolynomial operator+(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);
  friend HomogeneousPolynomial operator-(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);

  /// (l(x))^k for a linear form l.
  static HomogeneousPolynomial powerOfLinearForm(const Vec& l, int k);

  bool operator==(const HomogeneousPolynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

 private:
  int dim_;
  int degree_ = 0;
  TermMap terms_;
};

/// Reads the text grammar `poly := term (('+'|'-') term)*`. When `dim` is
/// omitted the ambient dimension is the highest variable index used plus one.
HomogeneousPolynomial parsePolynomial(std::string_view text, std::optional<int> dim = std::nullopt);

/// Writes the text grammar back; `parsePolynomial(toText(p), p.dim()) == p`.
std::string toText(const HomogeneousPolynomial& p);

/// Reads `{"dim":2,"degree":3,"terms":[{"exp":[3,0],"c":1.0}, ...]}`.
HomogeneousPolynomial polynomialFromJson(std::string_view json);
std::string polynomialToJson(const HomogeneousPolynomial& p);

/// Variable names used for a given ambient dimension.
std::string variableName(int index, int dim);

}  // namespace centro
