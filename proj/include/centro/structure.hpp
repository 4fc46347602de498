#pragma once

#include "centro/chart.hpp"
#include "centro/forms.hpp"
#include "centro/types.hpp"

#include <vector>

namespace centro {

/// Connection coefficients of the induced centroaffine connection at a chart point.
struct ConnectionSample {
  Vec coords;
  /// gamma[m](i, j) = Gamma^m_ij in chart coordinates.
  std::vector<Mat> gamma;
  /// The position-vector component of the second derivatives of the embedding.
  Form metric;
  /// Columns d_1 phi, ..., d_n phi, phi.
  Mat frame;
  double condition = 0.0;

  /// Largest |Gamma^m_ij - Gamma^m_ji|.
  double torsion() const;
};

/// phi(c) = psi(base + B c) and its first derivatives (columns), in one pass.
struct EmbeddingJet {
  Vec phi;
  Mat d1;
  /// d2[i](., j) = d_i d_j phi.
  std::vector<Mat> d2;
};
EmbeddingJet embeddingJet(const ChartFrame& f, const Vec& c);

/// Splits d_i d_j phi = Gamma^m_ij d_m phi + g_ij phi. Throws ConsistencyError
/// if the frame (d phi, phi) has condition number above 1e8.
ConnectionSample gaussSplit(const ChartFrame& f, const Vec& c);

/// det(phi, d_1 phi, ..., d_n phi).
double volumeForm(const ChartFrame& f, const Vec& c);

/// Default finite-difference step: 1e-4 of the distance to the chart boundary.
double defaultFdStep(const ChartFrame& f, const Vec& c);

enum class CubicMethod { NablaG, Polarization };

/// Cubic form C = nabla g in chart coordinates. NablaG differentiates the chart
/// metric by central differences (fdStep <= 0 picks the default); Polarization
/// evaluates -2 H(d phi, d phi, d phi) and needs a cubic polynomial.
Tensor3 cubicForm(const ChartFrame& f, const Vec& c, CubicMethod method, double fdStep = 0.0);

/// g_ij = -2 H(phi, d_i phi, d_j phi); cubic polynomials only.
Form metricViaPolarization(const ChartFrame& f, const Vec& c);

/// Max over index tuples of (nabla C)_ijkl - (g_ij g_kl + g_ik g_jl + g_il g_jk),
/// divided by max(1, |g|^2). Cubic polynomials only.
double fundEquationResidual(const ChartFrame& f, const Vec& c, double fdStep = 0.0);

/// Max of R^l_ijk + (g_jk delta^l_i - g_ik delta^l_j), divided by max(1, |g|).
double curvatureResidual(const ChartFrame& f, const Vec& c, double fdStep = 0.0);
/// Same with externally supplied Gamma and g, for negative controls.
double curvatureResidual(const std::vector<Mat>& gamma, const std::vector<std::vector<Mat>>& dGamma, const Mat& g);

/// Max over i of |d_i nu - Gamma^j_ji nu| / |nu|.
double volumeParallelResidual(const ChartFrame& f, const Vec& c, double fdStep = 0.0);

}  // namespace centro
