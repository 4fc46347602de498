#pragma once

#include "centro/chart.hpp"
#include "centro/homogeneous.hpp"
#include "centro/polynomial.hpp"
#include "centro/univariate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace centro {

/// h(x, y) = (xy / (x + y))^k on the open quadrant, with closed-form derivatives.
SmoothHomogeneousMap analyticExample(double k);
/// Chart of the analytic example on the line {x + y = 1}: base (1/2, 1/2),
/// basis (1, -1), so that the coordinate is c = x - 1/2.
ChartFrame analyticChart(double k);
/// Metric coefficient 2 / (x (1 - x)) of the analytic example in the coordinate x.
inline double analyticMetricCoefficient(double x) { return 2.0 / (x * (1.0 - x)); }
/// Closed-form length of the analytic curve, sqrt(2) pi.
inline double analyticTotalLength() { return std::sqrt(2.0) * M_PI; }

/// eta_a(x) = x (1 - x) ((x - 3/20)^2 + 51/400 + a).
UnivariatePolynomial<double> quarticEta(double a);
/// P_a = (3/4) eta_a'^2 - eta_a eta_a'' by expansion.
UnivariatePolynomial<double> quarticP(double a);
/// The closed-form expansion 3 (14x^2 + 6x - 3)^2 / 40^2 + Q a / 40 + (4x^2 - 4x + 3) a^2 / 4.
UnivariatePolynomial<double> quarticPDisplayed(double a);
/// Q = -80x^4 + 188x^3 - 42x^2 - 24x + 9.
UnivariatePolynomial<double> quarticQ();
/// Root of 14x^2 + 6x - 3 in [0, 1].
double quarticX0();
/// eta_a eta_a'' / eta_a'^2 at x.
double quarticRatio(double a, double x);
/// Bivariate quartic whose restriction to {x + y = 1} is eta_a.
HomogeneousPolynomial quarticPolynomial(double a);

struct QuarticClaims {
  double x0 = 0.0;
  double x0Closed = 0.0;
  double q = 0.0;
  double etaPrime = 0.0;
  double pAtX0 = 0.0;
  /// min over a 10^4 grid of (0, 1) of P_a for a = 1e-2, 1e-3, 1e-4.
  std::vector<std::pair<double, double>> pMin;
  /// r(a) at x0 for a = 1e-1, 1e-2, 1e-3, 1e-4 (increasing toward 3/4).
  std::vector<std::pair<double, double>> ratio;
  /// Max deviation of P_a from the displayed expansion on a 100-point grid, a in {0, 1}.
  double expansionDeviation = 0.0;
};

QuarticClaims quarticClaims();

struct CatalogEntry {
  std::string id;
  std::string description;
  HomogeneousFunction h;
  Vec seed;
  std::optional<bool> expectRegular;
  /// Expected verdict status and route, empty when not asserted.
  std::string expectStatus;
  std::string expectRoute;
  bool isCubic() const { return h.polynomial() && h.polynomial()->degree() == 3; }
};

/// All built-in entries.
std::vector<CatalogEntry> catalog();
/// Throws PreconditionError for unknown ids.
CatalogEntry catalogEntry(const std::string& id);
/// The two planar cubics x(x^2 - y^2) and x^2 y.
std::vector<CatalogEntry> cubicCurves();
/// The cubic curves plus the ternary cubic x y z.
std::vector<CatalogEntry> catalogCubics();

}  // namespace centro
