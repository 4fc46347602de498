#pragma once

#include "centro/types.hpp"

#include <queue>

namespace centro {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                  0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename F>
Segment kronrod15(F& f, double a, double b) {
  const double c = 0.5 * (a + b), hl = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kWgk[7], g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = hl * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  return {a, b, k * hl, std::abs((k - g) * hl)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 quadrature; the interval with the
/// largest error estimate is bisected until the total estimate is below absTol.
/// Nodes are interior, so integrable endpoint singularities are tolerated.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, double absTol, int maxIntervals = 4000) {
  if (!(absTol > 0)) throw PreconditionError("quadrature tolerance must be positive");
  QuadratureResult r;
  if (a == b) {
    r.converged = true;
    return r;
  }
  std::priority_queue<detail::Segment> heap;
  heap.push(detail::kronrod15(f, a, b));
  double value = heap.top().value, error = heap.top().error;
  while (error > absTol && static_cast<int>(heap.size()) < maxIntervals) {
    const detail::Segment s = heap.top();
    const double m = 0.5 * (s.a + s.b);
    if (!(m > s.a && m < s.b)) break;
    heap.pop();
    const auto l = detail::kronrod15(f, s.a, m);
    const auto u = detail::kronrod15(f, m, s.b);
    value += l.value + u.value - s.value;
    error += l.error + u.error - s.error;
    heap.push(l);
    heap.push(u);
  }
  // Re-sum to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  r.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  r.value = value;
  r.error = error;
  r.converged = error <= absTol;
  return r;
}

}  // namespace centro
