#include "centro/complete.hpp"

#include "centro/quadrature.hpp"
#include "centro/sampling.hpp"
#include "centro/structure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace centro {

namespace {

const HomogeneousPolynomial& requireCubic(const ChartFrame& f) {
  const auto* p = f.h().polynomial();
  if (!p || p->degree() != 3) throw PreconditionError("the segment test needs a cubic polynomial");
  return *p;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Central-projection chart distance is unbounded when the ray stays in the cone.
double cappedExit(const ChartFrame& f, const Vec& dir) {
  const double t = f.rayExit(Vec::Zero(f.n()), dir);
  return std::isfinite(t) ? t : 1e3 * std::max(1.0, f.p().norm()) / (f.basis() * dir).norm();
}

double metricSpeed(const ChartFrame& f, const Vec& c, const Vec& v) {
  if (!f.contains(c)) throw DomainError("curve leaves the chart domain B");
  const Form g = chartMetric(f, c, MetricMethod::PsiFormula);
  return std::sqrt(std::abs(v.dot(g.matrix() * v)));
}

bool metricDefinite(const ChartFrame& f, const Vec& c) {
  if (!f.contains(c)) return false;
  const Eigen::SelfAdjointEigenSolver<Mat> es(chartMetric(f, c, MetricMethod::PsiFormula).matrix(),
                                              Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > kDefaultFormTol * es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

SegmentTestResult cubicSegmentTest(const ChartFrame& f, const Vec& c, const Vec& dir, double relTol) {
  const auto& poly = requireCubic(f);
  if (dir.size() != f.n() || dir.norm() == 0.0) throw PreconditionError("line direction must be a nonzero chart vector");
  if (!f.contains(c)) throw DomainError("line base point outside B");
  SegmentTestResult r;
  r.x = f.ambient(c);
  r.v = f.basis() * dir.normalized();
  const auto h0 = poly.restrictToLine(r.x, r.v);
  r.scale = h0.maxAbsCoeff();

  double a = -std::numeric_limits<double>::infinity(), b = std::numeric_limits<double>::infinity();
  for (const auto& root : realRoots(h0)) {
    if (root.value < 0) a = std::max(a, root.value);
    if (root.value > 0) b = std::min(b, root.value);
  }
  if (!std::isfinite(a) || !std::isfinite(b)) {
    const Vec side = std::isfinite(b) ? Vec(-r.v) : r.v;
    throw ClosednessFailure("h stays positive on a half line of E: the component is not closed", r.x, side);
  }
  r.a = a;
  r.b = b;

  const auto d1 = h0.derivative(), d2 = h0.derivative(2);
  const auto f0 = h0 * d2 * 2.0 - d1 * d1;
  r.f0a = f0(a);
  r.f0b = f0(b);
  r.endpointA = -d1(a) * d1(a);
  r.endpointB = -d1(b) * d1(b);

  // f0' = 2 h0 h0''' vanishes inside (a, b) only if h0''' = 0, so the grid
  // endpoints are the critical points; the Chebyshev nodes add a sanity sweep.
  constexpr int nodes = 64;
  std::vector<double> vals;
  vals.reserve(nodes + 1);
  r.maxF0 = -std::numeric_limits<double>::infinity();
  for (int j = nodes; j >= 0; --j) {
    const double t = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(M_PI * j / nodes);
    const double v = f0(t);
    vals.push_back(v);
    if (v > r.maxF0) {
      r.maxF0 = v;
      r.argMax = t;
    }
  }
  const double tol = relTol * r.scale * r.scale;
  const double slope = h0.coeff(3);
  r.monotone = true;
  for (std::size_t i = 1; i < vals.size(); ++i) {
    const double step = vals[i] - vals[i - 1];
    if ((slope > 0 && step < -tol) || (slope < 0 && step > tol) || (slope == 0 && std::abs(step) > tol)) r.monotone = false;
  }
  r.pass = r.maxF0 <= tol && r.endpointA <= 0 && r.endpointB <= 0;
  return r;
}

SegmentTestSummary cubicSegmentTest(const ChartFrame& f, const LineSampleSpec& spec) {
  requireCubic(f);
  if (spec.lines <= 0 || spec.radialFractions.empty()) throw PreconditionError("line sample spec is empty");
  const int n = f.n();
  const auto dirs = sphereDirections(n, 2 * spec.lines);
  SegmentTestSummary s;
  for (int i = 0; i < spec.lines; ++i) {
    const Vec& bd = dirs[static_cast<std::size_t>(i)];
    const double frac = spec.radialFractions[static_cast<std::size_t>(i) % spec.radialFractions.size()];
    Vec c = Vec::Zero(n);
    if (frac > 0) {
      const double t = f.rayExit(c, bd);
      if (!std::isfinite(t)) throw ClosednessFailure("chart ray never leaves the cone", f.p(), f.basis() * bd);
      c = bd * (frac * t);
    }
    auto r = cubicSegmentTest(f, c, dirs[static_cast<std::size_t>(spec.lines + i)], spec.relTol);
    if (!r.pass) ++s.failures;
    s.worstRelative = std::max(s.worstRelative, r.maxF0 / (r.scale * r.scale));
    s.lines.push_back(std::move(r));
  }
  s.pass = s.failures == 0;
  return s;
}

Vec concavityEigenvalues(const ChartFrame& f, const Vec& c, double eps) {
  const double k = f.degree();
  const double m = k - eps;
  const Vec x = f.ambient(c);
  const double hx = f.h().value(x);
  const Mat& B = f.basis();
  const Vec a = B.transpose() * f.h().gradient(x);
  const Mat H = (1.0 / m) * std::pow(hx, 1.0 / m - 1.0) *
                (B.transpose() * f.h().hessian(x) * B + (1.0 / m - 1.0) * a * a.transpose() / hx);
  const Eigen::SelfAdjointEigenSolver<Mat> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

ConcavityResult concavityTest(const ChartFrame& f, double eps, int samples, double tol) {
  const double k = f.degree();
  if (!(eps > 0 && eps < k)) throw PreconditionError("concavity parameter must satisfy 0 < eps < k");
  const int n = f.n();
  ConcavityResult r;
  r.eps = eps;
  const auto dirs = sphereDirections(n, samples);
  for (int i = 0; i <= samples; ++i) {
    Vec c = Vec::Zero(n);
    if (i > 0) {
      const Vec& d = dirs[static_cast<std::size_t>(i - 1)];
      c = d * ((1.0 - 1e-3) * radicalInverse(static_cast<std::uint64_t>(i), 2) * cappedExit(f, d));
    }
    ++r.samples;
    const Vec ev = concavityEigenvalues(f, c, eps);
    const double top = ev.maxCoeff();
    if (top > tol * ev.cwiseAbs().maxCoeff()) {
      r.witness = c;
      r.witnessEigenvalue = top;
      r.pass = false;
      return r;
    }
  }
  r.pass = true;
  return r;
}

std::vector<double> defaultEpsGrid(double k) { return {k / 8, k / 4, k / 2, 3 * k / 4, k - k / 8}; }

double logLengthConstant(double k, double eps) {
  if (!(eps > 0 && eps < k)) throw PreconditionError("log length bound needs 0 < eps < k");
  return std::sqrt(eps / (k - eps)) / k;
}

double logLengthBound(double k, double eps, double hStart, double hEnd) {
  if (!(hStart > 0 && hEnd > 0)) throw DomainError("log length bound needs h > 0");
  return logLengthConstant(k, eps) * std::abs(std::log(hEnd) - std::log(hStart));
}

double logLengthBound(const ChartFrame& f, const CurveTrace& trace, double eps) {
  if (trace.size() == 0) return 0.0;
  for (double h : trace.h)
    if (!(h > 0)) throw DomainError("trace leaves B");
  return logLengthBound(f.degree(), eps, trace.h.front(), trace.h.back());
}

void CurveTrace::push(double tt, Vec c, Vec x, double hh, double len) {
  t.push_back(tt);
  coords.push_back(std::move(c));
  ambient.push_back(std::move(x));
  h.push_back(hh);
  length.push_back(len);
}

void CurveTrace::writeCsv(std::ostream& os) const {
  char buf[32];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  const std::size_t n = coords.empty() ? 0 : static_cast<std::size_t>(coords.front().size());
  os << "t";
  for (std::size_t i = 1; i <= n; ++i) os << ",c_" << i;
  for (std::size_t i = 0; i <= n; ++i) os << ",x_" << i;
  os << ",h,cum_length\n";
  for (std::size_t r = 0; r < t.size(); ++r) {
    os << num(t[r]);
    for (Eigen::Index i = 0; i < coords[r].size(); ++i) os << ',' << num(coords[r][i]);
    for (Eigen::Index i = 0; i < ambient[r].size(); ++i) os << ',' << num(ambient[r][i]);
    os << ',' << num(h[r]) << ',' << num(length[r]) << '\n';
  }
}

ChartPath segmentPath(const Vec& c0, const Vec& c1) {
  const Vec d = c1 - c0;
  return {[c0, d](double s) { return Vec(c0 + s * d); }, [d](double) { return d; }, 0.0, 1.0};
}

double curveLength(const ChartFrame& f, const ChartPath& path, double quadTol) {
  if (path.s1 == path.s0) return 0.0;
  // s = s0 + (s1 - s0)(3 u^2 - 2 u^3) removes inverse square root singularities
  // at endpoints that sit on the boundary of B.
  const double w = path.s1 - path.s0;
  auto integrand = [&](double u) {
    const double s = path.s0 + w * u * u * (3 - 2 * u);
    return metricSpeed(f, path.point(s), path.velocity(s)) * std::abs(6 * w * u * (1 - u));
  };
  const auto q = integrate(integrand, 0.0, 1.0, quadTol);
  if (!q.converged) throw ConsistencyError("length quadrature did not reach the tolerance (error " + fmt(q.error) + ")");
  return q.value;
}

std::string label(GeodesicStop s) {
  switch (s) {
    case GeodesicStop::MaxLength: return "max-length";
    case GeodesicStop::MinH: return "min-h";
    case GeodesicStop::Boundary: return "boundary";
  }
  return "?";
}

namespace {

struct GeoState {
  Vec q;
  Vec v;
};

GeoState geodesicRhs(const HomogeneousFunction& h, const GeoState& y) {
  const double k = h.degree();
  const Mat H = h.hessian(y.q);
  const Vec tvv = h.thirdTensor(y.q).contract(y.v, y.v);
  const double hvv = y.v.dot(H * y.v);
  GeoState d;
  d.q = y.v;
  d.v = -0.5 * H.partialPivLu().solve(tvv) - (hvv / (2.0 * (k - 1.0))) * y.q;
  return d;
}

GeoState rk4(const HomogeneousFunction& h, const GeoState& y, double dt) {
  auto add = [](const GeoState& a, const GeoState& b, double s) { return GeoState{a.q + s * b.q, a.v + s * b.v}; };
  const GeoState k1 = geodesicRhs(h, y);
  const GeoState k2 = geodesicRhs(h, add(y, k1, 0.5 * dt));
  const GeoState k3 = geodesicRhs(h, add(y, k2, 0.5 * dt));
  const GeoState k4 = geodesicRhs(h, add(y, k3, dt));
  return {y.q + dt / 6.0 * (k1.q + 2 * k2.q + 2 * k3.q + k4.q), y.v + dt / 6.0 * (k1.v + 2 * k2.v + 2 * k3.v + k4.v)};
}

// Back onto {h = 1} and its tangent space.
void projectState(const HomogeneousFunction& h, GeoState& y) {
  const double k = h.degree();
  y.q /= std::pow(h.value(y.q), 1.0 / k);
  y.v -= (h.gradient(y.q).dot(y.v) / k) * y.q;
}

double speed2(const HomogeneousFunction& h, const GeoState& y) {
  return -(1.0 / h.degree()) * y.v.dot(h.hessian(y.q) * y.v);
}

}  // namespace

GeodesicResult geodesicShoot(const ChartFrame& f, const Vec& start, const Vec& dir, const GeodesicOptions& opt) {
  if (dir.size() != f.n() || dir.norm() == 0.0) throw PreconditionError("geodesic direction must be a nonzero chart vector");
  if (!f.contains(start)) throw DomainError("geodesic start outside B");
  const int d = f.ambientDim();
  const auto jet = embeddingJet(f, start);
  GeoState y{jet.phi, jet.d1 * dir};
  const double s2 = speed2(f.h(), y);
  if (!(s2 > 0)) throw PreconditionError("direction is not spacelike for the centroaffine metric");
  y.v /= std::sqrt(s2);

  double diam = 0.0;
  if (opt.boundaryFraction > 0) {
    const Vec o = Vec::Zero(f.n());
    for (int i = 0; i < f.n(); ++i)
      diam = std::max(diam, f.rayExit(o, Vec::Unit(f.n(), i)) + f.rayExit(o, -Vec::Unit(f.n(), i)));
    diam *= f.basis().colwise().norm().maxCoeff();
  }

  // Plane curves given by polynomials are integrated in a moving frame: after
  // every step the coordinates are changed so that the point is e_1 and the
  // velocity e_2, and h is replaced by h o M. The working quantities stay of
  // order one while h itself cancels along an asymptotic ray. For surfaces
  // rounding in h o M is amplified along the geodesic, so they stay ambient.
  const auto* poly = d == 2 ? f.h().polynomial() : nullptr;
  Mat frame = Mat::Identity(d, d);
  std::optional<HomogeneousPolynomial> local;
  auto rebase = [&](GeoState& s) {
    Mat m(d, d);
    m.col(0) = s.q;
    m.col(1) = s.v;
    frame = frame * m;
    local = local->substitute(m);
    s.q = Vec::Unit(d, 0);
    s.v = Vec::Unit(d, 1);
  };
  if (poly) {
    local = *poly;
    rebase(y);
  }
  auto current = [&]() { return poly ? HomogeneousFunction(*local) : f.h(); };
  auto ambientPoint = [&](const GeoState& s) { return Vec(frame * s.q); };

  GeodesicResult r;
  double t = 0.0, len = 0.0, dt = opt.initialStep;
  double speedPrev = 1.0;
  r.trace.push(0.0, start, ambientPoint(y), f.hbarOfLevelPoint(ambientPoint(y)), 0.0);
  while (true) {
    if (t >= opt.maxLength) {
      r.stop = GeodesicStop::MaxLength;
      break;
    }
    if (r.steps >= opt.maxSteps) throw ConsistencyError("geodesic integration exceeded the step budget");
    dt = std::min(dt, opt.maxLength - t);
    const HomogeneousFunction h = current();
    const GeoState full = rk4(h, y, dt);
    const GeoState half = rk4(h, rk4(h, y, 0.5 * dt), 0.5 * dt);
    const double err = (half.q - full.q).norm() / half.q.norm() + (half.v - full.v).norm() / half.v.norm();
    if (!std::isfinite(err) || err > opt.stepTol) {
      ++r.rejected;
      dt *= std::isfinite(err) ? std::clamp(0.9 * std::pow(opt.stepTol / err, 0.2), 0.1, 0.5) : 0.25;
      if (dt < opt.minStep) throw ConsistencyError("geodesic step size underflow near a singular metric");
      continue;
    }
    GeoState next{half.q + (half.q - full.q) / 15.0, half.v + (half.v - full.v) / 15.0};
    projectState(h, next);
    const double s = speed2(h, next);
    r.maxSpeedDrift = std::max(r.maxSpeedDrift, std::abs(s - 1.0));
    const double sp = std::sqrt(std::max(s, 0.0));
    len += 0.5 * dt * (speedPrev + sp);
    speedPrev = sp;
    t += dt;
    y = std::move(next);
    if (poly) rebase(y);
    ++r.steps;

    const Vec q = ambientPoint(y);
    const double hb = f.hbarOfLevelPoint(q);
    const Vec c = f.chartCoords(q);
    r.trace.push(t, c, q, hb, len);
    if (opt.minH > 0 && hb <= opt.minH) {
      r.stop = GeodesicStop::MinH;
      break;
    }
    if (opt.boundaryFraction > 0 && std::isfinite(diam)) {
      if (!f.contains(c) || f.boundaryDistance(c) < opt.boundaryFraction * diam) {
        r.stop = GeodesicStop::Boundary;
        break;
      }
    }
    dt *= err > 0 ? std::clamp(0.9 * std::pow(opt.stepTol / err, 0.2), 0.2, 4.0) : 4.0;
  }
  r.length = len;
  r.finalH = r.trace.h.back();
  return r;
}

MonomialTestResult n1MonomialTest(const ChartFrame& f) {
  const auto* poly = f.h().polynomial();
  if (!poly || f.n() != 1) throw PreconditionError("the monomial test needs a bivariate polynomial");
  const Vec origin = Vec::Zero(1);
  const double tp = f.rayExit(origin, Vec::Constant(1, 1.0));
  const double tm = f.rayExit(origin, Vec::Constant(1, -1.0));
  if (!std::isfinite(tp) || !std::isfinite(tm)) throw PreconditionError("cone is not normalizable to the quadrant");
  MonomialTestResult r;
  r.normalization.resize(2, 2);
  r.normalization.col(0) = f.ambient(Vec::Constant(1, tp)).normalized();
  r.normalization.col(1) = f.ambient(Vec::Constant(1, -tm)).normalized();
  if (std::abs(r.normalization.determinant()) < 1e-12) throw PreconditionError("cone is not normalizable to the quadrant");
  r.normalized = poly->substitute(r.normalization);
  const int k = poly->degree();
  const double cut = 1e-9 * r.normalized->maxAbsCoefficient();
  // Face 0 is the ray s = 0 (second column), where the minimal power of s matters.
  for (int face = 0; face < 2; ++face) {
    MonomialFace mf;
    mf.face = face;
    mf.l = k + 1;
    for (const auto& [e, coef] : r.normalized->terms()) {
      if (std::abs(coef) <= cut) continue;
      const int l = e[static_cast<std::size_t>(face)];
      if (l < mf.l) {
        mf.l = l;
        mf.coefficient = coef;
      }
    }
    if (mf.l == 0) throw PreconditionError("h does not vanish on a boundary ray of the cone");
    mf.signValue = static_cast<double>(mf.l) * mf.l - static_cast<double>(mf.l) * (k - 1);
    mf.pass = mf.l >= 1 && mf.l <= k - 1 && mf.coefficient > 0 && mf.signValue <= 0;
    r.faces.push_back(mf);
  }
  r.pass = r.faces[0].pass && r.faces[1].pass;
  return r;
}

LengthWitness rayLengthWitness(const ChartFrame& f, const Vec& c, const Vec& dir, double quadTol) {
  if (dir.size() != f.n() || dir.norm() == 0.0) throw PreconditionError("witness direction must be a nonzero chart vector");
  LengthWitness w;
  w.origin = c;
  w.direction = dir.normalized();
  double end = f.rayExit(c, w.direction);

  // Look for the first point where the metric stops being definite.
  double lo = 0.0, hi = -1.0;
  if (std::isfinite(end)) {
    constexpr int marks = 64;
    for (int j = 1; j < marks; ++j) {
      const double s = end * j / marks;
      if (!metricDefinite(f, c + s * w.direction)) {
        hi = s;
        break;
      }
      lo = s;
    }
  } else {
    for (double s = 1.0; s < 1e12; s *= 2) {
      if (!metricDefinite(f, c + s * w.direction)) {
        hi = s;
        break;
      }
      lo = s;
    }
    if (hi < 0) return w;
  }
  if (hi > 0) {
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
      const double m = 0.5 * (lo + hi);
      (metricDefinite(f, c + m * w.direction) ? lo : hi) = m;
    }
    end = lo;
    w.degenerate = true;
  }
  w.span = end;

  const Vec v = end * w.direction;
  auto speed = [&](double s) { return metricSpeed(f, c + s * v, v); };
  w.deltas = {1e-5, 1e-8, 1e-11, 1e-14};
  double acc = 0.0, from = 0.0;
  for (double d : w.deltas) {
    const auto q = integrate(speed, from, 1.0 - d, quadTol);
    acc += q.value;
    w.partial.push_back(acc);
    from = 1.0 - d;
  }
  const double d0 = w.partial[1] - w.partial[0];
  const double d1 = w.partial[2] - w.partial[1];
  const double d2 = w.partial[3] - w.partial[2];
  w.finite = d1 <= 0.2 * d0 && d2 <= 0.2 * d1;
  if (w.finite) {
    const double ratio = d1 > 0 ? d2 / d1 : 0.0;
    w.tail = ratio < 1 ? d2 * ratio / (1 - ratio) : 0.0;
  }
  w.length = w.partial.back() + w.tail;
  return w;
}

std::optional<IncompletenessWitness> incompletenessWitness(const ChartFrame& f, int directions, double quadTol) {
  const int n = f.n();
  std::vector<Vec> lines;
  for (int i = 0; i < n; ++i) lines.push_back(Vec::Unit(n, i));
  for (const Vec& d : sphereDirections(n, directions)) lines.push_back(d);
  const Vec origin = Vec::Zero(n);
  for (const Vec& d : lines) {
    IncompletenessWitness w;
    w.rays.push_back(rayLengthWitness(f, origin, d, quadTol));
    w.rays.push_back(rayLengthWitness(f, origin, -d, quadTol));
    const bool a = w.rays[0].finite, b = w.rays[1].finite;
    if (!a && !b) continue;
    w.finite = true;
    w.length = (a ? w.rays[0].length : 0.0) + (b ? w.rays[1].length : 0.0);
    return w;
  }
  return std::nullopt;
}

std::string label(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Complete: return "complete";
    case VerdictStatus::Incomplete: return "incomplete";
    case VerdictStatus::NumericallyCertified: return "numerically-certified";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

CompletenessVerdict completenessVerdict(const ChartFrame& f, const VerdictConfig& cfg) {
  const auto cls = classify(f, cfg.classifySamples, cfg.tolDef);
  if (cls.aggregate != Classification::Hyperbolic)
    throw PreconditionError("completeness verdict needs a hyperbolic component (classified " + label(cls.aggregate) + ")");

  CompletenessVerdict v;
  const auto* poly = f.h().polynomial();
  const int deg = poly ? poly->degree() : 0;
  auto note = [&](const std::string& route, const std::string& outcome) { v.attempts.push_back({route, outcome}); };
  auto decide = [&](VerdictStatus s, const std::string& route) {
    v.status = s;
    v.route = route;
    return v;
  };

  std::optional<std::vector<BoundaryPoint>> points;
  try {
    points = boundaryScan(f, cfg.boundaryDirections);
  } catch (const ClosednessFailure& e) {
    note("closedness", e.what());
  }
  v.chartCoverageAssumed = !points.has_value();

  if (cfg.useQuadric && deg == 2) {
    note("quadric", "constant ambient Hessian");
    return decide(VerdictStatus::Complete, "quadric");
  }

  if (cfg.useCubic && deg == 3) {
    if (!points) {
      note("cubic-criterion", "skipped: boundary rays unbounded");
    } else {
      try {
        LineSampleSpec spec;
        spec.lines = cfg.segmentLines;
        v.segment = cubicSegmentTest(f, spec);
        note("cubic-criterion", v.segment->pass ? "pass" : std::to_string(v.segment->failures) + " failing lines");
        if (v.segment->pass) return decide(VerdictStatus::Complete, "cubic-criterion");
      } catch (const ClosednessFailure& e) {
        note("cubic-criterion", e.what());
      }
    }
  }

  if (cfg.useRegular && points) {
    v.regularity = regularBoundaryCheck(f, *points, cfg.tolDef);
    note("regular-boundary", v.regularity->regular ? "pass" : std::to_string(v.regularity->failures) + " irregular points");
    if (v.regularity->regular) return decide(VerdictStatus::Complete, "regular-boundary");
  }

  if (cfg.useMonomial && poly && f.n() == 1) {
    try {
      v.monomial = n1MonomialTest(f);
      note("n1-monomial", v.monomial->pass ? "pass" : "fail");
      if (v.monomial->pass) return decide(VerdictStatus::Complete, "n1-monomial");
    } catch (const PreconditionError& e) {
      note("n1-monomial", std::string("skipped: ") + e.what());
    }
  }

  if (cfg.useConcavity) {
    const auto grid = cfg.epsGrid.empty() ? defaultEpsGrid(f.degree()) : cfg.epsGrid;
    for (double eps : grid) {
      auto c = concavityTest(f, eps, cfg.concavitySamples);
      note("concavity", "eps " + fmt(eps) + (c.pass ? ": pass" : ": fail"));
      if (c.pass) {
        v.concavity = c;
        v.eps = eps;
        return decide(VerdictStatus::NumericallyCertified, "concavity");
      }
      if (!v.concavity) v.concavity = c;
    }
  }

  if (cfg.useWitness) {
    v.witness = incompletenessWitness(f, cfg.witnessDirections, cfg.quadTol);
    note("finite-length-witness", v.witness ? "length " + fmt(v.witness->length) : "none found");
    if (v.witness) return decide(VerdictStatus::Incomplete, "finite-length-witness");
  }
  return v;
}

}  // namespace centro
