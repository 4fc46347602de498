#include "centro/report.hpp"

#include "centro/boundary.hpp"
#include "centro/catalog.hpp"
#include "centro/complete.hpp"
#include "centro/sampling.hpp"
#include "centro/structure.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace centro {

using nlohmann::json;

namespace {

json toJson(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json toJson(const Mat& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(toJson(Vec(m.row(i).transpose())));
  return a;
}

json toJson(const Signature& s) { return {{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}}; }

std::string num(double v, const char* f = "%.17g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

void writeJson(std::ostringstream& os, const json& j, int indent, int level) {
  const std::string pad(static_cast<std::size_t>(indent * (level + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * level), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << json(it.key()).dump() << (indent > 0 ? ": " : ":");
        writeJson(os, it.value(), indent, level + 1);
      }
      os << nl << close << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Short numeric rows stay on one line.
      bool flat = j.size() <= 8;
      for (const auto& e : j) flat = flat && e.is_primitive();
      if (flat) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          writeJson(os, j[i], indent, level + 1);
        }
        os << ']';
        return;
      }
      os << '[' << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ',' << nl;
        os << pad;
        writeJson(os, j[i], indent, level + 1);
      }
      os << nl << close << ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        os << "null";
        return;
      }
      os << num(v);
      return;
    }
    default:
      os << j.dump();
  }
}

struct Sizes {
  int classify = 200;
  int segment = 2000;
  int boundary = 0;
  int concavity = 1000;
};

Sizes sizesFor(const RunConfig& cfg) {
  Sizes s;
  if (cfg.samples > 0) {
    s.classify = cfg.samples;
    s.segment = cfg.samples;
    s.boundary = cfg.samples;
    s.concavity = cfg.samples;
  }
  return s;
}

// Deterministic interior chart points along sphere directions.
std::vector<Vec> probePoints(const ChartFrame& f, int count) {
  std::vector<Vec> out{Vec::Zero(f.n())};
  const auto dirs = sphereDirections(f.n(), count);
  for (int i = 0; i < count; ++i) {
    const Vec& d = dirs[static_cast<std::size_t>(i)];
    double t = f.rayExit(Vec::Zero(f.n()), d);
    if (!std::isfinite(t)) t = 1.0;
    out.push_back(d * (t * (0.1 + 0.6 * radicalInverse(static_cast<std::uint64_t>(i + 1), 3))));
  }
  return out;
}

template <typename F>
void guarded(json& errors, const std::string& what, F&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    errors.push_back({{"check", what}, {"error", e.what()}});
  }
}

json identityBlock(const ChartFrame& f, const RunConfig& cfg, json& errors) {
  json id;
  const auto& h = f.h();
  const double k = f.degree();
  const auto pts = probePoints(f, 8);
  guarded(errors, "euler", [&] {
    double worst = 0.0, pos = 0.0, metric = 0.0;
    for (const Vec& c : pts) {
      const Vec x = f.ambient(c);
      const Vec g = h.gradient(x);
      worst = std::max(worst, std::abs(eulerResidual(h, x)) / (x.norm() * g.norm()));
      pos = std::max(pos, positionIdentityResidual(h, x) / std::max(1e-300, h.hessian(x).cwiseAbs().maxCoeff() * x.norm()));
      metric = std::max(metric, chartMetricDisagreement(f, c));
    }
    id["euler_relative"] = worst;
    id["position_identity_relative"] = pos;
    id["metric_formula_disagreement"] = metric;
  });
  guarded(errors, "lorentz", [&] {
    const Vec& p = f.p();
    const double gl = p.dot(lorentzForm(h, p).matrix() * p);
    id["lorentz_xi_xi_residual"] = std::abs(gl + (k - 1.0) * h.value(p)) / (k - 1.0);
    id["cone_identity_residual"] = coneIdentityResidual(f, 1.3 * p);
  });
  const double step = cfg.fdStep;
  guarded(errors, "structure", [&] {
    double curv = 0.0, vol = 0.0;
    for (std::size_t i = 0; i < 3 && i < pts.size(); ++i) {
      const Vec c = pts[i] * 0.5;
      curv = std::max(curv, curvatureResidual(f, c, step));
      vol = std::max(vol, volumeParallelResidual(f, c, step));
    }
    id["curvature_residual"] = curv;
    id["volume_parallel_residual"] = vol;
  });
  if (const auto* poly = h.polynomial(); poly && poly->degree() == 3) {
    guarded(errors, "cubic", [&] {
      double fe = 0.0, cf = 0.0, gm = 0.0;
      for (std::size_t i = 0; i < 3 && i < pts.size(); ++i) {
        const Vec c = pts[i] * 0.5;
        fe = std::max(fe, fundEquationResidual(f, c, step));
        const Tensor3 a = cubicForm(f, c, CubicMethod::Polarization);
        const Tensor3 b = cubicForm(f, c, CubicMethod::NablaG, step);
        cf = std::max(cf, (a - b).maxAbs() / std::max(1e-300, a.maxAbs()));
        const Form g = chartMetric(f, c, MetricMethod::PsiFormula);
        gm = std::max(gm, (metricViaPolarization(f, c) - g).scale() / g.scale());
      }
      id["fund_equation_residual"] = fe;
      id["cubic_form_relative"] = cf;
      id["metric_polarization_relative"] = gm;
    });
  }
  return id;
}

json verdictJson(const CompletenessVerdict& v) {
  json j;
  j["status"] = label(v.status);
  j["route"] = v.route.empty() ? json(nullptr) : json(v.route);
  j["eps"] = v.eps ? json(*v.eps) : json(nullptr);
  j["chart_coverage_assumed"] = v.chartCoverageAssumed;
  json att = json::array();
  for (const auto& a : v.attempts) att.push_back({{"route", a.route}, {"outcome", a.outcome}});
  j["attempts"] = att;
  json ev = json::object();
  if (v.segment) {
    ev["segment_test"] = {{"lines", v.segment->lines.size()},
                          {"failures", v.segment->failures},
                          {"worst_max_f0_over_scale2", v.segment->worstRelative},
                          {"pass", v.segment->pass}};
  }
  if (v.regularity) ev["regularity"] = {{"regular", v.regularity->regular}, {"failures", v.regularity->failures}};
  if (v.monomial) {
    json faces = json::array();
    for (const auto& fc : v.monomial->faces)
      faces.push_back({{"face", fc.face}, {"l", fc.l}, {"coefficient", fc.coefficient}, {"sign_value", fc.signValue},
                       {"pass", fc.pass}});
    ev["monomial"] = {{"faces", faces}, {"pass", v.monomial->pass}};
  }
  if (v.concavity) {
    json c = {{"eps", v.concavity->eps}, {"pass", v.concavity->pass}, {"samples", v.concavity->samples}};
    if (v.concavity->witness) {
      c["witness"] = toJson(*v.concavity->witness);
      c["eigenvalue"] = v.concavity->witnessEigenvalue;
    }
    ev["concavity"] = c;
  }
  if (v.witness) {
    json rays = json::array();
    for (const auto& r : v.witness->rays)
      rays.push_back({{"direction", toJson(r.direction)},
                      {"finite", r.finite},
                      {"length", r.length},
                      {"partial", r.partial},
                      {"tail", r.tail},
                      {"metric_degenerates", r.degenerate}});
    ev["witness"] = {{"length", v.witness->length}, {"rays", rays}};
  }
  j["evidence"] = ev;
  return j;
}

ChartFrame frameFor(const Subject& s) { return ChartFrame::atSeed(s.h, s.seed); }

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.poly.empty() == cfg.example.empty()) throw PreconditionError("give exactly one of --poly and --example");
  if (!(cfg.tolDef > 0) || !(cfg.tolQuad > 0) || cfg.fdStep < 0) throw PreconditionError("tolerances must be positive");
  if (cfg.samples < 0) throw PreconditionError("sample count must be nonnegative");
  for (double e : cfg.epsGrid)
    if (!(e > 0)) throw PreconditionError("eps grid entries must be positive");
}

Subject resolveSubject(const RunConfig& cfg) {
  validate(cfg);
  if (!cfg.poly.empty()) {
    if (!cfg.seed) throw PreconditionError("--poly needs --seed");
    auto p = parsePolynomial(cfg.poly);
    if (cfg.seed->size() != p.dim())
      throw PreconditionError("seed has " + std::to_string(cfg.seed->size()) + " entries, polynomial has " +
                              std::to_string(p.dim()) + " variables");
    return {toText(p), "polynomial", HomogeneousFunction(p), *cfg.seed};
  }
  if (cfg.example == "analytic") {
    Vec seed = cfg.seed ? *cfg.seed : Vec::Ones(2);
    std::ostringstream name;
    name << "(x*y/(x+y))^" << num(cfg.k, "%.17g");
    return {name.str(), "example:analytic", HomogeneousFunction(analyticExample(cfg.k)), seed};
  }
  const auto e = catalogEntry(cfg.example);
  Vec seed = cfg.seed ? *cfg.seed : e.seed;
  if (seed.size() != e.h.dim()) throw PreconditionError("seed has the wrong dimension");
  const auto* p = e.h.polynomial();
  return {p ? toText(*p) : e.description, "example:" + e.id, e.h, seed};
}

std::string dumpJson(const json& j, int indent) {
  std::ostringstream os;
  writeJson(os, j, indent, 0);
  os << '\n';
  return os.str();
}

AnalysisOutcome analyze(const RunConfig& cfg) {
  const Subject s = resolveSubject(cfg);
  const ChartFrame f = frameFor(s);
  const Sizes sz = sizesFor(cfg);
  AnalysisOutcome out;
  json& r = out.report;
  json errors = json::array();
  r["schema"] = 1;
  r["input"] = {{"h", s.name},        {"source", s.source},       {"dim", f.ambientDim()},
                {"degree", f.degree()}, {"seed", toJson(s.seed)}, {"rng_seed", cfg.rngSeed}};
  r["config"] = {{"tol_def", cfg.tolDef},  {"tol_quad", cfg.tolQuad},   {"fd_step", cfg.fdStep},
                 {"samples", cfg.samples}, {"eps_grid", cfg.epsGrid}};
  r["frame"] = {{"p", toJson(f.p())}, {"basis", toJson(f.basis())}};

  const auto cls = classify(f, sz.classify, cfg.tolDef);
  r["classification"] = {{"aggregate", label(cls.aggregate)},
                         {"samples", cls.samples.size()},
                         {"origin_signature", toJson(cls.samples.front().signature)},
                         {"witnesses", cls.witnesses.size()}};
  guarded(errors, "metric", [&] { r["metric_at_origin"] = toJson(chartMetricChecked(f, Vec::Zero(f.n())).matrix()); });
  r["identities"] = identityBlock(f, cfg, errors);

  json boundary;
  guarded(errors, "boundary", [&] {
    boundary["closed"] = false;
    const auto pts = boundaryScan(f, sz.boundary);
    boundary["closed"] = true;
    boundary["points"] = pts.size();
    const auto rep = regularBoundaryCheck(f, pts, cfg.tolDef);
    int c1 = 0, c2 = 0, lorentz = 0;
    for (const auto& e : rep.entries) {
      if (!e.condition1) ++c1;
      if (e.condition1 && !e.condition2.value_or(false)) ++c2;
      if (e.lorentz && e.lorentz->determinant < 0) ++lorentz;
    }
    boundary["regular"] = rep.regular;
    boundary["condition_i_failures"] = c1;
    boundary["condition_ii_failures"] = c2;
    boundary["lorentz_negative_determinants"] = lorentz;
    const auto cb = compactnessBound(f);
    boundary["compactness"] = {{"delta", cb.delta},   {"hessian_bound", cb.hessianBound}, {"epsilon", cb.epsilon},
                               {"radius", cb.radius}, {"violations", cb.violations}};
  });
  r["boundary"] = boundary;

  r["verdict"] = nullptr;
  if (cls.aggregate == Classification::Hyperbolic) {
    VerdictConfig vc;
    vc.classifySamples = sz.classify;
    vc.segmentLines = sz.segment;
    vc.boundaryDirections = sz.boundary;
    vc.concavitySamples = sz.concavity;
    vc.epsGrid = cfg.epsGrid;
    vc.tolDef = cfg.tolDef;
    vc.quadTol = cfg.tolQuad;
    guarded(errors, "verdict", [&] {
      const auto v = completenessVerdict(f, vc);
      r["verdict"] = verdictJson(v);
      out.exitCode = v.decided() ? 0 : 2;
    });
  } else {
    errors.push_back({{"check", "verdict"}, {"error", "component is not hyperbolic"}});
  }

  if (!cfg.trace.empty()) {
    guarded(errors, "geodesic", [&] {
      Rng rng(cfg.rngSeed);
      const Vec dir = rng.normalVector(f.n()).normalized();
      GeodesicOptions go;
      go.maxLength = 20;
      go.minH = 1e-20;
      go.boundaryFraction = 0.0;
      const auto g = geodesicShoot(f, Vec::Zero(f.n()), dir, go);
      r["geodesic"] = {{"direction", toJson(dir)}, {"length", g.length},          {"stop", label(g.stop)},
                       {"final_h", g.finalH},      {"speed_drift", g.maxSpeedDrift}, {"steps", g.steps}};
      std::ofstream os(cfg.trace);
      if (!os) throw Error("cannot write trace file " + cfg.trace);
      g.trace.writeCsv(os);
    });
  }
  r["errors"] = errors;
  return out;
}

std::vector<ReproRow> reproRows(const RunConfig& cfg) {
  std::vector<ReproRow> rows;
  auto add = [&](const std::string& block, const std::string& q, double expected, double computed, double tol,
                 const std::string& mode = "abs") {
    ReproRow row{block, q, expected, computed, tol, mode, false};
    if (mode == "abs") row.pass = std::abs(computed - expected) <= tol;
    if (mode == "min") row.pass = computed > expected - tol;
    if (mode == "max") row.pass = computed < expected + tol;
    rows.push_back(row);
  };

  const auto qc = quarticClaims();
  add("quartic", "x0 (closed form)", qc.x0Closed, qc.x0, 1e-12);
  add("quartic", "x0 (4 digits)", 0.2958, qc.x0, 5e-5);
  add("quartic", "Q(x0)", 2.479, qc.q, 5e-3);
  add("quartic", "eta_0'(x0)", 0.1215, qc.etaPrime, 5e-4);
  add("quartic", "P_0(x0)", 0.0, qc.pAtX0, 1e-9);
  for (const auto& [a, m] : qc.pMin) add("quartic", "min P_a, a = " + num(a, "%g"), 0.0, m, 0.0, "min");
  for (const auto& [a, rr] : qc.ratio)
    if (a == 1e-4) add("quartic", "ratio at x0, a = 1e-4", 0.749, rr, 0.0, "min");
  bool increasing = true;
  for (std::size_t i = 1; i < qc.ratio.size(); ++i) increasing = increasing && qc.ratio[i].second > qc.ratio[i - 1].second;
  add("quartic", "ratio increasing as a decreases", 1.0, increasing ? 1.0 : 0.0, 0.0);
  add("quartic", "P_a vs displayed expansion", 0.0, qc.expansionDeviation, 1e-10, "max");

  const auto a = analyticChart(2.0);
  add("analytic", "metric at x = 1/2", 8.0, chartMetric(a, Vec::Zero(1), MetricMethod::PsiFormula)(0, 0), 8e-10);
  double worst = 0.0;
  for (int i = 1; i < 100; ++i) {
    const double x = i / 100.0;
    const double g = chartMetric(a, Vec::Constant(1, x - 0.5), MetricMethod::PsiFormula)(0, 0);
    worst = std::max(worst, std::abs(g - analyticMetricCoefficient(x)) / analyticMetricCoefficient(x));
  }
  add("analytic", "metric vs 2/(x(1-x)), max relative", 0.0, worst, 1e-10, "max");
  add("analytic", "total length", analyticTotalLength(),
      curveLength(a, segmentPath(Vec::Constant(1, -0.5), Vec::Constant(1, 0.5)), cfg.tolQuad), 1e-6);
  {
    VerdictConfig vc;
    vc.quadTol = cfg.tolQuad;
    const auto v = completenessVerdict(ChartFrame::atSeed(analyticExample(2.0), Vec::Ones(2)), vc);
    add("analytic", "verdict incomplete", 1.0, v.status == VerdictStatus::Incomplete ? 1.0 : 0.0, 0.0);
    add("analytic", "witness length", analyticTotalLength(), v.witness ? v.witness->length : 0.0, 1e-5);
  }

  double euler = 0.0, pos = 0.0, metric = 0.0, fund = 0.0, curv = 0.0, cubic = 0.0, cone = 0.0;
  for (const auto& e : catalogCubics()) {
    const auto f = ChartFrame::atSeed(e.h, e.seed);
    for (const Vec& c : probePoints(f, 6)) {
      const Vec x = f.ambient(c);
      euler = std::max(euler, std::abs(eulerResidual(e.h, x)) / (x.norm() * e.h.gradient(x).norm()));
      pos = std::max(pos, positionIdentityResidual(e.h, x) / (e.h.hessian(x).cwiseAbs().maxCoeff() * x.norm()));
      metric = std::max(metric, chartMetricDisagreement(f, c));
    }
    for (const Vec& c : probePoints(f, 2)) {
      const Vec cc = 0.5 * c;
      fund = std::max(fund, fundEquationResidual(f, cc, cfg.fdStep));
      curv = std::max(curv, curvatureResidual(f, cc, cfg.fdStep));
      const Tensor3 p = cubicForm(f, cc, CubicMethod::Polarization);
      cubic = std::max(cubic, (p - cubicForm(f, cc, CubicMethod::NablaG, cfg.fdStep)).maxAbs() / p.maxAbs());
    }
    cone = std::max(cone, coneIdentityResidual(f, 1.3 * f.p()));
  }
  add("identities", "Euler residual (relative)", 0.0, euler, 1e-12, "max");
  add("identities", "Hess h(x, .) = (k-1) dh (relative)", 0.0, pos, 1e-10, "max");
  add("identities", "metric formulas disagreement", 0.0, metric, 1e-8, "max");
  add("identities", "cone identity residual", 0.0, cone, 1e-6, "max");
  add("identities", "fundamental equation residual", 0.0, fund, 1e-4, "max");
  add("identities", "curvature residual", 0.0, curv, 1e-4, "max");
  add("identities", "cubic form: nabla g vs -2H", 0.0, cubic, 1e-5, "max");

  for (const auto& e : cubicCurves()) {
    const auto f = ChartFrame::atSeed(e.h, e.seed);
    const auto rep = regularBoundaryCheck(f, boundaryScan(f, 500));
    add("examples", e.id + " regular", e.expectRegular.value_or(false) ? 1.0 : 0.0, rep.regular ? 1.0 : 0.0, 0.0);
    const auto v = completenessVerdict(f);
    add("examples", e.id + " complete via cubic criterion", 1.0,
        v.status == VerdictStatus::Complete && v.route == "cubic-criterion" ? 1.0 : 0.0, 0.0);
  }
  return rows;
}

std::string reproTable(const std::vector<ReproRow>& rows) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-11s %-40s %-22s %-22s %-9s %-4s %s\n", "block", "quantity", "expected", "computed",
                "tol", "mode", "ok");
  os << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-11s %-40s %-22.15g %-22.15g %-9.2g %-4s %s\n", r.block.c_str(), r.quantity.c_str(),
                  r.expected, r.computed, r.tolerance, r.mode.c_str(), r.pass ? "PASS" : "FAIL");
    os << buf;
  }
  return os.str();
}

json reproJson(const std::vector<ReproRow>& rows) {
  json a = json::array();
  bool all = true;
  for (const auto& r : rows) {
    a.push_back({{"block", r.block},
                 {"quantity", r.quantity},
                 {"expected", r.expected},
                 {"computed", r.computed},
                 {"tolerance", r.tolerance},
                 {"mode", r.mode},
                 {"pass", r.pass}});
    all = all && r.pass;
  }
  return {{"schema", 1}, {"rows", a}, {"pass", all}};
}

std::string plotSvg(const RunConfig& cfg) {
  const Subject s = resolveSubject(cfg);
  const ChartFrame f = frameFor(s);
  if (f.n() != 1) throw PreconditionError("plot needs a planar curve (n = 1), got n = " + std::to_string(f.n()));
  const double R = 3.0 * std::max(1.0, f.p().norm());
  const double size = 600.0;
  auto sx = [&](double x) { return num((x + R) / (2 * R) * size, "%.3f"); };
  auto sy = [&](double y) { return num((R - y) / (2 * R) * size, "%.3f"); };
  auto inside = [&](const Vec& x) { return std::abs(x[0]) <= R && std::abs(x[1]) <= R; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n"
     << "<title>" << s.name << "</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n"
     << "<line x1=\"0\" y1=\"" << sy(0) << "\" x2=\"600\" y2=\"" << sy(0) << "\" stroke=\"#bbbbbb\"/>\n"
     << "<line x1=\"" << sx(0) << "\" y1=\"0\" x2=\"" << sx(0) << "\" y2=\"600\" stroke=\"#bbbbbb\"/>\n";

  const Vec o = Vec::Zero(1);
  double ends[2];
  for (int side = 0; side < 2; ++side) {
    const Vec d = Vec::Constant(1, side == 0 ? 1.0 : -1.0);
    const double t = f.rayExit(o, d);
    ends[side] = std::isfinite(t) ? t : 1e3;
    if (std::isfinite(t)) {
      const Vec b = f.ambient(t * d).normalized() * (2 * R);
      os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(b[0]) << "\" y2=\"" << sy(b[1])
         << "\" stroke=\"#cc3333\" stroke-dasharray=\"6,4\"/>\n";
    }
  }

  // Sample densely toward both ends; clip to the viewport.
  constexpr int m = 2000;
  std::vector<std::vector<Vec>> runs(1);
  for (int i = 0; i <= m; ++i) {
    const double u = -1.0 + 2.0 * i / m;
    const double w = std::sin(0.5 * M_PI * u);
    const double c = w >= 0 ? w * ends[0] : w * ends[1];
    const Vec cc = Vec::Constant(1, c * (1 - 1e-9));
    if (!f.contains(cc)) continue;
    const Vec x = radialProjection(f.h(), f.ambient(cc));
    if (inside(x)) {
      runs.back().push_back(x);
    } else if (!runs.back().empty()) {
      runs.emplace_back();
    }
  }
  for (const auto& run : runs) {
    if (run.size() < 2) continue;
    os << "<polyline fill=\"none\" stroke=\"#1f4e9a\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < run.size(); ++i) os << (i ? " " : "") << sx(run[i][0]) << ',' << sy(run[i][1]);
    os << "\"/>\n";
  }

  if (!cfg.trace.empty()) {
    GeodesicOptions go;
    go.maxLength = 8;
    const auto g = geodesicShoot(f, o, Vec::Ones(1), go);
    for (const Vec& x : g.trace.ambient)
      if (inside(x)) os << "<circle cx=\"" << sx(x[0]) << "\" cy=\"" << sy(x[1]) << "\" r=\"1.5\" fill=\"#2a9d4b\"/>\n";
  }
  os << "<circle cx=\"" << sx(f.p()[0]) << "\" cy=\"" << sy(f.p()[1]) << "\" r=\"4\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

json catalogListing() {
  json a = json::array();
  for (const auto& e : catalog()) {
    json j = {{"id", e.id}, {"description", e.description}, {"dim", e.h.dim()}, {"degree", e.h.degree()},
              {"seed", toJson(e.seed)}};
    j["expect_regular"] = e.expectRegular ? json(*e.expectRegular) : json(nullptr);
    j["expect_status"] = e.expectStatus.empty() ? json(nullptr) : json(e.expectStatus);
    j["expect_route"] = e.expectRoute.empty() ? json(nullptr) : json(e.expectRoute);
    a.push_back(j);
  }
  return {{"schema", 1}, {"entries", a}};
}

}  // namespace centro
