// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "centro/boundary.hpp"
#include "centro/catalog.hpp"
#include "centro/complete.hpp"
#include "centro/report.hpp"
#include "centro/sampling.hpp"
#include "centro/structure.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

using namespace centro;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome fromRepro(const std::string& block) {
  RunConfig cfg;
  Outcome o{true, ""};
  int n = 0;
  for (const auto& r : reproRows(cfg)) {
    if (r.block != block) continue;
    ++n;
    if (!r.pass) {
      o.pass = false;
      o.detail += " [" + r.quantity + ": " + fmt("%.12g", r.computed) + "]";
    }
  }
  o.detail = std::to_string(n) + " checks" + (o.pass ? "" : " failed:" + o.detail);
  return o;
}

Outcome examplePair() {
  const auto a = ChartFrame::atSeed(parsePolynomial("x^3 - x*y^2"), Vec::Unit(2, 0));
  const auto b = ChartFrame::atSeed(parsePolynomial("x^2*y"), Vec::Ones(2));
  const auto ra = regularBoundaryCheck(a, boundaryScan(a, 500));
  const auto rb = regularBoundaryCheck(b, boundaryScan(b, 500));
  // Condition (i) must fail on the face x = 0 and nowhere else.
  int faceFailures = 0, otherFailures = 0;
  for (const auto& e : rb.entries) {
    if (e.condition1) continue;
    const bool onFace = std::abs(e.point.x[0]) <= 1e-6 && e.gradientNorm <= 1e-6;
    (onFace ? faceFailures : otherFailures)++;
  }
  const auto va = completenessVerdict(a);
  const auto vb = completenessVerdict(b);
  const bool ok = ra.regular && !rb.regular && faceFailures > 0 && otherFailures == 0 &&
                  va.status == VerdictStatus::Complete && va.route == "cubic-criterion" &&
                  vb.status == VerdictStatus::Complete && vb.route == "cubic-criterion";
  std::ostringstream d;
  d << "x^3-xy^2 regular=" << ra.regular << " " << label(va.status) << "/" << va.route << "; x^2y regular=" << rb.regular
    << " (i) fails at " << faceFailures << " points on x=0, " << otherFailures << " elsewhere, " << label(vb.status)
    << "/" << vb.route;
  return {ok, d.str()};
}

// x0^3 - x0 |x'|^2 plus a random cubic of size 0.15, seeded at e_0.
ChartFrame randomCubic(Rng& rng, int dim) {
  while (true) {
    TermMap terms;
    for (int a = 0; a < dim; ++a)
      for (int b = a; b < dim; ++b)
        for (int c = b; c < dim; ++c) {
          ExponentVector e(static_cast<std::size_t>(dim), 0);
          ++e[static_cast<std::size_t>(a)];
          ++e[static_cast<std::size_t>(b)];
          ++e[static_cast<std::size_t>(c)];
          terms[e] += 0.15 * rng.uniform(-1, 1);
        }
    ExponentVector cube(static_cast<std::size_t>(dim), 0);
    cube[0] = 3;
    terms[cube] += 1.0;
    for (int i = 1; i < dim; ++i) {
      ExponentVector e(static_cast<std::size_t>(dim), 0);
      e[0] = 1;
      e[static_cast<std::size_t>(i)] = 2;
      terms[e] -= 1.0;
    }
    const HomogeneousPolynomial h(dim, terms);
    const auto f = ChartFrame::atSeed(h, Vec::Unit(dim, 0));
    if (signature(chartMetric(f, Vec::Zero(f.n()), MetricMethod::PsiFormula)).positive == f.n()) return f;
  }
}

Outcome identitySuites() {
  std::vector<ChartFrame> frames;
  for (const auto& e : catalogCubics()) frames.push_back(ChartFrame::atSeed(e.h, e.seed));
  Rng rng(2024);
  for (int i = 0; i < 20; ++i) frames.push_back(randomCubic(rng, 2 + i % 3));

  double euler = 0, pos = 0, metric = 0, lorentz = 0, cone = 0;
  for (const auto& f : frames) {
    const auto& h = f.h();
    const double k = f.degree();
    for (int i = 0; i < 100; ++i) {
      const Vec d = rng.normalVector(f.n()).normalized();
      double t = f.rayExit(Vec::Zero(f.n()), d);
      if (!std::isfinite(t)) t = 1.0;
      const Vec c = d * t * rng.uniform(0.0, 0.9);
      const Vec x = f.ambient(c);
      euler = std::max(euler, std::abs(eulerResidual(h, x)) / (x.norm() * h.gradient(x).norm()));
      pos = std::max(pos, positionIdentityResidual(h, x) / (h.hessian(x).cwiseAbs().maxCoeff() * x.norm()));
      metric = std::max(metric, chartMetricDisagreement(f, c));
      const double hx = h.value(x);
      lorentz = std::max(lorentz, std::abs(x.dot(lorentzForm(h, x).matrix() * x) + (k - 1) * hx) / ((k - 1) * hx));
      if (i % 10 == 0) cone = std::max(cone, coneIdentityResidual(f, rng.uniform(0.5, 2.0) * x));
    }
  }
  const bool ok = euler <= 1e-12 && pos <= 1e-10 && metric <= 1e-8 && lorentz <= 1e-10 && cone <= 1e-6;
  std::ostringstream d;
  d << frames.size() << " cubics: euler " << fmt("%.2e", euler) << ", Hess h(x,.)-(k-1)dh " << fmt("%.2e", pos)
    << ", metric formulas " << fmt("%.2e", metric) << ", g_L(xi,xi)+(k-1)h " << fmt("%.2e", lorentz) << ", cone "
    << fmt("%.2e", cone);
  return {ok, d.str()};
}

Outcome intrinsic() {
  double fund = 0, cubic = 0, curv = 0, vol = 0, coarse = 0, fine = 0;
  Rng rng(77);
  for (const auto& e : catalogCubics()) {
    const auto f = ChartFrame::atSeed(e.h, e.seed);
    for (int i = 0; i < 20; ++i) {
      const Vec d = rng.normalVector(f.n()).normalized();
      const Vec c = d * f.rayExit(Vec::Zero(f.n()), d) * rng.uniform(0.0, 0.6);
      fund = std::max(fund, fundEquationResidual(f, c));
      const Tensor3 p = cubicForm(f, c, CubicMethod::Polarization);
      cubic = std::max(cubic, (p - cubicForm(f, c, CubicMethod::NablaG)).maxAbs() / p.maxAbs());
      curv = std::max(curv, curvatureResidual(f, c));
      vol = std::max(vol, volumeParallelResidual(f, c));
      // Steps large enough that truncation dominates rounding.
      const double s = 0.02 * f.boundaryDistance(c);
      coarse += fundEquationResidual(f, c, s);
      fine += fundEquationResidual(f, c, 0.5 * s);
    }
  }
  const double ratio = coarse / fine;
  const bool ok = fund <= 1e-4 && cubic <= 1e-5 && curv <= 1e-4 && vol <= 1e-4 && ratio > 3.0 && ratio < 5.0;
  std::ostringstream d;
  d << "fundEqu " << fmt("%.2e", fund) << " (halving ratio " << fmt("%.2f", ratio) << "), nabla g vs -2H "
    << fmt("%.2e", cubic) << ", curvature " << fmt("%.2e", curv) << ", nabla nu " << fmt("%.2e", vol);
  return {ok, d.str()};
}

Outcome segments() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& e : catalogCubics()) {
    const auto f = ChartFrame::atSeed(e.h, e.seed);
    const auto s = cubicSegmentTest(f);
    bool ends = true;
    for (const auto& l : s.lines) ends = ends && l.endpointA <= 0 && l.endpointB <= 0;
    ok = ok && s.pass && ends && s.lines.size() == 2000;
    d << e.id << " " << s.lines.size() << " lines, " << s.failures << " failures; ";
  }
  const auto nc = catalogEntry("cubic-nonclosed");
  try {
    cubicSegmentTest(ChartFrame::atSeed(nc.h, nc.seed));
    ok = false;
    d << "non-closed piece: no witness";
  } catch (const ClosednessFailure& ex) {
    d << "non-closed piece: " << ex.what();
  }
  return {ok, d.str()};
}

Outcome perturbation() {
  const auto f = ChartFrame::atSeed(parsePolynomial("x^2*y"), Vec::Ones(2));
  bool ok = true;
  std::ostringstream d;
  for (double eps : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const auto pe = genPerturb(f, eps);
    const auto pts = boundaryScan(pe.frame, 500);
    const auto rep = regularBoundaryCheck(pe.frame, pts);
    ok = ok && rep.regular && pts.size() == 500;
    d << "eps " << eps << ": " << pts.size() - static_cast<std::size_t>(rep.failures) << "/" << pts.size() << " ";
  }
  return {ok, d.str()};
}

Outcome geodesic() {
  const auto f = ChartFrame::atSeed(parsePolynomial("x^3 - x*y^2"), Vec::Unit(2, 0));
  double eps = 0;
  for (double e : defaultEpsGrid(3))
    if (concavityTest(f, e).pass) eps = std::max(eps, e);
  GeodesicOptions opt;
  opt.maxLength = 60;
  opt.minH = 1e-20;
  opt.boundaryFraction = 0;
  const auto g = geodesicShoot(f, Vec::Zero(1), Vec::Ones(1), opt);
  bool bound = eps > 0;
  for (std::size_t i = 0; i < g.trace.size(); ++i)
    bound = bound && logLengthBound(3, eps, g.trace.h.front(), g.trace.h[i]) <= g.trace.length[i] + 1e-9;
  const bool drift = g.maxSpeedDrift <= 1e-6 * std::max(1.0, g.length);
  const bool reached = g.stop == GeodesicStop::MaxLength || g.length > 50;
  std::ostringstream d;
  d << "log bound (eps " << eps << ") at " << g.trace.size() << " checkpoints: " << (bound ? "ok" : "violated")
    << "; drift " << fmt("%.2e", g.maxSpeedDrift) << (drift ? " ok" : " too large") << "; length "
    << fmt("%.4f", g.length) << " when h reached " << fmt("%.3g", g.finalH) << " (" << label(g.stop)
    << "), needs > 50";
  return {bound && drift && reached, d.str()};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  auto run = [&](const std::string& tag) {
    RunConfig cfg;
    cfg.example = "cubic-xyz";
    cfg.rngSeed = 11;
    cfg.trace = (dir / ("centro_acc_" + tag + ".csv")).string();
    std::string out = dumpJson(analyze(cfg).report);
    std::ifstream is(cfg.trace);
    out += std::string(std::istreambuf_iterator<char>(is), {});
    RunConfig pc;
    pc.example = "cubic-irregular";
    pc.trace = "on";
    out += plotSvg(pc);
    out += dumpJson(reproJson(reproRows(RunConfig{})));
    std::filesystem::remove(cfg.trace);
    return out;
  };
  const std::string a = run("a"), b = run("b");
  return {a == b && !a.empty(), std::to_string(a.size()) + " bytes of JSON, CSV and SVG" + (a == b ? " identical" : " differ")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"quartic counterexample numbers", [] { return fromRepro("quartic"); }},
      {"analytic counterexample", [] { return fromRepro("analytic"); }},
      {"regular and irregular cubic curves", examplePair},
      {"identity suites", identitySuites},
      {"intrinsic structure equations", intrinsic},
      {"cubic segment test", segments},
      {"generic perturbation", perturbation},
      {"geodesic length evidence", geodesic},
      {"determinism", determinism},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %zu: %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
