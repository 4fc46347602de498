#include "centro/catalog.hpp"
#include "centro/complete.hpp"
#include "centro/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace centro;

namespace {

std::vector<double> parseList(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw PreconditionError("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw PreconditionError("empty list");
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write " + path);
  os << text;
}

struct Flags {
  RunConfig cfg;
  std::string seed;
  std::string eps;
};

void addInputFlags(CLI::App* app, Flags& fl) {
  app->add_option("--poly", fl.cfg.poly, "homogeneous polynomial, e.g. \"x^3 - x*y^2\"");
  app->add_option("--example", fl.cfg.example, "catalog id (see `catalog`)");
  app->add_option("--k", fl.cfg.k, "degree of the analytic example");
  app->add_option("--seed", fl.seed, "point with h > 0, comma separated");
}

void addRunFlags(CLI::App* app, Flags& fl) {
  app->add_option("--tol-def", fl.cfg.tolDef, "eigenvalue tolerance for definiteness");
  app->add_option("--tol-quad", fl.cfg.tolQuad, "quadrature tolerance");
  app->add_option("--fd-step", fl.cfg.fdStep, "finite difference step (0 = automatic)");
  app->add_option("--samples", fl.cfg.samples, "sample count override for every check");
  app->add_option("--eps-grid", fl.eps, "concavity exponents, comma separated");
  app->add_option("--rng-seed", fl.cfg.rngSeed, "seed for random directions");
  app->add_option("--out", fl.cfg.out, "write output here instead of stdout");
  app->add_option("--trace", fl.cfg.trace, "write a geodesic trace CSV");
}

void finish(Flags& fl) {
  if (!fl.seed.empty()) {
    const auto v = parseList(fl.seed);
    fl.cfg.seed = Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
  }
  if (!fl.eps.empty()) fl.cfg.epsGrid = parseList(fl.eps);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completeness checks for centroaffine level sets {h = 1}"};
  app.require_subcommand(1);
  Flags fl;

  auto* an = app.add_subcommand("analyze", "classify a component and decide completeness");
  addInputFlags(an, fl);
  addRunFlags(an, fl);
  an->add_option("--plot", fl.cfg.plot, "also write an SVG of a planar curve");

  auto* repro = app.add_subcommand("repro", "recompute the reference values");
  bool reproJsonOut = false;
  repro->add_option("--tol-quad", fl.cfg.tolQuad, "quadrature tolerance");
  repro->add_option("--fd-step", fl.cfg.fdStep, "finite difference step (0 = automatic)");
  repro->add_option("--out", fl.cfg.out, "write output here instead of stdout");
  repro->add_flag("--json", reproJsonOut, "JSON instead of a table");

  auto* plot = app.add_subcommand("plot", "SVG of a planar curve");
  addInputFlags(plot, fl);
  plot->add_option("--out", fl.cfg.out, "write output here instead of stdout");
  plot->add_option("--trace", fl.cfg.trace, "draw a geodesic from the seed (any value)");

  auto* cat = app.add_subcommand("catalog", "list the built-in examples");
  bool check = false;
  cat->add_flag("--check", check, "run each entry and compare with the expected verdict");

  CLI11_PARSE(app, argc, argv);

  try {
    finish(fl);
    if (*an) {
      const auto res = analyze(fl.cfg);
      emit(dumpJson(res.report), fl.cfg.out);
      if (!fl.cfg.plot.empty()) {
        RunConfig pc = fl.cfg;
        pc.trace.clear();
        emit(plotSvg(pc), fl.cfg.plot);
      }
      return res.exitCode;
    }
    if (*repro) {
      const auto rows = reproRows(fl.cfg);
      emit(reproJsonOut ? dumpJson(reproJson(rows)) : reproTable(rows), fl.cfg.out);
      for (const auto& r : rows)
        if (!r.pass) return 2;
      return 0;
    }
    if (*plot) {
      emit(plotSvg(fl.cfg), fl.cfg.out);
      return 0;
    }
    if (*cat) {
      if (!check) {
        std::cout << dumpJson(catalogListing());
        return 0;
      }
      int bad = 0;
      for (const auto& e : catalog()) {
        if (e.expectStatus.empty()) continue;
        const auto v = completenessVerdict(ChartFrame::atSeed(e.h, e.seed));
        const bool ok = label(v.status) == e.expectStatus && (e.expectRoute.empty() || v.route == e.expectRoute);
        std::cout << e.id << ": " << label(v.status) << " / " << v.route << (ok ? "  ok\n" : "  MISMATCH\n");
        bad += ok ? 0 : 1;
      }
      return bad ? 2 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
