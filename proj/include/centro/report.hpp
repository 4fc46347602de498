#pragma once

#include "centro/chart.hpp"
#include "centro/homogeneous.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace centro {

struct RunConfig {
  /// Polynomial source text, or a catalog identifier; exactly one is set.
  std::string poly;
  std::string example;
  /// Degree of the analytic example.
  double k = 2.0;
  std::optional<Vec> seed;
  double tolDef = kDefaultFormTol;
  double tolQuad = 1e-10;
  /// 0 selects the automatic step.
  double fdStep = 0.0;
  /// 0 keeps the per-check defaults.
  int samples = 0;
  std::vector<double> epsGrid;
  std::uint64_t rngSeed = 1;
  std::string out;
  std::string plot;
  std::string trace;
};

/// Throws PreconditionError for an inconsistent configuration.
void validate(const RunConfig& cfg);

struct Subject {
  std::string name;
  std::string source;
  HomogeneousFunction h;
  Vec seed;
};

/// Resolves the polynomial or catalog example and the seed (required for --poly).
Subject resolveSubject(const RunConfig& cfg);

/// JSON with every float written as %.17g; non-finite values become null.
std::string dumpJson(const nlohmann::json& j, int indent = 2);

struct AnalysisOutcome {
  nlohmann::json report;
  /// 0 when the completeness verdict is decided, 2 otherwise.
  int exitCode = 2;
};

/// Classification, identity residuals, boundary regularity and the
/// completeness verdict of the component through the seed. Writes the
/// geodesic trace CSV when cfg.trace is set.
AnalysisOutcome analyze(const RunConfig& cfg);

struct ReproRow {
  std::string block;
  std::string quantity;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  /// Comparison: "abs" for |computed - expected| <= tol, "min" for
  /// computed >= expected - tol, "max" for computed <= expected + tol.
  std::string mode = "abs";
  bool pass = false;
};

std::vector<ReproRow> reproRows(const RunConfig& cfg);
std::string reproTable(const std::vector<ReproRow>& rows);
nlohmann::json reproJson(const std::vector<ReproRow>& rows);

/// SVG 1.1 drawing of a planar curve {h = 1}, its boundary rays and a geodesic
/// from the seed. Throws PreconditionError unless n = 1.
std::string plotSvg(const RunConfig& cfg);

/// Catalog listing with expected verdicts.
nlohmann::json catalogListing();

}  // namespace centro
