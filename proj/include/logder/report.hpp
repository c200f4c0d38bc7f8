#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/combinat.hpp"
#include "logder/derivmod.hpp"
#include "logder/theorems.hpp"

namespace logder {

struct ReportOptions {
  bool dump_derivations = false;
  /// Compare the presentation's Hilbert function with the slice oracle in
  /// degrees 0..degree_scan; negative skips the comparison.
  int degree_scan = -1;
};

struct HyperplaneReport {
  std::size_t index = 0;
  std::string form;
  std::size_t restriction_size = 0;
  std::optional<Exponents> deletion_exponents;
  std::optional<Exponents> restriction_exponents;
  AdditionVerdict addition;
  DivisionVerdict division;
  /// "applies", "not applicable" or "insufficient data".
  std::string criterion_status;
  std::optional<SpogPrediction> criterion;
};

struct DegreeScanRow {
  int degree = 0;
  std::int64_t presentation = 0;
  std::int64_t oracle = 0;
};

struct Report {
  Arrangement arrangement{0};
  std::optional<std::size_t> distinguished;
  CharPoly chi;
  std::optional<Exponents> exponents;
  std::optional<SpogData> spog;
  BettiData betti;
  std::size_t g = 0;
  std::vector<HyperplaneReport> hyperplanes;
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  std::vector<DegreeScanRow> degree_scan;
  double seconds = 0;
};

/// Full analysis. Cross-checks the exponent-level theorems against the
/// computed modules and throws FalsificationError on any disagreement.
Report analyze(const Arrangement& a, std::optional<std::size_t> distinguished = std::nullopt,
               const ReportOptions& options = {});

std::string report_text(const Report& r, bool timing = true);
/// Deterministic; the timing field is present only when asked for.
std::string report_json(const Report& r, bool timing = false);

}  // namespace logder
