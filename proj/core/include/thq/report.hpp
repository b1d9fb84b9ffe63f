#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "thq/chambers.hpp"
#include "thq/hilbert.hpp"
#include "thq/moment.hpp"
#include "thq/orbits.hpp"
#include "thq/weight_data.hpp"

namespace thq {

using ordered_json = nlohmann::ordered_json;

// One line of the simple-connectivity certificate. Computed steps re-derive
// their arithmetic from the input; cited steps are the literature premises
// the argument leans on, stated but not re-proved.
struct CertificateStep {
  std::string name;
  std::string claim;
  std::string citation;  // empty for computed steps
  bool cited = false;
  bool pass = false;
};

struct Pi1Certificate {
  std::vector<CertificateStep> steps;
  bool issued() const;  // every computed step passed
};

Pi1Certificate pi1_certificate(const WeightData& wd);

// Parsed input document: exactly one of a weight tuple or a weight matrix.
struct InputDocument {
  std::optional<IntVec> a;
  std::optional<IntMatrix> matrix;

  static InputDocument parse_text(const std::string& json_text);
  static InputDocument parse_file(const std::string& path);

  WeightData build() const;
  ordered_json echo() const;  // the parsed data, re-serialized
};

// Everything the pipeline knows about one admissible input.
struct AnalysisReport {
  WeightData wd;
  ordered_json input_echo;
  SingularLocus sing;
  std::vector<InvariantMonomial> generators;
  GradingInfo grading_info;
  DiagonalRelation diagonal;
  ChamberDecomposition chamber_decomp;
  std::optional<WeightedProjectiveSpace> fiber;  // single torus factor only
  Pi1Certificate certificate;
  std::vector<std::string> remarks;
};

AnalysisReport analyze(const InputDocument& doc, int safety_cap = 64);

// Deterministic serializations: same input, byte-identical output.
ordered_json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

ordered_json to_json(const ValidationVerdict& verdict);
std::string to_text(const ValidationVerdict& verdict);

ordered_json to_json(const Pi1Certificate& cert);

}  // namespace thq
