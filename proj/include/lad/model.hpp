#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lad/binarizer.hpp"
#include "lad/classifier.hpp"
#include "lad/pattern.hpp"
#include "lad/support_set.hpp"

namespace lad {

struct PipelineConfig {
  size_t min_support = 100;       // k of the final pattern pass
  size_t stage1_min_support = 1;  // k of the self-labeling classifier
  size_t max_degree = 4;          // d-hat, both passes
  double tau0 = -0.021;
  double tau1 = 0.24;
  size_t prune_full = 175;
  size_t prune_partial = 75;
  uint64_t seed = 0;
  ConflictPolicy conflicts = ConflictPolicy::Error;
  ClassifierMode mode = ClassifierMode::Simple;

  BinarizerConfig binarizer() const {
    return BinarizerConfig{prune_full, prune_partial, conflicts};
  }
  void validate() const;  // throws ConfigError

  bool operator==(const PipelineConfig&) const = default;
};

/// Everything the online phase needs: the fitted binarization, the support
/// set, both pattern families and the compiled rules. This is the sole
/// artifact exchanged between training and classification.
struct Model {
  static constexpr int kFormatVersion = 1;

  BinarizerModel binarizer;
  SupportSet support;
  std::vector<Pattern> positive_patterns;
  std::vector<Pattern> negative_patterns;
  RuleSet rules;
  PipelineConfig config;

  const FeatureSchema& schema() const { return binarizer.schema; }
  Verdict classify(const Observation& obs) const;
};

std::string to_json_string(const Model& m, int indent = 2);
Model model_from_json_string(const std::string& text);

void save_model(const Model& m, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

bool operator==(const Model& a, const Model& b);

/// Schema file: {"features": [{"name": ..., "kind": "continuous"|"symbolic"}]}
FeatureSchema load_schema(const std::filesystem::path& path);

}  // namespace lad
