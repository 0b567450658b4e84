#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lad/binarizer.hpp"
#include "lad/classifier.hpp"
#include "lad/pattern.hpp"
#include "lad/types.hpp"

namespace lad {

/// Reference worked example: a 5-observation, 3-feature dataset with the
/// expected artifact of every pipeline stage, loaded from a data file so the
/// expectations live outside code.
struct GoldenCase {
  Dataset dataset;
  std::map<std::string, std::vector<double>> cut_points;  // feature name -> cuts
  std::vector<Descriptor> reference_descriptors;  // reference column order
  BitMatrix reference_matrix;                     // bits in reference order
  std::vector<Label> reference_labels;
  std::vector<std::string> support_set_names;        // descriptor display names
  std::vector<std::vector<std::string>> positive_patterns;  // literal names, "!" prefix negates
  std::vector<std::vector<std::string>> negative_patterns;
  std::vector<std::string> rules_text;            // expected rule rendering
};

/// Locate the fixture directory: LADIDS_GOLDEN_DIR when set, otherwise
/// data/golden relative to the current directory and its parents.
std::filesystem::path golden_dir();

GoldenCase worked_example(const std::filesystem::path& dir = golden_dir());

}  // namespace lad
