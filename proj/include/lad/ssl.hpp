#pragma once

#include <cstdint>
#include <utility>

#include "lad/model.hpp"
#include "lad/types.hpp"

namespace lad {

/// Outcome of labeling the unlabeled pool. Correct/wrong counts are filled
/// only when the pool carries ground-truth labels (hidden from training,
/// used for bookkeeping only).
struct LabelingReport {
  size_t unlabeled_input = 0;
  size_t labeled = 0;
  size_t labeled_correct = 0;
  size_t labeled_wrong = 0;
  size_t left_epsilon = 0;
  bool has_truth = false;

  double accuracy() const {
    return labeled ? static_cast<double>(labeled_correct) / labeled : 0.0;
  }
};

struct TrainingStats {
  size_t labeled_rows = 0;
  size_t self_labeled_rows = 0;
  size_t training_rows = 0;       // labeled + self-labeled
  size_t binary_variables = 0;
  size_t support_size = 0;
  size_t positive_patterns = 0;
  size_t negative_patterns = 0;
  size_t stage1_binary_variables = 0;
  size_t stage1_support_size = 0;
  size_t stage1_positive_patterns = 0;
  size_t stage1_negative_patterns = 0;
  double offline_seconds = 0.0;
};

/// Build the stage-1 balance-score classifier from d_l (its own binarize /
/// support-set / pattern pass with the stage-1 support threshold), apply the
/// thresholded discriminant to every row of d_ul, and keep the rows that get
/// a definite verdict. Epsilon rows are excluded from the result entirely.
/// d_ul may carry labels; they are ignored for labeling and only compared
/// against the produced labels for the report.
std::pair<Dataset, LabelingReport> self_label(const Dataset& d_l,
                                              const Dataset& d_ul,
                                              const PipelineConfig& cfg);

struct TrainResult {
  Model model;
  LabelingReport labeling;
  TrainingStats stats;
};

/// Offline phase: self-label d_ul (skipped when empty), merge with d_l, then
/// run the full stack on the merged data with the final support threshold.
/// With an empty d_ul this degrades to plain supervised training on d_l.
TrainResult train_offline(const Dataset& d_l, const Dataset& d_ul,
                          const PipelineConfig& cfg);

}  // namespace lad
