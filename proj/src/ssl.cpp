#include "lad/ssl.hpp"

#include <chrono>

#include "lad/binarizer.hpp"
#include "lad/error.hpp"
#include "lad/support_set.hpp"

namespace lad {

namespace {

struct StageStats {
  size_t binary_variables = 0;
  size_t support_size = 0;
  size_t positive_patterns = 0;
  size_t negative_patterns = 0;
};

void require_two_classes(const Dataset& d, const char* stage) {
  bool pos = false, neg = false;
  for (const auto& row : d.rows) {
    if (!row.label) throw DataError(std::string(stage) + ": unlabeled row");
    (*row.label == Label::Normal ? pos : neg) = true;
    if (pos && neg) return;
  }
  throw DataError(std::string(stage) +
                  ": training data must contain both classes");
}

Model build_stage(const Dataset& training, size_t min_support,
                  const PipelineConfig& cfg, ClassifierMode mode,
                  StageStats* stats) {
  Model m;
  FittedBinarization fitted = fit_and_binarize(training, cfg.binarizer());
  m.binarizer = std::move(fitted.model);
  const BinaryDataset& bin = fitted.data;
  m.support = select_support_set(bin);
  BinaryDataset projected = project(bin, m.support);

  PatternConfig pat{min_support, cfg.max_degree};
  m.positive_patterns = generate_patterns(projected, Polarity::Positive, pat);
  m.negative_patterns = generate_patterns(projected, Polarity::Negative, pat);

  m.rules = compile_rules(m.positive_patterns, m.negative_patterns,
                          m.binarizer.descriptors, m.binarizer.schema);
  m.rules.mode = mode;
  m.rules.tau0 = cfg.tau0;
  m.rules.tau1 = cfg.tau1;
  m.rules.default_class = Label::Attack;
  m.config = cfg;
  m.config.min_support = min_support;
  m.config.mode = mode;

  if (stats) {
    stats->binary_variables = m.binarizer.descriptors.size();
    stats->support_size = m.support.ids.size();
    stats->positive_patterns = m.positive_patterns.size();
    stats->negative_patterns = m.negative_patterns.size();
  }
  return m;
}

Model build_labeling_stage(const Dataset& d_l, const PipelineConfig& cfg,
                           StageStats* stats) {
  Model stage1 = build_stage(d_l, cfg.stage1_min_support, cfg,
                             ClassifierMode::Thresholded, stats);
  if (stage1.rules.positive.empty() || stage1.rules.negative.empty())
    throw DataError(
        "self_label: the labeling classifier needs patterns of both "
        "polarities; raise max degree or lower the support threshold");
  return stage1;
}

// Apply the thresholded discriminant to every row of d_ul; definite verdicts
// are appended to `sink` with the produced label.
LabelingReport label_rows(const Model& stage1, const Dataset& d_ul,
                          std::vector<Observation>& sink) {
  LabelingReport report;
  report.unlabeled_input = d_ul.size();
  for (const auto& row : d_ul.rows) {
    const Verdict v =
        classify_thresholded(stage1.rules, row, stage1.binarizer.schema);
    if (v == Verdict::Unclassified) {
      ++report.left_epsilon;
      continue;
    }
    Observation out = row;
    out.label = (v == Verdict::Normal) ? Label::Normal : Label::Attack;
    if (row.label) {
      report.has_truth = true;
      (*row.label == *out.label ? report.labeled_correct
                                : report.labeled_wrong)++;
    }
    sink.push_back(std::move(out));
    ++report.labeled;
  }
  return report;
}

}  // namespace

std::pair<Dataset, LabelingReport> self_label(const Dataset& d_l,
                                              const Dataset& d_ul,
                                              const PipelineConfig& cfg) {
  cfg.validate();
  require_two_classes(d_l, "self_label");
  const Model stage1 = build_labeling_stage(d_l, cfg, nullptr);
  Dataset labeled{d_l.schema, {}};
  LabelingReport report = label_rows(stage1, d_ul, labeled.rows);
  return {std::move(labeled), report};
}

TrainResult train_offline(const Dataset& d_l, const Dataset& d_ul,
                          const PipelineConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  require_two_classes(d_l, "train_offline");

  TrainResult result;
  result.stats.labeled_rows = d_l.size();

  Dataset merged{d_l.schema, d_l.rows};
  if (!d_ul.rows.empty()) {
    StageStats s1;
    const Model stage1 = build_labeling_stage(d_l, cfg, &s1);
    result.stats.stage1_binary_variables = s1.binary_variables;
    result.stats.stage1_support_size = s1.support_size;
    result.stats.stage1_positive_patterns = s1.positive_patterns;
    result.stats.stage1_negative_patterns = s1.negative_patterns;
    result.labeling = label_rows(stage1, d_ul, merged.rows);
  }
  result.stats.self_labeled_rows = result.labeling.labeled;
  result.stats.training_rows = merged.size();

  StageStats final_stats;
  result.model =
      build_stage(merged, cfg.min_support, cfg, cfg.mode, &final_stats);
  result.stats.binary_variables = final_stats.binary_variables;
  result.stats.support_size = final_stats.support_size;
  result.stats.positive_patterns = final_stats.positive_patterns;
  result.stats.negative_patterns = final_stats.negative_patterns;

  result.stats.offline_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace lad
