#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lad/csv.hpp"
#include "lad/error.hpp"
#include "lad/eval.hpp"
#include "lad/fixtures.hpp"
#include "lad/model.hpp"
#include "lad/ssl.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitModel = 3;

struct CommonOptions {
  std::string schema = "nslkdd";
  lad::PipelineConfig cfg;
  std::string conflict_policy = "error";
  std::string mode = "simple";
};

void add_config_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--schema", opt.schema,
                  "Feature schema: 'nslkdd' or a schema JSON file");
  cmd->add_option("--k", opt.cfg.min_support,
                  "Minimum pattern support of the final classifier");
  cmd->add_option("--stage1-k", opt.cfg.stage1_min_support,
                  "Minimum pattern support of the self-labeling classifier");
  cmd->add_option("--max-degree", opt.cfg.max_degree, "Maximum pattern degree");
  cmd->add_option("--tau0", opt.cfg.tau0, "Lower labeling threshold");
  cmd->add_option("--tau1", opt.cfg.tau1, "Upper labeling threshold");
  cmd->add_option("--prune-full", opt.cfg.prune_full,
                  "Cut-point count from which a feature is dropped entirely");
  cmd->add_option("--prune-partial", opt.cfg.prune_partial,
                  "Cut-point count from which only level variables are kept");
  cmd->add_option("--seed", opt.cfg.seed, "Seed for the labeled/unlabeled split");
  cmd->add_option("--conflict-policy", opt.conflict_policy,
                  "Identical rows with conflicting labels: error|drop")
      ->check(CLI::IsMember({"error", "drop"}));
  cmd->add_option("--mode", opt.mode,
                  "Classifier mode: simple|balance|thresholded")
      ->check(CLI::IsMember({"simple", "balance", "thresholded"}));
}

lad::PipelineConfig finish_config(CommonOptions& opt) {
  opt.cfg.conflicts = opt.conflict_policy == "drop"
                          ? lad::ConflictPolicy::Drop
                          : lad::ConflictPolicy::Error;
  if (opt.mode == "balance")
    opt.cfg.mode = lad::ClassifierMode::Balance;
  else if (opt.mode == "thresholded")
    opt.cfg.mode = lad::ClassifierMode::Thresholded;
  else
    opt.cfg.mode = lad::ClassifierMode::Simple;
  opt.cfg.validate();
  return opt.cfg;
}

lad::FeatureSchema resolve_schema(const std::string& name) {
  if (name == "nslkdd") return lad::FeatureSchema::nslkdd();
  return lad::load_schema(name);
}

json labeling_to_json(const lad::LabelingReport& r) {
  json out = {{"unlabeled_input", r.unlabeled_input},
              {"labeled", r.labeled},
              {"left_epsilon", r.left_epsilon}};
  if (r.has_truth) {
    out["labeled_correct"] = r.labeled_correct;
    out["labeled_wrong"] = r.labeled_wrong;
    out["accuracy"] = r.accuracy();
  }
  return out;
}

json stats_to_json(const lad::TrainingStats& s) {
  return {{"labeled_rows", s.labeled_rows},
          {"self_labeled_rows", s.self_labeled_rows},
          {"training_rows", s.training_rows},
          {"binary_variables", s.binary_variables},
          {"support_size", s.support_size},
          {"positive_patterns", s.positive_patterns},
          {"negative_patterns", s.negative_patterns},
          {"stage1_binary_variables", s.stage1_binary_variables},
          {"stage1_support_size", s.stage1_support_size},
          {"stage1_positive_patterns", s.stage1_positive_patterns},
          {"stage1_negative_patterns", s.stage1_negative_patterns},
          {"offline_seconds", s.offline_seconds}};
}

json metrics_to_json(const lad::Metrics& m) {
  auto variant = [](const lad::MetricsVariant& v) {
    return json{{"tp", v.confusion.tp},
                {"fp", v.confusion.fp},
                {"tn", v.confusion.tn},
                {"fn", v.confusion.fn},
                {"accuracy", v.accuracy},
                {"precision", v.precision},
                {"sensitivity", v.sensitivity},
                {"f1", v.f1}};
  };
  return {{"rows", m.total},
          {"epsilon", m.epsilon},
          {"epsilon_as_error", variant(m.as_error)},
          {"epsilon_as_attack", variant(m.as_attack)},
          {"epsilon_excluded", variant(m.excluded)},
          {"mean_latency_seconds", m.mean_latency_seconds},
          {"p99_latency_seconds", m.p99_latency_seconds}};
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw lad::DataError("cannot write report: " + path);
  out << j.dump(2) << '\n';
}

int cmd_train(const std::string& labeled_path, const std::string& unlabeled_path,
              size_t split, const std::string& model_path,
              const std::string& report_path, CommonOptions& opt) {
  const lad::PipelineConfig cfg = finish_config(opt);
  const lad::FeatureSchema schema = resolve_schema(opt.schema);

  lad::Dataset d_l = lad::load_csv(labeled_path, true, schema);
  lad::Dataset d_ul{schema, {}};
  if (split > 0) {
    auto [head, tail] = lad::split_random(d_l, split, cfg.seed);
    d_l = std::move(head);
    d_ul = std::move(tail);  // ground truth rides along for the report only
  } else if (!unlabeled_path.empty()) {
    d_ul = lad::load_csv(unlabeled_path, false, schema);
  }

  lad::TrainResult result = lad::train_offline(d_l, d_ul, cfg);
  lad::save_model(result.model, model_path);

  json report = {{"labeling", labeling_to_json(result.labeling)},
                 {"stats", stats_to_json(result.stats)}};
  if (!report_path.empty()) write_json(report, report_path);
  std::cerr << "trained: " << result.stats.training_rows << " rows, "
            << result.stats.binary_variables << " binary variables, "
            << result.stats.support_size << " support columns, "
            << result.stats.positive_patterns << "+/"
            << result.stats.negative_patterns << "- patterns, "
            << result.stats.offline_seconds << " s\n";
  return kExitOk;
}

int cmd_label(const std::string& labeled_path, const std::string& unlabeled_path,
              const std::string& output_path, const std::string& report_path,
              CommonOptions& opt) {
  const lad::PipelineConfig cfg = finish_config(opt);
  const lad::FeatureSchema schema = resolve_schema(opt.schema);
  const lad::Dataset d_l = lad::load_csv(labeled_path, true, schema);
  const lad::Dataset d_ul = lad::load_csv(unlabeled_path, false, schema);
  auto [labeled, report] = lad::self_label(d_l, d_ul, cfg);
  lad::save_csv(labeled, output_path, true);
  if (!report_path.empty()) write_json(labeling_to_json(report), report_path);
  std::cerr << "labeled " << report.labeled << " of " << report.unlabeled_input
            << " rows (" << report.left_epsilon << " left unclassified)\n";
  return kExitOk;
}

int cmd_classify(const std::string& model_path, const std::string& input_path,
                 const std::string& output_path,
                 const std::string& epsilon_policy) {
  const lad::Model model = lad::load_model(model_path);

  std::ifstream in(input_path);
  if (!in) throw lad::ParseError("cannot open file: " + input_path);
  std::ostream* out = &std::cout;
  std::ofstream file_out;
  if (!output_path.empty()) {
    file_out.open(output_path);
    if (!file_out) throw lad::DataError("cannot write output: " + output_path);
    out = &file_out;
  }

  const bool with_delta = model.rules.mode != lad::ClassifierMode::Simple;
  lad::CsvReader reader(in, false, model.schema(), input_path);
  size_t index = 0;
  while (auto obs = reader.next()) {
    const lad::Verdict v = model.classify(*obs);
    std::string cls;
    if (v == lad::Verdict::Normal)
      cls = "1";
    else if (v == lad::Verdict::Attack)
      cls = "0";
    else if (epsilon_policy == "attack")
      cls = "0";
    else if (epsilon_policy == "normal")
      cls = "1";
    else
      cls = "eps";
    (*out) << index << ',' << cls;
    if (with_delta)
      (*out) << ',' << lad::balance_score(model.rules, *obs, model.schema());
    (*out) << '\n';
    ++index;
  }
  return kExitOk;
}

int cmd_evaluate(const std::string& model_path, const std::string& test_path,
                 const std::string& report_path,
                 const std::string& epsilon_policy) {
  const lad::Model model = lad::load_model(model_path);
  const lad::Dataset test = lad::load_csv(test_path, true, model.schema());
  const lad::Metrics metrics = lad::evaluate(model, test);
  std::cout << lad::metrics_table(metrics);
  const lad::EpsilonPolicy policy =
      epsilon_policy == "attack"  ? lad::EpsilonPolicy::AsAttack
      : epsilon_policy == "exclude" ? lad::EpsilonPolicy::Exclude
                                    : lad::EpsilonPolicy::AsError;
  std::cout << "headline accuracy (" << epsilon_policy
            << "): " << metrics.variant(policy).accuracy * 100.0 << "%\n";
  if (!report_path.empty()) write_json(metrics_to_json(metrics), report_path);
  return kExitOk;
}

int cmd_inspect(const std::string& model_path) {
  const lad::Model model = lad::load_model(model_path);
  const auto& schema = model.schema();
  std::cout << "schema: " << schema.size() << " features\n";
  std::cout << "binary variables: " << model.binarizer.descriptors.size()
            << "\n";
  std::cout << "support set (" << model.support.ids.size() << "):\n";
  for (size_t id : model.support.ids)
    std::cout << "  [" << id << "] "
              << model.binarizer.descriptors[id].to_string(schema) << "\n";
  std::cout << "patterns: " << model.positive_patterns.size() << " positive, "
            << model.negative_patterns.size() << " negative\n";
  const char* mode = model.rules.mode == lad::ClassifierMode::Simple
                         ? "simple"
                         : model.rules.mode == lad::ClassifierMode::Balance
                               ? "balance"
                               : "thresholded";
  std::cout << "mode: " << mode;
  if (model.rules.mode == lad::ClassifierMode::Thresholded)
    std::cout << " (tau0 " << model.rules.tau0 << ", tau1 " << model.rules.tau1
              << ")";
  std::cout << "\nrules:\n";
  for (const auto& r : model.rules.positive)
    std::cout << "  " << r.to_string(schema) << "\n";
  for (const auto& r : model.rules.negative)
    std::cout << "  " << r.to_string(schema) << "\n";
  std::cout << "  otherwise "
            << (model.rules.default_class == lad::Label::Normal ? "normal"
                                                                : "attack")
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based two-class intrusion detection trained from partially "
               "labeled NSL-KDD-format records"};
  app.require_subcommand(1);

  CommonOptions train_opt, label_opt;

  auto* train = app.add_subcommand("train", "Offline phase: build a rule model");
  std::string train_labeled, train_unlabeled, train_model, train_report;
  size_t train_split = 0;
  train->add_option("--labeled", train_labeled, "Labeled training CSV")
      ->required();
  train->add_option("--unlabeled", train_unlabeled,
                    "Unlabeled training CSV (omit for supervised training)");
  train->add_option("--split", train_split,
                    "Split N random rows off the labeled file as the labeled "
                    "pool and self-label the rest");
  train->add_option("--model", train_model, "Output model file")->required();
  train->add_option("--report", train_report, "Output training report JSON");
  add_config_flags(train, train_opt);

  auto* label = app.add_subcommand(
      "label", "Self-label an unlabeled pool with a thresholded classifier");
  std::string label_labeled, label_unlabeled, label_output, label_report;
  label->add_option("--labeled", label_labeled, "Labeled training CSV")
      ->required();
  label->add_option("--unlabeled", label_unlabeled, "Unlabeled CSV")->required();
  label->add_option("--output", label_output, "Output CSV of labeled rows")
      ->required();
  label->add_option("--report", label_report, "Output labeling report JSON");
  add_config_flags(label, label_opt);

  auto* classify =
      app.add_subcommand("classify", "Online phase: classify new records");
  std::string cls_model, cls_input, cls_output, cls_eps = "attack";
  classify->add_option("--model", cls_model, "Model file")->required();
  classify->add_option("--input", cls_input, "Input CSV (no labels needed)")
      ->required();
  classify->add_option("--output", cls_output, "Output file (default stdout)");
  classify
      ->add_option("--epsilon-policy", cls_eps,
                   "Unclassified verdicts become: attack|normal|unclassified")
      ->check(CLI::IsMember({"attack", "normal", "unclassified"}));

  auto* evaluate =
      app.add_subcommand("evaluate", "Score a model against a labeled test set");
  std::string eval_model, eval_test, eval_report, eval_eps = "error";
  evaluate->add_option("--model", eval_model, "Model file")->required();
  evaluate->add_option("--test", eval_test, "Labeled test CSV")->required();
  evaluate->add_option("--report", eval_report, "Output metrics JSON");
  evaluate
      ->add_option("--epsilon-policy", eval_eps,
                   "Headline metric counts epsilon as: error|attack|exclude")
      ->check(CLI::IsMember({"error", "attack", "exclude"}));

  auto* inspect = app.add_subcommand("inspect", "Print a model's rules");
  std::string inspect_model;
  inspect->add_option("--model", inspect_model, "Model file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (train->parsed()) {
      if (train_split > 0 && !train_unlabeled.empty()) {
        std::cerr << "error: --split and --unlabeled are mutually exclusive\n";
        return kExitUsage;
      }
      return cmd_train(train_labeled, train_unlabeled, train_split, train_model,
                       train_report, train_opt);
    }
    if (label->parsed())
      return cmd_label(label_labeled, label_unlabeled, label_output,
                       label_report, label_opt);
    if (classify->parsed())
      return cmd_classify(cls_model, cls_input, cls_output, cls_eps);
    if (evaluate->parsed())
      return cmd_evaluate(eval_model, eval_test, eval_report, eval_eps);
    if (inspect->parsed()) return cmd_inspect(inspect_model);
  } catch (const lad::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lad::ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModel;
  } catch (const lad::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const lad::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
