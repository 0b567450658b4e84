#include <doctest.h>

#include "lad/error.hpp"
#include "lad/eval.hpp"
#include "lad/ssl.hpp"
#include "helpers.hpp"

using namespace lad;

namespace {

// A one-rule model over a single feature: x >= 0.5 means normal.
Model threshold_model() {
  FeatureSchema schema({{"x", FeatureKind::Continuous}});
  Dataset d{schema, {}};
  auto add = [&](double x, Label l) {
    Observation obs;
    obs.nums = {x};
    obs.label = l;
    d.rows.push_back(obs);
  };
  add(1.0, Label::Normal);
  add(0.0, Label::Attack);
  PipelineConfig cfg;
  cfg.min_support = 1;
  return train_offline(d, Dataset{schema, {}}, cfg).model;
}

Dataset labeled_rows(const FeatureSchema& schema,
                     const std::vector<std::pair<double, Label>>& rows) {
  Dataset d{schema, {}};
  for (const auto& [x, l] : rows) {
    Observation obs;
    obs.nums = {x};
    obs.label = l;
    d.rows.push_back(obs);
  }
  return d;
}

}  // namespace

TEST_CASE("a perfect classifier scores perfectly") {
  const Model m = threshold_model();
  const Dataset test = labeled_rows(
      m.schema(), {{2.0, Label::Normal}, {0.2, Label::Attack},
                   {0.9, Label::Normal}, {0.1, Label::Attack}});
  const Metrics metrics = evaluate(m, test);
  CHECK(metrics.epsilon == 0);
  CHECK(metrics.as_error.accuracy == 1.0);
  CHECK(metrics.as_error.f1 == 1.0);
  CHECK(metrics.as_error.precision == 1.0);
  CHECK(metrics.as_error.sensitivity == 1.0);
}

TEST_CASE("confusion arithmetic matches the closed forms") {
  const Model m = threshold_model();
  // tp=2 (normal above), fp=1 (attack above), tn=1, fn=0
  const Dataset test = labeled_rows(
      m.schema(), {{1.0, Label::Normal}, {2.0, Label::Normal},
                   {3.0, Label::Attack}, {0.0, Label::Attack}});
  const Metrics metrics = evaluate(m, test);
  const auto& v = metrics.as_error;
  CHECK(v.confusion.tp == 2);
  CHECK(v.confusion.fp == 1);
  CHECK(v.confusion.tn == 1);
  CHECK(v.confusion.fn == 0);
  CHECK(v.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(v.sensitivity == 1.0);
  CHECK(v.f1 == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(v.accuracy == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(v.confusion.total() + metrics.epsilon == metrics.total);
}

TEST_CASE("epsilon policies differ only in epsilon attribution") {
  Model m = threshold_model();
  // one rule per family means scores of exactly +-1; a closed [-1, 1] band
  // swallows every verdict
  m.rules.mode = ClassifierMode::Thresholded;
  m.rules.tau0 = -1.0;
  m.rules.tau1 = 1.0;

  const Dataset test = labeled_rows(
      m.schema(), {{1.0, Label::Normal}, {0.0, Label::Attack},
                   {2.0, Label::Normal}, {0.3, Label::Attack}});
  const Metrics metrics = evaluate(m, test);

  // the wide band makes everything epsilon here
  CHECK(metrics.epsilon == metrics.total);
  CHECK(metrics.as_error.accuracy == 0.0);
  // as-attack: attacks are right, normals wrong
  CHECK(metrics.as_attack.confusion.tn == 2);
  CHECK(metrics.as_attack.confusion.fn == 2);
  CHECK(metrics.as_attack.accuracy == doctest::Approx(0.5).epsilon(1e-12));
  // excluded: nothing remains
  CHECK(metrics.excluded.confusion.total() == 0);
  CHECK(metrics.excluded.accuracy == 0.0);

  CHECK(metrics.as_error.confusion.total() == metrics.total);
  CHECK(metrics.excluded.confusion.total() == metrics.total - metrics.epsilon);
}

TEST_CASE("evaluate validates its input") {
  const Model m = threshold_model();
  CHECK_THROWS_AS(evaluate(m, Dataset{m.schema(), {}}), DataError);

  Dataset unlabeled{m.schema(), {}};
  Observation obs;
  obs.nums = {1.0};
  unlabeled.rows.push_back(obs);
  CHECK_THROWS_AS(evaluate(m, unlabeled), DataError);

  // a test set with a different column layout cannot be scored
  Dataset wrong{FeatureSchema({{"x", FeatureKind::Continuous},
                               {"y", FeatureKind::Continuous}}),
                {}};
  Observation two;
  two.nums = {1.0, 2.0};
  two.label = Label::Normal;
  wrong.rows.push_back(two);
  CHECK_THROWS_AS(evaluate(m, wrong), ModelError);
}

TEST_CASE("latency is reported and does not depend on labels") {
  const Model m = threshold_model();
  Dataset big{m.schema(), {}};
  testing::Rng rng(3);
  for (int i = 0; i < 4000; ++i) {
    Observation obs;
    obs.nums = {rng.uniform() * 2.0};
    obs.label = rng.flip() ? Label::Normal : Label::Attack;
    big.rows.push_back(obs);
  }
  const double per_obs = time_classification(m, big);
  CHECK(per_obs > 0.0);
  CHECK(per_obs < 1e-3);  // a one-rule model is far below a millisecond

  const Metrics metrics = evaluate(m, big);
  CHECK(metrics.mean_latency_seconds > 0.0);
  CHECK(metrics.p99_latency_seconds >= metrics.mean_latency_seconds / 100.0);
}
