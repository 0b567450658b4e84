// Acceptance suite: runs every gate criterion and prints one verdict line per
// criterion. Criteria that need the NSL-KDD files are skipped when the files
// are absent (scripts/fetch_nslkdd.sh downloads them).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lad/binarizer.hpp"
#include "lad/classifier.hpp"
#include "lad/csv.hpp"
#include "lad/error.hpp"
#include "lad/eval.hpp"
#include "lad/fixtures.hpp"
#include "lad/model.hpp"
#include "lad/pattern.hpp"
#include "lad/ssl.hpp"
#include "lad/support_set.hpp"

namespace {

using namespace lad;

struct Criterion {
  std::string name;
  enum class State { Pass, Fail, Skip } state = State::Pass;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    notes.push_back(std::string(ok ? "  ok   " : "  FAIL ") + what);
    if (!ok) state = State::Fail;
  }
  void note(const std::string& what) { notes.push_back("       " + what); }
  void skip(const std::string& why) {
    state = State::Skip;
    notes.push_back("       skipped: " + why);
  }
};

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  size_t below(size_t bound) { return static_cast<size_t>(next() % bound); }
  bool flip() { return next() & 1; }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

std::string render_literal(const Literal& lit,
                           const std::vector<Descriptor>& descriptors,
                           const FeatureSchema& schema) {
  return (lit.negated ? "!" : "") + descriptors[lit.id].to_string(schema);
}

std::vector<std::string> render_pattern(const Pattern& p,
                                        const std::vector<Descriptor>& ds,
                                        const FeatureSchema& schema) {
  std::vector<std::string> out;
  for (const auto& lit : p.literals) out.push_back(render_literal(lit, ds, schema));
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------- criterion 1

Criterion golden_worked_example() {
  Criterion c{"golden worked example (exact)"};
  const auto started = std::chrono::steady_clock::now();

  const GoldenCase golden = worked_example();
  const Dataset& d = golden.dataset;

  // stage 1: cut-points
  const BinarizerModel fitted = fit_binarizer(d);
  std::map<std::string, std::vector<double>> cuts;
  for (const auto& fc : fitted.cuts.continuous)
    cuts[d.schema.at(fc.feature).name] = fc.cut_points;
  c.check(cuts == golden.cut_points,
          "cut-points per feature match the expected table exactly");

  // stage 2: binary matrix, column-matched through descriptor identity
  const BinaryDataset bin = binarize(d);
  bool matrix_ok = bin.cols() == golden.reference_descriptors.size();
  for (size_t rc = 0; matrix_ok && rc < golden.reference_descriptors.size();
       ++rc) {
    const auto it =
        std::find(bin.descriptors.begin(), bin.descriptors.end(),
                  golden.reference_descriptors[rc]);
    if (it == bin.descriptors.end()) {
      matrix_ok = false;
      break;
    }
    const size_t col = static_cast<size_t>(it - bin.descriptors.begin());
    for (size_t r = 0; r < bin.rows(); ++r)
      matrix_ok = matrix_ok &&
                  bin.bits.get(r, col) == golden.reference_matrix.get(r, rc) &&
                  bin.labels[r] == golden.reference_labels[r];
  }
  c.check(matrix_ok,
          "binary matrix matches the expected 15 columns bit-for-bit "
          "(columns matched by descriptor)");

  // stage 3: support set
  const SupportSet support = select_support_set(bin);
  std::vector<std::string> support_names;
  for (size_t id : support.ids)
    support_names.push_back(bin.descriptors[id].to_string(d.schema));
  const std::set<std::string> got_set(support_names.begin(),
                                      support_names.end());
  const std::set<std::string> want_set(golden.support_set_names.begin(),
                                       golden.support_set_names.end());
  c.check(got_set == want_set,
          "support set equals {" + join(golden.support_set_names, ", ") + "}");
  if (got_set != want_set)
    c.note("selected instead: {" + join(support_names, ", ") + "}");

  // stage 4: patterns over the selected support set
  const BinaryDataset projected = project(bin, support);
  const PatternConfig pat_cfg{1, 4};
  const auto pos = generate_patterns(projected, Polarity::Positive, pat_cfg);
  const auto neg = generate_patterns(projected, Polarity::Negative, pat_cfg);

  auto rendered = [&](const std::vector<Pattern>& ps) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : ps)
      out.push_back(render_pattern(p, bin.descriptors, d.schema));
    return out;
  };
  const auto got_pos = rendered(pos);
  const auto got_neg = rendered(neg);
  c.check(got_pos == golden.positive_patterns,
          "positive patterns match the expected three in order");
  auto as_set = [](std::vector<std::vector<std::string>> v) {
    std::set<std::string> out;
    for (auto& p : v) out.insert(join(p, " & "));
    return out;
  };
  c.check(as_set(got_neg) == as_set(golden.negative_patterns),
          "negative patterns match the expected two");
  if (got_pos != golden.positive_patterns) {
    for (const auto& p : got_pos) c.note("positive: " + join(p, " & "));
    for (const auto& p : got_neg) c.note("negative: " + join(p, " & "));
  }

  // stage 5: compiled rules
  const RuleSet rules = compile_rules(pos, neg, bin.descriptors, d.schema);
  std::vector<std::string> rule_text;
  for (const auto& r : rules.positive) rule_text.push_back(r.to_string(d.schema));
  c.check(rule_text == golden.rules_text,
          "compiled positive rules match the reference listing in order");
  if (rule_text != golden.rules_text)
    for (const auto& r : rule_text) c.note("rule: " + r);

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  c.check(seconds < 1.0, "whole chain ran in under one second");
  return c;
}

// ------------------------------------------------------- criteria 2 and 3

struct NslkddFiles {
  std::filesystem::path train, test_plus, test_21;
};

std::optional<NslkddFiles> find_nslkdd() {
  std::filesystem::path dir = "data/nslkdd";
  if (const char* env = std::getenv("LADIDS_NSLKDD_DIR")) dir = env;
  NslkddFiles files{dir / "KDDTrain+_20Percent.txt", dir / "KDDTest+.txt",
                    dir / "KDDTest-21.txt"};
  if (std::filesystem::exists(files.train) &&
      std::filesystem::exists(files.test_plus) &&
      std::filesystem::exists(files.test_21))
    return files;
  return std::nullopt;
}

struct NslkddRun {
  TrainResult semi;
  Model supervised;
  Metrics semi_plus, semi_21, supervised_21;
};

std::optional<NslkddRun> run_nslkdd(const NslkddFiles& files, Criterion& c) {
  const Dataset full = load_csv(files.train, true);
  c.note("KDDTrain+_20Percent: " + std::to_string(full.size()) + " rows");
  PipelineConfig cfg;  // defaults: k=100, degree 4, tau band, pruning 75/175
  auto [d_l, d_ul] = split_random(full, 5000, cfg.seed + 1);

  NslkddRun run;
  run.semi = train_offline(d_l, d_ul, cfg);
  const Dataset test_plus = load_csv(files.test_plus, true);
  const Dataset test_21 = load_csv(files.test_21, true);
  run.semi_plus = evaluate(run.semi.model, test_plus);
  run.semi_21 = evaluate(run.semi.model, test_21);
  run.supervised = train_offline(d_l, Dataset{full.schema, {}}, cfg).model;
  run.supervised_21 = evaluate(run.supervised, test_21);
  return run;
}

Criterion nslkdd_end_to_end(const std::optional<NslkddRun>& run, Criterion c) {
  if (!run) return c;
  const auto& labeling = run->semi.labeling;
  const auto& stats = run->semi.stats;
  std::ostringstream head;
  head << "labeled " << labeling.labeled << ", epsilon "
       << labeling.left_epsilon << ", labeling accuracy "
       << labeling.accuracy() * 100.0 << "%";
  c.note(head.str());
  std::ostringstream mid;
  mid << stats.binary_variables << " binary variables, support "
      << stats.support_size << ", patterns " << stats.positive_patterns << "+/"
      << stats.negative_patterns << "-, offline " << stats.offline_seconds
      << " s";
  c.note(mid.str());

  c.check(labeling.accuracy() >= 0.97,
          "self-labeling accuracy on the labeled subset >= 97%");
  c.check(labeling.left_epsilon >= 1591 && labeling.left_epsilon <= 3591,
          "epsilon count within 2591 +- 1000");
  c.check(stats.positive_patterns >= 7 && stats.positive_patterns <= 19,
          "final positive-pattern count within 13 +- 6");
  c.check(run->semi_plus.as_error.accuracy >= 0.88,
          "KDDTest+ accuracy >= 88% (epsilon as error), got " +
              std::to_string(run->semi_plus.as_error.accuracy * 100.0) + "%");
  c.check(run->semi_21.as_error.accuracy >= 0.80,
          "KDDTest-21 accuracy >= 80% (epsilon as error), got " +
              std::to_string(run->semi_21.as_error.accuracy * 100.0) + "%");
  if (stats.offline_seconds > 1800.0)
    c.note(
        "offline phase exceeded 30 minutes; the run still counts when "
        "correct");
  return c;
}

Criterion supervised_baseline(const std::optional<NslkddRun>& run) {
  Criterion c{"semi-supervised beats the supervised baseline on KDDTest-21"};
  if (!run) {
    c.skip("NSL-KDD files not found; run scripts/fetch_nslkdd.sh");
    return c;
  }
  const double semi = run->semi_21.as_error.accuracy;
  const double supervised = run->supervised_21.as_error.accuracy;
  std::ostringstream line;
  line << "semi-supervised " << semi * 100.0 << "%, supervised "
       << supervised * 100.0 << "%";
  c.note(line.str());
  c.check(semi - supervised >= 0.01, "margin of at least one percentage point");
  return c;
}

// ---------------------------------------------------------------- criterion 4

Criterion online_latency(const std::optional<NslkddRun>& run) {
  Criterion c{"online latency"};

  // A 41-feature model with a realistic rule count (13 positive rules of
  // degree 3-4), classified single-threaded over 20000 synthetic records.
  const FeatureSchema schema = FeatureSchema::nslkdd();
  Rng rng(4242);

  Model model;
  model.binarizer.schema = schema;
  std::vector<size_t> continuous;
  for (size_t f = 0; f < schema.size(); ++f)
    if (schema.at(f).kind == FeatureKind::Continuous) continuous.push_back(f);
  for (size_t f : continuous) {
    for (double beta : {8.0, 5.0, 2.0})
      model.binarizer.descriptors.push_back(
          {Descriptor::Kind::Level, f, beta, 0.0, {}});
    model.binarizer.descriptors.push_back(
        {Descriptor::Kind::Interval, f, 2.0, 8.0, {}});
  }
  auto random_pattern = [&](Polarity pol) {
    Pattern p;
    p.polarity = pol;
    p.support = 100;
    std::set<size_t> used;
    const size_t degree = 3 + rng.below(2);
    while (p.literals.size() < degree) {
      const size_t id = rng.below(model.binarizer.descriptors.size());
      if (used.insert(id).second) p.literals.push_back({id, rng.flip()});
    }
    return p;
  };
  for (int i = 0; i < 13; ++i)
    model.positive_patterns.push_back(random_pattern(Polarity::Positive));
  for (int i = 0; i < 7; ++i)
    model.negative_patterns.push_back(random_pattern(Polarity::Negative));
  model.rules = compile_rules(model.positive_patterns, model.negative_patterns,
                              model.binarizer.descriptors, schema);
  c.note("reference-sized model: 13 positive rules over " +
         std::to_string(model.binarizer.descriptors.size()) +
         " binary variables");

  Dataset workload{schema, {}};
  for (int i = 0; i < 20000; ++i) {
    Observation obs;
    for (size_t f = 0; f < schema.size(); ++f) {
      if (schema.at(f).kind == FeatureKind::Continuous)
        obs.nums.push_back(rng.uniform() * 10.0);
      else
        obs.syms.push_back(rng.flip() ? "tcp" : "udp");
    }
    workload.rows.push_back(std::move(obs));
  }
  const double per_obs = time_classification(model, workload);
  std::ostringstream line;
  line << "synthetic workload: " << per_obs << " s per observation";
  c.note(line.str());
  c.check(per_obs <= 1e-3, "mean latency <= 1 ms per observation");

  if (run) {
    std::ostringstream real;
    real << "NSL-KDD model on KDDTest+: "
         << run->semi_plus.mean_latency_seconds << " s per observation";
    c.note(real.str());
    c.check(run->semi_plus.mean_latency_seconds <= 1e-3,
            "NSL-KDD model mean latency <= 1 ms per observation");
  }
  return c;
}

// ---------------------------------------------------------------- criterion 5

BinaryDataset make_binary(const std::vector<std::vector<int>>& rows,
                          const std::vector<int>& labels) {
  BinaryDataset b;
  const size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < ncols; ++col) {
    Descriptor desc;
    desc.kind = Descriptor::Kind::Level;
    desc.feature = col;
    desc.low = 0.5;
    b.descriptors.push_back(desc);
    b.column_ids.push_back(col);
  }
  b.bits = BitMatrix(rows.size(), ncols);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t col = 0; col < ncols; ++col)
      b.bits.set(r, col, rows[r][col] != 0);
  for (int l : labels) b.labels.push_back(l ? Label::Normal : Label::Attack);
  return b;
}

BinaryDataset random_binary(Rng& rng, size_t max_cols, size_t max_rows) {
  const size_t ncols = 1 + rng.below(max_cols);
  const size_t nrows = 2 + rng.below(max_rows - 1);
  std::vector<std::vector<int>> rows(nrows, std::vector<int>(ncols));
  std::vector<int> labels(nrows);
  for (size_t r = 0; r < nrows; ++r) {
    for (size_t col = 0; col < ncols; ++col) rows[r][col] = rng.flip();
    labels[r] = rng.flip();
  }
  return make_binary(rows, labels);
}

BinaryDataset random_separable_binary(Rng& rng, size_t max_cols,
                                      size_t max_rows) {
  while (true) {
    const size_t ncols = 2 + rng.below(max_cols - 1);
    const size_t want = 2 + rng.below(max_rows - 1);
    std::set<std::string> seen;
    std::vector<std::vector<int>> rows;
    for (size_t tries = 0; tries < want * 8 && rows.size() < want; ++tries) {
      std::vector<int> row(ncols);
      std::string key;
      for (size_t col = 0; col < ncols; ++col) {
        row[col] = rng.flip();
        key += char('0' + row[col]);
      }
      if (!seen.insert(key).second) continue;
      rows.push_back(std::move(row));
    }
    if (rows.size() < 2) continue;
    std::vector<int> labels(rows.size());
    bool pos = false, neg = false;
    for (size_t r = 0; r < rows.size(); ++r) {
      labels[r] = rng.flip();
      (labels[r] ? pos : neg) = true;
    }
    if (pos && neg) return make_binary(rows, labels);
  }
}

bool projection_disjoint(const BinaryDataset& b,
                         const std::vector<size_t>& cols) {
  std::set<std::string> pos, neg;
  for (size_t r = 0; r < b.rows(); ++r) {
    std::string key;
    for (size_t col : cols) key += char('0' + b.bits.get(r, col));
    (b.labels[r] == Label::Normal ? pos : neg).insert(key);
  }
  for (const auto& k : pos)
    if (neg.count(k)) return false;
  return true;
}

Criterion property_suites() {
  Criterion c{"property suites"};

  {  // pattern soundness over 1000 random datasets
    Rng rng(90210);
    size_t emitted_total = 0;
    bool sound = true, prime = true, partitioned = true;
    for (int iter = 0; iter < 1000 && sound && prime && partitioned; ++iter) {
      const BinaryDataset b = random_binary(rng, 10, 60);
      const PatternConfig cfg{1 + rng.below(3), 1 + rng.below(4)};
      for (const Polarity pol : {Polarity::Positive, Polarity::Negative}) {
        GenerationTrace trace;
        const auto patterns = generate_patterns(b, pol, cfg, &trace);
        emitted_total += patterns.size();
        const Label target =
            pol == Polarity::Positive ? Label::Normal : Label::Attack;
        std::set<size_t> claimed;
        for (const auto& emission : trace.emissions) {
          const Pattern& p = emission.pattern;
          const Coverage cov = coverage(p, b);
          size_t on_target = 0;
          for (size_t r : cov.row_ids) {
            if (b.labels[r] != target) sound = false;
            ++on_target;
          }
          if (on_target < cfg.min_support || p.support < cfg.min_support)
            sound = false;
          if (p.degree() >= 2) {
            for (size_t skip = 0; skip < p.degree() && prime; ++skip) {
              std::vector<Literal> sub;
              for (size_t i = 0; i < p.degree(); ++i)
                if (i != skip) sub.push_back(p.literals[i]);
              prime = trace.candidate_sets[p.degree() - 1].count(
                          GenerationTrace::key(sub, b)) == 1;
            }
          }
          for (size_t r : emission.covered_rows)
            if (!claimed.insert(r).second) partitioned = false;
        }
      }
    }
    c.check(sound,
            "pattern soundness: zero opposite coverage and support >= k on "
            "1000 random datasets");
    c.check(prime, "emission-time primality holds under instrumented replay");
    c.check(partitioned, "coverage removal partitions the claimed target rows");
    c.note("emitted " + std::to_string(emitted_total) + " patterns in total");
  }

  {  // coverage completeness at k=1, degree = column count
    Rng rng(31337);
    bool complete = true;
    for (int iter = 0; iter < 500 && complete; ++iter) {
      const BinaryDataset b = random_separable_binary(rng, 8, 24);
      const PatternConfig cfg{1, b.cols()};
      for (const Polarity pol : {Polarity::Positive, Polarity::Negative}) {
        const Label target =
            pol == Polarity::Positive ? Label::Normal : Label::Attack;
        std::set<size_t> covered;
        for (const auto& p : generate_patterns(b, pol, cfg))
          for (size_t r : coverage(p, b).row_ids) covered.insert(r);
        for (size_t r = 0; r < b.rows(); ++r)
          if (b.labels[r] == target && !covered.count(r)) complete = false;
      }
    }
    c.check(complete,
            "coverage completeness: k=1 with unbounded degree covers every "
            "target row on 500 separable datasets");
  }

  {  // zero-width band equals the sign classifier; widening only abstains
    const GoldenCase golden = worked_example();
    const auto fitted = fit_and_binarize(golden.dataset);
    Rng rng(1789);
    bool equal = true, monotone = true;
    for (int iter = 0; iter < 200 && equal && monotone; ++iter) {
      const size_t q = 1 + rng.below(5), r = 1 + rng.below(5);
      auto random_pattern = [&](Polarity pol) {
        Pattern p;
        p.polarity = pol;
        std::set<size_t> used;
        const size_t degree = 1 + rng.below(3);
        for (size_t i = 0; i < degree; ++i) {
          const size_t id = rng.below(fitted.model.descriptors.size());
          if (used.insert(id).second) p.literals.push_back({id, rng.flip()});
        }
        return p;
      };
      std::vector<Pattern> pos, neg;
      for (size_t i = 0; i < q; ++i)
        pos.push_back(random_pattern(Polarity::Positive));
      for (size_t i = 0; i < r; ++i)
        neg.push_back(random_pattern(Polarity::Negative));
      RuleSet rs =
          compile_rules(pos, neg, fitted.model.descriptors, fitted.model.schema);
      rs.tau0 = 0.0;
      rs.tau1 = 0.0;
      RuleSet wide = rs;
      wide.tau0 = -0.3 - rng.uniform() * 0.4;
      wide.tau1 = 0.3 + rng.uniform() * 0.4;
      for (int o = 0; o < 50; ++o) {
        Observation obs;
        obs.nums = {rng.uniform() * 5.0, rng.uniform() * 5.0,
                    rng.uniform() * 6.0};
        const Verdict sign = classify_balance(rs, obs, fitted.model.schema);
        const Verdict zero = classify_thresholded(rs, obs, fitted.model.schema);
        equal = equal && (sign == zero);
        const Verdict wider =
            classify_thresholded(wide, obs, fitted.model.schema);
        if (wider != Verdict::Unclassified)
          monotone = monotone && (wider == sign);
        if (sign == Verdict::Unclassified)
          monotone = monotone && (wider == Verdict::Unclassified);
      }
    }
    c.check(equal, "zero-width thresholds reproduce the sign classifier");
    c.check(monotone, "widening the band only moves verdicts to unclassified");
  }

  {  // de-binarization fidelity on 10^4 random observations
    const GoldenCase golden = worked_example();
    const auto fitted = fit_and_binarize(golden.dataset);
    Rng rng(60601);
    bool faithful = true;
    size_t checked = 0;
    while (checked < 10000 && faithful) {
      Pattern p;
      p.polarity = Polarity::Positive;
      std::set<size_t> used;
      const size_t degree = 1 + rng.below(4);
      for (size_t i = 0; i < degree; ++i) {
        const size_t id = rng.below(fitted.model.descriptors.size());
        if (used.insert(id).second) p.literals.push_back({id, rng.flip()});
      }
      const RuleSet rs =
          compile_rules({p}, {}, fitted.model.descriptors, fitted.model.schema);
      for (int o = 0; o < 100; ++o, ++checked) {
        Observation obs;
        obs.nums = {rng.uniform() * 5.0, rng.uniform() * 5.0,
                    rng.uniform() * 6.0};
        const auto bits = fitted.model.apply(obs);
        bool fires = true;
        for (const auto& lit : p.literals)
          fires = fires && (bits[lit.id] != lit.negated);
        faithful = faithful &&
                   (rs.positive[0].fires(obs, fitted.model.schema) == fires);
      }
    }
    c.check(faithful,
            "compiled-rule evaluation equals pattern evaluation on binarized "
            "rows for 10^4 observations");
  }

  {  // support-set separation and brute-force floor
    Rng rng(404);
    bool separated = true, floor_ok = true;
    for (int iter = 0; iter < 300 && separated && floor_ok; ++iter) {
      const BinaryDataset b = random_separable_binary(rng, 12, 30);
      const SupportSet s = select_support_set(b);
      separated = projection_disjoint(b, s.ids);
      if (b.cols() <= 12) {
        size_t optimum = b.cols() + 1;
        for (uint32_t mask = 1; mask < (1u << b.cols()); ++mask) {
          std::vector<size_t> cols;
          for (size_t col = 0; col < b.cols(); ++col)
            if (mask & (1u << col)) cols.push_back(col);
          if (cols.size() >= optimum) continue;
          if (projection_disjoint(b, cols)) optimum = cols.size();
        }
        floor_ok = s.ids.size() >= optimum;
      }
    }
    c.check(separated,
            "projected classes stay disjoint on every generated instance");
    c.check(floor_ok,
            "greedy size never undercuts the brute-force optimum (<=12 cols)");
  }

  return c;
}

// ---------------------------------------------------------------- criterion 6

Criterion variable_accounting() {
  Criterion c{"binary-variable accounting"};
  FeatureSchema schema({{"x", FeatureKind::Continuous}});
  Dataset d{schema, {}};
  for (int i = 0; i <= 100; ++i) {
    Observation obs;
    obs.nums = {static_cast<double>(i)};
    obs.label = (i % 2) ? Label::Normal : Label::Attack;
    d.rows.push_back(obs);
  }
  const BinarizerModel probe = fit_binarizer(d);
  c.check(probe.cuts.continuous[0].cut_points.size() == 100,
          "synthetic feature produces exactly 100 cut-points");

  BinarizerConfig keep;
  keep.prune_partial = 150;
  keep.prune_full = 300;
  const BinaryDataset kept = binarize(d, keep);
  c.check(kept.cols() == 5050, "kept feature emits exactly 5050 variables");

  const BinaryDataset level_only = binarize(d);  // default 75/175 thresholds
  bool all_levels = level_only.cols() == 100;
  for (const auto& desc : level_only.descriptors)
    all_levels = all_levels && desc.kind == Descriptor::Kind::Level;
  c.check(all_levels, "level-only feature emits exactly 100 level variables");
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;

  results.push_back(golden_worked_example());

  std::optional<NslkddRun> nslkdd;
  Criterion c2{"NSL-KDD end-to-end (statistical)"};
  if (const auto files = find_nslkdd()) {
    try {
      nslkdd = run_nslkdd(*files, c2);
    } catch (const std::exception& e) {
      c2.check(false, std::string("pipeline failed: ") + e.what());
    }
    results.push_back(nslkdd_end_to_end(nslkdd, std::move(c2)));
  } else {
    c2.skip("NSL-KDD files not found; run scripts/fetch_nslkdd.sh");
    results.push_back(std::move(c2));
  }
  results.push_back(supervised_baseline(nslkdd));
  results.push_back(online_latency(nslkdd));
  results.push_back(property_suites());
  results.push_back(variable_accounting());

  bool any_fail = false;
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& c = results[i];
    const char* verdict = c.state == Criterion::State::Pass   ? "PASS"
                          : c.state == Criterion::State::Fail ? "FAIL"
                                                              : "SKIP";
    std::cout << "criterion " << (i + 1) << ": " << verdict << " - " << c.name
              << "\n";
    for (const auto& note : c.notes) std::cout << note << "\n";
    any_fail = any_fail || c.state == Criterion::State::Fail;
  }
  return any_fail ? 1 : 0;
}
