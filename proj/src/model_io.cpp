#include "lad/model.hpp"

#include <fstream>

#include <json.hpp>

#include "lad/error.hpp"

namespace lad {

using nlohmann::json;

namespace {

json schema_to_json(const FeatureSchema& s) {
  json features = json::array();
  for (const auto& f : s.features())
    features.push_back(
        {{"name", f.name},
         {"kind", f.kind == FeatureKind::Continuous ? "continuous" : "symbolic"}});
  return {{"features", features}};
}

FeatureSchema schema_from_json(const json& j) {
  std::vector<FeatureSpec> specs;
  for (const auto& f : j.at("features")) {
    FeatureSpec spec;
    spec.name = f.at("name").get<std::string>();
    const std::string kind = f.at("kind").get<std::string>();
    if (kind == "continuous")
      spec.kind = FeatureKind::Continuous;
    else if (kind == "symbolic")
      spec.kind = FeatureKind::Symbolic;
    else
      throw ModelError("schema: unknown feature kind '" + kind + "'");
    specs.push_back(std::move(spec));
  }
  return FeatureSchema(std::move(specs));
}

json descriptor_to_json(const Descriptor& d) {
  switch (d.kind) {
    case Descriptor::Kind::Level:
      return {{"kind", "level"}, {"feature", d.feature}, {"beta", d.low}};
    case Descriptor::Kind::Interval:
      return {{"kind", "interval"},
              {"feature", d.feature},
              {"low", d.low},
              {"high", d.high}};
    case Descriptor::Kind::Nominal:
      return {{"kind", "nominal"}, {"feature", d.feature}, {"value", d.value}};
  }
  throw ModelError("descriptor: bad kind");
}

Descriptor descriptor_from_json(const json& j) {
  Descriptor d;
  const std::string kind = j.at("kind").get<std::string>();
  d.feature = j.at("feature").get<size_t>();
  if (kind == "level") {
    d.kind = Descriptor::Kind::Level;
    d.low = j.at("beta").get<double>();
  } else if (kind == "interval") {
    d.kind = Descriptor::Kind::Interval;
    d.low = j.at("low").get<double>();
    d.high = j.at("high").get<double>();
  } else if (kind == "nominal") {
    d.kind = Descriptor::Kind::Nominal;
    d.value = j.at("value").get<std::string>();
  } else {
    throw ModelError("descriptor: unknown kind '" + kind + "'");
  }
  return d;
}

const char* prune_name(PruneStatus s) {
  switch (s) {
    case PruneStatus::Kept: return "kept";
    case PruneStatus::LevelOnly: return "level_only";
    case PruneStatus::FullyIgnored: return "fully_ignored";
  }
  return "kept";
}

PruneStatus prune_from_name(const std::string& s) {
  if (s == "kept") return PruneStatus::Kept;
  if (s == "level_only") return PruneStatus::LevelOnly;
  if (s == "fully_ignored") return PruneStatus::FullyIgnored;
  throw ModelError("cut table: unknown prune status '" + s + "'");
}

json cuts_to_json(const CutPointTable& t) {
  json cont = json::array();
  for (const auto& fc : t.continuous)
    cont.push_back({{"feature", fc.feature},
                    {"cut_points", fc.cut_points},
                    {"status", prune_name(fc.status)}});
  json sym = json::array();
  for (const auto& [feature, values] : t.symbolic)
    sym.push_back({{"feature", feature}, {"values", values}});
  return {{"continuous", cont}, {"symbolic", sym}};
}

CutPointTable cuts_from_json(const json& j) {
  CutPointTable t;
  for (const auto& fc : j.at("continuous")) {
    FeatureCuts out;
    out.feature = fc.at("feature").get<size_t>();
    out.cut_points = fc.at("cut_points").get<std::vector<double>>();
    out.status = prune_from_name(fc.at("status").get<std::string>());
    t.continuous.push_back(std::move(out));
  }
  for (const auto& sf : j.at("symbolic"))
    t.symbolic.emplace_back(sf.at("feature").get<size_t>(),
                            sf.at("values").get<std::vector<std::string>>());
  return t;
}

json pattern_to_json(const Pattern& p) {
  json lits = json::array();
  for (const auto& l : p.literals)
    lits.push_back({{"id", l.id}, {"negated", l.negated}});
  return {{"literals", lits}, {"support", p.support}};
}

Pattern pattern_from_json(const json& j, Polarity polarity) {
  Pattern p;
  p.polarity = polarity;
  p.support = j.at("support").get<size_t>();
  for (const auto& l : j.at("literals"))
    p.literals.push_back(
        {l.at("id").get<size_t>(), l.at("negated").get<bool>()});
  return p;
}

json rule_to_json(const Rule& r) {
  json conj = json::array();
  for (const auto& c : r.conjuncts)
    conj.push_back({{"descriptor", descriptor_to_json(c.descriptor)},
                    {"negated", c.negated}});
  return {{"conjuncts", conj},
          {"class", r.consequent == Label::Normal ? 1 : 0}};
}

Rule rule_from_json(const json& j) {
  Rule r;
  r.consequent = j.at("class").get<int>() == 1 ? Label::Normal : Label::Attack;
  for (const auto& c : j.at("conjuncts"))
    r.conjuncts.push_back({descriptor_from_json(c.at("descriptor")),
                           c.at("negated").get<bool>()});
  return r;
}

const char* mode_name(ClassifierMode m) {
  switch (m) {
    case ClassifierMode::Simple: return "simple";
    case ClassifierMode::Balance: return "balance";
    case ClassifierMode::Thresholded: return "thresholded";
  }
  return "simple";
}

ClassifierMode mode_from_name(const std::string& s) {
  if (s == "simple") return ClassifierMode::Simple;
  if (s == "balance") return ClassifierMode::Balance;
  if (s == "thresholded") return ClassifierMode::Thresholded;
  throw ModelError("rules: unknown classifier mode '" + s + "'");
}

json config_to_json(const PipelineConfig& c) {
  return {{"min_support", c.min_support},
          {"stage1_min_support", c.stage1_min_support},
          {"max_degree", c.max_degree},
          {"tau0", c.tau0},
          {"tau1", c.tau1},
          {"prune_full", c.prune_full},
          {"prune_partial", c.prune_partial},
          {"seed", c.seed},
          {"conflicts",
           c.conflicts == ConflictPolicy::Error ? "error" : "drop"},
          {"mode", mode_name(c.mode)}};
}

PipelineConfig config_from_json(const json& j) {
  PipelineConfig c;
  c.min_support = j.at("min_support").get<size_t>();
  c.stage1_min_support = j.at("stage1_min_support").get<size_t>();
  c.max_degree = j.at("max_degree").get<size_t>();
  c.tau0 = j.at("tau0").get<double>();
  c.tau1 = j.at("tau1").get<double>();
  c.prune_full = j.at("prune_full").get<size_t>();
  c.prune_partial = j.at("prune_partial").get<size_t>();
  c.seed = j.at("seed").get<uint64_t>();
  c.conflicts = j.at("conflicts").get<std::string>() == "drop"
                    ? ConflictPolicy::Drop
                    : ConflictPolicy::Error;
  c.mode = mode_from_name(j.at("mode").get<std::string>());
  return c;
}

json model_to_json(const Model& m) {
  json descriptors = json::array();
  for (const auto& d : m.binarizer.descriptors)
    descriptors.push_back(descriptor_to_json(d));
  json pos = json::array(), neg = json::array();
  for (const auto& p : m.positive_patterns) pos.push_back(pattern_to_json(p));
  for (const auto& p : m.negative_patterns) neg.push_back(pattern_to_json(p));
  json rpos = json::array(), rneg = json::array();
  for (const auto& r : m.rules.positive) rpos.push_back(rule_to_json(r));
  for (const auto& r : m.rules.negative) rneg.push_back(rule_to_json(r));
  return {{"format", "lad-model"},
          {"version", Model::kFormatVersion},
          {"schema", schema_to_json(m.binarizer.schema)},
          {"cut_table", cuts_to_json(m.binarizer.cuts)},
          {"descriptors", descriptors},
          {"support_set", m.support.ids},
          {"patterns", {{"positive", pos}, {"negative", neg}}},
          {"rules",
           {{"mode", mode_name(m.rules.mode)},
            {"tau0", m.rules.tau0},
            {"tau1", m.rules.tau1},
            {"default_class", m.rules.default_class == Label::Normal ? 1 : 0},
            {"positive", rpos},
            {"negative", rneg}}},
          {"config", config_to_json(m.config)}};
}

Model model_from_json(const json& j) {
  if (j.value("format", "") != "lad-model")
    throw ModelError("not a model file (missing format tag)");
  if (j.at("version").get<int>() != Model::kFormatVersion)
    throw ModelError("unsupported model version");
  Model m;
  m.binarizer.schema = schema_from_json(j.at("schema"));
  m.binarizer.cuts = cuts_from_json(j.at("cut_table"));
  for (const auto& d : j.at("descriptors"))
    m.binarizer.descriptors.push_back(descriptor_from_json(d));
  m.support.ids = j.at("support_set").get<std::vector<size_t>>();
  for (const auto& p : j.at("patterns").at("positive"))
    m.positive_patterns.push_back(pattern_from_json(p, Polarity::Positive));
  for (const auto& p : j.at("patterns").at("negative"))
    m.negative_patterns.push_back(pattern_from_json(p, Polarity::Negative));
  const auto& rules = j.at("rules");
  m.rules.mode = mode_from_name(rules.at("mode").get<std::string>());
  m.rules.tau0 = rules.at("tau0").get<double>();
  m.rules.tau1 = rules.at("tau1").get<double>();
  m.rules.default_class =
      rules.at("default_class").get<int>() == 1 ? Label::Normal : Label::Attack;
  for (const auto& r : rules.at("positive"))
    m.rules.positive.push_back(rule_from_json(r));
  for (const auto& r : rules.at("negative"))
    m.rules.negative.push_back(rule_from_json(r));
  m.config = config_from_json(j.at("config"));

  for (const auto& desc : m.binarizer.descriptors)
    if (desc.feature >= m.binarizer.schema.size())
      throw ModelError("descriptor references feature " +
                       std::to_string(desc.feature) + " outside the schema");
  for (size_t id : m.support.ids)
    if (id >= m.binarizer.descriptors.size())
      throw ModelError("support set references descriptor " +
                       std::to_string(id) + " outside the descriptor table");
  for (const auto* family : {&m.positive_patterns, &m.negative_patterns})
    for (const auto& p : *family)
      for (const auto& lit : p.literals)
        if (lit.id >= m.binarizer.descriptors.size())
          throw ModelError("pattern references descriptor " +
                           std::to_string(lit.id) +
                           " outside the descriptor table");
  return m;
}

}  // namespace

void PipelineConfig::validate() const {
  if (min_support < 1 || stage1_min_support < 1)
    throw ConfigError("support threshold k must be >= 1");
  if (max_degree < 1) throw ConfigError("max degree must be >= 1");
  if (tau0 > tau1) throw ConfigError("tau0 must not exceed tau1");
  if (prune_partial == 0 || prune_partial >= prune_full)
    throw ConfigError("pruning thresholds must satisfy 0 < partial < full");
}

Verdict Model::classify(const Observation& obs) const {
  return lad::classify(rules, obs, binarizer.schema);
}

std::string to_json_string(const Model& m, int indent) {
  return model_to_json(m).dump(indent);
}

Model model_from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ModelError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    return model_from_json(j);
  } catch (const json::exception& e) {
    throw ModelError(std::string("model file is malformed: ") + e.what());
  }
}

void save_model(const Model& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot open model file for writing: " + path.string());
  out << to_json_string(m) << '\n';
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return model_from_json_string(text);
}

FeatureSchema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open schema file: " + path.string());
  try {
    return schema_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw ModelError(std::string("schema file is malformed: ") + e.what());
  }
}

bool operator==(const Model& a, const Model& b) {
  return model_to_json(a) == model_to_json(b);
}

}  // namespace lad
