#include "lad/classifier.hpp"

#include <cstdint>
#include <sstream>

#include "lad/error.hpp"

namespace lad {

std::string RulePredicate::to_string(const FeatureSchema& schema) const {
  if (negated) return "not (" + descriptor.to_string(schema) + ")";
  return "(" + descriptor.to_string(schema) + ")";
}

bool Rule::fires(const Observation& obs, const FeatureSchema& schema) const {
  for (const auto& c : conjuncts)
    if (!c.evaluate(obs, schema)) return false;
  return true;
}

std::string Rule::to_string(const FeatureSchema& schema) const {
  std::ostringstream out;
  out << "if ";
  for (size_t i = 0; i < conjuncts.size(); ++i) {
    if (i) out << " and ";
    out << conjuncts[i].to_string(schema);
  }
  if (conjuncts.empty()) out << "true";
  out << " then " << (consequent == Label::Normal ? "normal" : "attack");
  return out.str();
}

RuleSet compile_rules(const std::vector<Pattern>& positive,
                      const std::vector<Pattern>& negative,
                      const std::vector<Descriptor>& descriptors,
                      const FeatureSchema& schema) {
  RuleSet rs;
  auto compile = [&](const Pattern& p, Label consequent) {
    Rule rule;
    rule.consequent = consequent;
    rule.conjuncts.reserve(p.literals.size());
    for (const auto& lit : p.literals) {
      if (lit.id >= descriptors.size())
        throw ModelError("compile_rules: literal id " + std::to_string(lit.id) +
                         " has no descriptor");
      if (descriptors[lit.id].feature >= schema.size())
        throw ModelError("compile_rules: descriptor feature index out of range");
      rule.conjuncts.push_back({descriptors[lit.id], lit.negated});
    }
    return rule;
  };
  rs.positive.reserve(positive.size());
  for (const auto& p : positive) rs.positive.push_back(compile(p, Label::Normal));
  rs.negative.reserve(negative.size());
  for (const auto& p : negative) rs.negative.push_back(compile(p, Label::Attack));
  return rs;
}

Label classify_simple(const RuleSet& rs, const Observation& obs,
                      const FeatureSchema& schema) {
  for (const auto& rule : rs.positive)
    if (rule.fires(obs, schema)) return Label::Normal;
  return rs.default_class;
}

namespace {

struct Firings {
  int64_t positive = 0;
  int64_t negative = 0;
};

Firings count_firings(const RuleSet& rs, const Observation& obs,
                      const FeatureSchema& schema) {
  if (rs.positive.empty() || rs.negative.empty())
    throw ConfigError(
        "balance score needs both a positive and a negative rule family");
  Firings f;
  for (const auto& rule : rs.positive) f.positive += rule.fires(obs, schema);
  for (const auto& rule : rs.negative) f.negative += rule.fires(obs, schema);
  return f;
}

}  // namespace

double balance_score(const RuleSet& rs, const Observation& obs,
                     const FeatureSchema& schema) {
  const Firings f = count_firings(rs, obs, schema);
  return static_cast<double>(f.positive) / rs.positive.size() -
         static_cast<double>(f.negative) / rs.negative.size();
}

Verdict classify_balance(const RuleSet& rs, const Observation& obs,
                         const FeatureSchema& schema) {
  const Firings f = count_firings(rs, obs, schema);
  // sign(a/q - b/r) == sign(a*r - b*q), exactly.
  const int64_t cross = f.positive * static_cast<int64_t>(rs.negative.size()) -
                        f.negative * static_cast<int64_t>(rs.positive.size());
  if (cross > 0) return Verdict::Normal;
  if (cross < 0) return Verdict::Attack;
  return Verdict::Unclassified;
}

Verdict classify_thresholded(const RuleSet& rs, const Observation& obs,
                             const FeatureSchema& schema) {
  if (rs.tau0 > rs.tau1)
    throw ConfigError("classify_thresholded: tau0 must not exceed tau1");
  const Firings f = count_firings(rs, obs, schema);
  const int64_t q = static_cast<int64_t>(rs.positive.size());
  const int64_t r = static_cast<int64_t>(rs.negative.size());
  // Compare a/q - b/r against tau via cross-multiplication by q*r (> 0), so
  // the tau = 0 band is decided on integers.
  const double cross = static_cast<double>(f.positive * r - f.negative * q);
  const double scale = static_cast<double>(q * r);
  if (cross > rs.tau1 * scale) return Verdict::Normal;
  if (cross < rs.tau0 * scale) return Verdict::Attack;
  return Verdict::Unclassified;
}

Verdict classify(const RuleSet& rs, const Observation& obs,
                 const FeatureSchema& schema) {
  switch (rs.mode) {
    case ClassifierMode::Simple:
      return classify_simple(rs, obs, schema) == Label::Normal
                 ? Verdict::Normal
                 : Verdict::Attack;
    case ClassifierMode::Balance:
      return classify_balance(rs, obs, schema);
    case ClassifierMode::Thresholded:
      return classify_thresholded(rs, obs, schema);
  }
  return Verdict::Unclassified;
}

}  // namespace lad
