#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lad/binarizer.hpp"
#include "lad/pattern.hpp"
#include "lad/types.hpp"

namespace lad {

/// One de-binarized pattern literal: the descriptor's predicate over the
/// original feature, possibly negated.
struct RulePredicate {
  Descriptor descriptor;
  bool negated = false;

  bool evaluate(const Observation& obs, const FeatureSchema& schema) const {
    return descriptor.evaluate(obs, schema) != negated;
  }
  std::string to_string(const FeatureSchema& schema) const;

  bool operator==(const RulePredicate&) const = default;
};

struct Rule {
  std::vector<RulePredicate> conjuncts;
  Label consequent = Label::Normal;

  bool fires(const Observation& obs, const FeatureSchema& schema) const;
  std::string to_string(const FeatureSchema& schema) const;

  bool operator==(const Rule&) const = default;
};

enum class ClassifierMode : uint8_t { Simple, Balance, Thresholded };

/// Three-way verdict; Unclassified is the epsilon outcome of the balance and
/// thresholded discriminants.
enum class Verdict : uint8_t { Attack = 0, Normal = 1, Unclassified = 2 };

struct RuleSet {
  std::vector<Rule> positive;  // consequent Normal, emission order
  std::vector<Rule> negative;  // consequent Attack, emission order
  ClassifierMode mode = ClassifierMode::Simple;
  double tau0 = 0.0;
  double tau1 = 0.0;
  Label default_class = Label::Attack;

  bool operator==(const RuleSet&) const = default;
};

/// Patterns to rules, emission order preserved. Literal ids resolve in
/// `descriptors`; a negated level literal becomes "not (x >= beta)" and so on.
RuleSet compile_rules(const std::vector<Pattern>& positive,
                      const std::vector<Pattern>& negative,
                      const std::vector<Descriptor>& descriptors,
                      const FeatureSchema& schema);

/// First matching positive rule wins, otherwise the default class.
Label classify_simple(const RuleSet& rs, const Observation& obs,
                      const FeatureSchema& schema);

/// Mean positive-rule firing minus mean negative-rule firing, in [-1, 1].
/// Both rule families must be nonempty.
double balance_score(const RuleSet& rs, const Observation& obs,
                     const FeatureSchema& schema);

/// Sign of the balance score; zero is Unclassified. The zero test is exact
/// (integer cross-multiplication, no floating error).
Verdict classify_balance(const RuleSet& rs, const Observation& obs,
                         const FeatureSchema& schema);

/// Score above tau1 is Normal, below tau0 is Attack, the closed band
/// [tau0, tau1] is Unclassified. Requires tau0 <= tau1.
Verdict classify_thresholded(const RuleSet& rs, const Observation& obs,
                             const FeatureSchema& schema);

/// Dispatch on rs.mode.
Verdict classify(const RuleSet& rs, const Observation& obs,
                 const FeatureSchema& schema);

}  // namespace lad
