#pragma once

#include <cstdint>
#include <string>

#include "lad/model.hpp"
#include "lad/types.hpp"

namespace lad {

/// How an Unclassified verdict is charged when scoring against ground truth:
///   AsError  - counted against the classifier (a normal row becomes a miss,
///              an attack row a false alarm)
///   AsAttack - epsilon collapses to the attack verdict
///   Exclude  - epsilon rows leave the denominator
enum class EpsilonPolicy : uint8_t { AsError, AsAttack, Exclude };

struct Confusion {
  size_t tp = 0;  // normal predicted normal
  size_t fp = 0;  // attack predicted normal
  size_t tn = 0;  // attack predicted attack
  size_t fn = 0;  // normal predicted attack
  size_t total() const { return tp + fp + tn + fn; }
};

struct MetricsVariant {
  Confusion confusion;
  double accuracy = 0.0;
  double precision = 0.0;
  double sensitivity = 0.0;  // recall of the normal class
  double f1 = 0.0;
};

/// Confusion counts and derived scores for all three epsilon policies, plus
/// classification latency measured over the scoring loop alone.
struct Metrics {
  size_t total = 0;
  size_t epsilon = 0;
  MetricsVariant as_error;
  MetricsVariant as_attack;
  MetricsVariant excluded;
  double mean_latency_seconds = 0.0;
  double p99_latency_seconds = 0.0;

  const MetricsVariant& variant(EpsilonPolicy p) const {
    switch (p) {
      case EpsilonPolicy::AsAttack: return as_attack;
      case EpsilonPolicy::Exclude: return excluded;
      default: return as_error;
    }
  }
};

/// Score the model on a fully labeled test set. Throws DataError on an empty
/// or partially labeled set.
Metrics evaluate(const Model& m, const Dataset& test);

/// Mean wall-clock seconds per observation over the classification loop
/// only, single-threaded.
double time_classification(const Model& m, const Dataset& test);

std::string metrics_table(const Metrics& m);

}  // namespace lad
