#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lad/bitmatrix.hpp"
#include "lad/types.hpp"

namespace lad {

/// Boolean variable derived from one source feature.
///   Level(beta):          x >= beta
///   Interval(low, high):  low <= x < high   (low and high are cut-points)
///   Nominal(value):       x == value
struct Descriptor {
  enum class Kind : uint8_t { Level, Interval, Nominal };

  Kind kind = Kind::Level;
  size_t feature = 0;
  double low = 0.0;    // Level: the cut-point; Interval: lower bound
  double high = 0.0;   // Interval: upper bound
  std::string value;   // Nominal

  bool evaluate(const Observation& obs, const FeatureSchema& schema) const;
  std::string to_string(const FeatureSchema& schema) const;

  bool operator==(const Descriptor&) const = default;
};

enum class PruneStatus : uint8_t { Kept, LevelOnly, FullyIgnored };

struct FeatureCuts {
  size_t feature = 0;
  std::vector<double> cut_points;  // strictly decreasing
  PruneStatus status = PruneStatus::Kept;
};

/// Per-feature cut-points plus pruning outcome for continuous features and
/// the distinct training vocabulary for symbolic features.
struct CutPointTable {
  std::vector<FeatureCuts> continuous;                          // kept order = feature order
  std::vector<std::pair<size_t, std::vector<std::string>>> symbolic;  // sorted values
};

enum class ConflictPolicy : uint8_t { Error, Drop };

struct BinarizerConfig {
  size_t prune_full = 175;
  size_t prune_partial = 75;
  ConflictPolicy conflicts = ConflictPolicy::Error;
};

/// Fitted binarization: enough to map any conforming observation to a bit
/// row identical to the one produced at training time.
struct BinarizerModel {
  FeatureSchema schema;
  CutPointTable cuts;
  std::vector<Descriptor> descriptors;

  std::vector<bool> apply(const Observation& obs) const;
  void apply_into(const Observation& obs, BitMatrix& m, size_t row) const;
};

/// Bit matrix over emitted descriptors, with per-row labels. `column_ids`
/// carries the descriptor-table id of each column so projections keep their
/// identity.
struct BinaryDataset {
  std::vector<Descriptor> descriptors;   // one per column
  std::vector<size_t> column_ids;        // original descriptor id per column
  BitMatrix bits;
  std::vector<Label> labels;

  size_t rows() const { return bits.rows(); }
  size_t cols() const { return bits.cols(); }
  size_t positives() const;
  size_t negatives() const;

  /// Column c as a bit vector over rows.
  BitColumn column(size_t c) const;
  /// Mask of rows carrying the given label.
  BitColumn label_mask(Label l) const;
};

/// Cut-points for one feature from (value, class) pairs, classes from an
/// arbitrary alphabet. Values are sorted descending; equal-value runs with
/// mixed classes collapse to a single entry under a fresh synthetic class;
/// a cut-point (v_i + v_{i+1})/2 is emitted wherever consecutive distinct
/// values disagree on (possibly synthetic) class.
std::vector<double> find_cut_points(std::vector<std::pair<double, int>> values);

PruneStatus prune_policy(size_t cut_point_count, size_t full_threshold = 175,
                         size_t partial_threshold = 75);

BinarizerModel fit_binarizer(const Dataset& d, const BinarizerConfig& cfg = {});

struct FittedBinarization {
  BinarizerModel model;
  BinaryDataset data;
  size_t rows_dropped = 0;  // conflict-policy removals
};

/// Fit on `d` and emit its bit matrix. `d` must be fully labeled; a pair of
/// rows identical on all features but with conflicting labels is an error
/// (or removed from both classes under ConflictPolicy::Drop, in which case
/// the model is fitted on the surviving rows).
FittedBinarization fit_and_binarize(const Dataset& d,
                                    const BinarizerConfig& cfg = {});

/// fit_and_binarize, keeping only the bit matrix.
BinaryDataset binarize(const Dataset& d, const BinarizerConfig& cfg = {});

/// Bit matrix of `d` under an already-fitted model (no label requirement).
BinaryDataset transform(const BinarizerModel& model, const Dataset& d);

}  // namespace lad
