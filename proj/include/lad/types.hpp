#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lad {

enum class FeatureKind : uint8_t { Continuous, Symbolic };

struct FeatureSpec {
  std::string name;
  FeatureKind kind = FeatureKind::Continuous;

  bool operator==(const FeatureSpec&) const = default;
};

/// Typed column layout of a dataset. Observations store continuous and
/// symbolic values in separate arrays; the schema maps a feature index to
/// its slot within the matching array.
class FeatureSchema {
 public:
  FeatureSchema() = default;
  explicit FeatureSchema(std::vector<FeatureSpec> features);

  /// 41-feature NSL-KDD layout (symbolic columns 2,3,4,7,12,21,22, 1-based).
  static FeatureSchema nslkdd();

  size_t size() const { return features_.size(); }
  const FeatureSpec& at(size_t feature) const { return features_[feature]; }
  size_t slot(size_t feature) const { return slots_[feature]; }
  size_t continuous_count() const { return continuous_count_; }
  size_t symbolic_count() const { return symbolic_count_; }
  const std::vector<FeatureSpec>& features() const { return features_; }

  bool operator==(const FeatureSchema& other) const {
    return features_ == other.features_;
  }

 private:
  std::vector<FeatureSpec> features_;
  std::vector<size_t> slots_;
  size_t continuous_count_ = 0;
  size_t symbolic_count_ = 0;
};

/// Class labels: the "positive" class of the two-class problem is normal
/// traffic, anything else is an attack.
enum class Label : uint8_t { Attack = 0, Normal = 1 };

struct Observation {
  std::vector<double> nums;        // continuous slots, schema order
  std::vector<std::string> syms;   // symbolic slots, schema order
  std::optional<Label> label;
};

struct Dataset {
  FeatureSchema schema;
  std::vector<Observation> rows;

  size_t size() const { return rows.size(); }
  bool fully_labeled() const;

  double num(size_t row, size_t feature) const {
    return rows[row].nums[schema.slot(feature)];
  }
  const std::string& sym(size_t row, size_t feature) const {
    return rows[row].syms[schema.slot(feature)];
  }
};

}  // namespace lad
