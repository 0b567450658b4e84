#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <utility>

#include "lad/types.hpp"

namespace lad {

/// Row-by-row reader for NSL-KDD style CSV: comma separated, no header, one
/// observation per row: N feature fields per the schema, optionally a label
/// field, optionally a trailing difficulty field (discarded). Label "normal"
/// maps to Normal, any other token to Attack. With labeled=false the label
/// column, if present, is ignored and rows come back unlabeled.
class CsvReader {
 public:
  CsvReader(std::istream& in, bool labeled, const FeatureSchema& schema,
            std::string origin = "<stream>");
  /// Next observation, or nullopt at end of input. Throws ParseError on a
  /// malformed row, naming the row number.
  std::optional<Observation> next();
  size_t line_number() const { return line_no_; }

 private:
  std::istream& in_;
  bool labeled_;
  const FeatureSchema& schema_;
  std::string origin_;
  size_t line_no_ = 0;
};

Dataset load_csv(const std::filesystem::path& path, bool labeled,
                 const FeatureSchema& schema = FeatureSchema::nslkdd());

Dataset load_csv(std::istream& in, bool labeled, const FeatureSchema& schema,
                 const std::string& origin = "<stream>");

/// Continuous fields are written in shortest round-trip decimal form.
void save_csv(const Dataset& d, const std::filesystem::path& path,
              bool with_labels = true);
void save_csv(const Dataset& d, std::ostream& out, bool with_labels = true);

/// Seeded partition into (n rows drawn without replacement, remainder); both
/// parts keep the input's relative row order. Same seed, same partition.
std::pair<Dataset, Dataset> split_random(const Dataset& d, size_t n,
                                         uint64_t seed);

}  // namespace lad
