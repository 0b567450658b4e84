#pragma once

#include <vector>

#include "lad/binarizer.hpp"

namespace lad {

/// Ordered subset of binary columns whose projections keep the two classes
/// disjoint. Order is selection order.
struct SupportSet {
  std::vector<size_t> ids;

  bool operator==(const SupportSet&) const = default;
};

/// Greedy selection: each round picks, among columns that split at least one
/// still-conflicting positive/negative row pair, the one whose refined
/// partition has minimum weighted class entropy (log2, 0*log0 = 0), computed
/// on deduplicated rows. Ties go to the lowest column id. Stops once the
/// projections of the two classes are disjoint.
///
/// Requires the full rows of the two classes to be disjoint already.
SupportSet select_support_set(const BinaryDataset& b);

/// Column slice in the order of `s`, preserving rows and labels.
BinaryDataset project(const BinaryDataset& b, const SupportSet& s);

}  // namespace lad
