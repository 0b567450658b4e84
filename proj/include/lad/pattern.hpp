#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "lad/binarizer.hpp"

namespace lad {

struct Literal {
  size_t id = 0;        // descriptor id (column id of the dataset it was built on)
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

enum class Polarity : uint8_t { Negative = 0, Positive = 1 };

/// Conjunction of literals covering at least `support` target-class rows at
/// emission time and no row of the opposite class.
struct Pattern {
  std::vector<Literal> literals;  // ascending by enumeration position
  Polarity polarity = Polarity::Positive;
  size_t support = 0;
  size_t degree() const { return literals.size(); }

  bool operator==(const Pattern&) const = default;
};

struct PatternConfig {
  size_t min_support = 1;  // k
  size_t max_degree = 4;   // d-hat
};

/// Instrumentation for replay checks: candidate-set membership per degree
/// and the emission log.
struct GenerationTrace {
  std::vector<std::unordered_set<std::string>> candidate_sets;  // index = degree
  struct Emission {
    Pattern pattern;
    std::vector<size_t> covered_rows;  // remaining-target rows claimed
  };
  std::vector<Emission> emissions;

  /// Canonical key of a term; literal ids resolve against `b.column_ids`.
  static std::string key(std::span<const Literal> lits, const BinaryDataset& b);
};

/// Bounded-degree prime pattern search, breadth-first by degree. A degree-d
/// candidate extends a degree-(d-1) candidate by one literal with column
/// position greater than the candidate's maximum position (both polarities
/// tried, positive first); it is dropped unless all its (d-1)-sub-terms are
/// in the previous candidate set. A candidate covering at least k remaining
/// target rows is emitted when it covers no opposite-class row (the rows it
/// covers then leave the working set) and otherwise kept as a candidate.
/// Iteration over candidates, columns and polarities is ascending, so output
/// order is deterministic.
std::vector<Pattern> generate_patterns(const BinaryDataset& b, Polarity polarity,
                                       const PatternConfig& cfg = {},
                                       GenerationTrace* trace = nullptr);

struct Coverage {
  size_t count = 0;
  std::vector<size_t> row_ids;
};

/// Rows of `rows` on which every literal of `p` holds. Literal ids must
/// resolve against `rows.column_ids`.
Coverage coverage(const Pattern& p, const BinaryDataset& rows);

}  // namespace lad
