#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lad/binarizer.hpp"
#include "lad/types.hpp"

namespace lad::testing {

// Deterministic generator for property tests.
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

// A BinaryDataset over synthetic descriptors (one level variable per column)
// with the given bit rows and labels. Descriptor ids are column positions.
inline BinaryDataset make_binary(const std::vector<std::vector<int>>& rows,
                                 const std::vector<int>& labels) {
  BinaryDataset b;
  const size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < ncols; ++c) {
    Descriptor d;
    d.kind = Descriptor::Kind::Level;
    d.feature = c;
    d.low = 0.5;
    b.descriptors.push_back(d);
    b.column_ids.push_back(c);
  }
  b.bits = BitMatrix(rows.size(), ncols);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < ncols; ++c) b.bits.set(r, c, rows[r][c] != 0);
  for (int l : labels)
    b.labels.push_back(l ? Label::Normal : Label::Attack);
  return b;
}

// Random bit dataset; may contain duplicate and conflicting rows.
inline BinaryDataset random_binary(Rng& rng, size_t max_cols = 10,
                                   size_t max_rows = 60) {
  const size_t ncols = 1 + rng.below(max_cols);
  const size_t nrows = 2 + rng.below(max_rows - 1);
  std::vector<std::vector<int>> rows(nrows, std::vector<int>(ncols));
  std::vector<int> labels(nrows);
  for (size_t r = 0; r < nrows; ++r) {
    for (size_t c = 0; c < ncols; ++c) rows[r][c] = rng.flip();
    labels[r] = rng.flip();
  }
  return make_binary(rows, labels);
}

// Random dataset with distinct rows split into two nonempty classes; the
// separability precondition of the support-set and coverage suites.
inline BinaryDataset random_separable_binary(Rng& rng, size_t max_cols = 10,
                                             size_t max_rows = 40) {
  while (true) {
    const size_t ncols = 2 + rng.below(max_cols - 1);
    const size_t want = 2 + rng.below(max_rows - 1);
    std::vector<std::vector<int>> rows;
    std::vector<std::string> seen;
    for (size_t tries = 0; tries < want * 8 && rows.size() < want; ++tries) {
      std::vector<int> row(ncols);
      std::string key;
      for (size_t c = 0; c < ncols; ++c) {
        row[c] = rng.flip();
        key += char('0' + row[c]);
      }
      bool dup = false;
      for (const auto& k : seen) dup = dup || (k == key);
      if (dup) continue;
      seen.push_back(key);
      rows.push_back(std::move(row));
    }
    if (rows.size() < 2) continue;
    std::vector<int> labels(rows.size());
    bool pos = false, neg = false;
    for (size_t r = 0; r < rows.size(); ++r) {
      labels[r] = rng.flip();
      (labels[r] ? pos : neg) = true;
    }
    if (!pos || !neg) continue;
    return make_binary(rows, labels);
  }
}

inline Dataset golden_like_dataset() {
  FeatureSchema schema(
      {{"A", FeatureKind::Continuous},
       {"B", FeatureKind::Continuous},
       {"C", FeatureKind::Continuous}});
  Dataset d{schema, {}};
  auto add = [&](double a, double b, double c, Label l) {
    Observation obs;
    obs.nums = {a, b, c};
    obs.label = l;
    d.rows.push_back(obs);
  };
  add(3.5, 3.8, 2.8, Label::Normal);
  add(2.6, 1.6, 5.2, Label::Normal);
  add(1.0, 2.1, 3.8, Label::Normal);
  add(3.5, 1.6, 3.8, Label::Attack);
  add(2.3, 2.1, 1.0, Label::Attack);
  return d;
}

}  // namespace lad::testing
