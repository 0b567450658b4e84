#include "lad/support_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "lad/error.hpp"

namespace lad {

namespace {

struct DedupRows {
  std::vector<size_t> row_index;  // representative original row per distinct row
};

std::string full_row_key(const BinaryDataset& b, size_t r) {
  const auto row = b.bits.row(r);
  return std::string(reinterpret_cast<const char*>(row.data()),
                     row.size() * sizeof(uint64_t));
}

// Distinct full rows. Two identical rows with different labels mean the
// classes are not separable at all.
DedupRows dedup_rows(const BinaryDataset& b) {
  DedupRows out;
  std::unordered_map<std::string, size_t> seen;
  seen.reserve(b.rows() * 2);
  for (size_t r = 0; r < b.rows(); ++r) {
    auto [it, inserted] = seen.emplace(full_row_key(b, r), r);
    if (inserted) {
      out.row_index.push_back(r);
    } else if (b.labels[it->second] != b.labels[r]) {
      std::ostringstream msg;
      msg << "select_support_set: rows " << it->second << " and " << r
          << " have identical bits but different labels";
      throw DataError(msg.str());
    }
  }
  return out;
}

double entropy_term(size_t p, size_t n) {
  const size_t t = p + n;
  if (t == 0 || p == 0 || n == 0) return 0.0;
  const double fp = static_cast<double>(p) / t;
  const double fn = static_cast<double>(n) / t;
  return -(fp * std::log2(fp) + fn * std::log2(fn)) * t;
}

}  // namespace

SupportSet select_support_set(const BinaryDataset& b) {
  if (b.rows() == 0) throw DataError("select_support_set: empty dataset");

  const DedupRows dedup = dedup_rows(b);
  const size_t nrows = dedup.row_index.size();
  const size_t ncols = b.cols();

  // Columns of the deduplicated rows, packed for the scoring scans.
  std::vector<BitColumn> cols(ncols, BitColumn(nrows));
  for (size_t i = 0; i < nrows; ++i) {
    const size_t src = dedup.row_index[i];
    for (size_t c = 0; c < ncols; ++c)
      if (b.bits.get(src, c)) cols[c].set(i, true);
  }
  std::vector<uint8_t> is_pos(nrows);
  for (size_t i = 0; i < nrows; ++i)
    is_pos[i] = (b.labels[dedup.row_index[i]] == Label::Normal);

  // Partition state: group id per deduplicated row, per-group class counts,
  // and the rows living in still-impure groups.
  std::vector<uint32_t> group(nrows, 0);
  std::vector<size_t> group_pos{0}, group_neg{0};
  for (size_t i = 0; i < nrows; ++i)
    (is_pos[i] ? group_pos[0] : group_neg[0])++;

  std::vector<char> selected(ncols, 0);
  SupportSet result;

  // Scratch per candidate: class counts on the 1-side of each touched group.
  std::vector<size_t> pos1(1, 0), neg1(1, 0);

  while (true) {
    bool any_impure = false;
    for (size_t g = 0; g < group_pos.size(); ++g) {
      if (group_pos[g] > 0 && group_neg[g] > 0) any_impure = true;
    }
    if (!any_impure) break;
    std::vector<size_t> active;  // rows in impure groups
    double impure_entropy = 0.0;  // summed entropy of the impure groups
    for (size_t g = 0; g < group_pos.size(); ++g)
      if (group_pos[g] > 0 && group_neg[g] > 0)
        impure_entropy += entropy_term(group_pos[g], group_neg[g]);
    for (size_t i = 0; i < nrows; ++i) {
      const uint32_t g = group[i];
      if (group_pos[g] > 0 && group_neg[g] > 0) active.push_back(i);
    }

    double best_entropy = 0.0;
    size_t best_col = ncols;  // sentinel: none
    std::vector<uint32_t> touched;
    pos1.assign(group_pos.size(), 0);
    neg1.assign(group_pos.size(), 0);

    for (size_t c = 0; c < ncols; ++c) {
      if (selected[c]) continue;
      touched.clear();
      for (size_t i : active) {
        if (!cols[c].get(i)) continue;
        const uint32_t g = group[i];
        if (pos1[g] == 0 && neg1[g] == 0) touched.push_back(g);
        (is_pos[i] ? pos1[g] : neg1[g])++;
      }
      // The candidate must split at least one conflicting positive/negative
      // pair, otherwise it contributes nothing toward separation. Groups the
      // candidate never touches keep their entropy, so only the touched ones
      // are re-scored.
      bool resolves = false;
      double entropy = impure_entropy;
      for (uint32_t g : touched) {
        const size_t p1 = pos1[g], n1 = neg1[g];
        const size_t p0 = group_pos[g] - p1, n0 = group_neg[g] - n1;
        if (p1 * n0 + p0 * n1 > 0) resolves = true;
        entropy += entropy_term(p1, n1) + entropy_term(p0, n0) -
                   entropy_term(group_pos[g], group_neg[g]);
        pos1[g] = 0;
        neg1[g] = 0;
      }
      if (!resolves) continue;
      if (best_col == ncols || entropy < best_entropy - 1e-12) {
        best_entropy = entropy;
        best_col = c;
      }
    }

    if (best_col == ncols)
      throw DataError(
          "select_support_set: classes are not separable by the remaining "
          "columns");

    // Refine the partition by the chosen column; only impure groups split.
    selected[best_col] = 1;
    result.ids.push_back(b.column_ids[best_col]);
    std::unordered_map<uint32_t, uint32_t> one_side;  // old gid -> new gid
    for (size_t i : active) {
      if (!cols[best_col].get(i)) continue;
      const uint32_t g = group[i];
      auto [it, inserted] =
          one_side.emplace(g, static_cast<uint32_t>(group_pos.size()));
      if (inserted) {
        group_pos.push_back(0);
        group_neg.push_back(0);
      }
      const uint32_t ng = it->second;
      (is_pos[i] ? group_pos[g] : group_neg[g])--;
      (is_pos[i] ? group_pos[ng] : group_neg[ng])++;
      group[i] = ng;
    }
  }

  return result;
}

BinaryDataset project(const BinaryDataset& b, const SupportSet& s) {
  std::unordered_map<size_t, size_t> position;
  position.reserve(b.column_ids.size());
  for (size_t c = 0; c < b.column_ids.size(); ++c)
    position.emplace(b.column_ids[c], c);

  BinaryDataset out;
  out.labels = b.labels;
  out.bits = BitMatrix(b.rows(), s.ids.size());
  out.descriptors.reserve(s.ids.size());
  out.column_ids = s.ids;
  std::vector<size_t> src_cols;
  src_cols.reserve(s.ids.size());
  for (size_t id : s.ids) {
    auto it = position.find(id);
    if (it == position.end())
      throw DataError("project: unknown descriptor id " + std::to_string(id));
    src_cols.push_back(it->second);
    out.descriptors.push_back(b.descriptors[it->second]);
  }
  for (size_t r = 0; r < b.rows(); ++r)
    for (size_t j = 0; j < src_cols.size(); ++j)
      out.bits.set(r, j, b.bits.get(r, src_cols[j]));

  // A projection that merges a positive row with a negative one is not a
  // support-set projection.
  std::unordered_map<std::string, Label> seen;
  seen.reserve(out.rows() * 2);
  for (size_t r = 0; r < out.rows(); ++r) {
    const auto row = out.bits.row(r);
    std::string key(reinterpret_cast<const char*>(row.data()),
                    row.size() * sizeof(uint64_t));
    auto [it, inserted] = seen.emplace(std::move(key), out.labels[r]);
    if (!inserted && it->second != out.labels[r])
      throw DataError(
          "project: positive and negative projections intersect; the id set "
          "is not a support set");
  }
  return out;
}

}  // namespace lad
