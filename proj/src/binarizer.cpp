#include "lad/binarizer.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lad/error.hpp"

namespace lad {

namespace {

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

// Key identifying a full source row, for conflict detection.
std::string row_key(const Dataset& d, size_t row) {
  std::ostringstream key;
  const auto& obs = d.rows[row];
  for (double v : obs.nums) {
    key.write(reinterpret_cast<const char*>(&v), sizeof v);
  }
  for (const auto& s : obs.syms) {
    key << s << '\x1f';
  }
  return key.str();
}

}  // namespace

bool Descriptor::evaluate(const Observation& obs,
                          const FeatureSchema& schema) const {
  switch (kind) {
    case Kind::Level:
      return obs.nums[schema.slot(feature)] >= low;
    case Kind::Interval: {
      const double x = obs.nums[schema.slot(feature)];
      return low <= x && x < high;
    }
    case Kind::Nominal:
      return obs.syms[schema.slot(feature)] == value;
  }
  return false;
}

std::string Descriptor::to_string(const FeatureSchema& schema) const {
  const std::string& name = schema.at(feature).name;
  switch (kind) {
    case Kind::Level:
      return name + " >= " + format_number(low);
    case Kind::Interval:
      return format_number(low) + " <= " + name + " < " + format_number(high);
    case Kind::Nominal:
      return name + " = " + value;
  }
  return {};
}

std::vector<double> find_cut_points(std::vector<std::pair<double, int>> values) {
  if (values.empty()) throw DataError("find_cut_points: no values");
  std::sort(values.begin(), values.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  int next_synthetic = 0;
  for (const auto& [v, c] : values) next_synthetic = std::max(next_synthetic, c);
  ++next_synthetic;

  // Collapse each distinct value to one entry; a value seen under more than
  // one class gets a fresh synthetic class of its own.
  std::vector<std::pair<double, int>> collapsed;
  size_t i = 0;
  while (i < values.size()) {
    size_t j = i;
    bool mixed = false;
    while (j < values.size() && values[j].first == values[i].first) {
      if (values[j].second != values[i].second) mixed = true;
      ++j;
    }
    collapsed.emplace_back(values[i].first,
                           mixed ? next_synthetic++ : values[i].second);
    i = j;
  }

  std::vector<double> cuts;
  for (size_t k = 0; k + 1 < collapsed.size(); ++k) {
    if (collapsed[k].second != collapsed[k + 1].second)
      cuts.push_back((collapsed[k].first + collapsed[k + 1].first) / 2.0);
  }
  return cuts;
}

PruneStatus prune_policy(size_t cut_point_count, size_t full_threshold,
                         size_t partial_threshold) {
  if (full_threshold == 0 || partial_threshold == 0 ||
      partial_threshold >= full_threshold)
    throw ConfigError("prune_policy: thresholds must satisfy 0 < partial < full");
  if (cut_point_count >= full_threshold) return PruneStatus::FullyIgnored;
  if (cut_point_count >= partial_threshold) return PruneStatus::LevelOnly;
  return PruneStatus::Kept;
}

BinarizerModel fit_binarizer(const Dataset& d, const BinarizerConfig& cfg) {
  if (d.rows.empty()) throw DataError("fit_binarizer: empty dataset");
  if (!d.fully_labeled()) throw DataError("fit_binarizer: dataset not fully labeled");

  BinarizerModel model;
  model.schema = d.schema;

  for (size_t f = 0; f < d.schema.size(); ++f) {
    if (d.schema.at(f).kind == FeatureKind::Continuous) {
      std::vector<std::pair<double, int>> vals;
      vals.reserve(d.size());
      for (const auto& row : d.rows)
        vals.emplace_back(row.nums[d.schema.slot(f)],
                          static_cast<int>(*row.label));
      FeatureCuts fc;
      fc.feature = f;
      fc.cut_points = find_cut_points(std::move(vals));
      fc.status = prune_policy(fc.cut_points.size(), cfg.prune_full,
                               cfg.prune_partial);
      model.cuts.continuous.push_back(std::move(fc));
    } else {
      std::set<std::string> distinct;
      for (const auto& row : d.rows) distinct.insert(row.syms[d.schema.slot(f)]);
      model.cuts.symbolic.emplace_back(
          f, std::vector<std::string>(distinct.begin(), distinct.end()));
    }
  }

  // Emission order: feature index, then levels on descending cut-points,
  // then intervals ordered by (lower bound ascending, upper descending),
  // then nominal indicators in sorted value order.
  size_t ci = 0, si = 0;
  for (size_t f = 0; f < d.schema.size(); ++f) {
    if (d.schema.at(f).kind == FeatureKind::Continuous) {
      const FeatureCuts& fc = model.cuts.continuous[ci++];
      if (fc.status == PruneStatus::FullyIgnored) continue;
      for (double b : fc.cut_points)
        model.descriptors.push_back(
            {Descriptor::Kind::Level, f, b, 0.0, {}});
      if (fc.status != PruneStatus::Kept) continue;
      const auto& cuts = fc.cut_points;  // descending
      for (size_t lo = cuts.size(); lo-- > 0;) {
        for (size_t hi = 0; hi < lo; ++hi) {
          model.descriptors.push_back({Descriptor::Kind::Interval, f,
                                       cuts[lo], cuts[hi], {}});
        }
      }
    } else {
      const auto& [feature, values] = model.cuts.symbolic[si++];
      for (const auto& v : values)
        model.descriptors.push_back(
            {Descriptor::Kind::Nominal, feature, 0.0, 0.0, v});
    }
  }
  return model;
}

std::vector<bool> BinarizerModel::apply(const Observation& obs) const {
  std::vector<bool> bits(descriptors.size());
  for (size_t i = 0; i < descriptors.size(); ++i)
    bits[i] = descriptors[i].evaluate(obs, schema);
  return bits;
}

void BinarizerModel::apply_into(const Observation& obs, BitMatrix& m,
                                size_t row) const {
  for (size_t i = 0; i < descriptors.size(); ++i)
    m.set(row, i, descriptors[i].evaluate(obs, schema));
}

FittedBinarization fit_and_binarize(const Dataset& d,
                                    const BinarizerConfig& cfg) {
  if (!d.fully_labeled())
    throw DataError("binarize: dataset not fully labeled");

  // Identical feature rows with conflicting labels break the separation the
  // rest of the stack depends on.
  std::unordered_map<std::string, std::pair<size_t, Label>> seen;
  std::vector<bool> drop(d.size(), false);
  bool any_drop = false;
  for (size_t r = 0; r < d.size(); ++r) {
    const std::string key = row_key(d, r);
    auto [it, inserted] = seen.emplace(key, std::make_pair(r, *d.rows[r].label));
    if (!inserted && it->second.second != *d.rows[r].label) {
      if (cfg.conflicts == ConflictPolicy::Error) {
        std::ostringstream msg;
        msg << "binarize: rows " << it->second.first << " and " << r
            << " are identical but carry conflicting labels";
        throw DataError(msg.str());
      }
      any_drop = true;
      drop[r] = true;
      drop[it->second.first] = true;
    }
  }

  Dataset clean{d.schema, {}};
  const Dataset* src = &d;
  if (any_drop) {
    // Remove every row equal to a conflicting one, from both classes.
    std::set<std::string> bad;
    for (size_t r = 0; r < d.size(); ++r)
      if (drop[r]) bad.insert(row_key(d, r));
    for (size_t r = 0; r < d.size(); ++r)
      if (!bad.count(row_key(d, r))) clean.rows.push_back(d.rows[r]);
    if (clean.rows.empty())
      throw DataError("binarize: conflict dropping removed every row");
    src = &clean;
  }

  FittedBinarization out;
  out.rows_dropped = d.size() - src->size();
  out.model = fit_binarizer(*src, cfg);
  out.data = transform(out.model, *src);
  return out;
}

BinaryDataset binarize(const Dataset& d, const BinarizerConfig& cfg) {
  return fit_and_binarize(d, cfg).data;
}

BinaryDataset transform(const BinarizerModel& model, const Dataset& d) {
  if (!(d.schema == model.schema))
    throw DataError("transform: dataset schema does not match the binarizer");
  BinaryDataset out;
  out.descriptors = model.descriptors;
  out.column_ids.resize(model.descriptors.size());
  for (size_t i = 0; i < out.column_ids.size(); ++i) out.column_ids[i] = i;
  out.bits = BitMatrix(d.size(), model.descriptors.size());
  out.labels.assign(d.size(), Label::Attack);

  for (size_t r = 0; r < d.size(); ++r) {
    const auto& obs = d.rows[r];
    for (size_t i = 0; i < model.descriptors.size(); ++i)
      out.bits.set(r, i, model.descriptors[i].evaluate(obs, model.schema));
    if (obs.label) out.labels[r] = *obs.label;
  }
  return out;
}

size_t BinaryDataset::positives() const {
  size_t n = 0;
  for (Label l : labels) n += (l == Label::Normal);
  return n;
}

size_t BinaryDataset::negatives() const { return labels.size() - positives(); }

BitColumn BinaryDataset::column(size_t c) const {
  BitColumn col(rows());
  for (size_t r = 0; r < rows(); ++r) col.set(r, bits.get(r, c));
  return col;
}

BitColumn BinaryDataset::label_mask(Label l) const {
  BitColumn col(rows());
  for (size_t r = 0; r < rows(); ++r) col.set(r, labels[r] == l);
  return col;
}

}  // namespace lad
