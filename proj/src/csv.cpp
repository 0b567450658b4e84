#include "lad/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lad/error.hpp"

namespace lad {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

double parse_number(std::string_view field, const std::string& origin,
                    size_t line_no, std::string_view column) {
  double v = 0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << origin << ":" << line_no << ": field '" << column
        << "' is not a finite number: '" << field << "'";
    throw ParseError(msg.str());
  }
  return v;
}

// Shortest decimal form that round-trips to the same double.
void write_number(std::ostream& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, ptr - buf);
  (void)ec;
}

// Deterministic 64-bit PRNG with a modulo-free bounded draw, so splits do
// not depend on the standard library's distribution implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound) by rejection.
  uint64_t bounded(uint64_t bound) {
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  uint64_t state_;
};

}  // namespace

CsvReader::CsvReader(std::istream& in, bool labeled,
                     const FeatureSchema& schema, std::string origin)
    : in_(in), labeled_(labeled), schema_(schema), origin_(std::move(origin)) {}

std::optional<Observation> CsvReader::next() {
  const size_t n = schema_.size();
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    // n feature fields, optionally +label, optionally +difficulty
    if (fields.size() < n || fields.size() > n + 2) {
      std::ostringstream msg;
      msg << origin_ << ":" << line_no_ << ": expected " << n << " to "
          << n + 2 << " fields, got " << fields.size();
      throw ParseError(msg.str());
    }
    if (labeled_ && fields.size() == n) {
      std::ostringstream msg;
      msg << origin_ << ":" << line_no_ << ": row has no label field";
      throw ParseError(msg.str());
    }
    Observation obs;
    obs.nums.reserve(schema_.continuous_count());
    obs.syms.reserve(schema_.symbolic_count());
    for (size_t i = 0; i < n; ++i) {
      const auto& spec = schema_.at(i);
      if (spec.kind == FeatureKind::Continuous) {
        obs.nums.push_back(parse_number(fields[i], origin_, line_no_, spec.name));
      } else {
        if (fields[i].empty()) {
          std::ostringstream msg;
          msg << origin_ << ":" << line_no_ << ": empty symbolic field '"
              << spec.name << "'";
          throw ParseError(msg.str());
        }
        obs.syms.emplace_back(fields[i]);
      }
    }
    if (labeled_) {
      obs.label = fields[n] == "normal" ? Label::Normal : Label::Attack;
    }
    return obs;
  }
  return std::nullopt;
}

Dataset load_csv(std::istream& in, bool labeled, const FeatureSchema& schema,
                 const std::string& origin) {
  Dataset d;
  d.schema = schema;
  CsvReader reader(in, labeled, schema, origin);
  while (auto obs = reader.next()) d.rows.push_back(std::move(*obs));
  if (d.rows.empty()) throw ParseError(origin + ": no observations");
  return d;
}

Dataset load_csv(const std::filesystem::path& path, bool labeled,
                 const FeatureSchema& schema) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path.string());
  return load_csv(in, labeled, schema, path.string());
}

void save_csv(const Dataset& d, std::ostream& out, bool with_labels) {
  for (const auto& row : d.rows) {
    for (size_t i = 0; i < d.schema.size(); ++i) {
      if (i) out << ',';
      if (d.schema.at(i).kind == FeatureKind::Continuous)
        write_number(out, row.nums[d.schema.slot(i)]);
      else
        out << row.syms[d.schema.slot(i)];
    }
    if (with_labels && row.label)
      out << ',' << (*row.label == Label::Normal ? "normal" : "attack");
    out << '\n';
  }
}

void save_csv(const Dataset& d, const std::filesystem::path& path,
              bool with_labels) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path.string());
  save_csv(d, out, with_labels);
}

std::pair<Dataset, Dataset> split_random(const Dataset& d, size_t n,
                                         uint64_t seed) {
  if (n == 0 || n > d.size())
    throw DataError("split size " + std::to_string(n) +
                    " out of range for dataset of " + std::to_string(d.size()));
  // Partial Fisher-Yates over the index vector picks the first part.
  std::vector<size_t> idx(d.size());
  std::iota(idx.begin(), idx.end(), 0);
  SplitMix64 rng(seed);
  for (size_t i = 0; i < n; ++i) {
    const size_t j = i + rng.bounded(idx.size() - i);
    std::swap(idx[i], idx[j]);
  }
  std::vector<bool> chosen(d.size(), false);
  for (size_t i = 0; i < n; ++i) chosen[idx[i]] = true;

  Dataset first{d.schema, {}};
  Dataset second{d.schema, {}};
  first.rows.reserve(n);
  second.rows.reserve(d.size() - n);
  for (size_t i = 0; i < d.size(); ++i)
    (chosen[i] ? first : second).rows.push_back(d.rows[i]);
  return {std::move(first), std::move(second)};
}

}  // namespace lad
