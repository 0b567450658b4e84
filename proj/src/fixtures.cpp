#include "lad/fixtures.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "lad/error.hpp"

namespace lad {

using nlohmann::json;

std::filesystem::path golden_dir() {
  if (const char* env = std::getenv("LADIDS_GOLDEN_DIR")) return env;
  std::filesystem::path probe = std::filesystem::current_path();
  for (int depth = 0; depth < 6; ++depth) {
    const auto candidate = probe / "data" / "golden";
    if (std::filesystem::exists(candidate / "worked_example.json"))
      return candidate;
    if (!probe.has_parent_path() || probe.parent_path() == probe) break;
    probe = probe.parent_path();
  }
  throw DataError(
      "cannot locate data/golden; set LADIDS_GOLDEN_DIR or run from the "
      "repository");
}

GoldenCase worked_example(const std::filesystem::path& dir) {
  const auto file = dir / "worked_example.json";
  std::ifstream in(file);
  if (!in) throw DataError("cannot open fixture: " + file.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(std::string("fixture is not valid JSON: ") + e.what());
  }

  GoldenCase out;

  std::vector<FeatureSpec> specs;
  for (const auto& f : j.at("schema").at("features")) {
    specs.push_back({f.at("name").get<std::string>(),
                     f.at("kind").get<std::string>() == "symbolic"
                         ? FeatureKind::Symbolic
                         : FeatureKind::Continuous});
  }
  out.dataset.schema = FeatureSchema(std::move(specs));

  for (const auto& r : j.at("rows")) {
    Observation obs;
    size_t fi = 0;
    for (const auto& v : r.at("values")) {
      if (out.dataset.schema.at(fi).kind == FeatureKind::Continuous)
        obs.nums.push_back(v.get<double>());
      else
        obs.syms.push_back(v.get<std::string>());
      ++fi;
    }
    obs.label = r.at("label").get<int>() == 1 ? Label::Normal : Label::Attack;
    out.dataset.rows.push_back(std::move(obs));
  }

  for (const auto& [name, cuts] : j.at("cut_points").items())
    out.cut_points[name] = cuts.get<std::vector<double>>();

  auto parse_descriptor = [](const json& d) {
    Descriptor desc;
    const std::string kind = d.at("kind").get<std::string>();
    desc.feature = d.at("feature").get<size_t>();
    if (kind == "level") {
      desc.kind = Descriptor::Kind::Level;
      desc.low = d.at("beta").get<double>();
    } else if (kind == "interval") {
      desc.kind = Descriptor::Kind::Interval;
      desc.low = d.at("low").get<double>();
      desc.high = d.at("high").get<double>();
    } else {
      desc.kind = Descriptor::Kind::Nominal;
      desc.value = d.at("value").get<std::string>();
    }
    return desc;
  };
  for (const auto& d : j.at("reference_columns"))
    out.reference_descriptors.push_back(parse_descriptor(d));

  const auto& matrix = j.at("reference_matrix");
  out.reference_matrix =
      BitMatrix(matrix.size(), out.reference_descriptors.size());
  for (size_t r = 0; r < matrix.size(); ++r)
    for (size_t c = 0; c < out.reference_descriptors.size(); ++c)
      out.reference_matrix.set(r, c, matrix[r][c].get<int>() != 0);
  for (const auto& l : j.at("reference_labels"))
    out.reference_labels.push_back(l.get<int>() == 1 ? Label::Normal
                                                     : Label::Attack);

  out.support_set_names =
      j.at("support_set").get<std::vector<std::string>>();
  for (const auto& p : j.at("positive_patterns"))
    out.positive_patterns.push_back(p.get<std::vector<std::string>>());
  for (const auto& p : j.at("negative_patterns"))
    out.negative_patterns.push_back(p.get<std::vector<std::string>>());
  out.rules_text = j.at("rules").get<std::vector<std::string>>();
  return out;
}

}  // namespace lad
