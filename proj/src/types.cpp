#include "lad/types.hpp"

#include <array>

namespace lad {

FeatureSchema::FeatureSchema(std::vector<FeatureSpec> features)
    : features_(std::move(features)) {
  slots_.reserve(features_.size());
  for (const auto& f : features_) {
    if (f.kind == FeatureKind::Continuous)
      slots_.push_back(continuous_count_++);
    else
      slots_.push_back(symbolic_count_++);
  }
}

FeatureSchema FeatureSchema::nslkdd() {
  const auto C = FeatureKind::Continuous;
  const auto S = FeatureKind::Symbolic;
  static const std::array<std::pair<const char*, FeatureKind>, 41> cols = {{
      {"duration", C},
      {"protocol_type", S},
      {"service", S},
      {"flag", S},
      {"src_bytes", C},
      {"dst_bytes", C},
      {"land", S},
      {"wrong_fragment", C},
      {"urgent", C},
      {"hot", C},
      {"num_failed_logins", C},
      {"logged_in", S},
      {"num_compromised", C},
      {"root_shell", C},
      {"su_attempted", C},
      {"num_root", C},
      {"num_file_creations", C},
      {"num_shells", C},
      {"num_access_files", C},
      {"num_outbound_cmds", C},
      {"is_hot_login", S},
      {"is_guest_login", S},
      {"count", C},
      {"srv_count", C},
      {"serror_rate", C},
      {"srv_error_rate", C},
      {"rerror_rate", C},
      {"srv_rerror_rate", C},
      {"same_srv_rate", C},
      {"diff_srv_rate", C},
      {"srv_diff_host_rate", C},
      {"dst_host_count", C},
      {"dst_host_srv_count", C},
      {"dst_host_same_srv_rate", C},
      {"dst_host_diff_srv_rate", C},
      {"dst_host_same_src_port_rate", C},
      {"dst_host_srv_diff_host_rate", C},
      {"dst_host_serror_rate", C},
      {"dst_host_srv_serror_rate", C},
      {"dst_host_rerror_rate", C},
      {"dst_host_srv_rerror_rate", C},
  }};
  std::vector<FeatureSpec> specs;
  specs.reserve(cols.size());
  for (const auto& [name, kind] : cols) specs.push_back({name, kind});
  return FeatureSchema(std::move(specs));
}

bool Dataset::fully_labeled() const {
  for (const auto& r : rows)
    if (!r.label) return false;
  return true;
}

}  // namespace lad
