#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lad/csv.hpp"
#include "lad/error.hpp"
#include "lad/eval.hpp"
#include "lad/model.hpp"
#include "lad/ssl.hpp"

namespace py = pybind11;
using namespace lad;

namespace {

using PyValue = std::variant<double, std::string>;

Observation observation_from_values(const FeatureSchema& schema,
                                    const std::vector<PyValue>& values,
                                    std::optional<int> label) {
  if (values.size() != schema.size())
    throw DataError("expected " + std::to_string(schema.size()) +
                    " values, got " + std::to_string(values.size()));
  Observation obs;
  for (size_t f = 0; f < schema.size(); ++f) {
    if (schema.at(f).kind == FeatureKind::Continuous) {
      if (!std::holds_alternative<double>(values[f]))
        throw DataError("feature '" + schema.at(f).name + "' is continuous");
      obs.nums.push_back(std::get<double>(values[f]));
    } else {
      if (!std::holds_alternative<std::string>(values[f]))
        throw DataError("feature '" + schema.at(f).name + "' is symbolic");
      obs.syms.push_back(std::get<std::string>(values[f]));
    }
  }
  if (label) obs.label = *label == 1 ? Label::Normal : Label::Attack;
  return obs;
}

py::object verdict_to_py(Verdict v) {
  switch (v) {
    case Verdict::Normal: return py::int_(1);
    case Verdict::Attack: return py::int_(0);
    default: return py::none();  // unclassified
  }
}

py::dict labeling_to_py(const LabelingReport& r) {
  py::dict out;
  out["unlabeled_input"] = r.unlabeled_input;
  out["labeled"] = r.labeled;
  out["left_epsilon"] = r.left_epsilon;
  if (r.has_truth) {
    out["labeled_correct"] = r.labeled_correct;
    out["labeled_wrong"] = r.labeled_wrong;
    out["accuracy"] = r.accuracy();
  }
  return out;
}

py::dict stats_to_py(const TrainingStats& s) {
  py::dict out;
  out["training_rows"] = s.training_rows;
  out["self_labeled_rows"] = s.self_labeled_rows;
  out["binary_variables"] = s.binary_variables;
  out["support_size"] = s.support_size;
  out["positive_patterns"] = s.positive_patterns;
  out["negative_patterns"] = s.negative_patterns;
  out["offline_seconds"] = s.offline_seconds;
  return out;
}

py::dict variant_to_py(const MetricsVariant& v) {
  py::dict out;
  out["tp"] = v.confusion.tp;
  out["fp"] = v.confusion.fp;
  out["tn"] = v.confusion.tn;
  out["fn"] = v.confusion.fn;
  out["accuracy"] = v.accuracy;
  out["precision"] = v.precision;
  out["sensitivity"] = v.sensitivity;
  out["f1"] = v.f1;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-class rule-based intrusion detection built on Boolean "
            "pattern mining, with semi-supervised training";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<DataError>(m, "DataError");
  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<ModelError>(m, "ModelError");

  py::class_<FeatureSchema>(m, "FeatureSchema")
      .def_static("nslkdd", &FeatureSchema::nslkdd)
      .def("__len__", &FeatureSchema::size)
      .def("name", [](const FeatureSchema& s, size_t i) { return s.at(i).name; })
      .def("is_continuous", [](const FeatureSchema& s, size_t i) {
        return s.at(i).kind == FeatureKind::Continuous;
      });

  m.def("make_schema",
        [](const std::vector<std::pair<std::string, std::string>>& features) {
          std::vector<FeatureSpec> specs;
          for (const auto& [name, kind] : features) {
            if (kind != "continuous" && kind != "symbolic")
              throw ConfigError("feature kind must be continuous or symbolic");
            specs.push_back({name, kind == "continuous"
                                       ? FeatureKind::Continuous
                                       : FeatureKind::Symbolic});
          }
          return FeatureSchema(std::move(specs));
        },
        py::arg("features"),
        "Schema from (name, 'continuous'|'symbolic') pairs");

  py::class_<Dataset>(m, "Dataset")
      .def("__len__", &Dataset::size)
      .def_property_readonly("schema",
                             [](const Dataset& d) { return d.schema; })
      .def("label",
           [](const Dataset& d, size_t row) -> py::object {
             if (!d.rows.at(row).label) return py::none();
             return py::int_(*d.rows.at(row).label == Label::Normal ? 1 : 0);
           })
      .def("values", [](const Dataset& d, size_t row) {
        py::list out;
        for (size_t f = 0; f < d.schema.size(); ++f) {
          if (d.schema.at(f).kind == FeatureKind::Continuous)
            out.append(d.num(row, f));
          else
            out.append(d.sym(row, f));
        }
        return out;
      });

  m.def("make_dataset",
        [](const FeatureSchema& schema,
           const std::vector<std::vector<PyValue>>& rows,
           const std::vector<std::optional<int>>& labels) {
          if (!labels.empty() && labels.size() != rows.size())
            throw DataError("labels must be empty or match the row count");
          Dataset d{schema, {}};
          for (size_t r = 0; r < rows.size(); ++r)
            d.rows.push_back(observation_from_values(
                schema, rows[r], labels.empty() ? std::nullopt : labels[r]));
          return d;
        },
        py::arg("schema"), py::arg("rows"),
        py::arg("labels") = std::vector<std::optional<int>>{});

  m.def("load_csv",
        [](const std::filesystem::path& path, bool labeled,
           const FeatureSchema& schema) {
          py::gil_scoped_release release;
          return load_csv(path, labeled, schema);
        },
        py::arg("path"), py::arg("labeled"),
        py::arg("schema") = FeatureSchema::nslkdd(),
        "Load an NSL-KDD style CSV");

  m.def("split_random",
        [](const Dataset& d, size_t n, uint64_t seed) {
          return split_random(d, n, seed);
        },
        py::arg("dataset"), py::arg("n"), py::arg("seed"));

  py::class_<PipelineConfig>(m, "PipelineConfig")
      .def(py::init<>())
      .def_readwrite("min_support", &PipelineConfig::min_support)
      .def_readwrite("stage1_min_support", &PipelineConfig::stage1_min_support)
      .def_readwrite("max_degree", &PipelineConfig::max_degree)
      .def_readwrite("tau0", &PipelineConfig::tau0)
      .def_readwrite("tau1", &PipelineConfig::tau1)
      .def_readwrite("prune_full", &PipelineConfig::prune_full)
      .def_readwrite("prune_partial", &PipelineConfig::prune_partial)
      .def_readwrite("seed", &PipelineConfig::seed);

  py::class_<Model>(m, "Model")
      .def_static("load", &load_model, py::arg("path"))
      .def("save", &save_model, py::arg("path"),
           py::call_guard<py::gil_scoped_release>())
      .def("classify",
           [](const Model& model, const std::vector<PyValue>& values) {
             return verdict_to_py(model.classify(observation_from_values(
                 model.schema(), values, std::nullopt)));
           },
           py::arg("values"),
           "Classify one observation; 1 normal, 0 attack, None unclassified")
      .def("classify_batch",
           [](const Model& model, const Dataset& d) {
             py::list out;
             for (const auto& row : d.rows)
               out.append(verdict_to_py(model.classify(row)));
             return out;
           },
           py::arg("dataset"))
      .def_property_readonly("schema", &Model::schema)
      .def_property_readonly("support_set",
                             [](const Model& m_) { return m_.support.ids; })
      .def_property_readonly("positive_rule_count",
                             [](const Model& m_) {
                               return m_.rules.positive.size();
                             })
      .def_property_readonly("negative_rule_count",
                             [](const Model& m_) {
                               return m_.rules.negative.size();
                             })
      .def("rules_text", [](const Model& m_) {
        std::vector<std::string> out;
        for (const auto& r : m_.rules.positive)
          out.push_back(r.to_string(m_.schema()));
        for (const auto& r : m_.rules.negative)
          out.push_back(r.to_string(m_.schema()));
        return out;
      });

  m.def("self_label",
        [](const Dataset& d_l, const Dataset& d_ul, const PipelineConfig& cfg) {
          auto [labeled, report] = self_label(d_l, d_ul, cfg);
          return py::make_tuple(labeled, labeling_to_py(report));
        },
        py::arg("labeled"), py::arg("unlabeled"),
        py::arg("config") = PipelineConfig{});

  m.def("train_offline",
        [](const Dataset& d_l, const Dataset& d_ul, const PipelineConfig& cfg) {
          TrainResult result = train_offline(d_l, d_ul, cfg);
          return py::make_tuple(std::move(result.model),
                                labeling_to_py(result.labeling),
                                stats_to_py(result.stats));
        },
        py::arg("labeled"), py::arg("unlabeled"),
        py::arg("config") = PipelineConfig{},
        "Offline phase; returns (model, labeling_report, stats)");

  m.def("evaluate",
        [](const Model& model, const Dataset& test) {
          const Metrics metrics = evaluate(model, test);
          py::dict out;
          out["rows"] = metrics.total;
          out["epsilon"] = metrics.epsilon;
          out["epsilon_as_error"] = variant_to_py(metrics.as_error);
          out["epsilon_as_attack"] = variant_to_py(metrics.as_attack);
          out["epsilon_excluded"] = variant_to_py(metrics.excluded);
          out["mean_latency_seconds"] = metrics.mean_latency_seconds;
          out["p99_latency_seconds"] = metrics.p99_latency_seconds;
          return out;
        },
        py::arg("model"), py::arg("test"));

  m.attr("__version__") = "0.1.0";
}
