#include "lad/eval.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <vector>

#include "lad/error.hpp"

namespace lad {

namespace {

void derive(MetricsVariant& v) {
  const Confusion& c = v.confusion;
  const size_t total = c.total();
  v.accuracy = total ? static_cast<double>(c.tp + c.tn) / total : 0.0;
  v.precision = (c.tp + c.fp) ? static_cast<double>(c.tp) / (c.tp + c.fp) : 0.0;
  v.sensitivity = (c.tp + c.fn) ? static_cast<double>(c.tp) / (c.tp + c.fn) : 0.0;
  v.f1 = (v.precision + v.sensitivity) > 0
             ? 2.0 * v.precision * v.sensitivity / (v.precision + v.sensitivity)
             : 0.0;
}

}  // namespace

Metrics evaluate(const Model& m, const Dataset& test) {
  if (test.rows.empty()) throw DataError("evaluate: empty test set");
  if (!test.fully_labeled())
    throw DataError("evaluate: test set must be fully labeled");
  if (!(test.schema == m.schema()))
    throw ModelError("evaluate: test schema does not match the model");

  Metrics out;
  out.total = test.size();
  std::vector<double> latencies;
  latencies.reserve(test.size());

  using clock = std::chrono::steady_clock;
  for (const auto& row : test.rows) {
    const auto t0 = clock::now();
    const Verdict v = m.classify(row);
    const auto t1 = clock::now();
    latencies.push_back(std::chrono::duration<double>(t1 - t0).count());

    const bool truth_normal = (*row.label == Label::Normal);
    auto tally = [&](Confusion& c, Verdict verdict) {
      if (verdict == Verdict::Normal)
        (truth_normal ? c.tp : c.fp)++;
      else
        (truth_normal ? c.fn : c.tn)++;
    };
    if (v == Verdict::Unclassified) {
      ++out.epsilon;
      // as-error: charged as the wrong class; as-attack: collapses to attack
      tally(out.as_error.confusion, truth_normal ? Verdict::Attack : Verdict::Normal);
      tally(out.as_attack.confusion, Verdict::Attack);
    } else {
      tally(out.as_error.confusion, v);
      tally(out.as_attack.confusion, v);
      tally(out.excluded.confusion, v);
    }
  }
  derive(out.as_error);
  derive(out.as_attack);
  derive(out.excluded);

  double sum = 0.0;
  for (double l : latencies) sum += l;
  out.mean_latency_seconds = sum / latencies.size();
  std::sort(latencies.begin(), latencies.end());
  const size_t p99 = std::min(latencies.size() - 1, (latencies.size() * 99) / 100);
  out.p99_latency_seconds = latencies[p99];
  return out;
}

double time_classification(const Model& m, const Dataset& test) {
  if (test.rows.empty()) throw DataError("time_classification: empty test set");
  using clock = std::chrono::steady_clock;
  volatile size_t sink = 0;
  const auto t0 = clock::now();
  for (const auto& row : test.rows)
    sink = sink + static_cast<size_t>(m.classify(row));
  const auto t1 = clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / test.size();
}

std::string metrics_table(const Metrics& m) {
  std::ostringstream out;
  out << std::fixed;
  auto line = [&](const char* name, const MetricsVariant& v) {
    out << std::left << std::setw(12) << name << std::right << std::setprecision(4)
        << "  acc " << std::setw(7) << v.accuracy * 100.0 << "%"
        << "  prec " << std::setw(6) << v.precision
        << "  sens " << std::setw(6) << v.sensitivity
        << "  f1 " << std::setw(6) << v.f1
        << "  (tp " << v.confusion.tp << " fp " << v.confusion.fp
        << " tn " << v.confusion.tn << " fn " << v.confusion.fn << ")\n";
  };
  out << "rows " << m.total << ", unclassified " << m.epsilon << "\n";
  line("eps-error", m.as_error);
  line("eps-attack", m.as_attack);
  line("eps-exclude", m.excluded);
  out << std::scientific << std::setprecision(3) << "latency mean "
      << m.mean_latency_seconds << " s/obs, p99 " << m.p99_latency_seconds
      << " s/obs\n";
  return out.str();
}

}  // namespace lad
