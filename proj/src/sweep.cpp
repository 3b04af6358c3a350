#include "logcleaner/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <limits>
#include <ostream>
#include <vector>

#include "logcleaner/errors.hpp"
#include "logcleaner/rng.hpp"

namespace logcleaner {
namespace {

struct Stats {
  double mean = std::numeric_limits<double>::quiet_NaN();
  double sd = 0.0;
};

Stats mean_sd(const std::vector<double>& values) {
  if (values.empty()) return {};
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  if (values.size() > 1) {
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size() - 1);
  }
  return {mean, std::sqrt(var)};
}

void write_value(std::ostream& out, const std::optional<double>& v) {
  if (v)
    out << *v;
  else
    out << "nan";
}

}  // namespace

SweepResult nr_sweep(const FsmModel& model, const SweepConfig& config) {
  if (config.nr_values.empty()) throw ConfigError("no noise rates given");
  for (double nr : config.nr_values)
    if (!(nr > 0.0 && nr < 1.0)) throw ConfigError("noise rates must be in (0, 1)");
  if (config.repetitions < 1) throw ConfigError("repetitions must be >= 1");
  validate(config.pipeline);
  validate(model);

  const std::size_t n_cells =
      config.nr_values.size() * static_cast<std::size_t>(config.repetitions);
  SweepResult result;
  result.cells.resize(n_cells);

  std::atomic<bool> failed{false};
  std::exception_ptr first_error;

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(n_cells); ++idx) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      const auto cell = static_cast<std::size_t>(idx);
      const std::size_t nr_index = cell / config.repetitions;
      const int repetition = static_cast<int>(cell % config.repetitions);
      const double nr = config.nr_values[nr_index];

      TraceGenConfig gen = config.gen;
      gen.seed = derive_seed(config.seed, static_cast<std::uint64_t>(cell) * 2);
      const LogSet corpus = generate_traces(model, gen);

      NoiseSpec spec;
      spec.n_templates = config.n_templates;
      spec.nr = nr;
      spec.seed = derive_seed(config.seed, static_cast<std::uint64_t>(cell) * 2 + 1);
      const InjectionResult injection = inject_noise(corpus, spec);

      const CleanOutcome outcome = clean_log_set(injection.logs, config.pipeline);
      const Metrics metrics =
          classification_metrics(outcome.report.removed_templates(), injection.truth);

      result.cells[cell] = SweepCell{nr, repetition, metrics.recall, metrics.specificity};
    } catch (...) {
#pragma omp critical(sweep_error)
      {
        if (!failed.exchange(true)) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  for (std::size_t nr_index = 0; nr_index < config.nr_values.size(); ++nr_index) {
    std::vector<double> recalls, specificities;
    for (int r = 0; r < config.repetitions; ++r) {
      const auto& cell = result.cells[nr_index * config.repetitions + r];
      if (cell.recall) recalls.push_back(*cell.recall);
      if (cell.specificity) specificities.push_back(*cell.specificity);
    }
    const auto rs = mean_sd(recalls);
    const auto ss = mean_sd(specificities);
    result.aggregates.push_back(
        {config.nr_values[nr_index], rs.mean, rs.sd, ss.mean, ss.sd});
  }
  return result;
}

void write_cells_csv(const SweepResult& result, std::ostream& out) {
  out << "nr,repetition,recall,specificity\n";
  out << std::fixed << std::setprecision(6);
  for (const auto& cell : result.cells) {
    out << cell.nr << ',' << cell.repetition << ',';
    write_value(out, cell.recall);
    out << ',';
    write_value(out, cell.specificity);
    out << '\n';
  }
}

void write_aggregates_csv(const SweepResult& result, std::ostream& out) {
  out << "nr,mean_recall,sd_recall,mean_specificity,sd_specificity\n";
  out << std::fixed << std::setprecision(6);
  for (const auto& agg : result.aggregates) {
    out << agg.nr << ',' << agg.mean_recall << ',' << agg.sd_recall << ','
        << agg.mean_specificity << ',' << agg.sd_specificity << '\n';
  }
}

}  // namespace logcleaner
