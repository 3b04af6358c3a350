#include "logcleaner/periodicity.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace logcleaner {

double mad(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mad: empty input");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double deviation = 0.0;
  for (double v : values) deviation += std::abs(v - mean);
  return deviation / static_cast<double>(values.size());
}

double atd(std::span<const double> timestamps) {
  if (timestamps.size() < 2)
    throw std::invalid_argument("atd: need at least two timestamps");
  double sum = 0.0;
  for (std::size_t i = 1; i < timestamps.size(); ++i)
    sum += timestamps[i] - timestamps[i - 1];
  return sum / static_cast<double>(timestamps.size() - 1);
}

bool PeriodicityDiagnostics::globally_periodic() const {
  if (per_log.empty()) return false;
  for (const auto& rec : per_log)
    if (!rec.verdict) return false;
  return true;
}

std::pair<bool, LogPeriodicity> is_periodic_begin_to_end(const TemplateId& t,
                                                         const Log& l,
                                                         double delta) {
  LogPeriodicity rec;
  rec.log = l.name;

  std::vector<double> occurrences;
  for (const auto& e : l.entries)
    if (e.tpl == t) occurrences.push_back(e.ts);
  rec.count = occurrences.size();

  // Periodicity needs at least two gaps, so fewer than three occurrences
  // cannot pass.
  if (occurrences.size() < 3) return {false, rec};

  std::vector<double> gaps(occurrences.size() - 1);
  for (std::size_t i = 1; i < occurrences.size(); ++i)
    gaps[i - 1] = occurrences[i] - occurrences[i - 1];

  rec.mad = mad(gaps);
  rec.atd = atd(occurrences);
  rec.cond1 = *rec.mad <= delta;
  rec.cond2 = occurrences.front() - l.entries.front().ts <= *rec.atd;
  rec.cond3 = l.entries.back().ts - occurrences.back() <= *rec.atd;
  rec.verdict = *rec.cond1 && *rec.cond2 && *rec.cond3;
  return {rec.verdict, rec};
}

PeriodicityResult periodicity_analysis(const LogSet& set, const PeriodicityConfig& config) {
  if (config.delta < 0) throw std::invalid_argument("periodicity: delta must be >= 0");

  const std::vector<TemplateId> templates(set.templates.begin(), set.templates.end());
  std::vector<PeriodicityDiagnostics> diagnostics(templates.size());

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(templates.size()); ++i) {
    PeriodicityDiagnostics diag;
    diag.template_id = templates[i];
    diag.per_log.reserve(set.logs.size());
    for (const auto& log : set.logs)
      diag.per_log.push_back(is_periodic_begin_to_end(templates[i], log, config.delta).second);
    diagnostics[i] = std::move(diag);
  }

  PeriodicityResult result;
  for (const auto& diag : diagnostics)
    if (diag.globally_periodic()) result.globally_periodic.insert(diag.template_id);
  result.cleaned = remove_messages_of(result.globally_periodic, set);
  result.diagnostics = std::move(diagnostics);
  return result;
}

}  // namespace logcleaner
