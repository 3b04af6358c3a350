#include "logcleaner/noise.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "logcleaner/errors.hpp"
#include "logcleaner/rng.hpp"

namespace logcleaner {
namespace {

// Fresh ids, disjoint from the templates already present.
std::vector<TemplateId> fresh_template_ids(const LogSet& set, int count) {
  std::vector<TemplateId> ids;
  ids.reserve(count);
  for (int i = 1; i <= count; ++i) {
    std::string candidate = "noise_op_" + std::to_string(i);
    while (set.templates.contains(candidate)) candidate += "_";
    ids.push_back(candidate);
  }
  return ids;
}

// Largest-remainder split of `total` across logs, weighted by log length.
// Empty logs never receive a share.
std::vector<std::size_t> proportional_quota(const LogSet& set, std::size_t total,
                                            std::size_t total_entries) {
  const std::size_t n_logs = set.logs.size();
  std::vector<std::size_t> quota(n_logs, 0);
  std::vector<std::pair<std::size_t, std::size_t>> remainders;  // (remainder, log)
  remainders.reserve(n_logs);
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < n_logs; ++i) {
    const std::size_t len = set.logs[i].entries.size();
    quota[i] = total * len / total_entries;
    assigned += quota[i];
    remainders.emplace_back(total * len % total_entries, i);
  }
  std::sort(remainders.begin(), remainders.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first > b.first;
              return a.second < b.second;
            });
  for (std::size_t k = 0; assigned < total; ++k, ++assigned) ++quota[remainders[k].second];
  return quota;
}

}  // namespace

InjectionResult inject_noise(const LogSet& set, const NoiseSpec& spec) {
  if (!(spec.nr > 0.0 && spec.nr < 1.0)) throw ConfigError("noise rate must be in (0, 1)");
  if (spec.n_templates < 1) throw ConfigError("n_templates must be >= 1");
  const std::size_t total = set.total_entries();
  if (total == 0) throw DataError("cannot inject noise into an empty log set");

  const auto op_ids = fresh_template_ids(set, spec.n_templates);
  const auto injected = static_cast<std::size_t>(
      std::llround(spec.nr / (1.0 - spec.nr) * static_cast<double>(total)));
  const auto quota = proportional_quota(set, injected, total);

  Rng rng(spec.seed);
  InjectionResult result;
  result.logs.logs.reserve(set.logs.size());
  std::set<TemplateId> used;
  for (std::size_t i = 0; i < set.logs.size(); ++i) {
    Log log = set.logs[i];
    if (quota[i] > 0) {
      const double lo = log.entries.front().ts;
      const double hi = log.entries.back().ts;
      for (std::size_t j = 0; j < quota[i]; ++j) {
        LogEntry entry;
        entry.tpl = op_ids[rng.below(op_ids.size())];
        entry.ts = rng.uniform(lo, hi);
        used.insert(entry.tpl);
        log.entries.push_back(std::move(entry));
      }
      // Stable sort: the original entries were sorted and appended first, so
      // their relative order survives any timestamp ties.
      std::stable_sort(log.entries.begin(), log.entries.end(),
                       [](const LogEntry& a, const LogEntry& b) { return a.ts < b.ts; });
    }
    result.logs.logs.push_back(std::move(log));
  }
  result.logs.rebuild_templates();
  result.truth.transactional = set.templates;
  result.truth.operational = std::move(used);
  result.injected_entries = injected;
  return result;
}

Metrics classification_metrics(const std::set<TemplateId>& removed, const GroundTruth& truth) {
  for (const auto& t : removed)
    if (!truth.operational.contains(t) && !truth.transactional.contains(t))
      throw DataError("removed template \"" + t + "\" is not covered by the ground truth");

  Metrics m;
  for (const auto& t : truth.operational) {
    if (removed.contains(t))
      ++m.tp;
    else
      ++m.fn;
  }
  for (const auto& t : truth.transactional) {
    if (removed.contains(t))
      ++m.fp;
    else
      ++m.tn;
  }
  if (m.tp + m.fn > 0)
    m.recall = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
  if (m.tn + m.fp > 0)
    m.specificity = static_cast<double>(m.tn) / static_cast<double>(m.tn + m.fp);
  return m;
}

}  // namespace logcleaner
