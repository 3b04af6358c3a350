#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "logcleaner/log.hpp"

namespace logcleaner {

struct NoiseSpec {
  int n_templates = 5;
  double nr = 0.0;  // target share of injected entries, in (0, 1)
  std::uint64_t seed = 0;
};

struct GroundTruth {
  std::set<TemplateId> operational;
  std::set<TemplateId> transactional;
};

struct InjectionResult {
  LogSet logs;
  GroundTruth truth;
  std::size_t injected_entries = 0;
};

// Adds round(nr/(1-nr) * total) entries of fresh operational templates so the
// post-injection noise rate matches nr up to rounding. Injected entries are
// spread over logs proportionally to their length, assigned to the fresh
// templates uniformly at random, and given timestamps drawn uniformly over
// each log's own time span; each log is then re-sorted (stable), so the
// original entries keep their relative order. Deterministic given the seed.
InjectionResult inject_noise(const LogSet& set, const NoiseSpec& spec);

struct Metrics {
  std::size_t tp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::optional<double> recall;       // absent when tp + fn == 0
  std::optional<double> specificity;  // absent when tn + fp == 0
};

// removed templates vs. labeled ground truth; every removed template must be
// covered by the truth.
Metrics classification_metrics(const std::set<TemplateId>& removed, const GroundTruth& truth);

}  // namespace logcleaner
