#include "logcleaner/dependency.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace logcleaner {

FirstFollowing first_following(std::size_t ex, const TemplateId& y, const Log& l) {
  if (ex >= l.entries.size())
    throw std::out_of_range("first_following: entry index out of range");
  const TemplateId& x = l.entries[ex].tpl;
  if (x == y)
    throw std::invalid_argument("first_following: y must differ from the template at e_x");

  std::size_t window_end = l.entries.size();
  for (std::size_t j = ex + 1; j < l.entries.size(); ++j) {
    if (l.entries[j].tpl == x) {
      window_end = j;
      break;
    }
  }
  for (std::size_t j = ex + 1; j < window_end; ++j)
    if (l.entries[j].tpl == y) return {l.name, j};
  return {l.name, std::nullopt};
}

double cscore(std::size_t ex, const FirstFollowing& ey) {
  if (!ey.is_entry()) return 0.0;
  if (*ey.index <= ex) throw std::invalid_argument("cscore: non-positive distance");
  return 1.0 / static_cast<double>(*ey.index - ex);
}

namespace detail {

OccurrenceIndex::OccurrenceIndex(const LogSet& set) {
  // Only templates that actually occur take part in scoring.
  std::map<TemplateId, std::size_t> ids;
  for (const auto& log : set.logs)
    for (const auto& e : log.entries) ids.emplace(e.tpl, 0);

  templates_.reserve(ids.size());
  for (auto& [t, id] : ids) {
    id = templates_.size();
    templates_.push_back(t);
  }

  totals_.assign(templates_.size(), 0);
  positions_.resize(set.logs.size());
  log_sizes_.resize(set.logs.size());
  for (std::size_t li = 0; li < set.logs.size(); ++li) {
    const auto& log = set.logs[li];
    log_sizes_[li] = log.entries.size();
    positions_[li].assign(templates_.size(), {});
    for (std::size_t i = 0; i < log.entries.size(); ++i) {
      const std::size_t tid = ids.at(log.entries[i].tpl);
      positions_[li][tid].push_back(i);
      ++totals_[tid];
    }
  }
}

std::optional<std::size_t> OccurrenceIndex::id_of(const TemplateId& t) const {
  const auto it = std::lower_bound(templates_.begin(), templates_.end(), t);
  if (it == templates_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - templates_.begin());
}

double OccurrenceIndex::forward_score(std::size_t x, std::size_t y) const {
  if (totals_[x] == 0) throw std::invalid_argument("dscore: template has no occurrences");

  // Sums are accumulated left-to-right over logs, then entries, so repeated
  // runs reproduce the same floating point result.
  double sum = 0.0;
  for (std::size_t li = 0; li < positions_.size(); ++li) {
    const auto& xs = positions_[li][x];
    const auto& ys = positions_[li][y];
    std::size_t yi = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const std::size_t i = xs[k];
      const std::size_t window_end = k + 1 < xs.size() ? xs[k + 1] : log_sizes_[li];
      while (yi < ys.size() && ys[yi] <= i) ++yi;
      if (yi < ys.size() && ys[yi] < window_end)
        sum += 1.0 / static_cast<double>(ys[yi] - i);
    }
  }
  return sum / static_cast<double>(totals_[x]);
}

}  // namespace detail

namespace {

double forward_on(const detail::OccurrenceIndex& index, const TemplateId& x, const TemplateId& y) {
  const auto xid = index.id_of(x);
  if (!xid) throw std::invalid_argument("dscore: template \"" + x + "\" has no occurrences");
  const auto yid = index.id_of(y);
  if (!yid) return 0.0;  // y never occurs: every first-following is NaE
  return index.forward_score(*xid, *yid);
}

}  // namespace

double dscore_forward(const TemplateId& x, const TemplateId& y, const LogSet& set) {
  if (x == y) throw std::invalid_argument("dscore: x and y must differ");
  const detail::OccurrenceIndex index(set);
  return forward_on(index, x, y);
}

double dscore_backward(const TemplateId& x, const TemplateId& y, const LogSet& set) {
  return dscore_forward(x, y, reverse(set));
}

double dscore_calc(const TemplateId& x, const TemplateId& y, const LogSet& set) {
  return std::max(dscore_forward(x, y, set), dscore_backward(x, y, set));
}

ScoreMap compute_mscore(const LogSet& set) {
  const detail::OccurrenceIndex forward(set);
  const LogSet reversed = reverse(set);
  const detail::OccurrenceIndex backward(reversed);

  const auto& templates = forward.templates();
  const std::size_t t = templates.size();
  if (t < 2) throw std::invalid_argument("dependency undefined: need at least two templates");

  std::vector<double> pair_scores(t * t, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(t * t); ++p) {
    const auto x = static_cast<std::size_t>(p) / t;
    const auto y = static_cast<std::size_t>(p) % t;
    if (x == y) continue;
    pair_scores[p] = std::max(forward.forward_score(x, y), backward.forward_score(x, y));
  }

  ScoreMap scores;
  for (std::size_t x = 0; x < t; ++x) {
    double best = 0.0;
    for (std::size_t y = 0; y < t; ++y)
      if (y != x) best = std::max(best, pair_scores[x * t + y]);
    scores[templates[x]] = best;
  }
  return scores;
}

}  // namespace logcleaner
