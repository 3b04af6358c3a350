#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logcleaner/log.hpp"

namespace logcleaner {

// Reference to the first-following entry of some template, or NaE.
struct FirstFollowing {
  std::string log;
  std::optional<std::size_t> index;

  bool is_entry() const { return index.has_value(); }
};

// First entry of template y strictly after position ex and strictly before
// the next entry of ex's own template (to the end of the log when it does
// not recur).
FirstFollowing first_following(std::size_t ex, const TemplateId& y, const Log& l);

// Reciprocal index distance; 0 for NaE.
double cscore(std::size_t ex, const FirstFollowing& ey);

// Mean cscore over all occurrences of x, counting NaE occurrences in the
// denominator.
double dscore_forward(const TemplateId& x, const TemplateId& y, const LogSet& set);

// dscore_forward on the reversed logs.
double dscore_backward(const TemplateId& x, const TemplateId& y, const LogSet& set);

// max(forward, backward)
double dscore_calc(const TemplateId& x, const TemplateId& y, const LogSet& set);

using ScoreMap = std::map<TemplateId, double>;

// mScore[x] = max over y != x of dscore_calc(x, y, set). Pair scores are
// independent and computed in parallel; the max reduction is insensitive to
// order.
ScoreMap compute_mscore(const LogSet& set);

namespace detail {

// Per-log occurrence positions, shared by all pair scores over one log set.
class OccurrenceIndex {
 public:
  explicit OccurrenceIndex(const LogSet& set);

  const std::vector<TemplateId>& templates() const { return templates_; }
  std::optional<std::size_t> id_of(const TemplateId& t) const;
  std::size_t total_occurrences(std::size_t tid) const { return totals_[tid]; }

  // dScore_f between template ids; throws when x never occurs.
  double forward_score(std::size_t x, std::size_t y) const;

 private:
  std::vector<TemplateId> templates_;  // sorted; only templates that occur
  std::vector<std::size_t> totals_;
  std::vector<std::size_t> log_sizes_;
  std::vector<std::vector<std::vector<std::size_t>>> positions_;  // [log][tid]
};

}  // namespace detail
}  // namespace logcleaner
