#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace logcleaner {

using TemplateId = std::string;

// e = (timestamp, template, parameters). Parameters are carried opaquely and
// never influence any analysis; everything keys on the template.
struct LogEntry {
  double ts = 0.0;
  TemplateId tpl;
  std::map<std::string, std::string> params;

  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

// Entries are sorted by non-decreasing timestamp; ties keep input order.
// The 0-based position of an entry is the distance unit for dependency
// scoring.
struct Log {
  std::string name;
  std::vector<LogEntry> entries;

  std::size_t size() const { return entries.size(); }

  friend bool operator==(const Log&, const Log&) = default;
};

struct LogSet {
  std::vector<Log> logs;
  std::set<TemplateId> templates;  // exact union over all entries

  std::size_t total_entries() const;
  void rebuild_templates();

  friend bool operator==(const LogSet&, const LogSet&) = default;
};

// Stable-sorts each log by timestamp and computes the template set.
LogSet make_log_set(std::vector<Log> logs);

// Reverses entry order; timestamps are kept as-is (scoring is index-based).
Log reverse(const Log& log);
LogSet reverse(const LogSet& set);

// Drops every entry whose template is in `templates`. Surviving entries keep
// their relative order; logs that become empty are retained as empty.
LogSet remove_messages_of(const std::set<TemplateId>& templates, const LogSet& set);

}  // namespace logcleaner
