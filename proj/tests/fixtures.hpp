#pragma once

#include <map>
#include <string>
#include <vector>

#include "logcleaner/log.hpp"
#include "logcleaner/rng.hpp"

namespace fixtures {

using logcleaner::Log;
using logcleaner::LogEntry;
using logcleaner::LogSet;
using logcleaner::Rng;

inline LogEntry entry(double ts, std::string tpl,
                      std::map<std::string, std::string> params = {}) {
  return LogEntry{ts, std::move(tpl), std::move(params)};
}

// 18-entry running example: a ping heartbeat every second, two send/check
// exchanges, four memory probes. Three pairs of entries share a timestamp;
// their file order is meaningful.
inline Log running_example() {
  Log log;
  log.name = "running_example";
  log.entries = {
      entry(1, "ping", {{"status", "OK"}}),
      entry(1, "send", {{"msg", "MSG1"}, {"ch", "CH1"}}),
      entry(2, "ping", {{"status", "OK"}}),
      entry(2, "memory", {{"status", "OK"}}),
      entry(2, "check", {{"msg", "MSG1"}}),
      entry(3, "ping", {{"status", "OK"}}),
      entry(3, "check", {{"msg", "MSG1"}}),
      entry(3, "memory", {{"status", "OK"}}),
      entry(4, "ping", {{"status", "OK"}}),
      entry(5, "ping", {{"status", "OK"}}),
      entry(6, "ping", {{"status", "OK"}}),
      entry(6, "memory", {{"status", "OK"}}),
      entry(6, "send", {{"msg", "MSG2"}, {"ch", "CH1"}}),
      entry(7, "ping", {{"status", "OK"}}),
      entry(7, "check", {{"msg", "MSG2"}}),
      entry(8, "ping", {{"status", "OK"}}),
      entry(9, "ping", {{"status", "OK"}}),
      entry(9, "memory", {{"status", "OK"}}),
  };
  return log;
}

inline LogSet running_example_set() {
  return logcleaner::make_log_set({running_example()});
}

// The running example without the heartbeat entries, written out explicitly
// so tests of remove_messages_of have an independent expectation.
inline Log intermediate_log() {
  Log log;
  log.name = "running_example";
  log.entries = {
      entry(1, "send", {{"msg", "MSG1"}, {"ch", "CH1"}}),   // e1'
      entry(2, "memory", {{"status", "OK"}}),               // e2'
      entry(2, "check", {{"msg", "MSG1"}}),                 // e3'
      entry(3, "check", {{"msg", "MSG1"}}),                 // e4'
      entry(3, "memory", {{"status", "OK"}}),               // e5'
      entry(6, "memory", {{"status", "OK"}}),               // e6'
      entry(6, "send", {{"msg", "MSG2"}, {"ch", "CH1"}}),   // e7'
      entry(7, "check", {{"msg", "MSG2"}}),                 // e8'
      entry(9, "memory", {{"status", "OK"}}),               // e9'
  };
  return log;
}

inline LogSet intermediate_set() {
  return logcleaner::make_log_set({intermediate_log()});
}

// Random log over templates t0..t{k-1}, timestamps equal to indexes.
inline Log random_log(Rng& rng, std::size_t max_len, std::size_t n_templates,
                      std::string name = "rand_00") {
  Log log;
  log.name = std::move(name);
  const std::size_t len = 1 + rng.below(max_len);
  for (std::size_t i = 0; i < len; ++i)
    log.entries.push_back(entry(static_cast<double>(i),
                                "t" + std::to_string(rng.below(n_templates))));
  return log;
}

// Always produces a set in which at least two distinct templates occur.
inline LogSet random_log_set(Rng& rng, std::size_t max_logs, std::size_t max_len,
                             std::size_t max_templates) {
  while (true) {
    const std::size_t n_logs = 1 + rng.below(max_logs);
    const std::size_t k = 2 + rng.below(max_templates - 1);
    std::vector<Log> logs;
    logs.reserve(n_logs);
    for (std::size_t i = 0; i < n_logs; ++i) {
      std::string name = "rand_" + std::string(i < 10 ? "0" : "") + std::to_string(i);
      logs.push_back(random_log(rng, max_len, k, std::move(name)));
    }
    LogSet set = logcleaner::make_log_set(std::move(logs));
    if (set.templates.size() >= 2) return set;
  }
}

inline bool is_subsequence(const std::vector<LogEntry>& sub,
                           const std::vector<LogEntry>& full) {
  std::size_t i = 0;
  for (const auto& e : full)
    if (i < sub.size() && sub[i] == e) ++i;
  return i == sub.size();
}

}  // namespace fixtures
