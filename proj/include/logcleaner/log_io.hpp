#pragma once

#include <filesystem>
#include <iosfwd>

#include "logcleaner/log.hpp"

namespace logcleaner {

enum class LogFormat { auto_detect, jsonl, tsv };

// Reads every log file in `directory`, one log per file, named by the file
// stem. Files are visited in lexicographic filename order. Under auto
// detection, ".tsv" files are parsed as TSV and ".jsonl"/".log" files as
// JSON lines; other files are skipped.
LogSet load_log_set(const std::filesystem::path& directory,
                    LogFormat format = LogFormat::auto_detect);

Log read_log(std::istream& in, const std::string& name,
             const std::string& display_path, LogFormat format);

// JSON lines: {"ts": <number>, "tpl": "...", "params": {...}} per entry,
// "params" omitted when empty.
void write_log(const Log& log, std::ostream& out);

// One <name>.jsonl per log; the directory is created if missing.
void write_log_set(const LogSet& set, const std::filesystem::path& directory);

}  // namespace logcleaner
