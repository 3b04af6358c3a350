#include "logcleaner/log_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "logcleaner/errors.hpp"

namespace logcleaner {
namespace {

using nlohmann::json;

void check_timestamp(double ts, const std::string& path, std::size_t lineno) {
  if (!std::isfinite(ts)) throw ParseError(path, lineno, "timestamp is not finite");
  if (ts < 0) throw ParseError(path, lineno, "timestamp is negative");
}

LogEntry parse_jsonl_line(const std::string& line, const std::string& path, std::size_t lineno) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(path, lineno, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(path, lineno, "expected a JSON object");
  if (!j.contains("ts") || !j["ts"].is_number())
    throw ParseError(path, lineno, "missing numeric \"ts\"");
  if (!j.contains("tpl") || !j["tpl"].is_string())
    throw ParseError(path, lineno, "missing string \"tpl\"");

  LogEntry entry;
  entry.ts = j["ts"].get<double>();
  check_timestamp(entry.ts, path, lineno);
  entry.tpl = j["tpl"].get<std::string>();
  if (entry.tpl.empty()) throw ParseError(path, lineno, "\"tpl\" must be non-empty");
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ParseError(path, lineno, "\"params\" must be an object");
    for (const auto& [key, value] : j["params"].items()) {
      if (!value.is_string()) throw ParseError(path, lineno, "parameter values must be strings");
      entry.params[key] = value.get<std::string>();
    }
  }
  return entry;
}

// ts<TAB>tpl[<TAB>k=v;k=v]
LogEntry parse_tsv_line(const std::string& line, const std::string& path, std::size_t lineno) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  if (fields.size() < 2 || fields.size() > 3)
    throw ParseError(path, lineno, "expected ts<TAB>tpl[<TAB>params]");

  LogEntry entry;
  try {
    std::size_t consumed = 0;
    entry.ts = std::stod(fields[0], &consumed);
    if (consumed != fields[0].size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ParseError(path, lineno, "cannot parse timestamp \"" + fields[0] + "\"");
  }
  check_timestamp(entry.ts, path, lineno);
  entry.tpl = fields[1];
  if (entry.tpl.empty()) throw ParseError(path, lineno, "template must be non-empty");
  if (fields.size() == 3 && !fields[2].empty()) {
    std::stringstream pairs(fields[2]);
    std::string item;
    while (std::getline(pairs, item, ';')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw ParseError(path, lineno, "parameter \"" + item + "\" is not k=v");
      entry.params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return entry;
}

}  // namespace

Log read_log(std::istream& in, const std::string& name,
             const std::string& display_path, LogFormat format) {
  if (format == LogFormat::auto_detect)
    throw std::invalid_argument("read_log: format must be resolved by the caller");
  Log log;
  log.name = name;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    log.entries.push_back(format == LogFormat::tsv
                              ? parse_tsv_line(line, display_path, lineno)
                              : parse_jsonl_line(line, display_path, lineno));
  }
  return log;
}

LogSet load_log_set(const std::filesystem::path& directory, LogFormat format) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(directory, ec))
    throw IoError("not a directory: " + directory.string());

  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(directory)) {
    if (!de.is_regular_file()) continue;
    const auto filename = de.path().filename().string();
    if (filename.empty() || filename.front() == '.') continue;
    files.push_back(de.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<Log> logs;
  for (const auto& path : files) {
    LogFormat file_format = format;
    if (format == LogFormat::auto_detect) {
      const auto ext = path.extension().string();
      if (ext == ".tsv")
        file_format = LogFormat::tsv;
      else if (ext == ".jsonl" || ext == ".log")
        file_format = LogFormat::jsonl;
      else
        continue;
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    logs.push_back(read_log(in, path.stem().string(), path.string(), file_format));
  }
  if (logs.empty()) throw IoError("no logs found in " + directory.string());
  return make_log_set(std::move(logs));
}

void write_log(const Log& log, std::ostream& out) {
  for (const auto& e : log.entries) {
    json j;
    j["ts"] = e.ts;
    j["tpl"] = e.tpl;
    if (!e.params.empty()) j["params"] = e.params;
    out << j.dump() << '\n';
  }
}

void write_log_set(const LogSet& set, const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  for (const auto& log : set.logs) {
    const auto path = directory / (log.name + ".jsonl");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    write_log(log, out);
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
  }
}

}  // namespace logcleaner
