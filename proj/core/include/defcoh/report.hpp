#pragma once

#include <map>
#include <string>
#include <vector>

namespace defcoh {

/// A command report: echo, scalar fields, per-degree table rows, verdict.
/// The structured rendering is stable-key (sorted) so reports can be diffed;
/// the timing field is the only nondeterministic entry.
struct Report {
  std::string command;
  std::string instance;
  std::map<std::string, std::string> fields;
  std::vector<std::string> table_header;
  std::vector<std::vector<std::string>> table_rows;
  bool has_verdict = false;
  bool pass = false;
  double timing_ms = 0.0;

  void set(const std::string& key, const std::string& value) { fields[key] = value; }
  void set(const std::string& key, long value) { fields[key] = std::to_string(value); }

  std::string to_table() const;
  std::string to_structured() const;
};

}  // namespace defcoh
