#include "defcoh/report.hpp"

#include <iomanip>
#include <sstream>

namespace defcoh {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string Report::to_table() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  if (!instance.empty()) os << "instance: " << instance << "\n";
  for (const auto& [k, v] : fields) os << k << ": " << v << "\n";
  if (!table_rows.empty()) {
    std::vector<std::size_t> widths(table_header.size(), 0);
    for (std::size_t j = 0; j < table_header.size(); ++j) widths[j] = table_header[j].size();
    for (const auto& row : table_rows)
      for (std::size_t j = 0; j < row.size() && j < widths.size(); ++j) widths[j] = std::max(widths[j], row[j].size());
    const auto emit = [&](const std::vector<std::string>& row) {
      os << " ";
      for (std::size_t j = 0; j < row.size(); ++j) os << " " << std::setw(static_cast<int>(widths[j])) << std::left << row[j];
      os << "\n";
    };
    emit(table_header);
    for (const auto& row : table_rows) emit(row);
  }
  if (has_verdict) os << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
  os << "timing_ms: " << timing_ms << "\n";
  return os.str();
}

std::string Report::to_structured() const {
  std::ostringstream os;
  os << "{\n";
  os << "  \"command\": \"" << json_escape(command) << "\",\n";
  for (const auto& [k, v] : fields) os << "  \"" << json_escape(k) << "\": \"" << json_escape(v) << "\",\n";
  if (!instance.empty()) os << "  \"instance\": \"" << json_escape(instance) << "\",\n";
  if (!table_rows.empty()) {
    os << "  \"table\": [\n";
    for (std::size_t i = 0; i < table_rows.size(); ++i) {
      os << "    {";
      const auto& row = table_rows[i];
      for (std::size_t j = 0; j < row.size() && j < table_header.size(); ++j) {
        os << "\"" << json_escape(table_header[j]) << "\": \"" << json_escape(row[j]) << "\"";
        if (j + 1 < row.size() && j + 1 < table_header.size()) os << ", ";
      }
      os << "}" << (i + 1 < table_rows.size() ? "," : "") << "\n";
    }
    os << "  ],\n";
  }
  os << "  \"timing_ms\": " << timing_ms << ",\n";
  if (has_verdict)
    os << "  \"verdict\": \"" << (pass ? "PASS" : "FAIL") << "\"\n";
  else
    os << "  \"verdict\": null\n";
  os << "}\n";
  return os.str();
}

}  // namespace defcoh
