#pragma once

#include <string>
#include <vector>

namespace photonbec {

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_format(const std::string& name);

/// Flat ordered key/value report. Numbers render with 17 significant
/// digits in the machine formats so values round-trip exactly.
struct ReportField {
  enum class Kind { Number, Text, Boolean };
  std::string key;
  Kind kind;
  double num = 0.0;
  std::string text;
  bool flag = false;
};

struct Report {
  std::string title;
  std::vector<ReportField> fields;

  void add(const std::string& key, double value);
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value);
  void add(const std::string& key, bool value);
};

/// Multi-row output (sweeps, trajectories); cells are pre-rendered.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string format_number(double v);

std::string render_text(const Report& r);
std::string render_csv(const Report& r);
std::string render_json(const Report& r);

std::string render_csv(const Table& t);
std::string render_json(const Table& t);
/// Tables have no free-form text rendering; text output falls back to CSV.
std::string render(const Report& r, OutputFormat f);
std::string render(const Table& t, OutputFormat f);

}  // namespace photonbec
