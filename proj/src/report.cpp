#include "photonbec/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "photonbec/errors.hpp"

namespace photonbec {

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ValidationError("unknown format '" + name + "' (expected text, csv or json)");
}

void Report::add(const std::string& key, double value) {
  fields.push_back({key, ReportField::Kind::Number, value, "", false});
}
void Report::add(const std::string& key, const std::string& value) {
  fields.push_back({key, ReportField::Kind::Text, 0.0, value, false});
}
void Report::add(const std::string& key, const char* value) {
  add(key, std::string(value));
}
void Report::add(const std::string& key, bool value) {
  fields.push_back({key, ReportField::Kind::Boolean, 0.0, "", value});
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

// inf/nan are not valid JSON numbers; emit them as strings
std::string json_value(const ReportField& f) {
  switch (f.kind) {
    case ReportField::Kind::Number:
      if (std::isinf(f.num) || std::isnan(f.num)) return json_quote(format_number(f.num));
      return format_number(f.num);
    case ReportField::Kind::Text:
      return json_quote(f.text);
    case ReportField::Kind::Boolean:
      return f.flag ? "true" : "false";
  }
  return "null";
}

std::string plain_value(const ReportField& f) {
  switch (f.kind) {
    case ReportField::Kind::Number:
      return format_number(f.num);
    case ReportField::Kind::Text:
      return f.text;
    case ReportField::Kind::Boolean:
      return f.flag ? "true" : "false";
  }
  return "";
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "# " << r.title << "\n";
  size_t width = 0;
  for (const auto& f : r.fields) width = std::max(width, f.key.size());
  for (const auto& f : r.fields) {
    out << f.key << std::string(width - f.key.size() + 2, ' ') << plain_value(f) << "\n";
  }
  return out.str();
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  for (size_t i = 0; i < r.fields.size(); ++i)
    out << (i ? "," : "") << csv_quote(r.fields[i].key);
  out << "\r\n";
  for (size_t i = 0; i < r.fields.size(); ++i)
    out << (i ? "," : "") << csv_quote(plain_value(r.fields[i]));
  out << "\r\n";
  return out.str();
}

std::string render_json(const Report& r) {
  std::ostringstream out;
  out << "{\n";
  for (size_t i = 0; i < r.fields.size(); ++i) {
    out << "  " << json_quote(r.fields[i].key) << ": " << json_value(r.fields[i]);
    out << (i + 1 < r.fields.size() ? ",\n" : "\n");
  }
  out << "}\n";
  return out.str();
}

std::string render_csv(const Table& t) {
  std::ostringstream out;
  for (size_t i = 0; i < t.columns.size(); ++i)
    out << (i ? "," : "") << csv_quote(t.columns[i]);
  out << "\r\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_quote(row[i]);
    out << "\r\n";
  }
  return out.str();
}

std::string render_json(const Table& t) {
  std::ostringstream out;
  out << "[\n";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    out << "  {";
    for (size_t i = 0; i < t.columns.size(); ++i) {
      const std::string& cell = t.rows[r][i];
      out << (i ? ", " : "") << json_quote(t.columns[i]) << ": ";
      // numeric cells stay numbers, everything else is quoted
      char* end = nullptr;
      std::strtod(cell.c_str(), &end);
      const bool numeric = !cell.empty() && end == cell.c_str() + cell.size() &&
                           cell != "inf" && cell != "-inf" && cell != "nan";
      out << (numeric ? cell : json_quote(cell));
    }
    out << (r + 1 < t.rows.size() ? "},\n" : "}\n");
  }
  out << "]\n";
  return out.str();
}

std::string render(const Report& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return render_text(r);
    case OutputFormat::Csv: return render_csv(r);
    case OutputFormat::Json: return render_json(r);
  }
  return "";
}

std::string render(const Table& t, OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return render_csv(t);
    case OutputFormat::Csv: return render_csv(t);
    case OutputFormat::Json: return render_json(t);
  }
  return "";
}

}  // namespace photonbec
