// render.cpp
#include "gmchar/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gmchar/errors.hpp"

namespace gmchar {

using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw OutOfRange("unknown format '" + name + "'");
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json params_json(const Params& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

// Ordered union of the column names appearing in the rows.
std::vector<std::string> column_names(const std::vector<TableRow>& rows) {
  std::vector<std::string> names;
  for (const auto& row : rows)
    for (const auto& [name, value] : row.columns) {
      (void)value;
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
  return names;
}

}  // namespace

std::string render_record(const Record& rec, Format f) {
  switch (f) {
    case Format::Text: {
      std::ostringstream os;
      for (const auto& [k, v] : rec.fields) os << k << ": " << v << "\n";
      return os.str();
    }
    case Format::Csv: {
      std::ostringstream head, body;
      bool first = true;
      for (const auto& [k, v] : rec.fields) {
        if (!first) {
          head << ",";
          body << ",";
        }
        first = false;
        head << csv_quote(k);
        body << csv_quote(v);
      }
      return head.str() + "\n" + body.str() + "\n";
    }
    case Format::Json: {
      ordered_json j;
      j["command"] = rec.command;
      j["params"] = params_json(rec.params);
      ordered_json fields = ordered_json::object();
      for (const auto& [k, v] : rec.fields) fields[k] = v;
      j["fields"] = fields;
      return j.dump(2) + "\n";
    }
  }
  throw DomainError("render_record: unknown format");
}

std::string render_table(const std::string& command, const Params& params,
                         const std::vector<TableRow>& rows, Format f) {
  const auto names = column_names(rows);
  switch (f) {
    case Format::Text: {
      // Column widths over labels, values and headers; blank for absent columns.
      size_t label_w = 5;
      for (const auto& row : rows) label_w = std::max(label_w, row.label.size());
      std::vector<size_t> widths;
      for (const auto& name : names) {
        size_t w = name.size();
        for (const auto& row : rows) {
          auto v = row.column(name);
          if (v) w = std::max(w, v->str().size());
        }
        widths.push_back(w);
      }
      std::ostringstream os;
      os << std::string(label_w, ' ');
      for (size_t c = 0; c < names.size(); ++c)
        os << "  " << std::string(widths[c] - names[c].size(), ' ') << names[c];
      os << "\n";
      for (const auto& row : rows) {
        os << row.label << std::string(label_w - row.label.size(), ' ');
        for (size_t c = 0; c < names.size(); ++c) {
          auto v = row.column(names[c]);
          const std::string s = v ? v->str() : std::string();
          os << "  " << std::string(widths[c] - s.size(), ' ') << s;
        }
        if (!row.note.empty()) os << "  # " << row.note;
        os << "\n";
      }
      return os.str();
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "label";
      for (const auto& name : names) os << "," << csv_quote(name);
      os << ",note\n";
      for (const auto& row : rows) {
        os << csv_quote(row.label);
        for (const auto& name : names) {
          auto v = row.column(name);
          os << "," << (v ? v->str() : std::string());
        }
        os << "," << csv_quote(row.note) << "\n";
      }
      return os.str();
    }
    case Format::Json: {
      ordered_json j;
      j["command"] = command;
      j["params"] = params_json(params);
      ordered_json jrows = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json jr;
        jr["label"] = row.label;
        ordered_json cols = ordered_json::object();
        for (const auto& [name, value] : row.columns) cols[name] = value.str();
        jr["columns"] = cols;
        if (!row.note.empty()) jr["note"] = row.note;
        jrows.push_back(jr);
      }
      j["rows"] = jrows;
      return j.dump(2) + "\n";
    }
  }
  throw DomainError("render_table: unknown format");
}

std::string render_report(const Report& report, Format f) {
  switch (f) {
    case Format::Text: {
      std::ostringstream os;
      os << "suite: " << report.suite << "\n";
      for (const auto& c : report.checks) {
        const char* tag = c.pass ? "PASS" : (c.warn ? "WARN" : "FAIL");
        os << tag << "  " << c.description;
        if (!c.pass) os << "  [expected " << c.expected << ", got " << c.actual << "]";
        os << "\n";
      }
      os << (report.all_pass ? "all checks passed" : "checks FAILED") << " ("
         << report.checks.size() << " checks, " << report.failures() << " failures, "
         << report.warnings() << " warnings)\n";
      return os.str();
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "status,description,expected,actual\n";
      for (const auto& c : report.checks) {
        const char* tag = c.pass ? "PASS" : (c.warn ? "WARN" : "FAIL");
        os << tag << "," << csv_quote(c.description) << "," << csv_quote(c.expected) << ","
           << csv_quote(c.actual) << "\n";
      }
      return os.str();
    }
    case Format::Json: {
      ordered_json j;
      j["command"] = "check";
      j["params"] = ordered_json::object();
      ordered_json rep;
      rep["suite"] = report.suite;
      ordered_json checks = ordered_json::array();
      for (const auto& c : report.checks) {
        ordered_json jc;
        jc["description"] = c.description;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["pass"] = c.pass;
        jc["warn"] = c.warn;
        checks.push_back(jc);
      }
      rep["checks"] = checks;
      rep["all_pass"] = report.all_pass;
      j["report"] = rep;
      return j.dump(2) + "\n";
    }
  }
  throw DomainError("render_report: unknown format");
}

}  // namespace gmchar
