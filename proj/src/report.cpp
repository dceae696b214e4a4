#include "covem/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace covem {

bool Check::pass() const {
  return std::isfinite(violation) && violation <= threshold;
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass(); });
}

void Report::add_check(std::string name, double violation, double threshold,
                       std::string detail) {
  checks.push_back({std::move(name), violation, threshold, std::move(detail)});
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "table") return OutputFormat::table;
  throw std::invalid_argument("unknown format '" + name + "' (json, csv, table)");
}

std::string format_number(double x) { return Json(x).dump(); }

Json to_json(const KForm& w) {
  Json out = Json::array();
  for (double x : w.components()) out.push_back(x);
  return out;
}

Json to_json(const Matrix4& m) {
  Json rows = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Vector4& v) {
  return Json::array({v(0), v(1), v(2), v(3)});
}

Json to_json(const Eigen::Matrix3d& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) rows.push_back(Json::array({m(r, 0), m(r, 1), m(r, 2)}));
  return rows;
}

bool all_finite(const Json& j) {
  if (j.is_number_float()) return std::isfinite(j.get<double>());
  if (j.is_structured()) {
    for (const auto& item : j) {
      if (!all_finite(item)) return false;
    }
  }
  return true;
}

namespace {

Json checks_json(const Report& r) {
  Json out = Json::array();
  for (const Check& c : r.checks) {
    Json item = {{"name", c.name},
                 {"violation", c.violation},
                 {"threshold", c.threshold},
                 {"pass", c.pass()}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    out.push_back(item);
  }
  return out;
}

std::size_t failed_count(const Report& r) {
  return static_cast<std::size_t>(std::count_if(
      r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.pass(); }));
}

std::string cell_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& path,
             std::vector<std::vector<Json>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, path.empty() ? key : path + "." + key, rows);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], path + "." + std::to_string(i), rows);
    }
  } else {
    rows.push_back({path, j});
  }
}

Table main_table(const Report& r) {
  if (r.table) return *r.table;
  Table t;
  t.header = {"path", "value"};
  flatten(r.results, "", t.rows);
  for (const Check& c : r.checks) {
    t.rows.push_back({"checks." + c.name + ".violation", c.violation});
    t.rows.push_back({"checks." + c.name + ".threshold", c.threshold});
    t.rows.push_back({"checks." + c.name + ".pass", c.pass()});
  }
  return t;
}

Table checks_table(const Report& r) {
  Table t;
  t.header = {"check", "violation", "threshold", "status"};
  for (const Check& c : r.checks) {
    t.rows.push_back({c.name, c.violation, c.threshold, c.pass() ? "PASS" : "FAIL"});
  }
  return t;
}

void write_csv(const Table& t, std::ostringstream& out) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    out << (i ? "," : "") << csv_field(t.header[i]);
  }
  out << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_field(cell_text(row[i]));
    }
    out << "\r\n";
  }
}

void write_table(const Table& t, bool color, std::ostringstream& out) {
  std::vector<std::size_t> width(t.header.size(), 0);
  std::vector<std::vector<std::string>> text;
  for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (std::size_t i = 0; i < row.size(); ++i) {
      cells.push_back(cell_text(row[i]));
      width[i] = std::max(width[i], cells.back().size());
    }
    text.push_back(std::move(cells));
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::string cell = cells[i];
      const std::size_t pad = width[i] - cell.size();
      if (color && (cell == "PASS" || cell == "FAIL")) {
        cell = (cell == "PASS" ? "\033[32m" : "\033[31m") + cell + "\033[0m";
      }
      out << (i ? "  " : "") << cell;
      if (i + 1 < cells.size()) out << std::string(pad, ' ');
    }
    out << "\n";
  };
  line(t.header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& cells : text) line(cells);
}

}  // namespace

std::string render_json(const Report& r) {
  Json out = Json::object();
  out["schema"] = kReportSchema;
  out["command"] = r.command;
  out["config"] = r.config;
  out["results"] = r.results;
  out["checks"] = checks_json(r);
  const std::size_t failed = failed_count(r);
  out["summary"] = {{"checks", r.checks.size()},
                    {"failed", failed},
                    {"status", failed == 0 ? "pass" : "fail"}};
  return out.dump(2) + "\n";
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  write_csv(main_table(r), out);
  return out.str();
}

std::string render_table(const Report& r, bool color) {
  std::ostringstream out;
  out << r.command << "\n\n";
  Table t = r.table ? *r.table : Table{{"path", "value"}, {}};
  if (!r.table) flatten(r.results, "", t.rows);
  if (!t.rows.empty()) write_table(t, color, out);
  if (!r.checks.empty()) {
    if (!t.rows.empty()) out << "\n";
    write_table(checks_table(r), color, out);
  }
  const std::size_t failed = failed_count(r);
  out << "\n" << r.checks.size() - failed << "/" << r.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace covem
