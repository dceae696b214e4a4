#pragma once

// Machine-readable command reports and their JSON / CSV / table renderings.

#include "covem/exterior.hpp"
#include "covem/scenario.hpp"

#include <string>
#include <vector>

namespace covem {

inline constexpr const char* kReportSchema = "covariant-em-report/1";

struct Check {
  std::string name;
  double violation = 0.0;
  double threshold = 0.0;
  std::string detail;  ///< optional, e.g. an error message

  /// Finite and within threshold.
  bool pass() const;
};

/// Rows for CSV / table output; cells are JSON scalars.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Json>> rows;
};

struct Report {
  std::string command;
  Json config;  ///< canonical scenario config, or null
  Json results = Json::object();
  std::vector<Check> checks;
  std::optional<Table> table;

  bool ok() const;
  void add_check(std::string name, double violation, double threshold,
                 std::string detail = {});
};

enum class OutputFormat { json, csv, table };

OutputFormat parse_output_format(const std::string& name);

/// Deterministic JSON (two-space indent, shortest round-trip floats).
std::string render_json(const Report& r);
/// RFC 4180 CSV. Uses the report table when present, otherwise one
/// "path,value" row per scalar in results and per check field.
std::string render_csv(const Report& r);
/// Aligned plain-text table; `color` adds ANSI colours to PASS / FAIL.
std::string render_table(const Report& r, bool color);

/// Shortest round-trip text of a double (as in the JSON output).
std::string format_number(double x);

Json to_json(const KForm& w);
Json to_json(const Matrix4& m);
Json to_json(const Vector4& v);
Json to_json(const Eigen::Matrix3d& m);

/// False if any number in j is NaN or infinite.
bool all_finite(const Json& j);

}  // namespace covem
