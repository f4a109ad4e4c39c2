// render.hpp: deterministic text / csv / json serialization of tables,
// single records and check reports.  Rationals are rendered in canonical
// "p/q" form everywhere; repeated invocations are byte-identical.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gmchar/report.hpp"
#include "gmchar/tables.hpp"

namespace gmchar {

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name);  // "text" | "csv" | "json"

using Params = std::vector<std::pair<std::string, std::string>>;

// Key/value output of the single-shot subcommands.
struct Record {
  std::string command;
  Params params;
  std::vector<std::pair<std::string, std::string>> fields;
};

std::string render_record(const Record& rec, Format f);
std::string render_table(const std::string& command, const Params& params,
                         const std::vector<TableRow>& rows, Format f);
std::string render_report(const Report& report, Format f);

}  // namespace gmchar
