#pragma once

// Tabular output shared by every subcommand. CSV and TSV carry a header row
// and LF line endings; JSON is {"meta": {...}, "rows": [{header: value}]}.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace selsieve::cli {

enum class OutputFormat { Csv, Json, Tsv };

OutputFormat parse_format(std::string_view name);

// std::monostate is an empty cell.
using Cell = std::variant<std::monostate, std::uint64_t, std::int64_t, double, std::string>;

struct Table {
  std::string command;
  std::vector<std::pair<std::string, Cell>> parameters;
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& cell);

void write_table(std::ostream& out, const Table& table, OutputFormat format,
                 std::string_view version);

// Splits delimited text written by write_table back into fields, header
// row included. Handles RFC 4180 quoting for CSV.
std::vector<std::vector<std::string>> parse_delimited(std::string_view text, char delimiter);

}  // namespace selsieve::cli
