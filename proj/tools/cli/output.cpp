#include "cli/output.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace selsieve::cli {

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else {
          return v;
        }
      },
      cell);
}

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_delimited(std::ostream& out, const Table& table, char delimiter) {
  const auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out << delimiter;
      out << (delimiter == ',' ? quote_csv(fields[i]) : fields[i]);
    }
    out << '\n';
  };
  emit(table.headers);
  std::vector<std::string> fields;
  for (const auto& row : table.rows) {
    fields.clear();
    for (const auto& cell : row) fields.push_back(cell_text(cell));
    emit(fields);
  }
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "tsv") return OutputFormat::Tsv;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, double>) {
          char buf[64];
          const auto res = std::to_chars(buf, buf + sizeof(buf), v);
          return std::string(buf, res.ptr);
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

void write_table(std::ostream& out, const Table& table, OutputFormat format,
                 std::string_view version) {
  switch (format) {
    case OutputFormat::Csv:
      write_delimited(out, table, ',');
      return;
    case OutputFormat::Tsv:
      write_delimited(out, table, '\t');
      return;
    case OutputFormat::Json: {
      ordered_json params = ordered_json::object();
      for (const auto& [key, value] : table.parameters) params[key] = to_json(value);
      ordered_json rows = ordered_json::array();
      for (const auto& row : table.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < table.headers.size() && i < row.size(); ++i) {
          obj[table.headers[i]] = to_json(row[i]);
        }
        rows.push_back(std::move(obj));
      }
      ordered_json doc;
      doc["meta"] = {{"command", table.command},
                     {"version", std::string(version)},
                     {"parameters", std::move(params)}};
      doc["rows"] = std::move(rows);
      out << doc.dump(2) << '\n';
      return;
    }
  }
}

std::vector<std::vector<std::string>> parse_delimited(std::string_view text, char delimiter) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"' && delimiter == ',') {
      in_quotes = true;
    } else if (c == delimiter) {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (any) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace selsieve::cli
