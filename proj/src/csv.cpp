#include "aclus/csv.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace aclus {

namespace {

// Splits CSV records honoring double-quoted fields with "" escapes.
std::vector<std::vector<std::string>> split_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    bool blank = record.size() == 1 && record[0].empty();
    if (!blank) records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started && field.empty()) {
          quoted = true;
          field_started = true;
        } else {
          field += c;
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        break;
      default:
        field += c;
        field_started = true;
        break;
    }
  }
  if (quoted) {
    fail(errc::parse_error, "unterminated quoted field at end of input");
  }
  if (field_started || !field.empty() || !record.empty()) end_record();
  return records;
}

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

BooleanTable parse_table_csv(std::string_view text, const LoadOptions& options) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  auto records = split_records(text);
  if (records.empty()) {
    fail(errc::parse_error, "empty file: a header row is required");
  }

  std::vector<std::string> headers;
  for (auto& cell : records[0]) headers.push_back(trim(cell));

  std::optional<std::size_t> id_index;
  if (options.id_column) {
    auto it = std::find(headers.begin(), headers.end(), *options.id_column);
    if (it == headers.end()) {
      fail(errc::invalid_argument,
           "id column '" + *options.id_column + "' not found in the header");
    }
    id_index = static_cast<std::size_t>(it - headers.begin());
  }

  std::vector<std::string> names;
  for (std::size_t i = 0; i < headers.size(); ++i) {
    if (id_index && i == *id_index) continue;
    names.push_back(headers[i]);
  }
  if (names.empty()) {
    fail(errc::parse_error, "the table needs at least one data column");
  }
  auto ctx = VariableContext::create(std::move(names));

  auto parse_cell = [&](const std::string& raw, std::size_t row,
                        std::size_t col) -> int {
    std::string cell = trim(raw);
    if (cell == "1") return 1;
    if (cell == "0") return 0;
    for (const auto& alias : options.truthy) {
      if (cell == alias) return 1;
    }
    for (const auto& alias : options.falsy) {
      if (cell == alias) return 0;
    }
    fail(errc::parse_error, "non-binary cell '" + cell + "' at data row " +
                                std::to_string(row) + ", column '" +
                                headers[col] + "'");
  };

  std::vector<Assignment> rows;
  std::vector<std::string> labels;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& record = records[r];
    if (record.size() != headers.size()) {
      fail(errc::parse_error,
           "data row " + std::to_string(r) + " has " +
               std::to_string(record.size()) + " cells, expected " +
               std::to_string(headers.size()));
    }
    std::vector<int> bits;
    bits.reserve(ctx->size());
    for (std::size_t c = 0; c < record.size(); ++c) {
      if (id_index && c == *id_index) {
        labels.push_back(trim(record[c]));
        continue;
      }
      bits.push_back(parse_cell(record[c], r, c));
    }
    rows.push_back(Assignment::from_bits(bits));
  }

  return BooleanTable::create(ctx, std::move(rows), std::move(labels));
}

BooleanTable load_table(const std::filesystem::path& path,
                        const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(errc::io_error, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table_csv(buffer.str(), options);
}

}  // namespace aclus
