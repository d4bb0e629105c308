#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "aclus/table.hpp"

namespace aclus {

struct LoadOptions {
  /// Column supplying row labels; removed from the variables.
  std::optional<std::string> id_column;
  /// Extra cell spellings accepted as 1 / 0, beyond the literals "1" and "0".
  std::vector<std::string> truthy;
  std::vector<std::string> falsy;
};

/// First record supplies the column headers; every other cell must be binary.
/// Comma-separated UTF-8 with optional double-quote quoting.
BooleanTable parse_table_csv(std::string_view text,
                             const LoadOptions& options = {});

BooleanTable load_table(const std::filesystem::path& path,
                        const LoadOptions& options = {});

}  // namespace aclus
