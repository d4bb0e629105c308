#pragma once

#include <string>

#include "aclus/analysis.hpp"
#include "aclus/csv.hpp"

namespace aclus {

/// FNV-1a digest of the table content (column names + row bits), hex-encoded.
std::string table_fingerprint(const BooleanTable& table);

/// Machine report for `analyze`: deterministic for identical input, keys
/// alphabetical, reparse + reserialize is byte-identical.
std::string report_json(const AclusResult& result,
                        LogicStyle style = LogicStyle::unicode);

/// Human report for `analyze`: stable-ordered for diffing.
std::string report_text(const AclusResult& result,
                        LogicStyle style = LogicStyle::unicode);

std::string weights_text(const BooleanTable& table);
std::string groebner_text(const AclusResult& result,
                          LogicStyle style = LogicStyle::unicode);
std::string combine_text(const AclusResult& result,
                         std::span<const std::string> labels,
                         LogicStyle style = LogicStyle::unicode);
std::string clusters_text(const AclusResult& result, int k, int max_terms,
                          std::size_t max_candidates,
                          LogicStyle style = LogicStyle::unicode);
std::string whatif_text(const BooleanTable& table,
                        std::span<const std::string> labels,
                        LogicStyle style = LogicStyle::unicode);
std::string reduce_text(const AclusResult& result, std::string_view polynomial,
                        LogicStyle style = LogicStyle::unicode);

}  // namespace aclus
