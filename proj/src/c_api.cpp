#include "aclus.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "aclus/report.hpp"

using aclus::AclusResult;
using aclus::BooleanTable;

struct aclus_table {
  BooleanTable table;
};

struct aclus_analysis {
  AclusResult result;
};

namespace {

thread_local std::string g_last_error;

aclus_status map_code(aclus::errc code) {
  switch (code) {
    case aclus::errc::parse_error:
      return ACLUS_PARSE_ERROR;
    case aclus::errc::invalid_argument:
    case aclus::errc::context_mismatch:
    case aclus::errc::zero_polynomial:
      return ACLUS_INVALID_ARGUMENT;
    case aclus::errc::guard_exceeded:
      return ACLUS_GUARD_EXCEEDED;
    case aclus::errc::io_error:
      return ACLUS_IO_ERROR;
  }
  return ACLUS_ERROR;
}

template <typename Fn>
aclus_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return ACLUS_OK;
  } catch (const aclus::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ACLUS_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return ACLUS_ERROR;
  }
}

aclus_status invalid(const char* message) {
  g_last_error = message;
  return ACLUS_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

aclus::LoadOptions convert(const aclus_load_options* options) {
  aclus::LoadOptions out;
  if (options == nullptr) return out;
  if (options->id_column != nullptr) out.id_column = options->id_column;
  for (size_t i = 0; i < options->truthy_count; ++i) {
    out.truthy.emplace_back(options->truthy[i]);
  }
  for (size_t i = 0; i < options->falsy_count; ++i) {
    out.falsy.emplace_back(options->falsy[i]);
  }
  return out;
}

std::vector<std::string> convert_labels(const char* const* labels,
                                        size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.emplace_back(labels[i]);
  return out;
}

aclus::LogicStyle style_of(int ascii) {
  return ascii != 0 ? aclus::LogicStyle::ascii : aclus::LogicStyle::unicode;
}

}  // namespace

extern "C" {

const char* aclus_version(void) { return "0.1.0"; }

const char* aclus_last_error(void) { return g_last_error.c_str(); }

void aclus_string_free(char* s) { std::free(s); }

aclus_status aclus_table_load_csv(const char* path,
                                  const aclus_load_options* options,
                                  aclus_table** out) {
  if (path == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = new aclus_table{aclus::load_table(path, convert(options))};
  });
}

aclus_status aclus_table_parse_csv(const char* csv_text,
                                   const aclus_load_options* options,
                                   aclus_table** out) {
  if (csv_text == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = new aclus_table{aclus::parse_table_csv(csv_text, convert(options))};
  });
}

void aclus_table_free(aclus_table* table) { delete table; }

size_t aclus_table_rows(const aclus_table* table) {
  return table == nullptr ? 0 : table->table.row_count();
}

size_t aclus_table_columns(const aclus_table* table) {
  return table == nullptr ? 0 : table->table.column_count();
}

aclus_status aclus_analyze(const aclus_table* table, aclus_analysis** out) {
  if (table == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = new aclus_analysis{aclus::analyze(table->table)};
  });
}

void aclus_analysis_free(aclus_analysis* analysis) { delete analysis; }

int aclus_analysis_consistent(const aclus_analysis* analysis) {
  return (analysis != nullptr && !analysis->result.inconsistent) ? 1 : 0;
}

aclus_status aclus_report_json(const aclus_analysis* analysis, int ascii,
                               char** out) {
  if (analysis == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(aclus::report_json(analysis->result, style_of(ascii)));
  });
}

aclus_status aclus_report_text(const aclus_analysis* analysis, int ascii,
                               char** out) {
  if (analysis == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(aclus::report_text(analysis->result, style_of(ascii)));
  });
}

aclus_status aclus_weights_text(const aclus_table* table, char** out) {
  if (table == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = dup_string(aclus::weights_text(table->table)); });
}

aclus_status aclus_groebner_text(const aclus_analysis* analysis, int ascii,
                                 char** out) {
  if (analysis == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(aclus::groebner_text(analysis->result, style_of(ascii)));
  });
}

aclus_status aclus_combine_text(const aclus_analysis* analysis,
                                const char* const* labels, size_t label_count,
                                int ascii, char** out) {
  if (analysis == nullptr || labels == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    auto names = convert_labels(labels, label_count);
    *out = dup_string(
        aclus::combine_text(analysis->result, names, style_of(ascii)));
  });
}

aclus_status aclus_clusters_text(const aclus_analysis* analysis, int k,
                                 int max_terms, size_t max_candidates,
                                 int ascii, char** out) {
  if (analysis == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(aclus::clusters_text(analysis->result, k, max_terms,
                                           max_candidates, style_of(ascii)));
  });
}

aclus_status aclus_whatif_text(const aclus_table* table,
                               const char* const* labels, size_t label_count,
                               int ascii, char** out) {
  if (table == nullptr || labels == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    auto names = convert_labels(labels, label_count);
    *out = dup_string(aclus::whatif_text(table->table, names, style_of(ascii)));
  });
}

aclus_status aclus_reduce_text(const aclus_analysis* analysis,
                               const char* polynomial, int ascii, char** out) {
  if (analysis == nullptr || polynomial == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    *out = dup_string(
        aclus::reduce_text(analysis->result, polynomial, style_of(ascii)));
  });
}

}  // extern "C"
