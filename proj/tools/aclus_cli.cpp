// Command-line front end for the aclus shared library. Talks to the library
// exclusively through the C API in aclus.h.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aclus.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInconsistent = 2;

struct TableDeleter {
  void operator()(aclus_table* t) const { aclus_table_free(t); }
};
struct AnalysisDeleter {
  void operator()(aclus_analysis* a) const { aclus_analysis_free(a); }
};
using TablePtr = std::unique_ptr<aclus_table, TableDeleter>;
using AnalysisPtr = std::unique_ptr<aclus_analysis, AnalysisDeleter>;

struct CString {
  char* value = nullptr;
  ~CString() { aclus_string_free(value); }
};

int report_failure(aclus_status) {
  std::fprintf(stderr, "aclus: %s\n", aclus_last_error());
  return kExitFailure;
}

std::vector<const char*> to_cstrs(const std::vector<std::string>& items) {
  std::vector<const char*> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.c_str());
  return out;
}

struct CommonOptions {
  std::string csv_path;
  std::string id_column;
  std::vector<std::string> truthy;
  std::vector<std::string> falsy;
  bool ascii = false;
};

TablePtr load(const CommonOptions& common, aclus_status* status) {
  auto truthy = to_cstrs(common.truthy);
  auto falsy = to_cstrs(common.falsy);
  aclus_load_options options{};
  options.id_column = common.id_column.empty() ? nullptr : common.id_column.c_str();
  options.truthy = truthy.data();
  options.truthy_count = truthy.size();
  options.falsy = falsy.data();
  options.falsy_count = falsy.size();

  aclus_table* table = nullptr;
  *status = aclus_table_load_csv(common.csv_path.c_str(), &options, &table);
  return TablePtr(table);
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("csv", common.csv_path, "input CSV file")->required();
  cmd->add_option("--id-column", common.id_column,
                  "column holding row labels (default: 1-based row numbers)");
  cmd->add_option("--truthy", common.truthy,
                  "extra cell spelling parsed as 1 (repeatable)");
  cmd->add_option("--falsy", common.falsy,
                  "extra cell spelling parsed as 0 (repeatable)");
  cmd->add_flag("--ascii", common.ascii,
                "render logic with & | ! => <=> instead of Unicode");
}

int print_or_fail(aclus_status status, const CString& text) {
  if (status != ACLUS_OK) return report_failure(status);
  std::fputs(text.value, stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aclus: flag likely coding errors in binary data tables by "
               "reducing every observation against the table's rule ideal"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* analyze = app.add_subcommand(
      "analyze", "full report: weights, rule basis, per-row reductions");
  add_common(analyze, common);
  std::string format = "text";
  analyze->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* weights = app.add_subcommand(
      "weights", "per-column weights and the induced variable order");
  add_common(weights, common);

  auto* groebner = app.add_subcommand(
      "groebner", "reduced basis of the rule ideal, one rule per line");
  add_common(groebner, common);

  auto* combine = app.add_subcommand(
      "combine", "combined reduction of the listed rows");
  add_common(combine, common);
  std::vector<std::string> rows;
  combine->add_option("--rows", rows, "row labels to combine")
      ->required()
      ->delimiter(',');

  auto* clusters = app.add_subcommand(
      "clusters", "row subsets whose combined reduction is short");
  add_common(clusters, common);
  int k = 2;
  int max_terms = 3;
  std::size_t max_candidates = 2000000;
  clusters->add_option("--k", k, "subset size limit (2 or 3)");
  clusters->add_option("--max-terms", max_terms,
                       "keep combinations with at most this many terms after "
                       "factoring");
  clusters->add_option("--max-candidates", max_candidates,
                       "refuse to enumerate more subsets than this");

  auto* whatif = app.add_subcommand(
      "whatif", "consequences of removing rows from the table");
  add_common(whatif, common);
  std::vector<std::string> remove;
  whatif->add_option("--remove", remove, "row labels to remove")
      ->required()
      ->delimiter(',');

  auto* reduce = app.add_subcommand(
      "reduce", "normal form of a polynomial against the table's rule ideal");
  add_common(reduce, common);
  std::string poly;
  reduce->add_option("--poly", poly, "polynomial over the column names")
      ->required();

  CLI11_PARSE(app, argc, argv);

  aclus_status status = ACLUS_OK;
  TablePtr table = load(common, &status);
  if (!table) return report_failure(status);

  int ascii = common.ascii ? 1 : 0;

  if (weights->parsed()) {
    CString text;
    return print_or_fail(aclus_weights_text(table.get(), &text.value), text);
  }

  if (whatif->parsed()) {
    auto labels = to_cstrs(remove);
    CString text;
    return print_or_fail(
        aclus_whatif_text(table.get(), labels.data(), labels.size(), ascii,
                          &text.value),
        text);
  }

  aclus_analysis* analysis_raw = nullptr;
  status = aclus_analyze(table.get(), &analysis_raw);
  AnalysisPtr analysis(analysis_raw);
  if (!analysis) return report_failure(status);

  if (analyze->parsed()) {
    CString text;
    status = format == "json"
                 ? aclus_report_json(analysis.get(), ascii, &text.value)
                 : aclus_report_text(analysis.get(), ascii, &text.value);
    if (status != ACLUS_OK) return report_failure(status);
    std::fputs(text.value, stdout);
    return aclus_analysis_consistent(analysis.get()) ? kExitOk
                                                     : kExitInconsistent;
  }

  if (groebner->parsed()) {
    CString text;
    return print_or_fail(
        aclus_groebner_text(analysis.get(), ascii, &text.value), text);
  }

  if (combine->parsed()) {
    auto labels = to_cstrs(rows);
    CString text;
    return print_or_fail(
        aclus_combine_text(analysis.get(), labels.data(), labels.size(), ascii,
                           &text.value),
        text);
  }

  if (clusters->parsed()) {
    CString text;
    return print_or_fail(
        aclus_clusters_text(analysis.get(), k, max_terms, max_candidates,
                            ascii, &text.value),
        text);
  }

  if (reduce->parsed()) {
    CString text;
    return print_or_fail(
        aclus_reduce_text(analysis.get(), poly.c_str(), ascii, &text.value),
        text);
  }

  return kExitFailure;
}
