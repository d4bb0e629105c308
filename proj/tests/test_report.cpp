#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "aclus/report.hpp"

using namespace aclus;

namespace {

BooleanTable beech_table() {
  return load_table(std::string(ACLUS_DATA_DIR) + "/beech.csv");
}

}  // namespace

TEST_CASE("csv loading") {
  auto table = beech_table();
  CHECK(table.row_count() == 18);
  CHECK(table.column_count() == 6);
  CHECK(table.columns().name(0) == "w");
  CHECK(table.columns().name(5) == "g");
  CHECK(table.row(4) == Assignment::from_string("001101"));
  CHECK(table.label(17) == "18");
}

TEST_CASE("csv rejects non-binary cells with coordinates") {
  CHECK_THROWS_WITH_AS(parse_table_csv("a,b\n1,2\n"),
                       doctest::Contains("non-binary cell '2'"), Error);
  CHECK_THROWS_WITH_AS(parse_table_csv("a,b\n0,1\n1,maybe\n"),
                       doctest::Contains("row 2"), Error);
  CHECK_THROWS_WITH_AS(parse_table_csv("a,b\n0,1\n1,maybe\n"),
                       doctest::Contains("column 'b'"), Error);
}

TEST_CASE("csv header validation") {
  CHECK_THROWS_AS(parse_table_csv(""), Error);
  CHECK_THROWS_AS(parse_table_csv("a,a\n0,1\n"), Error);
  CHECK_THROWS_AS(parse_table_csv("a,b\n0\n"), Error);
  CHECK_THROWS_AS(load_table("/no/such/file.csv"), Error);

  // header-only input is an empty (inconsistent) table, not an error
  auto empty = parse_table_csv("a,b\n");
  CHECK(empty.row_count() == 0);
  CHECK(analyze(empty).inconsistent);
}

TEST_CASE("csv truthy and falsy aliases") {
  LoadOptions options;
  options.truthy = {"yes"};
  options.falsy = {"no"};
  auto table = parse_table_csv("a,b\nyes,no\n0,1\n", options);
  CHECK(table.row(0) == Assignment::from_string("10"));
  CHECK(table.row(1) == Assignment::from_string("01"));

  CHECK_THROWS_AS(parse_table_csv("a,b\nyes,no\n"), Error);
}

TEST_CASE("csv id column supplies row labels") {
  LoadOptions options;
  options.id_column = "id";
  auto table = parse_table_csv("id,a,b\nfirst,0,1\nsecond,1,0\n", options);
  CHECK(table.column_count() == 2);
  CHECK(table.label(0) == "first");
  CHECK(table.find_label("second") == 1);

  options.id_column = "missing";
  CHECK_THROWS_AS(parse_table_csv("id,a\nx,1\n", options), Error);

  options.id_column = "id";
  CHECK_THROWS_AS(parse_table_csv("id,a\nx,1\nx,0\n", options), Error);
}

TEST_CASE("csv quoting") {
  auto table = parse_table_csv("\"col,a\",b\r\n1,0\r\n");
  CHECK(table.columns().name(0) == "col,a");
  CHECK(table.row(0) == Assignment::from_string("10"));
}

TEST_CASE("json report round-trips byte-identically") {
  auto result = analyze(beech_table());
  std::string text = report_json(result);

  auto parsed = nlohmann::json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);

  CHECK(parsed["table"]["row_count"] == 18);
  CHECK(parsed["table"]["column_count"] == 6);
  CHECK(parsed["consistent"] == true);
  CHECK(parsed["weights"][0]["variable"] == "w");
  CHECK(parsed["weights"][0]["weight"] == 81);
  CHECK(parsed["induced_variable_order"][0] == "w");
  CHECK(parsed["induced_variable_order"][1] == "g");
  CHECK(parsed["reductions"].size() == 18);
  CHECK(parsed["reductions"][3]["label"] == "4");
  CHECK(parsed["reductions"][3]["polynomial"] == "c*g + c + g + 1");
  CHECK(parsed["reductions"][3]["logic"] == "¬(c ∨ g)");
}

TEST_CASE("analyze output is deterministic") {
  auto once = analyze(beech_table());
  auto twice = analyze(beech_table());
  CHECK(report_json(once) == report_json(twice));
  CHECK(report_text(once) == report_text(twice));
}

TEST_CASE("text report carries the published row-4 entry") {
  auto result = analyze(beech_table());
  std::string text = report_text(result);
  CHECK(text.find("c*g + c + g + 1  [¬(c ∨ g)]") != std::string::npos);
  CHECK(text.find("weights: w=81, a=72, n=72, c=72, v=72, g=80") !=
        std::string::npos);
  CHECK(text.find("variable order: w > g > a > n > c > v") != std::string::npos);
}

TEST_CASE("weights text") {
  std::string text = weights_text(beech_table());
  CHECK(text.find("w  9  81") != std::string::npos);
  CHECK(text.find("g  10  80") != std::string::npos);
  CHECK(text.find("induced order: w > g > a > n > c > v") != std::string::npos);
}

TEST_CASE("groebner text renders one rule per line") {
  auto result = analyze(beech_table());
  std::string text = groebner_text(result, LogicStyle::ascii);
  CHECK(text.find("c*v + v = 0  [v => c]") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') ==
        static_cast<std::ptrdiff_t>(result.basis.size()));
}

TEST_CASE("combine text") {
  auto result = analyze(beech_table());
  std::vector<std::string> rows{"3", "6"};
  std::string text = combine_text(result, rows, LogicStyle::ascii);
  CHECK(text.starts_with("v*g\n"));

  rows = {"7", "9"};
  text = combine_text(result, rows, LogicStyle::ascii);
  CHECK(text.starts_with("w*a + a*c + a*g\n"));
  CHECK(text.find("factored: a*(w + c + g)") != std::string::npos);
}

TEST_CASE("whatif text") {
  auto table = beech_table();
  std::vector<std::string> rows{"4"};
  std::string text = whatif_text(table, rows, LogicStyle::ascii);
  CHECK(text.find("new rule: c*g + c + g + 1 = 0  [!c => g]") !=
        std::string::npos);

  auto tiny = parse_table_csv("a,b\n0,1\n");
  std::vector<std::string> all{"1"};
  std::string emptied = whatif_text(tiny, all, LogicStyle::ascii);
  CHECK(emptied.find("table emptied") != std::string::npos);
}

TEST_CASE("reduce text") {
  auto result = analyze(beech_table());
  CHECK(reduce_text(result, "c*v + v") == "0 (in ideal)\n");
  std::string text = reduce_text(result, "c*g + c + g + 1", LogicStyle::ascii);
  CHECK(text.find("(not in ideal)") != std::string::npos);
  CHECK_THROWS_AS(reduce_text(result, "c +"), Error);
}
