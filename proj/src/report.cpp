#include "aclus/report.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace aclus {

namespace {

std::vector<std::size_t> induced_variable_order(const WeightVector& weights) {
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a < b;
  });
  return order;
}

std::string join_variable_order(const BooleanTable& table,
                                const WeightVector& weights) {
  std::string out;
  for (std::size_t i : induced_variable_order(weights)) {
    if (!out.empty()) out += " > ";
    out += table.columns().name(i);
  }
  return out;
}

std::string weights_line(const BooleanTable& table, const WeightVector& weights) {
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += table.columns().name(i) + "=" + std::to_string(weights[i]);
  }
  return out;
}

std::string labels_of_cluster(const AclusResult& result,
                              const ClusterCandidate& candidate) {
  std::string out;
  for (std::size_t index : candidate.pattern_indices) {
    for (const auto& label : result.patterns.entries[index].labels) {
      if (!out.empty()) out += ",";
      out += label;
    }
  }
  return out;
}

}  // namespace

std::string table_fingerprint(const BooleanTable& table) {
  std::uint64_t hash = 14695981039346656037ull;
  auto feed = [&](std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash ^= c;
      hash *= 1099511628211ull;
    }
  };
  for (const auto& name : table.columns().names()) {
    feed(name);
    feed("\x1f");
  }
  feed("\n");
  for (const auto& row : table.rows()) {
    feed(row.to_string());
    feed("\n");
  }
  std::ostringstream out;
  out << std::hex << hash;
  return out.str();
}

std::string report_json(const AclusResult& result, LogicStyle style) {
  nlohmann::json doc;
  doc["table"] = {{"row_count", result.table.row_count()},
                  {"column_count", result.table.column_count()},
                  {"content_hash", table_fingerprint(result.table)},
                  {"distinct_patterns", result.patterns.size()}};
  doc["columns"] = result.table.columns().names();
  doc["consistent"] = !result.inconsistent;

  nlohmann::json weights = nlohmann::json::array();
  for (std::size_t i = 0; i < result.weights.size(); ++i) {
    weights.push_back({{"variable", result.table.columns().name(i)},
                       {"weight", result.weights[i]}});
  }
  doc["weights"] = std::move(weights);

  nlohmann::json order = nlohmann::json::array();
  for (std::size_t i : induced_variable_order(result.weights)) {
    order.push_back(result.table.columns().name(i));
  }
  doc["induced_variable_order"] = std::move(order);

  nlohmann::json basis = nlohmann::json::array();
  for (const auto& element : result.basis.elements()) {
    basis.push_back({{"polynomial", render(element)},
                     {"rule", rule_from_ideal_element(element, style)}});
  }
  doc["groebner_basis"] = std::move(basis);

  nlohmann::json reductions = nlohmann::json::array();
  for (std::size_t i = 0; i < result.table.row_count(); ++i) {
    std::size_t pattern_index = *result.patterns.index_of(result.table.row(i));
    const auto& reduction = result.reductions[pattern_index];
    reductions.push_back(
        {{"label", result.table.label(i)},
         {"pattern", result.table.row(i).to_string()},
         {"pattern_multiplicity",
          result.patterns.entries[pattern_index].multiplicity},
         {"polynomial", render(reduction)},
         {"factored", render(factor(reduction))},
         {"logic", to_logic(reduction, style)}});
  }
  doc["reductions"] = std::move(reductions);
  doc["warnings"] = result.warnings;

  return doc.dump(2) + "\n";
}

std::string report_text(const AclusResult& result, LogicStyle style) {
  std::ostringstream out;
  out << "table: " << result.table.row_count() << " rows, "
      << result.table.column_count() << " columns, "
      << result.patterns.size() << " distinct patterns, hash "
      << table_fingerprint(result.table) << "\n";
  out << "weights: " << weights_line(result.table, result.weights) << "\n";
  out << "variable order: " << join_variable_order(result.table, result.weights)
      << "\n";
  for (const auto& warning : result.warnings) {
    out << "warning: " << warning << "\n";
  }

  out << "\ngroebner basis (" << result.basis.size() << " rules):\n";
  for (const auto& element : result.basis.elements()) {
    out << "  " << rule_from_ideal_element(element, style) << "\n";
  }

  out << "\nreductions:\n";
  for (std::size_t i = 0; i < result.table.row_count(); ++i) {
    std::size_t pattern_index = *result.patterns.index_of(result.table.row(i));
    const auto& reduction = result.reductions[pattern_index];
    out << "  " << result.table.label(i) << "  "
        << result.table.row(i).to_string() << "  " << render(reduction) << "  ["
        << to_logic(reduction, style) << "]\n";
  }
  return out.str();
}

std::string weights_text(const BooleanTable& table) {
  WeightVector weights = compute_weights(table);
  std::ostringstream out;
  out << "variable  ones  weight\n";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    std::int64_t ones = 0;
    for (const auto& row : table.rows()) {
      if (row.bit(i)) ++ones;
    }
    out << table.columns().name(i) << "  " << ones << "  " << weights[i] << "\n";
  }
  out << "induced order: " << join_variable_order(table, weights) << "\n";
  return out.str();
}

std::string groebner_text(const AclusResult& result, LogicStyle style) {
  std::ostringstream out;
  for (const auto& element : result.basis.elements()) {
    out << rule_from_ideal_element(element, style) << "\n";
  }
  if (result.basis.empty()) {
    out << "(the ideal is zero: no rules)\n";
  }
  return out.str();
}

std::string combine_text(const AclusResult& result,
                         std::span<const std::string> labels, LogicStyle style) {
  auto indices = pattern_indices_for_labels(result, labels);
  BooleanPolynomial combined = combine(result, indices);
  std::ostringstream out;
  out << render(combined) << "\n";
  if (!combined.is_zero()) {
    out << "factored: " << render(factor(combined)) << "\n";
    out << "logic: " << to_logic(combined, style) << "\n";
  }
  return out.str();
}

std::string clusters_text(const AclusResult& result, int k, int max_terms,
                          std::size_t max_candidates, LogicStyle style) {
  auto candidates = cluster_search(result, k, max_terms, max_candidates);
  std::ostringstream out;
  out << candidates.size() << " cluster candidate(s), k=" << k
      << ", max terms " << max_terms << "\n";
  std::size_t rank = 1;
  for (const auto& candidate : candidates) {
    out << rank++ << ". rows {" << labels_of_cluster(result, candidate) << "}  "
        << render(candidate.combined) << "  factored "
        << render(candidate.factored) << "  ["
        << to_logic(candidate.combined, style) << "]\n";
  }
  return out.str();
}

std::string whatif_text(const BooleanTable& table,
                        std::span<const std::string> labels, LogicStyle style) {
  WhatIfReport report = whatif_remove(table, labels);
  std::ostringstream out;
  for (const auto& entry : report.entries) {
    out << "row " << entry.label << ": pattern " << entry.pattern.to_string()
        << ", " << entry.multiplicity_before << " occurrence(s) before, "
        << entry.multiplicity_after << " after\n";
    if (entry.new_rule) {
      out << "  new rule: " << rule_from_ideal_element(*entry.new_rule, style)
          << "\n";
    } else {
      out << "  no new rule: the pattern still occurs\n";
    }
  }
  out << "weights before: " << weights_line(table, report.weights_before)
      << "\n";
  if (report.table_emptied) {
    out << "table emptied: the remaining ideal is the whole ring "
           "(inconsistent)\n";
  } else {
    out << "weights after:  " << weights_line(table, report.weights_after)
        << "\n";
    out << "weights changed: " << (report.weights_changed ? "yes" : "no")
        << "\n";
    out << "groebner basis changed: " << (report.basis_changed ? "yes" : "no")
        << "\n";
  }
  return out.str();
}

std::string reduce_text(const AclusResult& result, std::string_view polynomial,
                        LogicStyle style) {
  BooleanPolynomial parsed =
      parse_polynomial(polynomial, result.table.columns_ptr());
  BooleanPolynomial nf = normal_form(parsed, result.basis);
  std::ostringstream out;
  if (nf.is_zero()) {
    out << "0 (in ideal)\n";
  } else {
    out << render(nf) << " (not in ideal)\n";
    out << "logic: " << to_logic(nf, style) << "\n";
  }
  return out.str();
}

}  // namespace aclus
