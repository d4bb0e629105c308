#include "aclus/analysis.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace aclus {

AclusResult analyze(const BooleanTable& table) {
  PatternSet patterns = PatternSet::collect(table);
  WeightVector weights = compute_weights(table);
  MonomialOrder order = MonomialOrder::weighted_lex(weights);
  BooleanPolynomial g = aclus_generator(patterns, table.columns_ptr());
  GroebnerBasis basis = buchberger(Ideal({g}), order);

  std::vector<BooleanPolynomial> reductions;
  reductions.reserve(patterns.size());
  for (const auto& entry : patterns.entries) {
    reductions.push_back(
        normal_form(row_polynomial(entry.pattern, table.columns_ptr()), basis));
  }

  std::vector<std::string> warnings;
  bool inconsistent = table.row_count() == 0;
  if (inconsistent) {
    warnings.push_back(
        "empty table: V(I) is empty, the ideal is the whole ring and every "
        "reduction is 0");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (table.row_count() > 0 && weights[i] == 0) {
      warnings.push_back("column '" + table.columns().name(i) +
                         "' is constant (weight 0)");
    }
  }
  if (table.row_count() > patterns.size()) {
    warnings.push_back(
        std::to_string(table.row_count()) + " rows collapse to " +
        std::to_string(patterns.size()) + " distinct patterns");
  }
  if (table.column_count() < 32 &&
      patterns.size() == (std::size_t{1} << table.column_count())) {
    warnings.push_back(
        "table contains every possible pattern; the ideal is zero and no "
        "rules can be derived");
  }

  return AclusResult{table,
                     std::move(patterns),
                     std::move(weights),
                     std::move(order),
                     std::move(g),
                     std::move(basis),
                     std::move(reductions),
                     std::move(warnings),
                     inconsistent};
}

BooleanPolynomial combine(const AclusResult& result,
                          std::span<const std::size_t> pattern_indices) {
  std::set<std::size_t> unique(pattern_indices.begin(), pattern_indices.end());
  if (unique.empty()) {
    fail(errc::invalid_argument, "combine needs at least one pattern");
  }
  BooleanPolynomial sum = BooleanPolynomial::zero(result.table.columns_ptr());
  for (std::size_t index : unique) {
    if (index >= result.reductions.size()) {
      fail(errc::invalid_argument,
           "pattern index " + std::to_string(index) + " out of range");
    }
    sum = sum + result.reductions[index];
  }
  return sum;
}

std::vector<std::size_t> pattern_indices_for_labels(
    const AclusResult& result, std::span<const std::string> labels) {
  std::vector<std::size_t> indices;
  for (const auto& label : labels) {
    auto idx = result.patterns.index_of_label(label);
    if (!idx) {
      fail(errc::invalid_argument, "unknown row label '" + label + "'");
    }
    if (std::find(indices.begin(), indices.end(), *idx) == indices.end()) {
      indices.push_back(*idx);
    }
  }
  return indices;
}

std::vector<ClusterCandidate> cluster_search(const AclusResult& result, int k,
                                             int max_terms,
                                             std::size_t max_candidates) {
  if (k != 2 && k != 3) {
    fail(errc::invalid_argument, "cluster size k must be 2 or 3");
  }
  if (max_terms < 1) {
    fail(errc::invalid_argument, "max_terms must be at least 1");
  }
  std::size_t p = result.patterns.size();
  std::size_t candidates = p * (p - 1) / 2;
  if (k == 3 && p >= 3) candidates += p * (p - 1) * (p - 2) / 6;
  if (candidates > max_candidates) {
    fail(errc::guard_exceeded,
         "cluster search would enumerate " + std::to_string(candidates) +
             " subsets, above the cap of " + std::to_string(max_candidates));
  }

  std::vector<ClusterCandidate> out;
  auto consider = [&](std::vector<std::size_t> indices) {
    BooleanPolynomial combined = combine(result, indices);
    if (combined.is_zero()) return;
    FactoredForm factored = factor(combined);
    int metric = 0;
    for (const auto& f : factored.factors) {
      metric = std::max(metric, static_cast<int>(f.term_count()));
    }
    if (metric > max_terms) return;
    std::uint32_t vars = 0;
    for (Monomial m : combined.monomials()) vars |= m.mask();
    out.push_back(ClusterCandidate{std::move(indices), std::move(combined),
                                   std::move(factored), metric,
                                   std::popcount(vars)});
  };

  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a + 1; b < p; ++b) {
      consider({a, b});
      if (k == 3) {
        for (std::size_t c = b + 1; c < p; ++c) consider({a, b, c});
      }
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const ClusterCandidate& x, const ClusterCandidate& y) {
                     if (x.term_metric != y.term_metric) {
                       return x.term_metric < y.term_metric;
                     }
                     if (x.variable_count != y.variable_count) {
                       return x.variable_count < y.variable_count;
                     }
                     return x.pattern_indices < y.pattern_indices;
                   });
  return out;
}

WhatIfReport whatif_remove(const BooleanTable& table,
                           std::span<const std::string> labels) {
  std::vector<std::size_t> row_indices;
  for (const auto& label : labels) {
    auto idx = table.find_label(label);
    if (!idx) {
      fail(errc::invalid_argument, "unknown row label '" + label + "'");
    }
    if (std::find(row_indices.begin(), row_indices.end(), *idx) ==
        row_indices.end()) {
      row_indices.push_back(*idx);
    }
  }
  if (row_indices.empty()) {
    fail(errc::invalid_argument, "no rows selected for removal");
  }

  AclusResult original = analyze(table);
  BooleanTable remaining = table.without_rows(row_indices);

  WhatIfReport report;
  report.weights_before = original.weights;
  report.table_emptied = remaining.row_count() == 0;

  PatternSet remaining_patterns = PatternSet::collect(remaining);
  for (std::size_t idx : row_indices) {
    const Assignment& pattern = table.row(idx);
    std::size_t pattern_index = *original.patterns.index_of(pattern);
    std::size_t before = original.patterns.entries[pattern_index].multiplicity;
    auto entry_after = remaining_patterns.index_of(pattern);
    std::size_t after =
        entry_after ? remaining_patterns.entries[*entry_after].multiplicity : 0;

    WhatIfReport::Entry entry;
    entry.label = table.label(idx);
    entry.pattern = pattern;
    entry.multiplicity_before = before;
    entry.multiplicity_after = after;
    if (after == 0) {
      entry.new_rule = original.reductions[pattern_index];
    }
    report.entries.push_back(std::move(entry));
  }

  if (!report.table_emptied) {
    AclusResult updated = analyze(remaining);
    report.weights_after = updated.weights;
    report.weights_changed = updated.weights != original.weights;
    auto same_basis = [&] {
      auto a = original.basis.elements();
      auto b = updated.basis.elements();
      return std::equal(a.begin(), a.end(), b.begin(), b.end());
    };
    report.basis_changed =
        original.basis.size() != updated.basis.size() || !same_basis();
  } else {
    report.weights_changed = true;
    report.basis_changed = true;
  }
  return report;
}

}  // namespace aclus
