#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aclus/groebner.hpp"
#include "aclus/interpret.hpp"
#include "aclus/table.hpp"

namespace aclus {

/// The full pipeline output for one table: pattern set, Algorithm-1 weights,
/// the induced weighted-lex order, the ideal generator g, its reduced Groebner
/// basis, and the normal form of every distinct pattern's row polynomial.
struct AclusResult {
  BooleanTable table;
  PatternSet patterns;
  WeightVector weights;
  MonomialOrder order;
  BooleanPolynomial generator;
  GroebnerBasis basis;
  std::vector<BooleanPolynomial> reductions;  // parallel to patterns.entries
  std::vector<std::string> warnings;
  bool inconsistent = false;  // empty table: V(I) is empty, all rules hold vacuously

  const BooleanPolynomial& reduction_of(std::size_t pattern_index) const {
    return reductions.at(pattern_index);
  }
};

/// Dedupe -> weights over the full table -> wlex order -> Groebner basis of
/// <g> -> normal form per distinct pattern. Deterministic for identical input.
AclusResult analyze(const BooleanTable& table);

/// Sum of the selected patterns' reductions; equals the normal form of the
/// union indicator because distinct row polynomials multiply to zero.
BooleanPolynomial combine(const AclusResult& result,
                          std::span<const std::size_t> pattern_indices);

/// Maps row labels to pattern indices (deduplicated, first-occurrence order).
std::vector<std::size_t> pattern_indices_for_labels(
    const AclusResult& result, std::span<const std::string> labels);

struct ClusterCandidate {
  std::vector<std::size_t> pattern_indices;
  BooleanPolynomial combined;
  FactoredForm factored;
  int term_metric = 0;      // max term count over the factors
  int variable_count = 0;   // distinct variables in the combined polynomial
};

/// Enumerates pattern subsets of sizes 2..k, keeps those whose combined
/// reduction has at most max_terms monomials after factoring, ranked ascending
/// by (term metric, variable count), ties broken by pattern indices. Refuses
/// when the subset count exceeds max_candidates.
std::vector<ClusterCandidate> cluster_search(const AclusResult& result, int k,
                                             int max_terms,
                                             std::size_t max_candidates = 2000000);

/// Consequences of deleting rows: a row whose pattern disappears creates the
/// new rule "reduction = 0"; a still-present pattern only shifts the weights.
struct WhatIfReport {
  struct Entry {
    std::string label;
    Assignment pattern;
    std::size_t multiplicity_before = 0;
    std::size_t multiplicity_after = 0;
    std::optional<BooleanPolynomial> new_rule;  // set when the pattern disappears
  };

  std::vector<Entry> entries;
  WeightVector weights_before;
  WeightVector weights_after;  // empty when the table was emptied
  bool table_emptied = false;
  bool weights_changed = false;
  bool basis_changed = false;
};

WhatIfReport whatif_remove(const BooleanTable& table,
                           std::span<const std::string> labels);

}  // namespace aclus
