#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aclus/boolean.hpp"

namespace aclus {

/// An m x n table of {0,1} entries with named columns and unique row labels
/// (default: 1-based row numbers).
class BooleanTable {
 public:
  static BooleanTable create(std::shared_ptr<const VariableContext> columns,
                             std::vector<Assignment> rows,
                             std::vector<std::string> labels = {});

  const std::shared_ptr<const VariableContext>& columns_ptr() const noexcept {
    return columns_;
  }
  const VariableContext& columns() const noexcept { return *columns_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t column_count() const noexcept { return columns_->size(); }
  const Assignment& row(std::size_t index) const { return rows_.at(index); }
  std::span<const Assignment> rows() const noexcept { return rows_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<std::size_t> find_label(std::string_view label) const;

  /// Copy of the table without the rows at the given indices.
  BooleanTable without_rows(std::span<const std::size_t> row_indices) const;

 private:
  BooleanTable(std::shared_ptr<const VariableContext> columns,
               std::vector<Assignment> rows, std::vector<std::string> labels)
      : columns_(std::move(columns)),
        rows_(std::move(rows)),
        labels_(std::move(labels)) {}

  std::shared_ptr<const VariableContext> columns_;
  std::vector<Assignment> rows_;
  std::vector<std::string> labels_;
};

/// The pairwise-different row patterns of a table, in first-occurrence order,
/// with multiplicities and back-references to the source row labels.
struct PatternSet {
  struct Entry {
    Assignment pattern;
    std::size_t multiplicity = 0;
    std::vector<std::string> labels;
  };

  std::vector<Entry> entries;

  static PatternSet collect(const BooleanTable& table);

  std::size_t size() const noexcept { return entries.size(); }
  std::optional<std::size_t> index_of(const Assignment& pattern) const;
  std::optional<std::size_t> index_of_label(std::string_view label) const;
};

using WeightVector = std::vector<std::int64_t>;

/// Per column i: (#rows with entry 1) * (m - #rows with entry 1), counted over
/// all rows, duplicates included.
WeightVector compute_weights(const BooleanTable& table);

/// Product over columns of Xi (entry 1) or 1+Xi (entry 0), fully expanded;
/// evaluates to 1 exactly on this pattern.
BooleanPolynomial row_polynomial(const Assignment& row,
                                 std::shared_ptr<const VariableContext> ctx);

/// g = 1 + sum of the distinct patterns' row polynomials; vanishes exactly on
/// the observed patterns.
BooleanPolynomial aclus_generator(const PatternSet& patterns,
                                  std::shared_ptr<const VariableContext> ctx);

}  // namespace aclus
