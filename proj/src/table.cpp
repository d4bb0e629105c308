#include "aclus/table.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace aclus {

BooleanTable BooleanTable::create(
    std::shared_ptr<const VariableContext> columns, std::vector<Assignment> rows,
    std::vector<std::string> labels) {
  for (const auto& row : rows) {
    if (row.size() != columns->size()) {
      fail(errc::invalid_argument,
           "row length " + std::to_string(row.size()) +
               " does not match column count " +
               std::to_string(columns->size()));
    }
  }
  if (labels.empty()) {
    labels.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      labels.push_back(std::to_string(i + 1));
    }
  }
  if (labels.size() != rows.size()) {
    fail(errc::invalid_argument, "label count does not match row count");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      fail(errc::invalid_argument, "duplicate row label '" + label + "'");
    }
  }
  return BooleanTable(std::move(columns), std::move(rows), std::move(labels));
}

std::optional<std::size_t> BooleanTable::find_label(
    std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

BooleanTable BooleanTable::without_rows(
    std::span<const std::size_t> row_indices) const {
  std::vector<bool> drop(rows_.size(), false);
  for (std::size_t idx : row_indices) {
    if (idx >= rows_.size()) {
      fail(errc::invalid_argument, "row index out of range");
    }
    drop[idx] = true;
  }
  std::vector<Assignment> rows;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!drop[i]) {
      rows.push_back(rows_[i]);
      labels.push_back(labels_[i]);
    }
  }
  return BooleanTable(columns_, std::move(rows), std::move(labels));
}

PatternSet PatternSet::collect(const BooleanTable& table) {
  PatternSet out;
  std::unordered_map<std::uint32_t, std::size_t> index_by_bits;
  for (std::size_t i = 0; i < table.row_count(); ++i) {
    const Assignment& row = table.row(i);
    auto [it, inserted] = index_by_bits.try_emplace(row.bits(), out.entries.size());
    if (inserted) {
      out.entries.push_back(Entry{row, 0, {}});
    }
    Entry& entry = out.entries[it->second];
    entry.multiplicity += 1;
    entry.labels.push_back(table.label(i));
  }
  return out;
}

std::optional<std::size_t> PatternSet::index_of(const Assignment& pattern) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].pattern == pattern) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> PatternSet::index_of_label(
    std::string_view label) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const auto& l : entries[i].labels) {
      if (l == label) return i;
    }
  }
  return std::nullopt;
}

WeightVector compute_weights(const BooleanTable& table) {
  std::size_t n = table.column_count();
  std::int64_t m = static_cast<std::int64_t>(table.row_count());
  WeightVector weights(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t ones = 0;
    for (const auto& row : table.rows()) {
      if (row.bit(i)) ++ones;
    }
    weights[i] = ones * (m - ones);
  }
  return weights;
}

BooleanPolynomial row_polynomial(const Assignment& row,
                                 std::shared_ptr<const VariableContext> ctx) {
  if (row.size() != ctx->size()) {
    fail(errc::invalid_argument,
         "row length does not match the variable context");
  }
  // Entry 1 sets the bit in every monomial so far; entry 0 doubles the support
  // with the bit set. All masks stay distinct, so no cancellation happens.
  std::vector<Monomial> monomials{Monomial::one()};
  for (std::size_t i = 0; i < row.size(); ++i) {
    Monomial xi = Monomial::variable(i);
    if (row.bit(i)) {
      for (auto& m : monomials) m = m * xi;
    } else {
      std::size_t count = monomials.size();
      monomials.reserve(count * 2);
      for (std::size_t j = 0; j < count; ++j) {
        monomials.push_back(monomials[j] * xi);
      }
    }
  }
  return BooleanPolynomial::from_monomials(std::move(ctx), std::move(monomials));
}

BooleanPolynomial aclus_generator(const PatternSet& patterns,
                                  std::shared_ptr<const VariableContext> ctx) {
  BooleanPolynomial g = BooleanPolynomial::one(ctx);
  for (const auto& entry : patterns.entries) {
    g = g + row_polynomial(entry.pattern, ctx);
  }
  return g;
}

}  // namespace aclus
