#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aclus/errors.hpp"

namespace aclus {

/// Ordered list of distinct variable names, one per table column.
/// Indexing is 0-based and fixed for the lifetime of any polynomial built
/// against the context.
class VariableContext {
 public:
  static constexpr std::size_t kMaxVariables = 32;

  static std::shared_ptr<const VariableContext> create(
      std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  std::span<const std::string> names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.names_ == b.names_;
  }

 private:
  explicit VariableContext(std::vector<std::string> names)
      : names_(std::move(names)) {}

  std::vector<std::string> names_;
};

/// Squarefree monomial: a subset of variable indices stored as a bit mask
/// (bit i <=> variable i). The empty mask is the constant monomial 1; no
/// exponent is ever above 1.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint32_t mask) : mask_(mask) {}

  static constexpr Monomial one() { return Monomial(); }
  static constexpr Monomial variable(std::size_t index) {
    return Monomial(std::uint32_t{1} << index);
  }

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool is_one() const noexcept { return mask_ == 0; }
  constexpr int degree() const noexcept { return std::popcount(mask_); }
  constexpr bool contains(std::size_t index) const noexcept {
    return (mask_ >> index) & 1u;
  }

  constexpr bool divides(Monomial other) const noexcept {
    return (mask_ & other.mask_) == mask_;
  }
  constexpr bool coprime_with(Monomial other) const noexcept {
    return (mask_ & other.mask_) == 0;
  }

  /// Idempotent product: the union of the variable sets.
  constexpr Monomial operator*(Monomial other) const noexcept {
    return Monomial(mask_ | other.mask_);
  }
  constexpr Monomial lcm(Monomial other) const noexcept {
    return Monomial(mask_ | other.mask_);
  }
  /// Squarefree quotient; requires divisor | *this.
  constexpr Monomial quotient_by(Monomial divisor) const noexcept {
    return Monomial(mask_ & ~divisor.mask_);
  }

  std::vector<std::size_t> variable_indices() const;

  friend constexpr auto operator<=>(Monomial, Monomial) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// A {0,1}-assignment to the n variables of a context, stored as a bit mask.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::uint32_t bits, std::size_t size);

  static Assignment from_bits(std::span<const int> bits);
  /// Parses "001101" with character i giving variable i.
  static Assignment from_string(std::string_view text);

  std::uint32_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return size_; }
  bool bit(std::size_t index) const { return (bits_ >> index) & 1u; }
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::uint32_t bits_ = 0;
  std::size_t size_ = 0;
};

/// Total multiplicative order on squarefree monomials: plain lex on the
/// variable sequence, or weighted lex (weighted degree first, lex on ties).
class MonomialOrder {
 public:
  enum class Kind { lex, weighted_lex };

  static MonomialOrder lex();
  /// Weights must be non-negative, one per variable.
  static MonomialOrder weighted_lex(std::vector<std::int64_t> weights);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }

  std::int64_t weighted_degree(Monomial m) const;
  std::strong_ordering compare(Monomial a, Monomial b) const;
  bool less(Monomial a, Monomial b) const { return compare(a, b) < 0; }
  bool greater(Monomial a, Monomial b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<std::int64_t> weights)
      : kind_(kind), weights_(std::move(weights)) {}

  Kind kind_ = Kind::lex;
  std::vector<std::int64_t> weights_;
};

/// Element of the quotient ring B(X1..Xn) = GF(2)[X]/<Xi^2 - Xi>: a canonical
/// set of squarefree monomials, each with coefficient 1. Addition is symmetric
/// difference, multiplication distributes with idempotent monomial products.
/// Values are immutable after construction.
class BooleanPolynomial {
 public:
  static BooleanPolynomial zero(std::shared_ptr<const VariableContext> ctx);
  static BooleanPolynomial one(std::shared_ptr<const VariableContext> ctx);
  static BooleanPolynomial variable(std::shared_ptr<const VariableContext> ctx,
                                    std::size_t index);
  static BooleanPolynomial monomial(std::shared_ptr<const VariableContext> ctx,
                                    Monomial m);
  /// Canonicalizes: duplicate monomials cancel in pairs (char 2).
  static BooleanPolynomial from_monomials(
      std::shared_ptr<const VariableContext> ctx, std::vector<Monomial> monomials);

  const VariableContext& context() const noexcept { return *ctx_; }
  const std::shared_ptr<const VariableContext>& context_ptr() const noexcept {
    return ctx_;
  }

  bool is_zero() const noexcept { return monomials_.empty(); }
  bool is_one() const noexcept {
    return monomials_.size() == 1 && monomials_[0].is_one();
  }
  std::size_t term_count() const noexcept { return monomials_.size(); }
  std::span<const Monomial> monomials() const noexcept { return monomials_; }
  bool has_monomial(Monomial m) const;

  BooleanPolynomial operator+(const BooleanPolynomial& other) const;
  BooleanPolynomial operator*(const BooleanPolynomial& other) const;
  /// Idempotent product with a single monomial.
  BooleanPolynomial times(Monomial m) const;
  /// Substitutes variable `index` := 1 and recanonicalizes.
  BooleanPolynomial substitute_one(std::size_t index) const;

  bool evaluate(const Assignment& assignment) const;

  /// Greatest monomial under `order`; rejects the zero polynomial.
  Monomial leading_monomial(const MonomialOrder& order) const;

  friend bool operator==(const BooleanPolynomial& a, const BooleanPolynomial& b);

 private:
  BooleanPolynomial(std::shared_ptr<const VariableContext> ctx,
                    std::vector<Monomial> monomials)
      : ctx_(std::move(ctx)), monomials_(std::move(monomials)) {}

  std::shared_ptr<const VariableContext> ctx_;
  std::vector<Monomial> monomials_;  // strictly ascending by mask
};

/// Requires a and b to live over equal contexts; throws context_mismatch.
void require_same_context(const BooleanPolynomial& a, const BooleanPolynomial& b);

BooleanPolynomial complement(const BooleanPolynomial& p);                        // p + 1
BooleanPolynomial disjunction(const BooleanPolynomial& p, const BooleanPolynomial& q);  // p + q + pq
BooleanPolynomial conjunction(const BooleanPolynomial& p, const BooleanPolynomial& q);  // pq

std::string render(Monomial m, const VariableContext& ctx);
/// Terms descending under `order`, variables in context order, '*' products,
/// explicit "+ 1"; zero renders as "0".
std::string render(const BooleanPolynomial& p, const MonomialOrder& order);
std::string render(const BooleanPolynomial& p);  // default lex

/// Grammar: poly := term ('+' term)*; term := factor ('*' factor)*;
/// factor := '0' | '1' | varname | '(' poly ')'. Whitespace-insensitive;
/// variable names resolve by longest match against the context.
BooleanPolynomial parse_polynomial(std::string_view text,
                                   std::shared_ptr<const VariableContext> ctx);

}  // namespace aclus
