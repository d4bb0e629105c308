#pragma once

#include <optional>
#include <span>
#include <vector>

#include "aclus/boolean.hpp"

namespace aclus {

/// An ideal of B(X) given by generators. Zero generators are dropped; the
/// remaining list may be empty (the zero ideal).
class Ideal {
 public:
  explicit Ideal(std::vector<BooleanPolynomial> generators);

  const std::shared_ptr<const VariableContext>& context_ptr() const noexcept {
    return ctx_;
  }
  const VariableContext& context() const noexcept { return *ctx_; }
  std::span<const BooleanPolynomial> generators() const noexcept {
    return generators_;
  }

 private:
  std::shared_ptr<const VariableContext> ctx_;
  std::vector<BooleanPolynomial> generators_;
};

/// Reduced Boolean Groebner basis: leading monomials generate the ideal's
/// leading-monomial ideal, no monomial of any element is divisible by another
/// element's leading monomial, elements sorted descending by leading monomial.
/// Produced only by buchberger(), so normal forms against it are unique.
class GroebnerBasis {
 public:
  const std::shared_ptr<const VariableContext>& context_ptr() const noexcept {
    return ctx_;
  }
  const VariableContext& context() const noexcept { return *ctx_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::span<const BooleanPolynomial> elements() const noexcept {
    return elements_;
  }
  bool empty() const noexcept { return elements_.empty(); }
  std::size_t size() const noexcept { return elements_.size(); }
  /// True when the basis is {1}, i.e. the ideal is the whole ring.
  bool is_whole_ring() const noexcept {
    return elements_.size() == 1 && elements_[0].is_one();
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  friend GroebnerBasis buchberger(const Ideal&, const MonomialOrder&);

  GroebnerBasis(std::shared_ptr<const VariableContext> ctx, MonomialOrder order,
                std::vector<BooleanPolynomial> elements)
      : ctx_(std::move(ctx)),
        order_(std::move(order)),
        elements_(std::move(elements)) {}

  std::shared_ptr<const VariableContext> ctx_;
  MonomialOrder order_;
  std::vector<BooleanPolynomial> elements_;
};

/// S(f,g) = (lcm/LM(f))*f + (lcm/LM(g))*g with idempotent multiplication;
/// the lcm of squarefree monomials is the union of their variable sets.
BooleanPolynomial s_polynomial(const BooleanPolynomial& f,
                               const BooleanPolynomial& g,
                               const MonomialOrder& order);

/// The reduction obligations the quotient structure imposes on f: for each
/// variable x in LM(f), the idempotent product x*f. These stand in for the
/// S-polynomials of f with the never-materialized field polynomials x^2 + x.
std::vector<BooleanPolynomial> variable_obligations(const BooleanPolynomial& f,
                                                    const MonomialOrder& order);

/// Remainder of f under the division algorithm against an arbitrary list of
/// nonzero divisors: repeated top-reduction, non-divisible leading terms move
/// to the remainder. For a Groebner basis the result is independent of the
/// divisor order.
BooleanPolynomial reduce_by(const BooleanPolynomial& f,
                            std::span<const BooleanPolynomial> divisors,
                            const MonomialOrder& order);

/// Buchberger's algorithm specialized to the Boolean quotient ring, returning
/// the reduced (hence canonical) basis. Terminates: only finitely many
/// squarefree monomials exist.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);

/// The unique r with f = g + r, g in the ideal, and no term of r divisible by
/// any basis leading monomial.
BooleanPolynomial normal_form(const BooleanPolynomial& f,
                              const GroebnerBasis& basis);

bool ideal_membership(const BooleanPolynomial& f, const GroebnerBasis& basis);

/// Default brute-force guard for variety(): ACLUS_VARIETY_GUARD when set,
/// otherwise 24 variables.
std::size_t default_variety_guard();

/// All assignments annihilating every generator, by exhaustive 2^n scan,
/// ascending by bit pattern. Refuses when n exceeds the guard.
std::vector<Assignment> variety(
    const Ideal& ideal, std::optional<std::size_t> guard = std::nullopt);

}  // namespace aclus
