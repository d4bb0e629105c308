#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aclus/boolean.hpp"

namespace aclus {

enum class LogicStyle { unicode, ascii };

/// Multiplicative decomposition of a Boolean polynomial. Each factor is a
/// single variable, a complement 1+x, or one residual polynomial this
/// procedure cannot split further; the quotient-ring product of the factors
/// equals the original polynomial.
struct FactoredForm {
  std::vector<BooleanPolynomial> factors;

  BooleanPolynomial expand() const;
};

/// Greedy extraction: variables present in every monomial, then complement
/// factors 1+x detected by the substitution test p|_{x=1} = 0, repeated until
/// neither applies. Rejects the zero polynomial.
FactoredForm factor(const BooleanPolynomial& p);

/// "a*(c + g + 1)" style text for a factored form, terms under default lex.
std::string render(const FactoredForm& form);

/// Human-readable logic for a polynomial: AND-joined factors with not-x for
/// complements, plus the rewrites x+y+xy -> (x or y), 1+x+y+xy -> not(x or y),
/// 1+x+y -> (x iff y); raw polynomial text when no pattern applies.
std::string to_logic(const BooleanPolynomial& p,
                     LogicStyle style = LogicStyle::unicode);

/// The implication equivalent to "f = 0", when f factors into variables and
/// complements: the complement whose variable comes last in column order
/// becomes the (positive) consequent; a pure monomial yields a negated last
/// variable instead. Empty when f resists both shapes.
std::optional<std::string> rule_implication(const BooleanPolynomial& f,
                                            LogicStyle style = LogicStyle::unicode);

/// Renders an ideal element as the rule it states: "f = 0" plus the
/// implication reading when one exists, e.g. "c*v + v = 0  [v => c]".
std::string rule_from_ideal_element(const BooleanPolynomial& f,
                                    LogicStyle style = LogicStyle::unicode);

}  // namespace aclus
