#include "aclus/interpret.hpp"

#include <algorithm>

namespace aclus {

namespace {

struct Symbols {
  const char* and_;
  const char* or_;
  const char* not_;
  const char* implies;
  const char* iff;
};

Symbols symbols(LogicStyle style) {
  if (style == LogicStyle::ascii) {
    return {" & ", " | ", "!", " => ", " <=> "};
  }
  return {" ∧ ", " ∨ ", "¬", " ⇒ ", " ⇔ "};
}

// Kind of a single factor.
enum class FactorKind { variable, complement, residual };

FactorKind classify(const BooleanPolynomial& f, std::size_t& variable_index) {
  auto ms = f.monomials();
  if (ms.size() == 1 && ms[0].degree() == 1) {
    variable_index = ms[0].variable_indices()[0];
    return FactorKind::variable;
  }
  if (ms.size() == 2 && ms[0].is_one() && ms[1].degree() == 1) {
    variable_index = ms[1].variable_indices()[0];
    return FactorKind::complement;
  }
  return FactorKind::residual;
}

// The two-variable rewrites: x+y+xy, 1+x+y+xy, 1+x+y.
std::optional<std::string> pattern_string(const BooleanPolynomial& p,
                                          const Symbols& sym) {
  auto ms = p.monomials();
  const VariableContext& ctx = p.context();
  auto two_vars = [&](Monomial a, Monomial b,
                      Monomial product) -> std::optional<std::pair<std::size_t, std::size_t>> {
    if (a.degree() != 1 || b.degree() != 1) return std::nullopt;
    if (!(a * b == product) || a == b) return std::nullopt;
    std::size_t x = a.variable_indices()[0];
    std::size_t y = b.variable_indices()[0];
    return std::make_pair(std::min(x, y), std::max(x, y));
  };

  if (ms.size() == 3 && !ms[0].is_one()) {
    if (auto xy = two_vars(ms[0], ms[1], ms[2])) {
      return "(" + ctx.name(xy->first) + sym.or_ + ctx.name(xy->second) + ")";
    }
  }
  if (ms.size() == 4 && ms[0].is_one()) {
    if (auto xy = two_vars(ms[1], ms[2], ms[3])) {
      return std::string(sym.not_) + "(" + ctx.name(xy->first) + sym.or_ +
             ctx.name(xy->second) + ")";
    }
  }
  if (ms.size() == 3 && ms[0].is_one() && ms[1].degree() == 1 &&
      ms[2].degree() == 1) {
    std::size_t x = ms[1].variable_indices()[0];
    std::size_t y = ms[2].variable_indices()[0];
    return "(" + ctx.name(std::min(x, y)) + sym.iff + ctx.name(std::max(x, y)) +
           ")";
  }
  return std::nullopt;
}

std::string factor_logic(const BooleanPolynomial& f, const Symbols& sym,
                         bool top_level) {
  std::size_t var = 0;
  switch (classify(f, var)) {
    case FactorKind::variable:
      return f.context().name(var);
    case FactorKind::complement:
      return sym.not_ + f.context().name(var);
    case FactorKind::residual:
      if (auto s = pattern_string(f, sym)) return *s;
      return top_level ? render(f) : "(" + render(f) + ")";
  }
  return render(f);
}

// Drops every monomial containing variable `index`; valid exactly when the
// substitution test p|_{x=1} = 0 holds, where p = (1+x) * result.
BooleanPolynomial drop_variable_monomials(const BooleanPolynomial& p,
                                          std::size_t index) {
  std::vector<Monomial> kept;
  for (Monomial m : p.monomials()) {
    if (!m.contains(index)) kept.push_back(m);
  }
  return BooleanPolynomial::from_monomials(p.context_ptr(), std::move(kept));
}

BooleanPolynomial strip_variables(const BooleanPolynomial& p,
                                  std::uint32_t mask) {
  std::vector<Monomial> out;
  out.reserve(p.term_count());
  for (Monomial m : p.monomials()) {
    out.push_back(Monomial(m.mask() & ~mask));
  }
  return BooleanPolynomial::from_monomials(p.context_ptr(), std::move(out));
}

}  // namespace

BooleanPolynomial FactoredForm::expand() const {
  if (factors.empty()) {
    fail(errc::invalid_argument, "factored form has no factors");
  }
  BooleanPolynomial out = BooleanPolynomial::one(factors.front().context_ptr());
  for (const auto& f : factors) out = out * f;
  return out;
}

FactoredForm factor(const BooleanPolynomial& p) {
  if (p.is_zero()) {
    fail(errc::zero_polynomial, "cannot factor the zero polynomial");
  }
  const std::size_t n = p.context().size();
  std::vector<BooleanPolynomial> variables_out;
  std::vector<BooleanPolynomial> complements_out;
  BooleanPolynomial q = p;

  bool changed = true;
  while (changed && !q.is_one()) {
    changed = false;

    std::uint32_t common = ~std::uint32_t{0};
    for (Monomial m : q.monomials()) common &= m.mask();
    if (common != 0) {
      for (std::size_t i : Monomial(common).variable_indices()) {
        variables_out.push_back(BooleanPolynomial::variable(q.context_ptr(), i));
      }
      q = strip_variables(q, common);
      changed = true;
      continue;
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (q.substitute_one(i).is_zero()) {
        complements_out.push_back(
            complement(BooleanPolynomial::variable(q.context_ptr(), i)));
        q = drop_variable_monomials(q, i);
        changed = true;
        break;
      }
    }
  }

  FactoredForm form;
  form.factors = std::move(variables_out);
  for (auto& c : complements_out) form.factors.push_back(std::move(c));
  if (form.factors.empty() || !q.is_one()) {
    form.factors.push_back(std::move(q));
  }
  return form;
}

std::string render(const FactoredForm& form) {
  std::string out;
  for (const auto& f : form.factors) {
    if (!out.empty()) out += "*";
    if (f.term_count() > 1) {
      out += "(" + render(f) + ")";
    } else {
      out += render(f);
    }
  }
  return out;
}

std::string to_logic(const BooleanPolynomial& p, LogicStyle style) {
  Symbols sym = symbols(style);
  if (p.is_zero()) return "0";
  if (p.is_one()) return "1";
  if (auto s = pattern_string(p, sym)) return *s;

  FactoredForm form = factor(p);
  if (form.factors.size() == 1) {
    return factor_logic(form.factors[0], sym, /*top_level=*/true);
  }
  std::string out;
  for (const auto& f : form.factors) {
    if (!out.empty()) out += sym.and_;
    out += factor_logic(f, sym, /*top_level=*/false);
  }
  return out;
}

std::optional<std::string> rule_implication(const BooleanPolynomial& f,
                                            LogicStyle style) {
  if (f.is_zero() || f.is_one()) return std::nullopt;
  Symbols sym = symbols(style);
  FactoredForm form = factor(f);

  std::vector<std::size_t> plain;
  std::vector<std::size_t> complemented;
  for (const auto& factor : form.factors) {
    std::size_t var = 0;
    switch (classify(factor, var)) {
      case FactorKind::variable:
        plain.push_back(var);
        break;
      case FactorKind::complement:
        complemented.push_back(var);
        break;
      case FactorKind::residual:
        return std::nullopt;
    }
  }
  std::sort(plain.begin(), plain.end());
  std::sort(complemented.begin(), complemented.end());
  const VariableContext& ctx = f.context();

  std::vector<std::string> antecedent;
  std::string consequent;
  if (!complemented.empty()) {
    // The last-column complement flips to the positive consequent.
    std::size_t target = complemented.back();
    complemented.pop_back();
    for (std::size_t v : plain) antecedent.push_back(ctx.name(v));
    for (std::size_t v : complemented) antecedent.push_back(sym.not_ + ctx.name(v));
    consequent = ctx.name(target);
  } else {
    std::size_t target = plain.back();
    plain.pop_back();
    for (std::size_t v : plain) antecedent.push_back(ctx.name(v));
    consequent = sym.not_ + ctx.name(target);
  }

  if (antecedent.empty()) return consequent;
  std::string out;
  for (const auto& part : antecedent) {
    if (!out.empty()) out += sym.and_;
    out += part;
  }
  return out + sym.implies + consequent;
}

std::string rule_from_ideal_element(const BooleanPolynomial& f,
                                    LogicStyle style) {
  std::string out = render(f) + " = 0";
  if (auto impl = rule_implication(f, style)) {
    out += "  [" + *impl + "]";
  } else if (!f.is_zero() && !f.is_one()) {
    out += "  [" + to_logic(f, style) + " = 0]";
  }
  return out;
}

}  // namespace aclus
