#include "aclus/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace aclus {

Ideal::Ideal(std::vector<BooleanPolynomial> generators) {
  if (generators.empty()) {
    fail(errc::invalid_argument,
         "an ideal needs at least one generator (use the zero polynomial for "
         "the zero ideal)");
  }
  ctx_ = generators.front().context_ptr();
  for (auto& g : generators) {
    if (g.context_ptr() != ctx_ && !(g.context() == *ctx_)) {
      fail(errc::context_mismatch,
           "ideal generators belong to different variable contexts");
    }
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

BooleanPolynomial s_polynomial(const BooleanPolynomial& f,
                               const BooleanPolynomial& g,
                               const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) {
    fail(errc::zero_polynomial, "s-polynomial of a zero polynomial");
  }
  require_same_context(f, g);
  Monomial lf = f.leading_monomial(order);
  Monomial lg = g.leading_monomial(order);
  Monomial l = lf.lcm(lg);
  return f.times(l.quotient_by(lf)) + g.times(l.quotient_by(lg));
}

std::vector<BooleanPolynomial> variable_obligations(const BooleanPolynomial& f,
                                                    const MonomialOrder& order) {
  if (f.is_zero()) {
    fail(errc::zero_polynomial, "variable obligations of the zero polynomial");
  }
  std::vector<BooleanPolynomial> out;
  for (std::size_t i : f.leading_monomial(order).variable_indices()) {
    out.push_back(f.times(Monomial::variable(i)));
  }
  return out;
}

BooleanPolynomial reduce_by(const BooleanPolynomial& f,
                            std::span<const BooleanPolynomial> divisors,
                            const MonomialOrder& order) {
  std::vector<Monomial> lms;
  lms.reserve(divisors.size());
  for (const auto& d : divisors) {
    require_same_context(f, d);
    if (d.is_zero()) {
      fail(errc::zero_polynomial, "cannot divide by the zero polynomial");
    }
    lms.push_back(d.leading_monomial(order));
  }

  std::vector<Monomial> remainder;
  BooleanPolynomial h = f;
  while (!h.is_zero()) {
    Monomial lh = h.leading_monomial(order);
    bool reduced = false;
    for (std::size_t i = 0; i < lms.size(); ++i) {
      if (lms[i].divides(lh)) {
        // Cofactor is disjoint from LM(divisor), so the head cancels exactly
        // and every other term stays strictly below lh.
        h = h + divisors[i].times(lh.quotient_by(lms[i]));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lh);
      h = h + BooleanPolynomial::monomial(h.context_ptr(), lh);
    }
  }
  return BooleanPolynomial::from_monomials(f.context_ptr(), std::move(remainder));
}

namespace {

// Deterministic total order on polynomials: leading monomial first, then the
// canonical monomial lists.
bool poly_before(const BooleanPolynomial& a, const BooleanPolynomial& b,
                 const MonomialOrder& order) {
  auto c = order.compare(a.leading_monomial(order), b.leading_monomial(order));
  if (c != 0) return c > 0;
  auto am = a.monomials();
  auto bm = b.monomials();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(),
                                      bm.end());
}

struct Task {
  Monomial lcm;   // queue priority: smallest lcm first
  std::size_t i;  // basis index
  std::size_t j;  // second basis index, or the variable for obligations
  bool is_pair;
};

struct TaskCompare {
  const MonomialOrder* order;
  bool operator()(const Task& a, const Task& b) const {
    auto c = order->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.is_pair != b.is_pair) return a.is_pair < b.is_pair;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Full autoreduction: rewrite every element against the others until nothing
// changes. Terminates because each rewrite strictly shrinks the element's
// monomial multiset in the order's well-founded extension.
void autoreduce(std::vector<BooleanPolynomial>& basis,
                const MonomialOrder& order) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(basis.begin(), basis.end(),
              [&](const auto& a, const auto& b) { return poly_before(a, b, order); });
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<BooleanPolynomial> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j != i) others.push_back(basis[j]);
      }
      BooleanPolynomial r = reduce_by(basis[i], others, order);
      if (!(r == basis[i])) {
        if (r.is_zero()) {
          basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          basis[i] = std::move(r);
        }
        changed = true;
        break;
      }
    }
  }
  std::sort(basis.begin(), basis.end(),
            [&](const auto& a, const auto& b) { return poly_before(a, b, order); });
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  if (order.kind() == MonomialOrder::Kind::weighted_lex &&
      order.weights().size() != ideal.context().size()) {
    fail(errc::invalid_argument,
         "weight vector length does not match the variable count");
  }

  std::vector<BooleanPolynomial> basis;
  std::set<Task, TaskCompare> tasks(TaskCompare{&order});

  auto add_element = [&](BooleanPolynomial p) {
    std::size_t idx = basis.size();
    Monomial lm = p.leading_monomial(order);
    for (std::size_t i = 0; i < idx; ++i) {
      Monomial lmi = basis[i].leading_monomial(order);
      if (lmi.coprime_with(lm)) continue;  // Buchberger's first criterion
      tasks.insert(Task{lmi.lcm(lm), i, idx, true});
    }
    for (std::size_t v : lm.variable_indices()) {
      tasks.insert(Task{lm, idx, v, false});
    }
    basis.push_back(std::move(p));
  };

  for (const auto& g : ideal.generators()) add_element(g);

  while (!tasks.empty()) {
    Task t = *tasks.begin();
    tasks.erase(tasks.begin());
    BooleanPolynomial h =
        t.is_pair ? s_polynomial(basis[t.i], basis[t.j], order)
                  : basis[t.i].times(Monomial::variable(t.j));
    if (h.is_zero()) continue;
    BooleanPolynomial r = reduce_by(h, basis, order);
    if (!r.is_zero()) add_element(std::move(r));
  }

  autoreduce(basis, order);
  return GroebnerBasis(ideal.context_ptr(), order, std::move(basis));
}

BooleanPolynomial normal_form(const BooleanPolynomial& f,
                              const GroebnerBasis& basis) {
  return reduce_by(f, basis.elements(), basis.order());
}

bool ideal_membership(const BooleanPolynomial& f, const GroebnerBasis& basis) {
  return normal_form(f, basis).is_zero();
}

std::size_t default_variety_guard() {
  if (const char* env = std::getenv("ACLUS_VARIETY_GUARD")) {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 &&
        value <= VariableContext::kMaxVariables) {
      return static_cast<std::size_t>(value);
    }
    fail(errc::invalid_argument,
         std::string("ACLUS_VARIETY_GUARD must be an integer in [1, ") +
             std::to_string(VariableContext::kMaxVariables) + "], got '" + env +
             "'");
  }
  return 24;
}

std::vector<Assignment> variety(const Ideal& ideal,
                                std::optional<std::size_t> guard) {
  std::size_t n = ideal.context().size();
  std::size_t limit = guard.value_or(default_variety_guard());
  if (n > limit) {
    fail(errc::guard_exceeded,
         "variety scan over " + std::to_string(n) +
             " variables exceeds the guard of " + std::to_string(limit) +
             "; raise ACLUS_VARIETY_GUARD or pass a larger guard to override");
  }

  std::vector<Assignment> points;
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Assignment a(static_cast<std::uint32_t>(bits), n);
    bool vanishes = true;
    for (const auto& g : ideal.generators()) {
      if (g.evaluate(a)) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) points.push_back(a);
  }
  return points;
}

}  // namespace aclus
