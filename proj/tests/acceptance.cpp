// Acceptance suite: one pass/fail/skip line per criterion, nonzero exit when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aclus/csv.hpp"
#include "aclus/report.hpp"
#include "logic_eval.hpp"

using namespace aclus;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string data_file(const char* name) {
  return std::string(ACLUS_DATA_DIR) + "/" + name;
}

// "w a g + w g" -> "w*a*g + w*g": terms split on '+', factors on whitespace.
std::string star_spaced(const std::string& text) {
  std::string out;
  std::istringstream terms(text);
  std::string term;
  bool first_term = true;
  while (std::getline(terms, term, '+')) {
    std::istringstream factors(term);
    std::string factor;
    std::string joined;
    while (factors >> factor) {
      if (!joined.empty()) joined += "*";
      joined += factor;
    }
    if (!first_term) out += " + ";
    out += joined;
    first_term = false;
  }
  return out;
}

std::shared_ptr<const VariableContext> x_ctx(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VariableContext::create(names);
}

BooleanPolynomial random_poly(std::mt19937_64& rng,
                              std::shared_ptr<const VariableContext> ctx,
                              int max_terms) {
  std::uniform_int_distribution<int> term_count(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> mask(
      0, (std::uint32_t{1} << ctx->size()) - 1);
  std::vector<Monomial> monomials;
  int terms = term_count(rng);
  for (int i = 0; i < terms; ++i) monomials.push_back(Monomial(mask(rng)));
  return BooleanPolynomial::from_monomials(std::move(ctx), std::move(monomials));
}

// The 18 published reductions of the guiding table, keyed by row label.
const std::vector<std::string> kPublishedReductions = {
    "w a g + w g + a c + a + c g + g",
    "a c + a g + a + n v g + n c + n g + n + v g + c + g + 1",
    "n v g + v g",
    "c g + c + g + 1",
    "n v g + n c + n g + n + c g + c + g + 1",
    "n v g",
    "w a g + a c + a",
    "a c + a g + a",
    "w a g + w a + a g + a",
    "w a g + w g + n c + n + c g + c + g + 1",
    "a v + a g + a + n v g + n v + n g + n + v g + v + g + 1",
    "w a g + w a + w g + w + a v + a g + a + n v g + n v + v g + v + c g + c",
    "n c + n + c g + c + g + 1",
    "n v g + n v + n g + n + c g + c + g + 1",
    "n v g + n v",
    "w a g",
    "a v + a g + a",
    "w a g + w a + a v + a g + a",
};

std::string criterion_1() {
  auto start = Clock::now();
  auto table = load_table(data_file("beech.csv"));
  auto result = analyze(table);
  double elapsed = seconds_since(start);

  require(result.weights == WeightVector{81, 72, 72, 72, 72, 80},
          "weight vector differs from (81, 72, 72, 72, 72, 80)");
  require(result.order.kind() == MonomialOrder::Kind::weighted_lex,
          "analysis order is not weighted lex");

  auto ctx = table.columns_ptr();
  std::vector<int> exact;
  std::vector<int> fallback;
  for (std::size_t i = 0; i < 18; ++i) {
    auto published = parse_polynomial(star_spaced(kPublishedReductions[i]), ctx);
    std::string label = std::to_string(i + 1);
    auto idx = result.patterns.index_of_label(label);
    require(idx.has_value(), "row label " + label + " missing");
    const auto& ours = result.reductions[*idx];
    if (ours == published) {
      exact.push_back(static_cast<int>(i + 1));
    } else {
      require(ideal_membership(published + ours, result.basis),
              "row " + label +
                  ": published and computed reductions do not differ by an "
                  "ideal element");
      // both reduce the same observation: the published value is also an
      // exact indicator of this row on the variety
      for (const auto& entry : result.patterns.entries) {
        bool expect = entry.pattern == result.patterns.entries[*idx].pattern;
        require(published.evaluate(entry.pattern) == expect,
                "row " + label + ": published reduction is not an indicator");
      }
      fallback.push_back(static_cast<int>(i + 1));
    }
  }
  require(elapsed < 1.0, "analysis took " + std::to_string(elapsed) + "s");

  std::ostringstream detail;
  detail << exact.size() << "/18 structurally equal";
  if (!fallback.empty()) {
    detail << "; rows";
    for (int row : fallback) detail << " " << row;
    detail << " differ by an ideal element (no monomial order admits the "
              "published forms: they span 19 standard monomials, the quotient "
              "has dimension 18)";
  }
  detail << "; " << elapsed << "s";
  return detail.str();
}

std::string criterion_2() {
  auto table = load_table(data_file("beech.csv"));
  auto result = analyze(table);
  auto start = Clock::now();
  auto points = variety(Ideal({result.generator}));
  double elapsed = seconds_since(start);

  std::vector<Assignment> rows(table.rows().begin(), table.rows().end());
  std::sort(rows.begin(), rows.end());
  require(points == rows, "variety differs from the 18 row patterns");
  require(elapsed < 1.0, "variety scan took " + std::to_string(elapsed) + "s");
  return "V(<g>) = the 18 row patterns over 64 assignments; " +
         std::to_string(elapsed) + "s";
}

std::string criterion_3() {
  auto result = analyze(load_table(data_file("beech.csv")));
  auto ctx = result.table.columns_ptr();
  auto member = [&](std::string_view text) {
    return ideal_membership(parse_polynomial(text, ctx), result.basis);
  };
  require(member("c*v + v"), "c*v + v should reduce to 0");
  require(member("(g+1)*w*(c+1)"), "(g+1)*w*(c+1) should reduce to 0");
  require(member("w*a*n*(c+1)*v*g"), "w*a*n*(c+1)*v*g should reduce to 0");
  require(!member("1"), "1 must not lie in the ideal");
  return "c*v+v, (g+1)*w*(c+1), w*a*n*(c+1)*v*g in the ideal; 1 outside";
}

std::string criterion_4() {
  auto result = analyze(load_table(data_file("beech.csv")));
  auto ctx = result.table.columns_ptr();
  auto parse = [&](std::string_view s) { return parse_polynomial(s, ctx); };

  std::vector<std::string> rows{"3", "6"};
  auto combined_36 = combine(result, pattern_indices_for_labels(result, rows));
  require(combined_36 == parse("v*g"), "combine({3,6}) != v*g");

  rows = {"7", "9"};
  auto combined_79 = combine(result, pattern_indices_for_labels(result, rows));
  require(combined_79 == parse("a*w + a*c + a*g"),
          "combine({7,9}) != a*w + a*c + a*g");
  require(render(factor(combined_79)) == "a*(w + c + g)",
          "combine({7,9}) does not factor as a*(w + c + g)");

  auto candidates = cluster_search(result, 2, 1);
  std::size_t i3 = *result.patterns.index_of_label("3");
  std::size_t i6 = *result.patterns.index_of_label("6");
  bool found = false;
  for (const auto& c : candidates) {
    found = found || c.pattern_indices == std::vector<std::size_t>{i3, i6};
  }
  require(found, "cluster_search(k=2, max_terms=1) does not list {3,6}");
  return "combine({3,6}) = v*g; combine({7,9}) = a*(w + c + g); search lists "
         "{3,6}";
}

std::string criterion_5() {
  auto table = load_table(data_file("beech.csv"));
  auto ctx = table.columns_ptr();
  std::vector<std::string> remove{"4"};
  auto report = whatif_remove(table, remove);

  require(report.entries.size() == 1, "expected one removal entry");
  require(report.entries[0].new_rule.has_value(),
          "removing row 4 must create a rule");
  auto rule = *report.entries[0].new_rule;
  require(rule == parse_polynomial("c*g + c + g + 1", ctx),
          "rule differs from c*g + c + g + 1");

  auto implication = rule_implication(rule, LogicStyle::ascii);
  require(implication.has_value(), "rule has no implication rendering");
  require(*implication == "!c => g",
          "implication is '" + *implication + "', expected '!c => g'");

  std::vector<std::size_t> indices{*table.find_label("4")};
  auto updated = analyze(table.without_rows(indices));
  require(ideal_membership(rule, updated.basis),
          "the new rule is not in the ideal after removal");
  return "removal of row 4 yields c*g + c + g + 1 = 0, read !c => g, and the "
         "rule joins the new ideal";
}

std::string property_a() {
  std::mt19937_64 rng(101);
  auto ctx = x_ctx(8);
  for (int trial = 0; trial < 10000; ++trial) {
    auto p = random_poly(rng, ctx, 10);
    auto q = random_poly(rng, ctx, 10);
    auto r = random_poly(rng, ctx, 10);
    require((p + q) + r == p + (q + r), "associativity of + failed");
    require(p + q == q + p, "commutativity of + failed");
    require(p * (q * r) == (p * q) * r, "associativity of * failed");
    require(p * q == q * p, "commutativity of * failed");
    require(p * (q + r) == p * q + p * r, "distributivity failed");
    require((p + p).is_zero(), "p + p != 0");
    require(p * p == p, "p * p != p");
  }
  return "10000 random triples, n = 8";
}

std::string property_b() {
  std::mt19937_64 rng(102);
  std::uniform_int_distribution<int> gen_count(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    auto ctx = x_ctx(6);
    std::vector<BooleanPolynomial> gens;
    int count = gen_count(rng);
    for (int i = 0; i < count; ++i) gens.push_back(random_poly(rng, ctx, 8));
    Ideal ideal(gens);
    std::vector<std::int64_t> weights(6);
    std::uniform_int_distribution<std::int64_t> weight(0, 9);
    for (auto& w : weights) w = weight(rng);
    GroebnerBasis basis = buchberger(ideal, MonomialOrder::weighted_lex(weights));
    auto points = variety(ideal);

    auto vanishes = [&](const BooleanPolynomial& f) {
      for (const auto& a : points) {
        if (f.evaluate(a)) return false;
      }
      return true;
    };
    for (const auto& g : ideal.generators()) {
      require(normal_form(g, basis).is_zero() && vanishes(g),
              "generator fails the equivalence");
    }
    for (int i = 0; i < 12; ++i) {
      auto f = random_poly(rng, ctx, 8);
      require(normal_form(f, basis).is_zero() == vanishes(f),
              "NF = 0 and vanishing-on-variety disagree");
    }
  }
  return "100 random ideals, n = 6, both directions checked exhaustively";
}

std::string property_c() {
  std::mt19937_64 rng(103);
  int trials = 0;
  while (trials < 1000) {
    auto ctx = x_ctx(5);
    std::vector<BooleanPolynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(rng, ctx, 8));
    MonomialOrder order = MonomialOrder::lex();
    GroebnerBasis basis = buchberger(Ideal(gens), order);
    if (basis.empty()) continue;
    std::vector<BooleanPolynomial> shuffled(basis.elements().begin(),
                                            basis.elements().end());
    for (int i = 0; i < 25 && trials < 1000; ++i, ++trials) {
      auto f = random_poly(rng, ctx, 8);
      auto expected = normal_form(f, basis);
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      require(reduce_by(f, shuffled, order) == expected,
              "normal form changed under basis shuffling");
    }
  }
  return "1000 shuffled divisions";
}

std::string property_d_e() {
  std::mt19937_64 rng(104);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  std::uniform_int_distribution<std::size_t> rows(1, 32);
  long pair_checks = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = dim(rng);
    auto ctx = x_ctx(n);
    std::uniform_int_distribution<std::uint32_t> mask(
        0, (std::uint32_t{1} << n) - 1);
    std::vector<Assignment> table_rows;
    std::size_t m = rows(rng);
    for (std::size_t i = 0; i < m; ++i) {
      table_rows.push_back(Assignment(mask(rng), n));
    }
    auto result = analyze(BooleanTable::create(ctx, table_rows));

    for (std::size_t i = 0; i < result.patterns.size(); ++i) {
      for (std::size_t j = 0; j < result.patterns.size(); ++j) {
        require(result.reductions[i].evaluate(
                    result.patterns.entries[j].pattern) == (i == j),
                "point separation failed");
      }
    }
    for (std::size_t i = 0; i < result.patterns.size(); ++i) {
      auto gi = row_polynomial(result.patterns.entries[i].pattern, ctx);
      for (std::size_t j = i + 1; j < result.patterns.size(); ++j) {
        auto gj = row_polynomial(result.patterns.entries[j].pattern, ctx);
        require((gi * gj).is_zero(), "g_i * g_j != 0");
        ++pair_checks;
      }
    }
  }
  return "100 random tables (m <= 32, n <= 8); " + std::to_string(pair_checks) +
         " annihilation pairs";
}

std::string property_f() {
  std::mt19937_64 rng(105);
  int rendered = 0;
  for (std::size_t n : {4, 7, 10}) {
    auto ctx = x_ctx(n);
    std::vector<std::string> names(ctx->names().begin(), ctx->names().end());
    for (int trial = 0; trial < 60; ++trial) {
      auto p = random_poly(rng, ctx, 10);
      std::vector<std::string> texts{to_logic(p, LogicStyle::ascii), render(p)};
      if (!p.is_zero()) texts.push_back(render(factor(p)));
      for (const auto& text : texts) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
          require(logic_eval::evaluate(text, names, bits) ==
                      p.evaluate(Assignment(bits, n)),
                  "rendering '" + text + "' disagrees with the polynomial");
        }
        ++rendered;
      }
      if (!p.is_zero() && !p.is_one()) {
        if (auto impl = rule_implication(p, LogicStyle::ascii)) {
          for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            require(logic_eval::evaluate(*impl, names, bits) ==
                        !p.evaluate(Assignment(bits, n)),
                    "implication '" + *impl + "' does not match f = 0");
          }
          ++rendered;
        }
      }
    }
  }
  return std::to_string(rendered) + " renderings compared truth-table "
         "exhaustively, n <= 10";
}

std::string criterion_7() {
  auto start = Clock::now();
  std::string a = property_a();
  std::string b = property_b();
  std::string c = property_c();
  std::string de = property_d_e();
  std::string f = property_f();
  double elapsed = seconds_since(start);
  require(elapsed < 60.0,
          "property suites took " + std::to_string(elapsed) + "s (target 60s)");
  std::ostringstream detail;
  detail << "(a) " << a << "; (b) " << b << "; (c) " << c << "; (d+e) " << de
         << "; (f) " << f << "; total " << elapsed << "s";
  return detail.str();
}

struct Criterion {
  std::string name;
  std::function<std::string()> body;  // returns detail; throws Failure
  const char* skip_reason = nullptr;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1. published per-row reductions (18x6 guiding table)", criterion_1},
      {"2. variety oracle equals the observed patterns", criterion_2},
      {"3. ideal-membership checks", criterion_3},
      {"4. cluster reproduction", criterion_4},
      {"5. what-if removal of row 4", criterion_5},
      {"6. statue table basis", nullptr,
       "495-row supplementary table unobtainable in this environment; the "
       "derivable cross-checks (29-point variety of the published rules, "
       "mutual ideal membership) run in test_groebner"},
      {"7. property suites", criterion_7},
      {"8. questionnaire spot checks", nullptr,
       "1524x9 supplementary table unobtainable in this environment"},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    if (criterion.body == nullptr) {
      std::printf("[SKIP] %s -- %s\n", criterion.name.c_str(),
                  criterion.skip_reason);
      continue;
    }
    try {
      std::string detail = criterion.body();
      std::printf("[PASS] %s -- %s\n", criterion.name.c_str(), detail.c_str());
    } catch (const Failure& failure) {
      std::printf("[FAIL] %s -- %s\n", criterion.name.c_str(),
                  failure.message.c_str());
      ++failures;
    } catch (const std::exception& e) {
      std::printf("[FAIL] %s -- unexpected error: %s\n", criterion.name.c_str(),
                  e.what());
      ++failures;
    }
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all runnable criteria passed\n");
  return 0;
}
