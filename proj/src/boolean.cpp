#include "aclus/boolean.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace aclus {

// ---------------------------------------------------------------------------
// VariableContext

std::shared_ptr<const VariableContext> VariableContext::create(
    std::vector<std::string> names) {
  if (names.empty()) {
    fail(errc::invalid_argument, "variable context needs at least one name");
  }
  if (names.size() > kMaxVariables) {
    fail(errc::invalid_argument,
         "variable context supports at most " + std::to_string(kMaxVariables) +
             " variables, got " + std::to_string(names.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names) {
    if (name.empty()) {
      fail(errc::invalid_argument, "variable names must be non-empty");
    }
    if (!seen.insert(name).second) {
      fail(errc::invalid_argument, "duplicate variable name '" + name + "'");
    }
  }
  return std::shared_ptr<const VariableContext>(
      new VariableContext(std::move(names)));
}

std::optional<std::size_t> VariableContext::index_of(
    std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial / Assignment

std::vector<std::size_t> Monomial::variable_indices() const {
  std::vector<std::size_t> out;
  std::uint32_t m = mask_;
  while (m != 0) {
    std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

Assignment::Assignment(std::uint32_t bits, std::size_t size)
    : bits_(bits), size_(size) {
  if (size > VariableContext::kMaxVariables) {
    fail(errc::invalid_argument, "assignment length exceeds variable limit");
  }
  if (size < 32 && (bits >> size) != 0) {
    fail(errc::invalid_argument, "assignment has bits beyond its length");
  }
}

Assignment Assignment::from_bits(std::span<const int> bits) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) {
      fail(errc::invalid_argument, "assignment entries must be 0 or 1");
    }
    if (bits[i]) mask |= std::uint32_t{1} << i;
  }
  return Assignment(mask, bits.size());
}

Assignment Assignment::from_string(std::string_view text) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      mask |= std::uint32_t{1} << i;
    } else if (text[i] != '0') {
      fail(errc::invalid_argument, "assignment string must contain only 0/1");
    }
  }
  return Assignment(mask, text.size());
}

std::string Assignment::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::lex, {}); }

MonomialOrder MonomialOrder::weighted_lex(std::vector<std::int64_t> weights) {
  for (auto w : weights) {
    if (w < 0) {
      fail(errc::invalid_argument, "monomial order weights must be non-negative");
    }
  }
  return MonomialOrder(Kind::weighted_lex, std::move(weights));
}

std::int64_t MonomialOrder::weighted_degree(Monomial m) const {
  std::int64_t total = 0;
  std::uint32_t mask = m.mask();
  while (mask != 0) {
    std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
    if (i >= weights_.size()) {
      fail(errc::context_mismatch,
           "monomial uses variable " + std::to_string(i) +
               " beyond the weight vector length " +
               std::to_string(weights_.size()));
    }
    total += weights_[i];
    mask &= mask - 1;
  }
  return total;
}

// Lex: the leftmost variable where the exponent vectors differ decides; the
// monomial containing it is greater.
static std::strong_ordering lex_compare(Monomial a, Monomial b) {
  std::uint32_t diff = a.mask() ^ b.mask();
  if (diff == 0) return std::strong_ordering::equal;
  std::size_t i = static_cast<std::size_t>(std::countr_zero(diff));
  return a.contains(i) ? std::strong_ordering::greater
                       : std::strong_ordering::less;
}

std::strong_ordering MonomialOrder::compare(Monomial a, Monomial b) const {
  if (kind_ == Kind::weighted_lex) {
    std::int64_t wa = weighted_degree(a);
    std::int64_t wb = weighted_degree(b);
    if (wa != wb) {
      return wa > wb ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return lex_compare(a, b);
}

// ---------------------------------------------------------------------------
// BooleanPolynomial

void require_same_context(const BooleanPolynomial& a,
                          const BooleanPolynomial& b) {
  if (a.context_ptr() == b.context_ptr()) return;
  if (a.context() == b.context()) return;
  fail(errc::context_mismatch,
       "polynomials belong to different variable contexts");
}

static void require_index(const VariableContext& ctx, std::size_t index) {
  if (index >= ctx.size()) {
    fail(errc::invalid_argument,
         "variable index " + std::to_string(index) + " out of range");
  }
}

BooleanPolynomial BooleanPolynomial::zero(
    std::shared_ptr<const VariableContext> ctx) {
  return BooleanPolynomial(std::move(ctx), {});
}

BooleanPolynomial BooleanPolynomial::one(
    std::shared_ptr<const VariableContext> ctx) {
  return BooleanPolynomial(std::move(ctx), {Monomial::one()});
}

BooleanPolynomial BooleanPolynomial::variable(
    std::shared_ptr<const VariableContext> ctx, std::size_t index) {
  require_index(*ctx, index);
  return BooleanPolynomial(std::move(ctx), {Monomial::variable(index)});
}

BooleanPolynomial BooleanPolynomial::monomial(
    std::shared_ptr<const VariableContext> ctx, Monomial m) {
  if (m.mask() != 0) {
    std::size_t top = 31 - static_cast<std::size_t>(std::countl_zero(m.mask()));
    require_index(*ctx, top);
  }
  return BooleanPolynomial(std::move(ctx), {m});
}

// Sorts and cancels equal monomials in pairs.
static void canonicalize(std::vector<Monomial>& monomials) {
  std::sort(monomials.begin(), monomials.end());
  std::size_t out = 0;
  std::size_t i = 0;
  while (i < monomials.size()) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) monomials[out++] = monomials[i];
    i = j;
  }
  monomials.resize(out);
}

BooleanPolynomial BooleanPolynomial::from_monomials(
    std::shared_ptr<const VariableContext> ctx, std::vector<Monomial> monomials) {
  for (Monomial m : monomials) {
    if (m.mask() != 0) {
      std::size_t top = 31 - static_cast<std::size_t>(std::countl_zero(m.mask()));
      require_index(*ctx, top);
    }
  }
  canonicalize(monomials);
  return BooleanPolynomial(std::move(ctx), std::move(monomials));
}

bool BooleanPolynomial::has_monomial(Monomial m) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), m);
}

BooleanPolynomial BooleanPolynomial::operator+(
    const BooleanPolynomial& other) const {
  require_same_context(*this, other);
  std::vector<Monomial> out;
  out.reserve(monomials_.size() + other.monomials_.size());
  auto a = monomials_.begin();
  auto b = other.monomials_.begin();
  while (a != monomials_.end() && b != other.monomials_.end()) {
    if (*a < *b) {
      out.push_back(*a++);
    } else if (*b < *a) {
      out.push_back(*b++);
    } else {
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, monomials_.end());
  out.insert(out.end(), b, other.monomials_.end());
  return BooleanPolynomial(ctx_, std::move(out));
}

BooleanPolynomial BooleanPolynomial::operator*(
    const BooleanPolynomial& other) const {
  require_same_context(*this, other);
  std::vector<Monomial> out;
  out.reserve(monomials_.size() * other.monomials_.size());
  for (Monomial a : monomials_) {
    for (Monomial b : other.monomials_) {
      out.push_back(a * b);
    }
  }
  canonicalize(out);
  return BooleanPolynomial(ctx_, std::move(out));
}

BooleanPolynomial BooleanPolynomial::times(Monomial m) const {
  std::vector<Monomial> out;
  out.reserve(monomials_.size());
  for (Monomial a : monomials_) out.push_back(a * m);
  canonicalize(out);
  return BooleanPolynomial(ctx_, std::move(out));
}

BooleanPolynomial BooleanPolynomial::substitute_one(std::size_t index) const {
  require_index(*ctx_, index);
  std::uint32_t bit = std::uint32_t{1} << index;
  std::vector<Monomial> out;
  out.reserve(monomials_.size());
  for (Monomial a : monomials_) out.push_back(Monomial(a.mask() & ~bit));
  canonicalize(out);
  return BooleanPolynomial(ctx_, std::move(out));
}

bool BooleanPolynomial::evaluate(const Assignment& assignment) const {
  if (assignment.size() != ctx_->size()) {
    fail(errc::context_mismatch,
         "assignment length " + std::to_string(assignment.size()) +
             " does not match variable count " + std::to_string(ctx_->size()));
  }
  bool acc = false;
  for (Monomial m : monomials_) {
    if ((m.mask() & assignment.bits()) == m.mask()) acc = !acc;
  }
  return acc;
}

Monomial BooleanPolynomial::leading_monomial(const MonomialOrder& order) const {
  if (monomials_.empty()) {
    fail(errc::zero_polynomial, "the zero polynomial has no leading monomial");
  }
  Monomial best = monomials_[0];
  for (std::size_t i = 1; i < monomials_.size(); ++i) {
    if (order.greater(monomials_[i], best)) best = monomials_[i];
  }
  return best;
}

bool operator==(const BooleanPolynomial& a, const BooleanPolynomial& b) {
  if (a.ctx_ != b.ctx_ && !(*a.ctx_ == *b.ctx_)) return false;
  return a.monomials_ == b.monomials_;
}

BooleanPolynomial complement(const BooleanPolynomial& p) {
  return p + BooleanPolynomial::one(p.context_ptr());
}

BooleanPolynomial disjunction(const BooleanPolynomial& p,
                              const BooleanPolynomial& q) {
  return p + q + p * q;
}

BooleanPolynomial conjunction(const BooleanPolynomial& p,
                              const BooleanPolynomial& q) {
  return p * q;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render(Monomial m, const VariableContext& ctx) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i : m.variable_indices()) {
    if (!out.empty()) out += "*";
    out += ctx.name(i);
  }
  return out;
}

std::string render(const BooleanPolynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::vector<Monomial> terms(p.monomials().begin(), p.monomials().end());
  std::sort(terms.begin(), terms.end(),
            [&](Monomial a, Monomial b) { return order.greater(a, b); });
  std::string out;
  for (Monomial m : terms) {
    if (!out.empty()) out += " + ";
    out += render(m, p.context());
  }
  return out;
}

std::string render(const BooleanPolynomial& p) {
  return render(p, MonomialOrder::lex());
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text,
                   std::shared_ptr<const VariableContext> ctx)
      : text_(text), ctx_(std::move(ctx)) {}

  BooleanPolynomial parse() {
    BooleanPolynomial p = parse_poly();
    skip_ws();
    if (pos_ != text_.size()) {
      error("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(errc::parse_error,
         "parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  BooleanPolynomial parse_poly() {
    BooleanPolynomial p = parse_term();
    while (peek_is('+')) {
      ++pos_;
      p = p + parse_term();
    }
    return p;
  }

  BooleanPolynomial parse_term() {
    BooleanPolynomial p = parse_factor();
    while (peek_is('*')) {
      ++pos_;
      p = p * parse_factor();
    }
    return p;
  }

  BooleanPolynomial parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) error("expected a factor");

    // Longest context-name match wins, so headers of any shape stay parsable.
    std::size_t best_len = 0;
    std::size_t best_index = 0;
    std::string_view rest = text_.substr(pos_);
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
      const std::string& name = ctx_->name(i);
      if (name.size() > best_len && rest.starts_with(name)) {
        best_len = name.size();
        best_index = i;
      }
    }
    if (best_len > 1 || (best_len == 1 && rest[0] != '0' && rest[0] != '1')) {
      pos_ += best_len;
      return BooleanPolynomial::variable(ctx_, best_index);
    }

    char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      return BooleanPolynomial::zero(ctx_);
    }
    if (c == '1') {
      ++pos_;
      return BooleanPolynomial::one(ctx_);
    }
    if (c == '(') {
      ++pos_;
      BooleanPolynomial p = parse_poly();
      if (!peek_is(')')) error("expected ')'");
      ++pos_;
      return p;
    }

    std::size_t end = pos_;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) ||
            text_[end] == '_')) {
      ++end;
    }
    if (end > pos_) {
      error("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) +
            "'");
    }
    error("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::shared_ptr<const VariableContext> ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

BooleanPolynomial parse_polynomial(std::string_view text,
                                   std::shared_ptr<const VariableContext> ctx) {
  return PolynomialParser(text, std::move(ctx)).parse();
}

}  // namespace aclus
