#include "gordian/laurent.hpp"

#include <cctype>
#include <ostream>
#include <vector>

#include "gordian/errors.hpp"

namespace gordian {

LaurentPoly::LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, Integer>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& coefficient, Exponent exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPoly::add_term(Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPoly::has_even_exponents() const noexcept {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly out = p;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

namespace {

void append_monomial(std::string& out, const Integer& magnitude, LaurentPoly::Exponent e) {
  if (e == 0) {
    out += magnitude.str();
    return;
  }
  if (magnitude != 1) out += magnitude.str();
  out += 'v';
  if (e != 1) out += '^' + std::to_string(e);
}

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  Integer digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  std::int64_t signed_small() {
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    Integer value = digits();
    if (value > Integer(1) << 62) fail("exponent out of range");
    auto e = static_cast<std::int64_t>(value);
    return negative ? -e : e;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(ParseError::Kind::Malformed,
                     "polynomial: " + why + " at offset " + std::to_string(pos_) + " in '" +
                         std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    append_monomial(out, negative ? Integer(-c) : c, e);
    first = false;
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  PolyLexer lex(text);
  LaurentPoly out;
  if (lex.done()) lex.fail("empty polynomial");
  bool first = true;
  while (!lex.done()) {
    bool negative = false;
    if (lex.accept('-'))
      negative = true;
    else if (!lex.accept('+') && !first)
      lex.fail("expected '+' or '-'");
    first = false;

    Integer coefficient = 1;
    bool have_coefficient = false;
    if (lex.peek_digit()) {
      coefficient = lex.digits();
      have_coefficient = true;
      lex.accept('*');
    }
    Exponent e = 0;
    if (lex.accept('v')) {
      e = 1;
      if (lex.accept('^')) e = lex.signed_small();
    } else if (!have_coefficient) {
      lex.fail("expected a term");
    }
    out.add_term(e, negative ? Integer(-coefficient) : coefficient);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly result = 1;
  LaurentPoly square = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1u;
    if (exponent > 0) square *= square;
  }
  return result;
}

Integer eval_at_one(const LaurentPoly& p) {
  Integer sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

Integer derivative_at_one(const LaurentPoly& p) {
  Integer sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * e;
  return sum;
}

LaurentPoly substitute_v_inverse(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out += LaurentPoly::monomial(c, -e);
  return out;
}

namespace {

// Dense coefficients c[0..n] of v^-low * p, so c[0] != 0.
std::vector<Integer> dense_from_lowest(const LaurentPoly& p) {
  const auto low = p.low_exponent();
  std::vector<Integer> dense(static_cast<std::size_t>(p.high_exponent() - low) + 1);
  for (const auto& [e, c] : p.terms()) dense[static_cast<std::size_t>(e - low)] = c;
  return dense;
}

LaurentPoly from_dense(const std::vector<Integer>& dense, LaurentPoly::Exponent low) {
  LaurentPoly out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out += LaurentPoly::monomial(dense[i], low + static_cast<std::int64_t>(i));
  return out;
}

LaurentPoly sign_normalized(LaurentPoly f) {
  Integer at_one = eval_at_one(f);
  bool flip = at_one != 0 ? at_one < 0 : f.terms().rbegin()->second < 0;
  return flip ? -f : f;
}

}  // namespace

std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
  if (p.is_zero()) return LaurentPoly{};

  // Both normalized to lowest exponent 0; then plain long division over Z
  // from the top. A unit-free divisor with nonzero constant term divides p in
  // the Laurent ring iff it divides it in Z[v].
  std::vector<Integer> rem = dense_from_lowest(p);
  const std::vector<Integer> div = dense_from_lowest(d);
  if (rem.size() < div.size()) return std::nullopt;

  const std::size_t qlen = rem.size() - div.size() + 1;
  std::vector<Integer> quot(qlen);
  const Integer& lead = div.back();
  for (std::size_t step = qlen; step-- > 0;) {
    Integer& top = rem[step + div.size() - 1];
    if (top == 0) continue;
    Integer q, r;
    boost::multiprecision::divide_qr(top, lead, q, r);
    if (r != 0) return std::nullopt;
    quot[step] = q;
    for (std::size_t j = 0; j < div.size(); ++j) rem[step + j] -= q * div[j];
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return from_dense(quot, p.low_exponent() - d.low_exponent());
}

std::optional<LaurentPoly> sqrt_exact(const LaurentPoly& p) {
  if (p.is_zero()) return LaurentPoly{};
  const auto low = p.low_exponent();
  const auto span = p.high_exponent() - low;
  if (low % 2 != 0 || span % 2 != 0) return std::nullopt;

  const std::vector<Integer> c = dense_from_lowest(p);
  if (c[0] < 0) return std::nullopt;
  Integer f0 = boost::multiprecision::sqrt(c[0]);
  if (f0 * f0 != c[0]) return std::nullopt;

  // Coefficients of the root from the bottom: c_k = 2 f_0 f_k + sum_{0<i<k} f_i f_{k-i}.
  const std::size_t half = static_cast<std::size_t>(span / 2);
  std::vector<Integer> f(half + 1);
  f[0] = f0;
  const Integer two_f0 = 2 * f0;
  for (std::size_t k = 1; k <= half; ++k) {
    Integer acc = c[k];
    for (std::size_t i = 1; i < k; ++i) acc -= f[i] * f[k - i];
    Integer q, r;
    boost::multiprecision::divide_qr(acc, two_f0, q, r);
    if (r != 0) return std::nullopt;
    f[k] = q;
  }
  LaurentPoly root = from_dense(f, low / 2);
  if (root * root != p) return std::nullopt;
  return sign_normalized(std::move(root));
}

std::optional<LaurentPoly> is_admissible_square(const LaurentPoly& p) {
  if (eval_at_one(p) != 1 || derivative_at_one(p) != 0) return std::nullopt;
  auto root = sqrt_exact(p);
  if (!root) return std::nullopt;
  // p(1) = 1 forces f(1) = +-1; normalization already picked f(1) = 1.
  if (eval_at_one(*root) != 1 || derivative_at_one(*root) != 0) return std::nullopt;
  if (!root->has_even_exponents()) return std::nullopt;
  return root;
}

}  // namespace gordian
