#include "gordian/homfly_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "gordian/errors.hpp"

namespace gordian {

HomflyPoly::HomflyPoly(int constant) {
  if (constant != 0) terms_.emplace(Key{0, 0}, Integer(constant));
}

HomflyPoly HomflyPoly::monomial(const Integer& coefficient, Exponent v_exp, Exponent z_exp) {
  HomflyPoly p;
  p.add_term({v_exp, z_exp}, coefficient);
  return p;
}

HomflyPoly HomflyPoly::from_laurent(const LaurentPoly& p, Exponent z_exp) {
  HomflyPoly out;
  for (const auto& [e, c] : p.terms()) out.terms_.emplace(Key{e, z_exp}, c);
  return out;
}

HomflyPoly HomflyPoly::unlink(int circles) {
  if (circles < 1) throw std::invalid_argument("unlink needs at least one circle");
  const LaurentPoly factor{{-1, 1}, {1, -1}};
  return from_laurent(pow(factor, static_cast<unsigned>(circles - 1)), -(circles - 1));
}

void HomflyPoly::add_term(const Key& key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer HomflyPoly::coefficient(Exponent v_exp, Exponent z_exp) const {
  auto it = terms_.find({v_exp, z_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

HomflyPoly::Exponent HomflyPoly::min_z_exponent() const {
  Exponent best = terms_.begin()->first.second;
  for (const auto& [key, c] : terms_) best = std::min(best, key.second);
  return best;
}

HomflyPoly HomflyPoly::shifted(Exponent dv, Exponent dz) const {
  HomflyPoly out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(Key{key.first + dv, key.second + dz}, c);
  return out;
}

LaurentPoly HomflyPoly::z_coefficient(Exponent k) const {
  LaurentPoly out;
  for (const auto& [key, c] : terms_)
    if (key.second == k) out += LaurentPoly::monomial(c, key.first);
  return out;
}

HomflyPoly& HomflyPoly::operator+=(const HomflyPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

HomflyPoly& HomflyPoly::operator-=(const HomflyPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

HomflyPoly operator*(const HomflyPoly& lhs, const HomflyPoly& rhs) {
  HomflyPoly out;
  for (const auto& [ka, ca] : lhs.terms_)
    for (const auto& [kb, cb] : rhs.terms_)
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

namespace {

std::string render_term(const Integer& magnitude, HomflyPoly::Exponent v_exp, HomflyPoly::Exponent z_exp) {
  std::string out;
  if (v_exp == 0 && z_exp == 0) return magnitude.str();
  if (magnitude != 1) out += magnitude.str();
  if (v_exp != 0) {
    out += 'v';
    if (v_exp != 1) out += '^' + std::to_string(v_exp);
  }
  if (z_exp != 0) {
    if (v_exp != 0) out += ' ';
    out += 'z';
    if (z_exp != 1) out += '^' + std::to_string(z_exp);
  }
  return out;
}

template <typename Ordered>
std::string render(const Ordered& ordered) {
  if (ordered.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [v_exp, z_exp, c] : ordered) {
    bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += render_term(negative ? Integer(-c) : c, v_exp, z_exp);
    first = false;
  }
  return out;
}

}  // namespace

std::string HomflyPoly::to_string() const {
  std::vector<std::tuple<Exponent, Exponent, Integer>> ordered;
  for (const auto& [key, c] : terms_) ordered.emplace_back(key.first, key.second, c);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return std::pair(std::get<1>(a), std::get<0>(a)) < std::pair(std::get<1>(b), std::get<0>(b));
  });
  return render(ordered);
}

std::string HomflyPoly::to_cache_string() const {
  std::vector<std::tuple<Exponent, Exponent, Integer>> ordered;
  for (const auto& [key, c] : terms_) ordered.emplace_back(key.first, key.second, c);
  return render(ordered);
}

HomflyPoly HomflyPoly::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError(ParseError::Kind::Malformed, "homfly polynomial: " + why + " at offset " +
                                                      std::to_string(pos) + " in '" +
                                                      std::string(text) + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto at = [&](char ch) {
    skip();
    return pos < text.size() && text[pos] == ch;
  };
  auto digits = [&]() -> Integer {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return Integer(std::string(text.substr(start, pos - start)));
  };
  auto exponent = [&]() -> Exponent {
    if (!at('^')) return 1;
    ++pos;
    bool negative = false;
    if (at('-')) {
      negative = true;
      ++pos;
    }
    Integer value = digits();
    if (value > Integer(1) << 62) fail("exponent out of range");
    auto e = static_cast<Exponent>(value);
    return negative ? -e : e;
  };

  HomflyPoly out;
  skip();
  if (pos >= text.size()) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    bool negative = false;
    if (at('-')) {
      negative = true;
      ++pos;
    } else if (at('+')) {
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Integer coefficient = 1;
    bool seen = false;
    skip();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coefficient = digits();
      seen = true;
    }
    Exponent v_exp = 0;
    Exponent z_exp = 0;
    while (true) {
      if (at('*')) ++pos;
      if (at('v')) {
        ++pos;
        v_exp += exponent();
        seen = true;
      } else if (at('z')) {
        ++pos;
        z_exp += exponent();
        seen = true;
      } else {
        break;
      }
    }
    if (!seen) fail("expected a term");
    out.add_term({v_exp, z_exp}, negative ? Integer(-coefficient) : coefficient);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const HomflyPoly& p) { return os << p.to_string(); }

}  // namespace gordian
