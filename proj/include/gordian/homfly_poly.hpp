#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gordian/laurent.hpp"

namespace gordian {

/// Element of Z[v^+-1, z^+-1], used for HOMFLY polynomials P(v, z).
///
/// Keys are (v exponent, z exponent). Negative z powers occur for links:
/// the n-component unlink evaluates to ((v^-1 - v) / z)^(n-1).
class HomflyPoly {
 public:
  using Exponent = LaurentPoly::Exponent;
  using Key = std::pair<Exponent, Exponent>;
  using Terms = std::map<Key, Integer>;

  HomflyPoly() = default;
  HomflyPoly(int constant);  // NOLINT
  static HomflyPoly monomial(const Integer& coefficient, Exponent v_exp, Exponent z_exp);

  /// Embeds a one-variable polynomial as p(v) * z^z_exp.
  static HomflyPoly from_laurent(const LaurentPoly& p, Exponent z_exp = 0);

  /// ((v^-1 - v) / z)^(circles - 1), the value of a crossingless diagram.
  static HomflyPoly unlink(int circles);

  /// Parses the text produced by either renderer below. Accepts `v`, `z`
  /// factors in any order, separated by spaces or `*`.
  static HomflyPoly parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(Exponent v_exp, Exponent z_exp) const;

  /// Smallest z exponent; the number of link components is 1 - min_z_exponent()
  /// for any genuine HOMFLY polynomial. Precondition: nonzero.
  Exponent min_z_exponent() const;

  /// Multiplication by v^dv z^dz.
  HomflyPoly shifted(Exponent dv, Exponent dz) const;

  /// Collects the coefficient of z^k as a polynomial in v.
  LaurentPoly z_coefficient(Exponent k) const;

  HomflyPoly& operator+=(const HomflyPoly& rhs);
  HomflyPoly& operator-=(const HomflyPoly& rhs);
  friend HomflyPoly operator+(HomflyPoly lhs, const HomflyPoly& rhs) { return lhs += rhs; }
  friend HomflyPoly operator-(HomflyPoly lhs, const HomflyPoly& rhs) { return lhs -= rhs; }
  friend HomflyPoly operator*(const HomflyPoly& lhs, const HomflyPoly& rhs);
  friend bool operator==(const HomflyPoly&, const HomflyPoly&) = default;

  /// Display order: ascending z power, then ascending v power, e.g.
  /// `2v^2 - v^4 + v^2 z^2`.
  std::string to_string() const;

  /// Cache-file order: ascending v power, then ascending z power.
  std::string to_cache_string() const;

 private:
  void add_term(const Key& key, const Integer& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const HomflyPoly& p);

}  // namespace gordian
