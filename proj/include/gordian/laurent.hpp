#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace gordian {

using Integer = boost::multiprecision::cpp_int;

/// Element of Z[v, v^-1] with arbitrary-precision coefficients.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never
/// stored, so the zero polynomial is the empty map. Values are immutable in
/// spirit: the compound operators exist for local accumulation only.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int constant);  // NOLINT: constants promote implicitly
  LaurentPoly(const Integer& constant);  // NOLINT
  LaurentPoly(std::initializer_list<std::pair<Exponent, Integer>> terms);

  static LaurentPoly monomial(const Integer& coefficient, Exponent exponent);

  /// Parses the canonical ASCII form, e.g. `-v^-4 + 3 - v^2`. Also accepts
  /// `*` between coefficient and variable and terms in any order.
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Precondition for both: !is_zero().
  Exponent low_exponent() const { return terms_.begin()->first; }
  Exponent high_exponent() const { return terms_.rbegin()->first; }

  Integer coefficient(Exponent e) const;

  /// True when every exponent is even, i.e. the value lies in Z[v^2, v^-2].
  bool has_even_exponents() const noexcept;

  /// Multiplication by v^k.
  LaurentPoly shifted(Exponent k) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Ascending exponents, explicit signs, caret exponents: `-v^-4 + 3 - v^2`.
  std::string to_string() const;

 private:
  void add_term(Exponent e, const Integer& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

/// p(1): the sum of all coefficients.
Integer eval_at_one(const LaurentPoly& p);

/// p'(1) = sum of exponent * coefficient.
Integer derivative_at_one(const LaurentPoly& p);

/// v -> v^-1.
LaurentPoly substitute_v_inverse(const LaurentPoly& p);

/// Exact quotient p / d in Z[v, v^-1], or nullopt when d does not divide p.
/// Precondition: d is nonzero. A zero dividend yields zero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// Square root in Z[v, v^-1], or nullopt when p is not a square.
/// The root is sign-normalized: f(1) > 0 when f(1) != 0, otherwise the
/// highest-exponent coefficient is positive.
std::optional<LaurentPoly> sqrt_exact(const LaurentPoly& p);

/// Decides whether p = f^2 with f in Z[v^2, v^-2], f(1) = 1 and f'(1) = 0,
/// returning that f.
std::optional<LaurentPoly> is_admissible_square(const LaurentPoly& p);

}  // namespace gordian
