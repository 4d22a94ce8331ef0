#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "gstirling/errors.hpp"

namespace gstirling {

using integer = mpz_class;
using rational = mpq_class;

/// The three formal variables of the value domain. `a` and `b` stand for the
/// two weight parameters, `x` is the indeterminate of connection identities.
enum class var : std::uint8_t { a = 0, b = 1, x = 2 };

const char* var_name(var v);

/// Exponent triple of a power product a^i * b^j * x^l.
struct monomial {
  unsigned deg_a = 0;
  unsigned deg_b = 0;
  unsigned deg_x = 0;

  unsigned total_degree() const { return deg_a + deg_b + deg_x; }
  unsigned degree(var v) const;

  friend monomial operator*(const monomial& lhs, const monomial& rhs) {
    return {lhs.deg_a + rhs.deg_a, lhs.deg_b + rhs.deg_b, lhs.deg_x + rhs.deg_x};
  }
  bool operator==(const monomial&) const = default;
};

/// Graded-lex term order: larger total degree first, ties broken by the
/// exponent triple (a, b, x), lexicographically larger first. Gives the
/// canonical term sequence used for equality, printing and serialization.
struct grlex_greater {
  bool operator()(const monomial& lhs, const monomial& rhs) const;
};

/// Sparse exact polynomial in a, b, x over arbitrary-precision integers.
/// Always canonical: no zero coefficient is ever stored. Immutable value
/// semantics; all operations are pure and safe to share across threads.
class multipoly {
 public:
  using term_map = std::map<monomial, integer, grlex_greater>;

  multipoly() = default;
  explicit multipoly(integer c);
  explicit multipoly(long c);

  static multipoly variable(var v);
  static multipoly term(const monomial& m, integer c);

  bool is_zero() const { return terms_.empty(); }
  const term_map& terms() const { return terms_; }
  /// Coefficient of m, zero if absent.
  integer coeff(const monomial& m) const;

  /// Largest total degree over all terms; 0 for the zero polynomial.
  unsigned total_degree() const;
  unsigned degree(var v) const;
  /// True when every term has the same total degree (vacuously for zero).
  bool is_homogeneous() const;

  multipoly& operator+=(const multipoly& rhs);
  multipoly& operator-=(const multipoly& rhs);
  multipoly& operator*=(const multipoly& rhs);
  multipoly& operator*=(const integer& c);
  multipoly operator-() const;

  friend multipoly operator+(multipoly lhs, const multipoly& rhs) { return lhs += rhs; }
  friend multipoly operator-(multipoly lhs, const multipoly& rhs) { return lhs -= rhs; }
  friend multipoly operator*(const multipoly& lhs, const multipoly& rhs);
  friend multipoly operator*(multipoly lhs, const integer& c) { return lhs *= c; }
  friend multipoly operator*(const integer& c, multipoly rhs) { return rhs *= c; }

  bool operator==(const multipoly&) const = default;

  /// Exact value under the substitution. Every variable occurring in the
  /// polynomial must be assigned; throws missing_assignment otherwise.
  rational eval(const std::map<var, rational>& at) const;

  /// Quotient q with q * c == *this, coefficient-wise exact.
  /// Throws divisor_zero when c == 0, not_divisible on any remainder.
  multipoly exact_div(const integer& c) const;

  /// Quotient q with q * v^e == *this. Throws not_divisible when some
  /// term has v-degree below e.
  multipoly exact_div(var v, unsigned e) const;

  /// Canonical human-readable form, e.g. "2*a^2 + 3*a*b + b^2"; "0" for zero.
  std::string str() const;

  /// JSON array of terms in canonical order, coefficients as decimal
  /// strings: [{"a":2,"b":0,"x":0,"c":"2"}, ...]. "[]" for zero.
  std::string json() const;

 private:
  term_map terms_;
};

/// Parses "p", "-p" or "p/q" into a canonical rational (denominator > 0,
/// lowest terms). Throws parse_error on malformed input or zero denominator.
rational parse_rational(std::string_view text);

/// Canonical decimal form, "p" or "p/q" with q > 1.
std::string rational_str(const rational& value);

}  // namespace gstirling
