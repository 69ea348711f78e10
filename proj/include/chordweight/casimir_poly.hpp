#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace chordweight {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds a canonical rational from numerator and denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Dense univariate polynomial in the Casimir variable c with rational
/// coefficients. Index i holds the coefficient of c^i; trailing zeros are
/// never stored, so the zero polynomial has no coefficients.
class CasimirPoly {
 public:
  CasimirPoly() = default;
  explicit CasimirPoly(std::vector<Rational> coeffs);
  CasimirPoly(std::initializer_list<long> coeffs);

  static CasimirPoly constant(const Rational& value);
  static CasimirPoly monomial(std::size_t power, const Rational& coeff = 1);
  /// The variable c itself.
  static CasimirPoly c();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t power) const;

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  CasimirPoly& operator+=(const CasimirPoly& rhs);
  CasimirPoly& operator-=(const CasimirPoly& rhs);
  CasimirPoly& operator*=(const CasimirPoly& rhs);
  CasimirPoly& operator*=(const Rational& scalar);

  friend CasimirPoly operator+(CasimirPoly a, const CasimirPoly& b) { return a += b; }
  friend CasimirPoly operator-(CasimirPoly a, const CasimirPoly& b) { return a -= b; }
  friend CasimirPoly operator*(const CasimirPoly& a, const CasimirPoly& b);
  friend CasimirPoly operator*(CasimirPoly a, const Rational& s) { return a *= s; }
  friend CasimirPoly operator*(const Rational& s, CasimirPoly a) { return a *= s; }
  CasimirPoly operator-() const;

  friend bool operator==(const CasimirPoly& a, const CasimirPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Horner evaluation at v.
  Rational eval(const Rational& v) const;

  /// p(lambda * c).
  CasimirPoly rescale_variable(const Rational& lambda) const;

  CasimirPoly pow(unsigned exponent) const;

  /// Human-readable form, e.g. "c^4 - 4c^3 + 8c^2 - 4c".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CasimirPoly& p);

/// {"variable":"c","coeffs":[["num","den"],...]}
nlohmann::json to_json(const CasimirPoly& p);
/// Inverse of to_json; throws std::invalid_argument on schema violations.
CasimirPoly poly_from_json(const nlohmann::json& j);

}  // namespace chordweight
