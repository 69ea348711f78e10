#pragma once

#include <vector>

#include "chordweight/casimir_poly.hpp"

namespace chordweight {

/// Truncated power series in x with CasimirPoly coefficients. Coefficients are
/// known for x^0 .. x^order; asking for anything beyond throws rather than
/// silently returning zero.
class SeriesX {
 public:
  explicit SeriesX(int order);
  SeriesX(std::vector<CasimirPoly> coeffs, int order);

  /// coeff * x^power, truncated at order.
  static SeriesX monomial(int power, const CasimirPoly& coeff, int order);

  int order() const { return order_; }
  const CasimirPoly& coeff(int k) const;
  const std::vector<CasimirPoly>& coeffs() const { return coeffs_; }

  /// Results of binary operations carry the smaller of the two orders.
  friend SeriesX operator+(const SeriesX& a, const SeriesX& b);
  friend SeriesX operator-(const SeriesX& a, const SeriesX& b);
  friend SeriesX operator*(const SeriesX& a, const SeriesX& b);
  friend SeriesX operator*(const SeriesX& a, const CasimirPoly& s);
  friend SeriesX operator*(const SeriesX& a, const Rational& s);
  SeriesX operator-() const;

  friend bool operator==(const SeriesX& a, const SeriesX& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Same series with a lower truncation order. Throws if order exceeds the
  /// current one.
  SeriesX truncate(int order) const;

 private:
  int order_;
  std::vector<CasimirPoly> coeffs_;
};

SeriesX series_mul(const SeriesX& a, const SeriesX& b);

/// exp(a) = sum a^k / k!. The constant term of a must vanish.
SeriesX series_exp(const SeriesX& a);

}  // namespace chordweight
