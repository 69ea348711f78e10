#include "chordweight/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chordweight {

SeriesX::SeriesX(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series truncation order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

SeriesX::SeriesX(std::vector<CasimirPoly> coeffs, int order) : SeriesX(order) {
  if (coeffs.size() > coeffs_.size()) {
    throw std::invalid_argument("series has coefficients beyond its truncation order");
  }
  std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

SeriesX SeriesX::monomial(int power, const CasimirPoly& coeff, int order) {
  SeriesX out(order);
  if (power < 0) throw std::invalid_argument("negative power in series monomial");
  if (power <= order) out.coeffs_[power] = coeff;
  return out;
}

const CasimirPoly& SeriesX::coeff(int k) const {
  if (k < 0 || k > order_) {
    throw std::out_of_range("coefficient x^" + std::to_string(k) +
                            " is beyond truncation order " + std::to_string(order_));
  }
  return coeffs_[k];
}

SeriesX operator+(const SeriesX& a, const SeriesX& b) {
  SeriesX out(std::min(a.order_, b.order_));
  for (int k = 0; k <= out.order_; ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

SeriesX operator-(const SeriesX& a, const SeriesX& b) {
  SeriesX out(std::min(a.order_, b.order_));
  for (int k = 0; k <= out.order_; ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

SeriesX operator*(const SeriesX& a, const SeriesX& b) {
  SeriesX out(std::min(a.order_, b.order_));
  for (int i = 0; i <= out.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= out.order_; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

SeriesX operator*(const SeriesX& a, const CasimirPoly& s) {
  SeriesX out = a;
  for (auto& p : out.coeffs_) p *= s;
  return out;
}

SeriesX operator*(const SeriesX& a, const Rational& s) {
  SeriesX out = a;
  for (auto& p : out.coeffs_) p *= s;
  return out;
}

SeriesX SeriesX::operator-() const {
  SeriesX out = *this;
  for (auto& p : out.coeffs_) p = -p;
  return out;
}

SeriesX SeriesX::truncate(int order) const {
  if (order > order_) {
    throw std::out_of_range("cannot extend a series beyond its truncation order");
  }
  SeriesX out(order);
  std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, out.coeffs_.begin());
  return out;
}

SeriesX series_mul(const SeriesX& a, const SeriesX& b) { return a * b; }

SeriesX series_exp(const SeriesX& a) {
  if (!a.coeff(0).is_zero()) {
    throw std::domain_error("series_exp requires a vanishing constant term");
  }
  SeriesX result = SeriesX::monomial(0, CasimirPoly::constant(1), a.order());
  SeriesX term = result;
  // a^k vanishes below x^k, so k <= order suffices.
  for (int k = 1; k <= a.order(); ++k) {
    term = term * a * Rational(1, k);
    result = result + term;
  }
  return result;
}

}  // namespace chordweight
