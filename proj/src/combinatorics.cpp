#include "chordweight/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace chordweight {

Integer stirling2(unsigned n, unsigned m) {
  if (m > n) return 0;
  // Row-by-row over the triangle; row[j] holds S(i, j).
  std::vector<Integer> row(m + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, m); j >= 1; --j) row[j] = row[j - 1] + Integer(j) * row[j];
    row[0] = 0;
  }
  return row[m];
}

Rational falling_factorial(const Rational& x, unsigned k) {
  Rational acc = 1;
  for (unsigned i = 0; i < k; ++i) acc *= x - i;
  return acc;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer multinomial(unsigned n, const std::vector<unsigned>& parts) {
  if (std::accumulate(parts.begin(), parts.end(), 0u) != n) {
    throw std::invalid_argument("multinomial parts must sum to n");
  }
  Integer out = factorial(n);
  for (unsigned p : parts) out /= factorial(p);
  return out;
}

CasimirPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t count = points.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("interpolation abscissas must be pairwise distinct");
      }
    }
  }
  // Divided differences in place: dd[i] becomes f[x_0..x_i].
  std::vector<Rational> dd(count);
  for (std::size_t i = 0; i < count; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  // Expand the Newton form with Horner steps.
  CasimirPoly result;
  for (std::size_t i = count; i-- > 0;) {
    result = result * CasimirPoly(std::vector<Rational>{-points[i].first, 1}) +
             CasimirPoly::constant(dd[i]);
  }
  return result;
}

}  // namespace chordweight
