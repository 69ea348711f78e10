#pragma once

#include <utility>
#include <vector>

#include "chordweight/casimir_poly.hpp"

namespace chordweight {

/// Stirling number of the second kind S(n, m), from the triangle
/// S(n,m) = S(n-1,m-1) + m S(n-1,m), S(0,0) = 1.
Integer stirling2(unsigned n, unsigned m);

/// x (x-1) ... (x-k+1); one for k = 0.
Rational falling_factorial(const Rational& x, unsigned k);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
/// n! / (parts[0]! parts[1]! ...); the parts must sum to n.
Integer multinomial(unsigned n, const std::vector<unsigned>& parts);

/// Newton-form interpolation through the given (abscissa, value) points.
/// Returns the unique polynomial of degree < points.size(). Throws
/// std::invalid_argument on a repeated abscissa.
CasimirPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace chordweight
