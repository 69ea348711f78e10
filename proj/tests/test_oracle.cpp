#include <doctest.h>

#include <random>

#include "chordweight/chord_diagram.hpp"
#include "chordweight/oracle.hpp"

using namespace chordweight;
using namespace chordweight::oracle;

namespace {

const CasimirPoly c = CasimirPoly::c();

using Matrix = std::vector<std::vector<Rational>>;

Matrix zero(int d) { return Matrix(d, std::vector<Rational>(d, 0)); }

Matrix mul(const Matrix& a, const Matrix& b) {
  const int d = static_cast<int>(a.size());
  Matrix r = zero(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < d; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// Naive evaluation: build e, f, h from scratch, then sum the matrix product
// over every assignment of (e,f), (f,e), (h,h/2) to the chords and read off
// the scalar from the trace.
Rational naive_eval(const ChordDiagram& d, int dim) {
  const int m = dim - 1;
  Matrix e = zero(dim), f = zero(dim), h = zero(dim), h2 = zero(dim);
  for (int k = 0; k < dim; ++k) {
    h[k][k] = m - 2 * k;
    h2[k][k] = make_rational(m - 2 * k, 2);
    if (k + 1 < dim) f[k + 1][k] = 1;
    if (k > 0) e[k - 1][k] = k * (m - k + 1);
  }
  const int n = d.order();
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  Rational sum = 0;
  for (long code = 0; code < total; ++code) {
    std::vector<int> choice(n);
    long x = code;
    for (int i = 0; i < n; ++i, x /= 3) choice[i] = static_cast<int>(x % 3);
    Matrix p = zero(dim);
    for (int i = 0; i < dim; ++i) p[i][i] = 1;
    std::vector<bool> seen(n, false);
    for (int label : d.word()) {
      const int i = label - 1;
      const bool first = !seen[i];
      seen[i] = true;
      const Matrix* mat = nullptr;
      switch (choice[i]) {
        case 0: mat = first ? &e : &f; break;
        case 1: mat = first ? &f : &e; break;
        default: mat = first ? &h : &h2; break;
      }
      p = mul(p, *mat);
    }
    Rational tr = 0;
    for (int i = 0; i < dim; ++i) tr += p[i][i];
    sum += tr;
  }
  return sum / dim;
}

IntMatrix bracket(const IntMatrix& a, const IntMatrix& b) { return a * b - b * a; }

IntMatrix scaled(const IntMatrix& a, int s) {
  IntMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) * s;
  return r;
}

}  // namespace

TEST_CASE("irreducible representations") {
  for (int d = 1; d <= 8; ++d) {
    const Irrep r = irrep(d);
    CHECK(r.dim == d);
    CHECK(bracket(r.h, r.e) == scaled(r.e, 2));
    CHECK(bracket(r.h, r.f) == scaled(r.f, -2));
    CHECK(bracket(r.e, r.f) == r.h);
    CHECK(casimir_scalar(r) == make_rational(d * d - 1, 2));
  }
  CHECK(casimir_scalar(irrep(2)) == make_rational(3, 2));
  CHECK(IntMatrix::identity(3).is_scalar());
  CHECK_FALSE(irrep(2).h.is_scalar());
}

TEST_CASE("raw evaluation against a naive oracle") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      for (int dim = 1; dim <= 4; ++dim) CHECK(raw_eval(d, dim) == naive_eval(d, dim));
    }
  }
  // One chord gives the Casimir itself.
  CHECK(raw_eval(parse_dow("1 1"), 3) == 4);
  CHECK_THROWS(raw_eval(enumerate_diagrams(3).front(), 2, 2));
}

TEST_CASE("calibration") {
  const Calibration& cal = calibration();
  CHECK(cal.variable_scale == 2);
  CHECK(cal.chord_factor == make_rational(1, 2));
  CHECK(eval_oracle(ChordDiagram()) == CasimirPoly{1});
  CHECK(eval_oracle(parse_dow("1 1")) == c);
  CHECK(eval_oracle(parse_dow("1 2 1 2")) == c * c - c);
  CHECK(eval_oracle(parse_dow("1 1 2 2")) == c * c);
}

TEST_CASE("oracle values") {
  // Three mutually crossing chords.
  CHECK(eval_oracle(parse_dow("1 2 3 1 2 3")) == CasimirPoly{0, 2, -3, 1});
  // Trees of chords: c (c - 1)^(n-1).
  CHECK(eval_oracle(parse_dow("1 2 1 3 2 3")) == c * (c - CasimirPoly{1}) * (c - CasimirPoly{1}));
  for (int n = 0; n <= 4; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      const CasimirPoly v = eval_oracle(d);
      CHECK(v.degree() == n);
      CHECK(v.coeff(n) == 1);
      CHECK(v == eval_oracle(reversed(d)));
    }
  }
}

TEST_CASE("oracle is multiplicative and rotation invariant") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    const ChordDiagram a = random_diagram(2, rng);
    const ChordDiagram b = random_diagram(3, rng);
    CHECK(eval_oracle(product(a, b)) == eval_oracle(a) * eval_oracle(b));
    std::vector<int> w = b.word();
    std::rotate(w.begin(), w.begin() + 1 + static_cast<long>(rng() % 5), w.end());
    CHECK(eval_oracle(ChordDiagram(w)) == eval_oracle(b));
  }
}
