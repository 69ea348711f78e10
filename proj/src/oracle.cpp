#include "chordweight/oracle.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "chordweight/combinatorics.hpp"

namespace chordweight::oracle {

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix out(dim);
  for (int i = 0; i < dim; ++i) out(i, i) = 1;
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(a.dim_);
  for (int i = 0; i < a.dim_; ++i) {
    for (int k = 0; k < a.dim_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < a.dim_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

bool IntMatrix::is_scalar() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (i == j ? (*this)(i, j) != (*this)(0, 0) : (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

Irrep irrep(int dim) {
  if (dim < 1) throw std::invalid_argument("irrep dimension must be positive");
  const int m = dim - 1;
  Irrep rep{dim, IntMatrix(dim), IntMatrix(dim), IntMatrix(dim)};
  for (int k = 0; k <= m; ++k) {
    rep.h(k, k) = m - 2 * k;
    if (k < m) rep.f(k + 1, k) = 1;
    if (k > 0) rep.e(k - 1, k) = k * (m - k + 1);
  }
  return rep;
}

Rational casimir_scalar(const Irrep& rep) {
  // 2(EF + FE) + H^2 keeps everything integral.
  IntMatrix twice = rep.e * rep.f + rep.f * rep.e;
  twice = twice + twice + rep.h * rep.h;
  if (!twice.is_scalar()) throw std::logic_error("Casimir matrix is not scalar");
  return make_rational(twice(0, 0), 2);
}

namespace {

struct SparseEntry {
  int row, col;
  Integer value;
};

std::vector<SparseEntry> nonzeros(const IntMatrix& m) {
  std::vector<SparseEntry> out;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (m(i, j) != 0) out.push_back({i, j, m(i, j)});
    }
  }
  return out;
}

// out = m * x for sparse x.
void multiply_into(const IntMatrix& m, const std::vector<SparseEntry>& x, IntMatrix& out) {
  const int d = m.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out(i, j) = 0;
  }
  for (const auto& entry : x) {
    for (int i = 0; i < d; ++i) {
      if (m(i, entry.row) != 0) out(i, entry.col) += m(i, entry.row) * entry.value;
    }
  }
}

// Pair p assigns (first[p], second[p]) to the two endpoints of a chord; the
// (H, H/2) pair is applied as (H, H) with a factor 1/2 tracked separately.
struct LabellingSum {
  const std::vector<int>& word;
  std::array<std::vector<SparseEntry>, 3> first;
  std::array<std::vector<SparseEntry>, 3> second;
  std::vector<int> assignment;  // per chord label, -1 while unassigned
  std::vector<IntMatrix> prefix;
  IntMatrix total;
  int order;

  void run(std::size_t pos, int halves) {
    if (pos == word.size()) {
      // Scale by 2^(order - halves) so every leaf stays integral.
      Integer scale = Integer(1) << (order - halves);
      const IntMatrix& m = prefix[pos];
      for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) total(i, j) += m(i, j) * scale;
      }
      return;
    }
    const int label = word[pos];
    int& slot = assignment[label - 1];
    if (slot < 0) {
      for (int p = 0; p < 3; ++p) {
        slot = p;
        multiply_into(prefix[pos], first[p], prefix[pos + 1]);
        run(pos + 1, halves + (p == 2 ? 1 : 0));
      }
      slot = -1;
    } else {
      multiply_into(prefix[pos], second[slot], prefix[pos + 1]);
      run(pos + 1, halves);
    }
  }
};

}  // namespace

Rational raw_eval(const ChordDiagram& d, int dim, int max_order) {
  if (d.order() > max_order) {
    throw std::invalid_argument("oracle supports diagrams of order at most " + std::to_string(max_order));
  }
  const Irrep rep = irrep(dim);
  LabellingSum sum{d.word(), {nonzeros(rep.e), nonzeros(rep.f), nonzeros(rep.h)},
                   {nonzeros(rep.f), nonzeros(rep.e), nonzeros(rep.h)},
                   std::vector<int>(d.order(), -1), std::vector<IntMatrix>(d.word().size() + 1, IntMatrix(dim)),
                   IntMatrix(dim), d.order()};
  sum.prefix[0] = IntMatrix::identity(dim);
  sum.run(0, 0);
  if (!sum.total.is_scalar()) {
    throw std::logic_error("labelling sum is not a scalar matrix for " + d.to_string());
  }
  return make_rational(sum.total(0, 0), Integer(1) << d.order());
}

namespace {

CasimirPoly trace_form_poly(const ChordDiagram& d, int max_order) {
  const int n = d.order();
  std::vector<std::pair<Rational, Rational>> points;
  for (int dim = 1; dim <= n + 1; ++dim) {
    const Rational casimir = make_rational(dim * dim - 1, 2);
    for (const auto& [x, y] : points) {
      if (x == casimir) throw std::logic_error("interpolation abscissas collide");
    }
    points.emplace_back(casimir, raw_eval(d, dim, max_order));
  }
  return interpolate(points);
}

Calibration compute_calibration() {
  const CasimirPoly one = trace_form_poly(parse_dow("1 1"), kOracleMaxOrder);
  const CasimirPoly two = trace_form_poly(parse_dow("1 2 1 2"), kOracleMaxOrder);
  const Rational a1 = one.coeff(1);
  const Rational a2 = two.coeff(2);
  const Rational beta = two.coeff(1);
  if (one.degree() != 1 || one.coeff(0) != 0 || two.degree() != 2 || two.coeff(0) != 0 || beta == 0 ||
      a2 != a1 * a1) {
    throw std::logic_error("oracle calibration failed: one chord gives " + one.to_string() +
                           ", two crossing chords give " + two.to_string());
  }
  Calibration cal;
  cal.chord_factor = -a1 / beta;
  cal.variable_scale = -beta / (a1 * a1);
  return cal;
}

}  // namespace

const Calibration& calibration() {
  static const Calibration cal = compute_calibration();
  return cal;
}

CasimirPoly eval_oracle(const ChordDiagram& d, int max_order) {
  if (d.order() > max_order) {
    throw std::invalid_argument("oracle supports diagrams of order at most " + std::to_string(max_order));
  }
  if (d.order() == 0) return CasimirPoly::constant(1);
  const Calibration& cal = calibration();
  Rational factor = 1;
  for (int i = 0; i < d.order(); ++i) factor *= cal.chord_factor;
  return trace_form_poly(d, max_order).rescale_variable(cal.variable_scale) * factor;
}

}  // namespace chordweight::oracle
