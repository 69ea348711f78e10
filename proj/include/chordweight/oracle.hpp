#pragma once

#include <vector>

#include "chordweight/casimir_poly.hpp"
#include "chordweight/chord_diagram.hpp"

namespace chordweight::oracle {

/// Dense square matrix with exact integer entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}
  static IntMatrix identity(int dim);

  int dim() const { return dim_; }
  Integer& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Integer& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  bool is_scalar() const;

 private:
  int dim_ = 0;
  std::vector<Integer> entries_;
};

/// The d-dimensional irreducible representation of sl2 in the weight basis
/// v_0..v_m (m = d-1): H v_k = (m-2k) v_k, F v_k = v_{k+1},
/// E v_k = k(m-k+1) v_{k-1}.
struct Irrep {
  int dim = 0;
  IntMatrix e, f, h;
};

Irrep irrep(int dim);

/// Casimir matrix EF + FE + H^2/2 of the trace form, as a rational multiple
/// of the identity. Throws std::logic_error if it is not scalar.
Rational casimir_scalar(const Irrep& rep);

inline constexpr int kOracleMaxOrder = 6;

/// Sum over all 3^n assignments of the dual pairs (E,F), (F,E), (H,H/2) to the
/// chords of the product of the assigned matrices along the word, evaluated
/// in irrep(dim). The sum is central, hence a scalar matrix; returns the
/// scalar. Throws std::logic_error if the sum is not scalar.
Rational raw_eval(const ChordDiagram& d, int dim, int max_order = kOracleMaxOrder);

/// Change of variables tying the trace-form Casimir c' to the normalisation
/// in which one chord evaluates to c and two crossing chords to c(c-1):
/// value(c) = chord_factor^n * p(variable_scale * c).
struct Calibration {
  Rational variable_scale;
  Rational chord_factor;
};

/// Determined once from the one-chord and two-crossing-chord diagrams.
const Calibration& calibration();

/// The weight system value as a polynomial in c, rebuilt by interpolating
/// raw_eval over dimensions 1..n+1.
CasimirPoly eval_oracle(const ChordDiagram& d, int max_order = kOracleMaxOrder);

}  // namespace chordweight::oracle
