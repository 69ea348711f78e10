#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "chordweight/casimir_poly.hpp"
#include "chordweight/graph.hpp"
#include "chordweight/series.hpp"

namespace chordweight {

/// Rational linear combination of isomorphism classes of graphs. Terms are
/// keyed by certificate and represented by the canonically labelled graph.
class GraphCombo {
 public:
  GraphCombo() = default;
  static GraphCombo single(const Graph& g, const Rational& coeff = 1);

  void add(const Graph& g, const Rational& coeff);
  void add(const GraphCombo& other, const Rational& scale = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Certificate, std::pair<Graph, Rational>>& terms() const { return terms_; }
  Rational coeff(const Graph& g) const;

  /// Common vertex count of all terms, -1 for the zero combination. Throws
  /// std::invalid_argument if the grades differ.
  int grade() const;

  friend GraphCombo operator+(GraphCombo a, const GraphCombo& b) {
    a.add(b);
    return a;
  }
  friend GraphCombo operator-(GraphCombo a, const GraphCombo& b) {
    a.add(b, -1);
    return a;
  }
  friend GraphCombo operator*(const Rational& s, const GraphCombo& a);
  /// Bilinear extension of disjoint union.
  friend GraphCombo operator*(const GraphCombo& a, const GraphCombo& b);
  friend bool operator==(const GraphCombo& a, const GraphCombo& b);

  /// Linear extension of a graph invariant.
  CasimirPoly evaluate(const std::function<CasimirPoly(const Graph&)>& w) const;

 private:
  std::map<Certificate, std::pair<Graph, Rational>> terms_;
};

/// [{"graph": "n; u-v,...", "coeff": "p/q"}, ...]
nlohmann::json to_json(const GraphCombo& x);
GraphCombo combo_from_json(const nlohmann::json& j);

/// Linear combination of tensor products G ⊗ H.
class TensorCombo {
 public:
  void add(const Graph& left, const Graph& right, const Rational& coeff);
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<Certificate, Certificate>, std::tuple<Graph, Graph, Rational>>& terms() const {
    return terms_;
  }
  Rational coeff(const Graph& left, const Graph& right) const;
  /// Sum of all coefficients.
  Rational mass() const;
  friend bool operator==(const TensorCombo& a, const TensorCombo& b);

 private:
  std::map<std::pair<Certificate, Certificate>, std::tuple<Graph, Graph, Rational>> terms_;
};

inline constexpr int kComultiplyMaxVertices = 10;
inline constexpr int kPrimitiveCheckMaxGrade = 8;
inline constexpr int kProjectMaxVertices = 10;

/// Sum over vertex subsets U of G|_U ⊗ G|_{V \ U}.
TensorCombo comultiply(const Graph& g);
TensorCombo comultiply(const GraphCombo& x);

/// Compares (id ⊗ μ)μ(G) with (μ ⊗ id)μ(G) term by term.
bool is_coassociative_on(const Graph& g);

/// μ(x) == 1 ⊗ x + x ⊗ 1. Requires a homogeneous x.
bool is_primitive(const GraphCombo& x);

/// Sum over unordered set partitions of V(G) into blocks V_1..V_m of
/// (-1)^(m-1) (m-1)! G|_{V_1} ... G|_{V_m}.
GraphCombo project_primitive(const Graph& g);

/// Value of a multiplicative invariant on an induced subgraph, selected by
/// vertex mask.
using SubsetInvariant = std::function<CasimirPoly(std::uint32_t)>;

/// The same partition sum pushed through a multiplicative invariant, computed
/// by dynamic programming over vertex subsets of a graph on n vertices.
CasimirPoly project_eval(int vertex_count, const SubsetInvariant& w);
CasimirPoly project_eval(const Graph& g, const std::function<CasimirPoly(const Graph&)>& w);

/// k(a, b) = w(K_{a,b}).
using BipartiteInvariant = std::function<CasimirPoly(int, int)>;

/// w(π(K_{l,n})) for l in {1,2,3} from the collapsed sums: partitions are
/// grouped by how the left part is split, and the blocks made of right-part
/// vertices only are summed in closed form.
CasimirPoly project_bipartite_eval(int l, int n, const BipartiteInvariant& k);

/// EGF sum_n w(π(K_{l,n})) x^(n+l) / n! up to x^order, built from the EGFs
/// of w(K_{l',n}) for l' <= l.
SeriesX projection_egf(int l, const BipartiteInvariant& k, int order);

/// sum_n k(l, n) x^(n+l) / n! up to x^order.
SeriesX bipartite_egf(int l, const BipartiteInvariant& k, int order);

}  // namespace chordweight
