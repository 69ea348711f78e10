#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chordweight/casimir_poly.hpp"
#include "chordweight/chord_diagram.hpp"
#include "chordweight/hopf.hpp"
#include "chordweight/series.hpp"

namespace chordweight::sl2 {

/// Memoised evaluator of the sl2 weight system. Safe to share between
/// threads; the cache only ever stores values that were fully computed.
class Evaluator {
 public:
  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    /// Diagrams for which no decreasing rewrite was found and the oracle was
    /// consulted instead. Expected to stay zero.
    std::uint64_t fallbacks = 0;
  };

  CasimirPoly eval(const ChordDiagram& d);
  Stats stats() const;
  std::size_t cache_size() const;
  void clear();

 private:
  CasimirPoly compute(const ChordDiagram& canonical);
  CasimirPoly connected(const ChordDiagram& canonical);

  mutable std::mutex mutex_;
  std::unordered_map<std::string, CasimirPoly> cache_;
  std::atomic<std::uint64_t> hits_{0}, misses_{0}, fallbacks_{0};
};

/// Process-wide evaluator used by the free functions below.
Evaluator& shared_evaluator();
CasimirPoly eval(const ChordDiagram& d);

/// One instance of a six-term relation: the five right-hand diagrams with
/// signs + - + + - whose sum equals the value of the left-hand diagram.
struct SixTermInstance {
  int relation = 0;  // 1 or 2
  std::array<ChordDiagram, 5> terms;
};
inline constexpr std::array<int, 5> kSixTermSigns{1, -1, 1, 1, -1};

/// Every six-term rewrite applicable to d, in a fixed order.
std::vector<SixTermInstance> six_term_instances(const ChordDiagram& d);

/// Termination measure (order, crossings, canonical word).
bool measure_less(const ChordDiagram& a, const ChordDiagram& b);

/// k_{l,n} = w(K_{l,n}) for l in {0,1,2,3} in closed form.
CasimirPoly k_closed(int l, int n);
/// k_{l,n} for l in {2,3} from the recurrences in n.
CasimirPoly k_rec(int l, int n);
/// k_{1,1,n} = k_{2,n} - c(c-1)^n.
CasimirPoly k_triangle(int n);

/// k(l, n) = k_closed(l, n).
BipartiteInvariant closed_form_invariant();
/// k(l, n) = eval(bipartite_diagram(l, n)).
BipartiteInvariant evaluated_invariant(Evaluator& ev);
/// mask -> eval of the sub-diagram on the chords in mask (bit i = label i+1).
SubsetInvariant subdiagram_invariant(Evaluator& ev, const ChordDiagram& d);

/// sum_n k_closed(l, n) x^(n+l) / n! up to x^order.
SeriesX egf_K(int l, int order);

/// The same EGFs for l in {0,1,2,3} written as combinations of exponentials
/// e^{(c-a)x}, expanded independently of k_closed.
SeriesX egf_K_exponential(int l, int order);
/// Closed exponential forms of the projection EGFs, l in {1,2,3}.
SeriesX egf_P_exponential(int l, int order);

/// Coefficients s^0..s^count-1 of the printed rational functions for the
/// ordinary generating functions of w(π(K_{l,n})), l in {1,2,3}.
std::vector<CasimirPoly> ogf_P(int l, int count);

/// Exponent attached to w(π(K_{l,n})) in an OGF: n, or n + l.
enum class OgfConvention { unshifted, shifted };
std::string to_string(OgfConvention c);

struct OgfMatch {
  int l = 0;
  int n_max = 0;
  bool unshifted = false;
  bool shifted = false;
  /// First n at which each convention disagrees, if any.
  std::optional<int> unshifted_mismatch, shifted_mismatch;
};
/// Tests ogf_P(l) against w(π(K_{l,n})), n = 0..n_max, under both exponent
/// conventions.
OgfMatch match_ogf(int l, int n_max, const BipartiteInvariant& k);

/// Degree of w(π(K_{l,n})) against the bipartite Lando bound.
struct LandoResult {
  int l = 0, n = 0;
  int degree = -1;
  int bound = 0;
  bool exact_required = false;
  bool ok = false;
};
/// Bound is min(l, n), raised to 1 for the single vertex K_{1,0} ≅ K_{0,1}
/// whose projection is itself. Equality is required once n >= l >= 1.
LandoResult lando_degree_check(int l, int n, const BipartiteInvariant& k);

/// Values k_{l,n} and k_{1,1,n} gathered from the evaluator on demand.
class BipartiteTable {
 public:
  explicit BipartiteTable(Evaluator& ev) : ev_(ev) {}
  const CasimirPoly& k(int l, int n);
  const CasimirPoly& k11(int n);

 private:
  Evaluator& ev_;
  std::map<std::pair<int, int>, CasimirPoly> values_;
  std::map<int, CasimirPoly> triangle_;
};

}  // namespace chordweight::sl2
