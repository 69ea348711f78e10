#include "chordweight/sl2.hpp"

#include <stdexcept>

#include "chordweight/oracle.hpp"

namespace chordweight::sl2 {

namespace {

const CasimirPoly& c_var() {
  static const CasimirPoly c = CasimirPoly::c();
  return c;
}

// (c + shift)^n
CasimirPoly shifted_power(long shift, int n) { return CasimirPoly{shift, 1}.pow(static_cast<unsigned>(n)); }

}  // namespace

bool measure_less(const ChordDiagram& a, const ChordDiagram& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  const int ca = a.crossing_count();
  const int cb = b.crossing_count();
  if (ca != cb) return ca < cb;
  return canonicalize(a) < canonicalize(b);
}

namespace {

// Endpoint pattern of one right-hand term. Points 1..6 are the six special
// endpoints in circular order; 2,3 and 4,5 are adjacent. In a merged term
// points 3 and 5 are dropped and 2, 4 stand for the merged pairs.
struct TermShape {
  bool merged;
  std::vector<std::pair<int, int>> chords;
};

// Relation 1: left-hand chords {1,3} {2,5} {4,6}.
const std::array<TermShape, 5> kRelationOne{{
    {true, {{2, 4}, {1, 6}}},
    {true, {{2, 6}, {1, 4}}},
    {false, {{3, 5}, {4, 6}, {1, 2}}},
    {false, {{2, 4}, {1, 3}, {5, 6}}},
    {false, {{1, 2}, {3, 4}, {5, 6}}},
}};

// Relation 2: left-hand chords {3,6} {1,4} {2,5}.
const std::array<TermShape, 5> kRelationTwo{{
    {true, {{2, 4}, {1, 6}}},
    {true, {{1, 2}, {4, 6}}},
    {false, {{3, 5}, {1, 4}, {2, 6}}},
    {false, {{2, 4}, {3, 6}, {1, 5}}},
    {false, {{2, 6}, {3, 4}, {1, 5}}},
}};

// The other chords, split into the arcs after points 1, 3, 5 and 6.
struct Frame {
  std::array<std::vector<int>, 4> arcs;
  int fresh_label;
};

ChordDiagram build_term(const Frame& frame, const TermShape& shape) {
  std::array<int, 7> label{};
  int next = frame.fresh_label;
  for (auto [u, v] : shape.chords) {
    label[u] = next;
    label[v] = next;
    ++next;
  }
  std::vector<int> word;
  auto put = [&](int point) { word.push_back(label[point]); };
  put(1);
  word.insert(word.end(), frame.arcs[0].begin(), frame.arcs[0].end());
  put(2);
  if (!shape.merged) put(3);
  word.insert(word.end(), frame.arcs[1].begin(), frame.arcs[1].end());
  put(4);
  if (!shape.merged) put(5);
  word.insert(word.end(), frame.arcs[2].begin(), frame.arcs[2].end());
  put(6);
  word.insert(word.end(), frame.arcs[3].begin(), frame.arcs[3].end());
  return ChordDiagram(word);
}

}  // namespace

std::vector<SixTermInstance> six_term_instances(const ChordDiagram& d) {
  std::vector<SixTermInstance> out;
  const auto& w = d.word();
  const int len = static_cast<int>(w.size());
  auto other_end = [&](int pos) {
    auto [e1, e2] = d.endpoints(w[pos]);
    return e1 == pos ? e2 : e1;
  };
  for (int z = 1; z <= d.order(); ++z) {
    auto [e1, e2] = d.endpoints(z);
    for (auto [p2, p5] : {std::pair{e1, e2}, std::pair{e2, e1}}) {
      auto offset = [&](int pos) { return ((pos - p2) % len + len) % len; };
      const int p3 = (p2 + 1) % len;
      const int p4 = (p5 + len - 1) % len;
      const int x = w[p3];
      const int y = w[p4];
      if (x == y || x == z || y == z) continue;
      const int q = other_end(p3);
      const int r = other_end(p4);
      // X and Y must both cross Z.
      if (offset(q) < offset(p5) || offset(r) < offset(p5)) continue;
      const bool first = offset(r) < offset(q);
      const int p1 = first ? q : r;
      const int p6 = first ? r : q;
      std::array<int, 7> point{0, p1, p2, p3, p4, p5, p6};

      Frame frame;
      frame.fresh_label = d.order() + 1;
      // Walk the circle from p1 and file every other endpoint into its arc.
      int arc = -1;
      for (int step = 0; step < len; ++step) {
        const int pos = (p1 + step) % len;
        if (pos == point[1]) arc = 0;
        else if (pos == point[3]) arc = 1;
        else if (pos == point[5]) arc = 2;
        else if (pos == point[6]) arc = 3;
        else if (pos != point[2] && pos != point[4]) frame.arcs[arc].push_back(w[pos]);
      }

      SixTermInstance inst;
      inst.relation = first ? 1 : 2;
      const auto& shapes = first ? kRelationOne : kRelationTwo;
      for (std::size_t t = 0; t < shapes.size(); ++t) inst.terms[t] = build_term(frame, shapes[t]);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

CasimirPoly Evaluator::eval(const ChordDiagram& d) {
  const ChordDiagram canonical = canonicalize(d);
  const std::string key = canonical.key();
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      ++hits_;
      return it->second;
    }
  }
  ++misses_;
  CasimirPoly value = compute(canonical);
  std::lock_guard lock(mutex_);
  cache_.emplace(key, value);
  return value;
}

CasimirPoly Evaluator::compute(const ChordDiagram& d) {
  if (d.order() == 0) return CasimirPoly::constant(1);
  if (d.order() == 1) return c_var();
  const auto parts = component_masks(intersection_graph(d));
  if (parts.size() > 1) {
    CasimirPoly value = CasimirPoly::constant(1);
    for (auto mask : parts) value *= eval(restrict_to_mask(d, mask));
    return value;
  }
  return connected(d);
}

CasimirPoly Evaluator::connected(const ChordDiagram& d) {
  const Graph g = intersection_graph(d);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 1) continue;
    const std::uint32_t rest = ~(std::uint32_t{1} << v) & ((std::uint32_t{1} << g.vertex_count()) - 1);
    return CasimirPoly{-1, 1} * eval(restrict_to_mask(d, rest));
  }
  for (const auto& inst : six_term_instances(d)) {
    bool decreasing = true;
    for (const auto& term : inst.terms) decreasing = decreasing && measure_less(term, d);
    if (!decreasing) continue;
    CasimirPoly value;
    for (std::size_t t = 0; t < inst.terms.size(); ++t) {
      value += eval(inst.terms[t]) * Rational(kSixTermSigns[t]);
    }
    return value;
  }
  if (d.order() <= oracle::kOracleMaxOrder) {
    ++fallbacks_;
    return oracle::eval_oracle(d);
  }
  throw std::logic_error("no decreasing rewrite found for " + d.to_string());
}

Evaluator::Stats Evaluator::stats() const { return {hits_.load(), misses_.load(), fallbacks_.load()}; }

std::size_t Evaluator::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

void Evaluator::clear() {
  std::lock_guard lock(mutex_);
  cache_.clear();
  hits_ = 0;
  misses_ = 0;
  fallbacks_ = 0;
}

Evaluator& shared_evaluator() {
  static Evaluator ev;
  return ev;
}

CasimirPoly eval(const ChordDiagram& d) { return shared_evaluator().eval(d); }

CasimirPoly k_closed(int l, int n) {
  if (n < 0) throw std::invalid_argument("part size must be non-negative");
  const CasimirPoly& c = c_var();
  switch (l) {
    case 0:
      return c.pow(n);
    case 1:
      return c * shifted_power(-1, n);
    case 2:
      return c * (CasimirPoly{-3, 4} * shifted_power(-3, n) + shifted_power(-1, n) * Rational(3) +
                  c.pow(n + 1) * Rational(2)) *
             Rational(1, 6);
    case 3:
      return c *
             (CasimirPoly{6, -11, 4} * shifted_power(-6, n) * Rational(3) +
              CasimirPoly{-3, 4} * shifted_power(-3, n) * Rational(10) +
              CasimirPoly{2, -2, 3} * shifted_power(-1, n) * Rational(6) + c.pow(n + 1) * Rational(5)) *
             Rational(1, 30);
    default:
      throw std::invalid_argument("k_closed needs l in {0,1,2,3}");
  }
}

namespace {

std::vector<CasimirPoly> k2_sequence(int n_max) {
  const CasimirPoly& c = c_var();
  std::vector<CasimirPoly> k{c * c, c * shifted_power(-1, 2)};
  for (int n = 2; n <= n_max; ++n) {
    k.push_back(CasimirPoly{-3, 1} * k[n - 1] + c * (c.pow(n) + shifted_power(-1, n - 1)));
  }
  k.resize(std::max(n_max + 1, 0));
  return k;
}

}  // namespace

CasimirPoly k_rec(int l, int n) {
  if (n < 0) throw std::invalid_argument("part size must be non-negative");
  if (l == 2) return k2_sequence(n)[n];
  if (l != 3) throw std::invalid_argument("k_rec needs l in {2,3}");
  const CasimirPoly& c = c_var();
  std::vector<CasimirPoly> k3{c.pow(3), c * shifted_power(-1, 3), k_closed(2, 3)};
  const auto k2 = k2_sequence(n + 2);
  for (int m = 3; m <= n; ++m) {
    CasimirPoly next = CasimirPoly{-6, -2} * k3[m - 1] + CasimirPoly{0, -18, 3} * k3[m - 2] +
                       k2[m + 2] * Rational(2) + k2[m + 1] * Rational(11) - CasimirPoly{-16, -11, 12} * k2[m] +
                       CasimirPoly{9, 32, -55, 16} * k2[m - 1] - CasimirPoly{0, -27, 48, -33, 6} * k2[m - 2] +
                       c * shifted_power(-1, m - 2) * CasimirPoly{-1, 4} * CasimirPoly{1, -2, 3} -
                       c.pow(m + 1) * Rational(8);
    k3.push_back(std::move(next));
  }
  return k3[n];
}

CasimirPoly k_triangle(int n) { return k_closed(2, n) - c_var() * shifted_power(-1, n); }

BipartiteInvariant closed_form_invariant() {
  return [](int l, int n) {
    // K_{l,n} and K_{n,l} are the same graph.
    return l <= 3 ? k_closed(l, n) : k_closed(n, l);
  };
}

BipartiteInvariant evaluated_invariant(Evaluator& ev) {
  return [&ev](int l, int n) { return ev.eval(bipartite_diagram(l, n)); };
}

SubsetInvariant subdiagram_invariant(Evaluator& ev, const ChordDiagram& d) {
  return [&ev, d](std::uint32_t mask) { return ev.eval(restrict_to_mask(d, mask)); };
}

SeriesX egf_K(int l, int order) { return bipartite_egf(l, closed_form_invariant(), order); }

namespace {

// e^{a x}
SeriesX exp_linear(const CasimirPoly& a, int order) { return series_exp(SeriesX::monomial(1, a, order)); }

SeriesX x_power(int l, const CasimirPoly& coeff, int order) { return SeriesX::monomial(l, coeff, order); }

}  // namespace

SeriesX egf_K_exponential(int l, int order) {
  const CasimirPoly& c = c_var();
  switch (l) {
    case 0:
      return exp_linear(c, order);
    case 1:
      return x_power(1, c, order) * exp_linear(CasimirPoly{-1, 1}, order);
    case 2:
      return x_power(2, c * Rational(1, 6), order) *
             (exp_linear(CasimirPoly{-3, 1}, order) * CasimirPoly{-3, 4} +
              exp_linear(CasimirPoly{-1, 1}, order) * Rational(3) + exp_linear(c, order) * (c * Rational(2)));
    case 3:
      return x_power(3, c * Rational(1, 30), order) *
             (exp_linear(CasimirPoly{-6, 1}, order) * (CasimirPoly{6, -11, 4} * Rational(3)) +
              exp_linear(CasimirPoly{-3, 1}, order) * (CasimirPoly{-3, 4} * Rational(10)) +
              exp_linear(CasimirPoly{-1, 1}, order) * (CasimirPoly{2, -2, 3} * Rational(6)) +
              exp_linear(c, order) * (c * Rational(5)));
    default:
      throw std::invalid_argument("egf_K_exponential needs l in {0,1,2,3}");
  }
}

SeriesX egf_P_exponential(int l, int order) {
  const CasimirPoly& c = c_var();
  auto e = [order](long a) { return exp_linear(CasimirPoly::constant(a), order); };
  switch (l) {
    case 1:
      return x_power(1, c, order) * e(-1);
    case 2:
      return x_power(2, c * Rational(1, 6), order) *
             (e(-3) * CasimirPoly{-3, 4} - e(-2) * (c * Rational(6)) + e(-1) * Rational(3) +
              SeriesX::monomial(0, c * Rational(2), order));
    case 3:
      return x_power(3, c * Rational(1, 30), order) *
             (e(-6) * CasimirPoly{18, -33, 12} - e(-4) * CasimirPoly{0, -45, 60} + e(-3) * CasimirPoly{-30, 40, 60} -
              e(-2) * CasimirPoly{0, 45} - e(-1) * CasimirPoly{-12, 12, 12} + SeriesX::monomial(0, c * Rational(5), order));
    default:
      throw std::invalid_argument("egf_P_exponential needs l in {1,2,3}");
  }
}

namespace {

// Polynomials in s whose coefficients are polynomials in c.
using SPoly = std::vector<CasimirPoly>;

SPoly s_mul(const SPoly& a, const SPoly& b) {
  SPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

SPoly s_add(SPoly a, const SPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

SPoly s_linear(long a0, long a1) { return {CasimirPoly::constant(a0), CasimirPoly::constant(a1)}; }
// coeff * s^j
SPoly s_mono(int j, const CasimirPoly& coeff) {
  SPoly out(j + 1);
  out[j] = coeff;
  return out;
}

std::pair<SPoly, SPoly> ogf_fraction(int l) {
  const CasimirPoly& c = c_var();
  const SPoly cs = s_mono(1, c);
  switch (l) {
    case 1:
      return {cs, s_linear(1, 1)};
    case 2: {
      SPoly inner = s_add(s_linear(1, 2), s_mul(s_mono(1, c * Rational(2)), s_linear(1, 1)));
      SPoly den = s_mul(s_mul(s_linear(1, 1), s_linear(1, 2)), s_linear(1, 3));
      return {s_mul(cs, inner), den};
    }
    case 3: {
      SPoly a = s_mul(s_mul(s_linear(-1, 3), s_linear(1, 2)), s_linear(1, 4));
      SPoly quartic{CasimirPoly::constant(5), CasimirPoly::constant(21), CasimirPoly::constant(10),
                    CasimirPoly::constant(-12)};
      SPoly b = s_mul(s_mono(1, c * Rational(-2)), quartic);
      SPoly e = s_mul(s_mono(2, c * c * Rational(-12)), s_linear(1, 2));
      SPoly den = s_linear(1, 1);
      for (long k : {2, 3, 4, 6}) den = s_mul(den, s_linear(1, k));
      return {s_mul(cs, s_add(s_add(a, b), e)), den};
    }
    default:
      throw std::invalid_argument("ogf_P needs l in {1,2,3}");
  }
}

}  // namespace

std::vector<CasimirPoly> ogf_P(int l, int count) {
  if (count < 0) throw std::invalid_argument("coefficient count must be non-negative");
  const auto [num, den] = ogf_fraction(l);
  // den has constant term 1, so a_n = num_n - sum_{j>=1} den_j a_{n-j}.
  std::vector<CasimirPoly> out(count);
  for (int n = 0; n < count; ++n) {
    CasimirPoly a = n < static_cast<int>(num.size()) ? num[n] : CasimirPoly();
    for (int j = 1; j <= n && j < static_cast<int>(den.size()); ++j) a -= den[j] * out[n - j];
    out[n] = std::move(a);
  }
  return out;
}

std::string to_string(OgfConvention c) {
  return c == OgfConvention::unshifted ? "sum_n w(pi(K_{l,n})) s^n" : "sum_n w(pi(K_{l,n})) s^(n+l)";
}

OgfMatch match_ogf(int l, int n_max, const BipartiteInvariant& k) {
  OgfMatch m;
  m.l = l;
  m.n_max = n_max;
  const auto coeffs = ogf_P(l, n_max + l + 1);
  for (int n = 0; n <= n_max; ++n) {
    const CasimirPoly value = project_bipartite_eval(l, n, k);
    if (!m.unshifted_mismatch && coeffs[n] != value) m.unshifted_mismatch = n;
    if (!m.shifted_mismatch && coeffs[n + l] != value) m.shifted_mismatch = n;
  }
  // The shifted series has nothing below s^l.
  for (int j = 0; j < l && !m.shifted_mismatch; ++j) {
    if (!coeffs[j].is_zero()) m.shifted_mismatch = 0;
  }
  m.unshifted = !m.unshifted_mismatch;
  m.shifted = !m.shifted_mismatch;
  return m;
}

LandoResult lando_degree_check(int l, int n, const BipartiteInvariant& k) {
  LandoResult r;
  r.l = l;
  r.n = n;
  r.degree = project_bipartite_eval(l, n, k).degree();
  r.bound = std::min(l, n);
  if (l + n == 1) r.bound = 1;
  r.exact_required = n >= l && l >= 1;
  r.ok = r.degree <= r.bound && (!r.exact_required || r.degree == r.bound);
  return r;
}

const CasimirPoly& BipartiteTable::k(int l, int n) {
  auto it = values_.find({l, n});
  if (it == values_.end()) it = values_.emplace(std::make_pair(l, n), ev_.eval(bipartite_diagram(l, n))).first;
  return it->second;
}

const CasimirPoly& BipartiteTable::k11(int n) {
  auto it = triangle_.find(n);
  if (it == triangle_.end()) it = triangle_.emplace(n, ev_.eval(tripartite_11n_diagram(n))).first;
  return it->second;
}

}  // namespace chordweight::sl2
