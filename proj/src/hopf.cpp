#include "chordweight/hopf.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "chordweight/combinatorics.hpp"

namespace chordweight {

namespace {

void check_size(const Graph& g, int bound, const char* what) {
  if (g.vertex_count() > bound) {
    throw std::invalid_argument(std::string(what) + " supports at most " + std::to_string(bound) + " vertices");
  }
}

std::uint32_t full_mask(int n) { return n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1; }

// Sign and magnitude of (-1)^(m-1) (m-1)!.
Rational partition_weight(int blocks) {
  Rational w(factorial(static_cast<unsigned>(blocks - 1)));
  return blocks % 2 == 1 ? w : Rational(-w);
}

}  // namespace

GraphCombo GraphCombo::single(const Graph& g, const Rational& coeff) {
  GraphCombo out;
  out.add(g, coeff);
  return out;
}

void GraphCombo::add(const Graph& g, const Rational& coeff) {
  if (coeff == 0) return;
  Certificate cert = certificate(g);
  auto it = terms_.find(cert);
  if (it == terms_.end()) {
    Graph rep = graph_from_certificate(cert);
    terms_.emplace(std::move(cert), std::make_pair(std::move(rep), coeff));
    return;
  }
  it->second.second += coeff;
  if (it->second.second == 0) terms_.erase(it);
}

void GraphCombo::add(const GraphCombo& other, const Rational& scale) {
  for (const auto& [cert, term] : other.terms_) {
    auto it = terms_.find(cert);
    if (it == terms_.end()) {
      if (scale != 0) terms_.emplace(cert, std::make_pair(term.first, term.second * scale));
      continue;
    }
    it->second.second += term.second * scale;
    if (it->second.second == 0) terms_.erase(it);
  }
}

Rational GraphCombo::coeff(const Graph& g) const {
  auto it = terms_.find(certificate(g));
  return it == terms_.end() ? Rational(0) : it->second.second;
}

int GraphCombo::grade() const {
  int grade = -1;
  for (const auto& [cert, term] : terms_) {
    const int n = term.first.vertex_count();
    if (grade >= 0 && n != grade) throw std::invalid_argument("graph combination is not homogeneous");
    grade = n;
  }
  return grade;
}

GraphCombo operator*(const Rational& s, const GraphCombo& a) {
  GraphCombo out;
  out.add(a, s);
  return out;
}

GraphCombo operator*(const GraphCombo& a, const GraphCombo& b) {
  GraphCombo out;
  for (const auto& [ca, ta] : a.terms_) {
    for (const auto& [cb, tb] : b.terms_) out.add(disjoint_union(ta.first, tb.first), ta.second * tb.second);
  }
  return out;
}

bool operator==(const GraphCombo& a, const GraphCombo& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [cert, term] : a.terms_) {
    auto it = b.terms_.find(cert);
    if (it == b.terms_.end() || it->second.second != term.second) return false;
  }
  return true;
}

CasimirPoly GraphCombo::evaluate(const std::function<CasimirPoly(const Graph&)>& w) const {
  CasimirPoly out;
  for (const auto& [cert, term] : terms_) out += w(term.first) * term.second;
  return out;
}

nlohmann::json to_json(const GraphCombo& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [cert, term] : x.terms()) {
    out.push_back({{"graph", to_edge_list(term.first)}, {"coeff", to_string(term.second)}});
  }
  return out;
}

GraphCombo combo_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("graph combination must be a JSON list");
  GraphCombo out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("graph") || !item.contains("coeff") || !item["graph"].is_string() ||
        !item["coeff"].is_string()) {
      throw std::invalid_argument("graph combination entries need string fields graph and coeff");
    }
    Rational coeff;
    if (coeff.set_str(item["coeff"].get<std::string>(), 10) != 0) {
      throw std::invalid_argument("bad rational coefficient");
    }
    coeff.canonicalize();
    out.add(parse_edge_list(item["graph"].get<std::string>()), coeff);
  }
  return out;
}

void TensorCombo::add(const Graph& left, const Graph& right, const Rational& coeff) {
  if (coeff == 0) return;
  auto key = std::make_pair(certificate(left), certificate(right));
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    Graph l = graph_from_certificate(key.first);
    Graph r = graph_from_certificate(key.second);
    terms_.emplace(std::move(key), std::make_tuple(std::move(l), std::move(r), coeff));
    return;
  }
  std::get<2>(it->second) += coeff;
  if (std::get<2>(it->second) == 0) terms_.erase(it);
}

Rational TensorCombo::coeff(const Graph& left, const Graph& right) const {
  auto it = terms_.find({certificate(left), certificate(right)});
  return it == terms_.end() ? Rational(0) : std::get<2>(it->second);
}

Rational TensorCombo::mass() const {
  Rational total = 0;
  for (const auto& [key, term] : terms_) total += std::get<2>(term);
  return total;
}

bool operator==(const TensorCombo& a, const TensorCombo& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [key, term] : a.terms_) {
    auto it = b.terms_.find(key);
    if (it == b.terms_.end() || std::get<2>(it->second) != std::get<2>(term)) return false;
  }
  return true;
}

TensorCombo comultiply(const Graph& g) {
  check_size(g, kComultiplyMaxVertices, "comultiply");
  TensorCombo out;
  const std::uint32_t all = full_mask(g.vertex_count());
  for (std::uint32_t u = 0;; ++u) {
    out.add(induced(g, u), induced(g, all & ~u), 1);
    if (u == all) break;
  }
  return out;
}

TensorCombo comultiply(const GraphCombo& x) {
  TensorCombo out;
  for (const auto& [cert, term] : x.terms()) {
    const TensorCombo parts = comultiply(term.first);
    for (const auto& [key, t] : parts.terms()) {
      out.add(std::get<0>(t), std::get<1>(t), std::get<2>(t) * term.second);
    }
  }
  return out;
}

bool is_coassociative_on(const Graph& g) {
  using Triple = std::array<Certificate, 3>;
  std::map<Triple, Rational> lhs, rhs;
  const TensorCombo outer = comultiply(g);
  for (const auto& [key, t] : outer.terms()) {
    const auto& [left, right, coeff] = t;
    const TensorCombo split_right = comultiply(right);
    for (const auto& [inner_key, inner] : split_right.terms()) {
      lhs[{key.first, inner_key.first, inner_key.second}] += coeff * std::get<2>(inner);
    }
    const TensorCombo split_left = comultiply(left);
    for (const auto& [inner_key, inner] : split_left.terms()) {
      rhs[{inner_key.first, inner_key.second, key.second}] += coeff * std::get<2>(inner);
    }
  }
  return lhs == rhs;
}

bool is_primitive(const GraphCombo& x) {
  const int grade = x.grade();
  if (grade > kPrimitiveCheckMaxGrade) {
    throw std::invalid_argument("primitivity check supports grade at most " +
                                std::to_string(kPrimitiveCheckMaxGrade));
  }
  const Graph unit(0);
  TensorCombo expected;
  for (const auto& [cert, term] : x.terms()) {
    expected.add(unit, term.first, term.second);
    expected.add(term.first, unit, term.second);
  }
  return comultiply(x) == expected;
}

namespace {

// Restricted growth enumeration of set partitions; block_masks holds the
// blocks built so far.
void for_each_partition(int n, int v, std::vector<std::uint32_t>& block_masks,
                        const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (v == n) {
    visit(block_masks);
    return;
  }
  const std::uint32_t bit = std::uint32_t{1} << v;
  for (std::size_t b = 0; b < block_masks.size(); ++b) {
    block_masks[b] |= bit;
    for_each_partition(n, v + 1, block_masks, visit);
    block_masks[b] &= ~bit;
  }
  block_masks.push_back(bit);
  for_each_partition(n, v + 1, block_masks, visit);
  block_masks.pop_back();
}

}  // namespace

GraphCombo project_primitive(const Graph& g) {
  check_size(g, kProjectMaxVertices, "project_primitive");
  // The unit is not primitive; its projection is zero.
  if (g.vertex_count() == 0) return GraphCombo();
  std::map<Certificate, Rational> sums;
  std::vector<std::uint32_t> blocks;
  for_each_partition(g.vertex_count(), 0, blocks, [&](const std::vector<std::uint32_t>& parts) {
    // The product of the restrictions is G with every edge between blocks removed.
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
      for (auto mask : parts) {
        if ((mask >> u) & (mask >> v) & 1u) {
          edges.emplace_back(u, v);
          break;
        }
      }
    }
    sums[certificate(Graph(g.vertex_count(), edges))] += partition_weight(static_cast<int>(parts.size()));
  });
  GraphCombo out;
  for (const auto& [cert, coeff] : sums) out.add(graph_from_certificate(cert), coeff);
  return out;
}

CasimirPoly project_eval(int vertex_count, const SubsetInvariant& w) {
  if (vertex_count < 0 || vertex_count > kProjectMaxVertices) {
    throw std::invalid_argument("project_eval supports at most " + std::to_string(kProjectMaxVertices) +
                                " vertices");
  }
  if (vertex_count == 0) return CasimirPoly();
  const std::uint32_t all = full_mask(vertex_count);
  std::vector<CasimirPoly> value(static_cast<std::size_t>(all) + 1);
  for (std::uint32_t s = 1; s <= all; ++s) value[s] = w(s);

  // blocks[m][S]: sum over partitions of S into m blocks of the product of
  // block values. The block holding the lowest vertex of S is chosen first.
  std::vector<std::vector<CasimirPoly>> blocks(vertex_count + 1,
                                               std::vector<CasimirPoly>(static_cast<std::size_t>(all) + 1));
  blocks[0][0] = CasimirPoly::constant(1);
  for (int m = 1; m <= vertex_count; ++m) {
    for (std::uint32_t s = 1; s <= all; ++s) {
      if (std::popcount(s) < m) continue;
      const std::uint32_t low = s & (~s + 1);
      const std::uint32_t rest = s & ~low;
      CasimirPoly sum;
      // t ranges over subsets of rest; the block is low | t.
      for (std::uint32_t t = rest;; t = (t - 1) & rest) {
        const auto& tail = blocks[m - 1][rest & ~t];
        if (!tail.is_zero()) sum += value[low | t] * tail;
        if (t == 0) break;
      }
      blocks[m][s] = std::move(sum);
    }
  }
  CasimirPoly out;
  for (int m = 1; m <= vertex_count; ++m) out += blocks[m][all] * partition_weight(m);
  return out;
}

CasimirPoly project_eval(const Graph& g, const std::function<CasimirPoly(const Graph&)>& w) {
  check_size(g, kProjectMaxVertices, "project_eval");
  return project_eval(g.vertex_count(), [&](std::uint32_t mask) { return w(induced(g, mask)); });
}

namespace {

// (-a)^e as a rational.
Rational power_of(long base, unsigned e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), Integer(base).get_mpz_t(), e);
  return Rational(out);
}

}  // namespace

CasimirPoly project_bipartite_eval(int l, int n, const BipartiteInvariant& k) {
  if (l < 1 || l > 3) throw std::invalid_argument("project_bipartite_eval needs l in {1,2,3}");
  if (n < 0) throw std::invalid_argument("part size must be non-negative");
  const unsigned un = static_cast<unsigned>(n);
  const CasimirPoly k01 = k(0, 1);
  std::vector<CasimirPoly> k01_pow(n + 1, CasimirPoly::constant(1));
  for (int i = 1; i <= n; ++i) k01_pow[i] = k01_pow[i - 1] * k01;

  // All left vertices in one block; the right vertices outside it form
  // arbitrary blocks, which sum to (-1)^(n-i).
  CasimirPoly out;
  for (int i = 0; i <= n; ++i) {
    out += k(l, i) * k01_pow[n - i] * (Rational(binomial(un, i)) * power_of(-1, un - i));
  }
  if (l == 1) return out;

  // Left vertices split into two blocks of sizes (l-1, 1): lemma weight
  // -(-2)^(n-j) for the n-j right vertices outside both.
  const Rational pair_splits = l == 2 ? 1 : 3;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= j; ++i) {
      const Rational coeff = Rational(multinomial(un, {unsigned(i), unsigned(j - i), unsigned(n - j)})) *
                             power_of(-2, un - j) * pair_splits;
      out -= k(l - 1, i) * k(1, j - i) * k01_pow[n - j] * coeff;
    }
  }
  if (l == 2) return out;

  // Three singleton left blocks: lemma weight 2(-3)^(n-j).
  for (int j = 0; j <= n; ++j) {
    for (int a = 0; a <= j; ++a) {
      for (int b = 0; a + b <= j; ++b) {
        const Rational coeff =
            Rational(multinomial(un, {unsigned(a), unsigned(b), unsigned(j - a - b), unsigned(n - j)})) *
            power_of(-3, un - j) * 2;
        out += k(1, a) * k(1, b) * k(1, j - a - b) * k01_pow[n - j] * coeff;
      }
    }
  }
  return out;
}

SeriesX bipartite_egf(int l, const BipartiteInvariant& k, int order) {
  if (l < 0) throw std::invalid_argument("part size must be non-negative");
  if (order < l) throw std::invalid_argument("truncation order is below the lowest power x^l");
  std::vector<CasimirPoly> coeffs(order + 1);
  for (int n = 0; n + l <= order; ++n) coeffs[n + l] = k(l, n) * make_rational(1, factorial(n));
  return SeriesX(std::move(coeffs), order);
}

SeriesX projection_egf(int l, const BipartiteInvariant& k, int order) {
  if (l < 1 || l > 3) throw std::invalid_argument("projection_egf needs l in {1,2,3}");
  if (order < l) throw std::invalid_argument("truncation order is below the lowest power x^l");
  const SeriesX damp = series_exp(SeriesX::monomial(1, -k(0, 1), order));
  const SeriesX p1 = bipartite_egf(1, k, order) * damp;
  if (l == 1) return p1;
  const SeriesX p2 = bipartite_egf(2, k, order) * damp - p1 * p1;
  if (l == 2) return p2;
  return bipartite_egf(3, k, order) * damp - p2 * p1 * Rational(3) - p1 * p1 * p1;
}

}  // namespace chordweight
