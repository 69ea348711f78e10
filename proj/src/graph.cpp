#include "chordweight/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chordweight {

namespace {

std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

}  // namespace

Graph::Graph(int vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw std::invalid_argument("graph vertex count out of range: " + std::to_string(vertex_count));
  }
  adj_.assign(vertex_count, 0);
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : Graph(vertex_count) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    set_edge(u, v, true);
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
}

void Graph::set_edge(int u, int v, bool present) {
  if (present) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  } else {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }
}

int Graph::degree(int v) const { return std::popcount(adj_.at(v)); }

int Graph::edge_count() const {
  int twice = 0;
  for (auto m : adj_) twice += std::popcount(m);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v = u + 1; v < vertex_count(); ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge_toggled(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("cannot toggle a loop");
  Graph out = *this;
  out.set_edge(u, v, !has_edge(u, v));
  return out;
}

Graph complete_bipartite(int l, int n) {
  if (l < 0 || n < 0) throw std::invalid_argument("part sizes must be non-negative");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < n; ++j) edges.emplace_back(i, l + j);
  }
  return Graph(l + n, edges);
}

Graph induced(const Graph& g, std::uint32_t subset) {
  const int n = g.vertex_count();
  if (n < Graph::kMaxVertices && (subset >> n) != 0) {
    throw std::out_of_range("induced subgraph mask names vertices outside the graph");
  }
  std::vector<int> vertices;
  for (int v = 0; v < n; ++v) {
    if (subset & bit(v)) vertices.push_back(v);
  }
  return induced(g, vertices);
}

Graph induced(const Graph& g, const std::vector<int>& vertices) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.vertex_count()) {
      throw std::out_of_range("induced subgraph vertex out of range");
    }
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) throw std::invalid_argument("repeated vertex in subset");
      if (g.has_edge(vertices[i], vertices[j])) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  const int shift = g.vertex_count();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(g.vertex_count() + h.vertex_count(), edges);
}

std::vector<std::uint32_t> component_masks(const Graph& g) {
  std::vector<std::uint32_t> out;
  std::uint32_t seen = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen & bit(s)) continue;
    std::uint32_t comp = bit(s);
    std::uint32_t frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t fresh = g.neighbours(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  for (auto mask : component_masks(g)) out.push_back(induced(g, mask));
  return out;
}

bool is_connected(const Graph& g) { return component_masks(g).size() <= 1; }

std::tuple<Graph, Graph, Graph, Graph> four_term_graphs(const Graph& g, int a, int b) {
  if (a == b) throw std::invalid_argument("four-term vertices must be distinct");
  Graph prime = g.with_edge_toggled(a, b);
  Graph tilde = g;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == a || v == b || !g.has_edge(b, v)) continue;
    tilde = tilde.with_edge_toggled(a, v);
  }
  Graph tilde_prime = tilde.with_edge_toggled(a, b);
  return {g, prime, tilde, tilde_prime};
}

namespace {

// Longest cycle whose smallest vertex is `start`, extending a simple path that
// only visits vertices larger than `start`.
void longest_cycle_from(const Graph& g, int start, int current, std::uint32_t visited, int length,
                        int& best) {
  std::uint32_t next = g.neighbours(current);
  if (length >= 3 && (next & bit(start))) best = std::max(best, length);
  next &= ~visited;
  next &= ~((bit(start) << 1) - 1);
  while (next) {
    int v = std::countr_zero(next);
    next &= next - 1;
    longest_cycle_from(g, start, v, visited | bit(v), length + 1, best);
  }
}

}  // namespace

int circumference(const Graph& g) {
  if (g.vertex_count() > kCircumferenceMaxVertices) {
    throw std::invalid_argument("circumference supports at most " +
                                std::to_string(kCircumferenceMaxVertices) + " vertices");
  }
  int best = 0;
  for (int s = 0; s < g.vertex_count(); ++s) longest_cycle_from(g, s, s, bit(s), 1, best);
  return best;
}

namespace {

using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into earlier cells until the partition is
// equitable. Only the ordered cell structure is consulted, so the result is
// invariant under relabelling.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      std::uint32_t splitter = 0;
      for (int v : cells[s]) splitter |= bit(v);
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (cells[j].size() < 2) continue;
        std::map<int, std::vector<int>> by_count;
        for (int v : cells[j]) by_count[std::popcount(g.neighbours(v) & splitter)].push_back(v);
        if (by_count.size() == 1) continue;
        Cells pieces;
        for (auto& [count, members] : by_count) pieces.push_back(std::move(members));
        cells.erase(cells.begin() + static_cast<long>(j));
        cells.insert(cells.begin() + static_cast<long>(j), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

Certificate leaf_certificate(const Graph& g, const Cells& cells) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) order[k] = cells[k].front();
  Certificate out;
  out.push_back(static_cast<char>(n));
  unsigned char acc = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = static_cast<unsigned char>((acc << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0));
      if (++filled == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(acc << (8 - filled)));
  return out;
}

bool are_twins(const Graph& g, int u, int v) {
  return (g.neighbours(u) & ~bit(v)) == (g.neighbours(v) & ~bit(u));
}

void search(const Graph& g, Cells cells, Certificate& best, bool& have_best) {
  refine(g, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    Certificate leaf = leaf_certificate(g, cells);
    if (!have_best || leaf < best) {
      best = std::move(leaf);
      have_best = true;
    }
    return;
  }
  const std::size_t index = static_cast<std::size_t>(target - cells.begin());
  const std::vector<int> members = *target;
  std::vector<int> tried;
  for (int v : members) {
    // Swapping twins fixes every individualised vertex, so their subtrees
    // produce identical leaves.
    if (std::any_of(tried.begin(), tried.end(), [&](int u) { return are_twins(g, u, v); })) continue;
    tried.push_back(v);
    Cells child = cells;
    std::vector<int> rest;
    for (int u : members) {
      if (u != v) rest.push_back(u);
    }
    child[index] = {v};
    child.insert(child.begin() + static_cast<long>(index) + 1, rest);
    search(g, std::move(child), best, have_best);
  }
}

}  // namespace

Certificate certificate(const Graph& g) {
  if (g.vertex_count() > kCertificateMaxVertices) {
    throw std::invalid_argument("certificate supports at most " +
                                std::to_string(kCertificateMaxVertices) + " vertices");
  }
  if (g.vertex_count() == 0) return Certificate(1, '\0');
  Cells cells(1);
  for (int v = 0; v < g.vertex_count(); ++v) cells[0].push_back(v);
  Certificate best;
  bool have_best = false;
  search(g, std::move(cells), best, have_best);
  return best;
}

std::string certificate_hex(const Certificate& cert) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char ch : cert) {
    out.push_back(kDigits[ch >> 4]);
    out.push_back(kDigits[ch & 15]);
  }
  return out;
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > kEnumerateGraphsMaxVertices) {
    throw std::invalid_argument("graph enumeration supports 0.." + std::to_string(kEnumerateGraphsMaxVertices) +
                                " vertices");
  }
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::map<Certificate, Graph> classes;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << slots.size()); ++bits) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((bits >> i) & 1u) edges.push_back(slots[i]);
    }
    Graph g(n, edges);
    Certificate cert = certificate(g);
    if (!classes.count(cert)) classes.emplace(std::move(cert), std::move(g));
  }
  std::vector<Graph> out;
  for (auto& [cert, g] : classes) out.push_back(std::move(g));
  return out;
}

Graph graph_from_certificate(const Certificate& cert) {
  if (cert.empty()) throw std::invalid_argument("empty certificate");
  const int n = static_cast<unsigned char>(cert[0]);
  std::vector<std::pair<int, int>> edges;
  std::size_t bit_index = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit_index) {
      const std::size_t byte = 1 + bit_index / 8;
      if (byte >= cert.size()) throw std::invalid_argument("truncated certificate");
      if ((static_cast<unsigned char>(cert[byte]) >> (7 - bit_index % 8)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph parse_edge_list(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("edge list must look like \"n; u-v,...\"");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(text.substr(0, semi), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("edge list vertex count is not an integer");
  }
  std::vector<std::pair<int, int>> edges;
  std::string rest = text.substr(semi + 1);
  std::stringstream ss(rest);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    const auto dash = token.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("malformed edge '" + token + "'");
    try {
      edges.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed edge '" + token + "'");
    }
  }
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ";";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? " " : ",") << u << '-' << v;
    first = false;
  }
  return os.str();
}

}  // namespace chordweight
