#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace chordweight {

/// Canonical byte string of an isomorphism class.
using Certificate = std::string;

/// Finite simple graph on vertices 0..n-1, stored as adjacency bitmasks.
class Graph {
 public:
  static constexpr int kMaxVertices = 32;

  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  bool has_edge(int u, int v) const { return (adj_.at(u) >> v) & 1u; }
  std::uint32_t neighbours(int v) const { return adj_.at(v); }
  int degree(int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  Graph with_edge_toggled(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const;
  void set_edge(int u, int v, bool present);

  std::vector<std::uint32_t> adj_;
};

Graph complete_bipartite(int l, int n);

/// Subgraph induced on the vertices whose bits are set in `subset`,
/// relabelled in increasing order.
Graph induced(const Graph& g, std::uint32_t subset);
Graph induced(const Graph& g, const std::vector<int>& vertices);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Vertex masks of the connected components, ordered by lowest vertex.
std::vector<std::uint32_t> component_masks(const Graph& g);
std::vector<Graph> components(const Graph& g);
bool is_connected(const Graph& g);

/// (G, G'_AB, G~_AB, G~'_AB): G' toggles the edge AB, G~ toggles the
/// A-adjacency of every other vertex adjacent to B.
std::tuple<Graph, Graph, Graph, Graph> four_term_graphs(const Graph& g, int a, int b);

/// Length of the longest simple cycle; zero for forests.
int circumference(const Graph& g);
inline constexpr int kCircumferenceMaxVertices = 12;

inline constexpr int kCertificateMaxVertices = 13;
/// Equal for two graphs exactly when they are isomorphic.
Certificate certificate(const Graph& g);
std::string certificate_hex(const Certificate& cert);
/// The canonically labelled graph a certificate encodes.
Graph graph_from_certificate(const Certificate& cert);

inline constexpr int kEnumerateGraphsMaxVertices = 7;
/// One representative of every isomorphism class on n vertices, ordered by
/// certificate.
std::vector<Graph> enumerate_graphs(int n);

/// "n; u-v,u-v,..." (vertices 0-based). An edgeless graph is "n;".
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

}  // namespace chordweight
