#pragma once

#include <array>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordweight/graph.hpp"

namespace chordweight {

/// A chord diagram as a double-occurrence word: the chord labels met along
/// the oriented circle, read from a cut point. Labels are 1..n and numbered by
/// first occurrence. Different cut points give different words for the same
/// diagram; canonicalize() picks one representative.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  /// Validates that every label occurs exactly twice, then renumbers labels by
  /// first occurrence.
  explicit ChordDiagram(const std::vector<int>& word);

  int order() const { return static_cast<int>(word_.size() / 2); }
  const std::vector<int>& word() const { return word_; }
  /// Positions of the two endpoints of a chord, first < second.
  std::pair<int, int> endpoints(int label) const;
  bool crosses(int a, int b) const;
  int crossing_count() const;

  /// Space-separated word, e.g. "1 2 1 2".
  std::string to_string() const;
  /// Compact key for hashing.
  std::string key() const;

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) { return a.word_ == b.word_; }
  friend auto operator<=>(const ChordDiagram& a, const ChordDiagram& b) { return a.word_ <=> b.word_; }

 private:
  std::vector<int> word_;
  std::vector<std::pair<int, int>> ends_;  // indexed by label - 1
};

/// Parses "1 2 1 2" (whitespace-separated) or "1212" (one character per
/// label). Throws std::invalid_argument on odd length or a label not used
/// exactly twice.
ChordDiagram parse_dow(std::string_view text);

/// Lexicographically least relabelled word over all rotations.
ChordDiagram canonicalize(const ChordDiagram& d);
/// Canonical word string; the serialised form of a diagram.
std::string serialize(const ChordDiagram& d);

ChordDiagram product(const ChordDiagram& a, const ChordDiagram& b);
/// Keeps only the listed chord labels (1-based), canonicalised.
ChordDiagram restrict_to(const ChordDiagram& d, const std::vector<int>& labels);
/// Same, with chords selected by bit (label - 1).
ChordDiagram restrict_to_mask(const ChordDiagram& d, std::uint32_t mask);
/// Mirror image: the word read backwards.
ChordDiagram reversed(const ChordDiagram& d);

/// Vertex label-1 stands for chord `label`.
Graph intersection_graph(const ChordDiagram& d);

/// Word 1..l, l+1..l+n, l..1, l+n..l+1: left chords nested, right chords
/// nested, every left chord crossing every right one.
ChordDiagram bipartite_diagram(int l, int n);
/// Two crossing chords plus n mutually parallel chords crossing both; its
/// intersection graph is the complete tripartite graph K_{1,1,n}.
ChordDiagram tripartite_11n_diagram(int n);

inline constexpr int kEnumerateMaxOrder = 7;
/// Every canonical diagram of order n exactly once, sorted by word.
std::vector<ChordDiagram> enumerate_diagrams(int n, int max_order = kEnumerateMaxOrder);

/// Uniformly random perfect matching of 2n points, canonicalised.
ChordDiagram random_diagram(int n, std::mt19937_64& rng);

struct FourTermQuadruple {
  ChordDiagram d1, d2, d3, d4;  // signs + - - +
  int a = 0, b = 0;             // moving chord and fixed chord (labels of d1)
};

/// For every adjacent pair of endpoints belonging to distinct chords, and for
/// both choices of which of the two chords moves, the quadruple
/// (D, D', D~, D~') whose intersection graphs are (G, G'_ab, G~_ab, G~'_ab).
std::vector<FourTermQuadruple> four_term_quadruples(const ChordDiagram& d);

}  // namespace chordweight
