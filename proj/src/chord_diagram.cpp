#include "chordweight/chord_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chordweight {

ChordDiagram::ChordDiagram(const std::vector<int>& word) {
  if (word.size() % 2 != 0) {
    throw std::invalid_argument("double-occurrence word has odd length " + std::to_string(word.size()));
  }
  std::map<int, int> renumber;
  std::map<int, int> seen;
  for (int label : word) ++seen[label];
  for (auto [label, count] : seen) {
    if (count != 2) {
      throw std::invalid_argument("chord label " + std::to_string(label) + " occurs " +
                                  std::to_string(count) + " times, expected 2");
    }
  }
  word_.reserve(word.size());
  for (int label : word) {
    auto [it, fresh] = renumber.try_emplace(label, static_cast<int>(renumber.size()) + 1);
    word_.push_back(it->second);
  }
  ends_.assign(word_.size() / 2, {-1, -1});
  for (int pos = 0; pos < static_cast<int>(word_.size()); ++pos) {
    auto& e = ends_[word_[pos] - 1];
    (e.first < 0 ? e.first : e.second) = pos;
  }
}

std::pair<int, int> ChordDiagram::endpoints(int label) const {
  if (label < 1 || label > order()) throw std::out_of_range("chord label out of range");
  return ends_[label - 1];
}

bool ChordDiagram::crosses(int a, int b) const {
  auto [a1, a2] = endpoints(a);
  auto [b1, b2] = endpoints(b);
  return (a1 < b1 && b1 < a2) != (a1 < b2 && b2 < a2);
}

int ChordDiagram::crossing_count() const {
  int count = 0;
  for (int a = 1; a <= order(); ++a) {
    for (int b = a + 1; b <= order(); ++b) count += crosses(a, b) ? 1 : 0;
  }
  return count;
}

std::string ChordDiagram::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < word_.size(); ++i) os << (i ? " " : "") << word_[i];
  return os.str();
}

std::string ChordDiagram::key() const { return std::string(word_.begin(), word_.end()); }

ChordDiagram parse_dow(std::string_view text) {
  std::vector<int> word;
  const bool spaced = std::any_of(text.begin(), text.end(), [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) || ch == ',';
  });
  if (spaced) {
    std::string cleaned(text);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream is(cleaned);
    std::string token;
    while (is >> token) {
      try {
        std::size_t used = 0;
        int label = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        word.push_back(label);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad chord label '" + token + "'");
      }
    }
  } else {
    for (char ch : text) {
      if (!std::isalnum(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument(std::string("bad chord label '") + ch + "'");
      }
      word.push_back(static_cast<unsigned char>(ch));
    }
  }
  return ChordDiagram(word);
}

ChordDiagram canonicalize(const ChordDiagram& d) {
  const auto& w = d.word();
  if (w.empty()) return d;
  ChordDiagram best = d;
  std::vector<int> rotated(w.size());
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::rotate_copy(w.begin(), w.begin() + static_cast<long>(r), w.end(), rotated.begin());
    ChordDiagram candidate(rotated);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

std::string serialize(const ChordDiagram& d) { return canonicalize(d).to_string(); }

ChordDiagram product(const ChordDiagram& a, const ChordDiagram& b) {
  std::vector<int> word = a.word();
  for (int label : b.word()) word.push_back(label + a.order());
  return canonicalize(ChordDiagram(word));
}

ChordDiagram restrict_to_mask(const ChordDiagram& d, std::uint32_t mask) {
  std::vector<int> word;
  for (int label : d.word()) {
    if ((mask >> (label - 1)) & 1u) word.push_back(label);
  }
  return canonicalize(ChordDiagram(word));
}

ChordDiagram restrict_to(const ChordDiagram& d, const std::vector<int>& labels) {
  std::uint32_t mask = 0;
  for (int label : labels) {
    if (label < 1 || label > d.order()) {
      throw std::out_of_range("chord label " + std::to_string(label) + " out of range");
    }
    mask |= std::uint32_t{1} << (label - 1);
  }
  return restrict_to_mask(d, mask);
}

ChordDiagram reversed(const ChordDiagram& d) {
  std::vector<int> word(d.word().rbegin(), d.word().rend());
  return ChordDiagram(word);
}

Graph intersection_graph(const ChordDiagram& d) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= d.order(); ++a) {
    for (int b = a + 1; b <= d.order(); ++b) {
      if (d.crosses(a, b)) edges.emplace_back(a - 1, b - 1);
    }
  }
  return Graph(d.order(), edges);
}

ChordDiagram bipartite_diagram(int l, int n) {
  if (l < 0 || n < 0) throw std::invalid_argument("part sizes must be non-negative");
  std::vector<int> word;
  for (int i = 1; i <= l + n; ++i) word.push_back(i);
  for (int i = l; i >= 1; --i) word.push_back(i);
  for (int i = l + n; i > l; --i) word.push_back(i);
  return ChordDiagram(word);
}

ChordDiagram tripartite_11n_diagram(int n) {
  if (n < 0) throw std::invalid_argument("part size must be non-negative");
  constexpr int kB = 1;
  constexpr int kA = 2;
  std::vector<int> word{kB};
  for (int i = n; i >= 1; --i) word.push_back(2 + i);
  word.push_back(kA);
  word.push_back(kB);
  for (int i = 1; i <= n; ++i) word.push_back(2 + i);
  word.push_back(kA);
  return ChordDiagram(word);
}

namespace {

void enumerate_matchings(std::vector<int>& word, int next_label, std::set<ChordDiagram>& out) {
  auto first_free = std::find(word.begin(), word.end(), 0);
  if (first_free == word.end()) {
    out.insert(canonicalize(ChordDiagram(word)));
    return;
  }
  *first_free = next_label;
  for (auto it = first_free + 1; it != word.end(); ++it) {
    if (*it != 0) continue;
    *it = next_label;
    enumerate_matchings(word, next_label + 1, out);
    *it = 0;
  }
  *first_free = 0;
}

// Raw word with the endpoint at position `from` removed and its label
// reinserted immediately before (or after) the endpoint at `anchor`.
std::vector<int> move_endpoint(const std::vector<int>& word, int from, int anchor, bool after) {
  std::vector<int> out;
  out.reserve(word.size());
  const int label = word[from];
  for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
    if (pos == from) continue;
    if (pos == anchor && !after) out.push_back(label);
    out.push_back(word[pos]);
    if (pos == anchor && after) out.push_back(label);
  }
  return out;
}

bool labels_cross(const std::vector<int>& word, int a, int b) {
  std::vector<int> pa, pb;
  for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
    if (word[pos] == a) pa.push_back(pos);
    if (word[pos] == b) pb.push_back(pos);
  }
  return (pa[0] < pb[0] && pb[0] < pa[1]) != (pa[0] < pb[1] && pb[1] < pa[1]);
}

}  // namespace

std::vector<ChordDiagram> enumerate_diagrams(int n, int max_order) {
  if (n < 0) throw std::invalid_argument("order must be non-negative");
  if (n > max_order) {
    throw std::invalid_argument("enumeration order " + std::to_string(n) + " exceeds bound " +
                                std::to_string(max_order));
  }
  std::set<ChordDiagram> found;
  std::vector<int> word(2 * static_cast<std::size_t>(n), 0);
  enumerate_matchings(word, 1, found);
  return {found.begin(), found.end()};
}

ChordDiagram random_diagram(int n, std::mt19937_64& rng) {
  if (n < 0) throw std::invalid_argument("order must be non-negative");
  std::vector<int> word(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < 2 * n; ++i) word[i] = i / 2 + 1;
  std::shuffle(word.begin(), word.end(), rng);
  return canonicalize(ChordDiagram(word));
}

std::vector<FourTermQuadruple> four_term_quadruples(const ChordDiagram& d) {
  std::vector<FourTermQuadruple> out;
  const auto& w = d.word();
  const int len = static_cast<int>(w.size());
  for (int p = 0; p < len; ++p) {
    const int q = (p + 1) % len;
    if (w[p] == w[q]) continue;
    std::vector<int> swapped = w;
    std::swap(swapped[p], swapped[q]);
    const ChordDiagram d_prime(swapped);
    for (int moving_pos : {p, q}) {
      const int a = w[moving_pos];
      const int site_b = moving_pos == p ? q : p;
      const int b = w[site_b];
      auto [b1, b2] = d.endpoints(b);
      const int far_b = b1 == site_b ? b2 : b1;
      // Sliding a's endpoint next to b's far endpoint toggles its crossing with
      // every other neighbour of b; the side of the far endpoint decides
      // whether the a-b crossing toggles as well.
      auto before = move_endpoint(w, moving_pos, far_b, false);
      auto after = move_endpoint(w, moving_pos, far_b, true);
      const bool keeps_ab = labels_cross(before, a, b) == d.crosses(a, b);
      FourTermQuadruple quad;
      quad.d1 = d;
      quad.d2 = d_prime;
      quad.d3 = ChordDiagram(keeps_ab ? before : after);
      quad.d4 = ChordDiagram(keeps_ab ? after : before);
      quad.a = a;
      quad.b = b;
      out.push_back(std::move(quad));
    }
  }
  return out;
}

}  // namespace chordweight
