#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ctw {

using Edge = std::pair<int, int>;
using Permutation = std::vector<int>;
/// Bit v set <=> vertex v belongs to the set (vertices are 1-based).
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 30;

/// Orientation of the complete graph on vertices 1..n; (i, j) means i beats j.
class Tournament {
 public:
  explicit Tournament(int n = 0);
  /// Exactly one of (i,j), (j,i) must appear for every pair.
  static Tournament from_edges(int n, const std::vector<Edge>& edges);
  /// Orientation number `code` in the enumeration of all 2^{C(n,2)} tournaments:
  /// bit k flips the k-th pair (i<j, lexicographic) from i->j to j->i.
  static Tournament from_code(int n, std::uint64_t code);

  int n() const { return n_; }
  bool beats(int i, int j) const { return beats_[index(i, j)] != 0; }
  int out_degree(int v) const;
  /// Edges sorted lexicographically by the lower-numbered endpoint pair.
  std::vector<Edge> edges() const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * (n_ + 1) + j); }
  void set(int winner, int loser);

  int n_;
  std::vector<std::uint8_t> beats_;
};

enum class Ground { E, FromTwo, FromThree };

/// Pairs (i,j), i<j, reversed relative to the natural order E.
struct QSet {
  int n = 0;
  Ground ground = Ground::E;
  std::vector<Edge> pairs;

  int min_vertex() const { return ground == Ground::E ? 1 : ground == Ground::FromTwo ? 2 : 3; }
  /// Sorts and dedups pairs; throws std::invalid_argument if a pair lies outside the ground set.
  void normalize();
  friend bool operator==(const QSet&, const QSet&) = default;
};

/// All pairs of the ground set, lexicographic.
std::vector<Edge> ground_pairs(int n, Ground ground);
/// Every subset of the ground set, ordered lexicographically by sorted pair list.
std::vector<QSet> all_qsets(int n, Ground ground);

Tournament e_bar(const QSet& q);
bool is_transitive(const Tournament& t);
/// sigma[k-1] = k-th vertex in the winner order; throws on nontransitive input.
Permutation winner_permutation(const Tournament& t);

/// Nonempty R with every r in R beating every m outside R, ordered by size.
std::vector<VertexSet> dominant_sets(const Tournament& t);

/// Dominant sets plus the singletons {r}, r != 1, whose only loss is to vertex 1.
std::vector<VertexSet> r1_family(const Tournament& t);
std::vector<VertexSet> r1_family(const QSet& q1);

struct R2Family {
  std::vector<VertexSet> family;   ///< dominant sets plus `second`
  std::vector<VertexSet> second;   ///< literal near-dominant predicate
  std::vector<VertexSet> shortcut; ///< {1, r} with r beating all but 1 and 2
  bool consistent() const { return second == shortcut; }
};

/// Near-dominant part: 2 not in R, |R| <= 2, and the only pair (r, m),
/// r in R, m outside R, with m beating r is (r, 2) for a single r.
std::vector<VertexSet> r2_second_family(const Tournament& t);
/// The simpler characterization from the zero-count argument.
std::vector<VertexSet> r2_shortcut_family(const Tournament& t);
R2Family r2_family(const Tournament& t);
R2Family r2_family(const QSet& q2);

std::vector<int> members(VertexSet s);
std::string format_set(VertexSet s);
std::string format_family(const std::vector<VertexSet>& family);

/// Pairs (sigma(i), sigma(j)) with i < j and sigma(i) > sigma(j).
std::vector<Edge> inversion_set(const Permutation& sigma);
bool is_permutation_of_1_to_n(const Permutation& sigma);

}  // namespace ctw
