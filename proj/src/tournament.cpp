#include "ctw/tournament.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ctw {

Tournament::Tournament(int n) : n_(n), beats_(static_cast<std::size_t>((n + 1) * (n + 1)), 0) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("tournament size out of range");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) set(i, j);
}

void Tournament::set(int winner, int loser) {
  beats_[index(winner, loser)] = 1;
  beats_[index(loser, winner)] = 0;
}

Tournament Tournament::from_edges(int n, const std::vector<Edge>& edges) {
  Tournament t(n);
  std::fill(t.beats_.begin(), t.beats_.end(), 0);
  for (const auto& [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n || i == j) {
      throw std::invalid_argument("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    if (t.beats_[t.index(i, j)] || t.beats_[t.index(j, i)]) {
      throw std::invalid_argument("pair {" + std::to_string(i) + "," + std::to_string(j) + "} oriented twice");
    }
    t.beats_[t.index(i, j)] = 1;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!t.beats(i, j) && !t.beats(j, i)) {
        throw std::invalid_argument("pair {" + std::to_string(i) + "," + std::to_string(j) + "} not oriented");
      }
  return t;
}

Tournament Tournament::from_code(int n, std::uint64_t code) {
  Tournament t(n);
  int k = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++k) {
      if ((code >> k) & 1U) t.set(j, i);
    }
  }
  return t;
}

int Tournament::out_degree(int v) const {
  int d = 0;
  for (int u = 1; u <= n_; ++u)
    if (u != v && beats(v, u)) ++d;
  return d;
}

std::vector<Edge> Tournament::edges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) out.emplace_back(beats(i, j) ? Edge{i, j} : Edge{j, i});
  return out;
}

void QSet::normalize() {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  const int lo = min_vertex();
  for (const auto& [i, j] : pairs) {
    if (!(lo <= i && i < j && j <= n)) {
      throw std::invalid_argument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") outside ground set {(i,j) | " + std::to_string(lo) + " <= i < j <= " +
                                  std::to_string(n) + "}");
    }
  }
}

std::vector<Edge> ground_pairs(int n, Ground ground) {
  QSet probe{n, ground, {}};
  std::vector<Edge> out;
  for (int i = probe.min_vertex(); i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<QSet> all_qsets(int n, Ground ground) {
  const auto pairs = ground_pairs(n, ground);
  if (pairs.size() > 24) throw std::invalid_argument("ground set too large to enumerate");
  std::vector<QSet> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    QSet q{n, ground, {}};
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) q.pairs.push_back(pairs[k]);
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), [](const QSet& x, const QSet& y) { return x.pairs < y.pairs; });
  return out;
}

Tournament e_bar(const QSet& q) {
  QSet norm = q;
  norm.normalize();
  std::vector<Edge> edges;
  for (int i = 1; i <= q.n; ++i) {
    for (int j = i + 1; j <= q.n; ++j) {
      const bool flipped = std::binary_search(norm.pairs.begin(), norm.pairs.end(), Edge{i, j});
      edges.emplace_back(flipped ? Edge{j, i} : Edge{i, j});
    }
  }
  return Tournament::from_edges(q.n, edges);
}

bool is_transitive(const Tournament& t) {
  const int n = t.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || !t.beats(i, j)) continue;
      for (int k = 1; k <= n; ++k)
        if (k != i && k != j && t.beats(j, k) && t.beats(k, i)) return false;
    }
  return true;
}

Permutation winner_permutation(const Tournament& t) {
  if (!is_transitive(t)) throw std::invalid_argument("winner permutation of a nontransitive tournament");
  Permutation sigma(static_cast<std::size_t>(t.n()));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::sort(sigma.begin(), sigma.end(), [&t](int u, int v) { return t.out_degree(u) > t.out_degree(v); });
  return sigma;
}

namespace {

bool dominates(const Tournament& t, VertexSet r) {
  for (int u = 1; u <= t.n(); ++u) {
    if (!((r >> u) & 1U)) continue;
    for (int m = 1; m <= t.n(); ++m)
      if (!((r >> m) & 1U) && !t.beats(u, m)) return false;
  }
  return true;
}

VertexSet full_set(int n) { return ((VertexSet{1} << (n + 1)) - 1) & ~VertexSet{1}; }

void sort_family(std::vector<VertexSet>& family) {
  std::sort(family.begin(), family.end(), [](VertexSet x, VertexSet y) {
    const int cx = std::popcount(x);
    const int cy = std::popcount(y);
    if (cx != cy) return cx < cy;
    return members(x) < members(y);
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

template <class Pred>
std::vector<VertexSet> enumerate_subsets(int n, Pred pred) {
  if (n > 20) throw std::invalid_argument("subset enumeration limited to 20 vertices");
  std::vector<VertexSet> out;
  const VertexSet full = full_set(n);
  for (VertexSet r = full; r != 0; r = (r - 1) & full) {
    if (pred(r)) out.push_back(r);
  }
  sort_family(out);
  return out;
}

}  // namespace

std::vector<VertexSet> dominant_sets(const Tournament& t) {
  return enumerate_subsets(t.n(), [&t](VertexSet r) { return dominates(t, r); });
}

std::vector<VertexSet> r1_family(const Tournament& t) {
  auto family = dominant_sets(t);
  for (int r = 2; r <= t.n(); ++r) {
    if (!t.beats(1, r)) continue;
    bool only_loss_to_one = true;
    for (int m = 2; m <= t.n(); ++m)
      if (m != r && !t.beats(r, m)) only_loss_to_one = false;
    if (only_loss_to_one) family.push_back(VertexSet{1} << r);
  }
  sort_family(family);
  return family;
}

std::vector<VertexSet> r1_family(const QSet& q1) {
  QSet q = q1;
  q.ground = Ground::FromTwo;
  return r1_family(e_bar(q));
}

std::vector<VertexSet> r2_second_family(const Tournament& t) {
  if (t.n() < 2) return {};
  return enumerate_subsets(t.n(), [&t](VertexSet r) {
    if (std::popcount(r) > 2 || ((r >> 2) & 1U)) return false;
    int violations = 0;
    bool only_vertex_two = true;
    for (int u = 1; u <= t.n(); ++u) {
      if (!((r >> u) & 1U)) continue;
      for (int m = 1; m <= t.n(); ++m) {
        if ((r >> m) & 1U || t.beats(u, m)) continue;
        ++violations;
        if (m != 2) only_vertex_two = false;
      }
    }
    return violations == 1 && only_vertex_two;
  });
}

std::vector<VertexSet> r2_shortcut_family(const Tournament& t) {
  std::vector<VertexSet> out;
  if (t.n() < 3 || !t.beats(1, 2)) return out;
  for (int r = 3; r <= t.n(); ++r) {
    bool ok = t.beats(2, r);
    for (int m = 3; m <= t.n() && ok; ++m) ok = (m == r) || (t.beats(r, m) && t.beats(1, m));
    if (ok) out.push_back((VertexSet{1} << 1) | (VertexSet{1} << r));
  }
  sort_family(out);
  return out;
}

R2Family r2_family(const Tournament& t) {
  R2Family out;
  out.second = r2_second_family(t);
  out.shortcut = r2_shortcut_family(t);
  out.family = dominant_sets(t);
  out.family.insert(out.family.end(), out.second.begin(), out.second.end());
  sort_family(out.family);
  return out;
}

R2Family r2_family(const QSet& q2) {
  QSet q = q2;
  q.ground = Ground::FromThree;
  return r2_family(e_bar(q));
}

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; v < 32; ++v)
    if ((s >> v) & 1U) out.push_back(v);
  return out;
}

std::string format_set(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : members(s)) {
    if (!first) out << ',';
    first = false;
    out << v;
  }
  out << '}';
  return out.str();
}

std::string format_family(const std::vector<VertexSet>& family) {
  std::string out = "{";
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (k) out += ",";
    out += format_set(family[k]);
  }
  return out + "}";
}

bool is_permutation_of_1_to_n(const Permutation& sigma) {
  Permutation sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1) return false;
  return true;
}

std::vector<Edge> inversion_set(const Permutation& sigma) {
  if (!is_permutation_of_1_to_n(sigma)) throw std::invalid_argument("not a permutation of 1..n");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) out.emplace_back(sigma[i], sigma[j]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ctw
