#pragma once

// Brute-force reference implementations for tests. Nothing here shares code
// with the library beyond the Poset type used to hand results back; every
// quantity is recomputed from the raw order relation by exhaustive search.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "posetdist/poset.hpp"

namespace oracle {

// Plain reflexive order relation, le[i][j] means i <= j.
struct Relation {
  int n = 0;
  std::vector<std::vector<bool>> le;
};

inline bool transitive(const Relation& r) {
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b) {
      if (!r.le[a][b]) continue;
      for (int c = 0; c < r.n; ++c)
        if (r.le[b][c] && !r.le[a][c]) return false;
    }
  return true;
}

// Every labeled poset on {0..n-1}: each unordered pair is unrelated, i<j or
// j<i (3^(n(n-1)/2) candidates), keeping the transitive assignments.
inline std::vector<Relation> labeled_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<int> state(pairs.size(), 0);
  std::vector<Relation> out;
  while (true) {
    Relation r{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
    for (int i = 0; i < n; ++i) r.le[i][i] = true;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (state[k] == 1) r.le[pairs[k].first][pairs[k].second] = true;
      if (state[k] == 2) r.le[pairs[k].second][pairs[k].first] = true;
    }
    if (transitive(r)) out.push_back(std::move(r));
    std::size_t k = 0;
    while (k < state.size() && state[k] == 2) state[k++] = 0;
    if (k == state.size()) break;
    ++state[k];
  }
  return out;
}

// Minimum over all n! relabelings of the row-major relation bit string.
inline std::vector<bool> brute_canonical(const Relation& r) {
  std::vector<int> perm(r.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    code.reserve(r.n * r.n);
    for (int i = 0; i < r.n; ++i)
      for (int j = 0; j < r.n; ++j) code.push_back(r.le[perm[i]][perm[j]]);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One representative per isomorphism class. Only naturally labeled posets
// (i < j implies index i < index j) are canonicalized: every class has one.
inline std::vector<Relation> iso_classes(int n) {
  std::set<std::vector<bool>> seen;
  std::vector<Relation> reps;
  for (auto& r : labeled_posets(n)) {
    bool natural = true;
    for (int i = 0; i < n && natural; ++i)
      for (int j = 0; j < i && natural; ++j) natural = !r.le[i][j];
    if (!natural) continue;
    if (seen.insert(brute_canonical(r)).second) reps.push_back(std::move(r));
  }
  return reps;
}

inline Relation from_poset(const posetdist::Poset& p) {
  const int n = static_cast<int>(p.size());
  Relation r{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.le[i][j] = p.leq(i, j);
  return r;
}

inline posetdist::Poset to_poset(const Relation& r) {
  posetdist::BoolMatrix m(r.n);
  std::vector<std::string> names;
  for (int i = 0; i < r.n; ++i) {
    names.push_back("v" + std::to_string(i));
    for (int j = 0; j < r.n; ++j)
      if (r.le[i][j]) m.set(i, j);
  }
  return posetdist::Poset(std::move(names), std::move(m));
}

inline bool lt(const Relation& r, int a, int b) { return a != b && r.le[a][b]; }

inline bool covers(const Relation& r, int a, int b) {
  if (!lt(r, a, b)) return false;
  for (int z = 0; z < r.n; ++z)
    if (lt(r, a, z) && lt(r, z, b)) return false;
  return true;
}

// Sizes of all maximal chains of [x, y], by DFS over cover steps.
inline void chain_sizes(const Relation& r, int x, int y, int size, std::set<int>& out) {
  if (x == y) {
    out.insert(size);
    return;
  }
  for (int z = 0; z < r.n; ++z)
    if (covers(r, x, z) && r.le[z][y]) chain_sizes(r, z, y, size + 1, out);
}

inline std::set<int> chain_sizes(const Relation& r, int x, int y) {
  std::set<int> out;
  if (r.le[x][y]) chain_sizes(r, x, y, 1, out);
  return out;
}

inline int height(const Relation& r, int x, int y) { return *chain_sizes(r, x, y).begin() - 1; }

inline bool jordan_dedekind(const Relation& r) {
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      if (r.le[x][y] && chain_sizes(r, x, y).size() > 1) return false;
  return true;
}

// Shortest path in the undirected Hasse diagram; -1 when disconnected.
inline int zigzag(const Relation& r, int x, int y) {
  std::vector<int> dist(r.n, -1);
  std::vector<int> queue{x};
  dist[x] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v = 0; v < r.n; ++v)
      if (dist[v] < 0 && (covers(r, u, v) || covers(r, v, u))) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist[y];
}

inline std::optional<int> up_down(const Relation& r, int x, int y) {
  std::optional<int> best;
  for (int u = 0; u < r.n; ++u)
    if (r.le[x][u] && r.le[y][u]) {
      const int d = height(r, x, u) + height(r, y, u);
      if (!best || d < *best) best = d;
    }
  return best;
}

inline std::optional<int> down_up(const Relation& r, int x, int y) {
  std::optional<int> best;
  for (int l = 0; l < r.n; ++l)
    if (r.le[l][x] && r.le[l][y]) {
      const int d = height(r, l, x) + height(r, l, y);
      if (!best || d < *best) best = d;
    }
  return best;
}

inline std::optional<int> join(const Relation& r, int x, int y) {
  for (int u = 0; u < r.n; ++u) {
    if (!r.le[x][u] || !r.le[y][u]) continue;
    bool least = true;
    for (int v = 0; v < r.n && least; ++v)
      if (r.le[x][v] && r.le[y][v]) least = r.le[u][v];
    if (least) return u;
  }
  return std::nullopt;
}

inline std::optional<int> chebyshev(const Relation& r, int x, int y) {
  const auto j = join(r, x, y);
  if (!j) return std::nullopt;
  return std::max(height(r, x, *j), height(r, y, *j));
}

inline bool join_semilattice(const Relation& r) {
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      if (!join(r, x, y)) return false;
  return true;
}

// Cover form: whenever x != y both cover a common element, x v y covers both.
inline bool semimodular(const Relation& r) {
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y) {
      if (x == y) continue;
      for (int z = 0; z < r.n; ++z) {
        if (!covers(r, z, x) || !covers(r, z, y)) continue;
        const auto j = join(r, x, y);
        if (!j || !covers(r, x, *j) || !covers(r, y, *j)) return false;
      }
    }
  return true;
}

inline bool upper_filtering(const Relation& r) {
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y) {
      bool any = false;
      for (int u = 0; u < r.n && !any; ++u) any = r.le[x][u] && r.le[y][u];
      if (!any) return false;
    }
  return true;
}

inline bool lower_filtering(const Relation& r) {
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y) {
      bool any = false;
      for (int l = 0; l < r.n && !any; ++l) any = r.le[l][x] && r.le[l][y];
      if (!any) return false;
    }
  return true;
}

// Every principal up-set is a chain.
inline bool tree_order(const Relation& r) {
  if (!upper_filtering(r)) return false;
  for (int x = 0; x < r.n; ++x)
    for (int a = 0; a < r.n; ++a)
      for (int b = 0; b < r.n; ++b)
        if (r.le[x][a] && r.le[x][b] && !r.le[a][b] && !r.le[b][a]) return false;
  return true;
}

}  // namespace oracle
