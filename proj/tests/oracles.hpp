#pragma once

// Brute-force reference implementations used only by the tests. None of them
// call into the search code they are checking.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "graphburn/burn.hpp"
#include "graphburn/graph.hpp"

namespace oracle {

using gburn::Edge;
using gburn::Graph;
using gburn::Vertex;

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const int n = g.order();
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int diameter(const Graph& g) {
  int best = 0;
  for (const auto& row : distance_matrix(g))
    for (int x : row) best = std::max(best, x);
  return best;
}

inline bool covers(const std::vector<std::vector<int>>& d, const std::vector<gburn::Spark>& sparks) {
  const int n = static_cast<int>(d.size());
  for (int v = 0; v < n; ++v) {
    bool hit = false;
    for (const auto& s : sparks)
      if (d[s.center][v] <= s.radius) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

// Radii distinct, centers distinct and in range, balls cover every vertex.
inline bool valid_burning(const Graph& g, const gburn::BurnAssignment& a) {
  std::vector<int> radii, centers;
  for (const auto& s : a.sparks) {
    if (s.center < 0 || s.center >= g.order() || s.radius < 0) return false;
    radii.push_back(s.radius);
    centers.push_back(s.center);
  }
  std::sort(radii.begin(), radii.end());
  std::sort(centers.begin(), centers.end());
  if (std::adjacent_find(radii.begin(), radii.end()) != radii.end()) return false;
  if (std::adjacent_find(centers.begin(), centers.end()) != centers.end()) return false;
  return covers(distance_matrix(g), a.sparks);
}

// Tries every injective placement of the radii.
inline bool set_burnable(const Graph& g, const std::vector<int>& radii) {
  const int n = g.order();
  if (static_cast<int>(radii.size()) > n) return false;
  auto d = distance_matrix(g);
  std::vector<gburn::Spark> sparks(radii.size());
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == radii.size()) return covers(d, sparks);
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      sparks[i] = {radii[i], v};
      if (place(i + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return place(0);
}

inline int burning_number(const Graph& g) {
  for (int k = 1;; ++k) {
    std::vector<int> radii;
    for (int r = k - 1; r >= 0; --r) radii.push_back(r);
    if (set_burnable(g, radii)) return k;
  }
}

// Every vertex within k of some path, minimised over all vertex pairs.
inline int growth(const Graph& g) {
  const int n = g.order();
  auto d = distance_matrix(g);
  int best = n;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      // x lies on the a-b path of a tree iff d(a,x) + d(x,b) = d(a,b).
      int worst = 0;
      for (int v = 0; v < n; ++v) {
        int near = n;
        for (int x = 0; x < n; ++x)
          if (d[a][x] + d[x][b] == d[a][b]) near = std::min(near, d[x][v]);
        worst = std::max(worst, near);
      }
      best = std::min(best, worst);
    }
  return best;
}

inline bool connected_subset(const Graph& g, const std::vector<char>& keep) {
  int start = -1, total = 0;
  for (int v = 0; v < g.order(); ++v)
    if (keep[v]) {
      ++total;
      if (start < 0) start = v;
    }
  if (total == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(v))
      if (keep[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return reached == total;
}

// t is a spanning tree of g: same vertex set, n-1 edges all present in g,
// connected.
inline bool spanning_tree_of(const Graph& g, const Graph& t) {
  if (t.order() != g.order() || static_cast<int>(t.edge_count()) != g.order() - 1) return false;
  for (auto [u, v] : t.edges())
    if (!g.adjacent(u, v)) return false;
  return connected_subset(t, std::vector<char>(t.order(), 1));
}

// Most leaves over all spanning trees, by trying every (n-1)-edge subset.
inline int max_leaf_count(const Graph& g) {
  const auto edges = g.edges();
  const int n = g.order(), m = static_cast<int>(edges.size());
  int best = 0;
  std::vector<int> pick;
  std::function<void(int)> go = [&](int from) {
    if (static_cast<int>(pick.size()) == n - 1) {
      std::vector<int> parent(n);
      for (int v = 0; v < n; ++v) parent[v] = v;
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      std::vector<int> deg(n, 0);
      for (int i : pick) {
        auto [u, v] = edges[i];
        int a = find(u), b = find(v);
        if (a == b) return;
        parent[a] = b;
        ++deg[u];
        ++deg[v];
      }
      best = std::max(best, static_cast<int>(std::count(deg.begin(), deg.end(), 1)));
      return;
    }
    for (int i = from; i < m && m - i >= n - 1 - static_cast<int>(pick.size()); ++i) {
      pick.push_back(i);
      go(i + 1);
      pick.pop_back();
    }
  };
  go(0);
  return best;
}

// Canonical code of a free tree with at most 32 vertices: the balanced
// parenthesis word of the tree rooted at a center, children ordered by
// decreasing word, minimised over the (one or two) centers. Words are left
// aligned in 64 bits; a valid word is never a proper prefix of another, so
// integer order is word order.
struct SmallTree {
  static constexpr int kMax = 32;
  int n = 0;
  int deg[kMax] = {};
  int adj[kMax][kMax] = {};

  void reset(int order) {
    n = order;
    for (int v = 0; v < n; ++v) deg[v] = 0;
  }
  void link(int u, int v) {
    adj[u][deg[u]++] = v;
    adj[v][deg[v]++] = u;
  }
};

inline std::uint64_t rooted_code(const SmallTree& t, int root) {
  int order[SmallTree::kMax], parent[SmallTree::kMax];
  std::uint64_t word[SmallTree::kMax];
  int len[SmallTree::kMax];
  int size = 0;
  order[size++] = root;
  parent[root] = -1;
  for (int head = 0; head < size; ++head) {
    int v = order[head];
    for (int i = 0; i < t.deg[v]; ++i) {
      int w = t.adj[v][i];
      if (w != parent[v]) {
        parent[w] = v;
        order[size++] = w;
      }
    }
  }
  for (int idx = size - 1; idx >= 0; --idx) {
    int v = order[idx];
    std::uint64_t kw[SmallTree::kMax];
    int kl[SmallTree::kMax];
    int kids = 0;
    for (int i = 0; i < t.deg[v]; ++i) {
      int w = t.adj[v][i];
      if (w == parent[v]) continue;
      // insertion sort, decreasing
      int pos = kids++;
      while (pos > 0 && kw[pos - 1] < word[w]) {
        kw[pos] = kw[pos - 1];
        kl[pos] = kl[pos - 1];
        --pos;
      }
      kw[pos] = word[w];
      kl[pos] = len[w];
    }
    std::uint64_t out = 1ULL << 63;
    int l = 1;
    for (int i = 0; i < kids; ++i) {
      out |= kw[i] >> l;
      l += kl[i];
    }
    word[v] = out;
    len[v] = l + 1;
  }
  return word[root];
}

inline std::uint64_t tree_code(const SmallTree& t) {
  const int n = t.n;
  if (n == 1) return 1ULL << 63;
  int deg[SmallTree::kMax], layer[SmallTree::kMax], next[SmallTree::kMax];
  char removed[SmallTree::kMax] = {};
  int layer_size = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.deg[v];
    if (deg[v] <= 1) layer[layer_size++] = v;
  }
  int left = n;
  while (left > 2) {
    int next_size = 0;
    for (int i = 0; i < layer_size; ++i) {
      int v = layer[i];
      removed[v] = 1;
      --left;
      for (int j = 0; j < t.deg[v]; ++j) {
        int w = t.adj[v][j];
        if (!removed[w] && --deg[w] == 1) next[next_size++] = w;
      }
    }
    std::copy(next, next + next_size, layer);
    layer_size = next_size;
  }
  std::uint64_t best = ~0ULL;
  for (int c = 0; c < n; ++c)
    if (!removed[c]) best = std::min(best, rooted_code(t, c));
  return best;
}

// Distinct free trees on n vertices, counted by decoding Prufer sequences
// and deduplicating canonical codes. A label is a leaf exactly when it is
// absent from the sequence, and every tree on n >= 3 vertices has two leaves,
// so sequences over 0..n-3 (labels n-2 and n-1 are leaves) already reach
// every isomorphism class.
inline std::size_t prufer_dedup_count(int n) {
  if (n <= 2) return 1;
  std::unordered_set<std::uint64_t> seen;
  SmallTree t;
  std::vector<int> code(n - 2, 0), degree(n);
  while (true) {
    t.reset(n);
    std::fill(degree.begin(), degree.end(), 1);
    for (int x : code) ++degree[x];
    // Linear-time decoding.
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : code) {
      t.link(leaf, x);
      --degree[leaf];
      if (--degree[x] == 1 && x < ptr) {
        leaf = x;
      } else {
        ++ptr;
        while (degree[ptr] != 1) ++ptr;
        leaf = ptr;
      }
    }
    t.link(leaf, n - 1);
    seen.insert(tree_code(t));

    int i = n - 3;
    while (i >= 0 && code[i] == n - 3) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
  return seen.size();
}

// Unlabeled free trees by Otter's formula: rooted counts r_n from the Euler
// transform, then t_n = r_n - (sum_{i+j=n} r_i r_j - [n even] r_{n/2}) / 2.
// Pure arithmetic, so it reaches sizes the Prufer sweep cannot.
inline std::uint64_t otter_count(int n) {
  std::vector<std::uint64_t> r(n + 1, 0);
  r[1] = 1;
  for (int m = 1; m < n; ++m) {
    // r_{m+1} = (1/m) sum_{k=1..m} (sum_{d|k} d r_d) r_{m-k+1}
    std::uint64_t total = 0;
    for (int k = 1; k <= m; ++k) {
      std::uint64_t s = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) s += static_cast<std::uint64_t>(d) * r[d];
      total += s * r[m - k + 1];
    }
    r[m + 1] = total / m;
  }
  std::uint64_t pairs = 0;
  for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
  if (n % 2 == 0) pairs -= r[n / 2];
  return r[n] - pairs / 2;
}

inline std::uint64_t canonical_code(const Graph& g) {
  SmallTree t;
  t.reset(g.order());
  for (auto [u, v] : g.edges()) t.link(u, v);
  return tree_code(t);
}

}  // namespace oracle
