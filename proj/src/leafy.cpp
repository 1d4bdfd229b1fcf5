#include <algorithm>
#include <numeric>
#include <string>

#include "graphburn/approx.hpp"

namespace gburn {

namespace {

// Grows a spanning tree from `start` by expansions: a tree leaf with two or
// more outside neighbours takes all of them; otherwise a leaf x with a single
// outside neighbour y adopts y, and y immediately takes its own outside
// neighbours. Each pass prefers the move that attaches the most new vertices.
std::vector<Vertex> grow_from(const Graph& g, Vertex start) {
  const int n = g.order();
  std::vector<Vertex> parent(n, -1);
  std::vector<char> in_tree(n, 0), expanded(n, 0);
  std::vector<int> outside(n);
  for (Vertex v = 0; v < n; ++v) outside[v] = g.degree(v);
  int size = 0;

  auto attach = [&](Vertex v, Vertex par) {
    in_tree[v] = 1;
    parent[v] = par;
    ++size;
    for (Vertex w : g.neighbors(v)) --outside[w];
  };
  auto expand = [&](Vertex x) {
    expanded[x] = 1;
    for (Vertex w : g.neighbors(x))
      if (!in_tree[w]) attach(w, x);
  };

  attach(start, -1);
  expand(start);
  while (size < n) {
    Vertex best = -1;
    for (Vertex x = 0; x < n; ++x)
      if (in_tree[x] && !expanded[x] && outside[x] >= 2 && (best < 0 || outside[x] > outside[best]))
        best = x;
    if (best >= 0) {
      expand(best);
      continue;
    }
    Vertex via = -1, next = -1;
    for (Vertex x = 0; x < n; ++x) {
      if (!in_tree[x] || expanded[x] || outside[x] != 1) continue;
      Vertex y = *std::find_if(g.neighbors(x).begin(), g.neighbors(x).end(),
                               [&](Vertex w) { return !in_tree[w]; });
      if (via < 0 || outside[y] > outside[next]) {
        via = x;
        next = y;
      }
    }
    expanded[via] = 1;
    attach(next, via);
    expand(next);
  }
  return parent;
}

std::vector<Vertex> start_candidates(const Graph& g) {
  constexpr int kSmallGraph = 64;
  constexpr int kStarts = 8;
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  if (g.order() <= kSmallGraph) return order;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  order.resize(kStarts);
  return order;
}

}  // namespace

Tree leafy_spanning_tree(const Graph& g, int min_degree) {
  if (min_degree != 3 && min_degree != 4)
    throw DegreeError("leafy spanning trees are defined for min degree 3 or 4, got " +
                      std::to_string(min_degree));
  if (g.min_degree() < min_degree)
    throw DegreeError("graph has a vertex of degree " + std::to_string(g.min_degree()) + " < " +
                      std::to_string(min_degree));

  std::vector<Vertex> best_parent;
  int best_leaves = -1;
  for (Vertex start : start_candidates(g)) {
    auto parent = grow_from(g, start);
    std::vector<int> deg(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v)
      if (parent[v] >= 0) {
        ++deg[v];
        ++deg[parent[v]];
      }
    int leaf_count = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
    if (leaf_count > best_leaves) {
      best_leaves = leaf_count;
      best_parent = std::move(parent);
    }
  }
  std::vector<Edge> edges;
  Vertex root = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (best_parent[v] >= 0)
      edges.emplace_back(best_parent[v], v);
    else
      root = v;
  }
  return Tree(Graph::build(g.order(), edges), root);
}

}  // namespace gburn
