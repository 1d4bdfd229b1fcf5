#include "graphburn/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace gburn {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<Vertex> parents_from(const Graph& g, Vertex root) {
  std::vector<Vertex> parent(g.order(), -2);
  std::deque<Vertex> queue{root};
  parent[root] = -1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  return parent;
}

}  // namespace

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 1) throw GraphError(GraphErrorKind::Empty, "graph must have at least one vertex");
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError(GraphErrorKind::VertexOutOfRange, "edge " + edge_text(u, v) + " out of range");
    if (u == v) throw GraphError(GraphErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& row = adj[v];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end())
      throw GraphError(GraphErrorKind::DuplicateEdge, "duplicate edge " + edge_text(v, *dup));
  }
  Graph g(std::move(adj), edges.size());
  auto dist = bfs_distances(g, 0);
  auto missing = std::find(dist.begin(), dist.end(), -1);
  if (missing != dist.end())
    throw GraphError(GraphErrorKind::Disconnected,
                     "graph is disconnected (vertex " + std::to_string(missing - dist.begin()) +
                         " unreachable from 0)");
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

int Graph::min_degree() const {
  int best = degree(0);
  for (Vertex v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = degree(0);
  for (Vertex v = 1; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Tree::Tree(Graph g, std::optional<Vertex> root) : g_(std::move(g)), root_(root) {
  if (g_.edge_count() + 1 != static_cast<std::size_t>(g_.order()))
    throw GraphError(GraphErrorKind::NotATree,
                     "not a tree: " + std::to_string(g_.edge_count()) + " edges on " +
                         std::to_string(g_.order()) + " vertices");
  if (root_ && !g_.contains(*root_))
    throw GraphError(GraphErrorKind::VertexOutOfRange, "root out of range");
}

Tree Tree::build(int n, std::span<const Edge> edges) { return Tree(Graph::build(n, edges)); }

Tree Tree::rooted_at(Vertex r) const { return Tree(g_, r); }

bool is_simple_path(const Graph& g, const PathWitness& path) {
  if (path.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    Vertex v = path.vertices[i];
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(path.vertices[i - 1], v)) return false;
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  Vertex sources[] = {source};
  return multi_source_distances(g, sources);
}

std::vector<int> multi_source_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  for (Vertex s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<Vertex> ball(const Graph& g, Vertex center, int radius) {
  std::vector<Vertex> out{center};
  if (radius <= 0) return out;
  std::vector<int> dist(g.order(), -1);
  dist[center] = 0;
  for (std::size_t head = 0; head < out.size(); ++head) {
    Vertex x = out[head];
    if (dist[x] == radius) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LongestPath diameter_and_longest_path(const Tree& t) {
  auto far_end = [&](Vertex from) {
    auto dist = bfs_distances(t, from);
    return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
  };
  Vertex a = far_end(0);
  Vertex b = far_end(a);
  LongestPath out;
  out.path = tree_path(t, a, b);
  out.diameter = out.path.length();
  return out;
}

Vertex tree_center(const Tree& t) {
  auto lp = diameter_and_longest_path(t);
  return lp.path.vertices[lp.diameter / 2];
}

std::vector<Vertex> eulerian_unfold(const Tree& t, Vertex root) {
  const Graph& g = t;
  std::vector<Vertex> seq;
  seq.reserve(2 * g.order());
  // (vertex, parent, next neighbor index)
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{root, -1, 0}};
  seq.push_back(root);
  while (!stack.empty()) {
    Frame& top = stack.back();
    auto nb = g.neighbors(top.v);
    while (top.next < nb.size() && nb[top.next] == top.parent) ++top.next;
    if (top.next < nb.size()) {
      Vertex child = nb[top.next++];
      stack.push_back({child, top.v, 0});
      seq.push_back(child);
    } else {
      stack.pop_back();
      if (!stack.empty()) seq.push_back(stack.back().v);
    }
  }
  return seq;
}

PathWitness tree_path(const Tree& t, Vertex u, Vertex v) {
  auto parent = parents_from(t, v);
  PathWitness p;
  for (Vertex x = u; x != -1; x = parent[x]) p.vertices.push_back(x);
  return p;
}

bool is_connected_subset(const Graph& g, const std::vector<char>& keep) {
  Vertex start = -1;
  int total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (keep[v]) {
      ++total;
      if (start < 0) start = v;
    }
  }
  if (start < 0) return false;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> queue{start};
  seen[start] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex y : g.neighbors(queue[head])) {
      if (keep[y] && !seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return static_cast<int>(queue.size()) == total;
}

InducedSubtree induced_subtree(const Tree& t, const std::vector<char>& keep) {
  const Graph& g = t;
  if (!is_connected_subset(g, keep))
    throw GraphError(std::count(keep.begin(), keep.end(), 1) == 0 ? GraphErrorKind::Empty
                                                                  : GraphErrorKind::Disconnected,
                     "remaining vertex set is empty or disconnected");
  std::vector<Vertex> remap(g.order(), -1);
  std::vector<Vertex> original;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (keep[v]) {
      remap[v] = static_cast<Vertex>(original.size());
      original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (keep[u] && keep[v]) edges.emplace_back(remap[u], remap[v]);
  return {Tree::build(static_cast<int>(original.size()), edges), std::move(original)};
}

InducedSubtree remove_vertices(const Tree& t, std::span<const Vertex> removed) {
  std::vector<char> keep(t.order(), 1);
  for (Vertex v : removed) {
    if (!t.graph().contains(v))
      throw GraphError(GraphErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    keep[v] = 0;
  }
  return induced_subtree(t, keep);
}

Tree bfs_spanning_tree(const Graph& g, Vertex root) {
  auto parent = parents_from(g, root);
  std::vector<Edge> edges;
  edges.reserve(g.order() - 1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (parent[v] >= 0) edges.emplace_back(parent[v], v);
  return Tree(Graph::build(g.order(), edges), root);
}

Vertex max_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  return best;
}

std::vector<Vertex> leaves(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) <= 1) out.push_back(v);
  return out;
}

}  // namespace gburn
