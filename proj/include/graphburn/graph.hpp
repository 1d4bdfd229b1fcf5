#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gburn {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class GraphErrorKind {
  Empty,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  NotATree,
  InvalidPath,
};

class GraphError : public std::runtime_error {
public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  GraphErrorKind kind() const noexcept { return kind_; }

private:
  GraphErrorKind kind_;
};

/// Immutable connected simple undirected graph on vertices 0..n-1.
/// Adjacency lists are kept sorted.
class Graph {
public:
  /// Validates and canonicalizes. Throws GraphError on self-loops, duplicate
  /// edges, out-of-range endpoints, n < 1, or a disconnected edge set.
  static Graph build(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }
  int min_degree() const;
  int max_degree() const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
  Graph(std::vector<std::vector<Vertex>> adj, std::size_t m)
      : adj_(std::move(adj)), edge_count_(m) {}

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(int n, std::span<const Edge> edges) {
  return Graph::build(n, edges);
}

/// A Graph with exactly n-1 edges (hence acyclic), plus an optional root.
/// Converts implicitly to const Graph& so every graph service applies.
class Tree {
public:
  explicit Tree(Graph g, std::optional<Vertex> root = std::nullopt);
  static Tree build(int n, std::span<const Edge> edges);

  const Graph& graph() const noexcept { return g_; }
  operator const Graph&() const noexcept { return g_; }

  int order() const noexcept { return g_.order(); }
  std::span<const Vertex> neighbors(Vertex v) const { return g_.neighbors(v); }
  int degree(Vertex v) const { return g_.degree(v); }
  std::optional<Vertex> root() const noexcept { return root_; }
  Tree rooted_at(Vertex r) const;

  bool operator==(const Tree& other) const { return g_ == other.g_; }

private:
  Graph g_;
  std::optional<Vertex> root_;
};

/// Ordered vertex list forming a simple path in some host graph.
struct PathWitness {
  std::vector<Vertex> vertices;

  bool empty() const noexcept { return vertices.empty(); }
  std::size_t size() const noexcept { return vertices.size(); }
  int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const PathWitness&) const = default;
};

/// True when consecutive vertices are adjacent in g and none repeats.
bool is_simple_path(const Graph& g, const PathWitness& path);

/// Hop distances from source; unreachable entries are -1 (never happens on a
/// validated Graph).
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Distance of every vertex to the nearest source.
std::vector<int> multi_source_distances(const Graph& g, std::span<const Vertex> sources);

/// N_r[center] as a sorted vertex list.
std::vector<Vertex> ball(const Graph& g, Vertex center, int radius);

struct LongestPath {
  int diameter = 0;
  PathWitness path;
};

/// Double-BFS; exact on trees.
LongestPath diameter_and_longest_path(const Tree& t);

/// Middle vertex of a longest path; every vertex is within ceil(diam/2) of it.
Vertex tree_center(const Tree& t);

/// DFS visit sequence with repetition (the outline of t). Length 2n-1.
std::vector<Vertex> eulerian_unfold(const Tree& t, Vertex root);

/// The unique path from u to v in t.
PathWitness tree_path(const Tree& t, Vertex u, Vertex v);

struct InducedSubtree {
  Tree tree;
  /// original[i] is the id in the parent tree of vertex i of `tree`.
  std::vector<Vertex> original;
};

/// Induced subtree on V \ removed. Throws GraphError when the complement is
/// empty or disconnected.
InducedSubtree remove_vertices(const Tree& t, std::span<const Vertex> removed);

/// Induced subtree on the vertices flagged in keep (must be connected).
InducedSubtree induced_subtree(const Tree& t, const std::vector<char>& keep);

/// True when the flagged vertices induce a nonempty connected subgraph.
bool is_connected_subset(const Graph& g, const std::vector<char>& keep);

/// BFS spanning tree rooted at root.
Tree bfs_spanning_tree(const Graph& g, Vertex root);

/// Vertex of maximum degree, smallest id on ties.
Vertex max_degree_vertex(const Graph& g);

/// Vertices of degree <= 1.
std::vector<Vertex> leaves(const Graph& g);

}  // namespace gburn
