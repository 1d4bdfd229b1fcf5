#include "graphburn/generators.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gburn::gen {

Tree path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::build(n, edges);
}

Tree star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Tree::build(leaves + 1, edges);
}

Tree spider(const std::vector<int>& legs) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree::build(next, edges);
}

Tree caterpillar(const std::vector<int>& hairs) {
  if (hairs.empty()) throw std::invalid_argument("caterpillar needs a spine vertex");
  const int spine = static_cast<int>(hairs.size());
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i)
    for (int h = 0; h < hairs[i]; ++h) edges.emplace_back(i, next++);
  return Tree::build(next, edges);
}

Tree from_prufer(int n, const std::vector<int>& code) {
  if (n < 1) throw std::invalid_argument("tree order must be at least 1");
  if (n == 1) return Tree::build(1, {});
  if (static_cast<int>(code.size()) != n - 2) throw std::invalid_argument("Prufer code must have length n-2");
  std::vector<int> degree(n, 1);
  for (int x : code) {
    if (x < 0 || x >= n) throw std::invalid_argument("Prufer entry out of range");
    ++degree[x];
  }
  std::set<int> leaf_set;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaf_set.insert(v);
  std::vector<Edge> edges;
  for (int x : code) {
    int leaf = *leaf_set.begin();
    leaf_set.erase(leaf_set.begin());
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaf_set.insert(x);
  }
  int a = *leaf_set.begin(), b = *std::next(leaf_set.begin());
  edges.emplace_back(a, b);
  return Tree::build(n, edges);
}

Tree random_tree(int n, std::mt19937_64& rng) {
  if (n <= 2) return path(std::max(n, 1));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (auto& x : code) x = pick(rng);
  return from_prufer(n, code);
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::build(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::build(10, edges);
}

Graph hypercube(int dim) {
  if (dim < 0 || dim > 20) throw std::invalid_argument("hypercube dimension out of range");
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
  return Graph::build(n, edges);
}

Graph random_min_degree(int n, int min_degree, std::mt19937_64& rng) {
  if (min_degree < 0 || n <= min_degree)
    throw std::invalid_argument("need n > min_degree for a simple graph with that degree floor");
  Tree base = random_tree(n, rng);
  std::set<Edge> edges;
  std::vector<int> degree(n, 0);
  for (auto e : base.graph().edges()) {
    edges.insert(e);
    ++degree[e.first];
    ++degree[e.second];
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (Vertex v = 0; v < n; ++v) {
    while (degree[v] < min_degree) {
      Vertex w = pick(rng);
      Edge e{std::min(v, w), std::max(v, w)};
      if (w == v || edges.count(e)) continue;
      edges.insert(e);
      ++degree[v];
      ++degree[w];
    }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::build(n, list);
}

namespace {

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int x = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(x);
  }
  return out;
}

}  // namespace

Graph from_spec(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  std::vector<int> args;
  try {
    if (colon != std::string::npos) args = int_list(spec.substr(colon + 1));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed generator arguments in '" + spec + "'");
  }
  auto need = [&](std::size_t count) {
    if (args.size() != count) throw std::invalid_argument("generator '" + kind + "' takes " +
                                                          std::to_string(count) + " argument(s)");
  };
  std::mt19937_64 rng(seed);
  if (kind == "path") {
    need(1);
    return path(args[0]).graph();
  }
  if (kind == "star") {
    need(1);
    return star(args[0]).graph();
  }
  if (kind == "spider") return spider(args).graph();
  if (kind == "caterpillar") return caterpillar(args).graph();
  if (kind == "random-tree") {
    need(1);
    return random_tree(args[0], rng).graph();
  }
  if (kind == "complete") {
    need(1);
    return complete(args[0]);
  }
  if (kind == "cycle") {
    need(1);
    return cycle(args[0]);
  }
  if (kind == "petersen") {
    need(0);
    return petersen();
  }
  if (kind == "hypercube") {
    need(1);
    return hypercube(args[0]);
  }
  if (kind == "mindeg") {
    need(2);
    return random_min_degree(args[0], args[1], rng);
  }
  throw std::invalid_argument("unknown generator '" + kind + "'");
}

}  // namespace gburn::gen
