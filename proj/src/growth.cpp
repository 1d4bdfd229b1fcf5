#include "graphburn/growth.hpp"

#include <algorithm>

namespace gburn {

bool is_path_tree(const Tree& t) {
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) > 2) return false;
  return true;
}

GrowthCertificate growth_of(const Tree& t) {
  const Graph& g = t;
  const int n = g.order();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  auto is_path_now = [&] {
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && deg[v] > 2) return false;
    return true;
  };

  int rounds = 0;
  while (!is_path_now()) {
    std::vector<Vertex> doomed;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && deg[v] <= 1) doomed.push_back(v);
    for (Vertex v : doomed) alive[v] = 0;
    for (Vertex v : doomed)
      for (Vertex w : g.neighbors(v))
        if (alive[w]) --deg[w];
    ++rounds;
  }

  // Survivors form a path; orient it from its smaller endpoint.
  std::vector<Vertex> ends;
  Vertex any = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    any = v;
    if (deg[v] <= 1) ends.push_back(v);
  }
  GrowthCertificate cert;
  cert.growth = rounds;
  Vertex start = ends.empty() ? any : *std::min_element(ends.begin(), ends.end());
  Vertex prev = -1, cur = start;
  while (cur != -1) {
    cert.spine.vertices.push_back(cur);
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (alive[w] && w != prev) next = w;
    prev = cur;
    cur = next;
  }
  cert.distance_to_spine = multi_source_distances(g, cert.spine.vertices);
  return cert;
}

int growth_oracle(const Tree& t, int max_order) {
  if (t.order() > max_order)
    throw CapExceeded("growth oracle cap exceeded: " + std::to_string(t.order()) + " > " +
                      std::to_string(max_order));
  const Graph& g = t;
  int best = t.order();
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u; v < g.order(); ++v) {
      auto path = tree_path(t, u, v);
      auto d = multi_source_distances(g, path.vertices);
      best = std::min(best, *std::max_element(d.begin(), d.end()));
    }
  }
  return best;
}

bool is_burning_set(const Tree& t, const SparkSet& b) {
  int k = growth_of(t).growth;
  for (int i = 0; i <= k; ++i)
    if (!b.contains(i)) return false;
  return b.capacity() >= t.order();
}

}  // namespace gburn
