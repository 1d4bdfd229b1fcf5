#include "graphburn/approx.hpp"

#include <algorithm>
#include <string>

namespace gburn {

BurnCertificate unfold_burn(const Graph& g) {
  Vertex root = max_degree_vertex(g);
  Tree t = bfs_spanning_tree(g, root);
  auto walk = eulerian_unfold(t, root);
  const auto len = static_cast<long long>(walk.size());
  const int k = static_cast<int>(ceil_sqrt_ratio(len));

  // Balls of radii k-1, ..., 0 tile k*k >= len consecutive walk positions.
  std::vector<Spark> raw;
  long long pos = 0;
  for (int r = k - 1; r >= 0 && pos < len; --r) {
    long long at = std::min(pos + r, len - 1);
    raw.push_back({r, walk[at]});
    pos += 2LL * r + 1;
  }
  return validate(g, resolve_center_collisions(g, raw));
}

ExtractionOutcome find_extraction(const Tree& t, const SparkSet& b) {
  if (b.size() < 4) throw std::invalid_argument("find_extraction needs at least 4 sparks, got " +
                                                std::to_string(b.size()));
  const int k = static_cast<int>(b.size()) - 1;
  const int n = t.order();
  auto lp = diameter_and_longest_path(t);
  if (lp.diameter <= b.max()) return SmallDiameter{lp.diameter, lp.path.vertices[lp.diameter / 2]};

  // Root at r = r_l; r_0 is the far end, so r_j = path[j].
  const auto& spine = lp.path.vertices;
  const int ell = lp.diameter;
  const Graph& g = t;
  std::vector<Vertex> parent(n, -1), order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  order.push_back(spine[ell]);
  seen[spine[ell]] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex x = order[head];
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = x;
        order.push_back(y);
      }
    }
  }
  std::vector<int> subtree(n, 1), height(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (parent[v] >= 0) {
      subtree[parent[v]] += subtree[v];
      height[parent[v]] = std::max(height[parent[v]], height[v] + 1);
    }
  }
  // side[j]: depth of the deepest branch of r_j off the path.
  std::vector<int> side(ell + 1, 0);
  for (int j = 1; j <= ell; ++j)
    for (Vertex c : g.neighbors(spine[j]))
      if (c != spine[j - 1] && c != parent[spine[j]]) side[j] = std::max(side[j], height[c] + 1);

  for (int i = k; i >= k / 2; --i) {
    const int radius = b[i];
    // Largest T(j) inside the ball of radius b_i around r_{b_i}.
    int j = radius;
    while (j + 1 <= ell && (j + 1 - radius) + side[j + 1] <= radius) ++j;
    const Vertex top = spine[j];
    if (subtree[top] < radius + k / 2 + 1) continue;  // smoulder

    ExtractionStep step;
    step.spark_index = i;
    step.spark_count = k + 1;
    step.radius = radius;
    step.center = spine[radius];
    std::vector<Vertex> stack{top};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      step.extracted.push_back(v);
      for (Vertex c : g.neighbors(v))
        if (c != parent[v]) stack.push_back(c);
    }
    std::sort(step.extracted.begin(), step.extracted.end());
    step.remaining = n - static_cast<int>(step.extracted.size());
    return step;
  }
  throw InternalContradiction("extraction lemma: every index in [" + std::to_string(k / 2) + "," +
                              std::to_string(k) + "] is a smoulder for B = " + b.to_string() +
                              " on a tree with " + std::to_string(n) + " vertices");
}

int four_thirds_budget(int n) { return static_cast<int>(ceil_sqrt_ratio(4LL * n, 3)) + 1; }

std::optional<FourThirdsResult> four_thirds_burn_with_budget(const Tree& t, int p) {
  FourThirdsTrace trace;
  trace.order = t.order();
  trace.budget = p;
  SparkSet sparks = SparkSet::range(0, p);
  std::vector<Spark> placed;

  Tree current = t;
  std::vector<Vertex> to_input(t.order());
  for (Vertex v = 0; v < t.order(); ++v) to_input[v] = v;

  auto finish_small = [&](int diameter, Vertex center) {
    // Smallest remaining spark reaching the whole remainder from its center.
    int needed = (diameter + 1) / 2;
    int radius = *std::lower_bound(sparks.radii().begin(), sparks.radii().end(), needed);
    placed.push_back({radius, to_input[center]});
    trace.finish = FourThirdsTrace::Finish::SmallDiameter;
  };

  while (true) {
    trace.final_order = current.order();
    trace.final_sparks = sparks;
    if (sparks.size() < 4) {
      if (sparks.empty()) return std::nullopt;
      auto lp = diameter_and_longest_path(current);
      if (lp.diameter <= sparks.max()) {
        finish_small(lp.diameter, lp.path.vertices[lp.diameter / 2]);
        break;
      }
      auto cover = detail::find_cover(current, sparks);
      if (!cover) return std::nullopt;
      for (const auto& s : *cover) placed.push_back({s.radius, to_input[s.center]});
      trace.finish = FourThirdsTrace::Finish::ExactFallback;
      break;
    }
    auto outcome = find_extraction(current, sparks);
    if (auto* small = std::get_if<SmallDiameter>(&outcome)) {
      finish_small(small->diameter, small->center);
      break;
    }
    auto step = std::get<ExtractionStep>(std::move(outcome));
    placed.push_back({step.radius, to_input[step.center]});
    sparks = sparks.without(step.radius);
    std::optional<InducedSubtree> rest;
    if (step.remaining > 0) rest = remove_vertices(current, step.extracted);
    for (auto& v : step.extracted) v = to_input[v];
    step.center = to_input[step.center];
    trace.steps.push_back(std::move(step));
    if (!rest) {
      trace.final_order = 0;
      trace.final_sparks = sparks;
      trace.finish = FourThirdsTrace::Finish::Exhausted;
      break;
    }
    std::vector<Vertex> next_map(rest->original.size());
    for (std::size_t i = 0; i < rest->original.size(); ++i) next_map[i] = to_input[rest->original[i]];
    to_input = std::move(next_map);
    current = std::move(rest->tree);
  }

  FourThirdsResult result{validate(t, resolve_center_collisions(t, placed)), std::move(trace)};
  if (!result.certificate.valid) return std::nullopt;
  return result;
}

FourThirdsResult four_thirds_burn(const Tree& t) {
  int p = four_thirds_budget(t.order());
  auto result = four_thirds_burn_with_budget(t, p);
  if (!result)
    throw InternalContradiction("four-thirds burner failed with sparks {0.." + std::to_string(p) +
                                "} on a tree with " + std::to_string(t.order()) + " vertices");
  return std::move(*result);
}

FourThirdsResult four_thirds_burn_graph(const Graph& g) {
  Tree t = bfs_spanning_tree(g, max_degree_vertex(g));
  auto result = four_thirds_burn(t);
  result.certificate = validate(g, result.certificate.assignment);
  return result;
}

bool counting_ledger_consistent(const FourThirdsTrace& trace) {
  long long accounted = trace.final_order;
  for (const auto& step : trace.steps) {
    if (static_cast<int>(step.extracted.size()) < step.required()) return false;
    accounted += static_cast<long long>(step.extracted.size());
  }
  if (trace.finish == FourThirdsTrace::Finish::Exhausted && trace.final_order != 0) return false;
  return accounted == trace.order;
}

bool leaf_bound_met(int n, int leaf_count, int min_degree) {
  if (min_degree == 3) return 4LL * leaf_count >= static_cast<long long>(n) + 4;
  if (min_degree == 4) return 5LL * leaf_count >= 2LL * n + 8;
  throw std::invalid_argument("leaf bounds exist for min degree 3 and 4 only");
}

MindegResult mindeg_burn(const Graph& g, int min_degree) {
  Tree tree = leafy_spanning_tree(g, min_degree);
  auto tips = leaves(tree);
  auto core = remove_vertices(tree, tips);

  // Try the theorem's radius budget ceil(sqrt(4n'/3)) first, then the
  // four-thirds default one above it.
  const int tight = static_cast<int>(ceil_sqrt_ratio(4LL * core.tree.order(), 3));
  auto burned = four_thirds_burn_with_budget(core.tree, tight);
  int budget = tight;
  if (!burned) {
    budget = four_thirds_budget(core.tree.order());
    burned = four_thirds_burn(core.tree);
  }

  std::vector<Spark> lifted;
  for (const auto& s : burned->certificate.assignment.sparks)
    lifted.push_back({s.radius + 1, core.original[s.center]});
  auto cert = validate(g, resolve_center_collisions(g, lifted));
  if (!cert.valid) {
    // Every leaf hangs off the core, so at most the radius-0 spark can help.
    std::vector<char> hit(g.order(), 0);
    for (const auto& s : cert.assignment.sparks)
      for (Vertex v : ball(g, s.center, s.radius)) hit[v] = 1;
    std::vector<Vertex> missing;
    for (Vertex v = 0; v < g.order(); ++v)
      if (!hit[v]) missing.push_back(v);
    if (missing.size() != 1)
      throw InternalContradiction("lifted core certificate misses " + std::to_string(missing.size()) +
                                  " vertices");
    lifted.push_back({0, missing.front()});
    cert = validate(g, resolve_center_collisions(g, lifted));
  }
  const int leaf_count = static_cast<int>(tips.size());
  const int core_order = core.tree.order();
  return {std::move(cert), std::move(tree), leaf_count, core_order, budget};
}

int mindeg4_threshold(int scan_limit) {
  int last_fail = 0;
  for (long long n = 1; n <= scan_limit; ++n) {
    long long lhs = ceil_sqrt_ratio(4 * (3 * n - 8), 15) + 2;
    if (lhs > ceil_sqrt_ratio(n)) last_fail = static_cast<int>(n);
  }
  return last_fail + 1;
}

}  // namespace gburn
