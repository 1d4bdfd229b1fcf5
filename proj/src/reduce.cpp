#include "graphburn/reduce.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "graphburn/growth.hpp"

namespace gburn {

namespace {

std::vector<Vertex> component_avoiding(const Graph& g, Vertex from, const std::vector<char>& blocked) {
  std::vector<Vertex> out{from};
  std::vector<char> seen(g.order(), 0);
  seen[from] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Vertex y : g.neighbors(out[head]))
      if (!seen[y] && !blocked[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ReductionInstance build_reduction(const Tree& t, const PathWitness& path) {
  const Graph& g = t;
  if (path.size() < 2 || !is_simple_path(g, path))
    throw GraphError(GraphErrorKind::InvalidPath, "reduction needs a simple path with at least two vertices");
  const Vertex u = path.front(), v = path.back();
  const int n = g.order();

  std::vector<char> blocked(n, 0);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) blocked[path.vertices[i]] = 1;
  std::vector<Vertex> side_u, side_v;
  if (path.size() == 2) {
    blocked[v] = 1;
    side_u = component_avoiding(g, u, blocked);
    blocked[v] = 0;
    blocked[u] = 1;
    side_v = component_avoiding(g, v, blocked);
  } else {
    side_u = component_avoiding(g, u, blocked);
    side_v = component_avoiding(g, v, blocked);
  }

  std::vector<char> kept(n, 0);
  for (Vertex x : side_u) kept[x] = 1;
  for (Vertex x : side_v) kept[x] = 1;
  std::vector<Vertex> middle;
  for (Vertex x = 0; x < n; ++x)
    if (!kept[x]) middle.push_back(x);

  auto to_path = multi_source_distances(g, path.vertices);
  int max_hang = 0;
  for (Vertex x : middle) max_hang = std::max(max_hang, to_path[x]);

  std::vector<Vertex> to_reduced(n, -1), to_original;
  for (Vertex x = 0; x < n; ++x)
    if (kept[x]) {
      to_reduced[x] = static_cast<Vertex>(to_original.size());
      to_original.push_back(x);
    }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    if (kept[a] && kept[b]) edges.emplace_back(to_reduced[a], to_reduced[b]);
  if (path.size() > 2) edges.emplace_back(to_reduced[u], to_reduced[v]);
  Tree reduced = Tree::build(static_cast<int>(to_original.size()), edges);

  return ReductionInstance{t,
                           path,
                           std::move(side_u),
                           std::move(side_v),
                           std::move(middle),
                           std::move(reduced),
                           std::move(to_original),
                           std::move(to_reduced),
                           path.length(),
                           max_hang};
}

bool reduction_applicable(const ReductionInstance& inst, int p) {
  return inst.distance + 2 * inst.max_hang <= 2 * p + 2;
}

LiftResult lift_assignment(const ReductionInstance& inst, const SparkSet& b, const BurnAssignment& reduced) {
  if (b.empty()) throw std::invalid_argument("lift needs a nonempty spark set");
  const int p = b.max();
  const SparkSet rest = b.without(p);
  if (!reduction_applicable(inst, p))
    throw std::invalid_argument("reduction not applicable: d + 2m = " +
                                std::to_string(inst.distance + 2 * inst.max_hang) + " > 2p + 2 = " +
                                std::to_string(2 * p + 2));
  const Graph& small = inst.reduced;
  auto check = validate(small, reduced);
  if (!check.valid) throw std::invalid_argument("reduced assignment does not burn the reduced tree");
  for (const auto& s : reduced.sparks)
    if (!rest.contains(s.radius))
      throw std::invalid_argument("reduced assignment uses radius " + std::to_string(s.radius) +
                                  " outside " + rest.to_string());
  if (!reduced.relaxed && reduced.size() != rest.size())
    throw std::invalid_argument("reduced assignment must use every radius of " + rest.to_string());

  const Vertex ru = inst.original_to_reduced[inst.u()];
  const Vertex rv = inst.original_to_reduced[inst.v()];
  auto du = bfs_distances(small, ru);
  auto dv = bfs_distances(small, rv);

  LiftResult out;
  bool have = false;
  for (const auto& s : reduced.sparks) {
    const int dist = std::min(du[s.center], dv[s.center]);
    const int score = s.radius - dist;
    if (!have || score > out.reach || (score == out.reach && s.radius > out.anchor_radius)) {
      have = true;
      out.reach = score;
      out.anchor_radius = s.radius;
      out.anchor_near_u = du[s.center] <= dv[s.center];
    }
  }

  const int d = inst.distance;
  out.proof_index = d - (p - (out.reach - 1));
  const int q0 = std::clamp(out.proof_index, 0, d);
  out.clamped = q0 != out.proof_index;

  std::vector<Spark> base;
  for (const auto& s : reduced.sparks) base.push_back({s.radius, inst.reduced_to_original[s.center]});

  auto attempt = [&](int q) -> std::optional<BurnAssignment> {
    const int index = out.anchor_near_u ? q : d - q;
    std::vector<Spark> raw = base;
    raw.push_back({p, inst.path.vertices[index]});
    auto lifted = resolve_center_collisions(inst.original, raw);
    if (!validate(inst.original, lifted).valid) return std::nullopt;
    out.used_index = index;
    return lifted;
  };

  std::optional<BurnAssignment> lifted = attempt(q0);
  for (int delta = 1; !lifted && delta <= d; ++delta) {
    for (int q : {q0 - delta, q0 + delta}) {
      if (q < 0 || q > d) continue;
      if ((lifted = attempt(q))) {
        out.adjusted = true;
        break;
      }
    }
  }
  if (!lifted) throw LiftFailure("no position on the reduction path completes the lifted burning");

  // A relaxed reduced assignment may lack small radii; the original tree has
  // room for more of them.
  std::vector<char> taken(inst.original.order(), 0);
  for (const auto& s : lifted->sparks) taken[s.center] = 1;
  lifted->relaxed = false;
  Vertex cursor = 0;
  for (int r : b.radii()) {
    auto have_r = std::any_of(lifted->sparks.begin(), lifted->sparks.end(),
                              [&](const Spark& s) { return s.radius == r; });
    if (have_r) continue;
    while (cursor < inst.original.order() && taken[cursor]) ++cursor;
    if (cursor == inst.original.order()) {
      lifted->relaxed = true;
      continue;
    }
    taken[cursor] = 1;
    lifted->sparks.push_back({r, cursor});
  }
  lifted->normalize();
  out.assignment = std::move(*lifted);
  return out;
}

LiftResult lift_burning_sequence(const ReductionInstance& inst, const BurnAssignment& reduced) {
  const int steps = reduced.steps();
  auto radii = reduced.radii();
  for (int i = 0; i < static_cast<int>(radii.size()); ++i)
    if (radii[i] != i) throw std::invalid_argument("burning sequence must use radii 0..k-1");
  return lift_assignment(inst, SparkSet::range(0, steps), reduced);
}

namespace {

std::vector<PathWitness> candidate_paths(const Tree& t, int p) {
  std::vector<PathWitness> sources{diameter_and_longest_path(t).path, growth_of(t).spine};
  std::set<std::vector<Vertex>> seen;
  struct Scored {
    int distance;
    PathWitness path;
  };
  std::vector<Scored> found;
  for (const auto& src : sources) {
    const auto& vs = src.vertices;
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t z = a + 2; z < vs.size(); ++z) {
        PathWitness sub{std::vector<Vertex>(vs.begin() + a, vs.begin() + z + 1)};
        auto key = sub.vertices;
        if (key.front() > key.back()) std::reverse(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        auto inst = build_reduction(t, sub);
        if (reduction_applicable(inst, p)) found.push_back({inst.distance, std::move(sub)});
      }
  }
  std::stable_sort(found.begin(), found.end(), [](const Scored& x, const Scored& y) {
    if (x.distance != y.distance) return x.distance > y.distance;
    return x.path.vertices < y.path.vertices;
  });
  std::vector<PathWitness> out;
  for (auto& f : found) out.push_back(std::move(f.path));
  return out;
}

std::optional<ReductionProof> prove(const Tree& t, const SparkSet& b, const ReductionSearchOptions& options) {
  if (b.size() >= 2) {
    const int p = b.max();
    int tried = 0;
    for (const auto& path : candidate_paths(t, p)) {
      if (tried++ >= options.candidates_per_level) break;
      auto inst = build_reduction(t, path);
      auto sub = prove(inst.reduced, b.without(p), options);
      if (!sub) continue;
      try {
        auto lift = lift_assignment(inst, b, sub->assignment);
        ReductionProof proof;
        proof.assignment = std::move(lift.assignment);
        proof.base_order = sub->base_order;
        proof.steps.push_back({path, p, inst.distance, inst.max_hang, t.order(), inst.reduced.order(),
                               lift.adjusted});
        proof.steps.insert(proof.steps.end(), sub->steps.begin(), sub->steps.end());
        return proof;
      } catch (const LiftFailure&) {
        continue;
      }
    }
  }
  if (t.order() > options.base_cap) return std::nullopt;
  auto direct = is_set_burnable(t, b);
  if (!direct) return std::nullopt;
  ReductionProof proof;
  proof.assignment = std::move(*direct);
  proof.base_order = t.order();
  return proof;
}

}  // namespace

std::optional<ReductionProof> search_reduction(const Tree& t, const SparkSet& b,
                                               const ReductionSearchOptions& options) {
  if (b.empty()) return std::nullopt;
  return prove(t, b, options);
}

}  // namespace gburn
