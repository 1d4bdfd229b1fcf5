#include "graphburn/burn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "vertex_bits.hpp"

namespace gburn {

using detail::VertexBits;

SparkSet::SparkSet(std::vector<int> radii) : radii_(std::move(radii)) {
  std::sort(radii_.begin(), radii_.end());
  if (!radii_.empty() && radii_.front() < 0) throw std::invalid_argument("spark radii must be non-negative");
  if (std::adjacent_find(radii_.begin(), radii_.end()) != radii_.end())
    throw std::invalid_argument("spark radii must be distinct");
}

SparkSet SparkSet::range(int lo, int hi) {
  std::vector<int> r;
  for (int i = lo; i <= hi; ++i) r.push_back(i);
  return SparkSet(std::move(r));
}

bool SparkSet::contains(int r) const { return std::binary_search(radii_.begin(), radii_.end(), r); }

SparkSet SparkSet::without(int r) const {
  SparkSet out = *this;
  auto it = std::lower_bound(out.radii_.begin(), out.radii_.end(), r);
  if (it != out.radii_.end() && *it == r) out.radii_.erase(it);
  return out;
}

long long SparkSet::capacity() const {
  long long c = 0;
  for (int r : radii_) c += 2LL * r + 1;
  return c;
}

std::string SparkSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < radii_.size(); ++i) os << (i ? "," : "") << radii_[i];
  os << '}';
  return os.str();
}

int BurnAssignment::max_radius() const {
  int m = -1;
  for (const auto& s : sparks) m = std::max(m, s.radius);
  return m;
}

std::vector<int> BurnAssignment::radii() const {
  std::vector<int> r;
  for (const auto& s : sparks) r.push_back(s.radius);
  std::sort(r.begin(), r.end());
  return r;
}

bool BurnAssignment::well_formed(const Graph& g) const {
  std::vector<int> rs;
  std::vector<Vertex> cs;
  for (const auto& s : sparks) {
    if (s.radius < 0 || !g.contains(s.center)) return false;
    rs.push_back(s.radius);
    cs.push_back(s.center);
  }
  std::sort(rs.begin(), rs.end());
  std::sort(cs.begin(), cs.end());
  return std::adjacent_find(rs.begin(), rs.end()) == rs.end() &&
         std::adjacent_find(cs.begin(), cs.end()) == cs.end();
}

void BurnAssignment::normalize() {
  std::sort(sparks.begin(), sparks.end(),
            [](const Spark& a, const Spark& b) { return a.radius > b.radius; });
}

std::vector<std::vector<Vertex>> simulate_classic(const Graph& g, std::span<const Vertex> sequence) {
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : sequence) {
    if (!g.contains(v)) throw std::invalid_argument("sequence vertex out of range");
    if (seen[v]) throw std::invalid_argument("sequence repeats vertex " + std::to_string(v));
    seen[v] = 1;
  }
  std::vector<char> burned(g.order(), 0);
  std::vector<std::vector<Vertex>> history;
  for (Vertex fresh : sequence) {
    std::vector<char> next = burned;
    for (Vertex v = 0; v < g.order(); ++v)
      if (burned[v])
        for (Vertex w : g.neighbors(v)) next[w] = 1;
    next[fresh] = 1;
    burned = std::move(next);
    std::vector<Vertex> snapshot;
    for (Vertex v = 0; v < g.order(); ++v)
      if (burned[v]) snapshot.push_back(v);
    history.push_back(std::move(snapshot));
  }
  return history;
}

BurnCertificate validate(const Graph& g, const BurnAssignment& a) {
  BurnCertificate cert;
  cert.assignment = a;
  std::vector<char> hit(g.order(), 0);
  for (const auto& s : a.sparks) {
    if (!g.contains(s.center) || s.radius < 0) continue;
    for (Vertex v : ball(g, s.center, s.radius)) hit[v] = 1;
  }
  cert.covered = static_cast<int>(std::count(hit.begin(), hit.end(), 1));
  cert.valid = a.well_formed(g) && cert.covered == g.order();
  return cert;
}

BurnAssignment resolve_center_collisions(const Graph& g, std::span<const Spark> raw) {
  std::vector<Spark> sparks(raw.begin(), raw.end());
  std::stable_sort(sparks.begin(), sparks.end(),
                   [](const Spark& a, const Spark& b) { return a.radius > b.radius; });
  for (std::size_t i = 0; i < sparks.size(); ++i) {
    if (!g.contains(sparks[i].center)) throw std::invalid_argument("spark center out of range");
    if (i > 0 && sparks[i].radius == sparks[i - 1].radius)
      throw std::invalid_argument("spark radii must be distinct");
  }
  BurnAssignment out;
  std::vector<char> taken(g.order(), 0);
  std::vector<Spark> displaced;
  for (const auto& s : sparks) {
    if (!taken[s.center]) {
      taken[s.center] = 1;
      out.sparks.push_back(s);
    } else {
      displaced.push_back(s);
    }
  }
  // Displaced sparks sit on a vertex already holding a larger ball, so moving
  // them anywhere keeps coverage.
  Vertex cursor = 0;
  for (const auto& s : displaced) {
    while (cursor < g.order() && taken[cursor]) ++cursor;
    if (cursor == g.order()) {
      out.relaxed = true;
      continue;
    }
    taken[cursor] = 1;
    out.sparks.push_back({s.radius, cursor});
  }
  out.normalize();
  return out;
}

namespace {

class CoverSearch {
public:
  CoverSearch(const Graph& g, const SparkSet& b)
      : g_(g), n_(g.order()), radii_(b.radii().rbegin(), b.radii().rend()), dist_(g.order()),
        balls_(radii_.size(), std::vector<VertexBits>(g.order())), used_(radii_.size(), 0) {
    order_vertices();
    bound_ball_sizes();
  }

  std::optional<std::vector<Spark>> run() {
    if (radii_.empty()) return std::nullopt;
    VertexBits all(n_, true);
    if (!search(all, n_)) return std::nullopt;
    return placed_;
  }

private:
  static constexpr int kExactEccentricityLimit = 1024;
  static constexpr int kExactBallBoundLimit = 2048;

  const std::vector<int>& distances(Vertex v) {
    if (dist_[v].empty()) dist_[v] = bfs_distances(g_, v);
    return dist_[v];
  }

  const VertexBits& ball_bits(std::size_t spark, Vertex c) {
    auto& slot = balls_[spark][c];
    if (slot.universe() == 0) {
      slot = VertexBits(n_);
      const auto& d = distances(c);
      for (Vertex v = 0; v < n_; ++v)
        if (d[v] <= radii_[spark]) slot.set(v);
    }
    return slot;
  }

  // Uncovered vertices are branched on in decreasing eccentricity: peripheral
  // vertices have the fewest covering placements.
  void order_vertices() {
    std::vector<int> ecc(n_, 0);
    if (n_ <= kExactEccentricityLimit) {
      for (Vertex v = 0; v < n_; ++v) {
        const auto& d = distances(v);
        ecc[v] = *std::max_element(d.begin(), d.end());
      }
    } else {
      auto d0 = bfs_distances(g_, 0);
      Vertex a = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
      auto da = bfs_distances(g_, a);
      Vertex b = static_cast<Vertex>(std::max_element(da.begin(), da.end()) - da.begin());
      auto db = bfs_distances(g_, b);
      for (Vertex v = 0; v < n_; ++v) ecc[v] = std::max(da[v], db[v]);
    }
    priority_.resize(n_);
    std::iota(priority_.begin(), priority_.end(), 0);
    std::stable_sort(priority_.begin(), priority_.end(),
                     [&](Vertex a, Vertex b) { return ecc[a] > ecc[b]; });
  }

  void bound_ball_sizes() {
    max_ball_.assign(radii_.size(), n_);
    if (n_ > kExactBallBoundLimit) return;
    for (std::size_t s = 0; s < radii_.size(); ++s) {
      int best = 0;
      for (Vertex c = 0; c < n_; ++c) {
        const auto& d = distances(c);
        int size = static_cast<int>(std::count_if(d.begin(), d.end(), [&](int x) { return x <= radii_[s]; }));
        best = std::max(best, size);
        if (best == n_) break;
      }
      max_ball_[s] = best;
    }
  }

  bool search(const VertexBits& uncovered, int remaining) {
    if (remaining == 0) return true;
    long long reach = 0;
    for (std::size_t s = 0; s < radii_.size() && reach < remaining; ++s)
      if (!used_[s]) reach += std::min(max_ball_[s], remaining);
    if (reach < remaining) return false;

    Vertex target = *std::find_if(priority_.begin(), priority_.end(),
                                  [&](Vertex v) { return uncovered.test(v); });
    struct Candidate {
      Vertex center;
      VertexBits cover;
      int gain;
    };
    for (std::size_t s = 0; s < radii_.size(); ++s) {
      if (used_[s]) continue;
      const auto& dt = distances(target);
      std::vector<Candidate> candidates;
      for (Vertex c = 0; c < n_; ++c) {
        if (dt[c] > radii_[s]) continue;
        VertexBits cover = ball_bits(s, c).intersect(uncovered);
        int gain = cover.count();
        candidates.push_back({c, std::move(cover), gain});
      }
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const Candidate& a, const Candidate& b) { return a.gain > b.gain; });
      // Placements whose fresh coverage is contained in another's are
      // dominated: centers may repeat during the search.
      std::vector<std::size_t> kept;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t k : kept)
          if (candidates[i].cover.subset_of(candidates[k].cover)) {
            dominated = true;
            break;
          }
        if (!dominated) kept.push_back(i);
      }
      used_[s] = 1;
      for (std::size_t k : kept) {
        const auto& cand = candidates[k];
        placed_.push_back({radii_[s], cand.center});
        VertexBits next = uncovered;
        next.subtract(cand.cover);
        if (search(next, remaining - cand.gain)) return true;
        placed_.pop_back();
      }
      used_[s] = 0;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> radii_;  // decreasing
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<VertexBits>> balls_;
  std::vector<int> max_ball_;
  std::vector<Vertex> priority_;
  std::vector<char> used_;
  std::vector<Spark> placed_;
};

}  // namespace

namespace detail {

std::optional<std::vector<Spark>> find_cover(const Graph& g, const SparkSet& b) {
  return CoverSearch(g, b).run();
}

}  // namespace detail

std::optional<BurnAssignment> is_set_burnable(const Graph& g, const SparkSet& b) {
  auto cover = detail::find_cover(g, b);
  if (!cover) return std::nullopt;
  BurnAssignment out = resolve_center_collisions(g, *cover);
  std::vector<char> taken(g.order(), 0);
  for (const auto& s : out.sparks) taken[s.center] = 1;
  Vertex cursor = 0;
  for (auto it = b.radii().rbegin(); it != b.radii().rend(); ++it) {
    int r = *it;
    bool present = std::any_of(out.sparks.begin(), out.sparks.end(),
                               [&](const Spark& s) { return s.radius == r; });
    if (present) continue;
    while (cursor < g.order() && taken[cursor]) ++cursor;
    if (cursor == g.order()) {
      out.relaxed = true;
      continue;
    }
    taken[cursor] = 1;
    out.sparks.push_back({r, cursor});
  }
  out.normalize();
  return out;
}

ExactResult burning_number_exact(const Graph& g, const ExactOptions& options) {
  if (g.order() > options.max_order && !options.allow_oversize)
    throw CapExceeded("exact solver cap exceeded: " + std::to_string(g.order()) + " > " +
                      std::to_string(options.max_order) + " vertices");
  for (int k = 1;; ++k) {
    if (auto a = is_set_burnable(g, SparkSet::range(0, k - 1))) return {k, std::move(*a)};
  }
}

long long ceil_sqrt_ratio(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("ceil_sqrt_ratio: denominator must be positive");
  if (num <= 0) return 0;
  auto s = static_cast<long long>(std::sqrt(static_cast<long double>(num) / den));
  auto fits = [&](long long x) { return static_cast<__int128>(x) * x * den >= num; };
  while (!fits(s)) ++s;
  while (s > 0 && fits(s - 1)) --s;
  return s;
}

}  // namespace gburn
