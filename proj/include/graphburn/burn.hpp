#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphburn/graph.hpp"

namespace gburn {

/// A finite set of distinct non-negative ball radii ("sparks").
class SparkSet {
public:
  SparkSet() = default;
  SparkSet(std::initializer_list<int> radii) : SparkSet(std::vector<int>(radii)) {}
  /// Throws std::invalid_argument on negative or repeated radii.
  explicit SparkSet(std::vector<int> radii);

  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static SparkSet range(int lo, int hi);

  std::span<const int> radii() const noexcept { return radii_; }
  std::size_t size() const noexcept { return radii_.size(); }
  bool empty() const noexcept { return radii_.empty(); }
  int max() const { return radii_.back(); }
  int min() const { return radii_.front(); }
  int operator[](std::size_t i) const { return radii_[i]; }
  bool contains(int r) const;
  SparkSet without(int r) const;
  /// Sum of 2r+1 over the set: the most vertices a path-like cover could reach.
  long long capacity() const;
  std::string to_string() const;

  bool operator==(const SparkSet&) const = default;

private:
  std::vector<int> radii_;  // strictly increasing
};

struct Spark {
  int radius = 0;
  Vertex center = 0;
  auto operator<=>(const Spark&) const = default;
};

/// Radius/center placements. Well-formed assignments have pairwise distinct
/// radii and pairwise distinct valid centers; `relaxed` marks that surplus
/// sparks had to be dropped because the graph has fewer vertices than sparks.
struct BurnAssignment {
  std::vector<Spark> sparks;
  bool relaxed = false;

  std::size_t size() const noexcept { return sparks.size(); }
  int max_radius() const;
  /// Burning steps this assignment certifies: max radius + 1 (0 if empty).
  int steps() const { return sparks.empty() ? 0 : max_radius() + 1; }
  std::vector<int> radii() const;
  bool well_formed(const Graph& g) const;
  /// Sorts sparks by decreasing radius.
  void normalize();
};

struct BurnCertificate {
  BurnAssignment assignment;
  int covered = 0;
  bool valid = false;

  int spark_count() const { return static_cast<int>(assignment.size()); }
  int steps() const { return assignment.steps(); }
};

class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Spreading-rule simulation. Entry i is the burned set (sorted) at the end of
/// step i+1; the run lasts sequence.size() steps. Throws std::invalid_argument
/// on repeated or out-of-range vertices.
std::vector<std::vector<Vertex>> simulate_classic(const Graph& g, std::span<const Vertex> sequence);

/// Recomputes the ball union from scratch.
BurnCertificate validate(const Graph& g, const BurnAssignment& a);

/// Keeps the larger radius on a shared center and moves the smaller spark to
/// the smallest unused vertex. If vertices run out the smallest surplus sparks
/// are dropped and the result is marked relaxed. Radii must be distinct.
BurnAssignment resolve_center_collisions(const Graph& g, std::span<const Spark> raw);

/// Exhaustive search for a B-burning assignment. Every radius of B is placed
/// (unneeded ones on unused vertices); the result is relaxed only when
/// |V| < |B|.
std::optional<BurnAssignment> is_set_burnable(const Graph& g, const SparkSet& b);

struct ExactOptions {
  int max_order = 24;
  bool allow_oversize = false;
};

struct ExactResult {
  int k = 0;
  BurnAssignment assignment;
};

/// Smallest k with G {0..k-1}-burnable, plus a witness. Throws CapExceeded
/// when the graph is larger than the cap and no override is given.
ExactResult burning_number_exact(const Graph& g, const ExactOptions& options = {});

namespace detail {
/// The raw cover search behind is_set_burnable: returns only the sparks that
/// were needed, centers possibly repeated.
std::optional<std::vector<Spark>> find_cover(const Graph& g, const SparkSet& b);
}  // namespace detail

/// Smallest s >= 0 with s*s*den >= num (ceil of sqrt(num/den)).
long long ceil_sqrt_ratio(long long num, long long den = 1);

}  // namespace gburn
