#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "graphburn/burn.hpp"
#include "graphburn/graph.hpp"

namespace gburn {

/// A tree cut along a path P = (u, ..., v): the sides T1 (holding u) and T2
/// (holding v) are glued by the edge uv into the reduced tree; everything
/// else (the interior of P and what hangs from it) is the middle part.
struct ReductionInstance {
  Tree original;
  PathWitness path;
  std::vector<Vertex> side_u;  ///< T1, sorted original ids
  std::vector<Vertex> side_v;  ///< T2
  std::vector<Vertex> middle;  ///< T \ (T1 u T2)
  Tree reduced;
  std::vector<Vertex> reduced_to_original;
  std::vector<Vertex> original_to_reduced;  ///< -1 for middle vertices
  int distance = 0;  ///< d(u, v)
  int max_hang = 0;  ///< max distance from P of a middle vertex (0 if none)

  Vertex u() const { return path.front(); }
  Vertex v() const { return path.back(); }
};

/// Throws GraphError(InvalidPath) unless path is a simple path with at least
/// two vertices. For d(u,v) = 1 the sides are the two halves of the tree
/// split at uv, and the reduced tree is the original one.
ReductionInstance build_reduction(const Tree& t, const PathWitness& path);

/// d + 2m <= 2p + 2
bool reduction_applicable(const ReductionInstance& inst, int p);

class LiftFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct LiftResult {
  BurnAssignment assignment;
  int anchor_radius = 0;       ///< the argmax spark i
  bool anchor_near_u = true;   ///< false when the path indices were mirrored
  int reach = 0;               ///< i - d(x_i, {u,v})
  int proof_index = 0;         ///< d - (p - (reach - 1)), unclamped, from the anchor side
  int used_index = 0;          ///< index along P (from u) where spark p was placed
  bool clamped = false;        ///< proof_index fell outside [0, d]
  bool adjusted = false;       ///< the proof's position failed and another index on P was used
};

/// Lifts a (B \ {max B})-burning of the reduced tree to a B-burning of the
/// original. Spark p = max B goes on P at the argmax-derived index; if that
/// does not cover the tree, the nearest index on P that does is used and the
/// result is flagged `adjusted`. Throws std::invalid_argument for an invalid
/// reduced assignment or an inapplicable instance, LiftFailure if no index on
/// P works.
LiftResult lift_assignment(const ReductionInstance& inst, const SparkSet& b,
                           const BurnAssignment& reduced);

/// Burning-number form: a burning of the reduced tree with radii {0..p-1}
/// lifts to one of the original with radii {0..p}.
LiftResult lift_burning_sequence(const ReductionInstance& inst, const BurnAssignment& reduced);

struct ReductionRecord {
  PathWitness path;  ///< ids of the tree at that recursion level
  int spark = 0;
  int distance = 0;
  int max_hang = 0;
  int order_before = 0;
  int order_after = 0;
  bool adjusted = false;
};

struct ReductionProof {
  BurnAssignment assignment;
  std::vector<ReductionRecord> steps;  ///< outermost first
  int base_order = 0;  ///< size of the tree handed to the exact oracle
};

struct ReductionSearchOptions {
  int candidates_per_level = 3;
  int base_cap = 40;
};

/// Recursive prover: reduce along applicable subpaths of a longest path or a
/// spine, recurse with B \ {max B}, lift back; the exact oracle closes the
/// recursion. nullopt when nothing succeeds.
std::optional<ReductionProof> search_reduction(const Tree& t, const SparkSet& b,
                                               const ReductionSearchOptions& options = {});

}  // namespace gburn
