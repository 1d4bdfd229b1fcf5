#pragma once

#include <vector>

#include "graphburn/burn.hpp"
#include "graphburn/graph.hpp"

namespace gburn {

/// Growth k of a tree with a spine achieving it.
struct GrowthCertificate {
  int growth = 0;
  PathWitness spine;
  std::vector<int> distance_to_spine;
};

/// Iterated simultaneous leaf pruning. The number of rounds until the survivors
/// form a path is the growth, and the surviving path is a spine.
///
/// Why the round count r is exact: a vertex deleted in round j has a neighbour
/// that survives round j, so every vertex is within r of the survivors. If
/// some path Q has every vertex within k of it, each branch hanging off Q has
/// height below k and is gone after k rounds, leaving a subpath of Q; hence
/// r <= k.
GrowthCertificate growth_of(const Tree& t);

/// Brute force over all O(n^2) tree paths. Throws CapExceeded above max_order.
int growth_oracle(const Tree& t, int max_order = 14);

/// True when the graph is a path (every degree <= 2 on a tree).
bool is_path_tree(const Tree& t);

/// {0..k} subset of B and sum over B of (2i+1) >= n, with k = growth.
bool is_burning_set(const Tree& t, const SparkSet& b);

}  // namespace gburn
