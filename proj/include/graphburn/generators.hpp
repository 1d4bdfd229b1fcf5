#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graphburn/graph.hpp"

namespace gburn::gen {

Tree path(int n);
/// K_{1,leaves}; the center is vertex 0.
Tree star(int leaves);
/// Legs of the given lengths joined at vertex 0.
Tree spider(const std::vector<int>& legs);
/// Spine of `spine` vertices, hairs[i] pendant leaves on spine vertex i.
Tree caterpillar(const std::vector<int>& hairs);
/// Decodes a Prufer sequence over 0..n-1 (length n-2).
Tree from_prufer(int n, const std::vector<int>& code);
/// Uniform labeled tree on n vertices.
Tree random_tree(int n, std::mt19937_64& rng);

Graph complete(int n);
Graph cycle(int n);
Graph petersen();
Graph hypercube(int dim);
/// Connected graph with every degree >= min_degree: a random spanning tree plus
/// random edges until the degree floor holds. Needs n > min_degree.
Graph random_min_degree(int n, int min_degree, std::mt19937_64& rng);

/// "path:9", "star:5", "spider:2,3,4", "caterpillar:1,0,2", "random-tree:100",
/// "complete:5", "cycle:6", "petersen", "hypercube:4", "mindeg:40,3".
/// Throws std::invalid_argument on an unknown spec.
Graph from_spec(const std::string& spec, std::uint64_t seed);

}  // namespace gburn::gen
