#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "graphburn/burn.hpp"
#include "graphburn/graph.hpp"

namespace gburn {

/// Raised when a construction whose success is guaranteed by a theorem fails.
/// Never expected; the CLI maps it to its own exit code.
class InternalContradiction : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class DegreeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Spanning tree, outline walk of length <= 2n-1, optimal path burning of the
/// walk, positions mapped back to vertices. At most ceil(sqrt(2n)) sparks.
BurnCertificate unfold_burn(const Graph& g);

/// One application of the extraction lemma: the subtree X hanging below
/// r_{j} on a longest path, covered by the ball of radius b_i around r_{b_i}.
struct ExtractionStep {
  int spark_index = 0;  ///< i, position of the spark in B (ascending)
  int spark_count = 0;  ///< |B| = k+1
  int radius = 0;       ///< b_i
  Vertex center = 0;    ///< r_{b_i}
  std::vector<Vertex> extracted;
  int remaining = 0;  ///< vertices left after removing X

  /// Size guaranteed by the lemma: b_i + floor(k/2) + 1.
  int required() const { return radius + (spark_count - 1) / 2 + 1; }
};

struct SmallDiameter {
  int diameter = 0;
  Vertex center = 0;
};

using ExtractionOutcome = std::variant<SmallDiameter, ExtractionStep>;

/// Either diam(t) <= max B, or the first non-smoulder index i scanning from k
/// down to floor(k/2). Requires |B| >= 4 (std::invalid_argument otherwise);
/// throws InternalContradiction if every index is a smoulder.
ExtractionOutcome find_extraction(const Tree& t, const SparkSet& b);

struct FourThirdsTrace {
  enum class Finish { Exhausted, SmallDiameter, ExactFallback };

  int order = 0;
  int budget = 0;  ///< p; sparks are {0..p}
  std::vector<ExtractionStep> steps;  ///< ids of the input tree
  Finish finish = Finish::Exhausted;
  int final_order = 0;     ///< vertices left when the final phase began
  SparkSet final_sparks;   ///< sparks left when the final phase began
};

struct FourThirdsResult {
  BurnCertificate certificate;
  FourThirdsTrace trace;
};

/// ceil(sqrt(4n/3)) + 1
int four_thirds_budget(int n);

/// Repeated extraction with sparks {0..p}; nullopt if the final exact phase
/// finds the remainder unburnable with what is left.
std::optional<FourThirdsResult> four_thirds_burn_with_budget(const Tree& t, int p);

/// Budget four_thirds_budget(n). Throws InternalContradiction on failure.
FourThirdsResult four_thirds_burn(const Tree& t);

/// Routes a general graph through its BFS spanning tree from a max-degree vertex.
FourThirdsResult four_thirds_burn_graph(const Graph& g);

/// Every step extracted at least its guaranteed size, and the extracted sets
/// plus the final remainder account for every vertex exactly once.
bool counting_ledger_consistent(const FourThirdsTrace& trace);

/// Leaf-count guarantees: n/4 + 1 for min degree 3, (2n+8)/5 for min degree 4.
bool leaf_bound_met(int n, int leaf_count, int min_degree);

/// Spanning tree grown by leaf expansions. Throws DegreeError unless
/// min_degree is 3 or 4 and every vertex has at least that degree.
Tree leafy_spanning_tree(const Graph& g, int min_degree);

struct MindegResult {
  BurnCertificate certificate;
  Tree spanning_tree;
  int leaf_count = 0;
  int core_order = 0;  ///< vertices of the spanning tree minus its leaves
  int core_budget = 0;  ///< p used by the four-thirds run on the core
};

/// Leafy spanning tree, delete its leaves, burn the core, grow every radius
/// by one.
MindegResult mindeg_burn(const Graph& g, int min_degree);

/// Smallest n0 such that ceil(sqrt(4(3n-8)/15)) + 2 <= ceil(sqrt(n)) for every
/// n0 <= n <= scan_limit.
int mindeg4_threshold(int scan_limit = 1'000'000);

}  // namespace gburn
