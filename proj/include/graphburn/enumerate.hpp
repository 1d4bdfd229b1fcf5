#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "graphburn/graph.hpp"

namespace gburn {

constexpr int kEnumerationCap = 18;

/// Free (unlabeled) trees on n vertices, each exactly once, as canonical
/// level sequences of a center-rooted tree (constant amortized time).
class FreeTreeGenerator {
public:
  /// Throws std::invalid_argument for n < 1.
  explicit FreeTreeGenerator(int n);

  /// Advances to the next tree; false when exhausted. Call before the first read.
  bool next();
  /// Depth of every vertex in preorder; vertex 0 is the root.
  const std::vector<int>& level_sequence() const { return current_; }
  Tree tree() const;

private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> current_;
  std::vector<int> pending_;
};

/// Preorder depth list to tree: each vertex hangs off the nearest earlier
/// vertex one level up. Throws std::invalid_argument on a malformed sequence.
Tree tree_from_level_sequence(std::span<const int> levels);

/// Calls visit(tree, level_sequence) for every free tree on n vertices whose
/// growth is at most growth_at_most (if given). Throws CapExceeded above cap.
void for_each_tree(int n, std::optional<int> growth_at_most,
                   const std::function<void(const Tree&, const std::vector<int>&)>& visit,
                   int cap = kEnumerationCap);

std::vector<Tree> enumerate_trees(int n, std::optional<int> growth_at_most = std::nullopt,
                                  int cap = kEnumerationCap);

}  // namespace gburn
