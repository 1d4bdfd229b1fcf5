#include "graphburn/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "graphburn/burn.hpp"
#include "graphburn/growth.hpp"

namespace gburn {

namespace {

using Layout = std::vector<int>;

// Successor of a rooted level sequence, changing positions p.. onward.
std::optional<Layout> next_rooted(const Layout& pred, std::optional<std::size_t> from = std::nullopt) {
  std::size_t p;
  if (from) {
    p = *from;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout out = pred;
  for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
  return out;
}

// Left: first subtree of the root, shifted up a level. Rest: the root with
// its remaining subtrees.
std::pair<Layout, Layout> split(const Layout& layout) {
  std::size_t m = layout.size();
  bool one = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (one) {
      m = i;
      break;
    }
    one = true;
  }
  Layout left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

// The candidate itself if it is the canonical center-rooted form, otherwise
// the next candidate that is.
std::optional<Layout> next_tree(const Layout& candidate) {
  auto [left, rest] = split(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size())
      valid = false;
    else if (left.size() == rest.size() && left > rest)
      valid = false;
  }
  if (valid) return candidate;
  const std::size_t p = left.size();
  auto fresh = next_rooted(candidate, p);
  if (!fresh) return std::nullopt;
  if (candidate[p] > 2) {
    auto new_left = split(*fresh).first;
    const int h = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t i = 0; i < len; ++i) (*fresh)[fresh->size() - len + i] = static_cast<int>(i) + 1;
  }
  return fresh;
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("tree order must be at least 1");
  if (n >= 2) {
    for (int i = 0; i <= n / 2; ++i) pending_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) pending_.push_back(i);
  }
}

bool FreeTreeGenerator::next() {
  if (done_) return false;
  if (n_ == 1) {
    if (started_) {
      done_ = true;
      return false;
    }
    started_ = true;
    current_ = {0};
    return true;
  }
  if (started_) {
    auto succ = next_rooted(current_);
    if (!succ) {
      done_ = true;
      return false;
    }
    pending_ = std::move(*succ);
  }
  started_ = true;
  auto found = next_tree(pending_);
  if (!found) {
    done_ = true;
    return false;
  }
  current_ = std::move(*found);
  return true;
}

Tree FreeTreeGenerator::tree() const { return tree_from_level_sequence(current_); }

Tree tree_from_level_sequence(std::span<const int> levels) {
  if (levels.empty() || levels[0] != 0) throw std::invalid_argument("level sequence must start at depth 0");
  std::vector<Edge> edges;
  std::vector<Vertex> stack{0};
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i] < 1 || levels[i] > levels[i - 1] + 1)
      throw std::invalid_argument("level sequence jumps at position " + std::to_string(i));
    while (levels[stack.back()] >= levels[i]) stack.pop_back();
    edges.emplace_back(stack.back(), static_cast<Vertex>(i));
    stack.push_back(static_cast<Vertex>(i));
  }
  return Tree(Graph::build(static_cast<int>(levels.size()), edges), 0);
}

void for_each_tree(int n, std::optional<int> growth_at_most,
                   const std::function<void(const Tree&, const std::vector<int>&)>& visit, int cap) {
  if (n > cap)
    throw CapExceeded("tree enumeration is capped at n = " + std::to_string(cap) + ", got " +
                      std::to_string(n));
  FreeTreeGenerator gen(n);
  while (gen.next()) {
    Tree t = gen.tree();
    if (growth_at_most && growth_of(t).growth > *growth_at_most) continue;
    visit(t, gen.level_sequence());
  }
}

std::vector<Tree> enumerate_trees(int n, std::optional<int> growth_at_most, int cap) {
  std::vector<Tree> out;
  for_each_tree(n, growth_at_most, [&](const Tree& t, const std::vector<int>&) { out.push_back(t); }, cap);
  return out;
}

}  // namespace gburn
