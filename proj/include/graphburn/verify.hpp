#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphburn/graph.hpp"
#include "graphburn/io.hpp"

namespace gburn {

enum class VerifyMode { Conjecture, BurningSets, Corollary };

const char* to_string(VerifyMode mode);
/// "conjecture", "burning-sets", "corollary"; std::invalid_argument otherwise.
VerifyMode parse_verify_mode(const std::string& text);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Conjecture;
  int n_min = 1;
  int n_max = 9;
  std::optional<int> growth_at_most;
  int shards = 1;  ///< worker threads
  /// Skip every work unit ordered before this key ("n:0.1.2.3").
  std::optional<std::string> resume_from;
  int exact_cap = 24;
};

struct Violation {
  std::string unit;
  int n = 0;
  std::vector<int> level_sequence;
  std::vector<Edge> edges;
  std::string detail;
};

struct VerificationReport {
  VerifyMode mode = VerifyMode::Conjecture;
  int n_min = 0;
  int n_max = 0;
  std::optional<int> growth_at_most;
  std::optional<std::string> resumed_from;
  long long trees_checked = 0;
  long long sets_checked = 0;  ///< (tree, B) pairs in burning-sets mode
  std::map<int, long long> trees_per_n;
  std::map<std::string, long long> counters;  ///< per-bound pass counts
  std::map<std::string, long long> minima;    ///< smallest slack seen per bound
  std::vector<Violation> violations;
  long long units = 0;
  std::string first_unit;
  std::string last_unit;
  double wall_seconds = 0;
};

/// Work unit key of a level sequence: tree order plus its first min(n, 4) levels.
std::string unit_key(const std::vector<int>& level_sequence);

/// Enumerates every tree in range, groups them into units by key, checks the
/// units on `shards` threads and folds the results in key order, so the report
/// does not depend on the thread count.
VerificationReport run_verification(const VerifyOptions& options);

/// b(T) <= ceil(sqrt n) and T is {0..ceil(sqrt n)-1}-burnable.
VerificationReport verify_conjecture(int n_max, std::optional<int> growth_at_most = std::nullopt, int shards = 1);
/// Every burning set over radii {0..n_max} is realized, for trees up to n_max.
VerificationReport verify_burning_sets(int n_max, int shards = 1);
/// b(T) <= ceil(sqrt(n + 20k^2)) with k the growth; also the unrounded form
/// and ceil(sqrt n) + 1.
VerificationReport verify_corollary_bounds(int n_max, int shards = 1);

/// Stable schema with sorted keys; wall_seconds only when include_timing.
Json report_to_json(const VerificationReport& report, bool include_timing = true);

}  // namespace gburn
