// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every reference value is recomputed here from scratch (brute force or plain
// arithmetic) rather than taken from the library under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphburn/approx.hpp"
#include "graphburn/burn.hpp"
#include "graphburn/enumerate.hpp"
#include "graphburn/generators.hpp"
#include "graphburn/growth.hpp"
#include "graphburn/reduce.hpp"
#include "graphburn/verify.hpp"
#include "oracles.hpp"

using namespace gburn;

namespace {

constexpr std::uint64_t kSeed = 20240611;

// Smallest s with s*s*den >= num, by counting up.
long long ceil_sqrt_slow(long long num, long long den = 1) {
  long long s = 0;
  while (s * s * den < num) ++s;
  return s;
}

// Distinct radii, distinct in-range centers, and every vertex inside some
// ball, using one bounded BFS per spark.
bool covers_independently(const Graph& g, const BurnAssignment& a) {
  const int n = g.order();
  std::vector<char> radius_used, center_used(n, 0), hit(n, 0);
  for (const auto& s : a.sparks) {
    if (s.center < 0 || s.center >= n || s.radius < 0) return false;
    if (center_used[s.center]) return false;
    center_used[s.center] = 1;
    if (static_cast<int>(radius_used.size()) <= s.radius) radius_used.resize(s.radius + 1, 0);
    if (radius_used[s.radius]) return false;
    radius_used[s.radius] = 1;
    std::vector<int> dist(n, -1);
    std::vector<Vertex> queue{s.center};
    dist[s.center] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      hit[v] = 1;
      if (dist[v] == s.radius) continue;
      for (Vertex w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
  }
  for (char h : hit)
    if (!h) return false;
  return true;
}

std::vector<Tree> all_trees_up_to(int n_max) {
  std::vector<Tree> out;
  for (int n = 1; n <= n_max; ++n)
    for (auto& t : enumerate_trees(n)) out.push_back(std::move(t));
  return out;
}

std::vector<Tree> random_tree_corpus() {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> size(1, 10'000);
  std::vector<Tree> out;
  for (int i = 0; i < 1000; ++i) out.push_back(gen::random_tree(size(rng), rng));
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 = no time limit
  std::function<Outcome()> run;
};

Outcome fail(const std::string& why) { return {false, why}; }

// 1
Outcome path_formula() {
  for (int n = 1; n <= 100; ++n) {
    auto res = burning_number_exact(gen::path(n), {100, false});
    if (res.k != ceil_sqrt_slow(n)) return fail("P_" + std::to_string(n) + ": got " + std::to_string(res.k));
    if (!covers_independently(gen::path(n), res.assignment) || res.assignment.steps() != res.k)
      return fail("P_" + std::to_string(n) + ": witness does not burn the path in k steps");
  }
  return {true, "b(P_n) = ceil(sqrt n) for n = 1..100"};
}

// 2
Outcome conjecture() {
  std::ostringstream detail;
  long long expected = 0;
  for (int n = 1; n <= 9; ++n) expected += static_cast<long long>(oracle::prufer_dedup_count(n));
  VerifyOptions all;
  all.n_max = 9;
  auto r = run_verification(all);
  if (!r.violations.empty()) return fail(std::to_string(r.violations.size()) + " violations among all trees n <= 9");
  if (r.trees_checked != expected)
    return fail("checked " + std::to_string(r.trees_checked) + " trees, oracle count " + std::to_string(expected));
  if (r.counters.at("set_form_burnable") != expected) return fail("set form failed on some tree");

  long long caterpillars = 0;
  for (int n = 1; n <= 11; ++n) caterpillars += n < 4 ? 1 : (1LL << (n - 4)) + (1LL << ((n - 4) / 2));
  VerifyOptions cat;
  cat.n_max = 11;
  cat.growth_at_most = 1;
  auto c = run_verification(cat);
  if (!c.violations.empty()) return fail(std::to_string(c.violations.size()) + " violations among caterpillars");
  if (c.trees_checked != caterpillars)
    return fail("checked " + std::to_string(c.trees_checked) + " caterpillars, expected " + std::to_string(caterpillars));
  detail << r.trees_checked << " trees (n<=9) and " << c.trees_checked << " caterpillars (n<=11), 0 violations";
  return {true, detail.str()};
}

// 3
Outcome unfold(const std::vector<Tree>& small, const std::vector<Tree>& random) {
  long long runs = 0;
  for (const auto* corpus : {&small, &random})
    for (const auto& t : *corpus) {
      auto cert = unfold_burn(t);
      const long long bound = ceil_sqrt_slow(2LL * t.order());
      if (!cert.valid || !covers_independently(t, cert.assignment))
        return fail("invalid certificate on a tree with " + std::to_string(t.order()) + " vertices");
      if (cert.spark_count() > bound || cert.steps() > bound)
        return fail("n=" + std::to_string(t.order()) + ": " + std::to_string(cert.steps()) + " steps > " +
                    std::to_string(bound));
      ++runs;
    }
  return {true, std::to_string(runs) + " trees, all valid within ceil(sqrt(2n))"};
}

// 4
Outcome four_thirds(const std::vector<Tree>& small, const std::vector<Tree>& random) {
  long long runs = 0, fallbacks = 0, largest_fallback = 0;
  for (const auto* corpus : {&small, &random})
    for (const auto& t : *corpus) {
      FourThirdsResult res;
      try {
        res = four_thirds_burn(t);
      } catch (const InternalContradiction& e) {
        return fail(std::string("internal contradiction: ") + e.what());
      }
      const long long p = ceil_sqrt_slow(4LL * t.order(), 3) + 1;
      if (!res.certificate.valid || !covers_independently(t, res.certificate.assignment))
        return fail("invalid certificate on a tree with " + std::to_string(t.order()) + " vertices");
      if (res.certificate.assignment.max_radius() > p)
        return fail("radius above " + std::to_string(p) + " at n=" + std::to_string(t.order()));
      // Ledger recomputed here rather than trusting counting_ledger_consistent.
      long long accounted = res.trace.final_order;
      for (const auto& s : res.trace.steps) {
        const int k = s.spark_count - 1;
        if (static_cast<int>(s.extracted.size()) < s.radius + k / 2 + 1) return fail("undersized extraction");
        accounted += static_cast<long long>(s.extracted.size());
      }
      if (accounted != t.order() || !counting_ledger_consistent(res.trace))
        return fail("ledger inconsistent at n=" + std::to_string(t.order()));
      if (res.trace.finish == FourThirdsTrace::Finish::ExactFallback) {
        ++fallbacks;
        largest_fallback = std::max<long long>(largest_fallback, res.trace.final_order);
      }
      ++runs;
    }
  std::ostringstream out;
  out << runs << " trees valid, radii within ceil(sqrt(4n/3))+1, ledgers consistent; " << fallbacks
      << " exact final phases (largest remainder " << largest_fallback << ")";
  return {true, out.str()};
}

// 5
Outcome extraction() {
  const SparkSet b = SparkSet::range(0, 4);
  const int k = 4;
  long long steps = 0, small = 0;
  for (int n = 8; n <= 12; ++n)
    for (const auto& t : enumerate_trees(n)) {
      ExtractionOutcome outcome;
      try {
        outcome = find_extraction(t, b);
      } catch (const InternalContradiction& e) {
        return fail(std::string("internal contradiction: ") + e.what());
      }
      const int diam = oracle::diameter(t);
      if (std::holds_alternative<SmallDiameter>(outcome)) {
        if (diam > b.max()) return fail("small-diameter outcome with diameter " + std::to_string(diam));
        ++small;
        continue;
      }
      const auto& s = std::get<ExtractionStep>(outcome);
      if (s.spark_index < k / 2 || s.spark_index > k || b[s.spark_index] != s.radius) return fail("index out of range");
      auto d = oracle::distance_matrix(t);
      std::vector<char> in_x(t.order(), 0), rest(t.order(), 1);
      for (Vertex x : s.extracted) {
        if (d[s.center][x] > s.radius) return fail("extracted vertex outside the ball");
        in_x[x] = 1;
        rest[x] = 0;
      }
      if (static_cast<int>(s.extracted.size()) < s.radius + k / 2 + 1) return fail("extraction too small");
      if (!oracle::connected_subset(t, rest)) return fail("complement disconnected");
      if (!oracle::connected_subset(t, in_x)) return fail("extracted set disconnected");
      ++steps;
    }
  return {true, std::to_string(steps) + " extractions and " + std::to_string(small) +
                    " small-diameter outcomes, all invariants rechecked"};
}

// 6
Outcome reduction() {
  long long checked = 0, adjusted = 0, clamped = 0, failures = 0;
  std::string first_failure;
  for (int n = 2; n <= 10; ++n)
    for (const auto& t : enumerate_trees(n))
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          auto inst = build_reduction(t, tree_path(t, u, v));
          for (int mask = 1; mask < 32; ++mask) {
            std::vector<int> radii;
            for (int r = 0; r < 5; ++r)
              if (mask & (1 << r)) radii.push_back(r);
            SparkSet b(radii);
            if (!reduction_applicable(inst, b.max())) continue;
            auto reduced = is_set_burnable(inst.reduced, b.without(b.max()));
            if (!reduced) continue;
            ++checked;
            try {
              auto lift = lift_assignment(inst, b, *reduced);
              if (lift.adjusted) ++adjusted;
              if (lift.clamped) ++clamped;
              const bool placed_all = static_cast<int>(b.size()) > n || lift.assignment.radii() == radii;
              if (!covers_independently(t, lift.assignment) || !placed_all) {
                ++failures;
                if (first_failure.empty()) first_failure = "invalid lift at n=" + std::to_string(n);
              }
            } catch (const std::exception& e) {
              ++failures;
              if (first_failure.empty()) first_failure = e.what();
            }
          }
        }
  if (failures) return fail(std::to_string(failures) + " failed lifts of " + std::to_string(checked) + "; " + first_failure);
  std::ostringstream out;
  out << checked << " lifts valid; the literal placement index needed adjusting in " << adjusted << " and was outside [0,d] in "
      << clamped;
  return {true, out.str()};
}

std::vector<Graph> degree_corpus(int d, int count, int n_lo, int n_hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(n_lo, n_hi);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(gen::random_min_degree(size(rng), d, rng));
  return out;
}

// 7
Outcome leafy(const std::vector<Graph>& deg3, const std::vector<Graph>& deg4) {
  for (int d : {3, 4})
    for (const auto& g : d == 3 ? deg3 : deg4) {
      if (g.min_degree() < d) return fail("corpus graph below the degree floor");
      Tree t = leafy_spanning_tree(g, d);
      if (!oracle::spanning_tree_of(g, t)) return fail("output is not a spanning tree");
      const long long n = g.order(), leaf_count = static_cast<long long>(leaves(t).size());
      const bool ok = d == 3 ? 4 * leaf_count >= n + 4 : 5 * leaf_count >= 2 * n + 8;
      if (!ok)
        return fail("min degree " + std::to_string(d) + ", n=" + std::to_string(n) + ": only " +
                    std::to_string(leaf_count) + " leaves");
    }
  return {true, std::to_string(deg3.size()) + " degree-3 and " + std::to_string(deg4.size()) +
                    " degree-4 graphs meet their leaf bounds"};
}

// Smallest n0 with ceil(sqrt(4(3n-8)/15)) + 2 <= ceil(sqrt n) for all n0 <= n <= 10^6.
long long threshold_slow() {
  long long last_fail = 0, a = 0, b = 0;
  for (long long n = 1; n <= 1'000'000; ++n) {
    const long long num = 4 * (3 * n - 8);
    while (a * a * 15 < num) ++a;
    while (b * b < n) ++b;
    const long long lhs = (num <= 0 ? 0 : a) + 2;
    if (lhs > b) last_fail = n;
  }
  return last_fail + 1;
}

// 8
Outcome mindeg(const std::vector<Graph>& deg3, const std::vector<Graph>& deg4, long long n0) {
  if (mindeg4_threshold() != n0)
    return fail("library threshold " + std::to_string(mindeg4_threshold()) + " != rescanned " + std::to_string(n0));
  for (const auto& g : deg3) {
    auto res = mindeg_burn(g, 3);
    if (!covers_independently(g, res.certificate.assignment)) return fail("invalid degree-3 certificate");
    if (res.certificate.steps() > ceil_sqrt_slow(g.order()) + 2)
      return fail("degree 3, n=" + std::to_string(g.order()) + ": " + std::to_string(res.certificate.steps()) + " steps");
  }
  int large = 0;
  for (const auto& g : deg4) {
    auto res = mindeg_burn(g, 4);
    if (!covers_independently(g, res.certificate.assignment)) return fail("invalid degree-4 certificate");
    if (g.order() < n0) continue;
    ++large;
    if (res.certificate.steps() > ceil_sqrt_slow(g.order()))
      return fail("degree 4, n=" + std::to_string(g.order()) + ": " + std::to_string(res.certificate.steps()) + " steps");
  }
  if (large == 0) return fail("no degree-4 graph reached n0");
  return {true, "n0 = " + std::to_string(n0) + "; " + std::to_string(deg3.size()) + " degree-3 within ceil(sqrt n)+2, " +
                    std::to_string(large) + " degree-4 graphs with n >= n0 within ceil(sqrt n)"};
}

// 9
Outcome growth(const std::vector<Tree>& small) {
  long long checked = 0;
  for (const auto& t : small) {
    const int g = growth_of(t).growth;
    if (g != growth_oracle(t)) return fail("mismatch with growth_oracle at n=" + std::to_string(t.order()));
    if (t.order() <= 10 && g != oracle::growth(t)) return fail("mismatch with the distance-matrix scan");
    ++checked;
  }
  return {true, std::to_string(checked) + " trees, 0 mismatches"};
}

// 10
Outcome enumeration() {
  std::ostringstream out;
  for (int n = 1; n <= 10; ++n) {
    const auto got = enumerate_trees(n).size();
    const auto want = oracle::prufer_dedup_count(n);
    if (got != want)
      return fail("n=" + std::to_string(n) + ": " + std::to_string(got) + " != " + std::to_string(want));
    out << (n > 1 ? " " : "") << got;
  }
  return {true, "counts n=1..10: " + out.str()};
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto timed = [](const std::function<void()>& f) {
    auto t0 = clock::now();
    f();
    return std::chrono::duration<double>(clock::now() - t0).count();
  };

  std::vector<Tree> small, random;
  std::vector<Graph> deg3, deg4;
  long long n0 = 0;
  const double setup = timed([&] {
    small = all_trees_up_to(12);
    random = random_tree_corpus();
    n0 = threshold_slow();
    deg3 = degree_corpus(3, 500, 4, 600, kSeed + 3);
    deg4 = degree_corpus(4, 500, 5, static_cast<int>(2 * n0), kSeed + 4);
  });
  std::printf("corpora: %zu trees n<=12, %zu random trees n<=10000, 500+500 degree graphs, n0=%lld (%.1f s)\n",
              small.size(), random.size(), n0, setup);

  std::vector<Criterion> criteria{
      {1, "path formula", 60, path_formula},
      {2, "conjecture at desk scale", 600, conjecture},
      {3, "unfold burner guarantee", 300, [&] { return unfold(small, random); }},
      {4, "four-thirds burner guarantee", 600, [&] { return four_thirds(small, random); }},
      {5, "extraction lemma", 0, extraction},
      {6, "reduction lemma", 0, reduction},
      {7, "leafy spanning trees", 120, [&] { return leafy(deg3, deg4); }},
      {8, "min-degree pipelines", 0, [&] { return mindeg(deg3, deg4, n0); }},
      {9, "growth oracle equivalence", 300, [&] { return growth(small); }},
      {10, "enumeration counts", 0, enumeration},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    double seconds = 0;
    try {
      seconds = timed([&] { out = c.run(); });
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    if (out.pass && c.budget_seconds > 0 && seconds > c.budget_seconds) {
      out.pass = false;
      out.detail += "; over the time budget";
    }
    if (!out.pass) ++failed;
    std::printf("[%s] %2d %-30s %8.2f s  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, seconds, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
