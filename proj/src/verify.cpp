#include "graphburn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

#include "graphburn/burn.hpp"
#include "graphburn/enumerate.hpp"
#include "graphburn/growth.hpp"

namespace gburn {

const char* to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::Conjecture: return "conjecture";
    case VerifyMode::BurningSets: return "burning-sets";
    case VerifyMode::Corollary: return "corollary";
  }
  return "?";
}

VerifyMode parse_verify_mode(const std::string& text) {
  if (text == "conjecture") return VerifyMode::Conjecture;
  if (text == "burning-sets") return VerifyMode::BurningSets;
  if (text == "corollary") return VerifyMode::Corollary;
  throw std::invalid_argument("unknown verify mode '" + text + "'");
}

std::string unit_key(const std::vector<int>& level_sequence) {
  std::string key = std::to_string(level_sequence.size()) + ":";
  const std::size_t len = std::min<std::size_t>(level_sequence.size(), 4);
  for (std::size_t i = 0; i < len; ++i) {
    if (i) key += '.';
    key += std::to_string(level_sequence[i]);
  }
  return key;
}

namespace {

struct Unit {
  int n = 0;
  std::vector<int> prefix;
  std::vector<std::vector<int>> trees;
  std::string key;

  bool operator<(const Unit& o) const { return n != o.n ? n < o.n : prefix < o.prefix; }
};

struct Partial {
  long long trees = 0;
  long long sets = 0;
  std::map<std::string, long long> counters;
  std::map<std::string, long long> minima;
  std::vector<Violation> violations;

  void count(const std::string& name, bool pass) {
    auto& c = counters[name];
    if (pass) ++c;
  }
  void slack(const std::string& name, long long value) {
    auto it = minima.find(name);
    if (it == minima.end())
      minima.emplace(name, value);
    else
      it->second = std::min(it->second, value);
  }
};

Violation witness(const Unit& unit, const std::vector<int>& levels, const Tree& t, std::string detail) {
  return {unit.key, t.order(), levels, t.graph().edges(), std::move(detail)};
}

void check_conjecture(const Unit& unit, const std::vector<int>& levels, const Tree& t, const VerifyOptions& opt,
                      Partial& out) {
  const int n = t.order();
  const int bound = static_cast<int>(ceil_sqrt_ratio(n));
  const int b = burning_number_exact(t, {opt.exact_cap, false}).k;
  out.count("b_le_ceil_sqrt_n", b <= bound);
  out.count("b_eq_ceil_sqrt_n", b == bound);
  out.slack("ceil_sqrt_n_minus_b", bound - b);
  if (b > bound)
    out.violations.push_back(witness(unit, levels, t, "b = " + std::to_string(b) + " > ceil(sqrt n) = " +
                                                          std::to_string(bound)));
  const auto set = SparkSet::range(0, bound - 1);
  const bool set_ok = is_set_burnable(t, set).has_value();
  out.count("set_form_burnable", set_ok);
  if (!set_ok)
    out.violations.push_back(witness(unit, levels, t, "not " + set.to_string() + "-burnable"));
}

void check_burning_sets(const Unit& unit, const std::vector<int>& levels, const Tree& t,
                        const VerifyOptions& opt, Partial& out) {
  const int n = t.order();
  const int k = growth_of(t).growth;
  const int top = opt.n_max;  // radii universe {0..n_max}
  if (k > top) return;
  const int free_bits = top - k;
  for (long long mask = 0; mask < (1LL << free_bits); ++mask) {
    std::vector<int> radii;
    for (int r = 0; r <= k; ++r) radii.push_back(r);
    for (int bit = 0; bit < free_bits; ++bit)
      if (mask & (1LL << bit)) radii.push_back(k + 1 + bit);
    SparkSet b(radii);
    if (b.capacity() < n) continue;
    ++out.sets;
    out.count("burning_sets", true);
    if (static_cast<int>(b.size()) > n) {
      out.count("degenerate_more_sparks_than_vertices", true);
      continue;
    }
    const bool ok = is_set_burnable(t, b).has_value();
    out.count("burnable", ok);
    if (!ok) out.violations.push_back(witness(unit, levels, t, "burning set " + b.to_string() + " not realized"));
  }
}

void check_corollary(const Unit& unit, const std::vector<int>& levels, const Tree& t, const VerifyOptions& opt,
                     Partial& out) {
  const long long n = t.order();
  const long long k = growth_of(t).growth;
  const long long b = burning_number_exact(t, {opt.exact_cap, false}).k;
  const long long ceil_form = ceil_sqrt_ratio(n + 20 * k * k);
  const long long main_bound = ceil_sqrt_ratio(n) + 1;
  out.count("ceil_sqrt_n_plus_20k2", b <= ceil_form);
  out.count("sqrt_n_plus_20k2_unrounded", b * b <= n + 20 * k * k);
  out.count("ceil_sqrt_n_plus_1", b <= main_bound);
  out.slack("ceil_sqrt_n_plus_20k2_minus_b", ceil_form - b);
  out.slack("ceil_sqrt_n_plus_1_minus_b", main_bound - b);
  if (b > ceil_form)
    out.violations.push_back(witness(unit, levels, t, "b = " + std::to_string(b) + " > ceil(sqrt(n+20k^2)) = " +
                                                          std::to_string(ceil_form)));
  if (b > main_bound)
    out.violations.push_back(witness(unit, levels, t, "b = " + std::to_string(b) + " > ceil(sqrt n)+1 = " +
                                                          std::to_string(main_bound)));
}

Partial run_unit(const Unit& unit, const VerifyOptions& opt) {
  Partial out;
  for (const auto& levels : unit.trees) {
    Tree t = tree_from_level_sequence(levels);
    ++out.trees;
    switch (opt.mode) {
      case VerifyMode::Conjecture: check_conjecture(unit, levels, t, opt, out); break;
      case VerifyMode::BurningSets: check_burning_sets(unit, levels, t, opt, out); break;
      case VerifyMode::Corollary: check_corollary(unit, levels, t, opt, out); break;
    }
  }
  return out;
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  if (opt.n_min < 1 || opt.n_max < opt.n_min) throw std::invalid_argument("need 1 <= n_min <= n_max");
  if (opt.shards < 1) throw std::invalid_argument("shards must be positive");
  if (opt.mode != VerifyMode::BurningSets && opt.n_max > opt.exact_cap)
    throw CapExceeded("n_max " + std::to_string(opt.n_max) + " exceeds the exact solver cap " +
                      std::to_string(opt.exact_cap));
  if (opt.mode == VerifyMode::BurningSets && opt.n_max > 16)
    throw CapExceeded("burning-set sweeps are capped at n_max = 16");

  std::vector<Unit> units;
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    std::map<std::vector<int>, std::vector<std::vector<int>>> buckets;
    for_each_tree(n, opt.growth_at_most, [&](const Tree&, const std::vector<int>& levels) {
      std::vector<int> prefix(levels.begin(), levels.begin() + std::min<std::size_t>(levels.size(), 4));
      buckets[prefix].push_back(levels);
    });
    for (auto& [prefix, trees] : buckets) {
      Unit u{n, prefix, std::move(trees), {}};
      u.key = unit_key(u.trees.front());
      units.push_back(std::move(u));
    }
  }
  std::sort(units.begin(), units.end());

  VerificationReport report;
  report.mode = opt.mode;
  report.n_min = opt.n_min;
  report.n_max = opt.n_max;
  report.growth_at_most = opt.growth_at_most;
  report.resumed_from = opt.resume_from;
  if (opt.resume_from) {
    auto it = std::find_if(units.begin(), units.end(), [&](const Unit& u) { return u.key == *opt.resume_from; });
    if (it == units.end()) throw std::invalid_argument("unknown resume key '" + *opt.resume_from + "'");
    units.erase(units.begin(), it);
  }

  std::vector<Partial> results(units.size());
  std::vector<std::exception_ptr> errors(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      try {
        results[i] = run_unit(units[i], opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(opt.shards, std::max<std::size_t>(units.size(), 1));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t i = 0; i < units.size(); ++i) {
    auto& part = results[i];
    report.trees_checked += part.trees;
    report.sets_checked += part.sets;
    report.trees_per_n[units[i].n] += part.trees;
    for (auto& [name, c] : part.counters) report.counters[name] += c;
    for (auto& [name, m] : part.minima) {
      auto it = report.minima.find(name);
      if (it == report.minima.end())
        report.minima.emplace(name, m);
      else
        it->second = std::min(it->second, m);
    }
    for (auto& v : part.violations) report.violations.push_back(std::move(v));
  }
  report.units = static_cast<long long>(units.size());
  if (!units.empty()) {
    report.first_unit = units.front().key;
    report.last_unit = units.back().key;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

VerificationReport verify_conjecture(int n_max, std::optional<int> growth_at_most, int shards) {
  VerifyOptions opt;
  opt.mode = VerifyMode::Conjecture;
  opt.n_max = n_max;
  opt.growth_at_most = growth_at_most;
  opt.shards = shards;
  return run_verification(opt);
}

VerificationReport verify_burning_sets(int n_max, int shards) {
  VerifyOptions opt;
  opt.mode = VerifyMode::BurningSets;
  opt.n_max = n_max;
  opt.shards = shards;
  return run_verification(opt);
}

VerificationReport verify_corollary_bounds(int n_max, int shards) {
  VerifyOptions opt;
  opt.mode = VerifyMode::Corollary;
  opt.n_max = n_max;
  opt.shards = shards;
  return run_verification(opt);
}

Json report_to_json(const VerificationReport& r, bool include_timing) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json edges = Json::array();
    for (auto [a, b] : v.edges) edges.push_back({a, b});
    violations.push_back({{"detail", v.detail},
                          {"edges", edges},
                          {"level_sequence", v.level_sequence},
                          {"n", v.n},
                          {"unit", v.unit}});
  }
  Json per_n = Json::object();
  for (auto [n, c] : r.trees_per_n) per_n[std::to_string(n)] = c;
  Json j = {{"counters", r.counters},
            {"first_unit", r.first_unit},
            {"growth_at_most", r.growth_at_most ? Json(*r.growth_at_most) : Json(nullptr)},
            {"last_unit", r.last_unit},
            {"minima", r.minima},
            {"mode", to_string(r.mode)},
            {"n_max", r.n_max},
            {"n_min", r.n_min},
            {"resumed_from", r.resumed_from ? Json(*r.resumed_from) : Json(nullptr)},
            {"schema_version", 1},
            {"sets_checked", r.sets_checked},
            {"trees_checked", r.trees_checked},
            {"trees_per_n", per_n},
            {"units", r.units},
            {"violations", violations}};
  if (include_timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

}  // namespace gburn
