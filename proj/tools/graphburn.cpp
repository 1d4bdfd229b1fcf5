// Command-line front end for the graph burning library.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graphburn/approx.hpp"
#include "graphburn/burn.hpp"
#include "graphburn/enumerate.hpp"
#include "graphburn/generators.hpp"
#include "graphburn/growth.hpp"
#include "graphburn/io.hpp"
#include "graphburn/reduce.hpp"
#include "graphburn/verify.hpp"

using namespace gburn;

namespace {

enum Exit : int {
  kOk = 0,
  kNegative = 1,
  kInputError = 2,
  kCapExceeded = 3,
  kContradiction = 4,
  kInternalError = 5,
};

constexpr const char* kExitFooter =
    "Exit codes:\n"
    "  0  success\n"
    "  1  negative verdict (invalid certificate, violations found, no reduction found)\n"
    "  2  input error (unreadable file, malformed format, bad flags, precondition failed)\n"
    "  3  size cap exceeded (raise it with --max-n / --force where offered)\n"
    "  4  INTERNAL CONTRADICTION: a construction guaranteed by a theorem failed\n"
    "  5  unexpected internal error";

struct InputSource {
  std::string file;
  std::string generate;
  std::uint64_t seed = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", file, "Graph file: edge list, or graph6 when the name ends in .g6");
    cmd->add_option("--generate", generate,
                    "Generator instead of a file: path:N, star:L, spider:a,b,..., caterpillar:h0,h1,...,\n"
                    "random-tree:N, complete:N, cycle:N, petersen, hypercube:D, mindeg:N,D");
    cmd->add_option("--seed", seed, "Seed for randomized generators")->default_val(1);
  }

  Graph load() const {
    if (file.empty() == generate.empty())
      throw std::invalid_argument("give exactly one of an input file or --generate");
    if (!generate.empty()) return gen::from_spec(generate, seed);
    return read_graph_file(file);
  }
};

Tree as_tree(const Graph& g) {
  if (g.edge_count() + 1 != static_cast<std::size_t>(g.order()))
    throw GraphError(GraphErrorKind::NotATree, "input is not a tree: " + std::to_string(g.order()) +
                                                   " vertices, " + std::to_string(g.edge_count()) + " edges");
  return Tree(g);
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw std::invalid_argument("bad integer '" + item + "' in list");
    out.push_back(x);
  }
  return out;
}

void emit(const Json& doc, const std::string& out_file) {
  const std::string text = doc.dump(2) + "\n";
  if (out_file.empty())
    std::cout << text;
  else
    write_text_file(out_file, text);
}

struct BurnArgs {
  InputSource input;
  std::string algo = "four-thirds";
  int max_n = 24;
  bool force = false;
  bool trace = false;
  std::string out;
};

int run_burn(const BurnArgs& a) {
  Graph g = a.input.load();
  const int n = g.order();
  Json doc;
  doc["algorithm"] = a.algo;
  doc["n"] = n;
  BurnCertificate cert;

  if (a.algo == "exact") {
    auto res = burning_number_exact(g, {a.max_n, a.force});
    cert = validate(g, res.assignment);
    doc["burning_number"] = res.k;
    std::cout << "k=" << res.k << "\n";
  } else if (a.algo == "unfold") {
    cert = unfold_burn(g);
    doc["bound"] = ceil_sqrt_ratio(2LL * n);
  } else if (a.algo == "four-thirds") {
    auto res = four_thirds_burn_graph(g);
    cert = res.certificate;
    doc["bound"] = four_thirds_budget(n);
    if (a.trace) {
      Json trace = four_thirds_trace_to_json(res.trace);
      // one compact line per extraction on stderr, full trace in the document
      for (const auto& step : trace["steps"]) std::cerr << step.dump() << "\n";
      doc["trace"] = std::move(trace);
    }
  } else if (a.algo == "mindeg3" || a.algo == "mindeg4") {
    const int d = a.algo == "mindeg3" ? 3 : 4;
    auto res = mindeg_burn(g, d);
    cert = res.certificate;
    doc["leaf_count"] = res.leaf_count;
    doc["core_order"] = res.core_order;
    doc["core_budget"] = res.core_budget;
    doc["bound"] = ceil_sqrt_ratio(n) + (d == 3 ? 2 : 0);
    if (d == 4) doc["threshold_n0"] = mindeg4_threshold();
  } else if (a.algo == "reduce") {
    Tree t = as_tree(g);
    std::optional<ReductionProof> proof;
    int k = 1;
    for (; k <= static_cast<int>(ceil_sqrt_ratio(n)) + 1 && !proof; ++k)
      proof = search_reduction(t, SparkSet::range(0, k - 1));
    if (!proof) {
      std::cout << "no reduction proof found\n";
      return kNegative;
    }
    cert = validate(g, proof->assignment);
    if (a.trace) doc["trace"] = reduction_proof_to_json(*proof);
  } else {
    throw std::invalid_argument("unknown algorithm '" + a.algo + "'");
  }

  doc["certificate"] = certificate_to_json(cert);
  doc["steps"] = cert.steps();
  std::cout << "algorithm=" << a.algo << " n=" << n << " sparks=" << cert.spark_count()
            << " steps=" << cert.steps() << " valid=" << (cert.valid ? "yes" : "no") << "\n";
  emit(doc, a.out);
  return cert.valid ? kOk : kInternalError;
}

int run_validate(const std::string& cert_file, const InputSource& input) {
  std::ifstream in(cert_file);
  if (!in) throw std::runtime_error("cannot read " + cert_file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(cert_file + ": " + e.what(), e.byte);
  }
  const Json& body = j.is_object() && j.contains("certificate") ? j.at("certificate") : j;
  BurnAssignment a = assignment_from_json(body);
  Graph g = input.load();
  for (const auto& s : a.sparks)
    if (!g.contains(s.center) || s.radius < 0) {
      std::cout << "invalid: spark (" << s.radius << ", " << s.center << ") is out of range\n";
      return kNegative;
    }
  const bool formed = a.well_formed(g);
  auto cert = validate(g, a);
  const bool ok = formed && cert.valid;
  std::cout << (ok ? "valid" : "invalid") << ": covers " << cert.covered << " of " << g.order()
            << " vertices with " << cert.spark_count() << " sparks, " << cert.steps() << " steps"
            << (formed ? "" : "; radii or centers repeat") << "\n";
  return ok ? kOk : kNegative;
}

int run_growth(const InputSource& input, const std::string& out) {
  Tree t = as_tree(input.load());
  auto g = growth_of(t);
  std::cout << "growth=" << g.growth << " spine_length=" << g.spine.length() << "\n";
  Json doc = growth_to_json(g);
  doc["n"] = t.order();
  emit(doc, out);
  return kOk;
}

int run_reduce(const InputSource& input, const std::string& sparks_text, const std::string& path_text,
               const std::string& out) {
  Tree t = as_tree(input.load());
  SparkSet b(int_list(sparks_text));
  if (b.empty()) throw std::invalid_argument("--sparks must list at least one radius");
  Json doc;
  doc["n"] = t.order();
  doc["sparks"] = std::vector<int>(b.radii().begin(), b.radii().end());

  if (!path_text.empty()) {
    auto inst = build_reduction(t, PathWitness{int_list(path_text)});
    const int p = b.max();
    doc["instance"] = {{"distance", inst.distance},
                       {"max_hang", inst.max_hang},
                       {"middle", inst.middle},
                       {"reduced", edges_to_json(inst.reduced)},
                       {"reduced_to_original", inst.reduced_to_original},
                       {"side_u", inst.side_u},
                       {"side_v", inst.side_v}};
    const bool applicable = reduction_applicable(inst, p);
    doc["applicable"] = applicable;
    std::cout << "d=" << inst.distance << " m=" << inst.max_hang << " p=" << p
              << " applicable=" << (applicable ? "yes" : "no") << "\n";
    if (!applicable) {
      emit(doc, out);
      return kNegative;
    }
    auto reduced = is_set_burnable(inst.reduced, b.without(p));
    if (!reduced) {
      std::cout << "reduced tree is not " << b.without(p).to_string() << "-burnable\n";
      doc["reduced_burnable"] = false;
      emit(doc, out);
      return kNegative;
    }
    auto lift = lift_assignment(inst, b, *reduced);
    auto cert = validate(t, lift.assignment);
    doc["lift"] = {{"adjusted", lift.adjusted},
                   {"anchor_near_u", lift.anchor_near_u},
                   {"anchor_radius", lift.anchor_radius},
                   {"clamped", lift.clamped},
                   {"proof_index", lift.proof_index},
                   {"reach", lift.reach},
                   {"reduced_sparks", assignment_to_json(*reduced)},
                   {"used_index", lift.used_index}};
    doc["certificate"] = certificate_to_json(cert);
    std::cout << "lifted: spark " << p << " at path index " << lift.used_index
              << (lift.adjusted ? " (adjusted)" : "") << ", valid=" << (cert.valid ? "yes" : "no") << "\n";
    emit(doc, out);
    return cert.valid ? kOk : kInternalError;
  }

  auto proof = search_reduction(t, b);
  if (!proof) {
    std::cout << "no reduction proof found for " << b.to_string() << "\n";
    doc["found"] = false;
    emit(doc, out);
    return kNegative;
  }
  auto cert = validate(t, proof->assignment);
  doc["found"] = true;
  doc["trace"] = reduction_proof_to_json(*proof);
  doc["certificate"] = certificate_to_json(cert);
  std::cout << "reductions=" << proof->steps.size() << " base_order=" << proof->base_order
            << " valid=" << (cert.valid ? "yes" : "no") << "\n";
  emit(doc, out);
  return cert.valid ? kOk : kInternalError;
}

int run_leafy(const InputSource& input, int min_degree, const std::string& out) {
  Graph g = input.load();
  Tree t = leafy_spanning_tree(g, min_degree);
  const int leaf_count = static_cast<int>(leaves(t).size());
  const bool met = leaf_bound_met(g.order(), leaf_count, min_degree);
  std::cout << "n=" << g.order() << " leaves=" << leaf_count << " bound_met=" << (met ? "yes" : "no") << "\n";
  Json doc = edges_to_json(t);
  doc["leaf_count"] = leaf_count;
  doc["bound_met"] = met;
  doc["min_degree"] = min_degree;
  emit(doc, out);
  return met ? kOk : kNegative;
}

int run_enumerate(int n, std::optional<int> growth, const std::string& format) {
  if (format != "g6" && format != "levels" && format != "count")
    throw std::invalid_argument("format must be g6, levels or count");
  long long count = 0;
  for_each_tree(n, growth, [&](const Tree& t, const std::vector<int>& levels) {
    ++count;
    if (format == "g6") {
      std::cout << write_graph6(t) << "\n";
    } else if (format == "levels") {
      for (std::size_t i = 0; i < levels.size(); ++i) std::cout << (i ? " " : "") << levels[i];
      std::cout << "\n";
    }
  });
  if (format == "count") std::cout << count << "\n";
  return kOk;
}

int run_verify(const VerifyOptions& opt, const std::string& out, bool timing) {
  auto report = run_verification(opt);
  std::cout << "mode=" << to_string(report.mode) << " trees=" << report.trees_checked
            << " sets=" << report.sets_checked << " violations=" << report.violations.size()
            << " units=" << report.units << "\n";
  emit(report_to_json(report, timing), out);
  return report.violations.empty() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph burning: exact solver, approximation certificates, tree reductions, verification"};
  app.footer(kExitFooter);
  app.require_subcommand(1);

  BurnArgs burn;
  auto* burn_cmd = app.add_subcommand("burn", "Compute a burning certificate");
  burn.input.attach(burn_cmd);
  burn_cmd->add_option("--algo", burn.algo, "Algorithm")
      ->check(CLI::IsMember({"exact", "unfold", "four-thirds", "mindeg3", "mindeg4", "reduce"}))
      ->default_val("four-thirds");
  burn_cmd->add_option("--max-n", burn.max_n, "Size cap of the exact solver")->default_val(24)->check(CLI::PositiveNumber);
  burn_cmd->add_flag("--force", burn.force, "Run the exact solver above its cap");
  burn_cmd->add_flag("--trace", burn.trace, "Include the construction trace");
  burn_cmd->add_option("--out", burn.out, "Write the JSON document here instead of stdout");

  std::string cert_file;
  InputSource validate_input;
  auto* validate_cmd = app.add_subcommand("validate", "Check a certificate against a graph");
  validate_cmd->add_option("certificate", cert_file, "Certificate JSON")->required();
  validate_input.attach(validate_cmd);

  InputSource growth_input;
  std::string growth_out;
  auto* growth_cmd = app.add_subcommand("growth", "Growth and spine of a tree");
  growth_input.attach(growth_cmd);
  growth_cmd->add_option("--out", growth_out, "Write the JSON document here");

  InputSource reduce_input;
  std::string reduce_sparks, reduce_path, reduce_out;
  auto* reduce_cmd = app.add_subcommand("reduce", "Path reduction and lift, or a recursive reduction proof");
  reduce_input.attach(reduce_cmd);
  reduce_cmd->add_option("--sparks", reduce_sparks, "Spark set as a comma list, e.g. 0,1,2")->required();
  reduce_cmd->add_option("--path", reduce_path, "Explicit path u,...,v; otherwise search");
  reduce_cmd->add_option("--out", reduce_out, "Write the JSON document here");

  InputSource leafy_input;
  int leafy_degree = 3;
  std::string leafy_out;
  auto* leafy_cmd = app.add_subcommand("leafy-tree", "Spanning tree with many leaves");
  leafy_input.attach(leafy_cmd);
  leafy_cmd->add_option("--min-degree", leafy_degree, "3 or 4")->default_val(3)->check(CLI::IsMember({3, 4}));
  leafy_cmd->add_option("--out", leafy_out, "Write the JSON document here");

  int enum_n = 0;
  std::optional<int> enum_growth;
  std::string enum_format = "g6";
  auto* enum_cmd = app.add_subcommand("enumerate", "List non-isomorphic trees");
  enum_cmd->add_option("--n", enum_n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--growth", enum_growth, "Keep trees of growth at most this");
  enum_cmd->add_option("--format", enum_format, "g6, levels or count")->default_val("g6");

  VerifyOptions verify;
  std::string verify_mode = "conjecture", verify_out, verify_resume;
  std::optional<int> verify_growth;
  bool verify_no_timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive checks over all trees in a size range");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest tree order")->default_val(9)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n-min", verify.n_min, "Smallest tree order")->default_val(1)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--growth", verify_growth, "Only trees of growth at most this");
  verify_cmd->add_option("--mode", verify_mode, "conjecture, burning-sets or corollary")
      ->check(CLI::IsMember({"conjecture", "burning-sets", "corollary"}))
      ->default_val("conjecture");
  verify_cmd->add_option("--shards", verify.shards, "Worker threads")->default_val(1)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--resume", verify_resume, "Start at this work unit key (n:l0.l1.l2.l3)");
  verify_cmd->add_option("--max-n", verify.exact_cap, "Exact solver cap")->default_val(24);
  verify_cmd->add_flag("--no-timing", verify_no_timing, "Omit wall_seconds for byte-stable reports");
  verify_cmd->add_option("--out", verify_out, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*burn_cmd) return run_burn(burn);
    if (*validate_cmd) return run_validate(cert_file, validate_input);
    if (*growth_cmd) return run_growth(growth_input, growth_out);
    if (*reduce_cmd) return run_reduce(reduce_input, reduce_sparks, reduce_path, reduce_out);
    if (*leafy_cmd) return run_leafy(leafy_input, leafy_degree, leafy_out);
    if (*enum_cmd) return run_enumerate(enum_n, enum_growth, enum_format);
    if (*verify_cmd) {
      verify.mode = parse_verify_mode(verify_mode);
      verify.growth_at_most = verify_growth;
      if (!verify_resume.empty()) verify.resume_from = verify_resume;
      return run_verify(verify, verify_out, !verify_no_timing);
    }
  } catch (const InternalContradiction& e) {
    std::cerr << "INTERNAL CONTRADICTION: " << e.what() << "\n"
              << "A construction that a theorem guarantees has failed. Please keep the input.\n";
    return kContradiction;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const GraphError& e) {
    std::cerr << "invalid graph: " << e.what() << "\n";
    return kInputError;
  } catch (const LiftFailure& e) {
    std::cerr << "lift failed: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}
