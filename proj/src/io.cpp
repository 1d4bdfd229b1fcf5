#include "graphburn/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace gburn {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Whitespace-separated non-negative integers; nullopt on any other token.
std::optional<std::vector<long long>> numbers(std::string_view line) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    long long x = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), x);
    if (ec != std::errc() || x < 0) return std::nullopt;
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t') return std::nullopt;
    out.push_back(x);
  }
  return out;
}

[[noreturn]] void fail_line(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto cut = text.find('\n');
    auto raw = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines.emplace_back(number, raw);
  }
  if (lines.empty()) throw ParseError("line 1: missing 'n m' header", 1);

  auto header = numbers(lines[0].second);
  if (!header || header->size() != 2) fail_line(lines[0].first, "header must be two non-negative integers 'n m'");
  const long long n = (*header)[0], m = (*header)[1];
  if (n < 1) fail_line(lines[0].first, "graph needs at least one vertex");
  if (n > 50'000'000) fail_line(lines[0].first, "vertex count too large");
  if (static_cast<long long>(lines.size()) - 1 != m)
    fail_line(lines.back().first, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(lines.size() - 1));

  std::vector<Edge> edges;
  std::vector<std::pair<Edge, std::size_t>> located;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto pair = numbers(lines[i].second);
    if (!pair || pair->size() != 2) fail_line(lines[i].first, "expected two vertex ids");
    const long long u = (*pair)[0], v = (*pair)[1];
    if (u >= n || v >= n) fail_line(lines[i].first, "vertex id out of range 0.." + std::to_string(n - 1));
    if (u == v) fail_line(lines[i].first, "self-loop at " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    located.push_back({{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))}, lines[i].first});
  }
  std::sort(located.begin(), located.end());
  for (std::size_t i = 1; i < located.size(); ++i)
    if (located[i].first == located[i - 1].first)
      fail_line(located[i].second, "duplicate edge " + std::to_string(located[i].first.first) + " " +
                                       std::to_string(located[i].first.second));
  try {
    return Graph::build(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(std::string("line ") + std::to_string(lines[0].first) + ": " + e.what(), lines[0].first);
  }
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view bytes) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  if (bytes.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r')) bytes.remove_suffix(1);

  auto take = [&]() -> int {
    if (pos >= bytes.size()) throw ParseError("byte " + std::to_string(pos) + ": unexpected end of graph6 data", pos);
    const int c = static_cast<unsigned char>(bytes[pos]);
    if (c < 63 || c > 126)
      throw ParseError("byte " + std::to_string(pos) + ": character outside graph6 range 63..126", pos);
    ++pos;
    return c - 63;
  };

  long long n = take();
  if (n == 63) {
    const std::size_t wide = pos;
    if (pos < bytes.size() && bytes[pos] == '~') {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | take();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | take();
    }
    if (n > 50'000'000) throw ParseError("byte " + std::to_string(wide) + ": vertex count too large", wide);
  }
  const std::size_t body = pos;
  const long long bits = n * (n - 1) / 2;
  const long long needed = (bits + 5) / 6;
  if (static_cast<long long>(bytes.size() - pos) != needed)
    throw ParseError("byte " + std::to_string(bytes.size()) + ": expected " + std::to_string(needed) +
                         " adjacency bytes, found " + std::to_string(bytes.size() - pos),
                     bytes.size());

  std::vector<Edge> edges;
  long long k = 0;
  int chunk = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) chunk = take();
      if (chunk & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  try {
    return Graph::build(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError("byte " + std::to_string(body) + ": " + e.what(), body);
  }
}

std::string write_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int chunk = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph read_graph_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (file.extension() == ".g6") return parse_graph6(text);
  return parse_edge_list(text);
}

void write_text_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

Json assignment_to_json(const BurnAssignment& a) {
  Json sparks = Json::array();
  for (const auto& s : a.sparks) sparks.push_back({{"center", s.center}, {"radius", s.radius}});
  return sparks;
}

BurnAssignment assignment_from_json(const Json& j) {
  BurnAssignment a;
  try {
    const Json& sparks = j.is_array() ? j : j.at("sparks");
    for (const auto& s : sparks) a.sparks.push_back({s.at("radius").get<int>(), s.at("center").get<Vertex>()});
    if (j.is_object() && j.contains("relaxed")) a.relaxed = j.at("relaxed").get<bool>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  }
  return a;
}

Json certificate_to_json(const BurnCertificate& c) {
  Json j;
  j["covered"] = c.covered;
  j["sparks"] = assignment_to_json(c.assignment);
  j["valid"] = c.valid;
  if (c.assignment.relaxed) j["relaxed"] = true;
  return j;
}

Json growth_to_json(const GrowthCertificate& g) {
  return {{"growth", g.growth}, {"spine", g.spine.vertices}};
}

Json four_thirds_trace_to_json(const FourThirdsTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"center", s.center},
                     {"extracted", s.extracted.size()},
                     {"radius", s.radius},
                     {"remaining", s.remaining},
                     {"required", s.required()},
                     {"spark_index", s.spark_index}});
  const char* finish = trace.finish == FourThirdsTrace::Finish::Exhausted       ? "exhausted"
                       : trace.finish == FourThirdsTrace::Finish::SmallDiameter ? "small-diameter"
                                                                                : "exact-fallback";
  return {{"budget", trace.budget},
          {"final_order", trace.final_order},
          {"final_sparks", std::vector<int>(trace.final_sparks.radii().begin(), trace.final_sparks.radii().end())},
          {"finish", finish},
          {"ledger_consistent", counting_ledger_consistent(trace)},
          {"order", trace.order},
          {"steps", steps}};
}

Json reduction_proof_to_json(const ReductionProof& proof) {
  Json steps = Json::array();
  for (const auto& s : proof.steps)
    steps.push_back({{"adjusted", s.adjusted},
                     {"distance", s.distance},
                     {"max_hang", s.max_hang},
                     {"order_after", s.order_after},
                     {"order_before", s.order_before},
                     {"path", s.path.vertices},
                     {"spark", s.spark}});
  return {{"base_order", proof.base_order}, {"sparks", assignment_to_json(proof.assignment)}, {"steps", steps}};
}

Json edges_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"edges", edges}, {"n", g.order()}};
}

}  // namespace gburn
