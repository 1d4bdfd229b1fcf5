#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "graphburn/approx.hpp"
#include "graphburn/burn.hpp"
#include "graphburn/graph.hpp"
#include "graphburn/growth.hpp"
#include "graphburn/reduce.hpp"

namespace gburn {

/// Malformed input. `position` is a 1-based line (edge list) or 0-based byte
/// offset (graph6), as stated in the message.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// "n m" header then m lines "u v". Blank lines and '#' comments are skipped.
/// Graph construction errors are reported as ParseError with the line of the
/// offending edge where one exists.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Single-graph graph6, optional ">>graph6<<" header, trailing newline allowed.
Graph parse_graph6(std::string_view bytes);
std::string write_graph6(const Graph& g);

/// Files ending in .g6 are read as graph6, everything else as an edge list.
/// Throws std::runtime_error when the file cannot be read.
Graph read_graph_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, const std::string& text);

using Json = nlohmann::json;

Json assignment_to_json(const BurnAssignment& a);
/// Throws ParseError (position 0) on a malformed document.
BurnAssignment assignment_from_json(const Json& j);
Json certificate_to_json(const BurnCertificate& c);
Json growth_to_json(const GrowthCertificate& g);
Json four_thirds_trace_to_json(const FourThirdsTrace& trace);
Json reduction_proof_to_json(const ReductionProof& proof);
Json edges_to_json(const Graph& g);

}  // namespace gburn
