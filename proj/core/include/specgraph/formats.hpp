#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Malformed textual graph input. `offset` is the byte position within the
// line or document that failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// graph6: printable encoding of the upper triangle, bytes 63..126, with an
// optional ">>graph6<<" header. Only the single-byte order form (n <= 62)
// is supported; larger graphs travel as edge lists.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// Plain text edge list: first line "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Auto-detecting reader. A line starting with a digit means edge-list input
// (one graph per document); anything else is graph6, one graph per line.
std::vector<Graph> read_graphs(std::string_view text);
std::vector<Graph> read_graphs(std::istream& in);

}  // namespace specgraph
