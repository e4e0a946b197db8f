#ifndef EDK_IO_HPP
#define EDK_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edk/graph.hpp"

namespace edk {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

/// Reads either an edge list or the undirected DOT subset `graph { a -- b; }`.
///
/// Edge-list lines hold `A B` (an edge) or `v A` (an isolated vertex); `#`
/// starts a comment. Vertex ids follow first appearance of each label.
/// Duplicate edges are merged with a warning; self-loops are errors.
ParsedGraph parse_graph(std::string_view text);

ParsedGraph read_graph_file(const std::string& path);

std::string write_edge_list(const Graph& g);
std::string write_dot(const Graph& g);

}  // namespace edk

#endif  // EDK_IO_HPP
