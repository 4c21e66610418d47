#ifndef DIHEDRANT_GRAPH_IO_HPP
#define DIHEDRANT_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "dihedrant/graph.hpp"

namespace dihedrant {

/// "edgelist v1": first non-comment line "n m", then m lines "u v" with
/// 0 <= u < v < n. '#' starts a comment line. LF line ends.
Graph read_edgelist(std::istream& in);
void write_edgelist(std::ostream& out, const Graph& g);

/// McKay's graph6 format, one graph per line. The optional ">>graph6<<"
/// header is accepted on input and never written.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

Graph read_graph6(std::istream& in);
void write_graph6(std::ostream& out, const Graph& g);

/// Sniffs the format: a printable graph6 byte pattern vs. an edgelist header.
Graph read_graph_auto(std::istream& in);

} // namespace dihedrant

#endif
