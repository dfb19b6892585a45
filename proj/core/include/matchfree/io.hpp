#ifndef MATCHFREE_IO_HPP
#define MATCHFREE_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "matchfree/graph.hpp"
#include "matchfree/ideal.hpp"
#include "matchfree/shellability.hpp"
#include "matchfree/simplicial.hpp"

namespace matchfree {

/// Edge-list text format: first line `n`, then one `u v` pair per line,
/// 0-indexed.  Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// graph6 (short form, n <= 62); a leading ">>graph6<<" marker is allowed.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

/// Reads a graph file by extension: .g6 as graph6 (first non-empty line),
/// anything else as the edge-list format.
Graph load_graph_file(const std::string& path);

/// Family specs: path:n, cycle:n, complete:n, kbip:a,b, star:n,
/// all_connected:n, tree:0-1,1-2,...  Returns (id, base graph) pairs;
/// all_connected expands to one entry per graph.
std::vector<std::pair<std::string, Graph>> parse_family_spec(const std::string& spec);

/// JSON forms (nlohmann dumps with sorted keys, so output is byte-stable).
std::string complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const std::string& text);
std::string ideal_to_json(const MonomialIdeal& ideal);
std::string certificate_to_json(const ShellingCertificate& cert);

}  // namespace matchfree

#endif
