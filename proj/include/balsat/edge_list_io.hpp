#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "balsat/hypergraph.hpp"

namespace balsat {

// Text interchange format:
//   first non-comment line:  n m r
//   then m lines of r space-separated vertex ids
// Everything after '#' on a line is a comment.

Hypergraph read_edge_list(std::istream& in);
Hypergraph read_edge_list_file(const std::string& path);

/// `header_comments` are written as leading "# ..." lines.
void write_edge_list(std::ostream& out, const Hypergraph& g,
                     const std::vector<std::string>& header_comments = {});
void write_edge_list_file(const std::string& path, const Hypergraph& g,
                          const std::vector<std::string>& header_comments = {});

/// Edge-index sets, one per line as space-separated indices; '#' comments allowed.
std::vector<EdgeSet> read_edge_sets(std::istream& in);

}  // namespace balsat
