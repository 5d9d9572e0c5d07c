#include "balsat/edge_list_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace balsat {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Hypergraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw std::runtime_error("edge list: missing header");
  std::istringstream header(line);
  long long n = -1, m = -1, r = -1;
  if (!(header >> n >> m >> r) || n < 0 || m < 0 || r < 2) {
    parse_error(line_no, "header must be 'n m r' with r >= 2");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      parse_error(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream row(line);
    Edge e;
    long long v;
    while (row >> v) {
      if (v < 0) parse_error(line_no, "negative vertex id");
      e.push_back(static_cast<Vertex>(v));
    }
    if (!row.eof()) parse_error(line_no, "non-numeric token");
    if (e.size() != static_cast<std::size_t>(r)) parse_error(line_no, "edge does not have r vertices");
    edges.push_back(std::move(e));
  }
  if (next_content_line(in, line, line_no)) parse_error(line_no, "trailing content after edges");
  return Hypergraph(static_cast<std::size_t>(n), static_cast<std::size_t>(r), std::move(edges));
}

Hypergraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Hypergraph& g,
                     const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << "# " << c << '\n';
  out << g.num_vertices() << ' ' << g.num_edges() << ' ' << g.uniformity() << '\n';
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const auto ev = g.edge(e);
    for (std::size_t i = 0; i < ev.size(); ++i) out << (i ? " " : "") << ev[i];
    out << '\n';
  }
}

void write_edge_list_file(const std::string& path, const Hypergraph& g,
                          const std::vector<std::string>& header_comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_edge_list(out, g, header_comments);
}

std::vector<EdgeSet> read_edge_sets(std::istream& in) {
  std::vector<EdgeSet> sets;
  std::string line;
  std::size_t line_no = 0;
  while (next_content_line(in, line, line_no)) {
    std::istringstream row(line);
    EdgeSet s;
    long long v;
    while (row >> v) {
      if (v < 0) parse_error(line_no, "negative edge index");
      s.push_back(static_cast<EdgeIndex>(v));
    }
    if (!row.eof()) parse_error(line_no, "non-numeric token");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sets.push_back(std::move(s));
  }
  return sets;
}

}  // namespace balsat
