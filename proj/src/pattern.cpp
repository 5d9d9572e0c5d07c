#include "balsat/pattern.hpp"

#include <charconv>
#include <stdexcept>

#include "balsat/edge_list_io.hpp"

namespace balsat {

namespace {

bool assign_parts(const Hypergraph& g, std::size_t v, PartiteWitness& part,
                  std::vector<char>& assigned) {
  if (v == g.num_vertices()) return true;
  const std::size_t r = g.uniformity();
  // Vertex 0 goes to part 0: parts are interchangeable.
  const std::uint32_t max_part = v == 0 ? 1 : static_cast<std::uint32_t>(r);
  for (std::uint32_t p = 0; p < max_part; ++p) {
    bool ok = true;
    for (EdgeIndex e : g.incident(static_cast<Vertex>(v))) {
      for (Vertex u : g.edge(e)) {
        if (u != v && assigned[u] && part[u] == p) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) continue;
    part[v] = p;
    assigned[v] = 1;
    if (assign_parts(g, v + 1, part, assigned)) return true;
    assigned[v] = 0;
  }
  return false;
}

std::size_t parse_size(std::string_view token, std::string_view descriptor) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("bad number in pattern descriptor '" + std::string(descriptor) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

std::optional<PartiteWitness> find_r_partition(const Hypergraph& g) {
  PartiteWitness part(g.num_vertices(), 0);
  std::vector<char> assigned(g.num_vertices(), 0);
  if (assign_parts(g, 0, part, assigned)) return part;
  return std::nullopt;
}

Pattern::Pattern(Hypergraph graph, std::string name)
    : graph_(std::move(graph)), name_(std::move(name)) {
  if (graph_.num_edges() < 2) throw std::invalid_argument("pattern must have at least two edges");
  for (Vertex v = 0; v < graph_.num_vertices(); ++v) {
    if (graph_.degree(v) == 0) {
      throw std::invalid_argument("pattern vertex " + std::to_string(v) + " is isolated");
    }
  }
  partition_ = find_r_partition(graph_);
}

Pattern builtin_pattern(std::string_view descriptor) {
  std::string_view d = descriptor;
  if (d.starts_with("builtin:")) d.remove_prefix(8);
  const auto parts = split(d, ':');
  const std::string name(d);
  const auto arity = [&](std::size_t want) {
    if (parts.size() != want + 1) {
      throw std::invalid_argument("pattern descriptor '" + name + "' expects " +
                                  std::to_string(want) + " argument(s)");
    }
  };
  if (parts[0] == "cycle") {
    arity(1);
    return Pattern(cycle(parse_size(parts[1], descriptor)), name);
  }
  if (parts[0] == "path") {
    arity(1);
    return Pattern(path(parse_size(parts[1], descriptor)), name);
  }
  if (parts[0] == "complete") {
    arity(1);
    return Pattern(complete_graph(parse_size(parts[1], descriptor)), name);
  }
  if (parts[0] == "complete_bipartite") {
    arity(2);
    return Pattern(complete_bipartite(parse_size(parts[1], descriptor), parse_size(parts[2], descriptor)),
                   name);
  }
  if (parts[0] == "complete_uniform") {
    arity(2);
    return Pattern(complete_uniform(parse_size(parts[1], descriptor), parse_size(parts[2], descriptor)),
                   name);
  }
  if (parts[0] == "cube") {
    arity(0);
    return Pattern(cube_graph(), name);
  }
  throw std::invalid_argument("unknown builtin pattern '" + name + "'");
}

Pattern load_pattern(std::string_view spec) {
  if (spec.starts_with("builtin:")) return builtin_pattern(spec);
  return Pattern(read_edge_list_file(std::string(spec)), std::string(spec));
}

}  // namespace balsat
