#include "shiftequiv/graph.hpp"

#include <algorithm>
#include <cctype>

namespace shiftequiv {

bool is_valid_name(std::string_view name) {
  if (name.empty() || name.front() == '#') {
    return false;
  }
  return std::none_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isspace(c) || std::iscntrl(c);
  });
}

VertexId Graph::add_vertex(std::string name) {
  if (!is_valid_name(name)) {
    throw GraphError("invalid vertex name \"" + name + "\"");
  }
  if (vertex_index_.contains(name)) {
    throw GraphError("duplicate vertex name \"" + name + "\"");
  }
  VertexId const id = vertices_.size();
  vertex_index_.emplace(name, id);
  vertices_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

EdgeId Graph::add_edge(std::string name, VertexId source, VertexId range) {
  if (!is_valid_name(name)) {
    throw GraphError("invalid edge name \"" + name + "\"");
  }
  if (edge_index_.contains(name)) {
    throw GraphError("duplicate edge name \"" + name + "\"");
  }
  if (source >= vertices_.size() || range >= vertices_.size()) {
    throw GraphError("edge \"" + name + "\" has an undeclared endpoint");
  }
  EdgeId const id = edges_.size();
  edge_index_.emplace(name, id);
  edges_.push_back(Edge{std::move(name), source, range});
  out_[source].push_back(id);
  in_[range].push_back(id);
  return id;
}

EdgeId Graph::add_edge(std::string name, std::string_view source,
                       std::string_view range) {
  auto s = find_vertex(source);
  auto r = find_vertex(range);
  if (!s || !r) {
    throw GraphError("edge \"" + name + "\" refers to undeclared vertex \""
                     + std::string(!s ? source : range) + "\"");
  }
  return add_edge(std::move(name), *s, *r);
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

VertexId Graph::vertex_id(std::string_view name) const {
  if (auto v = find_vertex(name)) {
    return *v;
  }
  throw GraphError("unknown vertex \"" + std::string(name) + "\"");
}

VertexSet Graph::vertex_set(std::span<const std::string> names) const {
  VertexSet out;
  out.reserve(names.size());
  for (auto const& n : names) {
    out.push_back(vertex_id(n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> Graph::names_of(VertexSet const& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (VertexId v : set) {
    out.push_back(vertex_name(v));
  }
  return out;
}

Matrix vertex_matrix(Graph const& g) {
  std::size_t const n = g.vertex_count();
  if (n == 0) {
    throw DimensionError("the vertex matrix of an empty graph is undefined");
  }
  std::vector<Entry> e(n * n, 0);
  for (Edge const& edge : g.edges()) {
    Entry& dst = e[edge.source * n + edge.range];
    dst = checked_add(dst, 1);
  }
  return Matrix(n, n, std::move(e));
}

std::string generated_edge_name(std::string_view prefix, std::string_view v,
                                std::string_view w, std::size_t k) {
  std::string out;
  out.reserve(prefix.size() + v.size() + w.size() + 8);
  out.append(prefix).append(":").append(v).append("->").append(w);
  out.append("#").append(std::to_string(k));
  return out;
}

std::vector<std::string> default_vertex_names(std::string_view stem,
                                              std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(std::string(stem) + std::to_string(i));
  }
  return out;
}

Graph graph_from_matrix(Matrix const& a,
                        std::optional<std::vector<std::string>> names) {
  if (!a.is_square()) {
    throw DimensionError("graph_from_matrix needs a square matrix, got "
                         + a.shape_string());
  }
  if (!names) {
    names = default_vertex_names("v", a.rows());
  } else if (names->size() != a.rows()) {
    throw DimensionError("expected " + std::to_string(a.rows())
                         + " vertex names, got "
                         + std::to_string(names->size()));
  }
  Graph g;
  for (auto const& n : *names) {
    g.add_vertex(n);
  }
  for (VertexId v = 0; v < a.rows(); ++v) {
    for (VertexId w = 0; w < a.cols(); ++w) {
      for (Entry k = 1; k <= a(v, w); ++k) {
        g.add_edge(generated_edge_name("e", (*names)[v], (*names)[w], k), v, w);
      }
    }
  }
  return g;
}

namespace {

// Vertices reachable from `seeds` without passing through `base`, following
// edges forward (or backward when `reverse` is set).
std::vector<bool> reach_avoiding(Graph const& g, VertexId base,
                                 std::vector<VertexId> seeds, bool reverse) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack;
  for (VertexId s : seeds) {
    if (s != base && !seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    VertexId const u = stack.back();
    stack.pop_back();
    auto const edges = reverse ? g.in_edges(u) : g.out_edges(u);
    for (EdgeId e : edges) {
      VertexId const next = reverse ? g.edge(e).source : g.edge(e).range;
      if (next != base && !seen[next]) {
        seen[next] = true;
        stack.push_back(next);
      }
    }
  }
  return seen;
}

unsigned saturating_add(unsigned a, unsigned b) {
  return std::min(2u, a + b);
}

}  // namespace

unsigned first_return_paths(Graph const& g, VertexId base) {
  std::size_t const n = g.vertex_count();
  std::vector<VertexId> out_seeds;
  std::vector<VertexId> in_seeds;
  for (EdgeId e : g.out_edges(base)) {
    out_seeds.push_back(g.edge(e).range);
  }
  for (EdgeId e : g.in_edges(base)) {
    in_seeds.push_back(g.edge(e).source);
  }
  auto const fwd = reach_avoiding(g, base, out_seeds, false);
  auto const bwd = reach_avoiding(g, base, in_seeds, true);
  std::vector<bool> relevant(n, false);
  for (VertexId u = 0; u < n; ++u) {
    relevant[u] = fwd[u] && bwd[u];
  }

  // Paths from each relevant vertex to `base`, avoiding `base` in between.
  // A cycle among relevant vertices yields infinitely many returns.
  enum class Mark : unsigned char { unvisited, active, done };
  std::vector<Mark> mark(n, Mark::unvisited);
  std::vector<unsigned> paths(n, 0);
  bool cyclic = false;

  struct Frame {
    VertexId vertex;
    std::size_t next_edge;
  };
  for (VertexId start = 0; start < n && !cyclic; ++start) {
    if (!relevant[start] || mark[start] != Mark::unvisited) {
      continue;
    }
    std::vector<Frame> stack{{start, 0}};
    mark[start] = Mark::active;
    while (!stack.empty() && !cyclic) {
      Frame& top = stack.back();
      auto const out = g.out_edges(top.vertex);
      if (top.next_edge == out.size()) {
        mark[top.vertex] = Mark::done;
        VertexId const finished = top.vertex;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId const parent = stack.back().vertex;
          paths[parent] = saturating_add(paths[parent], paths[finished]);
        }
        continue;
      }
      VertexId const next = g.edge(out[top.next_edge++]).range;
      if (next == base) {
        paths[top.vertex] = saturating_add(paths[top.vertex], 1);
      } else if (relevant[next]) {
        if (mark[next] == Mark::active) {
          cyclic = true;
        } else if (mark[next] == Mark::done) {
          paths[top.vertex] = saturating_add(paths[top.vertex], paths[next]);
        } else {
          mark[next] = Mark::active;
          stack.push_back({next, 0});
        }
      }
    }
  }
  if (cyclic) {
    return 2;
  }

  unsigned total = 0;
  for (EdgeId e : g.out_edges(base)) {
    VertexId const r = g.edge(e).range;
    if (r == base) {
      total = saturating_add(total, 1);
    } else if (relevant[r]) {
      total = saturating_add(total, paths[r]);
    }
  }
  return total;
}

GraphAnalysis analyze(Graph const& g) {
  GraphAnalysis out;
  std::size_t const n = g.vertex_count();
  out.return_path_counts.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    if (g.out_degree(v) == 0) {
      out.sinks.push_back(v);
    }
    if (g.in_degree(v) == 0) {
      out.sources.push_back(v);
    }
    unsigned const c = first_return_paths(g, v);
    out.return_path_counts.push_back(c);
    if (c == 1) {
      out.condition_k = false;
    }
  }
  // Finite graphs emit finitely many edges from every vertex.
  out.row_finite = true;
  return out;
}

}  // namespace shiftequiv
