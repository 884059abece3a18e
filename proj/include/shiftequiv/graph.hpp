// Finite directed multigraphs with named vertices and edges, and the
// dictionary between graphs and their vertex matrices.
//
// Edges run from s(e) to r(e) ("source" to "range"). The vertex matrix has
// entry (v, w) equal to the number of edges with source v and range w.

#ifndef SHIFTEQUIV_GRAPH_HPP_
#define SHIFTEQUIV_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "shiftequiv/matrix.hpp"

namespace shiftequiv {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using VertexId = std::size_t;
using EdgeId = std::size_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<VertexId>;

struct Edge {
  std::string name;
  VertexId source;
  VertexId range;

  friend bool operator==(Edge const&, Edge const&) = default;
};

//! A finite directed multigraph.
//!
//! Vertices and edges keep their declaration order, which fixes the indexing
//! of vertex matrices and the order of every report. Names are non-empty,
//! contain no whitespace, and are unique within their kind.
class Graph {
 public:
  Graph() = default;

  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId source, VertexId range);
  EdgeId add_edge(std::string name, std::string_view source,
                  std::string_view range);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::string const& vertex_name(VertexId v) const { return vertices_.at(v); }
  std::span<const std::string> vertex_names() const noexcept {
    return vertices_;
  }
  std::span<const Edge> edges() const noexcept { return edges_; }
  Edge const& edge(EdgeId e) const { return edges_.at(e); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  // Throws GraphError for an unknown name.
  VertexId vertex_id(std::string_view name) const;

  // Converts names to a sorted VertexSet; throws GraphError on unknown names.
  VertexSet vertex_set(std::span<const std::string> names) const;
  std::vector<std::string> names_of(VertexSet const& set) const;

  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v); }
  std::size_t out_degree(VertexId v) const { return out_.at(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_.at(v).size(); }

  friend bool operator==(Graph const& a, Graph const& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

bool is_valid_name(std::string_view name);

Matrix vertex_matrix(Graph const& g);

// Name of the k-th (1-based) generated edge from v to w, e.g. "e:v->w#1".
std::string generated_edge_name(std::string_view prefix, std::string_view v,
                                std::string_view w, std::size_t k);

std::vector<std::string> default_vertex_names(std::string_view stem,
                                              std::size_t n);

// A(v,w) parallel edges v -> w named "e:<v>-><w>#k". Names default to
// v1, ..., vn.
Graph graph_from_matrix(Matrix const& a,
                        std::optional<std::vector<std::string>> names
                        = std::nullopt);

struct GraphAnalysis {
  VertexSet sinks;
  VertexSet sources;
  // Number of first-return paths at each vertex, capped at 2.
  std::vector<unsigned> return_path_counts;
  bool condition_k = true;
  bool row_finite = true;
};

// Number of paths e1...ek with s(e1) = r(ek) = v and no intermediate vertex
// equal to v, saturating at 2.
unsigned first_return_paths(Graph const& g, VertexId v);

GraphAnalysis analyze(Graph const& g);

}  // namespace shiftequiv

#endif  // SHIFTEQUIV_GRAPH_HPP_
