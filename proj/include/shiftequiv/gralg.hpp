// Combinatorial invariants of graph C*-algebras: hereditary and saturated
// vertex sets (the gauge-invariant ideal lattice), the Toeplitz outsplit
// graph, regularity of graph correspondences, the complementary-corner
// generator maps of a bipartite inflation, and the Morita-equivalence verdict
// for elementary strong shift equivalent graphs.
//
// Conventions follow edges s(e) -> r(e). A set H is hereditary when every
// edge leaving H lands in H. It is saturated when every vertex v with
// 0 < |s^{-1}(v)| whose edges all land in H already lies in H.

#ifndef SHIFTEQUIV_GRALG_HPP_
#define SHIFTEQUIV_GRALG_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftequiv/graph.hpp"
#include "shiftequiv/matrix.hpp"

namespace shiftequiv {

class NotHereditaryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_hereditary(Graph const& g, VertexSet const& h);
bool is_saturated(Graph const& g, VertexSet const& h);

// Smallest hereditary superset of h. Throws GraphError for out-of-range ids.
VertexSet hereditary_closure(Graph const& g, VertexSet const& h);

// Smallest saturated superset of a hereditary set (still hereditary).
// Throws NotHereditaryError if h is not hereditary.
VertexSet saturate(Graph const& g, VertexSet const& h);

//! Proper saturated hereditary subsets of a graph.
//!
//! `subsets` contains the empty set and omits the full vertex set. Subsets
//! are sorted by size, then lexicographically by vertex index.
struct IdealLattice {
  std::vector<VertexSet> subsets;
  std::size_t count_with_empty = 0;
  std::size_t count_nonzero = 0;
  // Only the trivial saturated hereditary sets, and Condition (K) holds.
  bool simple = false;
};

IdealLattice enumerate_saturated_hereditary(Graph const& g);

// Filters all 2^|V| subsets; for graphs with at most 20 vertices.
IdealLattice enumerate_saturated_hereditary_brute_force(Graph const& g);

// "{}" or "{v, w'}".
std::string format_subset(Graph const& g, VertexSet const& s);

// Adds a sink v' per vertex v and an edge e': s(e) -> r(e)' per edge e.
// Vertices and edges keep their order, primed copies follow the originals.
// Throws GraphError if a primed name already exists.
Graph outsplit_toeplitz(Graph const& g);

struct CorrespondenceProfile {
  bool row_finite = true;
  bool has_sinks = false;
  bool has_sources = false;
  bool regular = false;
  bool essential = true;
};

CorrespondenceProfile profile(Graph const& g);

struct CornerEdge {
  std::string graph_edge;
  std::string first;   // inflation edge leaving the corner
  std::string second;  // inflation edge returning to the corner
};

//! Generator map identifying a graph algebra with a corner of the inflation.
struct CornerMap {
  std::vector<std::string> corner_vertices;
  // (graph vertex, inflation vertex); vertex names are shared.
  std::vector<std::pair<std::string, std::string>> vertex_map;
  std::vector<CornerEdge> edge_map;
};

struct CornerMaps {
  CornerMap e_side;
  CornerMap f_side;
  Graph inflation;
  Graph e;
  Graph f;
};

//! Builds E = graph(RS), F = graph(SR), G = inflate_graph(R, S) and pairs the
//! (RS)(u,u') edges u -> u' of E with the length-2 paths u -> mid -> u' of G.
//!
//! Both sides are taken in canonical order: E edges in declaration order,
//! paths by middle vertex, then first edge, then second edge (declaration
//! order in G). F is treated the same way through the opposite side.
CornerMaps corner_maps(Matrix const& r, Matrix const& s,
                       std::span<const std::string> row_names,
                       std::span<const std::string> col_names);

enum class MoritaConclusion { morita_equivalent_via_inflation,
                              theorem_not_applicable };

std::string to_string(MoritaConclusion c);

struct MoritaVerdict {
  bool esse_verified = false;
  CorrespondenceProfile profile_e;
  CorrespondenceProfile profile_f;
  bool applicable = false;
  MoritaConclusion conclusion = MoritaConclusion::theorem_not_applicable;
  std::vector<std::string> obstructions;
};

// Throws DimensionError when R, S do not fit the vertex matrices of E, F.
MoritaVerdict morita_verdict(Graph const& e, Graph const& f, Matrix const& r,
                             Matrix const& s);

}  // namespace shiftequiv

#endif  // SHIFTEQUIV_GRALG_HPP_
