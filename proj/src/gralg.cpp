#include "shiftequiv/gralg.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "shiftequiv/sse.hpp"

namespace shiftequiv {

namespace {

std::vector<bool> membership(Graph const& g, VertexSet const& h) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : h) {
    if (v >= g.vertex_count()) {
      throw GraphError("vertex id " + std::to_string(v) + " out of range");
    }
    in[v] = true;
  }
  return in;
}

VertexSet to_set(std::vector<bool> const& in) {
  VertexSet out;
  for (VertexId v = 0; v < in.size(); ++v) {
    if (in[v]) {
      out.push_back(v);
    }
  }
  return out;
}

bool absorbable(Graph const& g, VertexId v, std::vector<bool> const& in) {
  auto const out = g.out_edges(v);
  return !out.empty() && std::all_of(out.begin(), out.end(), [&](EdgeId e) {
    return in[g.edge(e).range];
  });
}

void canonical_sort(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet const& x, VertexSet const& y) {
    if (x.size() != y.size()) {
      return x.size() < y.size();
    }
    return x < y;
  });
}

IdealLattice finish_lattice(Graph const& g, std::vector<VertexSet> subsets) {
  canonical_sort(subsets);
  IdealLattice out;
  out.count_with_empty = subsets.size();
  out.count_nonzero = std::count_if(subsets.begin(), subsets.end(),
                                    [](auto const& s) { return !s.empty(); });
  out.simple = subsets.size() == 1 && subsets.front().empty()
               && analyze(g).condition_k;
  out.subsets = std::move(subsets);
  return out;
}

// Strongly connected components, emitted so that every component comes after
// all components it has edges into.
std::vector<std::vector<VertexId>> strong_components(Graph const& g) {
  std::size_t const n = g.vertex_count();
  std::vector<std::size_t> index(n, SIZE_MAX);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> comps;
  std::size_t counter = 0;

  std::function<void(VertexId)> visit = [&](VertexId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (EdgeId e : g.out_edges(v)) {
      VertexId const w = g.edge(e).range;
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<VertexId> comp;
      VertexId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      comps.push_back(std::move(comp));
    }
  };
  for (VertexId v = 0; v < n; ++v) {
    if (index[v] == SIZE_MAX) {
      visit(v);
    }
  }
  return comps;
}

}  // namespace

bool is_hereditary(Graph const& g, VertexSet const& h) {
  auto const in = membership(g, h);
  for (Edge const& e : g.edges()) {
    if (in[e.source] && !in[e.range]) {
      return false;
    }
  }
  return true;
}

bool is_saturated(Graph const& g, VertexSet const& h) {
  auto const in = membership(g, h);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!in[v] && absorbable(g, v, in)) {
      return false;
    }
  }
  return true;
}

VertexSet hereditary_closure(Graph const& g, VertexSet const& h) {
  auto in = membership(g, h);
  std::vector<VertexId> stack(h.begin(), h.end());
  while (!stack.empty()) {
    VertexId const v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(v)) {
      VertexId const w = g.edge(e).range;
      if (!in[w]) {
        in[w] = true;
        stack.push_back(w);
      }
    }
  }
  return to_set(in);
}

VertexSet saturate(Graph const& g, VertexSet const& h) {
  if (!is_hereditary(g, h)) {
    throw NotHereditaryError("saturate needs a hereditary vertex set");
  }
  auto in = membership(g, h);
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!in[v] && absorbable(g, v, in)) {
        in[v] = true;
        changed = true;
      }
    }
  }
  return to_set(in);
}

IdealLattice enumerate_saturated_hereditary(Graph const& g) {
  std::size_t const n = g.vertex_count();
  auto const comps = strong_components(g);
  std::size_t const c = comps.size();

  std::vector<std::size_t> comp_of(n);
  for (std::size_t i = 0; i < c; ++i) {
    for (VertexId v : comps[i]) {
      comp_of[v] = i;
    }
  }
  // Successor components; each has a smaller index than its predecessor.
  std::vector<std::vector<std::size_t>> succ(c);
  // A component left out of a saturated set must keep one of its vertices
  // from being absorbed. Only a loop-free singleton emitter can fail that,
  // and it fails exactly when all of its successors are included.
  std::vector<bool> forced(c, false);
  for (std::size_t i = 0; i < c; ++i) {
    bool self_edge = false;
    for (VertexId v : comps[i]) {
      for (EdgeId e : g.out_edges(v)) {
        std::size_t const target = comp_of[g.edge(e).range];
        if (target == i) {
          self_edge = true;
        } else {
          succ[i].push_back(target);
        }
      }
    }
    std::sort(succ[i].begin(), succ[i].end());
    succ[i].erase(std::unique(succ[i].begin(), succ[i].end()), succ[i].end());
    forced[i] = !self_edge && g.out_degree(comps[i].front()) > 0;
  }

  std::vector<VertexSet> found;
  std::vector<bool> included(c, false);
  std::function<void(std::size_t)> branch = [&](std::size_t i) {
    if (i == c) {
      VertexSet s;
      for (std::size_t j = 0; j < c; ++j) {
        if (included[j]) {
          s.insert(s.end(), comps[j].begin(), comps[j].end());
        }
      }
      if (s.size() < n) {
        std::sort(s.begin(), s.end());
        found.push_back(std::move(s));
      }
      return;
    }
    bool const can_include = std::all_of(
        succ[i].begin(), succ[i].end(), [&](std::size_t j) { return included[j]; });
    if (!can_include || !forced[i]) {
      included[i] = false;
      branch(i + 1);
    }
    if (can_include) {
      included[i] = true;
      branch(i + 1);
      included[i] = false;
    }
  };
  branch(0);
  return finish_lattice(g, std::move(found));
}

IdealLattice enumerate_saturated_hereditary_brute_force(Graph const& g) {
  std::size_t const n = g.vertex_count();
  if (n > 20) {
    throw std::invalid_argument(
        "brute-force enumeration is limited to 20 vertices");
  }
  std::vector<VertexSet> found;
  std::uint32_t const full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    VertexSet s;
    for (VertexId v = 0; v < n; ++v) {
      if (mask & (std::uint32_t{1} << v)) {
        s.push_back(v);
      }
    }
    if (is_hereditary(g, s) && is_saturated(g, s)) {
      found.push_back(std::move(s));
    }
  }
  return finish_lattice(g, std::move(found));
}

std::string format_subset(Graph const& g, VertexSet const& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += g.vertex_name(s[i]);
  }
  return out + "}";
}

Graph outsplit_toeplitz(Graph const& g) {
  Graph out;
  for (auto const& v : g.vertex_names()) {
    out.add_vertex(v);
  }
  for (auto const& v : g.vertex_names()) {
    std::string primed = v + "'";
    if (out.find_vertex(primed)) {
      throw GraphError("primed vertex name \"" + primed
                       + "\" already exists");
    }
    out.add_vertex(std::move(primed));
  }
  std::size_t const n = g.vertex_count();
  for (Edge const& e : g.edges()) {
    out.add_edge(e.name, e.source, e.range);
  }
  for (Edge const& e : g.edges()) {
    std::string primed = e.name + "'";
    if (out.find_edge(primed)) {
      throw GraphError("primed edge name \"" + primed + "\" already exists");
    }
    out.add_edge(std::move(primed), e.source, n + e.range);
  }
  return out;
}

CorrespondenceProfile profile(Graph const& g) {
  auto const a = analyze(g);
  CorrespondenceProfile p;
  p.row_finite = a.row_finite;
  p.has_sinks = !a.sinks.empty();
  p.has_sources = !a.sources.empty();
  p.regular = p.row_finite && !p.has_sinks;
  p.essential = true;
  return p;
}

namespace {

// Pairs the edges of `h` with length-2 paths of `g` through the opposite
// side; vertex i of h is vertex offset + i of g.
CornerMap side_map(Graph const& h, Graph const& g, std::size_t offset) {
  CornerMap map;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    map.corner_vertices.push_back(h.vertex_name(v));
    map.vertex_map.emplace_back(h.vertex_name(v), g.vertex_name(offset + v));
  }
  std::size_t const n = h.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    // Paths out of u, grouped by final vertex.
    std::vector<std::vector<std::tuple<VertexId, EdgeId, EdgeId>>> paths(n);
    for (EdgeId e1 : g.out_edges(offset + u)) {
      VertexId const mid = g.edge(e1).range;
      for (EdgeId e2 : g.out_edges(mid)) {
        VertexId const end = g.edge(e2).range;
        if (end >= offset && end < offset + n) {
          paths[end - offset].emplace_back(mid, e1, e2);
        }
      }
    }
    for (auto& p : paths) {
      std::sort(p.begin(), p.end());
    }
    std::vector<std::size_t> used(n, 0);
    for (EdgeId e : h.out_edges(u)) {
      VertexId const w = h.edge(e).range;
      auto const& [mid, e1, e2] = paths[w].at(used[w]++);
      map.edge_map.push_back(
          {h.edge(e).name, g.edge(e1).name, g.edge(e2).name});
    }
  }
  return map;
}

}  // namespace

CornerMaps corner_maps(Matrix const& r, Matrix const& s,
                       std::span<const std::string> row_names,
                       std::span<const std::string> col_names) {
  Graph inflation = inflate_graph(r, s, row_names, col_names);
  Graph e = graph_from_matrix(
      multiply(r, s), std::vector<std::string>(row_names.begin(), row_names.end()));
  Graph f = graph_from_matrix(
      multiply(s, r), std::vector<std::string>(col_names.begin(), col_names.end()));
  CornerMap e_side = side_map(e, inflation, 0);
  CornerMap f_side = side_map(f, inflation, row_names.size());
  return CornerMaps{std::move(e_side), std::move(f_side), std::move(inflation),
                    std::move(e), std::move(f)};
}

std::string to_string(MoritaConclusion c) {
  switch (c) {
    case MoritaConclusion::morita_equivalent_via_inflation:
      return "morita-equivalent-via-inflation";
    case MoritaConclusion::theorem_not_applicable:
      return "theorem-not-applicable";
  }
  return "unknown";
}

namespace {

void regularity_obstructions(Graph const& g, std::string const& label,
                             std::vector<std::string>& out) {
  auto const a = analyze(g);
  if (!a.row_finite) {
    out.push_back(label + " is not row-finite: X(" + label
                  + ") is not regular");
  }
  if (!a.sinks.empty()) {
    out.push_back(label + " has sinks " + format_subset(g, a.sinks) + ": X("
                  + label + ") is not regular");
  }
}

}  // namespace

MoritaVerdict morita_verdict(Graph const& e, Graph const& f, Matrix const& r,
                             Matrix const& s) {
  ElementaryPair const pair{vertex_matrix(e), vertex_matrix(f), r, s};
  auto const check = verify_elementary(pair);
  MoritaVerdict v;
  v.esse_verified = check.ok();
  v.profile_e = profile(e);
  v.profile_f = profile(f);
  v.applicable = v.esse_verified && v.profile_e.regular && v.profile_f.regular;
  v.conclusion = v.applicable ? MoritaConclusion::morita_equivalent_via_inflation
                              : MoritaConclusion::theorem_not_applicable;
  if (!v.esse_verified) {
    v.obstructions.push_back(
        "R, S do not witness an elementary strong shift equivalence ("
        + check.report() + ")");
  }
  regularity_obstructions(e, "E", v.obstructions);
  regularity_obstructions(f, "F", v.obstructions);
  return v;
}

}  // namespace shiftequiv
