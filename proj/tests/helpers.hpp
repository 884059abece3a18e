// Conversions between oracle data and library types, plus fixture access.

#ifndef SHIFTEQUIV_TESTS_HELPERS_HPP_
#define SHIFTEQUIV_TESTS_HELPERS_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shiftequiv/graph.hpp"
#include "shiftequiv/io.hpp"
#include "shiftequiv/matrix.hpp"

namespace testing {

inline std::filesystem::path data_path(std::string const& name) {
  return std::filesystem::path(SHIFTEQUIV_TEST_DATA) / name;
}

inline shiftequiv::Matrix fixture_matrix(std::string const& name) {
  return shiftequiv::io::load_matrix(data_path(name));
}

inline shiftequiv::Graph fixture_graph(std::string const& name) {
  return shiftequiv::io::load_graph(data_path(name));
}

inline shiftequiv::Matrix to_matrix(oracle::Grid const& g) {
  std::vector<shiftequiv::Entry> e;
  for (auto const& row : g) {
    e.insert(e.end(), row.begin(), row.end());
  }
  return shiftequiv::Matrix(g.size(), g.front().size(), std::move(e));
}

inline oracle::Grid to_grid(shiftequiv::Matrix const& m) {
  oracle::Grid g(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      g[i][j] = m(i, j);
    }
  }
  return g;
}

inline shiftequiv::Graph to_graph(oracle::EdgeList const& el) {
  shiftequiv::Graph g;
  for (std::size_t v = 0; v < el.n; ++v) {
    g.add_vertex("v" + std::to_string(v));
  }
  for (std::size_t i = 0; i < el.edges.size(); ++i) {
    g.add_edge("e" + std::to_string(i), el.edges[i].first, el.edges[i].second);
  }
  return g;
}

inline std::vector<std::string> names(std::initializer_list<char const*> l) {
  return std::vector<std::string>(l.begin(), l.end());
}

}  // namespace testing

#endif  // SHIFTEQUIV_TESTS_HELPERS_HPP_
