// Text formats.
//
// Matrix (.mat):
//   # comment
//   <rows> <cols>
//   <rows lines of cols space-separated non-negative decimal integers>
//
// Graph (.graph):
//   vertex <name>
//   edge <name> <source> <range>
// Declaration order fixes vertex and edge order; an edge may only refer to
// vertices declared above it.
//
// Witness manifest (.esse): four lines naming the .mat files of A, B, R, S.
//
// Chain file: n lines "matrix <path>" followed by n-1 lines
// "witness <R path> <S path>"; witness i links matrices i and i+1.
//
// In every format blank lines and lines starting with '#' are ignored, and
// relative paths resolve against the directory of the referring file.

#ifndef SHIFTEQUIV_IO_HPP_
#define SHIFTEQUIV_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "shiftequiv/graph.hpp"
#include "shiftequiv/matrix.hpp"
#include "shiftequiv/sse.hpp"

namespace shiftequiv::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::string const& what);

  std::string const& source() const noexcept { return source_; }
  // 1-based; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

Matrix parse_matrix(std::string_view text, std::string const& source = "<input>");
std::string serialize_matrix(Matrix const& m);

Graph parse_graph(std::string_view text, std::string const& source = "<input>");
std::string serialize_graph(Graph const& g);

std::string read_file(std::filesystem::path const& path);
void write_file(std::filesystem::path const& path, std::string_view text);

Matrix load_matrix(std::filesystem::path const& path);
Graph load_graph(std::filesystem::path const& path);

ElementaryPair load_witness(std::filesystem::path const& manifest);
SSEChain load_chain(std::filesystem::path const& path);

}  // namespace shiftequiv::io

#endif  // SHIFTEQUIV_IO_HPP_
