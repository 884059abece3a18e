// Elementary strong shift equivalence: verification of witnesses and chains,
// bounded exhaustive search for witnesses, and the bipartite graphs built
// from the witness matrices.

#ifndef SHIFTEQUIV_SSE_HPP_
#define SHIFTEQUIV_SSE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shiftequiv/graph.hpp"
#include "shiftequiv/matrix.hpp"

namespace shiftequiv {

//! Witness data A = RS, B = SR with A m x m, B n x n, R m x n, S n x m.
struct ElementaryPair {
  Matrix a;
  Matrix b;
  Matrix r;
  Matrix s;

  // Throws DimensionError unless the four shapes fit together.
  void check_shapes() const;

  friend bool operator==(ElementaryPair const&, ElementaryPair const&)
      = default;
};

struct EntryMismatch {
  enum class Product { rs, sr };
  Product product;
  std::size_t row;  // 0-based
  std::size_t col;  // 0-based
  Entry expected;
  Entry actual;
};

struct Verification {
  std::optional<EntryMismatch> rs_failure;
  std::optional<EntryMismatch> sr_failure;

  bool rs_ok() const noexcept { return !rs_failure; }
  bool sr_ok() const noexcept { return !sr_failure; }
  bool ok() const noexcept { return rs_ok() && sr_ok(); }
  // First failing entry, RS = A before SR = B.
  std::optional<EntryMismatch> first_failure() const {
    return rs_failure ? rs_failure : sr_failure;
  }
  // "RS=A: ok, SR=B: ok", or with "FAIL at (i,j): expected x, got y" using
  // 1-based indices.
  std::string report() const;
};

Verification verify_elementary(ElementaryPair const& p);

//! A chain A1, ..., An with witness i linking matrices i and i+1.
struct SSEChain {
  std::vector<Matrix> matrices;
  std::vector<ElementaryPair> witnesses;
};

struct ChainVerification {
  bool ok = true;
  std::optional<std::size_t> failed_witness;  // 0-based
  std::optional<Verification> failure;
};

// Throws DimensionError if the chain is empty or a witness does not link the
// matrices it sits between.
ChainVerification verify_chain(SSEChain const& c);

enum class SearchStatus { found, none, cap_exceeded };

struct SearchOptions {
  Entry bound = 1;
  std::uint64_t max_nodes = 10'000'000;
};

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<ElementaryPair> pair;
  std::uint64_t nodes = 0;
};

//! Exhaustive search for R, S with entries in [0, bound] and RS = A, SR = B.
//!
//! R is enumerated in row-major lexicographic order and, for each R, S is
//! found by backtracking in row-major lexicographic order, so a returned pair
//! is the lexicographically first one. SearchStatus::none certifies that no
//! pair with entries at most `bound` exists. Every assignment of an R or S
//! entry counts as one node; exceeding `max_nodes` stops the search with
//! SearchStatus::cap_exceeded.
SearchResult find_elementary(Matrix const& a, Matrix const& b,
                             SearchOptions const& options);

// True iff tr(A^k) = tr(B^k) for k = 1..kmax. False certifies that A and B
// are not strong shift equivalent.
bool trace_obstruction(Matrix const& a, Matrix const& b, std::size_t kmax);
// kmax defaults to max(size A, size B); a heuristic, not a complete test.
bool trace_obstruction(Matrix const& a, Matrix const& b);

// The bipartite graph with vertices row_names followed by col_names, R(v,w)
// edges "r:<v>-><w>#k" and S(w,v) edges "s:<w>-><v>#k".
Graph inflate_graph(Matrix const& r, Matrix const& s,
                    std::span<const std::string> row_names,
                    std::span<const std::string> col_names);

// The bipartite graph of one rectangular matrix: R(i,j) edges
// "e:<i>-><j>#k" from row vertices to column vertices.
Graph rect_graph(Matrix const& r, std::span<const std::string> row_names,
                 std::span<const std::string> col_names);

}  // namespace shiftequiv

#endif  // SHIFTEQUIV_SSE_HPP_
