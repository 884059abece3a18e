#include "shiftequiv/sse.hpp"

#include <algorithm>
#include <sstream>

namespace shiftequiv {

void ElementaryPair::check_shapes() const {
  if (!a.is_square() || !b.is_square()) {
    throw DimensionError("A and B must be square, got A " + a.shape_string()
                         + " and B " + b.shape_string());
  }
  std::size_t const m = a.rows();
  std::size_t const n = b.rows();
  if (r.rows() != m || r.cols() != n || s.rows() != n || s.cols() != m) {
    throw DimensionError("witness shapes do not fit: A " + a.shape_string()
                         + ", B " + b.shape_string() + ", R "
                         + r.shape_string() + ", S " + s.shape_string()
                         + " (need R " + std::to_string(m) + "x"
                         + std::to_string(n) + ", S " + std::to_string(n)
                         + "x" + std::to_string(m) + ")");
  }
}

namespace {

std::optional<EntryMismatch> first_difference(Matrix const& expected,
                                              Matrix const& actual,
                                              EntryMismatch::Product which) {
  for (std::size_t i = 0; i < expected.rows(); ++i) {
    for (std::size_t j = 0; j < expected.cols(); ++j) {
      if (expected(i, j) != actual(i, j)) {
        return EntryMismatch{which, i, j, expected(i, j), actual(i, j)};
      }
    }
  }
  return std::nullopt;
}

std::string describe(std::optional<EntryMismatch> const& m) {
  if (!m) {
    return "ok";
  }
  std::ostringstream os;
  os << "FAIL at (" << m->row + 1 << "," << m->col + 1 << "): expected "
     << m->expected << ", got " << m->actual;
  return os.str();
}

}  // namespace

std::string Verification::report() const {
  return "RS=A: " + describe(rs_failure) + ", SR=B: " + describe(sr_failure);
}

Verification verify_elementary(ElementaryPair const& p) {
  p.check_shapes();
  Verification v;
  v.rs_failure = first_difference(p.a, multiply(p.r, p.s),
                                  EntryMismatch::Product::rs);
  v.sr_failure = first_difference(p.b, multiply(p.s, p.r),
                                  EntryMismatch::Product::sr);
  return v;
}

ChainVerification verify_chain(SSEChain const& c) {
  if (c.matrices.empty()) {
    throw DimensionError("a chain needs at least one matrix");
  }
  if (c.witnesses.size() + 1 != c.matrices.size()) {
    throw DimensionError("a chain of " + std::to_string(c.matrices.size())
                         + " matrices needs "
                         + std::to_string(c.matrices.size() - 1)
                         + " witnesses, got "
                         + std::to_string(c.witnesses.size()));
  }
  for (auto const& m : c.matrices) {
    if (!m.is_square()) {
      throw DimensionError("chain matrices must be square, got "
                           + m.shape_string());
    }
  }
  for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
    auto const& w = c.witnesses[i];
    if (w.a != c.matrices[i] || w.b != c.matrices[i + 1]) {
      throw DimensionError("witness " + std::to_string(i + 1)
                           + " does not link matrices "
                           + std::to_string(i + 1) + " and "
                           + std::to_string(i + 2));
    }
    w.check_shapes();
  }
  ChainVerification out;
  for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
    auto v = verify_elementary(c.witnesses[i]);
    if (!v.ok()) {
      out.ok = false;
      out.failed_witness = i;
      out.failure = std::move(v);
      break;
    }
  }
  return out;
}

namespace {

__extension__ using Wide = unsigned __int128;

struct CapExceeded {};

class WitnessSearch {
 public:
  WitnessSearch(Matrix const& a, Matrix const& b, SearchOptions const& opt)
      : a_(a),
        b_(b),
        m_(a.rows()),
        n_(b.rows()),
        bound_(opt.bound),
        max_nodes_(opt.max_nodes),
        r_(m_ * n_, 0),
        s_(n_ * m_, 0),
        a_partial_(m_ * m_, 0),
        b_partial_(n_ * n_, 0) {}

  std::optional<ElementaryPair> run() {
    if (search_r(0)) {
      return ElementaryPair{a_, b_, Matrix(m_, n_, r_), Matrix(n_, m_, s_)};
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  Entry r(std::size_t i, std::size_t k) const { return r_[i * n_ + k]; }

  void count_node() {
    if (++nodes_ > max_nodes_) {
      throw CapExceeded{};
    }
  }

  // Row i of R is complete: every entry of row i of A = R S is at most
  // bound * (row sum of R), and a zero row of R forces a zero row of A.
  bool row_feasible(std::size_t i) const {
    Wide sum = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      sum += r(i, k);
    }
    for (std::size_t j = 0; j < m_; ++j) {
      if (Wide{a_(i, j)} > sum * bound_) {
        return false;
      }
    }
    return true;
  }

  // Column l of B = S R is bounded by bound * (column sum of R).
  bool columns_feasible() const {
    for (std::size_t l = 0; l < n_; ++l) {
      Wide sum = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        sum += r(i, l);
      }
      for (std::size_t k = 0; k < n_; ++k) {
        if (Wide{b_(k, l)} > sum * bound_) {
          return false;
        }
      }
    }
    return true;
  }

  bool search_r(std::size_t pos) {
    if (pos == m_ * n_) {
      if (!columns_feasible()) {
        return false;
      }
      prepare_s();
      return search_s(0);
    }
    std::size_t const i = pos / n_;
    std::size_t const k = pos % n_;
    for (Entry x = 0;; ++x) {
      count_node();
      r_[pos] = x;
      if (k + 1 < n_ || row_feasible(i)) {
        if (search_r(pos + 1)) {
          return true;
        }
      }
      if (x == bound_) {
        break;
      }
    }
    r_[pos] = 0;
    return false;
  }

  void prepare_s() {
    // a_tail_[i * (n+1) + k] = sum_{k' >= k} R(i,k')
    a_tail_.assign(m_ * (n_ + 1), 0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = n_; k-- > 0;) {
        a_tail_[i * (n_ + 1) + k] = a_tail_[i * (n_ + 1) + k + 1] + r(i, k);
      }
    }
    // b_tail_[j * n + l] = sum_{j' >= j} R(j',l)
    b_tail_.assign((m_ + 1) * n_, 0);
    for (std::size_t j = m_; j-- > 0;) {
      for (std::size_t l = 0; l < n_; ++l) {
        b_tail_[j * n_ + l] = b_tail_[(j + 1) * n_ + l] + r(j, l);
      }
    }
    std::fill(a_partial_.begin(), a_partial_.end(), 0);
    std::fill(b_partial_.begin(), b_partial_.end(), 0);
    std::fill(s_.begin(), s_.end(), 0);
  }

  // S(k,j) contributes R(i,k) S(k,j) to (RS)(i,j) for every i, and
  // S(k,j) R(j,l) to (SR)(k,l) for every l.
  void apply(std::size_t k, std::size_t j, Wide x, bool add) {
    for (std::size_t i = 0; i < m_; ++i) {
      Wide const d = Wide{r(i, k)} * x;
      a_partial_[i * m_ + j] += add ? d : -d;
    }
    for (std::size_t l = 0; l < n_; ++l) {
      Wide const d = x * Wide{r(j, l)};
      b_partial_[k * n_ + l] += add ? d : -d;
    }
  }

  // 0: feasible, 1: some partial sum already too large (so is every larger
  // value of this entry), 2: some target is no longer reachable.
  int status(std::size_t k, std::size_t j) const {
    int result = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      Wide const have = a_partial_[i * m_ + j];
      Wide const want = a_(i, j);
      if (have > want) {
        return 1;
      }
      Wide const room = Wide{a_tail_[i * (n_ + 1) + k + 1]} * bound_;
      if (have + room < want) {
        result = 2;
      }
    }
    for (std::size_t l = 0; l < n_; ++l) {
      Wide const have = b_partial_[k * n_ + l];
      Wide const want = b_(k, l);
      if (have > want) {
        return 1;
      }
      Wide const room = Wide{b_tail_[(j + 1) * n_ + l]} * bound_;
      if (have + room < want) {
        result = 2;
      }
    }
    return result;
  }

  bool search_s(std::size_t pos) {
    if (pos == n_ * m_) {
      return true;
    }
    std::size_t const k = pos / m_;
    std::size_t const j = pos % m_;
    for (Entry x = 0;; ++x) {
      count_node();
      s_[pos] = x;
      apply(k, j, x, true);
      int const st = status(k, j);
      if (st == 0 && search_s(pos + 1)) {
        return true;
      }
      apply(k, j, x, false);
      if (st == 1 || x == bound_) {
        break;
      }
    }
    s_[pos] = 0;
    return false;
  }

  Matrix const& a_;
  Matrix const& b_;
  std::size_t m_;
  std::size_t n_;
  Entry bound_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<Entry> r_;
  std::vector<Entry> s_;
  std::vector<Wide> a_partial_;
  std::vector<Wide> b_partial_;
  std::vector<Wide> a_tail_;
  std::vector<Wide> b_tail_;
};

}  // namespace

SearchResult find_elementary(Matrix const& a, Matrix const& b,
                             SearchOptions const& options) {
  if (!a.is_square() || !b.is_square()) {
    throw DimensionError("find_elementary needs square matrices, got A "
                         + a.shape_string() + " and B " + b.shape_string());
  }
  SearchResult result;
  // Equal traces are necessary; a mismatch settles the question.
  try {
    if (!trace_obstruction(a, b)) {
      result.status = SearchStatus::none;
      return result;
    }
  } catch (OverflowError const&) {
  }
  WitnessSearch search(a, b, options);
  try {
    result.pair = search.run();
    result.status
        = result.pair ? SearchStatus::found : SearchStatus::none;
  } catch (CapExceeded const&) {
    result.status = SearchStatus::cap_exceeded;
  }
  result.nodes = search.nodes();
  return result;
}

bool trace_obstruction(Matrix const& a, Matrix const& b, std::size_t kmax) {
  return trace_powers(a, kmax) == trace_powers(b, kmax);
}

bool trace_obstruction(Matrix const& a, Matrix const& b) {
  return trace_obstruction(a, b, std::max(a.rows(), b.rows()));
}

namespace {

void add_side(Graph& g, std::span<const std::string> names) {
  for (auto const& n : names) {
    if (g.find_vertex(n)) {
      throw GraphError("vertex name collision: \"" + n + "\"");
    }
    g.add_vertex(n);
  }
}

void add_block_edges(Graph& g, Matrix const& m, std::string_view prefix,
                     std::span<const std::string> from,
                     std::span<const std::string> to) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (Entry k = 1; k <= m(i, j); ++k) {
        g.add_edge(generated_edge_name(prefix, from[i], to[j], k), from[i],
                   to[j]);
      }
    }
  }
}

void check_names(Matrix const& r, std::span<const std::string> row_names,
                 std::span<const std::string> col_names) {
  if (row_names.size() != r.rows() || col_names.size() != r.cols()) {
    throw DimensionError("need " + std::to_string(r.rows()) + " row names and "
                         + std::to_string(r.cols()) + " column names, got "
                         + std::to_string(row_names.size()) + " and "
                         + std::to_string(col_names.size()));
  }
}

}  // namespace

Graph inflate_graph(Matrix const& r, Matrix const& s,
                    std::span<const std::string> row_names,
                    std::span<const std::string> col_names) {
  if (r.rows() != s.cols() || r.cols() != s.rows()) {
    throw DimensionError("inflate_graph needs R m x n and S n x m, got R "
                         + r.shape_string() + " and S " + s.shape_string());
  }
  check_names(r, row_names, col_names);
  Graph g;
  add_side(g, row_names);
  add_side(g, col_names);
  add_block_edges(g, r, "r", row_names, col_names);
  add_block_edges(g, s, "s", col_names, row_names);
  return g;
}

Graph rect_graph(Matrix const& r, std::span<const std::string> row_names,
                 std::span<const std::string> col_names) {
  check_names(r, row_names, col_names);
  Graph g;
  add_side(g, row_names);
  add_side(g, col_names);
  add_block_edges(g, r, "e", row_names, col_names);
  return g;
}

}  // namespace shiftequiv
