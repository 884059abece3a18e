#include "shiftequiv/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace shiftequiv::io {

ParseError::ParseError(std::string source, std::size_t line,
                       std::string const& what)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : "")
                         + ": " + what),
      source_(std::move(source)),
      line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') {
      ++j;
    }
    if (j > i) {
      out.push_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

// Non-blank, non-comment lines, tokenized.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++number;
    auto tokens = split(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != '#') {
      out.push_back({number, std::move(tokens)});
    }
    if (end == text.size()) {
      break;
    }
    pos = end + 1;
  }
  return out;
}

Entry parse_entry(std::string_view tok, std::string const& source,
                  std::size_t line) {
  if (!tok.empty() && tok.front() == '-') {
    throw ParseError(source, line,
                     "negative entry \"" + std::string(tok) + "\"");
  }
  Entry value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(source, line,
                     "entry \"" + std::string(tok) + "\" exceeds 64 bits");
  }
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(source, line,
                     "expected a non-negative integer, got \"" + std::string(tok)
                         + "\"");
  }
  return value;
}

std::filesystem::path resolve(std::filesystem::path const& base,
                              std::string_view rel) {
  std::filesystem::path p(rel);
  return p.is_absolute() ? p : base.parent_path() / p;
}

}  // namespace

Matrix parse_matrix(std::string_view text, std::string const& source) {
  auto const lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError(source, 0, "missing \"<rows> <cols>\" header");
  }
  auto const& header = lines.front();
  if (header.tokens.size() != 2) {
    throw ParseError(source, header.number,
                     "header must be \"<rows> <cols>\"");
  }
  Entry const rows = parse_entry(header.tokens[0], source, header.number);
  Entry const cols = parse_entry(header.tokens[1], source, header.number);
  if (rows == 0 || cols == 0) {
    throw ParseError(source, header.number,
                     "matrix dimensions must be positive");
  }
  if (lines.size() - 1 != rows) {
    std::size_t const where
        = lines.size() - 1 > rows ? lines[rows + 1].number : lines.back().number;
    throw ParseError(source, where,
                     "expected " + std::to_string(rows) + " rows, found "
                         + std::to_string(lines.size() - 1));
  }
  std::vector<Entry> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const& l = lines[i];
    if (l.tokens.size() != cols) {
      throw ParseError(source, l.number,
                       "expected " + std::to_string(cols) + " entries, found "
                           + std::to_string(l.tokens.size()));
    }
    for (auto tok : l.tokens) {
      entries.push_back(parse_entry(tok, source, l.number));
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

std::string serialize_matrix(Matrix const& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) {
        os << ' ';
      }
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

Graph parse_graph(std::string_view text, std::string const& source) {
  Graph g;
  for (auto const& l : content_lines(text)) {
    auto const kind = l.tokens.front();
    try {
      if (kind == "vertex") {
        if (l.tokens.size() != 2) {
          throw ParseError(source, l.number, "expected \"vertex <name>\"");
        }
        g.add_vertex(std::string(l.tokens[1]));
      } else if (kind == "edge") {
        if (l.tokens.size() != 4) {
          throw ParseError(source, l.number,
                           "expected \"edge <name> <source> <range>\"");
        }
        g.add_edge(std::string(l.tokens[1]), l.tokens[2], l.tokens[3]);
      } else {
        throw ParseError(source, l.number,
                         "unknown declaration \"" + std::string(kind) + "\"");
      }
    } catch (GraphError const& e) {
      throw ParseError(source, l.number, e.what());
    }
  }
  return g;
}

std::string serialize_graph(Graph const& g) {
  std::string out;
  for (auto const& v : g.vertex_names()) {
    out.append("vertex ").append(v).append("\n");
  }
  for (Edge const& e : g.edges()) {
    out.append("edge ")
        .append(e.name)
        .append(" ")
        .append(g.vertex_name(e.source))
        .append(" ")
        .append(g.vertex_name(e.range))
        .append("\n");
  }
  return out;
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(std::filesystem::path const& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error(path.string() + ": cannot open for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

Matrix load_matrix(std::filesystem::path const& path) {
  return parse_matrix(read_file(path), path.string());
}

Graph load_graph(std::filesystem::path const& path) {
  return parse_graph(read_file(path), path.string());
}

ElementaryPair load_witness(std::filesystem::path const& manifest) {
  auto const text = read_file(manifest);
  auto const lines = content_lines(text);
  if (lines.size() != 4) {
    throw ParseError(manifest.string(), lines.empty() ? 0 : lines.back().number,
                     "a witness manifest names exactly four matrices (A, B, "
                     "R, S), found "
                         + std::to_string(lines.size()));
  }
  std::vector<Matrix> m;
  for (auto const& l : lines) {
    if (l.tokens.size() != 1) {
      throw ParseError(manifest.string(), l.number, "expected one path");
    }
    m.push_back(load_matrix(resolve(manifest, l.tokens[0])));
  }
  return ElementaryPair{m[0], m[1], m[2], m[3]};
}

SSEChain load_chain(std::filesystem::path const& path) {
  auto const text = read_file(path);
  SSEChain chain;
  std::vector<std::pair<Matrix, Matrix>> rs;
  for (auto const& l : content_lines(text)) {
    auto const kind = l.tokens.front();
    if (kind == "matrix" && l.tokens.size() == 2) {
      if (!rs.empty()) {
        throw ParseError(path.string(), l.number,
                         "matrices must precede witnesses");
      }
      chain.matrices.push_back(load_matrix(resolve(path, l.tokens[1])));
    } else if (kind == "witness" && l.tokens.size() == 3) {
      rs.emplace_back(load_matrix(resolve(path, l.tokens[1])),
                      load_matrix(resolve(path, l.tokens[2])));
    } else {
      throw ParseError(path.string(), l.number,
                       "expected \"matrix <path>\" or \"witness <R> <S>\"");
    }
  }
  if (chain.matrices.empty()) {
    throw ParseError(path.string(), 0, "a chain needs at least one matrix");
  }
  if (rs.size() + 1 != chain.matrices.size()) {
    throw ParseError(path.string(), 0,
                     std::to_string(chain.matrices.size()) + " matrices need "
                         + std::to_string(chain.matrices.size() - 1)
                         + " witnesses, found " + std::to_string(rs.size()));
  }
  for (std::size_t i = 0; i < rs.size(); ++i) {
    chain.witnesses.push_back(ElementaryPair{
        chain.matrices[i], chain.matrices[i + 1], rs[i].first, rs[i].second});
  }
  return chain;
}

}  // namespace shiftequiv::io
