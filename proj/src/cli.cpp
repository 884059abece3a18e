#include "shiftequiv/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "shiftequiv/gralg.hpp"
#include "shiftequiv/io.hpp"
#include "shiftequiv/sse.hpp"

namespace shiftequiv::cli {

namespace {

struct Report {
  std::string text;
  int code = kSuccess;
};

struct Options {
  std::string a, b, r, s, e, f;
  std::string input, second;
  std::string witness;
  std::string output;
  std::string r_out, s_out;
  std::vector<std::string> rows, cols, names;
  std::size_t kmax = 0;
  Entry bound = 1;
  std::uint64_t max_nodes = 10'000'000;
  bool brute_force = false;
};

char const* flag(bool b) { return b ? "true" : "false"; }

std::vector<std::string> names_or_default(std::vector<std::string> const& given,
                                          std::string_view stem,
                                          std::size_t n) {
  if (given.empty()) {
    return default_vertex_names(stem, n);
  }
  if (given.size() != n) {
    throw DimensionError("expected " + std::to_string(n) + " names, got "
                         + std::to_string(given.size()));
  }
  return given;
}

Report cmd_mul(Options const& o) {
  auto const p = multiply(io::load_matrix(o.input), io::load_matrix(o.second));
  return {io::serialize_matrix(p)};
}

Report cmd_traces(Options const& o) {
  auto const a = io::load_matrix(o.input);
  std::size_t const kmax = o.kmax ? o.kmax : a.rows();
  std::ostringstream os;
  auto const t = trace_powers(a, kmax);
  for (std::size_t k = 0; k < t.size(); ++k) {
    os << "tr(A^" << k + 1 << ")=" << t[k] << '\n';
  }
  return {os.str()};
}

Report cmd_verify(Options const& o) {
  ElementaryPair p = !o.witness.empty()
                         ? io::load_witness(o.witness)
                         : ElementaryPair{io::load_matrix(o.a),
                                          io::load_matrix(o.b),
                                          io::load_matrix(o.r),
                                          io::load_matrix(o.s)};
  auto const v = verify_elementary(p);
  return {v.report() + "\n", v.ok() ? kSuccess : kNegative};
}

Report cmd_find(Options const& o) {
  auto const a = io::load_matrix(o.a);
  auto const b = io::load_matrix(o.b);
  auto const res = find_elementary(a, b, {o.bound, o.max_nodes});
  std::ostringstream os;
  switch (res.status) {
    case SearchStatus::found:
      os << "# R\n" << io::serialize_matrix(res.pair->r) << "# S\n"
         << io::serialize_matrix(res.pair->s);
      if (!o.r_out.empty()) {
        io::write_file(o.r_out, io::serialize_matrix(res.pair->r));
      }
      if (!o.s_out.empty()) {
        io::write_file(o.s_out, io::serialize_matrix(res.pair->s));
      }
      return {os.str(), kSuccess};
    case SearchStatus::none:
      os << "none: no witness with entries <= " << o.bound << '\n';
      return {os.str(), kNegative};
    case SearchStatus::cap_exceeded:
      os << "gave up: node limit " << o.max_nodes << " reached\n";
      return {os.str(), kResourceCap};
  }
  return {};
}

Report cmd_chain(Options const& o) {
  auto const chain = io::load_chain(o.input);
  auto const v = verify_chain(chain);
  std::ostringstream os;
  if (v.ok) {
    os << "chain ok: " << chain.matrices.size() << " matrices, "
       << chain.witnesses.size() << " witnesses\n";
    return {os.str(), kSuccess};
  }
  os << "chain FAIL at witness " << *v.failed_witness + 1 << ": "
     << v.failure->report() << '\n';
  return {os.str(), kNegative};
}

Report cmd_inflate(Options const& o) {
  auto const r = io::load_matrix(o.r);
  auto const s = io::load_matrix(o.s);
  auto const rows = names_or_default(o.rows, "e", r.rows());
  auto const cols = names_or_default(o.cols, "f", r.cols());
  return {io::serialize_graph(inflate_graph(r, s, rows, cols))};
}

Report cmd_rect(Options const& o) {
  auto const r = io::load_matrix(o.r);
  auto const rows = names_or_default(o.rows, "e", r.rows());
  auto const cols = names_or_default(o.cols, "f", r.cols());
  return {io::serialize_graph(rect_graph(r, rows, cols))};
}

Report cmd_vmatrix(Options const& o) {
  return {io::serialize_matrix(vertex_matrix(io::load_graph(o.input)))};
}

Report cmd_frommatrix(Options const& o) {
  auto const a = io::load_matrix(o.input);
  std::optional<std::vector<std::string>> names;
  if (!o.names.empty()) {
    names = o.names;
  }
  return {io::serialize_graph(graph_from_matrix(a, names))};
}

Report cmd_analyze(Options const& o) {
  auto const g = io::load_graph(o.input);
  auto const a = analyze(g);
  std::ostringstream os;
  os << "vertices=" << g.vertex_count() << '\n'
     << "edges=" << g.edge_count() << '\n'
     << "sinks=" << format_subset(g, a.sinks) << '\n'
     << "sources=" << format_subset(g, a.sources) << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    unsigned const c = a.return_path_counts[v];
    os << "return_paths " << g.vertex_name(v) << '='
       << (c >= 2 ? std::string(">=2") : std::to_string(c)) << '\n';
  }
  os << "condition_k=" << flag(a.condition_k) << '\n'
     << "row_finite=" << flag(a.row_finite) << '\n';
  return {os.str()};
}

Report cmd_ideals(Options const& o) {
  auto const g = io::load_graph(o.input);
  auto const lattice = o.brute_force
                           ? enumerate_saturated_hereditary_brute_force(g)
                           : enumerate_saturated_hereditary(g);
  std::ostringstream os;
  for (auto const& s : lattice.subsets) {
    os << format_subset(g, s) << '\n';
  }
  os << "proper_with_empty=" << lattice.count_with_empty << '\n'
     << "proper_nonzero=" << lattice.count_nonzero << '\n'
     << "simple=" << flag(lattice.simple) << '\n';
  return {os.str()};
}

Report cmd_toeplitz(Options const& o) {
  return {io::serialize_graph(outsplit_toeplitz(io::load_graph(o.input)))};
}

void write_corner(std::ostream& os, char const* label, CornerMap const& m) {
  os << "# " << label << " corner:";
  for (auto const& v : m.corner_vertices) {
    os << ' ' << v;
  }
  os << '\n';
  for (auto const& e : m.edge_map) {
    os << e.graph_edge << " -> " << e.first << '.' << e.second << '\n';
  }
}

Report cmd_corners(Options const& o) {
  auto const r = io::load_matrix(o.r);
  auto const s = io::load_matrix(o.s);
  auto const rows = names_or_default(o.rows, "e", r.rows());
  auto const cols = names_or_default(o.cols, "f", r.cols());
  auto const maps = corner_maps(r, s, rows, cols);
  std::ostringstream os;
  write_corner(os, "E", maps.e_side);
  write_corner(os, "F", maps.f_side);
  return {os.str()};
}

void write_profile(std::ostream& os, char const* label,
                   CorrespondenceProfile const& p) {
  os << label << ": row_finite=" << flag(p.row_finite)
     << " has_sinks=" << flag(p.has_sinks)
     << " has_sources=" << flag(p.has_sources)
     << " regular=" << flag(p.regular) << " essential=" << flag(p.essential)
     << '\n';
}

Report cmd_verdict(Options const& o) {
  auto const v = morita_verdict(io::load_graph(o.e), io::load_graph(o.f),
                                io::load_matrix(o.r), io::load_matrix(o.s));
  std::ostringstream os;
  os << "esse_verified=" << flag(v.esse_verified) << '\n';
  write_profile(os, "E", v.profile_e);
  write_profile(os, "F", v.profile_f);
  os << "applicable=" << flag(v.applicable) << '\n'
     << "conclusion=" << to_string(v.conclusion) << '\n';
  for (auto const& ob : v.obstructions) {
    os << "obstruction: " << ob << '\n';
  }
  return {os.str(), v.applicable ? kSuccess : kNegative};
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Strong shift equivalence and graph algebra toolkit",
               "shiftequiv"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, std::function<Report(Options const&)>> handlers;

  auto add = [&](std::string const& name, std::string const& help,
                 std::function<Report(Options const&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-o,--output", o.output, "Write the report to a file");
    handlers.emplace(sub, std::move(fn));
    return sub;
  };
  auto mat_pair = [&](CLI::App* sub, bool with_names) {
    sub->add_option("--r", o.r, "R matrix (.mat)")->required();
    if (with_names) {
      sub->add_option("--rows", o.rows, "Row vertex names")->delimiter(',');
      sub->add_option("--cols", o.cols, "Column vertex names")->delimiter(',');
    }
  };

  auto* mul = add("mul", "Multiply two matrices", cmd_mul);
  mul->add_option("a", o.input, "Left factor (.mat)")->required();
  mul->add_option("b", o.second, "Right factor (.mat)")->required();

  auto* traces = add("traces", "Traces of A, A^2, ..., A^kmax", cmd_traces);
  traces->add_option("a", o.input, "Square matrix (.mat)")->required();
  traces->add_option("--kmax", o.kmax, "Largest power (default: size of A)")
      ->check(CLI::PositiveNumber);

  auto* verify = add("verify-esse", "Check A = RS and B = SR", cmd_verify);
  auto* wopt = verify->add_option("--witness", o.witness,
                                  "Witness manifest (.esse)");
  auto* aopt = verify->add_option("--a", o.a, "A (.mat)");
  auto* bopt = verify->add_option("--b", o.b, "B (.mat)");
  auto* ropt = verify->add_option("--r", o.r, "R (.mat)");
  auto* sopt = verify->add_option("--s", o.s, "S (.mat)");
  for (auto* opt : {aopt, bopt, ropt, sopt}) {
    opt->excludes(wopt);
    for (auto* other : {aopt, bopt, ropt, sopt}) {
      if (other != opt) {
        opt->needs(other);
      }
    }
  }

  auto* find = add("find-esse", "Search for R, S with A = RS and B = SR",
                   cmd_find);
  find->add_option("--a", o.a, "A (.mat)")->required();
  find->add_option("--b", o.b, "B (.mat)")->required();
  find->add_option("--bound", o.bound, "Largest entry of R and S")->required();
  find->add_option("--max-nodes", o.max_nodes, "Search node limit")
      ->check(CLI::PositiveNumber);
  find->add_option("--r-out", o.r_out, "Write R to this file");
  find->add_option("--s-out", o.s_out, "Write S to this file");

  auto* chain = add("chain", "Verify a chain of elementary equivalences",
                    cmd_chain);
  chain->add_option("chain", o.input, "Chain file")->required();

  auto* inflate = add("inflate", "Bipartite inflation graph of R and S",
                      cmd_inflate);
  mat_pair(inflate, true);
  inflate->add_option("--s", o.s, "S matrix (.mat)")->required();

  auto* rect = add("rect", "Bipartite graph of one rectangular matrix",
                   cmd_rect);
  mat_pair(rect, true);

  auto* vm = add("vmatrix", "Vertex matrix of a graph", cmd_vmatrix);
  vm->add_option("graph", o.input, "Graph (.graph)")->required();

  auto* fm = add("frommatrix", "Graph with the given vertex matrix",
                 cmd_frommatrix);
  fm->add_option("matrix", o.input, "Square matrix (.mat)")->required();
  fm->add_option("--names", o.names, "Vertex names")->delimiter(',');

  auto* an = add("analyze", "Sinks, sources and Condition (K)", cmd_analyze);
  an->add_option("graph", o.input, "Graph (.graph)")->required();

  auto* id = add("ideals", "Proper saturated hereditary vertex sets",
                 cmd_ideals);
  id->add_option("graph", o.input, "Graph (.graph)")->required();
  id->add_flag("--brute-force", o.brute_force,
               "Filter all subsets (at most 20 vertices)");

  auto* tp = add("toeplitz", "Outsplit graph at every vertex", cmd_toeplitz);
  tp->add_option("graph", o.input, "Graph (.graph)")->required();

  auto* corners = add("corners", "Generator maps onto complementary corners",
                      cmd_corners);
  mat_pair(corners, true);
  corners->add_option("--s", o.s, "S matrix (.mat)")->required();

  auto* verdict = add("verdict", "Morita equivalence via bipartite inflation",
                      cmd_verdict);
  verdict->add_option("--e", o.e, "Graph E (.graph)")->required();
  verdict->add_option("--f", o.f, "Graph F (.graph)")->required();
  verdict->add_option("--r", o.r, "R (.mat)")->required();
  verdict->add_option("--s", o.s, "S (.mat)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kSuccess;
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen == verify && o.witness.empty() && o.a.empty()) {
    err << "usage error: verify-esse needs --witness or all of --a --b --r "
           "--s\n";
    return kUsage;
  }

  Report report;
  try {
    report = handlers.at(chosen)(o);
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (o.output.empty()) {
    out << report.text;
  } else {
    try {
      io::write_file(o.output, report.text);
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }
  return report.code;
}

}  // namespace shiftequiv::cli
