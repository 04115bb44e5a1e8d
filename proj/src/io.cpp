#include "sec/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sec/core.hpp"
#include "sec/discharging.hpp"
#include "sec/embed.hpp"
#include "sec/exact_solver.hpp"
#include "sec/generator.hpp"
#include "sec/reducer.hpp"

namespace sec {

namespace {

[[noreturn]] void syntax(int line, const std::string& msg) {
  fail(Err::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

// Strips a trailing comment and surrounding whitespace.
std::string clean_line(std::string s) {
  auto h = s.find('#');
  if (h != std::string::npos) s.erase(h);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct NumberedLine {
  int number;
  std::string text;
};

std::vector<NumberedLine> content_lines(const std::string& text) {
  std::vector<NumberedLine> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string s = clean_line(raw);
    if (!s.empty()) out.push_back(NumberedLine{number, s});
  }
  return out;
}

bool parse_int(const std::string& tok, int& out) {
  if (tok.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stoi(tok, &pos);
  } catch (...) {
    return false;
  }
  return pos == tok.size();
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

PlaneMultigraph parse_pmg(const std::vector<NumberedLine>& lines) {
  size_t i = 0;
  auto expect = [&](const std::string& what) -> const NumberedLine& {
    if (i >= lines.size())
      fail(Err::SyntaxError, "unexpected end of file: expected " + what);
    return lines[i++];
  };
  {
    const auto& hd = expect("header 'pmg 1'");
    auto toks = tokens_of(hd.text);
    if (toks.size() != 2 || toks[0] != "pmg" || toks[1] != "1")
      syntax(hd.number, "expected header 'pmg 1'");
  }
  int n = -1;
  {
    const auto& vl = expect("'v <count>'");
    auto toks = tokens_of(vl.text);
    if (toks.size() != 2 || toks[0] != "v" || !parse_int(toks[1], n) || n < 0)
      syntax(vl.number, "expected 'v <count>'");
  }
  std::vector<Edge> edges;
  while (i < lines.size() && tokens_of(lines[i].text)[0] == "E") {
    const auto& el = lines[i++];
    auto toks = tokens_of(el.text);
    int a = -1, b = -1;
    if (toks.size() != 3 || !parse_int(toks[1], a) || !parse_int(toks[2], b))
      syntax(el.number, "expected 'E <a> <b>'");
    if (a < 0 || a >= n || b < 0 || b >= n)
      syntax(el.number, "edge endpoint out of range");
    edges.push_back(Edge{a, b});
  }
  std::vector<std::vector<int>> rot(static_cast<size_t>(n));
  std::vector<char> seen(static_cast<size_t>(n), 0);
  while (i < lines.size()) {
    const auto& rl = lines[i++];
    auto toks = tokens_of(rl.text);
    if (toks[0] != "R") syntax(rl.number, "expected 'R <v>: <edge ids>'");
    if (toks.size() < 2 || toks[1].empty() || toks[1].back() != ':')
      syntax(rl.number, "expected 'R <v>:' with a trailing colon");
    int v = -1;
    if (!parse_int(toks[1].substr(0, toks[1].size() - 1), v) || v < 0 || v >= n)
      syntax(rl.number, "rotation vertex out of range");
    if (seen[static_cast<size_t>(v)]) syntax(rl.number, "duplicate rotation for vertex " + std::to_string(v));
    seen[static_cast<size_t>(v)] = 1;
    for (size_t t = 2; t < toks.size(); ++t) {
      int e = -1;
      if (!parse_int(toks[t], e) || e < 0 || e >= static_cast<int>(edges.size()))
        syntax(rl.number, "rotation edge id out of range");
      rot[static_cast<size_t>(v)].push_back(e);
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<size_t>(v)])
      fail(Err::SyntaxError, "missing rotation line for vertex " + std::to_string(v));
  return make_graph(n, edges, std::move(rot));
}

PlaneMultigraph parse_el(const std::vector<NumberedLine>& lines) {
  std::vector<Edge> edges;
  int n = 0;
  for (const auto& ln : lines) {
    auto toks = tokens_of(ln.text);
    int a = -1, b = -1;
    if (toks.size() != 2 || !parse_int(toks[0], a) || !parse_int(toks[1], b))
      syntax(ln.number, "expected '<u> <v>'");
    if (a < 0 || b < 0) syntax(ln.number, "vertex ids must be nonnegative");
    edges.push_back(Edge{a, b});
    n = std::max({n, a + 1, b + 1});
  }
  return embed_edge_list(n, edges);
}

}  // namespace

PlaneMultigraph parse_graph(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(Err::SyntaxError, "empty graph file");
  auto toks = tokens_of(lines[0].text);
  if (toks[0] == "pmg") return parse_pmg(lines);
  return parse_el(lines);
}

std::string serialize_graph(const PlaneMultigraph& g) {
  std::ostringstream out;
  out << "pmg 1\n";
  out << "v " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges) out << "E " << e.u << " " << e.v << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "R " << v << ":";
    for (int e : g.rot[static_cast<size_t>(v)]) out << " " << e;
    out << "\n";
  }
  return out.str();
}

PartialColoring parse_coloring(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(Err::SyntaxError, "empty coloring file");
  auto toks = tokens_of(lines[0].text);
  int k = -1;
  if (toks.size() != 2 || toks[0] != "k" || !parse_int(toks[1], k))
    syntax(lines[0].number, "expected 'k <palette>'");
  if (k < 0) fail(Err::ColorOutOfRange, "palette size must be nonnegative");
  std::vector<std::pair<int, int>> entries;
  int max_edge = -1;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto t = tokens_of(lines[i].text);
    int e = -1, c = -1;
    if (t.size() != 3 || t[0] != "c" || !parse_int(t[1], e) || !parse_int(t[2], c))
      syntax(lines[i].number, "expected 'c <edge id> <color>'");
    if (e < 0) syntax(lines[i].number, "edge id must be nonnegative");
    if (c < 1 || c > k)
      fail(Err::ColorOutOfRange, "line " + std::to_string(lines[i].number) + ": color " +
                                     std::to_string(c) + " outside 1.." + std::to_string(k));
    entries.emplace_back(e, c);
    max_edge = std::max(max_edge, e);
  }
  PartialColoring col(max_edge + 1, k);
  for (auto [e, c] : entries) {
    if (col.color[static_cast<size_t>(e)] != 0)
      fail(Err::SyntaxError, "edge " + std::to_string(e) + " colored twice");
    col.color[static_cast<size_t>(e)] = c;
  }
  return col;
}

std::string serialize_coloring(const PartialColoring& c) {
  std::ostringstream out;
  out << "k " << c.palette << "\n";
  for (size_t e = 0; e < c.color.size(); ++e)
    if (c.color[e] != 0) out << "c " << e << " " << c.color[e] << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// CLI
// ---------------------------------------------------------------------------

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::InputInvalid, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::InputInvalid, "cannot write '" + path + "'");
  out << text;
}

int colors_used(const PartialColoring& c) {
  std::vector<char> seen(static_cast<size_t>(c.palette) + 1, 0);
  int used = 0;
  for (int col : c.color)
    if (col != 0 && !seen[static_cast<size_t>(col)]) {
      seen[static_cast<size_t>(col)] = 1;
      ++used;
    }
  return used;
}

int cmd_color(const std::string& graph_path, bool trace, bool porcelain,
              const std::string& out_path) {
  PlaneMultigraph g = parse_graph(read_input(graph_path));
  ColorResult res = color_graph(g);
  if (!out_path.empty()) write_output(out_path, serialize_coloring(res.coloring));
  if (porcelain) {
    std::cout << "status=ok\n";
    std::cout << "vertices=" << g.vertex_count() << "\n";
    std::cout << "edges=" << g.edge_count() << "\n";
    std::cout << "palette=" << res.coloring.palette << "\n";
    std::cout << "colors_used=" << colors_used(res.coloring) << "\n";
    std::cout << "steps=" << res.trace.steps.size() << "\n";
    if (trace) {
      for (size_t i = 0; i < res.trace.steps.size(); ++i) {
        const TraceStep& s = res.trace.steps[i];
        std::cout << "step." << i << ".kind=" << config_kind_name(s.kind) << "\n";
        std::cout << "step." << i << ".witness=" << s.witness << "\n";
        std::cout << "step." << i << ".frontier=" << s.frontier_size << "\n";
        std::cout << "step." << i << ".nodes=" << s.nodes << "\n";
        std::cout << "step." << i << ".widened=" << (s.widened ? 1 : 0) << "\n";
      }
      for (size_t i = 0; i < res.trace.base_sizes.size(); ++i)
        std::cout << "base." << i << "=" << res.trace.base_sizes[i] << "\n";
    }
  } else {
    std::cout << "colored " << g.edge_count() << " edges with " << colors_used(res.coloring)
              << " colors (palette " << res.coloring.palette << ")\n";
    if (trace) {
      for (size_t i = 0; i < res.trace.steps.size(); ++i) {
        const TraceStep& s = res.trace.steps[i];
        std::cout << "step " << i << ": " << s.witness << " frontier=" << s.frontier_size
                  << " nodes=" << s.nodes << (s.widened ? " widened" : "") << "\n";
      }
      std::cout << "base cases:";
      for (int b : res.trace.base_sizes) std::cout << " " << b;
      std::cout << "\n";
    }
  }
  if (out_path.empty() && !porcelain && !trace)
    std::cout << serialize_coloring(res.coloring);
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& col_path, bool porcelain) {
  PlaneMultigraph g = parse_graph(read_input(graph_path));
  PartialColoring c = parse_coloring(read_input(col_path));
  if (static_cast<int>(c.color.size()) > g.edge_count())
    fail(Err::InputInvalid, "coloring refers to edge " + std::to_string(c.color.size() - 1) +
                                " but the graph has " + std::to_string(g.edge_count()) + " edges");
  c.color.resize(static_cast<size_t>(g.edge_count()), 0);
  std::vector<Violation> viols;
  try {
    viols = verify_strong(g, c);
  } catch (const Error& err) {
    if (err.kind() == Err::UncoloredEdge || err.kind() == Err::ColorOutOfRange) {
      if (porcelain)
        std::cout << "status=invalid\nreason=" << err_name(err.kind()) << "\n";
      else
        std::cout << "invalid: " << err.what() << "\n";
      return 2;
    }
    throw;
  }
  if (porcelain) {
    std::cout << (viols.empty() ? "status=valid\n" : "status=invalid\n");
    std::cout << "violations=" << viols.size() << "\n";
    for (size_t i = 0; i < viols.size(); ++i)
      std::cout << "violation." << i << "=" << viols[i].e << "," << viols[i].f << ","
                << viols[i].color << "\n";
  } else if (viols.empty()) {
    std::cout << "valid strong coloring (" << colors_used(c) << " colors)\n";
  } else {
    std::cout << "invalid: " << viols.size() << " violation(s)\n";
    for (const Violation& v : viols)
      std::cout << "  edges " << v.e << " and " << v.f << " share color " << v.color << "\n";
  }
  return viols.empty() ? 0 : 2;
}

int cmd_exact(const std::string& graph_path, int max_k, bool force, bool porcelain) {
  PlaneMultigraph g = parse_graph(read_input(graph_path));
  ExactResult r = strong_chromatic_index(g, max_k, force);
  if (porcelain) {
    if (r.chi_s)
      std::cout << "chi_s=" << *r.chi_s << "\n";
    else
      std::cout << "chi_s=>" << max_k << "\n";
    std::cout << "nodes=" << r.nodes << "\n";
    if (r.witness) std::cout << "witness_colors=" << colors_used(*r.witness) << "\n";
  } else {
    if (r.chi_s)
      std::cout << "strong chromatic index: " << *r.chi_s << "\n";
    else
      std::cout << "strong chromatic index exceeds " << max_k << "\n";
    std::cout << "search nodes: " << r.nodes << "\n";
  }
  return 0;
}

int cmd_charge(const std::string& graph_path, bool porcelain) {
  PlaneMultigraph g = parse_graph(read_input(graph_path));
  ChargeReport r = charges(g);
  if (porcelain) {
    for (size_t v = 0; v < r.vertex_initial.size(); ++v)
      std::cout << "vertex." << v << "=" << r.vertex_initial[v].str() << ","
                << r.vertex_final[v].str() << "\n";
    for (size_t f = 0; f < r.face_initial.size(); ++f)
      std::cout << "face." << f << "=" << r.faces.faces[f].length() << ","
                << r.face_initial[f].str() << "," << r.face_final[f].str() << "\n";
    std::cout << "total_initial=" << r.total_initial.str() << "\n";
    std::cout << "total_final=" << r.total_final.str() << "\n";
  } else {
    std::cout << "vertices (initial -> final):\n";
    for (size_t v = 0; v < r.vertex_initial.size(); ++v)
      std::cout << "  v" << v << ": " << r.vertex_initial[v].str() << " -> "
                << r.vertex_final[v].str() << "\n";
    std::cout << "faces (length, initial -> final):\n";
    for (size_t f = 0; f < r.face_initial.size(); ++f)
      std::cout << "  f" << f << " (len " << r.faces.faces[f].length() << "): "
                << r.face_initial[f].str() << " -> " << r.face_final[f].str() << "\n";
    std::cout << "total: " << r.total_initial.str() << " -> " << r.total_final.str() << "\n";
  }
  return 0;
}

int cmd_audit(const std::string& graph_path, bool porcelain) {
  PlaneMultigraph g = parse_graph(read_input(graph_path));
  AuditReport r = audit(g);
  if (porcelain) {
    for (size_t i = 0; i < r.predicates.size(); ++i) {
      const PredicateResult& p = r.predicates[i];
      std::cout << "predicate." << i << ".name=" << p.name << "\n";
      std::cout << "predicate." << i << ".holds=" << (p.holds ? 1 : 0) << "\n";
      if (!p.holds) std::cout << "predicate." << i << ".witness=" << p.witness << "\n";
    }
    std::cout << "failing=" << r.failing.size() << "\n";
    std::cout << "detector_found=" << (r.detector_found ? 1 : 0) << "\n";
    if (r.detector_found) {
      std::cout << "detector_kind=" << r.detector_name << "\n";
      std::cout << "detector_witness=" << r.detector_witness << "\n";
    }
    std::cout << "agreement=" << (r.agreement ? 1 : 0) << "\n";
  } else {
    for (const PredicateResult& p : r.predicates) {
      std::cout << (p.holds ? "PASS  " : "FAIL  ") << p.name;
      if (!p.holds) std::cout << "  [" << p.witness << "]";
      std::cout << "\n";
    }
    std::cout << r.failing.size() << " predicate(s) fail\n";
    if (r.detector_found)
      std::cout << "detector: " << r.detector_witness << "\n";
    else
      std::cout << "detector: none\n";
    std::cout << "auditor/detector agreement: " << (r.agreement ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_gen(int n, std::uint64_t seed, double p2, bool parallel, const std::string& out_path) {
  GenSpec spec;
  spec.target_vertices = n;
  spec.seed = seed;
  spec.two_vertex_fraction = p2;
  spec.allow_parallel = parallel;
  PlaneMultigraph g = generate(spec);
  write_output(out_path, serialize_graph(g));
  return 0;
}

int cmd_stats(const std::string& graph_path, bool porcelain) {
  PlaneMultigraph g = parse_graph(read_input(graph_path));
  StructureReport r = structure_report(g);
  if (porcelain) {
    std::cout << "vertices=" << g.vertex_count() << "\n";
    std::cout << "edges=" << g.edge_count() << "\n";
    std::cout << "components=" << r.component_count << "\n";
    std::cout << "bridges=" << r.bridges.size() << "\n";
    std::cout << "two_vertices=" << r.two_vertices.size() << "\n";
    std::cout << "low_vertices=" << r.low_vertices.size() << "\n";
    std::cout << "parallel_pairs=" << r.parallel_pairs.size() << "\n";
    std::cout << "girth=" << (r.girth ? std::to_string(*r.girth) : "none") << "\n";
  } else {
    std::cout << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
              << r.component_count << " component(s)\n";
    std::cout << r.bridges.size() << " bridge(s), " << r.two_vertices.size()
              << " 2-vertices, " << r.low_vertices.size() << " vertices of degree <= 1, "
              << r.parallel_pairs.size() << " parallel pair(s)\n";
    std::cout << "girth: " << (r.girth ? std::to_string(*r.girth) : "none (acyclic)") << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"strong 9-edge-coloring toolkit for subcubic planar multigraphs"};
  app.require_subcommand(1);

  std::string graph_path, col_path, out_path;
  bool trace = false, porcelain = false, force = false, parallel = false;
  int max_k = 13, n = 12;
  std::uint64_t seed = 0;
  double p2 = 0.3;

  auto* c_color = app.add_subcommand("color", "construct a strong 9-edge-coloring");
  c_color->add_option("graph", graph_path, "graph file (PMG or EL; '-' for stdin)")->required();
  c_color->add_flag("--trace", trace, "print the reduction trace");
  c_color->add_flag("--porcelain", porcelain, "machine-readable key=value output");
  c_color->add_option("-o,--output", out_path, "write the coloring to this file");

  auto* c_verify = app.add_subcommand("verify", "check a coloring against a graph");
  c_verify->add_option("graph", graph_path, "graph file")->required();
  c_verify->add_option("coloring", col_path, "coloring file")->required();
  c_verify->add_flag("--porcelain", porcelain, "machine-readable output");

  auto* c_exact = app.add_subcommand("exact", "exact strong chromatic index");
  c_exact->add_option("graph", graph_path, "graph file")->required();
  c_exact->add_option("--max-k", max_k, "largest palette to try");
  c_exact->add_flag("--force", force, "run even above the size guard");
  c_exact->add_flag("--porcelain", porcelain, "machine-readable output");

  auto* c_charge = app.add_subcommand("charge", "Euler charges and discharging rules");
  c_charge->add_option("graph", graph_path, "graph file")->required();
  c_charge->add_flag("--porcelain", porcelain, "machine-readable output");

  auto* c_audit = app.add_subcommand("audit", "structural audit against the detector");
  c_audit->add_option("graph", graph_path, "graph file")->required();
  c_audit->add_flag("--porcelain", porcelain, "machine-readable output");

  auto* c_gen = app.add_subcommand("gen", "generate a random instance");
  c_gen->add_option("--n", n, "target vertex count")->required();
  c_gen->add_option("--seed", seed, "RNG seed")->required();
  c_gen->add_option("--p2", p2, "subdivision probability (2-vertex supply)");
  c_gen->add_flag("--parallel", parallel, "allow parallel edges");
  c_gen->add_option("-o,--output", out_path, "write the graph to this file");

  auto* c_stats = app.add_subcommand("stats", "structural summary of a graph");
  c_stats->add_option("graph", graph_path, "graph file")->required();
  c_stats->add_flag("--porcelain", porcelain, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (c_color->parsed()) return cmd_color(graph_path, trace, porcelain, out_path);
    if (c_verify->parsed()) return cmd_verify(graph_path, col_path, porcelain);
    if (c_exact->parsed()) return cmd_exact(graph_path, max_k, force, porcelain);
    if (c_charge->parsed()) return cmd_charge(graph_path, porcelain);
    if (c_audit->parsed()) return cmd_audit(graph_path, porcelain);
    if (c_gen->parsed()) return cmd_gen(n, seed, p2, parallel, out_path);
    if (c_stats->parsed()) return cmd_stats(graph_path, porcelain);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    if (is_internal_breach(err.kind())) return 3;
    if (err.kind() == Err::InvalidColoring) return 2;
    return 1;
  }
  return 1;
}

}  // namespace sec
