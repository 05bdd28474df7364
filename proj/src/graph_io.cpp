#include "hamlab/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hamlab {

namespace {

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  return out;
}

}  // namespace

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  int lineno = 0;

  auto next_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream probe(line);
      std::string tok;
      if (probe >> tok) {
        out = line;
        return true;
      }
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) fail(path, lineno, "missing header");
  long long n = 0, m = 0;
  {
    std::istringstream hs(header);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) fail(path, lineno, "malformed header, expected 'n m'");
    if (n < 0 || m < 0) fail(path, lineno, "negative counts in header");
  }

  std::vector<Edge> edges;
  edges.reserve(size_t(m));
  EdgeColoring ec;
  int colored = -1;  // -1 unknown, 0 plain, 1 colored
  std::set<std::pair<int, int>> seen;
  for (long long i = 0; i < m; ++i) {
    std::string row;
    if (!next_line(row)) fail(path, lineno, "unexpected end of file, expected " + std::to_string(m) + " edges");
    std::istringstream rs(row);
    long long u = 0, v = 0, c = 0;
    if (!(rs >> u >> v)) fail(path, lineno, "malformed edge line");
    bool has_c = bool(rs >> c);
    std::string extra;
    if (rs >> extra) fail(path, lineno, "trailing tokens on edge line");
    if (colored == -1) colored = has_c ? 1 : 0;
    if (colored != (has_c ? 1 : 0)) fail(path, lineno, "inconsistent color column");
    if (u < 1 || u > n || v < 1 || v > n) fail(path, lineno, "vertex out of range");
    if (u == v) fail(path, lineno, "self-loop");
    Edge e = make_edge(int(u), int(v));
    if (!seen.insert({e.u, e.v}).second) fail(path, lineno, "duplicate edge");
    edges.push_back(e);
    if (has_c) {
      if (c < 1) fail(path, lineno, "edge color must be >= 1");
      ec.set(e.u, e.v, int(c));
      ec.palette = std::max(ec.palette, int(c));
    }
  }
  std::string rest;
  if (next_line(rest)) fail(path, lineno, "trailing content after edge list");

  GraphFile gf{Graph(int(n), std::move(edges)), std::nullopt};
  if (colored == 1) gf.colors = std::move(ec);
  return gf;
}

Graph read_graph(const std::string& path) { return read_graph_file(path).graph; }

void write_graph(const Graph& g, const std::string& path) {
  std::ofstream out = open_out(path);
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_colored_graph(const Graph& g, const EdgeColoring& ec, const std::string& path) {
  std::ofstream out = open_out(path);
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << ec.color(e.u, e.v) << '\n';
}

VertexColoring read_vertex_coloring(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<std::pair<int, int>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream rs(line);
    long long v = 0, c = 0;
    if (!(rs >> v)) continue;  // blank line
    std::string extra;
    if (!(rs >> c) || (rs >> extra)) fail(path, lineno, "malformed vertex color line, expected 'v c'");
    if (c < 1) fail(path, lineno, "vertex color must be >= 1");
    rows.push_back({int(v), int(c)});
  }
  int n = int(rows.size());
  VertexColoring vc;
  vc.color.assign(size_t(n) + 1, 0);
  for (auto [v, c] : rows) {
    if (v < 1 || v > n) fail(path, 0, "vertex " + std::to_string(v) + " out of range 1..n");
    if (vc.color[size_t(v)] != 0) fail(path, 0, "vertex " + std::to_string(v) + " listed twice");
    vc.color[size_t(v)] = c;
    vc.palette = std::max(vc.palette, c);
  }
  vc.class_sizes.assign(size_t(vc.palette), 0);
  for (int v = 1; v <= n; ++v) ++vc.class_sizes[size_t(vc.color[size_t(v)]) - 1];
  return vc;
}

void write_vertex_coloring(const VertexColoring& vc, const std::string& path) {
  std::ofstream out = open_out(path);
  for (int v = 1; v <= vc.n(); ++v) out << v << ' ' << vc.color_of(v) << '\n';
}

ColorPattern read_pattern(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<int> seq;
  long long c;
  while (in >> c) seq.push_back(int(c));
  if (seq.empty()) throw std::runtime_error(path + ": empty pattern");
  return ColorPattern(std::move(seq));
}

std::vector<int> read_vertex_list(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<int> out;
  long long v;
  while (in >> v) out.push_back(int(v));
  if (out.empty()) throw std::runtime_error(path + ": empty vertex list");
  return out;
}

}  // namespace hamlab
