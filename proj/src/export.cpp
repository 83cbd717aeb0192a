#include "bicyc/export.hpp"

#include <algorithm>
#include <set>

namespace bicyc {
namespace {

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

std::pair<Vertex, Vertex> ordered(const Vertex& x, const Vertex& y) {
  return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
}

EdgeSet all_edges(const BicirculantParams& p) {
  EdgeSet edges;
  for (int i = 0; i < p.m(); ++i) {
    for (const Vertex& v : {outer_vertex(i), inner_vertex(i)})
      for (const Vertex& w : p.neighbors(v)) edges.insert(ordered(v, w));
  }
  return edges;
}

const char* edge_color(EdgeClass cls) {
  switch (cls) {
    case EdgeClass::Outer: return "blue";
    case EdgeClass::Inner: return "red";
    default: return "gray40";
  }
}

}  // namespace

std::string export_graph(const BicirculantParams& p,
                         const std::optional<CycleCertificate>& cycle,
                         ExportFormat format) {
  EdgeSet cycle_edges;
  if (cycle) {
    const auto& seq = cycle->vertices;
    if (seq.size() != static_cast<size_t>(p.vertex_count()))
      fail(Errc::CycleParamMismatch,
           "certificate covers " + std::to_string(seq.size()) +
               " vertices, graph has " + std::to_string(p.vertex_count()));
    for (size_t i = 0; i < seq.size(); ++i) {
      const Vertex& x = seq[i];
      const Vertex& y = seq[(i + 1) % seq.size()];
      if (!p.valid_vertex(x) || !p.valid_vertex(y) || !p.adjacent(x, y))
        fail(Errc::CycleParamMismatch,
             "certificate edge " + to_string(x) + " -- " + to_string(y) +
                 " is not in the graph");
      cycle_edges.insert(ordered(x, y));
    }
  }

  EdgeSet edges = all_edges(p);
  std::string out;
  if (format == ExportFormat::EdgeList) {
    for (const auto& [x, y] : edges)
      out += to_string(x) + " " + to_string(y) + "\n";
    return out;
  }

  out += "graph bicirculant {\n";
  out += "  node [shape=circle fontsize=10];\n";
  for (int i = 0; i < p.m(); ++i) out += "  u" + std::to_string(i) + ";\n";
  for (int i = 0; i < p.m(); ++i) out += "  v" + std::to_string(i) + ";\n";
  for (const auto& [x, y] : edges) {
    EdgeKind kind = p.classify_edge(x, y);
    out += "  " + to_string(x) + " -- " + to_string(y) + " [color=" +
           edge_color(kind.cls);
    if (cycle_edges.count({x, y})) out += " penwidth=3";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace bicyc
