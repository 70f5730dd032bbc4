#include "finehyp/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace finehyp {

namespace {

[[noreturn]] void fail(const std::string& src, int line, const std::string& msg) {
  throw InputError(src + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

Graph load_graph(std::istream& in, const std::string& source_name) {
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) fail(source_name, 1, "empty input");
  ++lineno;
  if (line != "finehyp-graph v1")
    fail(source_name, lineno, "expected header 'finehyp-graph v1', got '" + line + "'");

  std::vector<std::string> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  VertexId next_id = 0;
  bool any_label = false, any_unlabeled = false, edges_started = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "v") {
      if (edges_started) fail(source_name, lineno, "vertex declared after edges");
      VertexId id;
      if (!(ls >> id)) fail(source_name, lineno, "malformed vertex line");
      if (id != next_id)
        fail(source_name, lineno,
             "vertex ids must be dense and ascending; expected " + std::to_string(next_id));
      std::string label;
      if (ls >> label) {
        any_label = true;
        labels.resize(next_id + 1);
        labels[next_id] = label;
      } else {
        any_unlabeled = true;
      }
      std::string extra;
      if (ls >> extra) fail(source_name, lineno, "trailing tokens on vertex line");
      ++next_id;
    } else if (kind == "e") {
      edges_started = true;
      VertexId u, v;
      if (!(ls >> u >> v)) fail(source_name, lineno, "malformed edge line");
      std::string extra;
      if (ls >> extra) fail(source_name, lineno, "trailing tokens on edge line");
      if (u < 0 || u >= next_id || v < 0 || v >= next_id)
        fail(source_name, lineno, "edge references undeclared vertex");
      if (u == v) fail(source_name, lineno, "loop edge rejected");
      edges.emplace_back(u, v);
    } else {
      fail(source_name, lineno, "unknown record '" + kind + "'");
    }
  }
  if (next_id == 0) fail(source_name, lineno, "no vertices declared");
  if (any_label && any_unlabeled)
    fail(source_name, lineno, "labels must be present on all vertices or none");

  try {
    return Graph::from_edges(next_id, edges, any_label ? std::move(labels) : std::vector<std::string>{});
  } catch (const InputError& e) {
    throw InputError(source_name + ": " + e.what());
  }
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  return load_graph(in, path);
}

void save_graph(const Graph& g, std::ostream& out) {
  out << "finehyp-graph v1\n";
  for (VertexId v = 0; v < g.size(); ++v) {
    out << "v " << v;
    if (g.has_labels()) out << ' ' << g.label(v);
    out << '\n';
  }
  g.for_each_edge([&](VertexId u, VertexId v) { out << "e " << u << ' ' << v << '\n'; });
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file: " + path);
  save_graph(g, out);
  out.flush();
  if (!out) throw InputError("failed writing graph file: " + path);
}

}  // namespace finehyp
