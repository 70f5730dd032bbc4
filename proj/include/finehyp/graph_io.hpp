#pragma once

#include <iosfwd>
#include <string>

#include "finehyp/graph.hpp"

namespace finehyp {

/// Plain-text graph format, one record per line:
///
///   finehyp-graph v1
///   # comment
///   v <id> [label]
///   e <u> <v>
///
/// Vertex ids must be dense 0..n-1 and declared before use. Labels are
/// optional but all-or-nothing. The loader reports the offending line number
/// for every rejection (loops, duplicate edges, unknown ids, disconnected).
Graph load_graph(std::istream& in, const std::string& source_name = "<stream>");
Graph load_graph_file(const std::string& path);

void save_graph(const Graph& g, std::ostream& out);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace finehyp
