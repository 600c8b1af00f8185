#include "fixtures.hpp"

#include <sstream>

#include "commevo/rng.hpp"

namespace commevo::testing {

const std::string toy_edge_list = R"(# toy network: three 4-cliques and a bridging triangle
1 2
1 3
1 4
2 3
2 4
3 4
5 6
5 7
5 8
6 7
6 8
7 8
9 10
9 11
9 12
10 11
10 12
11 12
4 5
4 10
5 10
)";

LoadedGraph toy_network() {
  std::istringstream in(toy_edge_list);
  return load_edge_list(in);
}

Partition toy_truth(const LoadedGraph& g) {
  std::vector<Label> labels(g.graph.node_count());
  for (NodeId v = 0; v < labels.size(); ++v) {
    const int external = std::stoi(g.labels.name(v));
    labels[v] = static_cast<Label>((external - 1) / 4);
  }
  return Partition(std::move(labels));
}

Graph triangle() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
  return Graph::from_edges(3, e);
}

Graph path2() {
  const std::vector<Edge> e{{0, 1}};
  return Graph::from_edges(2, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

Graph two_cliques() {
  std::vector<Edge> e;
  for (NodeId base : {0u, 4u})
    for (NodeId i = 0; i < 4; ++i)
      for (NodeId j = i + 1; j < 4; ++j) e.emplace_back(base + i, base + j);
  e.emplace_back(3, 4);
  return Graph::from_edges(8, e);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.uniform() < p) e.emplace_back(u, v);
  if (e.empty() && n >= 2) e.emplace_back(0, 1);
  return Graph::from_edges(n, e);
}

Partition random_partition(std::size_t n, std::size_t max_label, std::uint64_t seed) {
  RngStream rng(seed, StreamPurpose::experiment, 1);
  std::vector<Label> labels(n);
  for (auto& l : labels) l = static_cast<Label>(rng.below(max_label + 1));
  return Partition(std::move(labels));
}

}  // namespace commevo::testing
