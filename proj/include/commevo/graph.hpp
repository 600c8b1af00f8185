#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace commevo {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

struct LoadReport {
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_duplicates = 0;
};

// Immutable undirected simple graph in CSR form. Neighbor lists are sorted
// and duplicate-free; safe for concurrent reads.
class Graph {
 public:
  Graph() = default;

  // Self-loops and parallel edges are dropped and counted in `report`.
  // Throws ContractError if an endpoint is >= node_count.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          LoadReport* report = nullptr);

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Throws std::out_of_range for v >= node_count().
  std::span<const NodeId> neighbors(NodeId v) const;

  std::uint32_t degree(NodeId v) const { return degrees_.at(v); }
  std::span<const std::uint32_t> degrees() const noexcept { return degrees_; }
  std::uint32_t max_degree() const noexcept;

  // Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::uint32_t> degrees_;
  std::size_t edge_count_ = 0;
};

// Bijection between external node identifiers and dense internal ids.
class NodeLabelTable {
 public:
  NodeLabelTable() = default;

  // Names "0", "1", ..., "n-1".
  static NodeLabelTable identity(std::size_t n);

  NodeId intern(std::string_view name);
  std::optional<NodeId> find(std::string_view name) const;
  const std::string& name(NodeId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> ids_;
};

enum class EdgeListFormat { whitespace, csv };

struct LoadedGraph {
  Graph graph;
  NodeLabelTable labels;
  LoadReport report;
};

// One edge per line; '#' starts a comment line. Throws ParseError on a line
// that does not hold exactly two identifiers, EmptyGraphError if no edge
// survives cleaning.
LoadedGraph load_edge_list(std::istream& in,
                           EdgeListFormat format = EdgeListFormat::whitespace);

void write_edge_list(std::ostream& out, const Graph& g, const NodeLabelTable& labels);

}  // namespace commevo
