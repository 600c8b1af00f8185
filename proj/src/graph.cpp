#include "commevo/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "commevo/errors.hpp"

namespace commevo {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        LoadReport* report) {
  Graph g;
  std::size_t self_loops = 0;
  std::vector<std::size_t> counts(node_count + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count)
      throw ContractError("edge endpoint out of range");
    if (u == v) {
      ++self_loops;
      continue;
    }
    ++counts[u + 1];
    ++counts[v + 1];
  }
  for (std::size_t i = 1; i <= node_count; ++i) counts[i] += counts[i - 1];

  std::vector<NodeId> raw(counts[node_count]);
  std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    raw[cursor[u]++] = v;
    raw[cursor[v]++] = u;
  }

  g.offsets_.assign(node_count + 1, 0);
  g.degrees_.assign(node_count, 0);
  g.adjacency_.reserve(raw.size());
  std::size_t removed = 0;
  for (std::size_t v = 0; v < node_count; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(counts[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(counts[v + 1]);
    std::sort(first, last);
    auto unique_end = std::unique(first, last);
    removed += static_cast<std::size_t>(last - unique_end);
    g.adjacency_.insert(g.adjacency_.end(), first, unique_end);
    g.offsets_[v + 1] = g.adjacency_.size();
    g.degrees_[v] = static_cast<std::uint32_t>(unique_end - first);
  }
  g.adjacency_.shrink_to_fit();
  g.edge_count_ = g.adjacency_.size() / 2;

  if (report) {
    report->dropped_self_loops += self_loops;
    report->dropped_duplicates += removed / 2;
  }
  return g;
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  if (v >= node_count()) throw std::out_of_range("node id out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::uint32_t Graph::max_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

NodeLabelTable NodeLabelTable::identity(std::size_t n) {
  NodeLabelTable t;
  for (std::size_t i = 0; i < n; ++i) t.intern(std::to_string(i));
  return t;
}

NodeId NodeLabelTable::intern(std::string_view name) {
  auto [it, inserted] =
      ids_.try_emplace(std::string(name), static_cast<NodeId>(names_.size()));
  if (inserted) names_.emplace_back(name);
  return it->second;
}

std::optional<NodeId> NodeLabelTable::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, EdgeListFormat format) {
  std::vector<std::string_view> fields;
  if (format == EdgeListFormat::csv) {
    std::size_t start = 0;
    while (true) {
      auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return fields;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    auto j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, EdgeListFormat format) {
  LoadedGraph out;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fields = split_fields(body, format);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      throw ParseError(line_no, "expected two node identifiers");
    NodeId u = out.labels.intern(fields[0]);
    NodeId v = out.labels.intern(fields[1]);
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw IoError("read failure");
  out.graph = Graph::from_edges(out.labels.size(), edges, &out.report);
  if (out.graph.edge_count() == 0) throw EmptyGraphError();
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g, const NodeLabelTable& labels) {
  if (labels.size() != g.node_count())
    throw ContractError("label table does not match graph");
  for (const auto& [u, v] : g.edges()) out << labels.name(u) << ' ' << labels.name(v) << '\n';
}

}  // namespace commevo
