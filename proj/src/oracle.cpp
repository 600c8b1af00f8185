#include "commevo/oracle.hpp"

#include <algorithm>
#include <string>

#include "commevo/errors.hpp"
#include "commevo/nsga.hpp"

namespace commevo {

namespace {

class Archive {
 public:
  void offer(const ObjectiveVector& v, const std::vector<Label>& labels) {
    for (const auto& p : points_)
      if (p.objectives == v || dominates(p.objectives, v)) return;
    std::erase_if(points_, [&](const ExactFrontPoint& p) { return dominates(v, p.objectives); });
    points_.push_back({v, Partition(labels)});
  }

  std::vector<ExactFrontPoint> take() {
    std::sort(points_.begin(), points_.end(), [](const auto& a, const auto& b) {
      if (a.objectives.intra != b.objectives.intra) return a.objectives.intra < b.objectives.intra;
      return a.objectives.inter < b.objectives.inter;
    });
    return std::move(points_);
  }

 private:
  std::vector<ExactFrontPoint> points_;
};

}  // namespace

std::vector<ExactFrontPoint> exact_pareto(const Graph& g, std::size_t max_nodes) {
  const std::size_t n = g.node_count();
  if (n > max_nodes)
    throw ConfigError("exact enumeration refused: " + std::to_string(n) +
                      " nodes exceeds the limit of " + std::to_string(max_nodes) +
                      " (set partitions grow as the Bell numbers)");
  if (g.edge_count() == 0) throw EmptyGraphError();

  const auto edges = g.edges();
  const double m = static_cast<double>(g.edge_count());
  const auto degrees = g.degrees();

  Archive archive;
  // Restricted growth string: labels[0] = 0, labels[i] <= 1 + max(labels[0..i)).
  std::vector<Label> labels(n, 0);
  std::vector<Label> prefix_max(n, 0);
  std::vector<double> degree_sum(n);
  while (true) {
    std::size_t intra = 0;
    for (const auto& [u, v] : edges) intra += labels[u] == labels[v] ? 1 : 0;
    std::fill(degree_sum.begin(), degree_sum.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v) degree_sum[labels[v]] += degrees[v];
    double inter = 0.0;
    for (double d : degree_sum) inter += (d / (2.0 * m)) * (d / (2.0 * m));
    archive.offer({1.0 - static_cast<double>(intra) / m, inter}, labels);

    // Advance to the next restricted growth string: bump the last position
    // that may still grow and reset everything after it.
    std::size_t i = n;
    while (i > 1 && labels[i - 1] > prefix_max[i - 2]) --i;
    if (i <= 1) break;
    --i;
    ++labels[i];
    prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return archive.take();
}

}  // namespace commevo
