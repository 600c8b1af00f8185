#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace commevo::testing {

ObjectiveVector naive_objectives(const Graph& g, const Partition& p) {
  const auto edges = g.edges();
  std::set<std::pair<NodeId, NodeId>> edge_set(edges.begin(), edges.end());
  const double m = static_cast<double>(edges.size());
  std::size_t intra = 0;
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v = u + 1; v < g.node_count(); ++v)
      if (p[u] == p[v] && edge_set.count({u, v})) ++intra;
  std::map<Label, double> degree_sum;
  for (const auto& [u, v] : edges) {
    degree_sum[p[u]] += 1.0;
    degree_sum[p[v]] += 1.0;
  }
  double inter = 0.0;
  for (const auto& [label, d] : degree_sum) inter += (d / (2 * m)) * (d / (2 * m));
  return {1.0 - static_cast<double>(intra) / m, inter};
}

double literal_modularity(const Graph& g, const Partition& p) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  std::vector<double> k(n, 0.0);
  for (const auto& [u, v] : g.edges()) {
    adj[u][v] = adj[v][u] = 1;
    k[u] += 1;
    k[v] += 1;
  }
  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p[i] == p[j]) q += adj[i][j] - k[i] * k[j] / two_m;
  return q / two_m;
}

namespace {
bool dom(const ObjectiveVector& a, const ObjectiveVector& b) {
  const bool no_worse = a.intra <= b.intra && a.inter <= b.inter;
  const bool better = a.intra < b.intra || a.inter < b.inter;
  return no_worse && better;
}
}  // namespace

std::vector<std::vector<std::size_t>> pairwise_fronts(const std::vector<ObjectiveVector>& pts) {
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<bool> removed(pts.size(), false);
  std::size_t left = pts.size();
  while (left > 0) {
    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (removed[i]) continue;
      bool dominated = false;
      for (std::size_t j = 0; j < pts.size() && !dominated; ++j)
        if (!removed[j] && dom(pts[j], pts[i])) dominated = true;
      if (!dominated) front.push_back(i);
    }
    for (auto i : front) removed[i] = true;
    left -= front.size();
    fronts.push_back(front);
  }
  return fronts;
}

double mutual_information_counts(const Partition& a, const Partition& b) {
  std::map<Label, double> ca, cb;
  std::map<std::pair<Label, Label>, double> cab;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca[a[i]] += 1;
    cb[b[i]] += 1;
    cab[{a[i], b[i]}] += 1;
  }
  const double n = static_cast<double>(a.size());
  double mi = 0.0;
  for (const auto& [key, c] : cab)
    mi += (c / n) * std::log((c / n) / ((ca[key.first] / n) * (cb[key.second] / n)));
  return mi;
}

double nmi_arithmetic(const Partition& a, const Partition& b) {
  auto entropy = [](const Partition& p) {
    std::map<Label, double> c;
    for (auto l : p.labels()) c[l] += 1;
    double h = 0.0;
    for (const auto& [l, x] : c) {
      const double q = x / static_cast<double>(p.size());
      h -= q * std::log(q);
    }
    return h;
  };
  const double ha = entropy(a);
  const double hb = entropy(b);
  if (ha + hb == 0.0) return 1.0;
  return 2.0 * mutual_information_counts(a, b) / (ha + hb);
}

double emi_by_permutation(const Partition& a, const Partition& b) {
  std::vector<Label> perm(b.labels().begin(), b.labels().end());
  std::sort(perm.begin(), perm.end());
  // Every distinct arrangement of a multiset stands for the same number of
  // raw permutations, so a plain average over arrangements is exact.
  double total = 0.0;
  double count = 0.0;
  do {
    total += mutual_information_counts(a, Partition(perm));
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / count;
}

std::vector<std::size_t> min_rank_multiset(const std::vector<std::size_t>& ranks,
                                           std::size_t keep) {
  const std::size_t n = ranks.size();
  std::vector<std::size_t> best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != keep) continue;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) chosen.push_back(ranks[i]);
    std::sort(chosen.begin(), chosen.end());
    if (best.empty() || chosen < best) best = chosen;
  }
  return best;
}

}  // namespace commevo::testing
