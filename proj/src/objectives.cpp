#include "commevo/objectives.hpp"

#include <algorithm>

#include "commevo/errors.hpp"

namespace commevo {

namespace {

struct CommunityTally {
  std::vector<std::size_t> intra_edges;
  std::vector<std::size_t> degree_sum;
};

// Labels produced by the operators are node ids, so a dense table indexed by
// label is the common case; anything sparser is canonicalized first.
CommunityTally tally(const Graph& g, const Partition& p) {
  if (g.edge_count() == 0) throw EmptyGraphError();
  if (p.size() != g.node_count())
    throw ContractError("partition size does not match node count");

  const Partition* labels = &p;
  Partition canonical;
  Label max_label = p.size() == 0 ? 0 : *std::max_element(p.labels().begin(), p.labels().end());
  if (static_cast<std::size_t>(max_label) >= 2 * p.size() + 16) {
    canonical = canonicalize(p);
    labels = &canonical;
    max_label = *std::max_element(canonical.labels().begin(), canonical.labels().end());
  }

  CommunityTally t;
  t.intra_edges.assign(static_cast<std::size_t>(max_label) + 1, 0);
  t.degree_sum.assign(static_cast<std::size_t>(max_label) + 1, 0);
  const auto& lab = *labels;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const Label cu = lab[u];
    t.degree_sum[cu] += g.degrees()[u];
    const auto nbrs = g.neighbors(u);
    for (auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u); it != nbrs.end(); ++it)
      if (lab[*it] == cu) ++t.intra_edges[cu];
  }
  return t;
}

}  // namespace

ObjectiveVector evaluate_objectives(const Graph& g, const Partition& p) {
  const auto t = tally(g, p);
  const double m = static_cast<double>(g.edge_count());
  std::size_t intra = 0;
  double inter = 0.0;
  for (std::size_t c = 0; c < t.degree_sum.size(); ++c) {
    intra += t.intra_edges[c];
    const double share = static_cast<double>(t.degree_sum[c]) / (2.0 * m);
    inter += share * share;
  }
  return {1.0 - static_cast<double>(intra) / m, inter};
}

double modularity(const Graph& g, const Partition& p) {
  const auto t = tally(g, p);
  const double m = static_cast<double>(g.edge_count());
  double q = 0.0;
  for (std::size_t c = 0; c < t.degree_sum.size(); ++c) {
    const double share = static_cast<double>(t.degree_sum[c]) / (2.0 * m);
    q += static_cast<double>(t.intra_edges[c]) / m - share * share;
  }
  return q;
}

}  // namespace commevo
