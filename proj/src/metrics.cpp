#include "commevo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "commevo/errors.hpp"

namespace commevo {

ContingencyTable::ContingencyTable(const Partition& first, const Partition& second) {
  if (first.size() != second.size())
    throw ContractError("partitions cover different node counts");
  if (first.size() == 0) throw ContractError("partitions are empty");
  const auto a = canonicalize(first);
  const auto b = canonicalize(second);
  total_ = a.size();
  row_sums_.assign(*std::max_element(a.labels().begin(), a.labels().end()) + 1, 0);
  col_sums_.assign(*std::max_element(b.labels().begin(), b.labels().end()) + 1, 0);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
  for (std::size_t v = 0; v < total_; ++v) {
    ++row_sums_[a[v]];
    ++col_sums_[b[v]];
    ++counts[{a[v], b[v]}];
  }
  cells_.reserve(counts.size());
  for (const auto& [key, count] : counts) cells_.push_back({key.first, key.second, count});
}

std::size_t ContingencyTable::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), std::pair{row, col},
                             [](const Cell& c, const std::pair<std::size_t, std::size_t>& k) {
                               return std::pair{c.row, c.col} < k;
                             });
  if (it == cells_.end() || it->row != row || it->col != col) return 0;
  return it->count;
}

ContingencyTable contingency(const Partition& first, const Partition& second) {
  return ContingencyTable(first, second);
}

namespace {

double entropy(const std::vector<std::size_t>& sums, double n) {
  double h = 0.0;
  for (std::size_t s : sums)
    if (s > 0) {
      const double p = static_cast<double>(s) / n;
      h -= p * std::log(p);
    }
  return h;
}

double mutual_information(const ContingencyTable& t) {
  const double n = static_cast<double>(t.total());
  double mi = 0.0;
  for (const auto& c : t.cells()) {
    const double nij = static_cast<double>(c.count);
    const double ai = static_cast<double>(t.row_sums()[c.row]);
    const double bj = static_cast<double>(t.col_sums()[c.col]);
    mi += nij / n * std::log(n * nij / (ai * bj));
  }
  return std::max(mi, 0.0);
}

bool single_cluster(const ContingencyTable& t) { return t.rows() == 1 && t.cols() == 1; }

// Each row meets exactly one column: the partitions agree up to relabeling.
bool one_to_one(const ContingencyTable& t) {
  return t.rows() == t.cols() && t.cells().size() == t.rows();
}

}  // namespace

double expected_mutual_information(const ContingencyTable& t) {
  const std::size_t n = t.total();
  const double nd = static_cast<double>(n);
  // log k! for k in [0, n]
  std::vector<double> log_fact(n + 1);
  for (std::size_t k = 0; k <= n; ++k) log_fact[k] = std::lgamma(static_cast<double>(k) + 1.0);

  double emi = 0.0;
  for (std::size_t a : t.row_sums()) {
    for (std::size_t b : t.col_sums()) {
      const std::size_t lo = std::max<std::size_t>(1, a + b > n ? a + b - n : 0);
      const std::size_t hi = std::min(a, b);
      const double fixed = log_fact[a] + log_fact[b] + log_fact[n - a] + log_fact[n - b] -
                           log_fact[n];
      for (std::size_t nij = lo; nij <= hi; ++nij) {
        const double log_p = fixed - log_fact[nij] - log_fact[a - nij] - log_fact[b - nij] -
                             log_fact[n - a - b + nij];
        const double x = static_cast<double>(nij);
        emi += x / nd * std::log(nd * x / (static_cast<double>(a) * static_cast<double>(b))) *
               std::exp(log_p);
      }
    }
  }
  return emi;
}

EntropyReport entropy_report(const ContingencyTable& t) {
  const double n = static_cast<double>(t.total());
  EntropyReport r;
  r.entropy_first = entropy(t.row_sums(), n);
  r.entropy_second = entropy(t.col_sums(), n);
  r.mutual_information = mutual_information(t);
  r.expected_mutual_information = expected_mutual_information(t);
  return r;
}

double nmi(const ContingencyTable& t) {
  if (single_cluster(t) || one_to_one(t)) return 1.0;
  const double n = static_cast<double>(t.total());
  double numerator = 0.0;
  for (const auto& c : t.cells()) {
    const double nij = static_cast<double>(c.count);
    numerator += nij * std::log(nij * n / (static_cast<double>(t.row_sums()[c.row]) *
                                           static_cast<double>(t.col_sums()[c.col])));
  }
  numerator *= -2.0;
  double denominator = 0.0;
  for (std::size_t a : t.row_sums()) {
    const double ad = static_cast<double>(a);
    denominator += ad * std::log(ad / n);
  }
  for (std::size_t b : t.col_sums()) {
    const double bd = static_cast<double>(b);
    denominator += bd * std::log(bd / n);
  }
  if (denominator == 0.0) return 0.0;
  return std::clamp(numerator / denominator, 0.0, 1.0);
}

double nmi(const Partition& first, const Partition& second) {
  return nmi(contingency(first, second));
}

double ami(const Partition& first, const Partition& second) {
  const auto t = contingency(first, second);
  if (single_cluster(t) || one_to_one(t)) return 1.0;
  const auto r = entropy_report(t);
  const double denominator =
      std::max(r.entropy_first, r.entropy_second) - r.expected_mutual_information;
  const double numerator = r.mutual_information - r.expected_mutual_information;
  if (std::abs(denominator) < 1e-15) return 0.0;
  return numerator / denominator;
}

double harmonic_quality(double ami_score, double nmi_score) noexcept {
  const double a = std::max(ami_score, 0.0);
  const double b = std::max(nmi_score, 0.0);
  if (a + b == 0.0) return 0.0;
  return 2.0 * a * b / (a + b);
}

}  // namespace commevo
