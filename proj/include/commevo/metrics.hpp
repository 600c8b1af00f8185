#pragma once

#include <cstddef>
#include <vector>

#include "commevo/partition.hpp"

namespace commevo {

// Sparse co-membership counts between two partitions over canonical labels.
class ContingencyTable {
 public:
  struct Cell {
    std::size_t row;
    std::size_t col;
    std::size_t count;
  };

  ContingencyTable(const Partition& first, const Partition& second);

  std::size_t rows() const noexcept { return row_sums_.size(); }
  std::size_t cols() const noexcept { return col_sums_.size(); }
  std::size_t total() const noexcept { return total_; }

  std::size_t at(std::size_t row, std::size_t col) const;
  const std::vector<Cell>& cells() const noexcept { return cells_; }  // nonzero only
  const std::vector<std::size_t>& row_sums() const noexcept { return row_sums_; }
  const std::vector<std::size_t>& col_sums() const noexcept { return col_sums_; }

 private:
  std::vector<Cell> cells_;  // sorted by (row, col)
  std::vector<std::size_t> row_sums_;
  std::vector<std::size_t> col_sums_;
  std::size_t total_ = 0;
};

// Throws ContractError when the partitions differ in length or are empty.
ContingencyTable contingency(const Partition& first, const Partition& second);

// All quantities in nats.
struct EntropyReport {
  double entropy_first = 0.0;
  double entropy_second = 0.0;
  double mutual_information = 0.0;
  double expected_mutual_information = 0.0;  // permutation (hypergeometric) model
};

EntropyReport entropy_report(const ContingencyTable& table);

// Exact E[MI] under the permutation model, given the table's marginals.
double expected_mutual_information(const ContingencyTable& table);

// -2 * sum M_ij log(M_ij N / M_i. M_.j) over the sum of marginal terms.
// 1 when both partitions are the single all-in-one cluster.
double nmi(const Partition& first, const Partition& second);
double nmi(const ContingencyTable& table);

// (MI - E[MI]) / (max(H1, H2) - E[MI]). Identical partitions give 1; a zero
// denominator gives 0. May be negative.
double ami(const Partition& first, const Partition& second);

// Harmonic mean of AMI and NMI with a negative AMI clamped to 0.
double harmonic_quality(double ami_score, double nmi_score) noexcept;

}  // namespace commevo
