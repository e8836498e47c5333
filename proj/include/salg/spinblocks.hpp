#pragma once

#include <vector>

#include "salg/rootdata.hpp"
#include "salg/superkernel.hpp"

namespace salg {

// m_1 = 0 and m_{r+1} = -t_r m_r t_r + t_r inside the twisted group algebra t_alg of S_n.
std::vector<Element> jm_elements(const BasedAlgebra& t_alg, int n);

struct SpinBlock {
  RootVec theta;
  std::size_t rank = 0;
  std::vector<std::vector<int>> residue_words;  // words i with e(i) != 0
  Element idempotent;
  bool central = false;
};

struct SpinBlockReport {
  int n = 0;
  int p = 0;
  std::vector<SpinBlock> blocks;
  // generalized eigenspace dimensions of m_r^2 on the regular module, [r-1][i]
  std::vector<std::vector<std::size_t>> eigenspace_dims;
  bool squares_commute = false;
  bool orthogonal = false;
  bool sums_to_one = false;
  std::size_t total_rank = 0;
  std::vector<RootVec> expected_labels;  // contents of p-strict partitions of n
  bool labels_match = false;
  bool ok() const;
};

SpinBlockReport block_decomposition(int n, int p);

}  // namespace salg
