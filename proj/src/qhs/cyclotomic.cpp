#include "salg/qhs.hpp"

namespace salg {

std::size_t CyclotomicResult::total_rank() const {
  std::size_t total = 0;
  for (const auto& [m, r] : ranks) total += r;
  return total;
}

int default_window(int ell) {
  QHSPresentation pres(ell);
  int top = 0;
  for (int i = 0; i <= ell; ++i) {
    top = std::max(top, pres.y_bidegree(i).degree);
    for (int j = 0; j <= ell; ++j)
      if (i != j) top = std::max(top, pres.psi_bidegree(i, j).degree);
  }
  return top + 4;
}

CyclotomicResult cyclotomic_close(const Ring& ring, int ell, const RootVec& theta, int max_degree, int window) {
  if (!ring.is_field()) throw std::invalid_argument("cyclotomic quotient is computed over a field");
  if (ell > 2) throw GuardExceeded("cyclotomic quotient supports ell <= 2");
  CyclotomicResult result;
  result.theta = theta;
  result.max_degree = max_degree;
  result.window = window;
  QHSPresentation pres(ell);
  int height = pres.roots().height(theta);
  if (height > 5) throw GuardExceeded("cyclotomic quotient supports height <= 5");
  if (height == 0) {
    result.ranks[0] = 1;
    result.block_ranks[{{}, {}}] = 1;
    result.stabilized = true;
    return result;
  }
  QuiverHecke h(ring, ell, theta);
  int n = h.n();
  using Block = std::pair<std::vector<int>, std::vector<int>>;

  // Generators of the ideal with their left factors ψ_{w'}: the ideal is spanned by ψ_{w'}·g·b.
  struct Seed {
    QuiverHecke::Element left_times_gen;
    std::vector<int> gen_idem;
    std::vector<int> left_idem;
    int degree;
  };
  std::vector<Seed> seeds;
  auto perms = all_permutations(n);
  for (const auto& j : h.words()) {
    QMonomial g{Permutation::identity(n), std::vector<int>(n, 0), j};
    if (j[0] == 0) g.k[0] = 1;
    int gdeg = h.bidegree(g).degree;
    for (const auto& w : perms) {
      QMonomial left{w, std::vector<int>(n, 0), j};
      seeds.push_back({h.mul(h.monomial(left), h.monomial(g)), j, h.left_idempotent(left), gdeg + h.psi_degree(w, j)});
    }
  }
  // idempotent generators first
  std::stable_sort(seeds.begin(), seeds.end(),
                   [](const Seed& a, const Seed& b) { return (a.gen_idem[0] == 0) < (b.gen_idem[0] == 0); });

  int low = h.min_degree();
  for (int m = low; m <= max_degree; ++m) {
    const auto& basis = h.basis_of_degree(m);
    if (basis.empty()) continue;
    std::map<QMonomial, Index> column;
    std::map<Block, std::size_t> block_size;
    for (const auto& b : basis) {
      column.emplace(b, static_cast<Index>(column.size()));
      ++block_size[{h.left_idempotent(b), b.idem}];
    }
    std::map<Block, RowSpace> ideal;
    std::size_t filled = 0;
    for (const auto& seed : seeds) {
      if (filled == block_size.size()) break;
      for (const auto& b : h.basis_of_degree(m - seed.degree)) {
        if (h.left_idempotent(b) != seed.gen_idem) continue;
        Block blk{seed.left_idem, b.idem};
        auto size_it = block_size.find(blk);
        if (size_it == block_size.end()) continue;
        auto [it, fresh] = ideal.try_emplace(blk, RowSpace(ring));
        if (it->second.rank() == size_it->second) continue;
        auto prod = h.mul(seed.left_times_gen, h.monomial(b));
        std::vector<std::pair<Index, Scalar>> row;
        for (const auto& [mono, c] : prod) row.emplace_back(column.at(mono), c);
        if (it->second.insert(sparse_from_unsorted(std::move(row))) && it->second.rank() == size_it->second) ++filled;
      }
    }
    for (const auto& [blk, size] : block_size) {
      auto it = ideal.find(blk);
      std::size_t rank = size - (it == ideal.end() ? 0 : it->second.rank());
      if (rank) {
        result.ranks[m] += rank;
        result.block_ranks[blk] += rank;
      }
    }
  }
  result.stabilized = true;
  for (int m = max_degree - window + 1; m <= max_degree; ++m)
    if (result.ranks.count(m)) result.stabilized = false;
  return result;
}

std::optional<MatrixBlockReport> matrix_block_check(const Ring& ring, int ell, const Nucleus& nucleus, int max_degree,
                                                    int window) {
  RootSystem roots(ell);
  DivWord div = roots.i_rho(nucleus.rho, nucleus.applied_word);
  for (const auto& letter : div)
    if (letter.mult != 1) return std::nullopt;
  MatrixBlockReport report;
  report.rho = nucleus.rho;
  report.word = flatten(div);
  CyclotomicResult h = cyclotomic_close(ring, ell, nucleus.rho, max_degree, window);
  report.stabilized = h.stabilized;
  report.total_rank = h.total_rank();
  for (const auto& [blk, rank] : h.block_ranks) {
    if (blk.second != report.word) continue;
    report.column_rank += rank;
    if (blk.first == report.word) report.corner_rank += rank;
  }
  return report;
}

}  // namespace salg
