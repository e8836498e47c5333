#include "salg/spinblocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace salg {

namespace {

Element power(const BasedAlgebra& a, Element x, std::uint64_t e) {
  Element out = a.unit();
  while (e) {
    if (e & 1) out = a.mul(out, x);
    e >>= 1;
    if (e) x = a.mul(x, x);
  }
  return out;
}

std::size_t left_ideal_rank(const BasedAlgebra& a, const Element& x) {
  RowSpace space(a.ring());
  for (Index b = 0; b < a.rank(); ++b) space.insert(a.mul(x, a.basis(b)));
  return space.rank();
}

}  // namespace

std::vector<Element> jm_elements(const BasedAlgebra& t_alg, int n) {
  std::vector<Element> m{Element{}};
  for (int r = 1; r < n; ++r) {
    Element t = t_alg.basis(t_alg.at("t" + Permutation::simple(n, r).str()));
    Element conj = t_alg.mul(t_alg.mul(t, m.back()), t);
    m.push_back(t_alg.sub(t, conj));
  }
  return m;
}

bool SpinBlockReport::ok() const {
  bool all_central = std::all_of(blocks.begin(), blocks.end(), [](const SpinBlock& b) { return b.central; });
  std::size_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
  return squares_commute && orthogonal && sums_to_one && all_central && total_rank == fact && labels_match;
}

SpinBlockReport block_decomposition(int n, int p) {
  if (n < 1) throw std::invalid_argument("blocks: n must be positive");
  if (n > 6) throw GuardExceeded("blocks: n <= 6");
  if (p != 3 && p != 5) throw GuardExceeded("blocks: p must be 3 or 5");
  Ring field = Ring::prime_field(static_cast<std::uint32_t>(p));
  int ell = (p - 1) / 2;
  std::vector<Scalar> eigen;
  for (int i = 0; i <= ell; ++i) eigen.push_back(field.from_int(i * (i + 1) / 2));
  for (int i = 0; i <= ell; ++i)
    for (int j = i + 1; j <= ell; ++j)
      if (eigen[i] == eigen[j]) throw std::logic_error("blocks: eigenvalues coincide");

  BasedAlgebra t_alg = twisted_symmetric(field, n);
  t_alg.materialize();
  std::size_t dim = t_alg.rank();
  SpinBlockReport report;
  report.n = n;
  report.p = p;

  std::vector<Element> squares;
  for (const auto& m : jm_elements(t_alg, n)) squares.push_back(t_alg.mul(m, m));
  report.squares_commute = true;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      if (!t_alg.sub(t_alg.mul(squares[r], squares[s]), t_alg.mul(squares[s], squares[r])).empty())
        report.squares_commute = false;

  // Frobenius powers strip the nilpotent part; Lagrange interpolation then yields spectral projectors.
  std::uint64_t frob = 1;
  while (frob < dim) frob *= static_cast<std::uint64_t>(p);
  std::vector<std::vector<Element>> projector(n, std::vector<Element>(ell + 1));
  report.eigenspace_dims.assign(n, std::vector<std::size_t>(ell + 1, 0));
  for (int r = 0; r < n; ++r) {
    std::size_t covered = 0;
    for (int i = 0; i <= ell; ++i) {
      Element shifted = t_alg.sub(squares[r], t_alg.scale(t_alg.unit(), eigen[i]));
      report.eigenspace_dims[r][i] = dim - left_ideal_rank(t_alg, power(t_alg, shifted, static_cast<std::uint64_t>(n)));
      covered += report.eigenspace_dims[r][i];
    }
    if (covered != dim) throw std::logic_error("blocks: m_r^2 has an eigenvalue outside the residue set");
    Element semisimple = power(t_alg, squares[r], frob);
    for (int i = 0; i <= ell; ++i) {
      Element e = t_alg.unit();
      for (int j = 0; j <= ell; ++j) {
        if (j == i) continue;
        Element factor = t_alg.sub(semisimple, t_alg.scale(t_alg.unit(), eigen[j]));
        e = t_alg.mul(e, t_alg.scale(factor, (eigen[i] - eigen[j]).inverse()));
      }
      projector[r][i] = std::move(e);
    }
  }

  std::map<RootVec, SpinBlock> by_label;
  std::vector<Element> weight_idempotents;
  std::vector<int> word(n, 0);
  Element total;
  report.orthogonal = true;
  while (true) {
    Element e = t_alg.unit();
    for (int r = 0; r < n && !e.empty(); ++r) e = t_alg.mul(e, projector[r][word[r]]);
    if (!e.empty()) {
      if (t_alg.mul(e, e) != e) report.orthogonal = false;
      for (const auto& other : weight_idempotents)
        if (!t_alg.mul(e, other).empty() || !t_alg.mul(other, e).empty()) report.orthogonal = false;
      weight_idempotents.push_back(e);
      RootVec theta(ell + 1, 0);
      for (int letter : word) ++theta[letter];
      auto& block = by_label[theta];
      block.theta = theta;
      block.residue_words.push_back(word);
      block.idempotent = t_alg.add(block.idempotent, e);
      total = t_alg.add(total, e);
    }
    int k = n - 1;
    while (k >= 0 && word[k] == ell) word[k--] = 0;
    if (k < 0) break;
    ++word[k];
  }
  report.sums_to_one = total == t_alg.unit();

  std::vector<Element> generators;
  for (int r = 1; r < n; ++r) generators.push_back(t_alg.basis(t_alg.at("t" + Permutation::simple(n, r).str())));
  for (auto& [theta, block] : by_label) {
    block.central = std::all_of(generators.begin(), generators.end(), [&](const Element& g) {
      return t_alg.mul(g, block.idempotent) == t_alg.mul(block.idempotent, g);
    });
    block.rank = left_ideal_rank(t_alg, block.idempotent);
    report.total_rank += block.rank;
    report.blocks.push_back(std::move(block));
  }

  RootSystem roots(ell);
  std::set<RootVec> expected;
  for (const auto& lambda : p_strict_partitions(n, p)) expected.insert(roots.content(lambda));
  report.expected_labels.assign(expected.begin(), expected.end());
  std::set<RootVec> found;
  for (const auto& b : report.blocks) found.insert(b.theta);
  report.labels_match = found == expected;
  return report;
}

}  // namespace salg
