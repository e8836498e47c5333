#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "salg/rootdata.hpp"
#include "salg/superkernel.hpp"

namespace salg {

// coef · u^u_exp v^v_exp, with u written to the left of v.
struct PolyTerm {
  long coef;
  int u_exp;
  int v_exp;
  bool operator==(const PolyTerm&) const = default;
};
using TwoVarPoly = std::vector<PolyTerm>;

// Parities, degrees and the Q/B polynomial tables of the quiver Hecke superalgebra of type A_{2ℓ}^{(2)}.
class QHSPresentation {
 public:
  explicit QHSPresentation(int ell);
  int ell() const { return roots_.ell(); }
  const RootSystem& roots() const { return roots_; }
  static int parity(int i) { return i == 0 ? 1 : 0; }
  TwoVarPoly q_poly(int i, int j) const;
  TwoVarPoly b_poly(int i, int j, int k) const;
  BiDegree y_bidegree(int i) const;
  BiDegree psi_bidegree(int i, int j) const;

 private:
  RootSystem roots_;
};

// ψ_w y_1^{k_1} ⋯ y_n^{k_n} 1_idem, with ψ_w taken along the lex-least reduced word of w.
struct QMonomial {
  Permutation w;
  std::vector<int> k;
  std::vector<int> idem;
  auto operator<=>(const QMonomial&) const = default;
  bool operator==(const QMonomial&) const = default;
};

class QuiverHecke {
 public:
  using Element = std::map<QMonomial, Scalar>;

  QuiverHecke(Ring ring, int ell, RootVec theta, int y_degree_cap = 400);

  const Ring& ring() const { return ring_; }
  const QHSPresentation& presentation() const { return pres_; }
  const RootVec& theta() const { return theta_; }
  int n() const { return n_; }
  const std::vector<std::vector<int>>& words() const { return words_; }

  Element idempotent(const std::vector<int>& i) const;
  Element y(int s, const std::vector<int>& i) const;    // y_s 1_i
  Element psi(int r, const std::vector<int>& i) const;  // ψ_r 1_i
  Element one() const;
  Element monomial(const QMonomial& m, long coef = 1) const;
  // Normal form of y^k ψ_w 1_i.
  Element left_y_monomial(const Permutation& w, const std::vector<int>& k, const std::vector<int>& i) const;

  Element mul(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element scale(const Element& x, const Scalar& s) const;
  // Substitutes y_r, y_{r+offset} into a two-variable polynomial, times 1_i.
  Element poly(const TwoVarPoly& p, int r, int offset, const std::vector<int>& i) const;

  BiDegree bidegree(const QMonomial& m) const;
  int psi_degree(const Permutation& w, const std::vector<int>& i) const;
  std::vector<int> left_idempotent(const QMonomial& m) const;
  const std::vector<QMonomial>& basis_of_degree(int m) const;
  int min_degree() const;
  std::string format(const Element& x) const;

  // Normal form of a word of letters (ψ_r as r > 0, y_s as -s) followed by 1_idem.
  Element normalize(const std::vector<int>& letters, const std::vector<int>& idem) const;

 private:
  struct Move {
    enum Kind { Commute, Braid, Square } kind;
    int pos;
  };
  Move next_move(const std::vector<int>& word, bool reduced, const std::vector<int>& target) const;
  void add_into(Element& out, const Element& x, const Scalar& s) const;
  std::vector<int> poly_letters(int u_index, int u_exp, int v_index, int v_exp) const;

  Ring ring_;
  QHSPresentation pres_;
  RootVec theta_;
  int n_;
  int y_cap_;
  std::vector<std::vector<int>> words_;
  mutable std::map<std::pair<std::vector<int>, std::vector<int>>, Element> memo_;
  mutable std::map<std::vector<int>, Move> moves_;
  mutable std::map<int, std::vector<QMonomial>> by_degree_;
};

struct RelationTally {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;
};
// Checks each defining relation sandwiched between random monomials, plus sampled associativity.
std::vector<RelationTally> relation_suite(const Ring& ring, int ell, const RootVec& theta, std::size_t samples,
                                          std::uint64_t seed);

struct GradedDimCheck {
  int degree;
  std::size_t count;
  std::size_t rank;
};
// Normal-form monomial count against the rank of the rewritten y^k ψ_w 1_i family, degree by degree.
std::vector<GradedDimCheck> graded_dim_check(const Ring& ring, int ell, const RootVec& theta, int min_degree,
                                             int max_degree);

struct CyclotomicResult {
  RootVec theta;
  int max_degree = 0;
  int window = 0;
  std::map<int, std::size_t> ranks;  // nonzero degrees of H_θ
  // rank of 1_j H 1_i keyed by (j, i)
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> block_ranks;
  bool stabilized = false;
  std::size_t total_rank() const;
};
// Degreewise quotient of R_θ by the ideal generated by y_1 1_θ and 1_i (i_1 ≠ 0).
CyclotomicResult cyclotomic_close(const Ring& ring, int ell, const RootVec& theta, int max_degree, int window);
int default_window(int ell);

struct MatrixBlockReport {
  RootVec rho;
  std::vector<int> word;
  std::size_t corner_rank = 0;   // rank 1_i H 1_i
  std::size_t column_rank = 0;   // rank H 1_i
  std::size_t total_rank = 0;
  bool stabilized = false;
  bool ok() const { return stabilized && corner_rank == 1 && total_rank == column_rank * column_rank; }
};
std::optional<MatrixBlockReport> matrix_block_check(const Ring& ring, int ell, const Nucleus& nucleus, int max_degree,
                                                    int window);

}  // namespace salg
