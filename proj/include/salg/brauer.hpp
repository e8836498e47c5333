#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "salg/superkernel.hpp"

namespace salg {

enum class BrauerVariant { Standard, Regraded };

// Basis layout of the Brauer tree algebra: e[0..ℓ-1], c[0..ℓ-1], the arrow pairs
// a[k,k+1], a[k+1,k] for k = 0..ℓ-2, then the loop u.
class BrauerIndex {
 public:
  explicit BrauerIndex(int ell);
  int ell() const { return ell_; }
  std::size_t rank() const { return 4 * static_cast<std::size_t>(ell_) - 1; }

  Index e(int j) const { return static_cast<Index>(j); }
  Index c(int j) const { return static_cast<Index>(ell_ + j); }
  Index a(int from, int to) const;
  Index u() const { return static_cast<Index>(rank() - 1); }

  int source(Index b) const { return ends_[b].first; }
  int target(Index b) const { return ends_[b].second; }
  bool is_idempotent(Index b) const { return b < static_cast<Index>(ell_); }
  std::string label(Index b) const;

 private:
  int ell_;
  std::vector<std::pair<int, int>> ends_;
};

BasedAlgebra brauer_algebra(const Ring& ring, int ell, BrauerVariant variant = BrauerVariant::Standard);
std::vector<Element> brauer_idempotents(const BasedAlgebra& a, int ell);
// Degree and parity shifts turning the standard grading into the regraded one: t_j = -2j, ε_j = j mod 2.
std::vector<Shift> brauer_regrading_shifts(int ell);
// rank of e^{[j]} A
std::size_t brauer_right_ideal_rank(const BasedAlgebra& a, int ell, int j);

// Affine Brauer tree algebra H_d(A_ℓ) in the normal form z^n · b_1⋯b_d · w.
struct AffineMonomial {
  std::vector<int> z;
  std::vector<Index> b;
  Permutation w;
  auto operator<=>(const AffineMonomial&) const = default;
  bool operator==(const AffineMonomial&) const = default;
};

// How the u_r u_{r+1} correction of s_r z_t scales with t.
enum class LoopCorrection {
  Symmetric,  // δ_{r,t} + δ_{r+1,t}
  Constant,   // 1 for every t
};

class AffineBrauer {
 public:
  using Element = std::map<AffineMonomial, Scalar>;

  AffineBrauer(Ring ring, int ell, int d, int z_cap, LoopCorrection loop = LoopCorrection::Symmetric,
               bool allow_truncation = false);

  const Ring& ring() const { return ring_; }
  int ell() const { return index_.ell(); }
  int d() const { return d_; }
  const BasedAlgebra& base() const { return base_; }
  const BrauerIndex& index() const { return index_; }
  bool truncated() const { return truncated_; }

  Element monomial(const AffineMonomial& m) const;
  Element z(int t) const;
  Element s(int r) const;
  Element word(const std::vector<Index>& b) const;
  // 1 with the given tensor slot replaced by b (1 = sum of the e^{[j]}).
  Element slot(int k, Index b) const;
  Element one() const;

  Element mul(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(const Element& x, const Scalar& s) const;

  BiDegree bidegree(const AffineMonomial& m) const;
  std::string format(const Element& x) const;

  // All basis monomials of total degree m.
  std::vector<AffineMonomial> basis_of_degree(int m) const;

 private:
  void add_term(Element& out, AffineMonomial m, const Scalar& s) const;
  void left_z(Element& out, int t, const Element& x) const;
  void left_word(Element& out, const std::vector<Index>& x, const Scalar& coeff, const AffineMonomial& m) const;
  void left_s(Element& out, int r, const Scalar& coeff, const AffineMonomial& m) const;
  void push_s(Element& out, int r, const Scalar& coeff, const std::vector<int>& zletters, std::size_t pos,
              const AffineMonomial& tail) const;
  // Correction terms of s_r z_t against the idempotent word idem.
  std::vector<std::pair<std::vector<Index>, Scalar>> correction(int r, int t, const std::vector<int>& idem) const;

  Ring ring_;
  BrauerIndex index_;
  BasedAlgebra base_;
  int d_;
  int z_cap_;
  LoopCorrection loop_;
  bool allow_truncation_;
  mutable bool truncated_ = false;
};

// Count of normal-form monomials of degree m.
std::size_t affine_monomial_count(int ell, int d, int m);
// Rank of the span of {w · z^n b} rewritten into normal form, for all monomials of degree m.
std::size_t affine_graded_rank(const Ring& ring, int ell, int d, int m, int z_cap,
                               LoopCorrection loop = LoopCorrection::Symmetric);

}  // namespace salg
