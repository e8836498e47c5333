#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "salg/brauer.hpp"
#include "salg/superkernel.hpp"

namespace salg {

// A d-tuple of matrix-unit codes; each code packs (b, r, s) of ξ^b_{r,s} in M_n(A_ℓ).
using CodeTuple = std::vector<std::uint16_t>;
// Sparse integer element of M_n(A_ℓ)^{⊗d}.
using AmbientElement = std::map<CodeTuple, long>;

struct SchurTriple {
  std::vector<Index> b;
  std::vector<int> r, s;  // 1-based rows and columns
};

// Orbit bookkeeping for S^{A_ℓ}(n,d) inside M_n(A_ℓ)^{⊗d}. Orbit representatives are the
// sorted code tuples, i.e. the lexicographically least (b, r, s) triples.
class SchurData {
 public:
  SchurData(int n, int d, int ell);

  int n() const { return n_; }
  int d() const { return d_; }
  int ell() const { return ell_; }
  const BrauerIndex& brauer() const { return index_; }
  const BasedAlgebra& base() const { return base_; }

  std::uint16_t code(Index b, int r, int s) const;  // r, s 1-based
  Index code_b(std::uint16_t c) const { return c / (n_ * n_); }
  int code_r(std::uint16_t c) const { return c / n_ % n_ + 1; }
  int code_s(std::uint16_t c) const { return c % n_ + 1; }
  int code_parity(std::uint16_t c) const { return base_.parity(code_b(c)); }
  std::size_t code_count() const { return index_.rank() * n_ * n_; }
  std::size_t ambient_rank() const;

  std::size_t rank() const { return reps_.size(); }
  const CodeTuple& representative(Index i) const { return reps_[i]; }
  std::optional<Index> orbit_of_sorted(const CodeTuple& t) const;
  // Orbit index and the sign of t inside that orbit sum.
  std::optional<std::pair<Index, int>> locate(const CodeTuple& t) const;
  BiDegree bidegree(Index i) const;
  std::uint64_t c_factorial(Index i) const;
  std::string label(Index i) const;
  SchurTriple triple(Index i) const;

  // Signed orbit sum; the representative has coefficient +1.
  AmbientElement orbit_sum(Index i) const;
  // Product of two ambient basis tuples: sign and tuple, or nothing.
  std::optional<std::pair<int, CodeTuple>> multiply(const CodeTuple& x, const CodeTuple& y) const;
  AmbientElement multiply(const AmbientElement& x, const AmbientElement& y) const;
  // Signed place action of s_r.
  std::pair<int, CodeTuple> act_simple(int r, const CodeTuple& t) const;
  bool is_invariant(const AmbientElement& x) const;
  // Coordinates of an invariant element in the ξ basis, read off at representatives.
  std::vector<std::pair<Index, long>> to_xi(const AmbientElement& x) const;

  // ξ·ξ structure constants, integers.
  const std::vector<std::pair<Index, long>>& xi_product(Index i, Index j) const;

 private:
  void enumerate();
  int n_, d_, ell_;
  BrauerIndex index_;
  BasedAlgebra base_;
  std::vector<CodeTuple> reps_;
  std::map<CodeTuple, Index> rep_index_;
  mutable std::unordered_map<std::uint64_t, std::vector<std::pair<Index, long>>> table_;
};

BasedAlgebra schur_S(const SchurData& data, const Ring& ring);
// η basis; structure constants come from S over ℚ and must be local at the ring's prime.
BasedAlgebra schur_T(const SchurData& data, const Ring& ring);

struct IntegralityReport {
  bool integral = true;
  std::size_t checked = 0;
  std::string first_failure;
};
// Checks every η·η structure constant lies in ℤ_(p).
IntegralityReport t_integrality(const SchurData& data, std::uint32_t p);
// True when η = ξ for every basis element of degree <= max_degree.
bool t_equals_s_up_to(const SchurData& data, int max_degree);

std::map<int, std::size_t> graded_ranks(const SchurData& data);
std::size_t degree_zero_formula(int n, int d, int ell);

Element xi_lambda(const SchurData& data, const MultiComposition& lambda, const Ring& ring);

// Independent rank computations for S.
std::size_t invariant_rank(const SchurData& data);
std::size_t endomorphism_rank(const SchurData& data);
// Hom space of V^{⊗d} over the wreath product, when (dim V^{⊗d})² stays under the limit.
std::optional<std::size_t> hom_space_rank(const SchurData& data, std::size_t limit = 5000);

// Tensor space V_n^{⊗d} with basis tuples of (row, b) codes.
std::size_t tensor_space_rank(int n, int d, int ell);
// rank of ξ_λ V^{⊗d}
std::size_t xi_lambda_tensor_rank(const SchurData& data, const MultiComposition& lambda);

// Permutation module M_{λ,i}, computed as e^{λ,i}W_d(A) modulo (g - 1) for g in 𝔖_λ.
std::size_t perm_module_rank(const ColoredComposition& lambda, int ell);
std::uint64_t perm_module_formula(const ColoredComposition& lambda, int ell);

// Special elements.
AmbientElement i_rs(const SchurData& data, int r, int s, Index x);
AmbientElement i_la(const SchurData& data, const MultiComposition& lambda, Index x);
// Right side of the sum identity: ξ^{x 1^{d-1}} over rows 1 2^{h_1} ⋯ n^{h_{n-1}}.
AmbientElement xi_x_one(const SchurData& data, const Composition& h, Index x);

enum class SeedKind { DegreeZero, DegreeZeroAndI11, DegreeZeroAndILa };

struct GenerationReport {
  std::map<int, std::size_t> closure_ranks;
  std::map<int, std::size_t> t_ranks;
  bool equal = false;
};
GenerationReport generated_subalgebra(const SchurData& data, const Ring& ring, SeedKind seeds);

}  // namespace salg
