#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "salg/coeffs.hpp"
#include "salg/combin.hpp"
#include "salg/linalg.hpp"

namespace salg {

struct BiDegree {
  int degree = 0;
  int parity = 0;
  BiDegree operator+(const BiDegree& o) const { return {degree + o.degree, (parity + o.parity) & 1}; }
  bool operator==(const BiDegree&) const = default;
  auto operator<=>(const BiDegree&) const = default;
};

inline int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

// Koszul sign of the place permutation g on a tensor whose factors have the given parities:
// the factor in slot x moves to slot g(x), and each crossing pair of odd factors contributes -1.
int place_permutation_sign(const Permutation& g, const std::vector<int>& parities);

// (g·v)_q = v_{g^{-1}(q)}
template <class T>
std::vector<T> place_permute(const Permutation& g, const std::vector<T>& v) {
  std::vector<T> out(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) out[g(static_cast<int>(x) + 1) - 1] = v[x];
  return out;
}

using Element = SparseVec;

// Finite free superalgebra with a homogeneous basis and exact structure constants.
// Products come from a rule; small algebras cache the full table.
class BasedAlgebra {
 public:
  using ProductRule = std::function<Element(Index, Index)>;

  BasedAlgebra(Ring ring, std::vector<std::string> labels, std::vector<BiDegree> bidegrees, Element unit,
               ProductRule rule, std::size_t cache_limit = 400);

  static BasedAlgebra from_table(Ring ring, std::vector<std::string> labels, std::vector<BiDegree> bidegrees,
                                 Element unit, std::vector<Element> table);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return labels_.size(); }
  const std::string& label(Index i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> index_of(const std::string& label) const;
  Index at(const std::string& label) const;
  const BiDegree& bidegree(Index i) const { return bidegrees_[i]; }
  const std::vector<BiDegree>& bidegrees() const { return bidegrees_; }
  int parity(Index i) const { return bidegrees_[i].parity; }
  const Element& unit() const { return unit_; }

  Element basis_product(Index a, Index b) const;
  Element mul(const Element& x, const Element& y) const;
  Element basis(Index i) const { return {{i, ring_.one()}}; }
  Element scalar(long v) const;
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element scale(const Element& x, const Scalar& s) const { return sparse_scaled(x, s); }
  // Bidegree of a homogeneous element; nullopt for zero or inhomogeneous input.
  std::optional<BiDegree> bidegree_of(const Element& x) const;
  std::string format(const Element& x) const;

  void materialize() const;

  // Symmetrizing form attached by constructors; values on basis elements.
  const std::optional<std::vector<Scalar>>& form() const { return form_; }
  void set_form(std::vector<Scalar> values) { form_ = std::move(values); }
  Scalar apply_form(const Element& x) const;

 private:
  Ring ring_;
  std::vector<std::string> labels_;
  std::vector<BiDegree> bidegrees_;
  Element unit_;
  ProductRule rule_;
  mutable std::vector<Element> table_;
  mutable bool cached_ = false;
  std::unordered_map<std::string, Index> index_;
  std::optional<std::vector<Scalar>> form_;
};

// Structural checks, each returning a list of human-readable failures (empty on success).
std::vector<std::string> check_unit(const BasedAlgebra& a);
std::vector<std::string> check_bidegrees(const BasedAlgebra& a);
std::vector<std::string> check_associativity(const BasedAlgebra& a, std::size_t max_rank = 200);

struct SymmetrizingReport {
  bool vanishes_on_odd = true;
  bool symmetric = true;
  bool gram_invertible = true;
  std::vector<std::string> failures;
  bool ok() const { return vanishes_on_odd && symmetric && gram_invertible; }
};
SymmetrizingReport validate_symmetrizing(const BasedAlgebra& a, const std::vector<Scalar>& form);
// Basis of the functionals vanishing on the odd part and on all ab - ba.
std::vector<SparseVec> trace_functionals(const BasedAlgebra& a);
// Sum of the reduced trace basis, returned when its Gram matrix is invertible.
std::optional<std::vector<Scalar>> find_symmetrizing_form(const BasedAlgebra& a);

// Constructions
BasedAlgebra ground_algebra(const Ring& ring);
BasedAlgebra tensor(const BasedAlgebra& a, const BasedAlgebra& b);
BasedAlgebra opposite(const BasedAlgebra& a);
BasedAlgebra wreath(const BasedAlgebra& a, int d);
// Basis of the wreath product: index = tensor_index * d! + permutation_index.
struct WreathIndexer {
  std::size_t base_rank;
  int d;
  std::vector<Permutation> perms;
  std::map<Permutation, std::size_t> perm_index;
  explicit WreathIndexer(std::size_t base_rank, int d);
  Index encode(const std::vector<Index>& word, const Permutation& w) const;
  std::pair<std::vector<Index>, Permutation> decode(Index i) const;
};

struct Shift {
  int degree = 0;
  int parity = 0;
};
// Elements of e_s A e_r move by (t_r - t_s, ε_r - ε_s). The basis must be adapted to the idempotents.
BasedAlgebra regrade(const BasedAlgebra& a, const std::vector<Element>& idempotents, const std::vector<Shift>& shifts);

BasedAlgebra truncate(const BasedAlgebra& a, const Element& e);
// ⊕_{i,j} e_i A e_j with (x_ij)(y_kl) = δ_jk (xy)_il.
BasedAlgebra end_algebra(const BasedAlgebra& a, const std::vector<Element>& idempotents);

struct CentralizerResult {
  std::optional<BasedAlgebra> centralizer;
  std::vector<Element> basis_in_ambient;
  bool matrix_units_ok = false;
  bool factorization_ok = false;
  std::size_t image_rank = 0;
};
// units[i][j] = E_{i,j} inside A.
CentralizerResult supercentralizer(const BasedAlgebra& a, const std::vector<std::vector<Element>>& units);

// Catalog
BasedAlgebra clifford(const Ring& ring, int n);
BasedAlgebra twisted_symmetric(const Ring& ring, int n);
BasedAlgebra hecke(const Ring& ring, int n, const Scalar& q);
BasedAlgebra olshanski(const Ring& ring, int n, const Scalar& q);
BasedAlgebra group_algebra(const Ring& ring, int d);
// 𝒴_n as the wreath product of 𝒞_1, with its form attached.
BasedAlgebra sergeev(const Ring& ring, int n);

// Sign table of 𝒯_n: t_w t_r = sign * t_{w s_r} on lex-least reduced words.
struct TwistedTable {
  int n;
  std::vector<Permutation> perms;
  std::map<Permutation, Index> index;
  std::vector<std::vector<std::pair<int, Index>>> right;  // [w][r-1]
};
TwistedTable twisted_table(int n);

// Left supermodule with explicit action matrices.
class BasedModule {
 public:
  BasedModule(std::shared_ptr<const BasedAlgebra> owner, std::vector<BiDegree> bidegrees,
              std::vector<std::vector<SparseVec>> action);
  static BasedModule regular(std::shared_ptr<const BasedAlgebra> owner);
  // Left ideal A·e with the restricted action.
  static BasedModule left_ideal(std::shared_ptr<const BasedAlgebra> owner, const Element& e);

  const BasedAlgebra& owner() const { return *owner_; }
  std::shared_ptr<const BasedAlgebra> owner_ptr() const { return owner_; }
  std::size_t rank() const { return bidegrees_.size(); }
  const BiDegree& bidegree(Index i) const { return bidegrees_[i]; }
  const SparseVec& act(Index a, Index v) const { return action_[a][v]; }
  SparseVec act(const Element& x, const SparseVec& v) const;

  std::vector<std::string> check_action() const;

 private:
  std::shared_ptr<const BasedAlgebra> owner_;
  std::vector<BiDegree> bidegrees_;
  std::vector<std::vector<SparseVec>> action_;
};

// Hom maps stored column-wise: image of each basis vector of the source.
struct HomBlock {
  BiDegree bidegree;
  std::vector<std::vector<SparseVec>> maps;
};
std::vector<HomBlock> hom_space(const BasedModule& m, const BasedModule& n);
std::size_t hom_rank(const std::vector<HomBlock>& blocks);

// Kernel of the linear map given by sparse rows over `ncols` unknowns, via RREF.
std::vector<SparseVec> sparse_kernel(const Ring& field, const std::vector<SparseVec>& rows, Index ncols);

// JSON form of an algebra: labels, bidegrees, sparse structure constants.
std::string algebra_to_json(const BasedAlgebra& a, int indent = 1);

}  // namespace salg
