#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "salg/coeffs.hpp"

namespace salg {

using Index = std::uint32_t;

// Sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<Index, Scalar>>;

// Collects scattered contributions and emits them sorted with zeros dropped.
template <class Key>
class Accumulator {
 public:
  void add(Key k, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, s);
    if (!fresh) it->second += s;
  }
  std::vector<std::pair<Key, Scalar>> take() {
    std::vector<std::pair<Key, Scalar>> out;
    out.reserve(terms_.size());
    for (auto& [k, s] : terms_)
      if (!s.is_zero()) out.emplace_back(k, std::move(s));
    terms_.clear();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }
  bool empty() const { return terms_.empty(); }

 private:
  std::unordered_map<Key, Scalar> terms_;
};

void sparse_axpy(SparseVec& dst, const Scalar& f, const SparseVec& src);
SparseVec sparse_scaled(const SparseVec& v, const Scalar& f);
SparseVec sparse_from_unsorted(std::vector<std::pair<Index, Scalar>> entries);

// Fraction field used for ranks: Z_(p) is handled over Q.
Ring rank_field(const Ring& ring);
Scalar to_field(const Scalar& s);

// Incremental row space over a field. Each stored row has a leading 1 at its pivot and
// only larger columns after it.
class RowSpace {
 public:
  explicit RowSpace(Ring field);

  // Returns true if v was independent of the rows already present.
  bool insert(SparseVec v);
  // Remainder after clearing every pivot column.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const Ring& field() const { return field_; }
  // Fully reduced rows sorted by pivot; a vector x in the span equals Σ x[pivot_i] row_i.
  std::vector<SparseVec> reduced_basis() const;
  // Coordinates of x against reduced_basis(); x must lie in the span.
  static SparseVec coordinates(const std::vector<SparseVec>& reduced, const SparseVec& x);

 private:
  Ring field_;
  std::vector<SparseVec> rows_;
  std::unordered_map<Index, std::size_t> pivot_row_;
};

class ExactMatrix {
 public:
  ExactMatrix(Ring ring, std::size_t rows, std::size_t cols);
  static ExactMatrix identity(Ring ring, std::size_t n);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  bool operator==(const ExactMatrix& o) const;

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

std::size_t rank(const ExactMatrix& m);
Scalar determinant(const ExactMatrix& m);
// Basis of {x : M x = 0}, each vector of length cols.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

struct SolveResult {
  bool consistent = false;
  // cols(M) x cols(rhs); valid when consistent.
  std::optional<ExactMatrix> particular;
  std::vector<std::vector<Scalar>> kernel;
  // For Z_(p) input: false when the particular solution needed a non-local denominator.
  bool p_local = true;
};

SolveResult solve_linear(const ExactMatrix& m, const ExactMatrix& rhs);

// Dense matrix over F_p, reduced through the dispatched axpy kernel.
class FpMatrix {
 public:
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::uint32_t v);

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

 private:
  bool narrow() const { return p_ < 256; }
  void row_axpy(std::size_t dst, std::size_t src, std::uint32_t f);
  void row_scale(std::size_t r, std::uint32_t f);
  void row_swap(std::size_t a, std::size_t b);

  std::uint32_t p_;
  std::size_t rows_, cols_;
  std::vector<std::uint16_t> narrow_;
  std::vector<std::uint32_t> wide_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace salg
