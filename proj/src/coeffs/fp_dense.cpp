#include <algorithm>

#include "salg/kernels.hpp"
#include "salg/linalg.hpp"

namespace salg {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::pair{nt, t - q * nt};
    std::tie(r, nr) = std::pair{nr, r - q * nr};
  }
  if (r != 1) throw ArithmeticError("no inverse mod p");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols) {
  if (narrow())
    narrow_.assign(rows * cols, 0);
  else
    wide_.assign(rows * cols, 0);
}

std::uint32_t FpMatrix::get(std::size_t r, std::size_t c) const {
  return narrow() ? narrow_[r * cols_ + c] : wide_[r * cols_ + c];
}

void FpMatrix::set(std::size_t r, std::size_t c, std::uint32_t v) {
  v %= p_;
  if (narrow())
    narrow_[r * cols_ + c] = static_cast<std::uint16_t>(v);
  else
    wide_[r * cols_ + c] = v;
}

void FpMatrix::row_axpy(std::size_t dst, std::size_t src, std::uint32_t f) {
  if (narrow()) {
    kernels::axpy_u16()(&narrow_[dst * cols_], &narrow_[src * cols_], static_cast<std::uint16_t>(f), cols_,
                        static_cast<std::uint16_t>(p_));
  } else {
    kernels::axpy_mod_u32(&wide_[dst * cols_], &wide_[src * cols_], f, cols_, p_);
  }
}

void FpMatrix::row_scale(std::size_t r, std::uint32_t f) {
  for (std::size_t c = 0; c < cols_; ++c)
    set(r, c, static_cast<std::uint32_t>(static_cast<std::uint64_t>(get(r, c)) * f % p_));
}

void FpMatrix::row_swap(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (narrow())
    std::swap_ranges(narrow_.begin() + a * cols_, narrow_.begin() + (a + 1) * cols_, narrow_.begin() + b * cols_);
  else
    std::swap_ranges(wide_.begin() + a * cols_, wide_.begin() + (a + 1) * cols_, wide_.begin() + b * cols_);
}

std::vector<std::size_t> FpMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && get(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    row_swap(piv, r);
    row_scale(r, inverse_mod(get(r, c), p_));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      std::uint32_t v = get(i, c);
      if (v) row_axpy(i, r, p_ - v);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix copy = *this;
  return copy.rref().size();
}

}  // namespace salg
