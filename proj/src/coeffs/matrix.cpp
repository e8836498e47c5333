#include <algorithm>

#include "salg/linalg.hpp"

namespace salg {

ExactMatrix::ExactMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, ring.zero()) {}

ExactMatrix ExactMatrix::identity(Ring ring, std::size_t n) {
  ExactMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
  if (!(ring_ == o.ring_)) throw ArithmeticError("matrix product across rings");
  ExactMatrix out(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;
using RatRows = std::vector<std::vector<mpq_class>>;

IntRows integer_rows(const RatRows& m) {
  IntRows out;
  out.reserve(m.size());
  for (const auto& row : m) {
    mpz_class l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> r;
    r.reserve(row.size());
    for (const auto& q : row) r.push_back(q.get_num() * (l / q.get_den()));
    out.push_back(std::move(r));
  }
  return out;
}

// Fraction-free forward elimination. Returns pivot columns; `swaps` counts row exchanges.
std::vector<std::size_t> bareiss(IntRows& a, std::size_t ncols, int& swaps) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  swaps = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && sgn(a[piv][c]) == 0) ++piv;
    if (piv == a.size()) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      ++swaps;
    }
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Reduced row echelon form over Q: Bareiss first, then rational back-substitution.
std::vector<std::size_t> rational_rref(RatRows& m, std::size_t ncols) {
  IntRows a = integer_rows(m);
  int swaps = 0;
  auto pivots = bareiss(a, ncols, swaps);
  m.assign(pivots.size(), std::vector<mpq_class>(ncols));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class& lead = a[i][pivots[i]];
    for (std::size_t j = 0; j < ncols; ++j) {
      m[i][j] = mpq_class(a[i][j], lead);
      m[i][j].canonicalize();
    }
  }
  for (std::size_t i = pivots.size(); i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      mpq_class f = m[k][pivots[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = pivots[i]; j < ncols; ++j) m[k][j] -= f * m[i][j];
    }
  }
  return pivots;
}

RatRows to_rational_rows(const ExactMatrix& m, const ExactMatrix* rhs) {
  std::size_t extra = rhs ? rhs->cols() : 0;
  RatRows out(m.rows(), std::vector<mpq_class>(m.cols() + extra));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).to_rational();
    for (std::size_t j = 0; j < extra; ++j) out[i][m.cols() + j] = rhs->at(i, j).to_rational();
  }
  return out;
}

FpMatrix to_fp(const ExactMatrix& m, const ExactMatrix* rhs) {
  std::size_t extra = rhs ? rhs->cols() : 0;
  FpMatrix f(m.ring().p(), m.rows(), m.cols() + extra);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) f.set(i, j, m.at(i, j).residue());
    for (std::size_t j = 0; j < extra; ++j) f.set(i, m.cols() + j, rhs->at(i, j).residue());
  }
  return f;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.ring().kind() == RingKind::PrimeField) return to_fp(m, nullptr).rank();
  IntRows a = integer_rows(to_rational_rows(m, nullptr));
  int swaps = 0;
  return bareiss(a, m.cols(), swaps).size();
}

Scalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const Ring& ring = m.ring();
  std::size_t n = m.rows();
  if (n == 0) return ring.one();
  if (ring.kind() == RingKind::PrimeField) {
    std::vector<Scalar> a;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));
    Scalar det = ring.one();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a[piv * n + c].is_zero()) ++piv;
      if (piv == n) return ring.zero();
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
        det = -det;
      }
      det *= a[c * n + c];
      Scalar inv = a[c * n + c].inverse();
      for (std::size_t i = c + 1; i < n; ++i) {
        Scalar f = a[i * n + c] * inv;
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < n; ++j) a[i * n + j] -= f * a[c * n + j];
      }
    }
    return det;
  }
  RatRows rows = to_rational_rows(m, nullptr);
  mpz_class scale = 1;
  IntRows a = integer_rows(rows);
  for (std::size_t i = 0; i < n; ++i) {
    // integer_rows multiplied row i by lcm of its denominators
    mpz_class l = 1;
    for (const auto& q : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    scale *= l;
  }
  int swaps = 0;
  auto pivots = bareiss(a, n, swaps);
  if (pivots.size() < n) return ring.zero();
  mpq_class det(a[n - 1][n - 1], scale);
  det.canonicalize();
  if (swaps % 2) det = -det;
  return ring.from_rational(det);
}

namespace {

struct Reduced {
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Scalar>> rows;  // pivot rows only, in the working field
  Ring field;
};

Reduced reduce_augmented(const ExactMatrix& m, const ExactMatrix* rhs) {
  std::size_t ncols = m.cols() + (rhs ? rhs->cols() : 0);
  Reduced out{{}, {}, rank_field(m.ring())};
  if (m.ring().kind() == RingKind::PrimeField) {
    FpMatrix f = to_fp(m, rhs);
    out.pivots = f.rref();
    for (std::size_t i = 0; i < out.pivots.size(); ++i) {
      std::vector<Scalar> row;
      row.reserve(ncols);
      for (std::size_t j = 0; j < ncols; ++j) row.push_back(out.field.from_int(f.get(i, j)));
      out.rows.push_back(std::move(row));
    }
    return out;
  }
  RatRows r = to_rational_rows(m, rhs);
  out.pivots = rational_rref(r, ncols);
  for (auto& row : r) {
    std::vector<Scalar> sr;
    sr.reserve(ncols);
    for (auto& q : row) sr.push_back(out.field.from_rational(q));
    out.rows.push_back(std::move(sr));
  }
  return out;
}

std::vector<std::vector<Scalar>> kernel_from(const Reduced& red, std::size_t ncols, const Ring& ring) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : red.pivots)
    if (c < ncols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(ncols, red.field.zero());
    v[f] = red.field.one();
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
      if (red.pivots[i] < ncols) v[red.pivots[i]] = -red.rows[i][f];
    if (ring.kind() == RingKind::PLocal) {
      // clear denominators so the vector lives in the p-local ring
      mpz_class l = 1;
      for (const auto& s : v) {
        mpq_class q = s.to_rational();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      }
      std::vector<Scalar> w;
      for (const auto& s : v) w.push_back(ring.from_rational(mpq_class(s.to_rational() * l)));
      v = std::move(w);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
  if (m.rows() == 0) {
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
      std::vector<Scalar> v(m.cols(), m.ring().zero());
      v[f] = m.ring().one();
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return kernel_from(reduce_augmented(m, nullptr), m.cols(), m.ring());
}

SolveResult solve_linear(const ExactMatrix& m, const ExactMatrix& rhs) {
  if (m.rows() != rhs.rows()) throw ShapeError("solve_linear: row counts differ");
  if (!(m.ring() == rhs.ring())) throw ArithmeticError("solve_linear: rings differ");
  SolveResult res;
  Reduced red = reduce_augmented(m, &rhs);
  for (auto c : red.pivots)
    if (c >= m.cols()) return res;
  res.consistent = true;
  Ring out_ring = m.ring();
  std::vector<Scalar> entries(m.cols() * rhs.cols(), red.field.zero());
  for (std::size_t i = 0; i < red.pivots.size(); ++i)
    for (std::size_t k = 0; k < rhs.cols(); ++k) entries[red.pivots[i] * rhs.cols() + k] = red.rows[i][m.cols() + k];
  if (out_ring.kind() == RingKind::PLocal) {
    for (const auto& s : entries)
      if (!is_p_local(s.to_rational(), out_ring.p())) res.p_local = false;
    if (!res.p_local) out_ring = Ring::rationals();
  }
  ExactMatrix x(out_ring, m.cols(), rhs.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t k = 0; k < rhs.cols(); ++k)
      x.at(i, k) = out_ring.kind() == RingKind::PrimeField ? entries[i * rhs.cols() + k]
                                                           : out_ring.from_rational(entries[i * rhs.cols() + k].to_rational());
  res.particular = std::move(x);
  res.kernel = kernel_from(red, m.cols(), m.ring());
  return res;
}

}  // namespace salg
