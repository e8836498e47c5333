#include <algorithm>

#include "salg/linalg.hpp"

namespace salg {

void sparse_axpy(SparseVec& dst, const Scalar& f, const SparseVec& src) {
  if (f.is_zero() || src.empty()) return;
  SparseVec out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == dst.end() || b->first < a->first) {
      out.emplace_back(b->first, f * b->second);
      ++b;
    } else {
      Scalar s = a->second + f * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  dst = std::move(out);
}

SparseVec sparse_scaled(const SparseVec& v, const Scalar& f) {
  SparseVec out;
  if (f.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& [i, s] : v) out.emplace_back(i, s * f);
  return out;
}

SparseVec sparse_from_unsorted(std::vector<std::pair<Index, Scalar>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec out;
  for (auto& [i, s] : entries) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += s;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!s.is_zero()) {
      out.emplace_back(i, std::move(s));
    }
  }
  return out;
}

Ring rank_field(const Ring& ring) {
  return ring.kind() == RingKind::PLocal ? Ring::rationals() : ring;
}

Scalar to_field(const Scalar& s) {
  if (s.kind() != RingKind::PLocal) return s;
  return Ring::rationals().from_rational(s.to_rational());
}

RowSpace::RowSpace(Ring field) : field_(std::move(field)) {
  if (!field_.is_field()) throw ArithmeticError("RowSpace needs a field");
}

SparseVec RowSpace::reduce(SparseVec v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = pivot_row_.find(v[pos].first);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    // Pivot rows only touch columns at or after the pivot, so entries before pos are final.
    Scalar f = -v[pos].second;
    sparse_axpy(v, f, rows_[it->second]);
  }
  return v;
}

bool RowSpace::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar inv = v.front().second.inverse();
  for (auto& e : v) e.second *= inv;
  pivot_row_.emplace(v.front().first, rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<SparseVec> RowSpace::reduced_basis() const {
  std::vector<SparseVec> rref = rows_;
  std::sort(rref.begin(), rref.end(), [](const auto& x, const auto& y) { return x.front().first > y.front().first; });
  std::unordered_map<Index, std::size_t> where;
  for (std::size_t i = 0; i < rref.size(); ++i) {
    // rows with larger pivots are already fully reduced
    SparseVec& v = rref[i];
    std::size_t pos = 1;
    while (pos < v.size()) {
      auto it = where.find(v[pos].first);
      if (it == where.end()) {
        ++pos;
        continue;
      }
      Scalar f = -v[pos].second;
      sparse_axpy(v, f, rref[it->second]);
    }
    where.emplace(v.front().first, i);
  }
  std::reverse(rref.begin(), rref.end());
  return rref;
}

SparseVec RowSpace::coordinates(const std::vector<SparseVec>& reduced, const SparseVec& x) {
  SparseVec out;
  std::size_t k = 0;
  for (Index i = 0; i < reduced.size(); ++i) {
    Index pivot = reduced[i].front().first;
    while (k < x.size() && x[k].first < pivot) ++k;
    if (k < x.size() && x[k].first == pivot) out.emplace_back(i, x[k].second);
  }
  return out;
}

}  // namespace salg
