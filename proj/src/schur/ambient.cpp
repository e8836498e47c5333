#include <algorithm>
#include <map>

#include "salg/schur.hpp"

namespace salg {

namespace {

int odd_inversions(const SchurData& data, const CodeTuple& t) {
  int inv = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!data.code_parity(t[i])) continue;
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (data.code_parity(t[j]) && t[j] < t[i]) ++inv;
  }
  return inv;
}

}  // namespace

SchurData::SchurData(int n, int d, int ell)
    : n_(n), d_(d), ell_(ell), index_(ell), base_(brauer_algebra(Ring::rationals(), ell)) {
  if (n < 1 || d < 1) throw ShapeError("Schur algebra needs n >= 1 and d >= 1");
  if (code_count() > 0xffff) throw GuardExceeded("too many matrix units");
  if (ambient_rank() > 10'000'000) throw GuardExceeded("ambient rank exceeds 10^7");
  enumerate();
}

std::size_t SchurData::ambient_rank() const {
  std::size_t total = 1;
  for (int k = 0; k < d_; ++k) {
    total *= code_count();
    if (total > 100'000'000) return total;
  }
  return total;
}

std::uint16_t SchurData::code(Index b, int r, int s) const {
  if (r < 1 || r > n_ || s < 1 || s > n_ || b >= index_.rank()) throw ShapeError("matrix unit out of range");
  return static_cast<std::uint16_t>((b * n_ + (r - 1)) * n_ + (s - 1));
}

void SchurData::enumerate() {
  std::size_t m = code_count();
  CodeTuple t(d_, 0);
  // Nondecreasing tuples with no repeated odd code.
  auto rec = [&](auto& self, int pos, std::uint16_t lo) -> void {
    if (pos == d_) {
      rep_index_.emplace(t, reps_.size());
      reps_.push_back(t);
      return;
    }
    for (std::size_t c = lo; c < m; ++c) {
      auto code16 = static_cast<std::uint16_t>(c);
      if (pos > 0 && t[pos - 1] == code16 && code_parity(code16)) continue;
      t[pos] = code16;
      self(self, pos + 1, code16);
    }
  };
  rec(rec, 0, 0);
}

std::optional<Index> SchurData::orbit_of_sorted(const CodeTuple& t) const {
  auto it = rep_index_.find(t);
  if (it == rep_index_.end()) return std::nullopt;
  return static_cast<Index>(it->second);
}

std::optional<std::pair<Index, int>> SchurData::locate(const CodeTuple& t) const {
  CodeTuple sorted = t;
  std::sort(sorted.begin(), sorted.end());
  auto i = orbit_of_sorted(sorted);
  if (!i) return std::nullopt;
  return std::pair{*i, sign_of(odd_inversions(*this, t))};
}

BiDegree SchurData::bidegree(Index i) const {
  BiDegree out;
  for (auto c : reps_[i]) out = out + base_.bidegree(code_b(c));
  return out;
}

std::uint64_t SchurData::c_factorial(Index i) const {
  std::uint64_t f = 1;
  const auto& t = reps_[i];
  for (std::size_t k = 0; k < t.size();) {
    std::size_t run = 1;
    while (k + run < t.size() && t[k + run] == t[k]) ++run;
    Index b = code_b(t[k]);
    if (b >= index_.c(0) && b <= index_.c(ell_ - 1)) f *= factorial(static_cast<int>(run));
    k += run;
  }
  return f;
}

SchurTriple SchurData::triple(Index i) const {
  SchurTriple out;
  for (auto c : reps_[i]) {
    out.b.push_back(code_b(c));
    out.r.push_back(code_r(c));
    out.s.push_back(code_s(c));
  }
  return out;
}

std::string SchurData::label(Index i) const {
  std::string out = "xi[";
  const auto& t = reps_[i];
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += '|';
    out += index_.label(code_b(t[k])) + "," + std::to_string(code_r(t[k])) + "," + std::to_string(code_s(t[k]));
  }
  return out + "]";
}

AmbientElement SchurData::orbit_sum(Index i) const {
  AmbientElement out;
  CodeTuple t = reps_[i];
  do {
    out[t] = sign_of(odd_inversions(*this, t));
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

std::optional<std::pair<int, CodeTuple>> SchurData::multiply(const CodeTuple& x, const CodeTuple& y) const {
  CodeTuple z(x.size());
  int exponent = 0;
  int odd_y_before = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    // x_k passes y_1 .. y_{k-1}
    if (code_parity(x[k])) exponent += odd_y_before;
    if (code_s(x[k]) != code_r(y[k])) return std::nullopt;
    Element p = base_.basis_product(code_b(x[k]), code_b(y[k]));
    if (p.empty()) return std::nullopt;
    if (p.size() != 1 || !p[0].second.is_one()) throw std::logic_error("base product is not monomial");
    z[k] = code(p[0].first, code_r(x[k]), code_s(y[k]));
    odd_y_before += code_parity(y[k]);
  }
  return std::pair{sign_of(exponent), std::move(z)};
}

AmbientElement SchurData::multiply(const AmbientElement& x, const AmbientElement& y) const {
  AmbientElement out;
  for (const auto& [tx, cx] : x)
    for (const auto& [ty, cy] : y)
      if (auto p = multiply(tx, ty)) out[p->second] += p->first * cx * cy;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::pair<int, CodeTuple> SchurData::act_simple(int r, const CodeTuple& t) const {
  CodeTuple out = t;
  std::swap(out[r - 1], out[r]);
  int sign = (code_parity(t[r - 1]) && code_parity(t[r])) ? -1 : 1;
  return {sign, std::move(out)};
}

bool SchurData::is_invariant(const AmbientElement& x) const {
  for (int r = 1; r < d_; ++r)
    for (const auto& [t, c] : x) {
      auto [sign, moved] = act_simple(r, t);
      auto it = x.find(moved);
      long there = it == x.end() ? 0 : it->second;
      if (there != sign * c) return false;
    }
  return true;
}

std::vector<std::pair<Index, long>> SchurData::to_xi(const AmbientElement& x) const {
  std::vector<std::pair<Index, long>> out;
  for (const auto& [t, c] : x) {
    if (c == 0 || !std::is_sorted(t.begin(), t.end())) continue;
    auto i = orbit_of_sorted(t);
    if (!i) throw std::logic_error("invariant element has a repeated odd coordinate");
    out.emplace_back(*i, c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::pair<Index, long>>& SchurData::xi_product(Index i, Index j) const {
  std::uint64_t slot = static_cast<std::uint64_t>(i) * reps_.size() + j;
  if (auto it = table_.find(slot); it != table_.end()) return it->second;
  std::map<Index, long> acc;
  AmbientElement stray;
  AmbientElement left = orbit_sum(i), right = orbit_sum(j);
  for (const auto& [tx, cx] : left)
    for (const auto& [ty, cy] : right) {
      auto p = multiply(tx, ty);
      if (!p || !std::is_sorted(p->second.begin(), p->second.end())) continue;
      auto k = orbit_of_sorted(p->second);
      long v = p->first * cx * cy;
      if (k) acc[*k] += v;
      else stray[p->second] += v;
    }
  for (const auto& [t, v] : stray)
    if (v) throw std::logic_error("product leaves the invariant span");
  std::vector<std::pair<Index, long>> out;
  for (auto [k, v] : acc)
    if (v) out.emplace_back(k, v);
  return table_.emplace(slot, std::move(out)).first->second;
}

}  // namespace salg
