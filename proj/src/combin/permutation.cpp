#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "salg/combin.hpp"

namespace salg {

Permutation::Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
  std::vector<bool> seen(v_.size() + 1, false);
  for (int x : v_) {
    if (x < 1 || x > size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int d, int r) {
  if (r < 1 || r >= d) throw std::invalid_argument("simple transposition out of range");
  Permutation w = identity(d);
  std::swap(w.v_[r - 1], w.v_[r]);
  return w;
}

Permutation Permutation::longest(int d) {
  std::vector<int> v(d);
  for (int i = 0; i < d; ++i) v[i] = d - i;
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(int d, const std::vector<int>& word) {
  Permutation w = identity(d);
  for (int r : word) w = w.times_simple_right(r);
  return w;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.size() != size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> v(v_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = v_[o.v_[i] - 1];
  Permutation out;
  out.v_ = std::move(v);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(v_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[v_[i] - 1] = static_cast<int>(i) + 1;
  Permutation out;
  out.v_ = std::move(v);
  return out;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < v_.size(); ++i)
    for (std::size_t j = i + 1; j < v_.size(); ++j)
      if (v_[i] > v_[j]) ++inv;
  return inv;
}

bool Permutation::has_left_descent(int r) const {
  for (int x : v_) {
    if (x == r + 1) return true;
    if (x == r) return false;
  }
  return false;
}

Permutation Permutation::times_simple_left(int r) const {
  Permutation out = *this;
  for (int& x : out.v_) {
    if (x == r)
      x = r + 1;
    else if (x == r + 1)
      x = r;
  }
  return out;
}

Permutation Permutation::times_simple_right(int r) const {
  Permutation out = *this;
  std::swap(out.v_[r - 1], out.v_[r]);
  return out;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  while (!w.is_identity()) {
    for (int r = 1; r < size(); ++r) {
      if (w.has_left_descent(r)) {
        word.push_back(r);
        w = w.times_simple_left(r);
        break;
      }
    }
  }
  return word;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
  return s + "]";
}

std::vector<Permutation> all_permutations(int d) {
  std::vector<Permutation> out;
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<int> block_of_positions(const Composition& lambda) {
  std::vector<int> block;
  for (std::size_t b = 0; b < lambda.size(); ++b)
    for (int k = 0; k < lambda[b]; ++k) block.push_back(static_cast<int>(b));
  return block;
}

std::vector<Permutation> coset_reps(const Composition& lambda) {
  // A minimal representative lists the values of each block in increasing order,
  // so it is determined by the word recording which block each position's value comes from.
  std::vector<int> labels = block_of_positions(lambda);
  std::vector<int> starts(lambda.size(), 1);
  for (std::size_t b = 1; b < lambda.size(); ++b) starts[b] = starts[b - 1] + lambda[b - 1];
  std::vector<Permutation> out;
  do {
    std::vector<int> next = starts;
    std::vector<int> v;
    v.reserve(labels.size());
    for (int b : labels) v.push_back(next[b]++);
    out.emplace_back(std::move(v));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

}  // namespace salg
