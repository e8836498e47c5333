#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "salg/combin.hpp"

namespace salg {

std::vector<Partition> partitions(int d) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

namespace {

// Ways to grow `inner` into `outer` by horizontal strips of the given sizes, in order.
std::uint64_t count_strips(const Partition& outer, Partition inner, const Composition& sizes, std::size_t idx) {
  if (idx == sizes.size()) return inner == outer ? 1 : 0;
  int need = sizes[idx];
  std::uint64_t total = 0;
  std::size_t rows = outer.size();
  inner.resize(rows, 0);
  Partition next = inner;
  // Row i may grow up to min(outer_i, inner_{i-1}) for a horizontal strip.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == rows) {
      if (left == 0) total += count_strips(outer, next, sizes, idx + 1);
      return;
    }
    int cap = outer[i];
    if (i > 0) cap = std::min(cap, inner[i - 1]);
    int room = cap - inner[i];
    for (int add = std::min(room, left); add >= 0; --add) {
      next[i] = inner[i] + add;
      rec(i + 1, left - add);
    }
    next[i] = inner[i];
  };
  rec(0, need);
  return total;
}

}  // namespace

std::uint64_t kostka(const Partition& shape, const Composition& content) {
  Partition s = trimmed(shape);
  if (weight(s) != weight(content)) return 0;
  if (!is_partition(s)) throw std::invalid_argument("kostka: shape is not a partition");
  return count_strips(s, Partition(s.size(), 0), content, 0);
}

std::uint64_t kostka_multi(const MultiComposition& shape, const MultiComposition& content) {
  if (shape.size() != content.size()) return 0;
  std::uint64_t k = 1;
  for (std::size_t j = 0; j < shape.size(); ++j) k *= kostka(shape[j], content[j]);
  return k;
}

bool is_p_strict(const Partition& lambda, int p) {
  if (!is_partition(lambda)) return false;
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] > 0 && lambda[i] == lambda[i + 1] && lambda[i] % p != 0) return false;
  return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x >= 0; });
}

std::vector<Partition> p_strict_partitions(int n, int p) {
  std::vector<Partition> out;
  for (auto& l : partitions(n))
    if (is_p_strict(l, p)) out.push_back(std::move(l));
  return out;
}

namespace {

Partition sorted_desc(Partition l) {
  std::sort(l.rbegin(), l.rend());
  return trimmed(l);
}

// One p-bar removal if any exists.
bool remove_bar(Partition& l, int p) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == p) {
      l.erase(l.begin() + i);
      return true;
    }
    if (l[i] > p) {
      Partition c = l;
      c[i] -= p;
      c = sorted_desc(c);
      if (is_p_strict(c, p)) {
        l = c;
        return true;
      }
    }
  }
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      if (l[i] + l[j] == p && l[i] != l[j]) {
        l.erase(l.begin() + j);
        l.erase(l.begin() + i);
        return true;
      }
  return false;
}

}  // namespace

Partition bar_core(const Partition& lambda, int p) {
  Partition l = trimmed(lambda);
  if (!is_p_strict(l, p)) throw std::invalid_argument("bar_core: partition is not p-strict");
  while (remove_bar(l, p)) {
  }
  return l;
}

int bar_weight(const Partition& lambda, int p) {
  return (weight(lambda) - weight(bar_core(lambda, p))) / p;
}

}  // namespace salg
