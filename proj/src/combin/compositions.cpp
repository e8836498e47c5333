#include <algorithm>
#include <functional>
#include <stdexcept>

#include "salg/combin.hpp"

namespace salg {

int weight(const Composition& c) {
  int s = 0;
  for (int x : c) s += x;
  return s;
}

Composition trimmed(Composition c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

bool is_partition(const Composition& c) { return std::is_sorted(c.rbegin(), c.rend()); }

std::string to_string(const Composition& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

int color_weight(const ColoredComposition& c, int color) {
  int s = 0;
  for (std::size_t r = 0; r < c.parts.size(); ++r)
    if (c.colors[r] == color) s += c.parts[r];
  return s;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return b;
}

std::uint64_t multinomial(const Composition& parts) {
  std::uint64_t m = 1;
  int total = 0;
  for (int x : parts) {
    total += x;
    m *= binomial(total, x);
  }
  return m;
}

std::vector<Composition> compositions(int n, int d) {
  std::vector<Composition> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Composition cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[pos] = x;
      rec(pos + 1, left - x);
    }
  };
  rec(0, d);
  return out;
}

std::vector<Composition> dominant_compositions(int n, int d) {
  std::vector<Composition> out;
  for (auto& c : compositions(n, d))
    if (is_partition(c)) out.push_back(std::move(c));
  return out;
}

std::vector<MultiComposition> multicompositions(int colors, int n, int d) {
  std::vector<MultiComposition> out;
  for (const auto& flat : compositions(n * colors, d)) out.push_back(deinterleave(flat, colors));
  return out;
}

std::vector<MultiComposition> multipartitions(int colors, int d) {
  std::vector<MultiComposition> out;
  for (const auto& sizes : compositions(colors, d)) {
    std::vector<MultiComposition> acc{{}};
    for (int j = 0; j < colors; ++j) {
      std::vector<MultiComposition> next;
      for (const auto& prefix : acc)
        for (const auto& p : partitions(sizes[j])) {
          auto m = prefix;
          m.push_back(p);
          next.push_back(std::move(m));
        }
      acc = std::move(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

namespace {

std::vector<std::vector<int>> color_words(int colors, int n) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int c = 0; c < colors; ++c) {
        auto x = w;
        x.push_back(c);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<ColoredComposition> colored_compositions(int colors, int n, int d) {
  std::vector<ColoredComposition> out;
  auto words = color_words(colors, n);
  for (const auto& c : compositions(n, d))
    for (const auto& w : words) out.push_back({c, w});
  return out;
}

std::vector<Composition> essential_compositions(int d) {
  std::vector<Composition> out;
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  for (int n = 1; n <= d; ++n)
    for (auto& c : compositions(n, d))
      if (std::find(c.begin(), c.end(), 0) == c.end()) out.push_back(std::move(c));
  return out;
}

std::vector<ColoredComposition> essential_colored_compositions(int colors, int d) {
  std::vector<ColoredComposition> out;
  for (const auto& c : essential_compositions(d))
    for (const auto& w : color_words(colors, static_cast<int>(c.size()))) out.push_back({c, w});
  return out;
}

Composition interleave(const MultiComposition& m, int n) {
  Composition out;
  out.reserve(n * m.size());
  for (int k = 0; k < n; ++k)
    for (const auto& comp : m) {
      if (comp.size() > static_cast<std::size_t>(n) &&
          std::any_of(comp.begin() + n, comp.end(), [](int x) { return x != 0; }))
        throw std::invalid_argument("multicomposition has more than n nonzero rows");
      out.push_back(k < static_cast<int>(comp.size()) ? comp[k] : 0);
    }
  return out;
}

MultiComposition deinterleave(const Composition& c, int colors) {
  if (colors <= 0 || c.size() % colors) throw std::invalid_argument("length is not a multiple of the color count");
  int n = static_cast<int>(c.size()) / colors;
  MultiComposition m(colors, Composition(n, 0));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < colors; ++j) m[j][k] = c[k * colors + j];
  return m;
}

ColoredComposition colored_embedding(const MultiComposition& m, int n) {
  ColoredComposition out{interleave(m, n), {}};
  int colors = static_cast<int>(m.size());
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < colors; ++j) out.colors.push_back(j);
  return out;
}

}  // namespace salg
