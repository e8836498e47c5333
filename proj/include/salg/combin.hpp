#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace salg {

// Finite list of nonnegative parts. Canonical forms have trailing zeros trimmed,
// but compositions in Λ(n,d) keep exactly n parts.
using Composition = std::vector<int>;
using Partition = std::vector<int>;
using MultiComposition = std::vector<Composition>;  // one component per color j = 0..ℓ-1

struct ColoredComposition {
  Composition parts;
  std::vector<int> colors;
  bool operator==(const ColoredComposition&) const = default;
  auto operator<=>(const ColoredComposition&) const = default;
};

int weight(const Composition& c);
Composition trimmed(Composition c);
bool is_partition(const Composition& c);
std::string to_string(const Composition& c);

// Sum of parts of (λ, j) carrying color j.
int color_weight(const ColoredComposition& c, int color);

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);
std::uint64_t multinomial(const Composition& parts);

// Enumerations, all in reverse lexicographic order of the flattened part list.
std::vector<Composition> compositions(int n, int d);             // Λ(n,d), n parts each
std::vector<Composition> dominant_compositions(int n, int d);    // Λ_+(n,d), n parts each
std::vector<Partition> partitions(int d);                        // 𝒫(d), trimmed
std::vector<MultiComposition> multipartitions(int colors, int d);              // 𝒫^J(d)
std::vector<MultiComposition> multicompositions(int colors, int n, int d);     // Λ^J(n,d)
std::vector<ColoredComposition> colored_compositions(int colors, int n, int d);  // Λ^col(n,d)
std::vector<Composition> essential_compositions(int d);                        // 𝒞(d)
std::vector<ColoredComposition> essential_colored_compositions(int colors, int d);

// Interleaves (λ^(0)_1, ..., λ^(ℓ-1)_1, ..., λ^(ℓ-1)_n).
Composition interleave(const MultiComposition& m, int n);
MultiComposition deinterleave(const Composition& c, int colors);
ColoredComposition colored_embedding(const MultiComposition& m, int n);

std::uint64_t kostka(const Partition& shape, const Composition& content);
std::uint64_t kostka_multi(const MultiComposition& shape, const MultiComposition& content);

// One-line permutation of {1..d}; products compose right to left: (wv)(i) = w(v(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int d);
  static Permutation simple(int d, int r);
  static Permutation longest(int d);
  static Permutation from_word(int d, const std::vector<int>& word);  // s_{w1} s_{w2} ...

  int size() const { return static_cast<int>(v_.size()); }
  int operator()(int i) const { return v_[i - 1]; }
  const std::vector<int>& one_line() const { return v_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  int length() const;
  int sign() const { return length() % 2 ? -1 : 1; }

  // ℓ(s_r w) < ℓ(w): r+1 precedes r in the one-line form.
  bool has_left_descent(int r) const;
  // ℓ(w s_r) < ℓ(w).
  bool has_right_descent(int r) const { return v_[r - 1] > v_[r]; }
  Permutation times_simple_left(int r) const;   // s_r w
  Permutation times_simple_right(int r) const;  // w s_r

  // Lexicographically least reduced word (w = s_{a1} s_{a2} ...).
  std::vector<int> reduced_word() const;

  bool is_identity() const;
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> v_;
};

std::vector<Permutation> all_permutations(int d);
// Minimal length representatives of the right cosets 𝔖_λ w.
std::vector<Permutation> coset_reps(const Composition& lambda);
// Block index (0-based) of each position 1..d for the parabolic 𝔖_λ.
std::vector<int> block_of_positions(const Composition& lambda);

// p-strict partitions: only multiples of p may repeat.
bool is_p_strict(const Partition& lambda, int p);
std::vector<Partition> p_strict_partitions(int n, int p);
Partition bar_core(const Partition& lambda, int p);
int bar_weight(const Partition& lambda, int p);

}  // namespace salg
