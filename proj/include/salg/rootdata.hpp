#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "salg/combin.hpp"

namespace salg {

// θ = Σ m_i α_i, stored as (m_0, ..., m_ℓ).
using RootVec = std::vector<int>;

struct DivLetter {
  int letter;
  int mult;
  bool operator==(const DivLetter&) const = default;
};
using DivWord = std::vector<DivLetter>;

std::vector<int> flatten(const DivWord& w);
std::uint64_t div_factorial(const DivWord& w);
std::string to_string(const DivWord& w);

struct BlockLabel {
  RootVec nucleus;
  int mass = 0;
  bool operator==(const BlockLabel&) const = default;
};

struct Nucleus {
  RootVec rho;
  // Simple reflections in the order they are applied to Λ_0 (i_1 first).
  std::vector<int> applied_word;
};

// Lattice data of type A_{2ℓ}^{(2)}.
class RootSystem {
 public:
  explicit RootSystem(int ell);

  int ell() const { return ell_; }
  int rank() const { return ell_ + 1; }
  int p() const { return 2 * ell_ + 1; }
  int gram(int i, int j) const { return gram_[i][j]; }

  RootVec zero() const { return RootVec(rank(), 0); }
  RootVec simple(int i) const;
  RootVec delta() const;
  int height(const RootVec& theta) const;

  int pairing(const RootVec& a, const RootVec& b) const;
  // (θ | α_i^∨) = 2(θ|α_i)/(α_i|α_i)
  int copairing(const RootVec& theta, int i) const;
  static int lambda0_copairing(int i) { return i == 0 ? 1 : 0; }

  RootVec wt(const std::vector<int>& word) const;
  // Guarded at height 12.
  std::vector<std::vector<int>> words_of(const RootVec& theta) const;

  // Breadth-first orbit of Λ_0 recorded as Λ_0 - θ', all θ' of height <= max_height.
  std::vector<Nucleus> nuclei(int max_height) const;
  std::optional<BlockLabel> nucleus_mass(const RootVec& theta) const;
  bool is_rock(const RootVec& theta) const;

  // Throws if the word is not reduced or does not reach rho.
  DivWord i_rho(const RootVec& rho, const std::vector<int>& applied_word) const;

  DivWord gg_word(int m, int color) const;
  DivWord gg_word(const ColoredComposition& mu) const;
  std::uint64_t gg_factorial(int m, int color) const;

  int residue(int column) const;
  RootVec content(const Partition& lambda) const;

 private:
  void check(const RootVec& theta) const;
  int ell_;
  std::vector<std::vector<int>> gram_;
};

std::string to_string(const RootVec& theta, bool as_list);

}  // namespace salg
