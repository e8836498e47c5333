#include <set>

#include "doctest.h"
#include "salg/combin.hpp"

using namespace salg;

TEST_CASE("composition and partition counts") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d) CHECK(compositions(n, d).size() == binomial(n + d - 1, d));
  std::vector<std::size_t> p_of{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int d = 0; d <= 8; ++d) CHECK(partitions(d).size() == p_of[d]);
  CHECK(multinomial({2, 1, 1}) == 12);
  CHECK(factorial(6) == 720);
}

TEST_CASE("multicompositions split the weight across colors") {
  for (int colors = 1; colors <= 3; ++colors)
    for (int d = 0; d <= 3; ++d) {
      auto all = multicompositions(colors, 2, d);
      CHECK(all.size() == binomial(2 * colors + d - 1, d));
      for (const auto& m : all) {
        int total = 0;
        for (const auto& c : m) total += weight(c);
        CHECK(total == d);
      }
    }
}

TEST_CASE("Kostka numbers satisfy the RSK square identity") {
  for (int d = 1; d <= 6; ++d) {
    std::uint64_t total = 0;
    for (const auto& shape : partitions(d)) {
      std::uint64_t f = kostka(shape, Composition(d, 1));
      total += f * f;
    }
    CHECK(total == factorial(d));
  }
  CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka({3}, {1, 2}) == 1);
  CHECK(kostka({1, 1}, {2}) == 0);
}

TEST_CASE("permutations and reduced words") {
  for (int d = 1; d <= 5; ++d) {
    auto perms = all_permutations(d);
    CHECK(perms.size() == factorial(d));
    for (const auto& w : perms) {
      auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(Permutation::from_word(d, word) == w);
      CHECK((w * w.inverse()).is_identity());
    }
  }
  CHECK(Permutation::longest(4).length() == 6);
  CHECK(Permutation::simple(3, 1).one_line() == std::vector<int>{2, 1, 3});
}

TEST_CASE("coset representatives have the expected count") {
  Composition lambda{2, 1, 1};
  CHECK(coset_reps(lambda).size() == multinomial(lambda));
}

TEST_CASE("p-strict partitions and bar cores") {
  CHECK(is_p_strict({3, 3, 1}, 3));
  CHECK_FALSE(is_p_strict({2, 2}, 3));
  for (int n = 0; n <= 9; ++n)
    for (const auto& lambda : p_strict_partitions(n, 3)) {
      Partition core = bar_core(lambda, 3);
      CHECK(weight(core) + 3 * bar_weight(lambda, 3) == n);
      CHECK(bar_core(core, 3) == core);
    }
  CHECK(bar_core({3}, 3).empty());
  CHECK(bar_weight({3}, 3) == 1);
  CHECK(bar_core({2, 1}, 3).empty());
  CHECK(bar_core({4}, 3) == Partition{1});
}

TEST_CASE("colored compositions and the interleaving map round-trip") {
  for (const auto& m : multicompositions(2, 3, 3)) CHECK(deinterleave(interleave(m, 3), 2) == m);
  std::set<ColoredComposition> seen;
  for (const auto& c : colored_compositions(2, 2, 2)) seen.insert(c);
  CHECK(seen.size() == colored_compositions(2, 2, 2).size());
}
