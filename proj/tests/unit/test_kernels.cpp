#include <random>

#include "doctest.h"
#include "salg/kernels.hpp"
#include "salg/linalg.hpp"

using namespace salg;

TEST_CASE("AVX2 axpy matches the scalar reference") {
  if (!kernels::cpu_has_avx2()) return;
  std::mt19937 gen(3);
  for (std::uint16_t p : {3, 5, 7, 101, 251})
    for (std::size_t n : {0u, 1u, 15u, 16u, 17u, 33u, 100u, 1000u}) {
      std::vector<std::uint16_t> src(n), a(n);
      for (std::size_t i = 0; i < n; ++i) {
        src[i] = static_cast<std::uint16_t>(gen() % p);
        a[i] = static_cast<std::uint16_t>(gen() % p);
      }
      auto b = a;
      auto f = static_cast<std::uint16_t>(gen() % p);
      kernels::axpy_mod_u16_scalar(a.data(), src.data(), f, n, p);
      kernels::axpy_mod_u16_avx2(b.data(), src.data(), f, n, p);
      CHECK(a == b);
    }
}

TEST_CASE("scalar axpy against the defining formula") {
  std::vector<std::uint16_t> dst{1, 2, 0, 4}, src{4, 4, 3, 0};
  kernels::axpy_mod_u16_scalar(dst.data(), src.data(), 3, dst.size(), 5);
  CHECK(dst == std::vector<std::uint16_t>{(1 + 12) % 5, (2 + 12) % 5, 9 % 5, 4});
  std::vector<std::uint32_t> wide{70000, 1}, wsrc{99990, 5};
  kernels::axpy_mod_u32(wide.data(), wsrc.data(), 99990, 2, 99991);
  CHECK(wide[0] == (70000ull + 99990ull * 99990ull) % 99991ull);
}

TEST_CASE("dense F_p rank agrees with the exact sparse rank") {
  std::mt19937 gen(9);
  for (std::uint32_t p : {3u, 5u, 65537u})
    for (int trial = 0; trial < 8; ++trial) {
      std::size_t rows = 3 + gen() % 10, cols = 3 + gen() % 40;
      FpMatrix dense(p, rows, cols);
      Ring f = Ring::prime_field(p);
      ExactMatrix exact(f, rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          std::uint32_t v = gen() % 4 == 0 ? static_cast<std::uint32_t>(gen() % p) : 0;
          dense.set(r, c, v);
          exact.at(r, c) = f.from_int(v);
        }
      // duplicate a row to make rank deficiency likely
      for (std::size_t c = 0; c < cols; ++c) {
        dense.set(rows - 1, c, dense.get(0, c));
        exact.at(rows - 1, c) = exact.at(0, c);
      }
      CHECK(dense.rank() == rank(exact));
    }
}

TEST_CASE("inverse_mod") {
  for (std::uint32_t p : {3u, 5u, 7u, 251u})
    for (std::uint32_t a = 1; a < p; ++a) CHECK((static_cast<std::uint64_t>(a) * inverse_mod(a, p)) % p == 1);
}
