#include <immintrin.h>

#include "salg/kernels.hpp"

namespace salg::kernels {

// Sixteen lanes per step. With x = dst + f*src < 2^16 and m = floor(2^16 / p),
// q = (x*m) >> 16 undershoots floor(x/p) by at most one, so one conditional subtract finishes.
void axpy_mod_u16_avx2(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t f, std::size_t n,
                       std::uint16_t p) {
  const auto m = static_cast<std::uint16_t>(65536u / p);
  const __m256i vf = _mm256_set1_epi16(static_cast<short>(f));
  const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
  const __m256i vm = _mm256_set1_epi16(static_cast<short>(m));
  const __m256i vpm1 = _mm256_set1_epi16(static_cast<short>(p - 1));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i x = _mm256_add_epi16(d, _mm256_mullo_epi16(s, vf));
    __m256i q = _mm256_mulhi_epu16(x, vm);
    __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(q, vp));
    // r is in [0, 2p); subtract p where r > p-1 (values fit in signed 16 bits since p < 256)
    __m256i over = _mm256_cmpgt_epi16(r, vpm1);
    r = _mm256_sub_epi16(r, _mm256_and_si256(over, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  if (i < n) axpy_mod_u16_scalar(dst + i, src + i, f, n - i, p);
}

}  // namespace salg::kernels
