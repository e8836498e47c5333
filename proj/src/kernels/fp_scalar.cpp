#include "salg/kernels.hpp"

namespace salg::kernels {

void axpy_mod_u16_scalar(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t f, std::size_t n,
                         std::uint16_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t x = dst[i] + static_cast<std::uint32_t>(f) * src[i];
    dst[i] = static_cast<std::uint16_t>(x % p);
  }
}

void axpy_mod_u32(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n,
                  std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t x = dst[i] + static_cast<std::uint64_t>(f) * src[i];
    dst[i] = static_cast<std::uint32_t>(x % p);
  }
}

}  // namespace salg::kernels
