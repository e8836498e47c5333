#pragma once

#include <cstddef>
#include <cstdint>

namespace salg::kernels {

// dst[i] = (dst[i] + f * src[i]) mod p on 16-bit residues. Requires p < 256 and inputs < p.
void axpy_mod_u16_scalar(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t f, std::size_t n,
                         std::uint16_t p);
void axpy_mod_u16_avx2(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t f, std::size_t n,
                       std::uint16_t p);

// Same on 32-bit residues for any p < 2^31.
void axpy_mod_u32(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n,
                  std::uint32_t p);

using AxpyU16 = void (*)(std::uint16_t*, const std::uint16_t*, std::uint16_t, std::size_t, std::uint16_t);

enum class Isa { Scalar, Avx2 };

bool cpu_has_avx2();
// The variant picked at first use; SALG_FORCE_SCALAR=1 in the environment pins the scalar path.
Isa active_isa();
AxpyU16 axpy_u16();
const char* isa_name(Isa isa);

}  // namespace salg::kernels
