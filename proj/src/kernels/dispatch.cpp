#include <cstdlib>
#include <cstring>

#include "salg/kernels.hpp"

namespace salg::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* force = std::getenv("SALG_FORCE_SCALAR");
    if (force && std::strcmp(force, "1") == 0) return Isa::Scalar;
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
  }();
  return isa;
}

AxpyU16 axpy_u16() { return active_isa() == Isa::Avx2 ? &axpy_mod_u16_avx2 : &axpy_mod_u16_scalar; }

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

}  // namespace salg::kernels
