#include "dsk/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace dsk::simd {

namespace {

const Kernels& select() {
  const char* forced = std::getenv("DSK_SIMD");
#if defined(__x86_64__) || defined(_M_X64)
  if (forced != nullptr) {
    if (std::strcmp(forced, "avx2") == 0 && avx2_supported()) return avx2_kernels();
    return scalar_kernels();
  }
  if (avx2_supported()) return avx2_kernels();
#else
  (void)forced;
#endif
  return scalar_kernels();
}

}  // namespace

const Kernels& active() {
  static const Kernels& chosen = select();
  return chosen;
}

}  // namespace dsk::simd
