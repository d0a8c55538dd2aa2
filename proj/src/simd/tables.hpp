#pragma once

#include "numrad/simd/kernels.hpp"

namespace numrad::simd {

namespace scalar {
extern const KernelTable table;
}

#if defined(NUMRAD_HAVE_AVX2_TU)
namespace avx2 {
extern const KernelTable table;
}
#endif

}  // namespace numrad::simd
