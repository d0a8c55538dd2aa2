#include <atomic>
#include <cstdlib>
#include <string_view>

#include "tables.hpp"

namespace numrad::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(NUMRAD_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* initial_table() noexcept {
  const KernelTable* best = &scalar::table;
  if (cpu_has_avx2()) best = table_for(Backend::Avx2);
  if (const char* env = std::getenv("NUMRAD_SIMD")) {
    const std::string_view want{env};
    if (want == "scalar") return &scalar::table;
    if (want == "avx2" && backend_available(Backend::Avx2)) return table_for(Backend::Avx2);
  }
  return best;
}

std::atomic<const KernelTable*>& active() noexcept {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable* table_for(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return &scalar::table;
    case Backend::Avx2:
#if defined(NUMRAD_HAVE_AVX2_TU)
      return cpu_has_avx2() ? &avx2::table : nullptr;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

bool backend_available(Backend b) noexcept { return table_for(b) != nullptr; }

const KernelTable& kernels() noexcept { return *active().load(std::memory_order_relaxed); }

bool set_backend(Backend b) noexcept {
  const KernelTable* t = table_for(b);
  if (t == nullptr) return false;
  active().store(t, std::memory_order_relaxed);
  return true;
}

Backend active_backend() noexcept { return kernels().backend; }

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace numrad::simd
