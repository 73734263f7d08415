#include <atomic>
#include <cstdlib>
#include <string>

#include "wzw/simd/kernels.hpp"

namespace wzw::simd {

#if WZW_HAVE_AVX2_KERNELS
const Kernels* avx2_kernels_compiled();
#endif

const Kernels* avx2_kernels() {
#if WZW_HAVE_AVX2_KERNELS
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? avx2_kernels_compiled() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const Kernels* default_table() {
  const char* env = std::getenv("WZW_SIMD");
  if (env != nullptr && std::string(env) == "scalar") {
    return &scalar_kernels();
  }
  const Kernels* v = avx2_kernels();
  return v != nullptr ? v : &scalar_kernels();
}

std::atomic<const Kernels*>& current() {
  static std::atomic<const Kernels*> table{default_table()};
  return table;
}

}  // namespace

const Kernels& active_kernels() { return *current().load(std::memory_order_acquire); }

bool select_kernels(std::string_view name) {
  const Kernels* table = nullptr;
  if (name == "scalar") {
    table = &scalar_kernels();
  } else if (name == "avx2") {
    table = avx2_kernels();
  } else if (name == "auto") {
    const Kernels* v = avx2_kernels();
    table = v != nullptr ? v : &scalar_kernels();
  }
  if (table == nullptr) {
    return false;
  }
  current().store(table, std::memory_order_release);
  return true;
}

}  // namespace wzw::simd
