#pragma once

// Dense complex matrix kernels on planar (separate real/imaginary) row-major
// storage. The scalar table is the reference; vector variants must agree
// with it to rounding.

#include <cstddef>
#include <string_view>

namespace wzw::simd {

struct Kernels {
  const char* name;
  // c = a * b for n x n matrices; c must not alias a or b.
  void (*matmul)(std::size_t n, const double* ar, const double* ai, const double* br,
                 const double* bi, double* cr, double* ci);
  // x(:, j) *= s(j)
  void (*scale_columns)(std::size_t n, double* xr, double* xi, const double* sr, const double* si);
  // max over entries of max(|re(x - sign*I)|, |im(x - sign*I)|)
  double (*identity_deviation)(std::size_t n, const double* xr, const double* xi, double sign);
};

const Kernels& scalar_kernels();

/// The AVX2/FMA table, or nullptr when it is not compiled in or the CPU
/// lacks the instructions.
const Kernels* avx2_kernels();

/// The table used by the float path: AVX2 when available, unless the
/// environment variable WZW_SIMD is set to "scalar".
const Kernels& active_kernels();

/// Forces a table by name ("scalar", "avx2", or "auto"); returns false if the
/// requested table is unavailable.
bool select_kernels(std::string_view name);

}  // namespace wzw::simd
