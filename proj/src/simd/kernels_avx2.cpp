#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "wzw/simd/kernels.hpp"

namespace wzw::simd {

namespace {

void matmul(std::size_t n, const double* ar, const double* ai, const double* br, const double* bi,
            double* cr, double* ci) {
  std::fill(cr, cr + n * n, 0.0);
  std::fill(ci, ci + n * n, 0.0);
  const std::size_t vec_end = n - n % 4;
  for (std::size_t i = 0; i < n; ++i) {
    double* zr = cr + i * n;
    double* zi = ci + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double xr = ar[i * n + k], xi = ai[i * n + k];
      const __m256d vxr = _mm256_set1_pd(xr), vxi = _mm256_set1_pd(xi);
      const double* yr = br + k * n;
      const double* yi = bi + k * n;
      std::size_t j = 0;
      for (; j < vec_end; j += 4) {
        const __m256d vyr = _mm256_loadu_pd(yr + j), vyi = _mm256_loadu_pd(yi + j);
        __m256d vr = _mm256_loadu_pd(zr + j), vi = _mm256_loadu_pd(zi + j);
        vr = _mm256_fmadd_pd(vxr, vyr, vr);
        vr = _mm256_fnmadd_pd(vxi, vyi, vr);
        vi = _mm256_fmadd_pd(vxr, vyi, vi);
        vi = _mm256_fmadd_pd(vxi, vyr, vi);
        _mm256_storeu_pd(zr + j, vr);
        _mm256_storeu_pd(zi + j, vi);
      }
      for (; j < n; ++j) {
        zr[j] += xr * yr[j] - xi * yi[j];
        zi[j] += xr * yi[j] + xi * yr[j];
      }
    }
  }
}

void scale_columns(std::size_t n, double* xr, double* xi, const double* sr, const double* si) {
  const std::size_t vec_end = n - n % 4;
  for (std::size_t i = 0; i < n; ++i) {
    double* pr = xr + i * n;
    double* pi = xi + i * n;
    std::size_t j = 0;
    for (; j < vec_end; j += 4) {
      const __m256d re = _mm256_loadu_pd(pr + j), im = _mm256_loadu_pd(pi + j);
      const __m256d s_re = _mm256_loadu_pd(sr + j), s_im = _mm256_loadu_pd(si + j);
      _mm256_storeu_pd(pr + j, _mm256_fmsub_pd(re, s_re, _mm256_mul_pd(im, s_im)));
      _mm256_storeu_pd(pi + j, _mm256_fmadd_pd(re, s_im, _mm256_mul_pd(im, s_re)));
    }
    for (; j < n; ++j) {
      const double re = pr[j], im = pi[j];
      pr[j] = re * sr[j] - im * si[j];
      pi[j] = re * si[j] + im * sr[j];
    }
  }
}

double identity_deviation(std::size_t n, const double* xr, const double* xi, double sign) {
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  const std::size_t vec_end = n - n % 4;
  __m256d acc = _mm256_setzero_pd();
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* pr = xr + i * n;
    const double* pi = xi + i * n;
    std::size_t j = 0;
    for (; j < vec_end; j += 4) {
      __m256d target = _mm256_setzero_pd();
      if (i >= j && i < j + 4) {
        alignas(32) double t[4] = {0.0, 0.0, 0.0, 0.0};
        t[i - j] = sign;
        target = _mm256_load_pd(t);
      }
      const __m256d dr = _mm256_sub_pd(_mm256_loadu_pd(pr + j), target);
      acc = _mm256_max_pd(acc, _mm256_and_pd(dr, abs_mask));
      acc = _mm256_max_pd(acc, _mm256_and_pd(_mm256_loadu_pd(pi + j), abs_mask));
    }
    for (; j < n; ++j) {
      const double target = i == j ? sign : 0.0;
      dev = std::max({dev, std::abs(pr[j] - target), std::abs(pi[j])});
    }
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return std::max({dev, lanes[0], lanes[1], lanes[2], lanes[3]});
}

}  // namespace

const Kernels* avx2_kernels_compiled() {
  static const Kernels table{"avx2", matmul, scale_columns, identity_deviation};
  return &table;
}

}  // namespace wzw::simd
