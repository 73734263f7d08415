#include <algorithm>
#include <cmath>

#include "wzw/simd/kernels.hpp"

namespace wzw::simd {

namespace {

void matmul(std::size_t n, const double* ar, const double* ai, const double* br, const double* bi,
            double* cr, double* ci) {
  std::fill(cr, cr + n * n, 0.0);
  std::fill(ci, ci + n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double xr = ar[i * n + k], xi = ai[i * n + k];
      const double* yr = br + k * n;
      const double* yi = bi + k * n;
      double* zr = cr + i * n;
      double* zi = ci + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        zr[j] += xr * yr[j] - xi * yi[j];
        zi[j] += xr * yi[j] + xi * yr[j];
      }
    }
  }
}

void scale_columns(std::size_t n, double* xr, double* xi, const double* sr, const double* si) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = xr[i * n + j], im = xi[i * n + j];
      xr[i * n + j] = re * sr[j] - im * si[j];
      xi[i * n + j] = re * si[j] + im * sr[j];
    }
  }
}

double identity_deviation(std::size_t n, const double* xr, const double* xi, double sign) {
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double target = i == j ? sign : 0.0;
      dev = std::max({dev, std::abs(xr[i * n + j] - target), std::abs(xi[i * n + j])});
    }
  }
  return dev;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels table{"scalar", matmul, scale_columns, identity_deviation};
  return table;
}

}  // namespace wzw::simd
