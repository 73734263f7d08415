#include "wzw/float_rep.hpp"

#include <cmath>
#include <numbers>

#include "wzw/simd/kernels.hpp"

namespace wzw {

ComplexMatrix ComplexMatrix::identity(std::size_t size) {
  ComplexMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) {
    m.re[i * size + i] = 1.0;
  }
  return m;
}

ComplexMatrix ComplexMatrix::from(const RepMatrix& m) {
  ComplexMatrix out(m.dim());
  const auto values = m.embed();
  for (std::size_t k = 0; k < values.size(); ++k) {
    out.re[k] = values[k].real();
    out.im[k] = values[k].imag();
  }
  return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.n == b.n, "matrix dimensions differ");
  ComplexMatrix c(a.n);
  simd::active_kernels().matmul(a.n, a.re.data(), a.im.data(), b.re.data(), b.im.data(),
                                c.re.data(), c.im.data());
  return c;
}

double identity_deviation(const ComplexMatrix& m, double sign) {
  return simd::active_kernels().identity_deviation(m.n, m.re.data(), m.im.data(), sign);
}

FloatRep::FloatRep(int n)
    : n_(n),
      dim_(static_cast<std::size_t>(n - 1)),
      M_(8 * static_cast<std::int64_t>(n)),
      s_(dim_) {
  require(n >= 3, "FloatRep: n must be at least 3");
  cos_.resize(M_);
  sin_.resize(M_);
  for (std::int64_t k = 0; k < M_; ++k) {
    const double x = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(M_);
    cos_[k] = std::cos(x);
    sin_[k] = std::sin(x);
  }
  const double scale = std::sqrt(2.0 / n);
  for (std::size_t a = 1; a <= dim_; ++a) {
    for (std::size_t b = 1; b <= dim_; ++b) {
      s_.re[(a - 1) * dim_ + (b - 1)] =
          scale * std::sin(std::numbers::pi * static_cast<double>(a * b) / n);
    }
  }
}

void FloatRep::apply_t(ComplexMatrix& x, const Integer& t, std::vector<double>& sr,
                       std::vector<double>& si) const {
  const std::int64_t tm = mod(t, M_);
  if (tm == 0) {
    return;
  }
  for (std::size_t g = 1; g <= dim_; ++g) {
    const auto gi = static_cast<std::int64_t>(g);
    const std::int64_t e = mod(tm * (2 * gi * gi - n_), M_);
    sr[g - 1] = cos_[e];
    si[g - 1] = sin_[e];
  }
  simd::active_kernels().scale_columns(dim_, x.re.data(), x.im.data(), sr.data(), si.data());
}

ComplexMatrix FloatRep::evaluate(const STWord& w) const {
  std::vector<double> sr(dim_), si(dim_);
  ComplexMatrix x = ComplexMatrix::identity(dim_);
  const auto& exps = w.exponents();
  apply_t(x, exps.front(), sr, si);
  for (std::size_t i = 1; i < exps.size(); ++i) {
    x = multiply(x, s_);
    apply_t(x, exps[i], sr, si);
  }
  if (w.negated()) {
    x = multiply(multiply(x, s_), s_);
  }
  return x;
}

ComplexMatrix FloatRep::rho(const ResidueMatrix& r) const {
  return evaluate(decompose(lift(r)));
}

}  // namespace wzw
