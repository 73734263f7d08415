#pragma once

// Double-precision evaluation of rho, used only to filter candidates before
// exact confirmation.

#include <complex>
#include <cstddef>
#include <vector>

#include "wzw/modgroup.hpp"
#include "wzw/wzwrep.hpp"

namespace wzw {

/// n x n complex matrix in planar row-major storage.
struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<double> re, im;

  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t size) : n(size), re(size * size, 0.0), im(size * size, 0.0) {}

  static ComplexMatrix identity(std::size_t size);
  static ComplexMatrix from(const RepMatrix& m);

  std::complex<double> at(std::size_t i, std::size_t j) const {
    return {re[i * n + j], im[i * n + j]};
  }
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
/// max(|re|, |im|) entrywise deviation of m from sign * I.
double identity_deviation(const ComplexMatrix& m, double sign = 1.0);

/// Float images of S, T and of residue matrices (through the word form) for
/// one level. Immutable after construction, so it can be shared by workers.
class FloatRep {
 public:
  explicit FloatRep(int n);

  int n() const { return n_; }
  const ComplexMatrix& S() const { return s_; }

  ComplexMatrix evaluate(const STWord& w) const;
  ComplexMatrix rho(const ResidueMatrix& r) const;

 private:
  void apply_t(ComplexMatrix& x, const Integer& t, std::vector<double>& sr,
               std::vector<double>& si) const;

  int n_;
  std::size_t dim_;
  std::int64_t M_;
  ComplexMatrix s_;
  std::vector<double> cos_, sin_;  // e(k / 8n)
};

}  // namespace wzw
