#pragma once

// Truncated q-series with exponents in (1/D)Z, eta powers and the affine sl2
// characters chi_lambda = eta^{-3} sum_{x = lambda mod 2n} x q^{x^2/4n}.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "wzw/numtheory.hpp"

namespace wzw {

class QSeries {
 public:
  QSeries() = default;
  /// sum_j coeffs[j] q^{(offset + j)/D}, exact for j <= coeffs.size() - 1.
  QSeries(std::int64_t denominator, std::int64_t offset, std::vector<Rational> coeffs);

  /// The constant c, exact through q^{truncation}.
  static QSeries constant(const Rational& c, std::int64_t truncation);

  std::int64_t denominator() const { return den_; }
  std::int64_t offset() const { return off_; }
  /// Highest retained index j.
  std::int64_t truncation() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Coefficient of q^{num/D} (0 below the offset); num must be within the
  /// retained range.
  Rational coeff_at(std::int64_t num) const;
  /// Largest exponent numerator (in units of 1/D) known exactly.
  std::int64_t last_exact() const { return off_ + truncation(); }

  /// Same series at granularity D * f.
  QSeries refined(std::int64_t f) const;
  /// Drops everything above q^{(offset + j)/D}.
  QSeries truncated(std::int64_t j) const;
  bool is_zero() const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& c, const QSeries& a);
  QSeries pow(unsigned k) const;

  /// sum_j c_j e(tau (offset + j)/D); Im tau > 0.
  std::complex<double> evaluate(std::complex<double> tau) const;

  /// "q^{a/b} * (c0 + c1 q^{1/b} + ...)" with zero terms omitted.
  std::string to_string() const;

 private:
  std::int64_t den_ = 1;
  std::int64_t off_ = 0;
  std::vector<Rational> c_{Rational(0)};
};

/// Divisor sum sigma_1(m), m >= 1.
Integer sigma1(std::int64_t m);

/// prod_{k>=1} (1 - q^k)^{-3} through q^{truncation}.
QSeries eta_inverse_cubed(std::int64_t truncation);

/// -ln prod (1 - q^k), computed as a formal logarithm, equals
/// sum sigma_1(k) q^k / k through q^{truncation}.
bool log_eta_expansion_check(std::int64_t truncation);
/// The printed grouping q/(1-q) + sum_p q^p/p + 3/4 q^4 + q^6 + 7/8 q^8
/// agrees with sigma_1(k)/k for k <= 8.
bool log_eta_printed_grouping_check();

/// chi_{lambda} for n = k + 2 at D = 24n, through integer order `truncation`
/// beyond its leading exponent lambda^2/4n - 1/8.
QSeries character(int lambda, int n, std::int64_t truncation);

/// chi_1 chi_2 (chi_1^4 - chi_2^4) = 2 at n = 3, through q^{truncation}.
bool verify_k1_identity(std::int64_t truncation);
bool verify_k1_identity(const QSeries& chi1, const QSeries& chi2, std::int64_t truncation);
/// t chi_1^8 - 2 chi_1^4 - t^5 = 0 with t = chi_1 chi_2, through q^{truncation}.
bool verify_t_parametrization(std::int64_t truncation);
bool verify_t_parametrization(const QSeries& chi1, const QSeries& chi2, std::int64_t truncation);

std::complex<double> numeric_eval(const QSeries& s, std::complex<double> tau);

inline constexpr std::int64_t kDefaultNumericTruncation = 400;
inline constexpr double kDefaultSTransformTolerance = 1e-8;

/// max_a |chi_a(-1/tau) - sum_b S_ab chi_b(tau)| for the level n - 2.
/// s_sign = -1 flips the sign of S (negative control).
double s_transform_deviation(int n, std::complex<double> tau, std::int64_t truncation,
                             int s_sign = 1);
bool s_transform_check(int n, std::complex<double> tau,
                       std::int64_t truncation = kDefaultNumericTruncation,
                       double tol = kDefaultSTransformTolerance);

}  // namespace wzw
