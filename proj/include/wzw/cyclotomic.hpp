#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_M).
//
// An element of order M is stored in the power basis 1, z, ..., z^(phi(M)-1)
// of Q(z) = Q[x] / Phi_M(x), with integer numerators over one positive common
// denominator. The numerators and the denominator are kept coprime, so two
// elements of the same order are equal iff their stored data are identical.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wzw/numtheory.hpp"

namespace wzw {

using ComplexApprox = std::complex<double>;

namespace detail {
struct OrderData;
std::shared_ptr<const OrderData> order_data(std::uint32_t order);
}  // namespace detail

/// Integer coefficients of the M-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t order);

class Cyclotomic {
 public:
  /// Zero of Q(zeta_1) = Q.
  Cyclotomic();
  /// The rational q viewed as an element of order M.
  explicit Cyclotomic(const Rational& q, std::uint32_t order = 1);
  explicit Cyclotomic(long q, std::uint32_t order = 1) : Cyclotomic(Rational(q), order) {}

  static Cyclotomic zero(std::uint32_t order) { return Cyclotomic(Rational(0), order); }
  static Cyclotomic one(std::uint32_t order) { return Cyclotomic(Rational(1), order); }

  /// zeta_M^k = e(k / M).
  static Cyclotomic root_of_unity(std::uint32_t order, std::int64_t k);

  /// Builds sum_k coeffs[k] * zeta_M^k for a vector of any length (indices
  /// are read modulo M).
  static Cyclotomic from_powers(std::uint32_t order, std::span<const Integer> coeffs,
                                const Integer& denominator = Integer(1));

  std::uint32_t order() const { return order_; }
  /// phi(order): the length of the coefficient vector.
  std::size_t degree() const { return num_.size(); }

  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }
  Rational coeff(std::size_t j) const;
  std::vector<Rational> coeffs() const;

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws PreconditionError if the element is irrational.
  Rational to_rational() const;

  /// Same element re-expressed at order M, which must be a multiple of order().
  Cyclotomic promoted(std::uint32_t order) const;
  /// this * zeta_M^k, M = order().
  Cyclotomic times_root(std::int64_t k) const;
  /// Field automorphism zeta_M -> zeta_M^L, gcd(L, M) = 1.
  Cyclotomic galois(std::int64_t L) const;
  /// Complex conjugate, i.e. galois(M - 1).
  Cyclotomic conj() const { return galois(static_cast<std::int64_t>(order_) - 1); }

  /// Evaluation at exp(2 pi i / M).
  ComplexApprox embed() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& q);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend Cyclotomic operator*(Cyclotomic lhs, const Rational& q) { return lhs *= q; }
  friend Cyclotomic operator*(const Rational& q, Cyclotomic rhs) { return rhs *= q; }

  /// Equality after promotion to the lcm of both orders.
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);

  /// Human-readable form, e.g. "1/2*z^3 - z^5 (z = zeta_24)".
  std::string to_string() const;

 private:
  friend class CyclotomicAccumulator;
  Cyclotomic(std::uint32_t order, std::vector<Integer> num, Integer den);
  // Content-preserving maps (root multiplication, Galois) skip normalization.
  struct Reduced {};
  Cyclotomic(std::uint32_t order, std::vector<Integer> num, Integer den, Reduced)
      : order_(order), num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  std::uint32_t order_;
  std::vector<Integer> num_;
  Integer den_;
};

inline Cyclotomic root_of_unity(std::uint32_t order, std::int64_t k) {
  return Cyclotomic::root_of_unity(order, k);
}
inline Cyclotomic galois(std::int64_t L, const Cyclotomic& x) { return x.galois(L); }
inline ComplexApprox embed(const Cyclotomic& x) { return x.embed(); }

/// Positive square root of n as an element of order M, 4n | M. Built from
/// the quadratic Gauss sum: sum_{b mod 4n} e(b^2 / 4n) = 2 sqrt(n) (1 + i).
Cyclotomic sqrt_int(std::uint64_t n, std::uint32_t order);

/// Collects sums of the form sum_j c_j * x_j * zeta_M^{k_j} in an unreduced
/// length-M buffer and reduces modulo Phi_M once, in result().
class CyclotomicAccumulator {
 public:
  explicit CyclotomicAccumulator(std::uint32_t order);

  /// += sign * x * zeta_M^k; x must have order dividing M.
  void add(const Cyclotomic& x, std::int64_t k = 0, int sign = 1);
  /// += c * zeta_M^k for an integer c.
  void add_root(std::int64_t k, long c = 1);

  Cyclotomic result() const;
  void clear();

 private:
  void rescale_to(const Integer& den);

  std::uint32_t order_;
  std::shared_ptr<const detail::OrderData> data_;
  std::vector<Integer> buf_;
  Integer den_;
};

}  // namespace wzw
