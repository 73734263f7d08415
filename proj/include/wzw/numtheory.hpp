#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wzw {

using Integer  = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured size bound.
class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// a/b in lowest terms. mpq_class(a, b) alone does not reduce, and GMP
// arithmetic assumes canonical operands.
inline Rational ratio(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

inline void require(bool cond, const std::string& what) {
  if (!cond) {
    throw PreconditionError(what);
  }
}

// Non-negative residue of a modulo m (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct Bezout {
  std::int64_t g, x, y;
};
Bezout extended_gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m; throws PreconditionError if gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// Jacobi symbol (a | n) for odd n > 0, any integer a. (a | 1) = 1.
int jacobi(std::int64_t a, std::int64_t n);

/// Prime factorization as (p, e) pairs, p ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_prime(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);

/// Positive divisors of n in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

// Residue of an arbitrary-precision integer modulo m > 0.
std::int64_t mod(const Integer& a, std::int64_t m);

}  // namespace wzw
