#pragma once

// 2x2 unimodular matrices over Z and Z/NZ: S,T word decomposition, lifting
// residue matrices to SL2(Z), CRT idempotents with their local generators,
// and enumeration of SL2(Z/NZ).

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wzw/numtheory.hpp"

namespace wzw {

/// An element of SL2(Z). Construction checks ad - bc = 1.
struct UnimodularMatrix {
  Integer a, b, c, d;

  UnimodularMatrix();
  UnimodularMatrix(Integer a_, Integer b_, Integer c_, Integer d_);

  static UnimodularMatrix identity() { return {}; }
  static UnimodularMatrix S() { return {0, -1, 1, 0}; }
  static UnimodularMatrix T(const Integer& k = 1) { return {1, k, 0, 1}; }

  friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y);
  UnimodularMatrix operator-() const;
  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

  std::string to_string() const;
};

/// An element of SL2(Z/NZ) with residues normalized to [0, N).
struct ResidueMatrix {
  std::int64_t A = 1, B = 0, C = 0, D = 1;
  std::int64_t N = 1;

  ResidueMatrix() = default;
  /// Reduces the entries modulo N and checks AD - BC = 1 mod N.
  ResidueMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t n);

  static ResidueMatrix identity(std::int64_t n) { return {1, 0, 0, 1, n}; }
  static ResidueMatrix S(std::int64_t n) { return {0, -1, 1, 0, n}; }
  static ResidueMatrix T(std::int64_t n, std::int64_t k = 1) { return {1, k, 0, 1, n}; }
  static ResidueMatrix reduce(const UnimodularMatrix& m, std::int64_t n);

  friend ResidueMatrix operator*(const ResidueMatrix& x, const ResidueMatrix& y);
  ResidueMatrix operator-() const { return {-A, -B, -C, -D, N}; }
  ResidueMatrix inverse() const { return {D, -B, -C, A, N}; }
  ResidueMatrix power(std::int64_t k) const;
  bool is_identity() const { return A == 1 % N && B == 0 && C == 0 && D == 1 % N; }

  /// Lexicographically smaller of {M, -M}: canonical representative in SL2/+-1.
  ResidueMatrix canonical_pm() const;

  friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;
  friend auto operator<=>(const ResidueMatrix&, const ResidueMatrix&) = default;

  std::string to_string() const;
};

/// T^{t0} S T^{t1} S ... S T^{tr}, optionally negated. exponents() has one
/// more entry than the number of S letters.
class STWord {
 public:
  STWord() : exponents_{Integer(0)} {}
  explicit STWord(std::vector<Integer> exponents, bool negated = false);

  static STWord S() { return STWord({Integer(0), Integer(0)}); }
  static STWord T(const Integer& k) { return STWord({k}); }

  const std::vector<Integer>& exponents() const { return exponents_; }
  bool negated() const { return negated_; }
  std::size_t s_count() const { return exponents_.size() - 1; }

  /// Concatenation (word product).
  friend STWord operator*(const STWord& x, const STWord& y);
  STWord operator-() const { return STWord(exponents_, !negated_); }

  /// Product of the letters in SL2(Z).
  UnimodularMatrix evaluate() const;
  ResidueMatrix evaluate_mod(std::int64_t n) const;

  /// e.g. "T^3 S T^-1 S"; "1" for the empty word, leading "-" when negated.
  std::string to_string() const;

  friend bool operator==(const STWord&, const STWord&) = default;

 private:
  std::vector<Integer> exponents_;
  bool negated_ = false;
};

/// Euclidean decomposition on the bottom row. The result contains only S and
/// T powers (no global sign); -1 is written as S S.
STWord decompose(const UnimodularMatrix& m);

/// Lift to SL2(Z). salt selects among distinct valid lifts (salt = 0 is the
/// default): c = C + salt*N ((salt+1)*N when C = 0), d = D + kN with the least
/// k >= 0 making gcd(c, d) = 1, and then |a| <= (N+1)|c|, |b| <= (N+1)|d|.
UnimodularMatrix lift(const ResidueMatrix& r, unsigned salt = 0);

struct IdempotentSystem {
  std::int64_t N = 1;
  std::vector<std::int64_t> primes;        // p_i
  std::vector<std::int64_t> factors;       // q_i = p_i^e_i
  std::vector<std::int64_t> idempotents;   // c_i
};

/// Canonical CRT decomposition 1 = sum c_i mod N, factors ordered by prime.
IdempotentSystem idempotents(std::int64_t n);

struct LocalGenerators {
  STWord T;  // T^{c_i}
  STWord S;  // T^{1-c_i} S T^{1-c_i} S T^{1-c_i} S^{-1}
};

LocalGenerators local_generators(std::int64_t n, std::size_t factor_index);

/// |SL2(Z/NZ)| = N^3 prod_{p | N} (1 - 1/p^2).
std::int64_t sl2_order(std::int64_t n);

inline constexpr std::int64_t kDefaultEnumerationBound = 100;

/// Bottom rows (C, D) with gcd(C, D, N) = 1, lexicographic.
std::vector<std::pair<std::int64_t, std::int64_t>> bottom_rows(std::int64_t n);

/// All N matrices of SL2(Z/NZ) with the given primitive bottom row.
void for_each_completion(std::int64_t n, std::int64_t c, std::int64_t d,
                         const std::function<void(const ResidueMatrix&)>& fn);

/// Visits every element of SL2(Z/NZ) once; throws BoundExceeded if N > bound.
void for_each_element(std::int64_t n, const std::function<void(const ResidueMatrix&)>& fn,
                      std::int64_t bound = kDefaultEnumerationBound);

std::vector<ResidueMatrix> enumerate_group(std::int64_t n,
                                           std::int64_t bound = kDefaultEnumerationBound);

/// Parses "[[a,b],[c,d]]" (whitespace allowed). Does not check the determinant.
std::array<Integer, 4> parse_matrix_entries(std::string_view text);
UnimodularMatrix parse_matrix(std::string_view text);

}  // namespace wzw
