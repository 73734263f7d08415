#pragma once

// The representation rho of SL2(Z/NZ) carried by the level-k affine sl2
// characters, n = k + 2, dimension n - 1:
//
//   rho(S)_{ab} = sqrt(2/n) sin(pi a b / n),
//   rho(T)_{ab} = delta_{ab} e(a^2 / 4n - 1/8),     a, b in 1..n-1.
//
// All matrices are exact over Q(zeta_{8n}). evaluate_word() is the reference
// evaluation; every closed form in this header must agree with it exactly.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "wzw/cyclotomic.hpp"
#include "wzw/modgroup.hpp"

namespace wzw {

struct LevelData {
  int k = 1;
  int n = 3;
  int dim = 2;
  std::int64_t N = 24;      // conductor: order of rho(T)
  std::uint32_t M = 24;     // working cyclotomic order, 8n

  static LevelData from_level(int level);
  static LevelData from_n(int n);
};

class RepMatrix {
 public:
  RepMatrix() = default;
  RepMatrix(std::size_t dim, std::uint32_t order);

  static RepMatrix identity(std::size_t dim, std::uint32_t order);

  std::size_t dim() const { return dim_; }
  std::uint32_t order() const { return order_; }

  // 0-based indices; label alpha corresponds to index alpha - 1.
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
  Cyclotomic& operator()(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
  std::span<const Cyclotomic> entries() const { return e_; }

  friend RepMatrix operator*(const RepMatrix& x, const RepMatrix& y);
  RepMatrix operator-() const;
  RepMatrix& operator*=(const Rational& q);
  friend bool operator==(const RepMatrix& x, const RepMatrix& y);

  bool is_identity() const;
  bool is_scalar_identity(int sign) const;
  RepMatrix transpose() const;
  /// Entrywise Galois conjugation zeta -> zeta^L.
  RepMatrix galois(std::int64_t L) const;
  RepMatrix conj_transpose() const { return galois(static_cast<std::int64_t>(order_) - 1).transpose(); }
  RepMatrix power(std::int64_t k) const;

  /// Row-major complex embedding.
  std::vector<ComplexApprox> embed() const;

 private:
  std::size_t dim_ = 0;
  std::uint32_t order_ = 1;
  std::vector<Cyclotomic> e_;
};

RepMatrix rho_S(int n);
RepMatrix rho_T(int n);

/// sqrt(2/n) / (2i): rho(S) = kappa * (zeta_{2n}^{ab} - zeta_{2n}^{-ab}).
Cyclotomic s_matrix_scale(int n);

/// Product of generator images.
RepMatrix evaluate_word(const STWord& w, int n);
/// Row alpha (1-based label) of evaluate_word(w, n).
std::vector<Cyclotomic> evaluate_word_row(const STWord& w, int n, int alpha);

/// rho(R) through lift, decompose and evaluate_word.
RepMatrix rho_word(const ResidueMatrix& r, int n, unsigned lift_salt = 0);

/// S(C, N) = sum_{b mod N} e(C b^2 / N), exact, of order N.
Cyclotomic gauss_sum(std::int64_t c, std::int64_t N);
/// S(c, 4n) = 2 (1 + i^{nc}) (c|n) S(1, n) for odd n and gcd(c, 2n) = 1.
Cyclotomic gauss_sum_closed(std::int64_t c, std::int64_t n);

enum class KernelSumBranch {
  coprime,        // gcd(C, 2n) = 1
  multiple_of_n,  // C = t n
  twice_unit,     // C = 2 G, gcd(G, 2n) = 1
};

std::string to_string(KernelSumBranch b);

/// T(a, g, C, n) = sum_{b=1}^{n-1} sin(pi a b/n) sin(pi b g/n) e(C b^2/4n) by
/// direct summation, order 8n. Requires 1 <= a, g <= n-1.
Cyclotomic kernel_sum(std::int64_t alpha, std::int64_t gamma, std::int64_t c, int n);
/// Branches whose hypotheses hold for C.
std::vector<KernelSumBranch> kernel_sum_branches(std::int64_t c, int n);
/// Closed-form value of the given branch; nullopt if its hypothesis fails.
std::optional<Cyclotomic> kernel_sum_closed(std::int64_t alpha, std::int64_t gamma, std::int64_t c,
                                            int n, KernelSumBranch branch);

enum class ClosedCase {
  coprime_c,   // gcd(C, 2n) = 1, U/V form
  legendre,    // same, n odd, Legendre-symbol form
  coprime_d,   // gcd(D, 2n) = 1, X/Y form with a kernel sum
  triangular,  // C = 0: decorated Galois permutation
  fallback,    // lift + decompose + evaluate_word
};

std::string to_string(ClosedCase c);

/// Case used by rho_closed: legendre (n odd) or coprime_c, then triangular,
/// then coprime_d, then fallback.
ClosedCase closed_case(const ResidueMatrix& r, int n);

RepMatrix rho_coprime_c(const ResidueMatrix& r, int n);
RepMatrix rho_legendre(const ResidueMatrix& r, int n);
RepMatrix rho_coprime_d(const ResidueMatrix& r, int n);
/// The +-1 in front of the permutation form is fixed against one entry of the
/// word evaluation.
RepMatrix rho_triangular(const ResidueMatrix& r, int n);
RepMatrix rho_case(const ResidueMatrix& r, int n, ClosedCase c);

RepMatrix rho_closed(const ResidueMatrix& r, int n);

/// rho(R) = sigma_{C^{-1}}(T^A S T^D), gcd(C, N) = 1.
RepMatrix rho_theorem1(const ResidueMatrix& r, int n);

enum class Path { automatic, closed, word, theorem1 };

/// automatic: theorem1 when gcd(C, N) = 1, otherwise rho_closed.
RepMatrix rho(const ResidueMatrix& r, int n, Path path = Path::automatic);

/// g(C, n) from the Legendre form: 3 if C = 1 mod 4; otherwise 1 if n = 1
/// mod 4 and -3 if n = 3 mod 4.
int g_table(std::int64_t c, int n);

/// g(C) - g(-C) + 2C = 2(n + 1) mod 8 over odd C mod 8, plus
/// rho_closed(R) = rho_closed(-R) on `samples` seeded random matrices.
bool g_parity_check(int n, int samples = 50, std::uint64_t seed = 42);

/// Uniform random element of SL2(Z/NZ).
ResidueMatrix random_residue_matrix(std::int64_t N, std::mt19937_64& rng);

}  // namespace wzw
