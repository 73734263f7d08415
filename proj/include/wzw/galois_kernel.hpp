#pragma once

// Galois action on rho, the kernel of rho and the structure derived from it.

#include <cstdint>
#include <vector>

#include "wzw/modgroup.hpp"
#include "wzw/wzwrep.hpp"

namespace wzw {

/// Entrywise zeta -> zeta^L; gcd(L, order) = 1.
RepMatrix sigma_on_matrix(std::int64_t L, const RepMatrix& m);

/// (A, BL; C L^{-1}, D) mod N, the matrix whose image is sigma_L(rho(r)).
ResidueMatrix covariant_matrix(const ResidueMatrix& r, std::int64_t L);

/// sigma_L(rho(r)) == rho(covariant_matrix(r, L)), exactly.
bool sigma_covariance_holds(const ResidueMatrix& r, std::int64_t L, int n);

struct SignedPermutation {
  int n = 0;
  std::vector<int> map;    // map[a - 1] = sigma_d(a)
  std::vector<int> signs;  // sign(n - <a d>_{2n})
  int global_sign = 1;     // (-2n | d)
};

/// sigma_d(S)_{ab} = (-2n|d) sign(n - <ad>_{2n}) S_{sigma_d(a), b},
/// gcd(d, 2n) = 1, d > 0.
SignedPermutation sigma_perm(std::int64_t d, int n);

/// Applies the signed row permutation (with the global sign) to m.
RepMatrix apply_rows(const SignedPermutation& p, const RepMatrix& m);

/// sigma_{C^{-1}}(rho(S)) == rho(T^{C^{-1}} S T^C S T^{C^{-1}}); gcd(C, N) = 1.
bool bantay_sigma_S_identity(std::int64_t C, int n);

/// Float filter bound on max entry deviation from the identity.
inline constexpr double kKernelFilterTolerance = 1e-6;

/// rho(r) == Id; float filter, then exact confirmation.
bool in_kernel(const ResidueMatrix& r, int n);

struct KernelReport {
  int n = 0;
  std::int64_t N = 0;
  std::int64_t group_order = 0;
  std::int64_t image_order = 0;
  std::vector<ResidueMatrix> kernel;         // sorted
  std::vector<ResidueMatrix> listed;     // sorted, opposites included
  std::vector<ResidueMatrix> coprime_slice;  // kernel elements with gcd(d, 2n) = 1
  std::vector<ResidueMatrix> missing;        // in listed, not in the slice
  std::vector<ResidueMatrix> extra;          // in the slice, not in listed
  bool matches_list = false;
  bool c_never_coprime = false;  // gcd(c, 2n) != 1 for every kernel element
  bool is_subgroup = false;      // closed under products and inverses
  std::int64_t float_candidates = 0;
};

/// Listed kernel elements with gcd(d, 2n) = 1: eight matrices mod 8n for n
/// odd, two mod 4n for n even, each with its opposite.
std::vector<ResidueMatrix> listed_kernel(int n);

/// Full kernel enumeration. workers = 0 uses the hardware concurrency.
KernelReport enumerate_kernel(int n, unsigned workers = 0,
                              std::int64_t bound = kDefaultEnumerationBound);

/// g in SL2(Z/8Z) maps to c_2 g + (1 - c_2) I mod 8n.
ResidueMatrix embed_2_factor(const ResidueMatrix& g, int n);

/// Kernel of rho restricted to the SL2(Z/8Z) factor, as canonical
/// representatives of SL2(Z/8Z)/+-1; n = 3 mod 4.
std::vector<ResidueMatrix> factor_kernel_sl2z8(int n);
/// The four classes listed for that factor kernel, canonicalized and sorted.
std::vector<ResidueMatrix> listed_factor_kernel();

/// rho(T_2)^4 == -Id with T_2 = T^{c_2}; n odd.
bool t2_fourth_power_is_minus_identity(int n);
/// rho(S_2)^2 == Id with S_2 the local S generator of the 2-factor; n = 3 mod 4.
bool s2_squared_is_identity(int n);

/// |SL2(Z/NZ)| / |Ker rho|.
std::int64_t image_order(int n, unsigned workers = 0);

/// 48 p (p^2 - 1) / 2.
std::int64_t predicted_image_order(std::int64_t p);

/// Genus (4p^3 - 3p^2 - 4p + 5) / 2 for prime p >= 7, p = 3 mod 4. The
/// printed hypothesis reads "congruent to 7 mod 4", taken here as p = 3 mod 4.
std::int64_t genus(std::int64_t p);
/// 1 + 12 p (p^2 - 1)(1/6 - 1/8p), evaluated in rationals.
Rational genus_product_form(std::int64_t p);
/// (p^2 - 1)(4p - 3)/2 + 1.
std::int64_t genus_factored_form(std::int64_t p);

/// For every prime-power factor q of N: the image of Ker rho in SL2(Z/qZ) is
/// stable under conjugation by all of SL2(Z/qZ).
bool phi2_image_is_normal(int n, unsigned workers = 0);

}  // namespace wzw
