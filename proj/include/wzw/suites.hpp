#pragma once

// Property suites shared by the CLI (verify-all, verify-identities) and the
// test binaries. Each suite is deterministic for a fixed seed.

#include <cstdint>
#include <string>
#include <vector>

#include "wzw/modgroup.hpp"

namespace wzw {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::int64_t checked = 0;
  std::string detail;  // first failure, or a short summary
};

/// `count` seeded random elements of SL2(Z/NZ), dealt round-robin over the
/// closed-form cases that occur for n (triangular ones built directly).
std::vector<ResidueMatrix> stratified_samples(int n, int count, std::uint64_t seed);

/// rho_closed == rho_word on stratified samples.
SuiteResult suite_oracle_equivalence(int n, int samples, std::uint64_t seed);
/// rho_theorem1 == rho_word on random matrices with C invertible mod N.
SuiteResult suite_theorem1(int n, int samples, std::uint64_t seed);
/// Two different lifts give the same image.
SuiteResult suite_well_defined(int n, int samples, std::uint64_t seed);
/// sigma_L covariance for every L coprime to N.
SuiteResult suite_covariance(int n, int samples, std::uint64_t seed);
/// The sigma(S) word identity for every C coprime to N.
SuiteResult suite_bantay(int n);
/// Signed-permutation form of sigma_d(S) for every d in [1, 8n) coprime to 2n.
SuiteResult suite_sigma_perm(int n);
/// Every applicable closed branch of the kernel sum against direct summation,
/// over all a, g and C mod 4n.
SuiteResult suite_kernel_sums(int n);
/// S(1, 4n) = 2 sqrt(n)(1 + i); for odd n the closed form of S(c, 4n).
SuiteResult suite_gauss_sums(int n);
/// g-table parity rule and rho_closed(-R) = rho_closed(R); odd n.
SuiteResult suite_g_parity(int n, int samples, std::uint64_t seed);
/// Kernel enumeration: subgroup, gcd(c, 2n) != 1, orbit-stabilizer. The
/// comparison with the listed kernel elements is reported in detail but does
/// not affect `passed`.
SuiteResult suite_kernel(int n, unsigned workers, std::int64_t bound);

}  // namespace wzw
