#include <doctest.h>

#include <random>
#include <set>

#include "wzw/galois_kernel.hpp"

using namespace wzw;

TEST_CASE("sigma on matrices") {
  const RepMatrix s = rho_S(5);
  CHECK(sigma_on_matrix(1, s) == s);
  CHECK_THROWS_AS(sigma_on_matrix(2, s), PreconditionError);
  for (std::int64_t L = 1; L < 40; ++L) {
    if (gcd(L, 40) == 1) {
      CHECK(sigma_on_matrix(L, rho_T(5)) == rho_T(5).power(L));
    }
  }
}

TEST_CASE("covariance") {
  CHECK(covariant_matrix(ResidueMatrix(1, 2, 3, 7, 40), 3) == ResidueMatrix(1, 6, 1, 7, 40));
  // sigma_3(rho(S)) at n = 7
  CHECK(sigma_covariance_holds(ResidueMatrix::S(56), 3, 7));
  CHECK(sigma_on_matrix(3, rho_S(7)) == rho_closed(ResidueMatrix(0, -3, inverse_mod(3, 56), 0, 56), 7));
  std::mt19937_64 rng(29);
  for (int n = 3; n <= 6; ++n) {
    const LevelData lv = LevelData::from_n(n);
    for (int i = 0; i < 4; ++i) {
      const ResidueMatrix r = random_residue_matrix(lv.N, rng);
      for (std::int64_t L = 1; L < lv.M; L += 2) {
        if (gcd(L, lv.M) == 1) {
          CHECK(sigma_covariance_holds(r, L, n));
        }
      }
    }
  }
}

TEST_CASE("signed permutation form of sigma_d(S)") {
  const SignedPermutation id = sigma_perm(1, 5);
  CHECK(id.map == std::vector<int>{1, 2, 3, 4});
  CHECK(id.signs == std::vector<int>{1, 1, 1, 1});
  const SignedPermutation p = sigma_perm(3, 5);
  CHECK(p.map == std::vector<int>{3, 4, 1, 2});
  CHECK(p.signs == std::vector<int>{1, -1, -1, 1});
  for (int n : {3, 4, 5, 7}) {
    const RepMatrix s = rho_S(n);
    for (std::int64_t d = 1; d < 8 * n; ++d) {
      if (gcd(d, 2 * n) == 1) {
        CHECK(apply_rows(sigma_perm(d, n), s) == sigma_on_matrix(d, s));
      }
    }
  }
  CHECK_THROWS_AS(sigma_perm(2, 5), PreconditionError);
}

TEST_CASE("sigma(S) word identity") {
  CHECK(bantay_sigma_S_identity(1, 3));
  for (int n : {3, 4}) {
    const std::int64_t N = LevelData::from_n(n).N;
    for (std::int64_t c = 1; c < N; ++c) {
      if (gcd(c, N) == 1) {
        CHECK(bantay_sigma_S_identity(c, n));
      }
    }
  }
}

TEST_CASE("kernel membership") {
  CHECK(in_kernel(ResidueMatrix::identity(24), 3));
  for (int n = 3; n <= 12; ++n) {
    const std::int64_t N = LevelData::from_n(n).N;
    CHECK(in_kernel(-ResidueMatrix::identity(N), n));
    CHECK_FALSE(in_kernel(ResidueMatrix::T(N), n));
  }
}

TEST_CASE("kernel enumeration, n = 3") {
  const KernelReport rep = enumerate_kernel(3, 1);
  CHECK(rep.kernel.size() == 64);
  CHECK(rep.image_order * 64 == 9216);
  CHECK(rep.is_subgroup);
  CHECK(rep.c_never_coprime);
  CHECK(rep.float_candidates == 64);
}

TEST_CASE("kernel enumeration, n = 5 and the listed elements") {
  const KernelReport rep = enumerate_kernel(5, 2);
  CHECK(rep.kernel.size() == 16);
  CHECK(rep.matches_list);
  CHECK(rep.listed.size() == 16);
  const std::set<ResidueMatrix> k(rep.kernel.begin(), rep.kernel.end());
  CHECK(k.count(ResidueMatrix(1, 20, 20, 1, 40)) == 1);
  CHECK(k.count(ResidueMatrix(11, 0, 0, 11, 40)) == 1);
}

TEST_CASE("kernel enumeration, n = 4 contains the listed elements") {
  const KernelReport rep = enumerate_kernel(4);
  const std::set<ResidueMatrix> k(rep.kernel.begin(), rep.kernel.end());
  for (const auto& m : rep.listed) {
    CHECK(k.count(m) == 1);
  }
  CHECK(k.count(ResidueMatrix(9, 0, 0, 9, 16)) == 1);
  CHECK(rep.missing.empty());
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(enumerate_kernel(13, 1, 100), BoundExceeded);
}

TEST_CASE("normality of the factor projections, n = 3") {
  CHECK(phi2_image_is_normal(3));
  CHECK_THROWS_AS(phi2_image_is_normal(4), PreconditionError);
}

TEST_CASE("2-factor structure") {
  CHECK(embed_2_factor(ResidueMatrix::identity(8), 7).is_identity());
  CHECK(factor_kernel_sl2z8(7) == listed_factor_kernel());
  CHECK(listed_factor_kernel().size() == 4);
  CHECK(t2_fourth_power_is_minus_identity(3));
  CHECK(t2_fourth_power_is_minus_identity(5));
  CHECK(t2_fourth_power_is_minus_identity(7));
  CHECK(s2_squared_is_identity(7));
  CHECK_THROWS_AS(factor_kernel_sl2z8(5), PreconditionError);
}

TEST_CASE("genus") {
  CHECK(genus(7) == 601);
  CHECK(genus_factored_form(7) == 601);
  CHECK(genus_product_form(7) == 601);
  for (std::int64_t p : {7, 11, 19, 23, 31}) {
    CHECK(genus_product_form(p) == genus(p));
    CHECK(genus_factored_form(p) == genus(p));
  }
  CHECK_THROWS_AS(genus(13), PreconditionError);
  CHECK_THROWS_AS(genus(3), PreconditionError);
  CHECK_THROWS_AS(genus(15), PreconditionError);
  CHECK(predicted_image_order(7) == 8064);
}
