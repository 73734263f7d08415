#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "wzw/cyclotomic.hpp"

using namespace wzw;

namespace {

std::complex<double> zeta(std::uint32_t m, std::int64_t k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / m);
}

Cyclotomic random_element(std::uint32_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-5, 5);
  std::vector<Integer> c(m);
  for (auto& x : c) {
    x = dist(rng);
  }
  return Cyclotomic::from_powers(m, c, Integer(1 + std::abs(dist(rng))));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  const auto p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);  // the first coefficient outside {-1, 0, 1}
}

TEST_CASE("roots of unity and basic identities") {
  for (std::uint32_t m : {1u, 2u, 8u, 12u, 24u, 40u, 56u}) {
    Cyclotomic sum = Cyclotomic::zero(m);
    for (std::int64_t k = 0; k < m; ++k) {
      sum += Cyclotomic::root_of_unity(m, k);
    }
    CHECK(sum == Cyclotomic(m == 1 ? 1L : 0L, m));
    CHECK(Cyclotomic::root_of_unity(m, m) == Cyclotomic::one(m));
  }
  CHECK(Cyclotomic::root_of_unity(24, 12) == Cyclotomic(-1L, 24));
  // zeta_8 + zeta_8^7 = sqrt(2)
  const Cyclotomic s2 = Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
  CHECK(s2 * s2 == Cyclotomic(2L, 8));
  CHECK(s2 == sqrt_int(2, 8));
}

TEST_CASE("field operations agree with the complex embedding") {
  std::mt19937_64 rng(7);
  for (std::uint32_t m : {5u, 12u, 24u, 40u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Cyclotomic x = random_element(m, rng), y = random_element(m, rng);
      CHECK(std::abs((x * y).embed() - x.embed() * y.embed()) < 1e-9);
      CHECK(std::abs((x + y).embed() - (x.embed() + y.embed())) < 1e-9);
      CHECK(std::abs(x.conj().embed() - std::conj(x.embed())) < 1e-9);
      CHECK(std::abs(x.times_root(5).embed() - x.embed() * zeta(m, 5)) < 1e-9);
    }
  }
}

TEST_CASE("Galois conjugation is a ring morphism") {
  std::mt19937_64 rng(11);
  const std::uint32_t m = 24;
  for (std::int64_t L : {5, 7, 11, 13, 23}) {
    const Cyclotomic x = random_element(m, rng), y = random_element(m, rng);
    CHECK((x * y).galois(L) == x.galois(L) * y.galois(L));
    CHECK((x + y).galois(L) == x.galois(L) + y.galois(L));
    CHECK(Cyclotomic::root_of_unity(m, 1).galois(L) == Cyclotomic::root_of_unity(m, L));
  }
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(m, 1).galois(3), PreconditionError);
}

TEST_CASE("promotion and mixed-order equality") {
  const Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(i4 == Cyclotomic::root_of_unity(24, 6));
  CHECK(i4.promoted(40) == Cyclotomic::root_of_unity(40, 10));
  CHECK(i4 * Cyclotomic::root_of_unity(3, 1) == Cyclotomic::root_of_unity(12, 7));
}

TEST_CASE("square roots of integers") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const auto M = static_cast<std::uint32_t>(8 * n);
    const Cyclotomic r = sqrt_int(n, M);
    CHECK(r * r == Cyclotomic(static_cast<long>(n), M));
    CHECK(std::abs(r.embed() - std::sqrt(static_cast<double>(n))) < 1e-12);
  }
  CHECK_THROWS_AS(sqrt_int(3, 6), PreconditionError);
}

TEST_CASE("rational detection") {
  const Cyclotomic x = Cyclotomic::root_of_unity(12, 1) + Cyclotomic::root_of_unity(12, 11);
  CHECK_FALSE(x.is_rational());  // sqrt(3)
  CHECK((x * x).is_rational());
  CHECK((x * x).to_rational() == 3);
  CHECK_THROWS_AS(x.to_rational(), PreconditionError);
}

TEST_CASE("accumulator matches repeated addition") {
  std::mt19937_64 rng(3);
  const std::uint32_t m = 40;
  CyclotomicAccumulator acc(m);
  Cyclotomic ref = Cyclotomic::zero(m);
  for (int i = 0; i < 30; ++i) {
    const Cyclotomic x = random_element(m, rng);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 200) - 100;
    const int sign = (i % 3 == 0) ? -1 : 1;
    acc.add(x, k, sign);
    ref += x.times_root(k) * Rational(sign);
    acc.add_root(k, 2);
    ref += Cyclotomic::root_of_unity(m, k) * Rational(2);
  }
  CHECK(acc.result() == ref);
  acc.clear();
  CHECK(acc.result().is_zero());
}
