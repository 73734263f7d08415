#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "wzw/wzwrep.hpp"

using namespace wzw;

namespace {

using cd = std::complex<double>;

// Generators straight from the sine and phase formulas, in doubles.
std::vector<cd> float_s(int n) {
  std::vector<cd> s;
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) {
      s.emplace_back(std::sqrt(2.0 / n) * std::sin(std::numbers::pi * a * b / n), 0.0);
    }
  }
  return s;
}

cd float_t_entry(int n, int a) {
  return std::polar(1.0, 2.0 * std::numbers::pi * (a * a / (4.0 * n) - 1.0 / 8.0));
}

double max_diff(const RepMatrix& m, const std::vector<cd>& ref) {
  const auto e = m.embed();
  double d = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    d = std::max(d, std::abs(e[i] - ref[i]));
  }
  return d;
}

// Product of generator images by plain matrix multiplication.
RepMatrix naive_word(const STWord& w, int n) {
  const RepMatrix s = rho_S(n), t = rho_T(n);
  auto tpow = [&](const Integer& k) { return t.power(mod(k, LevelData::from_n(n).N)); };
  RepMatrix out = tpow(w.exponents().front());
  for (std::size_t i = 1; i < w.exponents().size(); ++i) {
    out = out * s * tpow(w.exponents()[i]);
  }
  return w.negated() ? out * s * s : out;
}

}  // namespace

TEST_CASE("level data") {
  CHECK(LevelData::from_level(1).N == 24);
  CHECK(LevelData::from_level(2).N == 16);
  CHECK(LevelData::from_n(7).N == 56);
  CHECK(LevelData::from_n(4).M == 32);
  CHECK_THROWS_AS(LevelData::from_n(2), PreconditionError);
}

TEST_CASE("generators agree with the float formulas") {
  for (int n = 3; n <= 12; ++n) {
    CHECK(max_diff(rho_S(n), float_s(n)) < 1e-12);
    const auto t = rho_T(n).embed();
    for (int a = 1; a < n; ++a) {
      CHECK(std::abs(t[(a - 1) * (n - 1) + (a - 1)] - float_t_entry(n, a)) < 1e-12);
    }
  }
}

TEST_CASE("S at n = 3 and n = 4") {
  const Cyclotomic h = sqrt_int(2, 24) * Rational(1, 2);  // 1/sqrt(2)
  const RepMatrix s = rho_S(3);
  CHECK(s(0, 0) == h);
  CHECK(s(0, 1) == h);
  CHECK(s(1, 0) == h);
  CHECK(s(1, 1) == -h);
  CHECK(rho_S(4)(1, 1).is_zero());
}

TEST_CASE("generator relations and unitarity") {
  for (int n = 3; n <= 12; ++n) {
    const RepMatrix s = rho_S(n), t = rho_T(n);
    CHECK((s * s).is_identity());
    const RepMatrix st = s * t;
    CHECK(st * st * st == s * s);
    CHECK(s == s.transpose());
    CHECK(s == s.galois(8 * n - 1));  // real
    CHECK((t * t.conj_transpose()).is_identity());
    CHECK((s * s.conj_transpose()).is_identity());
    // order of T is exactly N
    const std::int64_t N = LevelData::from_n(n).N;
    CHECK(t.power(N).is_identity());
    for (auto [p, e] : factorize(N)) {
      (void)e;
      CHECK_FALSE(t.power(N / p).is_identity());
    }
  }
}

TEST_CASE("T at n = 3 carries the character exponents") {
  const RepMatrix t = rho_T(3);
  CHECK(t(0, 0) == Cyclotomic::root_of_unity(24, -1));
  CHECK(t(1, 1) == Cyclotomic::root_of_unity(24, 5));
}

TEST_CASE("evaluate_word against plain matrix products") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-40, 40);
  for (int n : {3, 4, 5, 6, 7}) {
    CHECK(evaluate_word(STWord(), n).is_identity());
    CHECK(evaluate_word(STWord::S() * STWord::S(), n).is_identity());
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Integer> e;
      for (int k = 0; k < 1 + trial % 5; ++k) {
        e.emplace_back(dist(rng));
      }
      const STWord w(e, trial % 3 == 0);
      const RepMatrix expected = naive_word(w, n);
      CHECK(evaluate_word(w, n) == expected);
      for (int a = 1; a < n; ++a) {
        const auto row = evaluate_word_row(w, n, a);
        for (int b = 0; b < n - 1; ++b) {
          CHECK(row[b] == expected(a - 1, b));
        }
      }
    }
  }
}

TEST_CASE("gauss sums") {
  const Cyclotomic two_one_plus_i =
      (Cyclotomic::one(4) + Cyclotomic::root_of_unity(4, 1)) * Rational(2);
  CHECK(gauss_sum(1, 4) == two_one_plus_i);
  CHECK(gauss_sum(0, 17) == Cyclotomic(17L, 17));
  CHECK(gauss_sum_closed(1, 1) == two_one_plus_i);
  // S(1, 3) = i sqrt(3)
  CHECK(gauss_sum(1, 3) == Cyclotomic::root_of_unity(12, 3) * sqrt_int(3, 12));
  for (int n : {3, 5, 7, 9, 11}) {
    for (std::int64_t c = -4 * n; c < 4 * n; ++c) {
      if (gcd(c, 2 * n) == 1) {
        CHECK(gauss_sum_closed(c, n) == gauss_sum(c, 4 * n));
      }
    }
  }
  // direct complex summation as an independent check
  for (std::int64_t N : {5, 8, 12, 20}) {
    for (std::int64_t c = 0; c < N; ++c) {
      cd sum = 0.0;
      for (std::int64_t b = 0; b < N; ++b) {
        sum += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(c * b * b % N) / N);
      }
      CHECK(std::abs(gauss_sum(c, N).embed() - sum) < 1e-9);
    }
  }
  CHECK_THROWS_AS(gauss_sum_closed(3, 9), PreconditionError);
}

TEST_CASE("closed forms equal the word oracle on the whole group, n = 3 and n = 4") {
  for (int n : {3, 4}) {
    const LevelData lv = LevelData::from_n(n);
    int mismatches = 0;
    for_each_element(lv.N, [&](const ResidueMatrix& r) {
      const RepMatrix word = rho_word(r, n);
      if (!(rho_closed(r, n) == word)) {
        ++mismatches;
      }
      if (gcd(r.C, lv.N) == 1 && !(rho_theorem1(r, n) == word)) {
        ++mismatches;
      }
    });
    CHECK(mismatches == 0);
  }
}

TEST_CASE("each closed case where it applies, n = 5") {
  const int n = 5;
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    const ResidueMatrix r = random_residue_matrix(40, rng);
    const RepMatrix word = rho_word(r, n);
    if (gcd(r.C, 2 * n) == 1) {
      CHECK(rho_coprime_c(r, n) == word);
      CHECK(rho_legendre(r, n) == word);
    }
    if (gcd(r.D, 2 * n) == 1) {
      CHECK(rho_coprime_d(r, n) == word);
    }
  }
  CHECK(rho_coprime_c(ResidueMatrix::S(40), n) == rho_S(n));
  CHECK(rho_theorem1(ResidueMatrix(1, 0, 1, 1, 40), n) ==
        evaluate_word(decompose(UnimodularMatrix(1, 0, 1, 1)), n));
  CHECK_THROWS_AS(rho_coprime_c(ResidueMatrix::T(40), n), PreconditionError);
  CHECK_THROWS_AS(rho_theorem1(ResidueMatrix::T(40), n), PreconditionError);
}

TEST_CASE("triangular case, n = 3, all upper-triangular matrices") {
  for (std::int64_t a = 1; a < 24; ++a) {
    if (gcd(a, 24) != 1) {
      continue;
    }
    for (std::int64_t b = 0; b < 24; ++b) {
      const ResidueMatrix r(a, b, 0, inverse_mod(a, 24), 24);
      CHECK(closed_case(r, 3) == ClosedCase::triangular);
      CHECK(rho_triangular(r, 3) == rho_word(r, 3));
    }
  }
}

TEST_CASE("dispatch") {
  CHECK(closed_case(ResidueMatrix::S(24), 3) == ClosedCase::legendre);
  CHECK(closed_case(ResidueMatrix::S(16), 4) == ClosedCase::coprime_c);
  CHECK(closed_case(ResidueMatrix::T(24), 3) == ClosedCase::triangular);
  CHECK(closed_case(ResidueMatrix(1, 0, 2, 1, 24), 3) == ClosedCase::coprime_d);
  CHECK(closed_case(ResidueMatrix(1, 1, 2, 3, 24), 3) == ClosedCase::fallback);
}

TEST_CASE("g table and parity") {
  CHECK(g_table(1, 5) == 3);
  CHECK(g_table(-1, 5) == 1);
  CHECK(g_table(-1, 3) == -3);
  for (int n : {3, 5, 7}) {
    CHECK(g_parity_check(n, 50, 42));
  }
  CHECK_THROWS_AS(g_parity_check(4), PreconditionError);
}

TEST_CASE("random residue matrices cover the group uniformly enough") {
  std::mt19937_64 rng(1);
  std::vector<int> counts(8 * 8, 0);
  for (int i = 0; i < 4000; ++i) {
    const ResidueMatrix r = random_residue_matrix(8, rng);
    ++counts[r.C * 8 + r.D];
  }
  // 48 primitive bottom rows mod 8, about 83 hits each
  int rows = 0;
  for (int c : counts) {
    if (c > 0) {
      ++rows;
      CHECK(c > 40);
    }
  }
  CHECK(rows == 48);
}
