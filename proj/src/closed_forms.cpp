#include "wzw/wzwrep.hpp"

#include <stdexcept>

namespace wzw {

namespace {

struct Setup {
  LevelData L;
  std::int64_t M;  // 8n
  std::int64_t A, B, C, D;
};

Setup setup(const ResidueMatrix& r, int n) {
  LevelData L = LevelData::from_n(n);
  require(r.N % L.N == 0, "residue modulus must be a multiple of the conductor");
  const std::int64_t M = L.M;
  // The formulas only see residues mod 8n; N | 8n and entries are taken mod N.
  return {L, M, mod(r.A, L.N), mod(r.B, L.N), mod(r.C, L.N), mod(r.D, L.N)};
}

// Entries P * (zeta^{q + s} - zeta^{q - s}), with zeta = zeta_{8n},
// s = 4 x a l and q = 2 x (A a^2 + D l^2), from 2i P e(x(A a^2 + D l^2)/4n) sin(pi x a l / n).
RepMatrix sine_form(const Setup& s, const Cyclotomic& p, std::int64_t x) {
  RepMatrix out(s.L.dim, s.L.M);
  for (std::int64_t a = 1; a <= s.L.dim; ++a) {
    for (std::int64_t l = 1; l <= s.L.dim; ++l) {
      const std::int64_t q = mod(2 * x * mod(s.A * a * a + s.D * l * l, s.M), s.M);
      const std::int64_t sn = mod(4 * x * a * l, s.M);
      out(a - 1, l - 1) = p.times_root(q + sn) - p.times_root(q - sn);
    }
  }
  return out;
}

}  // namespace

RepMatrix rho_coprime_c(const ResidueMatrix& r, int n) {
  const Setup s = setup(r, n);
  require(gcd(s.C, 2 * n) == 1, "coprime_c form needs gcd(C, 2n) = 1");
  const std::int64_t ci = inverse_mod(s.C, s.M);
  const std::int64_t u = mod((s.A + 1) * ci, s.M);
  const std::int64_t v = mod((s.D + 1) * ci, s.M);
  // (1/2n) zeta_8^{2-C-U-V} S(C, 4n) e(C'(A a^2 + D l^2)/4n) sin(pi C' a l/n);
  // sin = (.)/(2i) and 1/i = zeta^{-2n}
  const Cyclotomic p = gauss_sum(s.C, 4 * n)
                           .promoted(s.L.M)
                           .times_root(n * (2 - s.C - u - v) - 2 * n) *
                       Rational(1, 4 * n);
  return sine_form(s, p, ci);
}

RepMatrix rho_legendre(const ResidueMatrix& r, int n) {
  const Setup s = setup(r, n);
  require(n % 2 == 1, "legendre form needs odd n");
  require(gcd(s.C, 2 * n) == 1, "legendre form needs gcd(C, 2n) = 1");
  const std::int64_t ci = inverse_mod(s.C, s.M);
  const int g = g_table(s.C, n);
  // sqrt(2/n) (C|n) zeta_8^{g - (A+D+3)C} e(C'(A a^2 + D l^2)/4n) sin(pi C' a l/n)
  const Cyclotomic p = sqrt_int(static_cast<std::uint64_t>(2 * n), s.L.M)
                           .times_root(n * mod(g - (s.A + s.D + 3) * s.C, 8) - 2 * n) *
                       Rational(jacobi(s.C, n), 2 * n);
  return sine_form(s, p, ci);
}

RepMatrix rho_coprime_d(const ResidueMatrix& r, int n) {
  const Setup s = setup(r, n);
  require(gcd(s.D, 2 * n) == 1, "coprime_d form needs gcd(D, 2n) = 1");
  const std::int64_t di = inverse_mod(s.D, s.M);
  const std::int64_t x = mod(-(s.C + 1) * di, s.M);
  const std::int64_t y = mod((s.B - 1) * di, s.M);
  // (2/n)^{3/2} (1/4) zeta_8^{D-X-Y-2} S(-D, 4n) = sqrt(2n)/(2n^2) zeta_8^{...} S(-D, 4n)
  const Cyclotomic p = sqrt_int(static_cast<std::uint64_t>(2 * n), s.L.M) *
                       gauss_sum(-s.D, 4 * n).promoted(s.L.M).times_root(n * mod(s.D - x - y - 2, 8)) *
                       Rational(1, 2 * n * n);
  const std::int64_t cd = mod(-s.C * di, s.M);
  RepMatrix out(s.L.dim, s.L.M);
  for (std::int64_t a = 1; a <= s.L.dim; ++a) {
    // T(a D', l, -C D', n) depends on a D' only mod 2n up to sign
    std::int64_t ad = mod(a * di, 2 * n);
    int sign = 1;
    if (ad > n) {
      ad = 2 * n - ad;
      sign = -1;
    }
    const Cyclotomic phase = p.times_root(2 * mod(a * a * mod(s.B * di, s.M), s.M));
    for (std::int64_t l = 1; l <= s.L.dim; ++l) {
      Cyclotomic t = kernel_sum(ad, l, cd, n);
      out(a - 1, l - 1) = phase * t * Rational(sign);
    }
  }
  return out;
}

RepMatrix rho_triangular(const ResidueMatrix& r, int n) {
  const Setup s = setup(r, n);
  require(s.C == 0, "triangular form needs C = 0 mod N");
  const std::int64_t two_n = 2 * n;
  // zeta_8^{2(A-1) - AB} e(AB a^2/4n) [delta(Aa = l) - delta(Aa = -l)] mod 2n
  const std::int64_t ab = mod(s.A * s.B, s.M);
  const std::int64_t base = n * mod(2 * (s.A - 1) - ab, 8);
  RepMatrix out(s.L.dim, s.L.M);
  for (std::int64_t a = 1; a <= s.L.dim; ++a) {
    const std::int64_t img = mod(s.A * a, two_n);
    const std::int64_t e = base + 2 * ab * a * a;
    if (img < n) {
      out(a - 1, img - 1) = Cyclotomic::root_of_unity(s.L.M, e);
    } else {
      out(a - 1, two_n - img - 1) = -Cyclotomic::root_of_unity(s.L.M, e);
    }
  }
  // Overall sign from row 1 of the word evaluation.
  const auto row = evaluate_word_row(decompose(lift(r)), n, 1);
  for (std::size_t l = 0; l < row.size(); ++l) {
    const Cyclotomic& f = out(0, l);
    if (f.is_zero()) {
      continue;
    }
    if (row[l] == f) {
      return out;
    }
    if (row[l] == -f) {
      return -out;
    }
    throw std::logic_error("triangular form disagrees with the word evaluation for " +
                           r.to_string());
  }
  throw std::logic_error("triangular form has an empty first row");
}

}  // namespace wzw
