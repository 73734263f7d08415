#include "wzw/wzwrep.hpp"

#include <map>
#include <mutex>

namespace wzw {

LevelData LevelData::from_n(int n) {
  require(n >= 3, "level data: n = k + 2 must be at least 3");
  LevelData L;
  L.n = n;
  L.k = n - 2;
  L.dim = n - 1;
  L.N = n % 2 == 0 ? 4 * n : 8 * n;
  L.M = static_cast<std::uint32_t>(8 * n);
  return L;
}

LevelData LevelData::from_level(int level) {
  require(level >= 1, "level must be at least 1");
  return from_n(level + 2);
}

RepMatrix::RepMatrix(std::size_t dim, std::uint32_t order)
    : dim_(dim), order_(order), e_(dim * dim, Cyclotomic::zero(order)) {}

RepMatrix RepMatrix::identity(std::size_t dim, std::uint32_t order) {
  RepMatrix m(dim, order);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = Cyclotomic::one(order);
  }
  return m;
}

RepMatrix operator*(const RepMatrix& x, const RepMatrix& y) {
  require(x.dim_ == y.dim_, "matrix dimensions differ");
  const std::uint32_t order = static_cast<std::uint32_t>(lcm(x.order_, y.order_));
  RepMatrix out(x.dim_, order);
  for (std::size_t i = 0; i < x.dim_; ++i) {
    for (std::size_t j = 0; j < x.dim_; ++j) {
      Cyclotomic acc = Cyclotomic::zero(order);
      for (std::size_t k = 0; k < x.dim_; ++k) {
        if (!x(i, k).is_zero() && !y(k, j).is_zero()) {
          acc += x(i, k) * y(k, j);
        }
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

RepMatrix RepMatrix::operator-() const {
  RepMatrix out = *this;
  for (auto& v : out.e_) {
    v = -v;
  }
  return out;
}

RepMatrix& RepMatrix::operator*=(const Rational& q) {
  for (auto& v : e_) {
    v *= q;
  }
  return *this;
}

bool operator==(const RepMatrix& x, const RepMatrix& y) {
  if (x.dim_ != y.dim_) {
    return false;
  }
  for (std::size_t i = 0; i < x.e_.size(); ++i) {
    if (!(x.e_[i] == y.e_[i])) {
      return false;
    }
  }
  return true;
}

bool RepMatrix::is_scalar_identity(int sign) const {
  const Cyclotomic diag(static_cast<long>(sign), order_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const Cyclotomic& v = (*this)(i, j);
      if (i == j ? !(v == diag) : !v.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool RepMatrix::is_identity() const { return is_scalar_identity(1); }

RepMatrix RepMatrix::transpose() const {
  RepMatrix out(dim_, order_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      out(j, i) = (*this)(i, j);
    }
  }
  return out;
}

RepMatrix RepMatrix::galois(std::int64_t L) const {
  RepMatrix out = *this;
  for (auto& v : out.e_) {
    v = v.galois(L);
  }
  return out;
}

RepMatrix RepMatrix::power(std::int64_t k) const {
  require(k >= 0, "matrix power: exponent must be non-negative");
  RepMatrix out = identity(dim_, order_);
  RepMatrix base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) {
      out = out * base;
    }
    if (k > 1) {
      base = base * base;
    }
  }
  return out;
}

std::vector<ComplexApprox> RepMatrix::embed() const {
  std::vector<ComplexApprox> out;
  out.reserve(e_.size());
  for (const auto& v : e_) {
    out.push_back(v.embed());
  }
  return out;
}

namespace {

std::uint32_t work_order(int n) { return static_cast<std::uint32_t>(8 * n); }

// Exponent of zeta_{8n} on the diagonal of rho(T): e(a^2/4n - 1/8).
std::int64_t t_exponent(std::int64_t alpha, int n) { return 2 * alpha * alpha - n; }

template <class Value, class Factory>
const Value& cached(std::map<int, Value>& cache, std::mutex& mu, int n, Factory make) {
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, make()).first;
  }
  return it->second;
}

Cyclotomic make_s_scale(int n) {
  const std::uint32_t M = work_order(n);
  // sqrt(2/n) / (2i) = sqrt(2n) * (-i) / (2n)
  return sqrt_int(static_cast<std::uint64_t>(2 * n), M).times_root(-static_cast<std::int64_t>(M / 4)) *
         Rational(1, 2 * n);
}

// Right-multiplies the row-major integer matrix by the unscaled sine matrix
// (zeta_{2n}^{bg} - zeta_{2n}^{-bg}).
std::vector<Cyclotomic> times_unscaled_s(const std::vector<Cyclotomic>& x, std::size_t rows, int n) {
  const std::size_t dim = static_cast<std::size_t>(n - 1);
  const std::uint32_t M = work_order(n);
  std::vector<Cyclotomic> out;
  out.reserve(rows * dim);
  CyclotomicAccumulator acc(M);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t g = 1; g <= dim; ++g) {
      acc.clear();
      for (std::size_t b = 1; b <= dim; ++b) {
        const Cyclotomic& v = x[i * dim + (b - 1)];
        if (v.is_zero()) {
          continue;
        }
        const auto e = static_cast<std::int64_t>(4 * b * g);
        acc.add(v, e, 1);
        acc.add(v, -e, -1);
      }
      out.push_back(acc.result());
    }
  }
  return out;
}

void times_t_power(std::vector<Cyclotomic>& x, std::size_t rows, const Integer& t, int n) {
  const std::size_t dim = static_cast<std::size_t>(n - 1);
  const std::int64_t M = work_order(n);
  const std::int64_t tm = mod(t, M);
  if (tm == 0) {
    return;
  }
  for (std::size_t g = 1; g <= dim; ++g) {
    const std::int64_t e = mod(tm * t_exponent(static_cast<std::int64_t>(g), n), M);
    for (std::size_t i = 0; i < rows; ++i) {
      auto& v = x[i * dim + (g - 1)];
      if (!v.is_zero()) {
        v = v.times_root(e);
      }
    }
  }
}

// Evaluates rows of the word product with rho(S) replaced by the unscaled
// sine matrix, then applies kappa^r once.
std::vector<Cyclotomic> evaluate_rows(const STWord& w, int n, std::vector<Cyclotomic> start,
                                      std::size_t rows) {
  const auto& exps = w.exponents();
  std::size_t s_letters = 0;
  times_t_power(start, rows, exps.front(), n);
  for (std::size_t i = 1; i < exps.size(); ++i) {
    start = times_unscaled_s(start, rows, n);
    ++s_letters;
    times_t_power(start, rows, exps[i], n);
  }
  if (w.negated()) {
    // rho(-1) = rho(S)^2
    start = times_unscaled_s(times_unscaled_s(start, rows, n), rows, n);
    s_letters += 2;
  }
  // kappa^2 = -1/(2n)
  Rational scale(1);
  for (std::size_t i = 0; i + 1 < s_letters; i += 2) {
    scale *= Rational(-1, 2 * n);
  }
  const bool odd = s_letters % 2 == 1;
  const Cyclotomic kappa = odd ? s_matrix_scale(n) : Cyclotomic::one(work_order(n));
  for (auto& v : start) {
    if (v.is_zero()) {
      continue;
    }
    if (odd) {
      v = v * kappa;
    }
    v *= scale;
  }
  return start;
}

}  // namespace

Cyclotomic s_matrix_scale(int n) {
  static std::mutex mu;
  static std::map<int, Cyclotomic> cache;
  return cached(cache, mu, n, [n] { return make_s_scale(n); });
}

RepMatrix rho_S(int n) {
  static std::mutex mu;
  static std::map<int, RepMatrix> cache;
  return cached(cache, mu, n, [n] {
    LevelData L = LevelData::from_n(n);
    const Cyclotomic kappa = s_matrix_scale(n);
    RepMatrix s(L.dim, L.M);
    for (int a = 1; a <= L.dim; ++a) {
      for (int b = 1; b <= L.dim; ++b) {
        const std::int64_t e = 4 * a * b;
        s(a - 1, b - 1) = kappa.times_root(e) - kappa.times_root(-e);
      }
    }
    return s;
  });
}

RepMatrix rho_T(int n) {
  LevelData L = LevelData::from_n(n);
  RepMatrix t(L.dim, L.M);
  for (int a = 1; a <= L.dim; ++a) {
    t(a - 1, a - 1) = Cyclotomic::root_of_unity(L.M, t_exponent(a, n));
  }
  return t;
}

RepMatrix evaluate_word(const STWord& w, int n) {
  LevelData L = LevelData::from_n(n);
  RepMatrix id = RepMatrix::identity(L.dim, L.M);
  std::vector<Cyclotomic> rows(id.entries().begin(), id.entries().end());
  rows = evaluate_rows(w, n, std::move(rows), L.dim);
  RepMatrix out(L.dim, L.M);
  for (int i = 0; i < L.dim; ++i) {
    for (int j = 0; j < L.dim; ++j) {
      out(i, j) = std::move(rows[i * L.dim + j]);
    }
  }
  return out;
}

std::vector<Cyclotomic> evaluate_word_row(const STWord& w, int n, int alpha) {
  LevelData L = LevelData::from_n(n);
  require(alpha >= 1 && alpha <= L.dim, "row label out of range");
  std::vector<Cyclotomic> row(L.dim, Cyclotomic::zero(L.M));
  row[alpha - 1] = Cyclotomic::one(L.M);
  return evaluate_rows(w, n, std::move(row), 1);
}

RepMatrix rho_word(const ResidueMatrix& r, int n, unsigned lift_salt) {
  LevelData L = LevelData::from_n(n);
  require(r.N % L.N == 0, "residue modulus must be a multiple of the conductor");
  return evaluate_word(decompose(lift(r, lift_salt)), n);
}

Cyclotomic gauss_sum(std::int64_t c, std::int64_t N) {
  require(N >= 1, "gauss_sum: modulus must be positive");
  const auto order = static_cast<std::uint32_t>(N);
  CyclotomicAccumulator acc(order);
  const std::int64_t cm = mod(c, N);
  for (std::int64_t b = 0; b < N; ++b) {
    acc.add_root(static_cast<std::int64_t>(static_cast<__int128>(cm) * b % N * b % N));
  }
  return acc.result();
}

Cyclotomic gauss_sum_closed(std::int64_t c, std::int64_t n) {
  require(n >= 1 && n % 2 == 1, "gauss_sum_closed: n must be odd");
  require(gcd(c, 2 * n) == 1, "gauss_sum_closed: c must be coprime to 2n");
  const auto order = static_cast<std::uint32_t>(lcm(4, n));
  // 2 (1 + i^{nc}) (c|n) S(1, n)
  Cyclotomic one_plus = Cyclotomic::one(order) + Cyclotomic::root_of_unity(order, mod(n * c, 4) * (order / 4));
  return one_plus * gauss_sum(1, n) * Rational(2 * jacobi(c, n));
}

ClosedCase closed_case(const ResidueMatrix& r, int n) {
  LevelData L = LevelData::from_n(n);
  if (gcd(r.C, 2 * n) == 1) {
    return n % 2 == 1 ? ClosedCase::legendre : ClosedCase::coprime_c;
  }
  if (r.C % L.N == 0) {
    return ClosedCase::triangular;
  }
  if (gcd(r.D, 2 * n) == 1) {
    return ClosedCase::coprime_d;
  }
  return ClosedCase::fallback;
}

std::string to_string(ClosedCase c) {
  switch (c) {
    case ClosedCase::coprime_c: return "coprime_c";
    case ClosedCase::legendre: return "legendre";
    case ClosedCase::coprime_d: return "coprime_d";
    case ClosedCase::triangular: return "triangular";
    case ClosedCase::fallback: return "fallback";
  }
  return "?";
}

RepMatrix rho_case(const ResidueMatrix& r, int n, ClosedCase c) {
  switch (c) {
    case ClosedCase::coprime_c: return rho_coprime_c(r, n);
    case ClosedCase::legendre: return rho_legendre(r, n);
    case ClosedCase::coprime_d: return rho_coprime_d(r, n);
    case ClosedCase::triangular: return rho_triangular(r, n);
    case ClosedCase::fallback: return rho_word(r, n);
  }
  throw std::logic_error("unknown closed case");
}

RepMatrix rho_closed(const ResidueMatrix& r, int n) { return rho_case(r, n, closed_case(r, n)); }

RepMatrix rho_theorem1(const ResidueMatrix& r, int n) {
  LevelData L = LevelData::from_n(n);
  require(r.N % L.N == 0, "residue modulus must be a multiple of the conductor");
  require(gcd(r.C, L.N) == 1, "theorem-1 path needs C invertible mod N");
  const std::int64_t M = L.M;
  const std::int64_t inv_c = inverse_mod(r.C, M);
  // sigma_L(T^A S T^D) = T^{AL} sigma_L(S) T^{DL}
  RepMatrix out = rho_S(n).galois(inv_c);
  const std::int64_t a = mod(r.A * inv_c, M);
  const std::int64_t d = mod(r.D * inv_c, M);
  for (int i = 1; i <= L.dim; ++i) {
    for (int j = 1; j <= L.dim; ++j) {
      const std::int64_t e = a * t_exponent(i, n) + d * t_exponent(j, n);
      out(i - 1, j - 1) = out(i - 1, j - 1).times_root(e);
    }
  }
  return out;
}

RepMatrix rho(const ResidueMatrix& r, int n, Path path) {
  switch (path) {
    case Path::closed: return rho_closed(r, n);
    case Path::word: return rho_word(r, n);
    case Path::theorem1: return rho_theorem1(r, n);
    case Path::automatic: break;
  }
  LevelData L = LevelData::from_n(n);
  if (gcd(r.C, L.N) == 1) {
    return rho_theorem1(r, n);
  }
  return rho_closed(r, n);
}

int g_table(std::int64_t c, int n) {
  require(n % 2 == 1, "g(C, n) is defined for odd n");
  require(c % 2 != 0, "g(C, n) needs odd C");
  if (mod(c, 4) == 1) {
    return 3;
  }
  return mod(n, 4) == 1 ? 1 : -3;
}

bool g_parity_check(int n, int samples, std::uint64_t seed) {
  require(n % 2 == 1, "g_parity_check: n must be odd");
  for (std::int64_t c = 1; c < 8; c += 2) {
    if (mod(g_table(c, n) - g_table(-c, n) + 2 * c - 2 * (n + 1), 8) != 0) {
      return false;
    }
  }
  LevelData L = LevelData::from_n(n);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    ResidueMatrix r = random_residue_matrix(L.N, rng);
    if (!(rho_closed(r, n) == rho_closed(-r, n))) {
      return false;
    }
  }
  return true;
}

ResidueMatrix random_residue_matrix(std::int64_t N, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, N - 1);
  for (;;) {
    const std::int64_t c = dist(rng), d = dist(rng);
    if (gcd(gcd(c, d), N) != 1) {
      continue;
    }
    const std::int64_t t = dist(rng);
    ResidueMatrix out;
    std::int64_t seen = 0;
    for_each_completion(N, c, d, [&](const ResidueMatrix& m) {
      if (seen++ == t) {
        out = m;
      }
    });
    return out;
  }
}

}  // namespace wzw
