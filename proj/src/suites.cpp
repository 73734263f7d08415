#include "wzw/suites.hpp"

#include <random>
#include <sstream>

#include "wzw/galois_kernel.hpp"
#include "wzw/wzwrep.hpp"

namespace wzw {

namespace {

SuiteResult named(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.passed) {
    r.detail = what;
  }
  r.passed = false;
}

ResidueMatrix random_upper_triangular(std::int64_t N, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, N - 1);
  std::int64_t a = 0;
  do {
    a = dist(rng);
  } while (gcd(a, N) != 1);
  return {a, dist(rng), 0, inverse_mod(a, N), N};
}

}  // namespace

std::vector<ResidueMatrix> stratified_samples(int n, int count, std::uint64_t seed) {
  const LevelData lv = LevelData::from_n(n);
  std::mt19937_64 rng(seed);
  const ClosedCase first = n % 2 == 1 ? ClosedCase::legendre : ClosedCase::coprime_c;
  const std::vector<ClosedCase> cases{first, ClosedCase::triangular, ClosedCase::coprime_d,
                                      ClosedCase::fallback};
  std::vector<ResidueMatrix> out;
  std::vector<bool> exhausted(cases.size(), false);
  constexpr int kMaxAttempts = 20000;
  for (std::size_t i = 0; static_cast<int>(out.size()) < count; ++i) {
    const std::size_t c = i % cases.size();
    if (exhausted[c]) {
      continue;
    }
    if (cases[c] == ClosedCase::triangular) {
      out.push_back(random_upper_triangular(lv.N, rng));
      continue;
    }
    bool found = false;
    for (int attempt = 0; attempt < kMaxAttempts && !found; ++attempt) {
      ResidueMatrix r = random_residue_matrix(lv.N, rng);
      if (closed_case(r, n) == cases[c]) {
        out.push_back(r);
        found = true;
      }
    }
    if (!found) {
      exhausted[c] = true;
    }
  }
  return out;
}

SuiteResult suite_oracle_equivalence(int n, int samples, std::uint64_t seed) {
  SuiteResult res = named("oracle_equivalence n=" + std::to_string(n));
  for (const auto& r : stratified_samples(n, samples, seed)) {
    ++res.checked;
    if (!(rho_closed(r, n) == rho_word(r, n))) {
      fail(res, "rho_closed != word oracle at " + r.to_string() + " (" +
                    to_string(closed_case(r, n)) + ")");
    }
  }
  return res;
}

SuiteResult suite_theorem1(int n, int samples, std::uint64_t seed) {
  SuiteResult res = named("theorem1 n=" + std::to_string(n));
  const LevelData lv = LevelData::from_n(n);
  std::mt19937_64 rng(seed);
  while (res.checked < samples) {
    const ResidueMatrix r = random_residue_matrix(lv.N, rng);
    if (gcd(r.C, lv.N) != 1) {
      continue;
    }
    ++res.checked;
    if (!(rho_theorem1(r, n) == rho_word(r, n))) {
      fail(res, "theorem-1 form != word oracle at " + r.to_string());
    }
  }
  return res;
}

SuiteResult suite_well_defined(int n, int samples, std::uint64_t seed) {
  SuiteResult res = named("well_defined n=" + std::to_string(n));
  const LevelData lv = LevelData::from_n(n);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const ResidueMatrix r = random_residue_matrix(lv.N, rng);
    ++res.checked;
    if (lift(r, 0) == lift(r, 1)) {
      fail(res, "lifts coincide at " + r.to_string());
    } else if (!(rho_word(r, n, 0) == rho_word(r, n, 1))) {
      fail(res, "two lifts disagree at " + r.to_string());
    }
  }
  return res;
}

SuiteResult suite_covariance(int n, int samples, std::uint64_t seed) {
  SuiteResult res = named("sigma_covariance n=" + std::to_string(n));
  const LevelData lv = LevelData::from_n(n);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const ResidueMatrix r = random_residue_matrix(lv.N, rng);
    const RepMatrix image = rho_closed(r, n);
    for (std::int64_t L = 1; L < lv.M; ++L) {
      if (gcd(L, lv.M) != 1) {
        continue;
      }
      ++res.checked;
      if (!(sigma_on_matrix(L, image) == rho_closed(covariant_matrix(r, L), n))) {
        fail(res, "covariance fails at " + r.to_string() + ", L=" + std::to_string(L));
      }
    }
  }
  return res;
}

SuiteResult suite_bantay(int n) {
  SuiteResult res = named("bantay_sigma_S n=" + std::to_string(n));
  const LevelData lv = LevelData::from_n(n);
  for (std::int64_t c = 1; c < lv.N; ++c) {
    if (gcd(c, lv.N) != 1) {
      continue;
    }
    ++res.checked;
    if (!bantay_sigma_S_identity(c, n)) {
      fail(res, "sigma(S) word identity fails at C=" + std::to_string(c));
    }
  }
  return res;
}

SuiteResult suite_sigma_perm(int n) {
  SuiteResult res = named("sigma_perm n=" + std::to_string(n));
  const RepMatrix s = rho_S(n);
  for (std::int64_t d = 1; d < 8 * n; ++d) {
    if (gcd(d, 2 * n) != 1) {
      continue;
    }
    ++res.checked;
    if (!(apply_rows(sigma_perm(d, n), s) == sigma_on_matrix(d, s))) {
      fail(res, "signed permutation form fails at d=" + std::to_string(d));
    }
  }
  return res;
}

SuiteResult suite_kernel_sums(int n) {
  SuiteResult res = named("kernel_sums n=" + std::to_string(n));
  for (std::int64_t c = 0; c < 4 * n; ++c) {
    const auto branches = kernel_sum_branches(c, n);
    if (branches.empty()) {
      continue;
    }
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t g = 1; g < n; ++g) {
        const Cyclotomic direct = kernel_sum(a, g, c, n);
        for (auto b : branches) {
          ++res.checked;
          const auto closed = kernel_sum_closed(a, g, c, n, b);
          if (!closed || !(*closed == direct)) {
            fail(res, "branch " + to_string(b) + " fails at (a,g,C)=(" + std::to_string(a) + "," +
                          std::to_string(g) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
  }
  return res;
}

SuiteResult suite_gauss_sums(int n) {
  SuiteResult res = named("gauss_sums n=" + std::to_string(n));
  const auto M = static_cast<std::uint32_t>(4 * n);
  // 2 sqrt(n) (1 + i)
  const Cyclotomic expected =
      sqrt_int(static_cast<std::uint64_t>(n), M) * (Cyclotomic::one(M) + Cyclotomic::root_of_unity(M, n)) *
      Rational(2);
  ++res.checked;
  if (!(gauss_sum(1, 4 * n) == expected)) {
    fail(res, "S(1, 4n) != 2 sqrt(n)(1+i)");
  }
  if (n % 2 == 1) {
    for (std::int64_t c = 1; c < 4 * n; ++c) {
      if (gcd(c, 2 * n) != 1) {
        continue;
      }
      ++res.checked;
      if (!(gauss_sum(c, 4 * n) == gauss_sum_closed(c, n))) {
        fail(res, "closed form of S(c, 4n) fails at c=" + std::to_string(c));
      }
    }
  }
  return res;
}

SuiteResult suite_g_parity(int n, int samples, std::uint64_t seed) {
  SuiteResult res = named("g_parity n=" + std::to_string(n));
  res.checked = samples + 4;
  if (!g_parity_check(n, samples, seed)) {
    fail(res, "g-table parity or -R invariance fails");
  }
  return res;
}

SuiteResult suite_kernel(int n, unsigned workers, std::int64_t bound) {
  SuiteResult res = named("kernel n=" + std::to_string(n));
  const KernelReport rep = enumerate_kernel(n, workers, bound);
  res.checked = rep.group_order;
  if (!rep.is_subgroup) {
    fail(res, "kernel is not closed under products and inverses");
  }
  if (!rep.c_never_coprime) {
    fail(res, "a kernel element has gcd(c, 2n) = 1");
  }
  if (rep.image_order * static_cast<std::int64_t>(rep.kernel.size()) != rep.group_order) {
    fail(res, "|Ker| * |Im| != |SL2(Z/NZ)|");
  }
  if (res.passed) {
    std::ostringstream os;
    os << "|Ker|=" << rep.kernel.size() << " |Im|=" << rep.image_order
       << " listed slice " << (rep.matches_list ? "matches" : "differs") << " (extra "
       << rep.extra.size() << ", missing " << rep.missing.size() << ")";
    res.detail = os.str();
  }
  return res;
}

}  // namespace wzw
