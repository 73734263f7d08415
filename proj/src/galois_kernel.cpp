#include "wzw/galois_kernel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "wzw/float_rep.hpp"

namespace wzw {

RepMatrix sigma_on_matrix(std::int64_t L, const RepMatrix& m) {
  require(gcd(L, m.order()) == 1, "sigma_L needs L coprime to the cyclotomic order");
  return m.galois(L);
}

ResidueMatrix covariant_matrix(const ResidueMatrix& r, std::int64_t L) {
  const std::int64_t N = r.N;
  const std::int64_t li = inverse_mod(mod(L, N), N);
  const auto mul = [N](std::int64_t x, std::int64_t y) {
    return static_cast<std::int64_t>(static_cast<__int128>(x) * y % N);
  };
  return {r.A, mul(r.B, mod(L, N)), mul(r.C, li), r.D, N};
}

bool sigma_covariance_holds(const ResidueMatrix& r, std::int64_t L, int n) {
  const LevelData lv = LevelData::from_n(n);
  require(r.N == lv.N, "residue modulus must be the conductor");
  require(gcd(L, lv.M) == 1, "sigma_L needs L coprime to 8n");
  return sigma_on_matrix(L, rho_closed(r, n)) == rho_closed(covariant_matrix(r, L), n);
}

SignedPermutation sigma_perm(std::int64_t d, int n) {
  require(d > 0 && gcd(d, 2 * n) == 1, "sigma_perm needs d > 0 coprime to 2n");
  SignedPermutation p;
  p.n = n;
  p.global_sign = jacobi(-2 * n, d);
  for (int a = 1; a < n; ++a) {
    const std::int64_t r = mod(a * d, 2 * n);
    if (r < n) {
      p.map.push_back(static_cast<int>(r));
      p.signs.push_back(1);
    } else {
      p.map.push_back(static_cast<int>(2 * n - r));
      p.signs.push_back(-1);
    }
  }
  return p;
}

RepMatrix apply_rows(const SignedPermutation& p, const RepMatrix& m) {
  require(m.dim() == static_cast<std::size_t>(p.n - 1), "dimension mismatch");
  RepMatrix out(m.dim(), m.order());
  for (std::size_t a = 0; a < m.dim(); ++a) {
    const Rational s(p.global_sign * p.signs[a]);
    for (std::size_t b = 0; b < m.dim(); ++b) {
      out(a, b) = m(p.map[a] - 1, b) * s;
    }
  }
  return out;
}

bool bantay_sigma_S_identity(std::int64_t C, int n) {
  const LevelData lv = LevelData::from_n(n);
  require(gcd(C, lv.N) == 1, "C must be invertible mod N");
  const std::int64_t ci = inverse_mod(mod(C, lv.M), lv.M);
  const STWord w({Integer(ci), Integer(C), Integer(ci)});
  return sigma_on_matrix(ci, rho_S(n)) == evaluate_word(w, n);
}

bool in_kernel(const ResidueMatrix& r, int n) {
  const LevelData lv = LevelData::from_n(n);
  require(r.N % lv.N == 0, "residue modulus must be a multiple of the conductor");
  const FloatRep fr(n);
  if (identity_deviation(fr.rho(r)) > kKernelFilterTolerance) {
    return false;
  }
  return rho(r, n).is_identity();
}

std::vector<ResidueMatrix> listed_kernel(int n) {
  const LevelData lv = LevelData::from_n(n);
  const std::int64_t N = lv.N;
  const std::int64_t n2 = 2 * n, n4 = 4 * n;
  std::vector<ResidueMatrix> base;
  if (n % 2 == 1) {
    base = {{1, 0, 0, 1, N},
            {1, n4, n4, 1, N},
            {n2 + 1, 0, 0, n2 + 1, N},
            {n2 + 1, n4, n4, n2 + 1, N},
            {n2 - 1, n4, 0, n2 - 1, N},
            {n2 - 1, 0, n4, n2 - 1, N},
            {n4 + 1, 0, n4, n4 + 1, N},
            {n4 + 1, n4, 0, n4 + 1, N}};
  } else {
    base = {{1, 0, 0, 1, N}, {n2 + 1, 0, 0, n2 + 1, N}};
  }
  std::set<ResidueMatrix> all;
  for (const auto& m : base) {
    all.insert(m);
    all.insert(-m);
  }
  return {all.begin(), all.end()};
}

namespace {

struct Scan {
  std::vector<ResidueMatrix> kernel;
  std::int64_t candidates = 0;
};

Scan scan_kernel(int n, unsigned workers) {
  const LevelData lv = LevelData::from_n(n);
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  const auto rows = bottom_rows(lv.N);
  const FloatRep fr(n);
  std::vector<Scan> parts(workers);
  auto work = [&](unsigned w) {
    Scan& out = parts[w];
    for (std::size_t i = w; i < rows.size(); i += workers) {
      for_each_completion(lv.N, rows[i].first, rows[i].second, [&](const ResidueMatrix& r) {
        if (identity_deviation(fr.rho(r)) > kKernelFilterTolerance) {
          return;
        }
        ++out.candidates;
        if (rho(r, n).is_identity()) {
          out.kernel.push_back(r);
        }
      });
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work, w);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  Scan merged;
  for (auto& p : parts) {
    merged.candidates += p.candidates;
    merged.kernel.insert(merged.kernel.end(), p.kernel.begin(), p.kernel.end());
  }
  std::sort(merged.kernel.begin(), merged.kernel.end());
  return merged;
}

const Scan& cached_scan(int n, unsigned workers, std::int64_t bound) {
  const std::int64_t N = LevelData::from_n(n).N;
  if (N > bound) {
    throw BoundExceeded("modulus " + std::to_string(N) + " exceeds enumeration bound " +
                        std::to_string(bound));
  }
  static std::mutex mu;
  static std::map<int, Scan> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) {
      return it->second;
    }
  }
  Scan s = scan_kernel(n, workers);
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(s)).first->second;
}

}  // namespace

KernelReport enumerate_kernel(int n, unsigned workers, std::int64_t bound) {
  const LevelData lv = LevelData::from_n(n);
  const Scan& scan = cached_scan(n, workers, bound);
  KernelReport rep;
  rep.n = n;
  rep.N = lv.N;
  rep.group_order = sl2_order(lv.N);
  rep.kernel = scan.kernel;
  rep.float_candidates = scan.candidates;
  rep.image_order = rep.group_order / static_cast<std::int64_t>(rep.kernel.size());
  rep.listed = listed_kernel(n);
  for (const auto& k : rep.kernel) {
    if (gcd(k.D, 2 * n) == 1) {
      rep.coprime_slice.push_back(k);
    }
  }
  std::set_difference(rep.listed.begin(), rep.listed.end(), rep.coprime_slice.begin(),
                      rep.coprime_slice.end(), std::back_inserter(rep.missing));
  std::set_difference(rep.coprime_slice.begin(), rep.coprime_slice.end(), rep.listed.begin(),
                      rep.listed.end(), std::back_inserter(rep.extra));
  rep.matches_list = rep.missing.empty() && rep.extra.empty();
  rep.c_never_coprime = std::all_of(rep.kernel.begin(), rep.kernel.end(),
                                    [n](const ResidueMatrix& k) { return gcd(k.C, 2 * n) != 1; });
  const std::set<ResidueMatrix> members(rep.kernel.begin(), rep.kernel.end());
  rep.is_subgroup = members.count(ResidueMatrix::identity(lv.N)) == 1;
  for (const auto& x : rep.kernel) {
    if (!rep.is_subgroup) {
      break;
    }
    rep.is_subgroup = members.count(x.inverse()) == 1;
    for (const auto& y : rep.kernel) {
      if (members.count(x * y) == 0) {
        rep.is_subgroup = false;
        break;
      }
    }
  }
  return rep;
}

ResidueMatrix embed_2_factor(const ResidueMatrix& g, int n) {
  require(g.N == 8, "embed_2_factor takes a matrix mod 8");
  require(n % 2 == 1, "embed_2_factor needs odd n");
  const std::int64_t N = 8 * static_cast<std::int64_t>(n);
  const std::int64_t c2 = idempotents(N).idempotents.front();
  const std::int64_t cn = mod(1 - c2, N);
  return {c2 * g.A + cn, c2 * g.B, c2 * g.C, c2 * g.D + cn, N};
}

std::vector<ResidueMatrix> factor_kernel_sl2z8(int n) {
  require(mod(n, 4) == 3, "factor_kernel_sl2z8 needs n = 3 mod 4");
  std::set<ResidueMatrix> classes;
  for (const auto& g : enumerate_group(8)) {
    if (in_kernel(embed_2_factor(g, n), n)) {
      classes.insert(g.canonical_pm());
    }
  }
  return {classes.begin(), classes.end()};
}

std::vector<ResidueMatrix> listed_factor_kernel() {
  std::set<ResidueMatrix> classes;
  for (const ResidueMatrix& m : {ResidueMatrix(1, 0, 0, 1, 8), ResidueMatrix(1, 4, 4, 1, 8),
                                 ResidueMatrix(5, 4, 0, 5, 8), ResidueMatrix(5, 0, 4, 5, 8)}) {
    classes.insert(m.canonical_pm());
  }
  return {classes.begin(), classes.end()};
}

bool t2_fourth_power_is_minus_identity(int n) {
  require(n % 2 == 1, "T_2 is defined here for odd n");
  const LevelData lv = LevelData::from_n(n);
  const std::int64_t c2 = idempotents(lv.N).idempotents.front();
  return evaluate_word(STWord::T(Integer(c2)), n).power(4).is_scalar_identity(-1);
}

bool s2_squared_is_identity(int n) {
  require(mod(n, 4) == 3, "S_2 check needs n = 3 mod 4");
  const LevelData lv = LevelData::from_n(n);
  const STWord s2 = local_generators(lv.N, 0).S;
  return evaluate_word(s2 * s2, n).is_identity();
}

std::int64_t image_order(int n, unsigned workers) {
  return enumerate_kernel(n, workers).image_order;
}

std::int64_t predicted_image_order(std::int64_t p) { return 48 * p * (p * p - 1) / 2; }

namespace {
void require_genus_prime(std::int64_t p) {
  require(p >= 7 && is_prime(p) && mod(p, 4) == 3, "genus needs a prime p >= 7 with p = 3 mod 4");
}
}  // namespace

std::int64_t genus(std::int64_t p) {
  require_genus_prime(p);
  return (4 * p * p * p - 3 * p * p - 4 * p + 5) / 2;
}

Rational genus_product_form(std::int64_t p) {
  require_genus_prime(p);
  Rational out = Rational(1) + Rational(12 * p * (p * p - 1)) * (Rational(1, 6) - Rational(1, 8 * p));
  out.canonicalize();
  return out;
}

std::int64_t genus_factored_form(std::int64_t p) {
  require_genus_prime(p);
  return (p * p - 1) * (4 * p - 3) / 2 + 1;
}

bool phi2_image_is_normal(int n, unsigned workers) {
  const LevelData lv = LevelData::from_n(n);
  const auto sys = idempotents(lv.N);
  require(sys.factors.size() >= 2, "N needs at least two prime-power factors");
  const KernelReport rep = enumerate_kernel(n, workers);
  for (std::int64_t q : sys.factors) {
    std::set<ResidueMatrix> image;
    for (const auto& k : rep.kernel) {
      image.insert(ResidueMatrix(k.A, k.B, k.C, k.D, q));
    }
    for (const auto& g : enumerate_group(q)) {
      const ResidueMatrix gi = g.inverse();
      for (const auto& k : image) {
        if (image.count(g * k * gi) == 0) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace wzw
