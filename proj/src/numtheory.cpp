#include "wzw/numtheory.hpp"

#include <cstdlib>
#include <numeric>

namespace wzw {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    return {-old_r, -old_s, -old_t};
  }
  return {old_r, old_s, old_t};
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  require(m > 0, "inverse_mod: modulus must be positive");
  auto [g, x, y] = extended_gcd(mod(a, m), m);
  (void)y;
  if (g != 1) {
    throw PreconditionError("inverse_mod: " + std::to_string(a) +
                            " is not invertible modulo " + std::to_string(m));
  }
  return mod(x, m);
}

int jacobi(std::int64_t a, std::int64_t n) {
  require(n > 0 && n % 2 == 1, "jacobi: lower argument must be odd and positive");
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) {
        result = -result;
      }
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) {
      result = -result;
    }
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  require(n >= 1, "factorize: argument must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) {
    out.emplace_back(n, 1);
  }
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      return false;
    }
  }
  return true;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    result = result / p * (p - 1);
  }
  return result;
}

int mobius(std::int64_t n) {
  int result = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) {
      return 0;
    }
    result = -result;
  }
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) {
        large.push_back(n / d);
      }
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t mod(const Integer& a, std::int64_t m) {
  require(m > 0, "mod: modulus must be positive");
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

}  // namespace wzw
