#include "wzw/wzwrep.hpp"

namespace wzw {

std::string to_string(KernelSumBranch b) {
  switch (b) {
    case KernelSumBranch::coprime: return "coprime";
    case KernelSumBranch::multiple_of_n: return "multiple_of_n";
    case KernelSumBranch::twice_unit: return "twice_unit";
  }
  return "?";
}

Cyclotomic kernel_sum(std::int64_t alpha, std::int64_t gamma, std::int64_t c, int n) {
  require(alpha >= 1 && alpha < n && gamma >= 1 && gamma < n, "kernel_sum: labels out of range");
  const std::int64_t M = 8 * n;
  CyclotomicAccumulator acc(static_cast<std::uint32_t>(M));
  const std::int64_t cm = mod(c, M);
  // sin(x) sin(y) = -(1/4)(e^{ix} - e^{-ix})(e^{iy} - e^{-iy})
  for (std::int64_t b = 1; b < n; ++b) {
    const std::int64_t q = 2 * cm * b % M * b;
    acc.add_root(q + 4 * b * (alpha + gamma));
    acc.add_root(q - 4 * b * (alpha + gamma));
    acc.add_root(q + 4 * b * (alpha - gamma), -1);
    acc.add_root(q - 4 * b * (alpha - gamma), -1);
  }
  return acc.result() * Rational(-1, 4);
}

std::vector<KernelSumBranch> kernel_sum_branches(std::int64_t c, int n) {
  std::vector<KernelSumBranch> out;
  if (gcd(c, 2 * n) == 1) {
    out.push_back(KernelSumBranch::coprime);
  }
  if (mod(c, n) == 0) {
    out.push_back(KernelSumBranch::multiple_of_n);
  }
  if (mod(c, 2) == 0 && gcd(c / 2, 2 * n) == 1) {
    out.push_back(KernelSumBranch::twice_unit);
  }
  return out;
}

std::optional<Cyclotomic> kernel_sum_closed(std::int64_t alpha, std::int64_t gamma, std::int64_t c,
                                            int n, KernelSumBranch branch) {
  const std::int64_t M = 8 * n;
  const auto order = static_cast<std::uint32_t>(M);
  auto root = [order](std::int64_t k) { return Cyclotomic::root_of_unity(order, k); };
  switch (branch) {
    case KernelSumBranch::coprime: {
      if (gcd(c, 2 * n) != 1) {
        return std::nullopt;
      }
      // (1/8) S(C, 4n) [e(-C'(a-g)^2/4n) - e(-C'(a+g)^2/4n)]
      const std::int64_t ci = inverse_mod(mod(c, M), M);
      const std::int64_t dm = mod(alpha - gamma, M), dp = mod(alpha + gamma, M);
      Cyclotomic diff = root(-2 * ci * dm % M * dm) - root(-2 * ci * dp % M * dp);
      return gauss_sum(c, 4 * n).promoted(order) * diff * Rational(1, 8);
    }
    case KernelSumBranch::multiple_of_n: {
      if (mod(c, n) != 0) {
        return std::nullopt;
      }
      const std::int64_t t = c / n;
      const Cyclotomic i_t = root(2 * n * mod(t, 4));
      auto parity_sign = [n](std::int64_t x) { return mod(x / n, 2) == 0 ? 1L : -1L; };
      Cyclotomic out = Cyclotomic::zero(order);
      if (mod(alpha - gamma, n) == 0) {
        out += Cyclotomic::one(order) + i_t * Rational(parity_sign(alpha - gamma));
      }
      if (mod(alpha + gamma, n) == 0) {
        out -= Cyclotomic::one(order) + i_t * Rational(parity_sign(alpha + gamma));
      }
      return out * ratio(n, 4);
    }
    case KernelSumBranch::twice_unit: {
      if (mod(c, 2) != 0 || gcd(c / 2, 2 * n) != 1) {
        return std::nullopt;
      }
      const std::int64_t g = c / 2;
      const std::int64_t gi = inverse_mod(mod(g, M), M);
      Cyclotomic sf = gauss_sum(g, 2 * n).promoted(order);
      if (mod(alpha - gamma, 2) != 0) {
        sf = gauss_sum(g, M) * Rational(1, 2) - sf;
      }
      // (i/2) e(-G'(a^2+g^2)/8n) sin(pi G' a g / 2n) SF
      const std::int64_t q = mod(-gi * mod(alpha * alpha + gamma * gamma, M), M);
      const std::int64_t s = mod(2 * gi * mod(alpha * gamma, M), M);
      Cyclotomic phase = root(q + s) - root(q - s);
      return sf * phase * Rational(1, 4);
    }
  }
  return std::nullopt;
}

}  // namespace wzw
