#include "wzw/modgroup.hpp"

#include <cctype>
#include <regex>
#include <sstream>

namespace wzw {

UnimodularMatrix::UnimodularMatrix() : a(1), b(0), c(0), d(1) {}

UnimodularMatrix::UnimodularMatrix(Integer a_, Integer b_, Integer c_, Integer d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a * d - b * c != 1) {
    throw PreconditionError("matrix " + to_string() + " does not have determinant 1");
  }
}

UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

UnimodularMatrix UnimodularMatrix::operator-() const { return {-a, -b, -c, -d}; }

std::string UnimodularMatrix::to_string() const {
  return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

ResidueMatrix::ResidueMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                             std::int64_t n)
    : A(mod(a, n)), B(mod(b, n)), C(mod(c, n)), D(mod(d, n)), N(n) {
  require(n >= 1, "residue matrix modulus must be positive");
  // entries are < 2^31 in practice; use 128-bit to be safe
  __int128 det = static_cast<__int128>(A) * D - static_cast<__int128>(B) * C;
  det %= n;
  if (det < 0) {
    det += n;
  }
  if (det != 1 % n) {
    throw PreconditionError("residue matrix " + to_string() + " does not have determinant 1 mod " +
                            std::to_string(n));
  }
}

ResidueMatrix ResidueMatrix::reduce(const UnimodularMatrix& m, std::int64_t n) {
  return {mod(m.a, n), mod(m.b, n), mod(m.c, n), mod(m.d, n), n};
}

ResidueMatrix operator*(const ResidueMatrix& x, const ResidueMatrix& y) {
  require(x.N == y.N, "residue matrices have different moduli");
  const std::int64_t n = x.N;
  auto mm = [n](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    return static_cast<std::int64_t>((static_cast<__int128>(p) * q + static_cast<__int128>(r) * s) %
                                     n);
  };
  return {mm(x.A, y.A, x.B, y.C), mm(x.A, y.B, x.B, y.D), mm(x.C, y.A, x.D, y.C),
          mm(x.C, y.B, x.D, y.D), n};
}

ResidueMatrix ResidueMatrix::power(std::int64_t k) const {
  ResidueMatrix base = k < 0 ? inverse() : *this;
  ResidueMatrix out = identity(N);
  for (std::int64_t e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) {
      out = out * base;
    }
    base = base * base;
  }
  return out;
}

ResidueMatrix ResidueMatrix::canonical_pm() const {
  ResidueMatrix neg = -*this;
  return neg < *this ? neg : *this;
}

std::string ResidueMatrix::to_string() const {
  return "[[" + std::to_string(A) + "," + std::to_string(B) + "],[" + std::to_string(C) + "," +
         std::to_string(D) + "]]";
}

STWord::STWord(std::vector<Integer> exponents, bool negated)
    : exponents_(std::move(exponents)), negated_(negated) {
  require(!exponents_.empty(), "an S,T word has at least one T exponent");
}

STWord operator*(const STWord& x, const STWord& y) {
  std::vector<Integer> e(x.exponents_.begin(), x.exponents_.end());
  e.back() += y.exponents_.front();
  e.insert(e.end(), y.exponents_.begin() + 1, y.exponents_.end());
  return STWord(std::move(e), x.negated_ != y.negated_);
}

UnimodularMatrix STWord::evaluate() const {
  UnimodularMatrix m = UnimodularMatrix::T(exponents_.front());
  for (std::size_t i = 1; i < exponents_.size(); ++i) {
    m = m * UnimodularMatrix::S() * UnimodularMatrix::T(exponents_[i]);
  }
  return negated_ ? -m : m;
}

ResidueMatrix STWord::evaluate_mod(std::int64_t n) const {
  ResidueMatrix m = ResidueMatrix::T(n, mod(exponents_.front(), n));
  const ResidueMatrix s = ResidueMatrix::S(n);
  for (std::size_t i = 1; i < exponents_.size(); ++i) {
    m = m * s * ResidueMatrix::T(n, mod(exponents_[i], n));
  }
  return negated_ ? -m : m;
}

std::string STWord::to_string() const {
  std::ostringstream os;
  bool empty = true;
  auto sep = [&] {
    if (!empty) {
      os << ' ';
    }
    empty = false;
  };
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i > 0) {
      sep();
      os << 'S';
    }
    const Integer& e = exponents_[i];
    if (e != 0) {
      sep();
      os << 'T';
      if (e != 1) {
        os << '^' << e.get_str();
      }
    }
  }
  std::string body = empty ? "1" : os.str();
  return negated_ ? "-" + body : body;
}

STWord decompose(const UnimodularMatrix& m) {
  Integer a = m.a, b = m.b, c = m.c, d = m.d;
  std::vector<Integer> steps;
  Integer q;
  while (c != 0) {
    // M <- M T^{-q} S^{-1}; afterwards M_old = M_new S T^q.
    mpz_fdiv_q(q.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
    d -= q * c;
    b -= q * a;
    Integer na = -b, nb = a, nc = -d, nd = c;
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
    steps.push_back(q);
  }
  std::vector<Integer> exps;
  if (a == 1) {
    exps.push_back(b);
  } else {
    // [[-1, b], [0, -1]] = S^2 T^{-b}
    exps = {Integer(0), Integer(0), Integer(-b)};
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    exps.push_back(*it);
  }
  return STWord(std::move(exps));
}

UnimodularMatrix lift(const ResidueMatrix& r, unsigned salt) {
  const std::int64_t n = r.N;
  const auto s = static_cast<std::int64_t>(salt);
  const std::int64_t c = r.C == 0 ? (s + 1) * n : r.C + s * n;
  std::int64_t d = r.D;
  while (gcd(c, d) != 1) {
    d += n;
  }
  auto [g, x, y] = extended_gcd(d, c);
  (void)g;
  // x d + y c = 1, so [[x, -y], [c, d]] has determinant 1.
  Integer a0 = x, b0 = -y;
  Integer t = b0 * (a0 - r.A) + a0 * (r.B - b0);
  std::int64_t tr = mod(t, n);
  return {a0 + Integer(tr) * c, b0 + Integer(tr) * d, Integer(c), Integer(d)};
}

IdempotentSystem idempotents(std::int64_t n) {
  require(n >= 2, "idempotents: modulus must be at least 2");
  IdempotentSystem sys;
  sys.N = n;
  for (auto [p, e] : factorize(n)) {
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) {
      q *= p;
    }
    const std::int64_t m = n / q;
    const std::int64_t c = static_cast<std::int64_t>(
        static_cast<__int128>(m) * inverse_mod(m % q, q) % n);
    sys.primes.push_back(p);
    sys.factors.push_back(q);
    sys.idempotents.push_back(c == 0 ? 1 % n : c);
  }
  return sys;
}

LocalGenerators local_generators(std::int64_t n, std::size_t factor_index) {
  IdempotentSystem sys = idempotents(n);
  require(factor_index < sys.factors.size(), "local_generators: factor index out of range");
  const Integer c = sys.idempotents[factor_index];
  const Integer e = 1 - c;
  // S^{-1} = -S
  return {STWord::T(c), STWord({e, e, e, Integer(0)}, true)};
}

std::int64_t sl2_order(std::int64_t n) {
  std::int64_t order = n * n * n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    order = order / (p * p) * (p * p - 1);
  }
  return order;
}

std::vector<std::pair<std::int64_t, std::int64_t>> bottom_rows(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> rows;
  for (std::int64_t c = 0; c < n; ++c) {
    for (std::int64_t d = 0; d < n; ++d) {
      if (gcd(gcd(c, d), n) == 1) {
        rows.emplace_back(c, d);
      }
    }
  }
  return rows;
}

void for_each_completion(std::int64_t n, std::int64_t c, std::int64_t d,
                         const std::function<void(const ResidueMatrix&)>& fn) {
  std::int64_t cl = c == 0 ? n : c;
  std::int64_t dl = d;
  while (gcd(cl, dl) != 1) {
    dl += n;
  }
  auto [g, x, y] = extended_gcd(dl, cl);
  (void)g;
  const std::int64_t a0 = mod(x, n), b0 = mod(-y, n);
  for (std::int64_t t = 0; t < n; ++t) {
    fn(ResidueMatrix(a0 + t * c, b0 + t * d, c, d, n));
  }
}

void for_each_element(std::int64_t n, const std::function<void(const ResidueMatrix&)>& fn,
                      std::int64_t bound) {
  if (n > bound) {
    throw BoundExceeded("modulus " + std::to_string(n) + " exceeds enumeration bound " +
                        std::to_string(bound));
  }
  for (auto [c, d] : bottom_rows(n)) {
    for_each_completion(n, c, d, fn);
  }
}

std::vector<ResidueMatrix> enumerate_group(std::int64_t n, std::int64_t bound) {
  std::vector<ResidueMatrix> out;
  if (n <= bound) {
    out.reserve(static_cast<std::size_t>(sl2_order(n)));
  }
  for_each_element(n, [&](const ResidueMatrix& m) { out.push_back(m); }, bound);
  return out;
}

std::array<Integer, 4> parse_matrix_entries(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      compact.push_back(ch);
    }
  }
  static const std::regex pattern(R"(^\[\[([-+]?\d+),([-+]?\d+)\],\[([-+]?\d+),([-+]?\d+)\]\]$)");
  std::smatch match;
  if (!std::regex_match(compact, match, pattern)) {
    throw PreconditionError("cannot parse matrix '" + std::string(text) +
                            "', expected [[a,b],[c,d]]");
  }
  std::array<Integer, 4> out;
  for (int i = 0; i < 4; ++i) {
    std::string tok = match[i + 1].str();
    if (!tok.empty() && tok[0] == '+') {
      tok.erase(0, 1);
    }
    out[i] = Integer(tok);
  }
  return out;
}

UnimodularMatrix parse_matrix(std::string_view text) {
  auto e = parse_matrix_entries(text);
  return {e[0], e[1], e[2], e[3]};
}

}  // namespace wzw
