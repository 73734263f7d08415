#include "wzw/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>

namespace wzw {

namespace detail {

struct OrderData {
  std::uint32_t order = 1;
  std::size_t phi = 1;
  std::vector<std::int64_t> poly;  // Phi_M, length phi + 1, monic
  // x^k mod Phi_M for k in [0, M), sparse.
  std::vector<std::vector<std::pair<std::uint32_t, long>>> reduce;
  std::vector<std::complex<long double>> roots;  // exp(2 pi i k / M)
};

namespace {

std::shared_mutex cache_mutex;
std::map<std::uint32_t, std::vector<std::int64_t>> poly_cache;
std::map<std::uint32_t, std::shared_ptr<const OrderData>> data_cache;

std::vector<std::int64_t> compute_cyclotomic_polynomial(std::uint32_t order);

std::vector<std::int64_t> cached_polynomial(std::uint32_t order) {
  {
    std::shared_lock lock(cache_mutex);
    auto it = poly_cache.find(order);
    if (it != poly_cache.end()) {
      return it->second;
    }
  }
  auto poly = compute_cyclotomic_polynomial(order);
  std::unique_lock lock(cache_mutex);
  poly_cache.emplace(order, poly);
  return poly;
}

// Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d.
std::vector<std::int64_t> compute_cyclotomic_polynomial(std::uint32_t order) {
  std::vector<std::int64_t> p(order + 1, 0);
  p[0] = -1;
  p[order] = 1;
  for (std::int64_t d : divisors(order)) {
    if (d == order) {
      continue;
    }
    auto q = cached_polynomial(static_cast<std::uint32_t>(d));
    std::size_t qdeg = q.size() - 1;
    std::size_t pdeg = p.size() - 1;
    std::vector<std::int64_t> quot(pdeg - qdeg + 1, 0);
    for (std::size_t i = pdeg + 1; i-- > qdeg;) {
      std::int64_t c = p[i];
      quot[i - qdeg] = c;
      if (c != 0) {
        for (std::size_t j = 0; j <= qdeg; ++j) {
          p[i - qdeg + j] -= c * q[j];
        }
      }
    }
    p = std::move(quot);
  }
  return p;
}

std::shared_ptr<const OrderData> build_order_data(std::uint32_t order) {
  auto data = std::make_shared<OrderData>();
  data->order = order;
  data->poly = cached_polynomial(order);
  data->phi = data->poly.size() - 1;
  const std::size_t phi = data->phi;

  data->reduce.resize(order);
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    auto& row = data->reduce[k];
    for (std::size_t j = 0; j < phi; ++j) {
      if (cur[j] != 0) {
        row.emplace_back(static_cast<std::uint32_t>(j), static_cast<long>(cur[j]));
      }
    }
    // cur <- x * cur mod Phi_M
    std::int64_t top = cur[phi - 1];
    for (std::size_t j = phi; j-- > 0;) {
      std::int64_t lower = j > 0 ? cur[j - 1] : 0;
      cur[j] = lower - top * data->poly[j];
    }
  }

  data->roots.resize(order);
  for (std::uint32_t k = 0; k < order; ++k) {
    long double angle = 2.0L * std::numbers::pi_v<long double> * k / order;
    data->roots[k] = {std::cos(angle), std::sin(angle)};
  }
  return data;
}

inline void addmul(Integer& acc, const Integer& a, long t) {
  if (t >= 0) {
    mpz_addmul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(t));
  } else {
    mpz_submul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(-t));
  }
}

// out[j] += c * (x^k mod Phi_M)[j]
inline void add_power(const OrderData& d, std::vector<Integer>& out, const Integer& c,
                      std::uint32_t k) {
  for (auto [j, t] : d.reduce[k]) {
    addmul(out[j], c, t);
  }
}

}  // namespace

std::shared_ptr<const OrderData> order_data(std::uint32_t order) {
  require(order >= 1, "cyclotomic order must be positive");
  {
    std::shared_lock lock(cache_mutex);
    auto it = data_cache.find(order);
    if (it != data_cache.end()) {
      return it->second;
    }
  }
  auto data = build_order_data(order);
  std::unique_lock lock(cache_mutex);
  auto [it, inserted] = data_cache.emplace(order, data);
  (void)inserted;
  return it->second;
}

}  // namespace detail

using detail::OrderData;

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t order) {
  return detail::order_data(order)->poly;
}

namespace {

std::uint32_t to_order(std::int64_t m) {
  require(m >= 1 && m <= (std::int64_t{1} << 20), "cyclotomic order out of range");
  return static_cast<std::uint32_t>(m);
}

std::uint32_t common_order(std::uint32_t a, std::uint32_t b) {
  return a == b ? a : to_order(lcm(a, b));
}

}  // namespace

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0), 1) {}

Cyclotomic::Cyclotomic(const Rational& q, std::uint32_t order)
    : order_(order), num_(detail::order_data(order)->phi), den_(q.get_den()) {
  num_[0] = q.get_num();
  normalize();
}

Cyclotomic::Cyclotomic(std::uint32_t order, std::vector<Integer> num, Integer den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Cyclotomic::normalize() {
  require(den_ != 0, "cyclotomic: zero denominator");
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) {
      break;
    }
    if (c != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    g = -g;
  }
  if (g != 1) {
    for (auto& c : num_) {
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t order, std::int64_t k) {
  auto d = detail::order_data(order);
  std::vector<Integer> num(d->phi);
  detail::add_power(*d, num, Integer(1), static_cast<std::uint32_t>(mod(k, order)));
  return Cyclotomic(order, std::move(num), Integer(1));
}

Cyclotomic Cyclotomic::from_powers(std::uint32_t order, std::span<const Integer> coeffs,
                                   const Integer& denominator) {
  auto d = detail::order_data(order);
  std::vector<Integer> num(d->phi);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) {
      detail::add_power(*d, num, coeffs[k], static_cast<std::uint32_t>(k % order));
    }
  }
  return Cyclotomic(order, std::move(num), denominator);
}

Rational Cyclotomic::coeff(std::size_t j) const {
  Rational q(num_.at(j), den_);
  q.canonicalize();
  return q;
}

std::vector<Rational> Cyclotomic::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t j = 0; j < num_.size(); ++j) {
    out.push_back(coeff(j));
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : num_) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < num_.size(); ++j) {
    if (num_[j] != 0) {
      return false;
    }
  }
  return true;
}

Rational Cyclotomic::to_rational() const {
  require(is_rational(), "cyclotomic element is not rational");
  return coeff(0);
}

Cyclotomic Cyclotomic::promoted(std::uint32_t order) const {
  require(order % order_ == 0, "promotion target must be a multiple of the order");
  if (order == order_) {
    return *this;
  }
  auto d = detail::order_data(order);
  const std::uint32_t step = order / order_;
  std::vector<Integer> num(d->phi);
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] != 0) {
      detail::add_power(*d, num, num_[j], static_cast<std::uint32_t>(j * step));
    }
  }
  return Cyclotomic(order, std::move(num), den_);
}

Cyclotomic Cyclotomic::times_root(std::int64_t k) const {
  auto d = detail::order_data(order_);
  const auto shift = static_cast<std::uint32_t>(mod(k, order_));
  if (shift == 0) {
    return *this;
  }
  std::vector<Integer> num(d->phi);
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] != 0) {
      detail::add_power(*d, num, num_[j], static_cast<std::uint32_t>((j + shift) % order_));
    }
  }
  return Cyclotomic(order_, std::move(num), den_, Reduced{});
}

Cyclotomic Cyclotomic::galois(std::int64_t L) const {
  if (gcd(L, order_) != 1) {
    throw PreconditionError("galois: L = " + std::to_string(L) + " is not coprime to " +
                            std::to_string(order_));
  }
  const auto l = static_cast<std::uint64_t>(mod(L, order_));
  if (l == 1 % order_) {
    return *this;
  }
  auto d = detail::order_data(order_);
  std::vector<Integer> num(d->phi);
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] != 0) {
      detail::add_power(*d, num, num_[j], static_cast<std::uint32_t>((j * l) % order_));
    }
  }
  return Cyclotomic(order_, std::move(num), den_, Reduced{});
}

ComplexApprox Cyclotomic::embed() const {
  auto d = detail::order_data(order_);
  std::complex<long double> acc = 0;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] != 0) {
      acc += static_cast<long double>(num_[j].get_d()) * d->roots[j];
    }
  }
  acc /= static_cast<long double>(den_.get_d());
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.num_) {
    mpz_neg(c.get_mpz_t(), c.get_mpz_t());
  }
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const std::uint32_t m = common_order(order_, rhs.order_);
  if (m != order_) {
    *this = promoted(m);
  }
  if (m != rhs.order_) {
    return *this += rhs.promoted(m);
  }
  if (den_ == rhs.den_) {
    for (std::size_t j = 0; j < num_.size(); ++j) {
      num_[j] += rhs.num_[j];
    }
  } else {
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), rhs.den_.get_mpz_t());
    Integer fa = l / den_;
    Integer fb = l / rhs.den_;
    for (std::size_t j = 0; j < num_.size(); ++j) {
      num_[j] *= fa;
      mpz_addmul(num_[j].get_mpz_t(), rhs.num_[j].get_mpz_t(), fb.get_mpz_t());
    }
    den_ = l;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  if (q == 0) {
    for (auto& c : num_) {
      c = 0;
    }
    den_ = 1;
    return *this;
  }
  for (auto& c : num_) {
    c *= q.get_num();
  }
  den_ *= q.get_den();
  normalize();
  return *this;
}

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  const std::uint32_t m = common_order(lhs.order_, rhs.order_);
  if (m != lhs.order_ || m != rhs.order_) {
    return lhs.promoted(m) * rhs.promoted(m);
  }
  auto d = detail::order_data(m);
  const std::size_t phi = d->phi;
  std::vector<Integer> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (lhs.num_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < phi; ++j) {
      if (rhs.num_[j] != 0) {
        mpz_addmul(prod[i + j].get_mpz_t(), lhs.num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
      }
    }
  }
  std::vector<Integer> num(phi);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k] != 0) {
      detail::add_power(*d, num, prod[k], static_cast<std::uint32_t>(k % m));
    }
  }
  return Cyclotomic(m, std::move(num), lhs.den_ * rhs.den_);
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.order_ != rhs.order_) {
    const std::uint32_t m = common_order(lhs.order_, rhs.order_);
    return lhs.promoted(m) == rhs.promoted(m);
  }
  return lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) {
      continue;
    }
    Rational c = coeff(j);
    bool negative = c < 0;
    if (negative) {
      c = -c;
    }
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (j == 0) {
      os << c.get_str();
    } else {
      if (c != 1) {
        os << c.get_str() << "*";
      }
      os << "z";
      if (j > 1) {
        os << "^" << j;
      }
    }
  }
  if (order_ > 2 && !is_rational()) {
    os << " (z = zeta_" << order_ << ")";
  }
  return os.str();
}

Cyclotomic sqrt_int(std::uint64_t n, std::uint32_t order) {
  require(n >= 1, "sqrt_int: argument must be positive");
  require(order % (4 * n) == 0, "sqrt_int: 4n must divide the target order");
  const std::uint64_t m = 4 * n;
  const std::uint32_t step = order / static_cast<std::uint32_t>(m);
  CyclotomicAccumulator acc(order);
  for (std::uint64_t b = 0; b < m; ++b) {
    acc.add_root(static_cast<std::int64_t>((b * b) % m * step));
  }
  Cyclotomic gauss = acc.result();
  // sqrt(n) = S(1, 4n) * (1 - i) / 4
  Cyclotomic r = gauss - gauss.times_root(order / 4);
  return r * Rational(1, 4);
}

CyclotomicAccumulator::CyclotomicAccumulator(std::uint32_t order)
    : order_(order), data_(detail::order_data(order)), buf_(order), den_(1) {}

void CyclotomicAccumulator::rescale_to(const Integer& den) {
  Integer f = den / den_;
  for (auto& c : buf_) {
    if (c != 0) {
      c *= f;
    }
  }
  den_ = den;
}

void CyclotomicAccumulator::add(const Cyclotomic& x, std::int64_t k, int sign) {
  require(order_ % x.order() == 0, "accumulator: element order must divide the buffer order");
  if (x.den_ != den_) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), x.den_.get_mpz_t());
    if (l != den_) {
      rescale_to(l);
    }
  }
  const std::uint32_t step = order_ / x.order();
  const auto shift = static_cast<std::uint64_t>(mod(k, order_));
  Integer f = den_ / x.den_;
  const bool unit = f == 1;
  for (std::size_t j = 0; j < x.num_.size(); ++j) {
    const auto& c = x.num_[j];
    if (c == 0) {
      continue;
    }
    auto& slot = buf_[(j * step + shift) % order_];
    if (unit) {
      if (sign > 0) {
        slot += c;
      } else {
        slot -= c;
      }
    } else if (sign > 0) {
      mpz_addmul(slot.get_mpz_t(), c.get_mpz_t(), f.get_mpz_t());
    } else {
      mpz_submul(slot.get_mpz_t(), c.get_mpz_t(), f.get_mpz_t());
    }
  }
}

void CyclotomicAccumulator::add_root(std::int64_t k, long c) {
  detail::addmul(buf_[static_cast<std::size_t>(mod(k, order_))], den_, c);
}

Cyclotomic CyclotomicAccumulator::result() const {
  return Cyclotomic::from_powers(order_, buf_, den_);
}

void CyclotomicAccumulator::clear() {
  for (auto& c : buf_) {
    c = 0;
  }
  den_ = 1;
}

}  // namespace wzw
