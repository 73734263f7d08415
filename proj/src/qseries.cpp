#include "wzw/qseries.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wzw/wzwrep.hpp"

namespace wzw {

QSeries::QSeries(std::int64_t denominator, std::int64_t offset, std::vector<Rational> coeffs)
    : den_(denominator), off_(offset), c_(std::move(coeffs)) {
  require(den_ >= 1, "q-series denominator must be positive");
  require(!c_.empty(), "q-series needs at least one retained coefficient");
}

QSeries QSeries::constant(const Rational& c, std::int64_t truncation) {
  require(truncation >= 0, "truncation must be non-negative");
  std::vector<Rational> v(static_cast<std::size_t>(truncation) + 1, Rational(0));
  v[0] = c;
  return QSeries(1, 0, std::move(v));
}

Rational QSeries::coeff_at(std::int64_t num) const {
  require(num <= last_exact(), "coefficient beyond truncation");
  if (num < off_) {
    return Rational(0);
  }
  return c_[static_cast<std::size_t>(num - off_)];
}

QSeries QSeries::refined(std::int64_t f) const {
  require(f >= 1, "refinement factor must be positive");
  if (f == 1) {
    return *this;
  }
  // Exact below q^{(offset + truncation + 1)/D}, i.e. below numerator
  // (offset + truncation + 1) f at granularity D f.
  std::vector<Rational> v(static_cast<std::size_t>((truncation() + 1) * f), Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    v[j * static_cast<std::size_t>(f)] = c_[j];
  }
  return QSeries(den_ * f, off_ * f, std::move(v));
}

QSeries QSeries::truncated(std::int64_t j) const {
  require(j >= 0, "truncation must be non-negative");
  if (j >= truncation()) {
    return *this;
  }
  return QSeries(den_, off_, std::vector<Rational>(c_.begin(), c_.begin() + j + 1));
}

bool QSeries::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& x : out.c_) {
    x = -x;
  }
  return out;
}

namespace {

std::pair<QSeries, QSeries> common_granularity(const QSeries& a, const QSeries& b) {
  const std::int64_t d = lcm(a.denominator(), b.denominator());
  return {a.refined(d / a.denominator()), b.refined(d / b.denominator())};
}

}  // namespace

QSeries operator+(const QSeries& x, const QSeries& y) {
  auto [a, b] = common_granularity(x, y);
  const std::int64_t off = std::min(a.off_, b.off_);
  const std::int64_t last = std::min(a.last_exact(), b.last_exact());
  require(last >= off, "sum has no exact coefficients");
  std::vector<Rational> v(static_cast<std::size_t>(last - off + 1), Rational(0));
  for (std::int64_t e = off; e <= last; ++e) {
    v[static_cast<std::size_t>(e - off)] = a.coeff_at(e) + b.coeff_at(e);
  }
  return QSeries(a.den_, off, std::move(v));
}

QSeries operator*(const QSeries& x, const QSeries& y) {
  auto [a, b] = common_granularity(x, y);
  const std::int64_t t = std::min(a.truncation(), b.truncation());
  std::vector<Rational> v(static_cast<std::size_t>(t) + 1, Rational(0));
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < b.c_.size() && static_cast<std::int64_t>(j) <= t; ++j) {
    if (b.c_[j] != 0) {
      nz.push_back(j);
    }
  }
  for (std::size_t i = 0; i < a.c_.size() && static_cast<std::int64_t>(i) <= t; ++i) {
    if (a.c_[i] == 0) {
      continue;
    }
    for (std::size_t j : nz) {
      if (static_cast<std::int64_t>(i + j) > t) {
        break;
      }
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return QSeries(a.den_, a.off_ + b.off_, std::move(v));
}

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries out = a;
  for (auto& x : out.c_) {
    x *= c;
  }
  return out;
}

QSeries QSeries::pow(unsigned k) const {
  QSeries out = constant(Rational(1), truncation()).refined(den_);
  QSeries base = *this;
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

std::complex<double> QSeries::evaluate(std::complex<double> tau) const {
  require(tau.imag() > 0, "tau must lie in the upper half plane");
  std::complex<double> sum = 0.0;
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) {
      continue;
    }
    const double e = static_cast<double>(off_ + static_cast<std::int64_t>(j)) / static_cast<double>(den_);
    sum += c_[j].get_d() * std::exp(two_pi_i * tau * e);
  }
  return sum;
}

namespace {

std::string exponent_string(std::int64_t num, std::int64_t den) {
  Rational e(num, den);
  e.canonicalize();
  if (e.get_den() == 1) {
    return e.get_num().get_str();
  }
  return e.get_num().get_str() + "/" + e.get_den().get_str();
}

}  // namespace

std::string QSeries::to_string() const {
  std::ostringstream os;
  if (off_ != 0) {
    os << "q^{" << exponent_string(off_, den_) << "} * ";
  }
  os << "(";
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) {
      continue;
    }
    Rational c = c_[j];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    const bool unit = j != 0 && (c == 1 || c == -1);
    if (unit) {
      if (c < 0) {
        os << "-";
      }
    } else {
      os << c.get_str();
    }
    if (j != 0) {
      os << (unit ? "" : " ") << "q";
      const std::string e = exponent_string(static_cast<std::int64_t>(j), den_);
      if (e != "1") {
        os << "^" << (e.find('/') == std::string::npos ? e : "{" + e + "}");
      }
    }
  }
  if (first) {
    os << "0";
  }
  os << " + O(q^{" << exponent_string(static_cast<std::int64_t>(c_.size()), den_) << "}))";
  return os.str();
}

Integer sigma1(std::int64_t m) {
  require(m >= 1, "sigma1 needs m >= 1");
  Integer s = 0;
  for (std::int64_t d : divisors(m)) {
    s += d;
  }
  return s;
}

QSeries eta_inverse_cubed(std::int64_t truncation) {
  require(truncation >= 0, "truncation must be non-negative");
  // k a_k = 3 sum_{j=1}^{k} sigma_1(j) a_{k-j}
  std::vector<Integer> sig(static_cast<std::size_t>(truncation) + 1);
  for (std::int64_t j = 1; j <= truncation; ++j) {
    sig[j] = sigma1(j);
  }
  std::vector<Integer> a(static_cast<std::size_t>(truncation) + 1);
  a[0] = 1;
  for (std::int64_t k = 1; k <= truncation; ++k) {
    Integer s = 0;
    for (std::int64_t j = 1; j <= k; ++j) {
      s += sig[j] * a[k - j];
    }
    a[k] = 3 * s / k;
  }
  return QSeries(1, 0, std::vector<Rational>(a.begin(), a.end()));
}

bool log_eta_expansion_check(std::int64_t truncation) {
  require(truncation >= 1, "truncation must be positive");
  const auto t = static_cast<std::size_t>(truncation);
  // P = prod (1 - q^k)
  std::vector<Rational> p(t + 1, Rational(0));
  p[0] = 1;
  for (std::size_t k = 1; k <= t; ++k) {
    for (std::size_t j = t; j >= k; --j) {
      p[j] -= p[j - k];
    }
  }
  // 1/P by the usual recurrence, then (ln P)' = P' / P.
  std::vector<Rational> inv(t + 1, Rational(0));
  inv[0] = 1;
  for (std::size_t j = 1; j <= t; ++j) {
    Rational s = 0;
    for (std::size_t i = 1; i <= j; ++i) {
      s += p[i] * inv[j - i];
    }
    inv[j] = -s;
  }
  for (std::size_t k = 1; k <= t; ++k) {
    // coefficient of q^{k-1} in P'/P, divided by k, is [q^k] ln P
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      s += Rational(static_cast<long>(i)) * p[i] * inv[k - i];
    }
    Rational log_coeff = -s / Rational(static_cast<long>(k));
    Rational expected(sigma1(static_cast<std::int64_t>(k)), Integer(static_cast<long>(k)));
    expected.canonicalize();
    log_coeff.canonicalize();
    if (log_coeff != expected) {
      return false;
    }
  }
  return true;
}

bool log_eta_printed_grouping_check() {
  for (std::int64_t k = 1; k <= 8; ++k) {
    Rational c = 1;  // q/(1-q)
    if (is_prime(k)) {
      c += Rational(1, k);
    }
    if (k == 4) {
      c += Rational(3, 4);
    } else if (k == 6) {
      c += 1;
    } else if (k == 8) {
      c += Rational(7, 8);
    }
    Rational expected(sigma1(k), Integer(static_cast<long>(k)));
    expected.canonicalize();
    if (c != expected) {
      return false;
    }
  }
  return true;
}

QSeries character(int lambda, int n, std::int64_t truncation) {
  require(n >= 2, "character needs n >= 2");
  require(lambda >= 1 && lambda <= n - 1, "character label out of range");
  require(truncation >= 0, "truncation must be non-negative");
  const std::int64_t D = 24 * static_cast<std::int64_t>(n);
  // x = lambda + 2nm, x^2/4n = lambda^2/4n + m lambda + n m^2
  const auto bound = static_cast<std::int64_t>(std::ceil(std::sqrt(4.0 * n * (truncation + 1))));
  std::vector<Integer> theta(static_cast<std::size_t>(truncation) + 1);
  for (std::int64_t m = -(bound / (2 * n)) - 1; m <= bound / (2 * n) + 1; ++m) {
    const std::int64_t x = lambda + 2 * n * m;
    if (std::abs(x) > bound) {
      continue;
    }
    const std::int64_t j = m * lambda + n * m * m;
    if (j <= truncation) {
      theta[j] += x;
    }
  }
  const QSeries eta = eta_inverse_cubed(truncation);
  std::vector<Rational> v(static_cast<std::size_t>(truncation * D) + 1, Rational(0));
  for (std::int64_t k = 0; k <= truncation; ++k) {
    Integer s = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
      if (theta[j] != 0) {
        s += theta[j] * eta.coeffs()[k - j].get_num();
      }
    }
    v[static_cast<std::size_t>(k * D)] = s;
  }
  // leading exponent lambda^2/4n - 1/8 = (6 lambda^2 - 3n)/24n
  return QSeries(D, 6 * lambda * lambda - 3 * n, std::move(v));
}

namespace {

// Every coefficient with exponent <= truncation must equal target's.
bool equals_through(const QSeries& s, const Rational& constant_term, std::int64_t truncation) {
  const std::int64_t D = s.denominator();
  const std::int64_t last = truncation * D;
  require(s.last_exact() >= last, "series not computed far enough");
  for (std::int64_t e = std::min<std::int64_t>(s.offset(), 0); e <= last; ++e) {
    const Rational want = e == 0 ? constant_term : Rational(0);
    if (s.coeff_at(e) != want) {
      return false;
    }
  }
  return true;
}

constexpr std::int64_t kIdentityMargin = 2;

}  // namespace

bool verify_k1_identity(const QSeries& chi1, const QSeries& chi2, std::int64_t truncation) {
  const QSeries lhs = chi1 * chi2 * (chi1.pow(4) - chi2.pow(4));
  return equals_through(lhs, Rational(2), truncation);
}

bool verify_k1_identity(std::int64_t truncation) {
  require(truncation >= 0, "truncation must be non-negative");
  const std::int64_t t = truncation + kIdentityMargin;
  return verify_k1_identity(character(1, 3, t), character(2, 3, t), truncation);
}

bool verify_t_parametrization(const QSeries& chi1, const QSeries& chi2, std::int64_t truncation) {
  const QSeries t = chi1 * chi2;
  const QSeries c4 = chi1.pow(4);
  const QSeries lhs = t * c4 * c4 - Rational(2) * c4 - t.pow(5);
  return equals_through(lhs, Rational(0), truncation);
}

bool verify_t_parametrization(std::int64_t truncation) {
  require(truncation >= 0, "truncation must be non-negative");
  const std::int64_t t = truncation + kIdentityMargin;
  return verify_t_parametrization(character(1, 3, t), character(2, 3, t), truncation);
}

std::complex<double> numeric_eval(const QSeries& s, std::complex<double> tau) {
  return s.evaluate(tau);
}

double s_transform_deviation(int n, std::complex<double> tau, std::int64_t truncation, int s_sign) {
  require(tau.imag() > 0, "tau must lie in the upper half plane");
  const std::complex<double> tau_s = -1.0 / tau;
  require(tau_s.imag() > 0, "-1/tau must lie in the upper half plane");
  const auto s = rho_S(n).embed();
  const std::size_t dim = static_cast<std::size_t>(n - 1);
  std::vector<std::complex<double>> at_tau(dim), at_s(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    const QSeries chi = character(static_cast<int>(a + 1), n, truncation);
    at_tau[a] = chi.evaluate(tau);
    at_s[a] = chi.evaluate(tau_s);
  }
  double dev = 0.0;
  for (std::size_t a = 0; a < dim; ++a) {
    std::complex<double> rhs = 0.0;
    for (std::size_t b = 0; b < dim; ++b) {
      rhs += static_cast<double>(s_sign) * s[a * dim + b] * at_tau[b];
    }
    dev = std::max(dev, std::abs(at_s[a] - rhs));
  }
  return dev;
}

bool s_transform_check(int n, std::complex<double> tau, std::int64_t truncation, double tol) {
  require(tol > 0, "tolerance must be positive");
  return s_transform_deviation(n, tau, truncation) < tol;
}

}  // namespace wzw
