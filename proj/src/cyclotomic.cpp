#include "hermlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hermlab::cyclo {

namespace {

std::vector<mpz_class> exact_divide(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  // b monic; constant term first.
  const std::size_t db = b.size() - 1;
  std::vector<mpz_class> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

}  // namespace

CycField::CycField(unsigned n) : n_(n) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<mpz_class> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = exact_divide(std::move(p), get(d)->cyclotomic_polynomial());
  poly_ = std::move(p);
  phi_ = static_cast<unsigned>(poly_.size() - 1);

  powers_.resize(n);
  std::vector<mpq_class> cur(phi_, 0);
  cur[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    powers_[k] = cur;
    // multiply by zeta: shift up and fold x^phi = -sum poly_i x^i
    const mpq_class top = cur[phi_ - 1];
    for (unsigned i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (unsigned i = 0; i < phi_; ++i) cur[i] -= top * mpq_class(poly_[i]);
  }
}

std::shared_ptr<const CycField> CycField::get(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CycField>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Built outside the lock: construction recurses into get() for divisors.
  auto f = std::make_shared<const CycField>(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(f)).first->second;
}

CycNum::CycNum(unsigned n, const mpq_class& r) : field_(CycField::get(n)), c_(field_->degree(), 0) { c_[0] = r; }

CycNum::CycNum(std::shared_ptr<const CycField> f, std::vector<mpq_class> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
  if (c_.size() != field_->degree()) throw std::invalid_argument("coefficient count must equal phi(N)");
}

const CycField& CycNum::f() const {
  if (!field_) throw std::logic_error("uninitialised cyclotomic number");
  return *field_;
}

CycNum CycNum::zeta(unsigned n, long k) {
  auto fld = CycField::get(n);
  const long m = ((k % static_cast<long>(n)) + n) % n;
  return CycNum(fld, fld->power(static_cast<unsigned>(m)));
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class CycNum::rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
  return c_[0];
}

CycNum CycNum::operator+(const CycNum& o) const {
  if (o.order() != order()) throw std::invalid_argument("cyclotomic orders differ");
  CycNum r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
  if (o.order() != order()) throw std::invalid_argument("cyclotomic orders differ");
  CycNum r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum CycNum::operator*(const mpq_class& s) const {
  CycNum r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
  if (o.order() != order()) throw std::invalid_argument("cyclotomic orders differ");
  const unsigned phi = f().degree();
  if (o.is_rational()) return *this * o.c_[0];
  if (is_rational()) return o * c_[0];
  std::vector<mpq_class> prod(2 * phi - 1, 0);
  for (unsigned i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < phi; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  std::vector<mpq_class> out(prod.begin(), prod.begin() + phi);
  for (unsigned k = phi; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& pw = f().power(k);
    for (unsigned i = 0; i < phi; ++i)
      if (pw[i] != 0) out[i] += prod[k] * pw[i];
  }
  return CycNum(field_, std::move(out));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return CycNum(order(), 1 / c_[0]);
  // Solve (multiplication by this) x = 1 over Q.
  const unsigned phi = f().degree();
  std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1, 0));
  for (unsigned j = 0; j < phi; ++j) {
    const CycNum col = *this * CycNum(field_, field_->power(j));
    for (unsigned i = 0; i < phi; ++i) m[i][j] = col.c_[i];
  }
  m[0][phi] = 1;
  for (unsigned c = 0; c < phi; ++c) {
    unsigned p = c;
    while (p < phi && m[p][c] == 0) ++p;
    if (p == phi) throw std::logic_error("singular multiplication map in a field");
    std::swap(m[p], m[c]);
    const mpq_class inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (unsigned r = 0; r < phi; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class s = m[r][c];
      for (unsigned k = c; k <= phi; ++k) m[r][k] -= s * m[c][k];
    }
  }
  std::vector<mpq_class> x(phi);
  for (unsigned i = 0; i < phi; ++i) x[i] = m[i][phi];
  return CycNum(field_, std::move(x));
}

CycNum CycNum::galois(long a) const {
  const long n = order();
  if (std::gcd(((a % n) + n) % n, n) != 1) throw std::invalid_argument("Galois exponent must be a unit mod N");
  const unsigned phi = f().degree();
  std::vector<mpq_class> out(phi, 0);
  for (unsigned k = 0; k < phi; ++k) {
    if (c_[k] == 0) continue;
    const long e = (((a * static_cast<long>(k)) % n) + n) % n;
    const auto& pw = f().power(static_cast<unsigned>(e));
    for (unsigned i = 0; i < phi; ++i)
      if (pw[i] != 0) out[i] += c_[k] * pw[i];
  }
  return CycNum(field_, std::move(out));
}

std::optional<CycNum> CycNum::sqrt_of_integer(unsigned n, long m) {
  if (m == 0) return CycNum(n, 0);
  long rest = m < 0 ? -m : m;
  long square = 1, free = 1;
  for (long p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      free *= p;
    }
  }
  free *= rest;

  CycNum out(n, square);
  int sign = 1;  // sign of the square of the product built so far
  long f = free;
  for (long p = 2; p <= f; ++p) {
    if (f % p) continue;
    f /= p;
    if (p == 2) {
      if (n % 8) return std::nullopt;
      out *= zeta(n, n / 8) + zeta(n, -static_cast<long>(n / 8));
      continue;
    }
    if (n % p) return std::nullopt;
    // Quadratic Gauss sum: its square is (-1)^{(p-1)/2} p.
    CycNum g(n, 0);
    for (long a = 1; a < p; ++a) {
      long leg = 1;  // Euler criterion
      long base = a, e = (p - 1) / 2;
      long acc = 1;
      while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
      }
      leg = acc == 1 ? 1 : -1;
      const CycNum z = zeta(n, static_cast<long>(n / p) * a);
      g = leg > 0 ? g + z : g - z;
    }
    out *= g;
    if (p % 4 == 3) sign = -sign;
  }
  if ((m < 0 ? -1 : 1) != sign) {
    if (n % 4) return std::nullopt;
    out *= zeta(n, n / 4);
  }
  return out;
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> z = 0;
  const double n = order();
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const double a = 2 * std::numbers::pi * static_cast<double>(k) / n;
    z += c_[k].get_d() * std::complex<double>(std::cos(a), std::sin(a));
  }
  return z;
}

bool operator==(const CycNum& a, const CycNum& b) { return a.order() == b.order() && a.c_ == b.c_; }

std::string to_string(const mpq_class& r) { return r.get_str(); }

std::string CycNum::render() const {
  if (is_rational()) return to_string(c_[0]);
  static const long kRadicands[] = {-3, -1, 2, -2, 3, 5, -5, 6, -6, -7, 7};
  for (long d : kRadicands) {
    auto s = sqrt_of_integer(order(), d);
    if (!s) continue;
    std::size_t k = 1;
    while (k < s->c_.size() && s->c_[k] == 0) ++k;
    if (k == s->c_.size()) continue;
    const mpq_class b = c_[k] / s->c_[k];
    const mpq_class a = c_[0] - b * s->c_[0];
    if (!(CycNum(order(), a) + *s * b == *this)) continue;
    std::string out = a == 0 ? "" : to_string(a);
    std::string coef;
    if (b == 1) coef = "";
    else if (b == -1) coef = "-";
    else coef = to_string(b);
    if (!out.empty() && b > 0) out += "+";
    return out + coef + "√" + std::to_string(d);
  }
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!out.empty() && c_[k] > 0) out += "+";
    out += to_string(c_[k]);
    if (k) out += "*z" + std::to_string(order()) + "^" + std::to_string(k);
  }
  return out;
}

}  // namespace hermlab::cyclo
