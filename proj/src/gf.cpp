#include "hermlab/gf.hpp"

#include <algorithm>
#include <sstream>

namespace hermlab::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  auto f = prime_factors(q);
  if (f.size() != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  std::uint32_t p = static_cast<std::uint32_t>(f[0]);
  std::uint32_t e = 0;
  for (std::uint32_t r = q; r > 1; r /= p) ++e;
  return {p, e};
}

// ---------------------------------------------------------------------------
// PolyField

PolyField::PolyField(std::uint32_t p, std::uint32_t e, Coeffs modulus)
    : p_(p), e_(e), order_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("extension degree must be positive");
  if (modulus_.size() != e + 1 || modulus_.back() != 1)
    throw std::invalid_argument("modulus must be monic of the stated degree");
  for (auto c : modulus_)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  for (std::uint32_t i = 0; i < e; ++i) {
    order_ *= p;
    if (order_ > kGenericLimit) throw std::invalid_argument("field order exceeds generic-mode cap");
  }
}

PolyField::Coeffs PolyField::one() const {
  Coeffs c(e_, 0);
  c[0] = 1 % p_;
  return c;
}

PolyField::Coeffs PolyField::x() const {
  if (e_ == 1) {
    // X = -modulus[0] in F_p.
    return Coeffs{(p_ - modulus_[0]) % p_};
  }
  Coeffs c(e_, 0);
  c[1] = 1;
  return c;
}

PolyField::Coeffs PolyField::add(const Coeffs& a, const Coeffs& b) const {
  Coeffs c(e_);
  for (std::uint32_t i = 0; i < e_; ++i) c[i] = (a[i] + b[i]) % p_;
  return c;
}

PolyField::Coeffs PolyField::neg(const Coeffs& a) const {
  Coeffs c(e_);
  for (std::uint32_t i = 0; i < e_; ++i) c[i] = (p_ - a[i]) % p_;
  return c;
}

PolyField::Coeffs PolyField::sub(const Coeffs& a, const Coeffs& b) const { return add(a, neg(b)); }

PolyField::Coeffs PolyField::mul(const Coeffs& a, const Coeffs& b) const {
  std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
  }
  // Reduce by the monic modulus from the top down.
  for (std::size_t k = prod.size(); k-- > e_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < e_; ++i)
      prod[k - e_ + i] = (prod[k - e_ + i] + (p_ - modulus_[i]) * c) % p_;
  }
  Coeffs out(e_);
  for (std::uint32_t i = 0; i < e_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

PolyField::Coeffs PolyField::pow(Coeffs a, std::uint64_t k) const {
  Coeffs r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

bool PolyField::is_zero(const Coeffs& a) const {
  return std::all_of(a.begin(), a.end(), [](auto c) { return c == 0; });
}

PolyField::Coeffs PolyField::inv(const Coeffs& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  return pow(a, order_ - 2);
}

std::uint64_t PolyField::pack(const Coeffs& a) const {
  std::uint64_t v = 0;
  for (std::uint32_t i = e_; i-- > 0;) v = v * p_ + a[i];
  return v;
}

PolyField::Coeffs PolyField::unpack(std::uint64_t v) const {
  Coeffs c(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return c;
}

bool PolyField::modulus_is_primitive() const {
  if (modulus_[0] == 0) return false;
  const std::uint64_t n1 = order_ - 1;
  const Coeffs g = x();
  if (pow(g, n1) != one()) return false;
  for (auto r : prime_factors(n1))
    if (pow(g, n1 / r) == one()) return false;
  return true;
}

PolyField::Coeffs least_primitive_modulus(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("extension degree must be positive");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    count *= p;
    if (count > kGenericLimit) throw std::invalid_argument("field order exceeds generic-mode cap");
  }
  // Lexicographic with the constant term most significant.
  PolyField::Coeffs low(e, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::uint32_t i = e; i-- > 0;) {
      low[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    PolyField::Coeffs m = low;
    m.push_back(1);
    if (PolyField(p, e, m).modulus_is_primitive()) return m;
  }
  throw std::logic_error("no primitive polynomial found");
}

// ---------------------------------------------------------------------------
// Field

Field Field::build(std::uint32_t p, std::uint32_t e, std::uint64_t table_limit) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("extension degree must be positive");
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    n *= p;
    if (n > table_limit) throw std::invalid_argument("field order exceeds table-mode limit; use PolyField");
  }
  Field f;
  f.p_ = p;
  f.e_ = e;
  f.n_ = static_cast<std::uint32_t>(n);
  f.modulus_ = least_primitive_modulus(p, e);
  PolyField pf(p, e, f.modulus_);

  const std::uint32_t n1 = f.n_ - 1;
  f.exp_packed_.resize(n1);
  f.packed_to_elem_.assign(f.n_, 0);
  PolyField::Coeffs cur = pf.one();
  const PolyField::Coeffs g = pf.x();
  for (std::uint32_t k = 0; k < n1; ++k) {
    const auto packed = pf.pack(cur);
    f.exp_packed_[k] = packed;
    f.packed_to_elem_[packed] = k + 1;
    cur = pf.mul(cur, g);
  }
  // Zech logarithms: 1 + g^k.
  f.zech_.assign(n1, -1);
  const auto one = pf.one();
  for (std::uint32_t k = 0; k < n1; ++k) {
    const auto s = pf.add(one, pf.unpack(f.exp_packed_[k]));
    const Elem e1 = f.packed_to_elem_[pf.pack(s)];
    f.zech_[k] = e1 == 0 ? -1 : static_cast<std::int32_t>(e1 - 1);
  }
  f.minus_one_ = f.packed_to_elem_[pf.pack(pf.neg(one))];

  if (f.n_ <= 256) {
    f.dense_ = false;
    f.add_tab_.resize(std::size_t{f.n_} * f.n_);
    f.mul_tab_.resize(std::size_t{f.n_} * f.n_);
    for (Elem a = 0; a < f.n_; ++a)
      for (Elem b = 0; b < f.n_; ++b) {
        f.add_tab_[a * f.n_ + b] = static_cast<std::uint8_t>(f.add_zech(a, b));
        f.mul_tab_[a * f.n_ + b] = static_cast<std::uint8_t>(f.mul(a, b));
      }
    f.dense_ = true;
  }
  return f;
}

Elem Field::add_zech(Elem a, Elem b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  std::uint32_t la = a - 1, lb = b - 1;
  if (la > lb) std::swap(la, lb);
  const std::int32_t z = zech_[lb - la];
  if (z < 0) return 0;
  std::uint32_t s = la + static_cast<std::uint32_t>(z);
  if (s >= n_ - 1) s -= n_ - 1;
  return s + 1;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t l = a - 1;
  return (l == 0 ? 0 : (n_ - 1) - l) + 1;
}

Elem Field::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw std::domain_error("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t n1 = n_ - 1;
  std::int64_t l = static_cast<std::int64_t>(a - 1) % n1;
  std::int64_t r = ((l * (k % n1)) % n1 + n1) % n1;
  return static_cast<Elem>(r) + 1;
}

Elem Field::from_int(std::int64_t c) const {
  std::int64_t r = ((c % p_) + p_) % p_;
  PolyField::Coeffs v(e_, 0);
  v[0] = static_cast<std::uint32_t>(r);
  return from_coeffs(v);
}

PolyField::Coeffs Field::to_coeffs(Elem a) const {
  PolyField::Coeffs c(e_, 0);
  if (a == 0) return c;
  std::uint64_t v = exp_packed_[a - 1];
  for (std::uint32_t i = 0; i < e_; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return c;
}

Elem Field::from_coeffs(const PolyField::Coeffs& c) const {
  std::uint64_t v = 0;
  for (std::uint32_t i = e_; i-- > 0;) v = v * p_ + (c.at(i) % p_);
  return packed_to_elem_.at(v);
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(n_);
  for (Elem i = 0; i < n_; ++i) out[i] = i;
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << n_ << " (p=" << p_ << ", e=" << e_ << ", modulus=[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << "])";
  return os.str();
}

// ---------------------------------------------------------------------------
// Subfields and towers

std::vector<Elem> subfield_embedding(const Field& small, const Field& big) {
  if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0)
    throw std::invalid_argument("not a subfield: " + small.describe() + " in " + big.describe());
  const auto& m = small.modulus();
  for (Elem beta = 1; beta < big.order(); ++beta) {
    Elem acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = big.add(big.mul(acc, beta), big.from_int(m[i]));
    if (acc != 0) continue;
    std::vector<Elem> emb(small.order(), 0);
    for (Elem k = 1; k < small.order(); ++k) emb[k] = big.pow(beta, k - 1);
    return emb;
  }
  throw std::logic_error("modulus of subfield has no root in the extension");
}

Tower Tower::build(std::uint32_t q, std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  auto [p, f] = prime_power(q);
  Field base = Field::build(p, f);
  Field ext = Field::build(p, f * m);
  auto emb = subfield_embedding(base, ext);
  return Tower(q, m, std::move(base), std::move(ext), std::move(emb));
}

namespace {
std::vector<Elem> norm_solutions(const Tower& t, Elem target) {
  std::vector<Elem> out;
  const auto& F = t.field();
  for (Elem x = 1; x < F.order(); ++x)
    if (F.pow(x, t.q() + 1) == target) out.push_back(x);
  return out;
}
}  // namespace

Elem find_rho(const Tower& t) {
  auto sols = norm_solutions(t, t.field().minus_one());
  if (sols.empty()) throw std::logic_error("x^{q+1} = -1 has no solution");
  return sols.front();
}

std::pair<Elem, Elem> find_rho_pair(const Tower& t) {
  auto sols = norm_solutions(t, t.field().minus_one());
  if (sols.size() < 2) throw std::logic_error("x^{q+1} = -1 has fewer than two solutions");
  return {sols[0], sols[1]};
}

Elem norm_preimage(const Tower& t, Elem a) {
  auto sols = norm_solutions(t, a);
  if (sols.empty()) throw std::invalid_argument("element is not a norm (not in F_q^x)");
  return sols.front();
}

}  // namespace hermlab::gf
