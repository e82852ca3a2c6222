#pragma once

// Finite fields F_{p^e} in small-table (Zech logarithm) form, plus a generic
// coefficient-vector implementation used for table construction and as an
// independent arithmetic path.
//
// Elements of a table-mode field are encoded as 0 for zero and 1 + log_g(x)
// otherwise, where g is the class of X modulo the primitive modulus. This is
// also the serialized form.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hermlab::gf {

using Elem = std::uint32_t;

inline constexpr Elem kZero = 0;
inline constexpr Elem kOne = 1;

/// Default upper bound on the field order for table mode.
inline constexpr std::uint64_t kTableLimit = 1ull << 16;
/// Upper bound for the generic coefficient mode.
inline constexpr std::uint64_t kGenericLimit = 1ull << 24;

bool is_prime(std::uint64_t n);

/// Prime factors of n without multiplicity, increasing.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Generic arithmetic in F_p[X]/(modulus). Elements are coefficient vectors of
/// length e, constant term first. The modulus is monic of degree e and
/// given constant term first (e + 1 entries, last one equal to 1).
class PolyField {
 public:
  using Coeffs = std::vector<std::uint32_t>;

  PolyField(std::uint32_t p, std::uint32_t e, Coeffs modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint64_t order() const { return order_; }
  const Coeffs& modulus() const { return modulus_; }

  Coeffs zero() const { return Coeffs(e_, 0); }
  Coeffs one() const;
  /// The class of X.
  Coeffs x() const;

  Coeffs add(const Coeffs& a, const Coeffs& b) const;
  Coeffs sub(const Coeffs& a, const Coeffs& b) const;
  Coeffs neg(const Coeffs& a) const;
  Coeffs mul(const Coeffs& a, const Coeffs& b) const;
  Coeffs pow(Coeffs a, std::uint64_t k) const;
  /// Throws std::domain_error for zero.
  Coeffs inv(const Coeffs& a) const;
  bool is_zero(const Coeffs& a) const;

  /// Base-p packing: sum c_i p^i.
  std::uint64_t pack(const Coeffs& a) const;
  Coeffs unpack(std::uint64_t v) const;

  /// True when X has multiplicative order p^e - 1 (this forces irreducibility).
  bool modulus_is_primitive() const;

 private:
  std::uint32_t p_;
  std::uint32_t e_;
  std::uint64_t order_;
  Coeffs modulus_;
};

/// Lexicographically least monic primitive polynomial of degree e over F_p.
/// Coefficients are compared constant term first, with F_p ordered 0..p-1.
PolyField::Coeffs least_primitive_modulus(std::uint32_t p, std::uint32_t e);

/// A table-mode finite field. Immutable after construction and safe to share
/// between threads.
class Field {
 public:
  /// Throws std::invalid_argument for a non-prime p, e == 0, or an order
  /// above the table limit.
  static Field build(std::uint32_t p, std::uint32_t e, std::uint64_t table_limit = kTableLimit);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t order() const { return n_; }
  const PolyField::Coeffs& modulus() const { return modulus_; }

  Elem generator() const { return 2; }
  Elem minus_one() const { return minus_one_; }

  Elem add(Elem a, Elem b) const {
    if (dense_) return add_tab_[a * n_ + b];
    return add_zech(a, b);
  }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = (a - 1) + (b - 1);
    if (s >= n_ - 1) s -= n_ - 1;
    return s + 1;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : mul(a, minus_one_); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t k) const;

  /// Discrete log base generator(); nullopt for zero.
  std::optional<std::uint32_t> log(Elem a) const {
    if (a == 0) return std::nullopt;
    return a - 1;
  }
  Elem exp(std::uint64_t k) const { return static_cast<Elem>(k % (n_ - 1)) + 1; }

  /// Image of the integer c under Z -> F_p -> F.
  Elem from_int(std::int64_t c) const;

  PolyField::Coeffs to_coeffs(Elem a) const;
  Elem from_coeffs(const PolyField::Coeffs& c) const;

  /// All elements: 0 first, then increasing discrete-log index.
  std::vector<Elem> elements() const;

  /// Dense add/mul tables (only present for small orders); used by hot loops.
  bool has_dense_tables() const { return dense_; }
  const std::uint8_t* add_table() const { return add_tab_.data(); }
  const std::uint8_t* mul_table() const { return mul_tab_.data(); }

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  Field() = default;
  Elem add_zech(Elem a, Elem b) const;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t n_ = 0;
  PolyField::Coeffs modulus_;
  std::vector<std::uint64_t> exp_packed_;  // g^k as packed coefficients
  std::vector<Elem> packed_to_elem_;
  std::vector<std::int32_t> zech_;  // log(1 + g^k), -1 when 1 + g^k == 0
  Elem minus_one_ = 1;
  bool dense_ = false;
  std::vector<std::uint8_t> add_tab_;
  std::vector<std::uint8_t> mul_tab_;
};

/// Map from the elements of `small` into `big` that is a field homomorphism:
/// generator(small) goes to the least-index root of small's modulus in big.
/// Throws std::invalid_argument when small is not a subfield of big.
std::vector<Elem> subfield_embedding(const Field& small, const Field& big);

/// F_q inside F_{q^m} with the recorded embedding and the q-power Frobenius.
class Tower {
 public:
  /// q must be a prime power; m >= 1.
  static Tower build(std::uint32_t q, std::uint32_t m = 2);

  std::uint32_t q() const { return q_; }
  std::uint32_t extension_degree() const { return m_; }
  const Field& base() const { return base_; }
  const Field& field() const { return ext_; }
  Elem embed(Elem base_elem) const { return embedding_.at(base_elem); }
  const std::vector<Elem>& embedding() const { return embedding_; }

  /// x -> x^q.
  Elem frobenius(Elem x) const {
    if (x == 0) return 0;
    const std::uint64_t n1 = ext_.order() - 1;
    return static_cast<Elem>((static_cast<std::uint64_t>(x - 1) * q_) % n1) + 1;
  }
  /// x -> x^{q+1}; lands in F_q when m == 2.
  Elem norm(Elem x) const { return ext_.mul(x, frobenius(x)); }
  bool in_base(Elem x) const { return frobenius(x) == x; }

 private:
  std::uint32_t q_ = 0;
  std::uint32_t m_ = 0;
  Field base_;
  Field ext_;
  std::vector<Elem> embedding_;

  Tower(std::uint32_t q, std::uint32_t m, Field base, Field ext, std::vector<Elem> emb)
      : q_(q), m_(m), base_(std::move(base)), ext_(std::move(ext)), embedding_(std::move(emb)) {}
};

/// Least-index rho in F_{q^2} with rho^{q+1} = -1.
Elem find_rho(const Tower& t);
/// The two least-index distinct solutions of x^{q+1} = -1.
std::pair<Elem, Elem> find_rho_pair(const Tower& t);
/// Least-index c with c^{q+1} = a for a in F_q^x (norm surjectivity).
Elem norm_preimage(const Tower& t, Elem a);

/// Splits q = p^f; throws std::invalid_argument if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);

}  // namespace hermlab::gf
