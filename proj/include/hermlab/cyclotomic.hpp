#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N), rational coefficients
// over the power basis 1, zeta, ..., zeta^{phi(N)-1}.

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hermlab::cyclo {

/// Q(zeta_N): the cyclotomic polynomial and reductions of zeta^k, k < N.
class CycField {
 public:
  static std::shared_ptr<const CycField> get(unsigned n);

  unsigned order() const { return n_; }
  unsigned degree() const { return phi_; }
  /// Coefficients of Phi_N, constant term first.
  const std::vector<mpz_class>& cyclotomic_polynomial() const { return poly_; }
  /// zeta^k reduced to the power basis.
  const std::vector<mpq_class>& power(unsigned k) const { return powers_[k % n_]; }

  explicit CycField(unsigned n);

 private:
  unsigned n_;
  unsigned phi_;
  std::vector<mpz_class> poly_;
  std::vector<std::vector<mpq_class>> powers_;
};

class CycNum {
 public:
  CycNum() = default;  // unusable placeholder; assign before use
  explicit CycNum(unsigned n, const mpq_class& r = 0);
  CycNum(std::shared_ptr<const CycField> f, std::vector<mpq_class> coeffs);

  /// zeta_N^k.
  static CycNum zeta(unsigned n, long k);
  /// A fixed square root of the integer m inside Q(zeta_N), if one exists
  /// there (the conductor of Q(sqrt m) must divide N).
  static std::optional<CycNum> sqrt_of_integer(unsigned n, long m);

  unsigned order() const { return field_->order(); }
  const CycField& field() const { return *field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Rational value; requires is_rational().
  mpq_class rational() const;

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator*(const mpq_class& r) const;
  CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  /// Throws std::domain_error for zero.
  CycNum inverse() const;
  /// Galois automorphism zeta -> zeta^a, gcd(a, N) = 1.
  CycNum galois(long a) const;
  CycNum conj() const { return galois(-1); }

  std::complex<double> to_complex() const;
  /// "a+b√D" when the value lies in a quadratic subfield with small D,
  /// otherwise a sum over powers of zeta ("z12^k").
  std::string render() const;

  friend bool operator==(const CycNum& a, const CycNum& b);

 private:
  std::shared_ptr<const CycField> field_;
  std::vector<mpq_class> c_;
  const CycField& f() const;
};

std::string to_string(const mpq_class& r);

}  // namespace hermlab::cyclo
