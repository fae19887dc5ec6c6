#pragma once

// Exact arithmetic in the cyclotomic field Q(w), w a primitive m-th root of
// unity, realised as Q[x]/Phi_m(x).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ndm {

using Rational = mpq_class;

/// Phi_m, coefficients from the constant term upwards.
std::vector<long long> cyclotomic_polynomial(int m);

int euler_totient(int m);

/// Shared per-modulus data: Phi_m and the reduction of x^e for 0 <= e < m.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int m);

  int modulus() const noexcept { return m_; }
  int degree() const noexcept { return degree_; }
  const std::vector<long long>& minimal_polynomial() const noexcept { return phi_; }
  /// x^e mod Phi_m as a length-degree() integer vector; e is taken mod m.
  const std::vector<long long>& power(long long e) const;

  explicit CyclotomicField(int m);

 private:
  int m_;
  int degree_;
  std::vector<long long> phi_;
  std::vector<std::vector<long long>> powers_;
};

/// w^exponent, stored by exponent only.
class RootPower {
 public:
  enum class Kind { One, MinusOne, Other };

  RootPower(long long exponent, int modulus);

  int exponent() const noexcept { return exponent_; }
  int modulus() const noexcept { return modulus_; }

  Kind classify() const noexcept;
  RootPower inverse() const { return RootPower(-static_cast<long long>(exponent_), modulus_); }
  RootPower pow(long long e) const;

  friend RootPower operator*(const RootPower& a, const RootPower& b);
  friend bool operator==(const RootPower& a, const RootPower& b) = default;

 private:
  int exponent_;
  int modulus_;
};

class CycloNumber {
 public:
  /// Zero of Q(w_m).
  explicit CycloNumber(int m);
  CycloNumber(int m, const Rational& value);
  CycloNumber(int m, long value) : CycloNumber(m, Rational(value)) {}
  CycloNumber(int m, int value) : CycloNumber(m, Rational(static_cast<long>(value))) {}
  /// Reduces an arbitrary-length coefficient vector (powers of w) mod Phi_m.
  CycloNumber(int m, const std::vector<Rational>& power_coefficients);

  static CycloNumber root(int m, long long exponent);
  static CycloNumber embed(const RootPower& r) { return root(r.modulus(), r.exponent()); }

  int modulus() const noexcept { return field_->modulus(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator*=(const Rational& r);

  CycloNumber operator-() const;
  /// Throws DomainError on zero.
  CycloNumber inverse() const;
  /// Image under w -> w^-1 (complex conjugation).
  CycloNumber conj() const;
  CycloNumber pow(long long e) const;

  /// If this is a single root of unity w^e, returns e.
  std::optional<int> root_exponent() const;

  /// Canonical text, e.g. "w^3 - w + 1/2", "0", "-3/2".
  std::string str() const;

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator<(const CycloNumber& a, const CycloNumber& b);

 private:
  CycloNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}
  void check_same_field(const CycloNumber& o) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloNumber& c);

/// Parses the text produced by CycloNumber::str(): a signed sum of terms
/// "a/b", "a/b*w^e", "w^e", "w". Throws DomainError on malformed input.
CycloNumber parse_cyclo(std::string_view text, int m);

}  // namespace ndm
