#include "nichols_dm/cyclo.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "nichols_dm/errors.hpp"

namespace ndm {

namespace {

using IntPoly = std::vector<long long>;
using RatPoly = std::vector<Rational>;

// Exact quotient of num by a monic divisor; the remainder must vanish.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly quot(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    const long long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw CheckFailure("cyclotomic division left a remainder");
  return quot;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Quotient and remainder of a by b over Q (b nonzero, trimmed).
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  if (a.size() < b.size()) return {q, a};
  const size_t db = b.size() - 1;
  q.assign(a.size() - db, Rational(0));
  const Rational lead = b.back();
  for (size_t i = a.size(); i-- > db;) {
    if (sgn(a[i]) == 0) continue;
    Rational c = a[i] / lead;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int m) {
  if (m < 1) throw DomainError("cyclotomic_polynomial: m must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  IntPoly den{1};
  for (int d = 1; d < m; ++d)
    if (m % d == 0) den = multiply(den, cyclotomic_polynomial(d));
  IntPoly phi = divide_monic(num, den);
  std::lock_guard lock(mu);
  cache.emplace(m, phi);
  return phi;
}

int euler_totient(int m) {
  int count = 0;
  for (int k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) ++count;
  return count;
}

CyclotomicField::CyclotomicField(int m) : m_(m), phi_(cyclotomic_polynomial(m)) {
  degree_ = static_cast<int>(phi_.size()) - 1;
  powers_.reserve(m);
  IntPoly cur(degree_, 0);
  cur[0] = 1;
  if (degree_ == 0) cur.clear();
  for (int e = 0; e < m; ++e) {
    powers_.push_back(cur);
    if (degree_ == 0) continue;
    // multiply by x and reduce the x^degree term with the monic Phi_m
    const long long top = cur.back();
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < degree_; ++i) cur[i] -= top * phi_[i];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int m) {
  if (m < 1) throw DomainError("cyclotomic field modulus must be positive");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const CyclotomicField>(m);
  return slot;
}

const std::vector<long long>& CyclotomicField::power(long long e) const {
  long long r = e % m_;
  if (r < 0) r += m_;
  return powers_[static_cast<size_t>(r)];
}

// ---------------------------------------------------------------- RootPower

RootPower::RootPower(long long exponent, int modulus) : modulus_(modulus) {
  if (modulus < 1) throw DomainError("RootPower: modulus must be positive");
  long long r = exponent % modulus;
  if (r < 0) r += modulus;
  exponent_ = static_cast<int>(r);
}

RootPower::Kind RootPower::classify() const noexcept {
  if (exponent_ == 0) return Kind::One;
  if (modulus_ % 2 == 0 && exponent_ == modulus_ / 2) return Kind::MinusOne;
  return Kind::Other;
}

RootPower RootPower::pow(long long e) const {
  return RootPower(static_cast<long long>(exponent_) * (e % modulus_), modulus_);
}

RootPower operator*(const RootPower& a, const RootPower& b) {
  if (a.modulus_ != b.modulus_) throw DomainError("RootPower: modulus mismatch");
  return RootPower(static_cast<long long>(a.exponent_) + b.exponent_, a.modulus_);
}

// -------------------------------------------------------------- CycloNumber

CycloNumber::CycloNumber(int m) : field_(CyclotomicField::get(m)) {
  coeffs_.assign(field_->degree(), Rational(0));
}

CycloNumber::CycloNumber(int m, const Rational& value) : CycloNumber(m) {
  coeffs_[0] = value;
}

CycloNumber::CycloNumber(int m, const std::vector<Rational>& power_coefficients) : CycloNumber(m) {
  const int d = field_->degree();
  for (size_t e = 0; e < power_coefficients.size(); ++e) {
    if (sgn(power_coefficients[e]) == 0) continue;
    const auto& p = field_->power(static_cast<long long>(e));
    for (int i = 0; i < d; ++i)
      if (p[i] != 0) coeffs_[i] += power_coefficients[e] * static_cast<long>(p[i]);
  }
}

CycloNumber CycloNumber::root(int m, long long exponent) {
  auto field = CyclotomicField::get(m);
  const auto& p = field->power(exponent);
  std::vector<Rational> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) c[i] = static_cast<long>(p[i]);
  return CycloNumber(std::move(field), std::move(c));
}

void CycloNumber::check_same_field(const CycloNumber& o) const {
  if (field_->modulus() != o.field_->modulus())
    throw DomainError("CycloNumber: operands live in different cyclotomic fields");
}

bool CycloNumber::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const noexcept {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool CycloNumber::is_one() const noexcept { return is_rational() && coeffs_[0] == 1; }

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  check_same_field(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  check_same_field(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  check_same_field(o);
  const int d = field_->degree();
  if (o.is_rational()) return *this *= o.coeffs_[0];
  if (is_rational()) {
    Rational r = coeffs_[0];
    coeffs_ = o.coeffs_;
    return *this *= r;
  }
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (int j = 0; j < d; ++j)
      if (sgn(o.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  for (int i = 0; i < d; ++i) coeffs_[i] = prod[i];
  for (int e = d; e < 2 * d - 1; ++e) {
    if (sgn(prod[e]) == 0) continue;
    const auto& p = field_->power(e);
    for (int i = 0; i < d; ++i)
      if (p[i] != 0) coeffs_[i] += prod[e] * static_cast<long>(p[i]);
  }
  return *this;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DomainError("CycloNumber: inverse of zero");
  if (is_rational()) return CycloNumber(field_, [&] {
      std::vector<Rational> c(coeffs_.size(), Rational(0));
      c[0] = 1 / coeffs_[0];
      return c;
    }());
  // extended Euclid: track u with u*a == r (mod Phi_m)
  RatPoly phi;
  for (auto c : field_->minimal_polynomial()) phi.emplace_back(static_cast<long>(c));
  RatPoly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  RatPoly r0 = phi, r1 = a;
  RatPoly u0, u1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, rem] = divmod(r0, r1);
    RatPoly u2 = poly_sub(u0, poly_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
    if (r1.empty()) throw CheckFailure("CycloNumber: element not invertible mod Phi_m");
  }
  const Rational c = r1[0];
  for (auto& x : u1) x /= c;
  return CycloNumber(modulus(), u1);
}

CycloNumber CycloNumber::conj() const {
  const int m = modulus();
  std::vector<Rational> pc(m, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) pc[(m - static_cast<int>(i)) % m] += coeffs_[i];
  return CycloNumber(m, pc);
}

CycloNumber CycloNumber::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNumber result(modulus(), Rational(1));
  CycloNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::optional<int> CycloNumber::root_exponent() const {
  const int m = modulus();
  for (int e = 0; e < m; ++e) {
    const auto& p = field_->power(e);
    bool match = true;
    for (size_t i = 0; i < coeffs_.size() && match; ++i) match = coeffs_[i] == static_cast<long>(p[i]);
    if (match) return e;
  }
  return std::nullopt;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  return a.modulus() == b.modulus() && a.coeffs_ == b.coeffs_;
}

bool operator<(const CycloNumber& a, const CycloNumber& b) {
  if (a.modulus() != b.modulus()) return a.modulus() < b.modulus();
  return a.coeffs_ < b.coeffs_;
}

std::string CycloNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t idx = coeffs_.size(); idx-- > 0;) {
    const Rational& c = coeffs_[idx];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (idx == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "w";
    if (idx > 1) os << "^" << idx;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& c) { return os << c.str(); }

// ------------------------------------------------------------------ parsing

namespace {

class CycloParser {
 public:
  CycloParser(std::string_view text, int m) : s_(text), m_(m) {}

  CycloNumber parse() {
    std::vector<Rational> pc(m_, Rational(0));
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, exp] = term();
      long long e = exp % m_;
      if (e < 0) e += m_;
      pc[static_cast<size_t>(e)] += coef * sign;
      skip();
    }
    return CycloNumber(m_, pc);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("cannot parse cyclotomic number '" + std::string(s_) + "': " + why);
  }

  long long integer(bool allow_sign) {
    skip();
    bool neg = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) neg = get() == '-';
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > (1LL << 50)) fail("number too large");
    }
    return neg ? -v : v;
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(get());
    return d;
  }

  long long wpow() {
    get();  // 'w'
    skip();
    if (peek() != '^') return 1;
    get();
    return integer(true);
  }

  std::pair<Rational, long long> term() {
    skip();
    if (peek() == 'w') return {Rational(1), wpow()};
    std::string num = digits();
    if (num.empty()) fail("expected a term");
    Rational coef(mpz_class(num), 1);
    skip();
    if (peek() == '/') {
      get();
      skip();
      std::string den = digits();
      if (den.empty() || mpz_class(den) == 0) fail("bad denominator");
      coef = Rational(mpz_class(num), mpz_class(den));
      coef.canonicalize();
    }
    skip();
    if (peek() == '*') {
      get();
      skip();
      if (peek() != 'w') fail("expected 'w' after '*'");
      return {coef, wpow()};
    }
    if (peek() == 'w') return {coef, wpow()};
    return {coef, 0};
  }

  std::string_view s_;
  int m_;
  size_t pos_ = 0;
};

}  // namespace

CycloNumber parse_cyclo(std::string_view text, int m) { return CycloParser(text, m).parse(); }

}  // namespace ndm
