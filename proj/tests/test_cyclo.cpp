#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "nichols_dm/cyclo.hpp"
#include "nichols_dm/errors.hpp"

using namespace ndm;

namespace {

using cplx = std::complex<long double>;
const long double kPi = std::acos(-1.0L);

// Phi_m from its complex roots, rounded.
std::vector<long long> numeric_cyclotomic(int m) {
  std::vector<cplx> poly{1};
  for (int k = 1; k <= m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    cplx root = std::polar(1.0L, 2 * kPi * k / m);
    std::vector<cplx> next(poly.size() + 1);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = next;
  }
  std::vector<long long> out;
  for (auto c : poly) out.push_back(std::llround(c.real()));
  return out;
}

cplx numeric_value(const CycloNumber& x) {
  const int m = x.modulus();
  cplx v = 0;
  for (size_t i = 0; i < x.coefficients().size(); ++i)
    v += static_cast<long double>(x.coefficients()[i].get_d()) * std::polar(1.0L, 2 * kPi * static_cast<long double>(i) / m);
  return v;
}

CycloNumber random_element(int m, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 4);
  std::vector<Rational> pc(m);
  for (auto& c : pc) {
    c = Rational(coef(rng), den(rng));
    c.canonicalize();
  }
  return CycloNumber(m, pc);
}

}  // namespace

TEST(Cyclotomic, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (std::vector<long long>{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long long>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, MatchesComplexRootProduct) {
  for (int m = 1; m <= 64; ++m) {
    EXPECT_EQ(cyclotomic_polynomial(m), numeric_cyclotomic(m)) << "m=" << m;
    EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(m).size()) - 1, euler_totient(m));
  }
}

TEST(Cyclotomic, ProductOverDivisorsIsXmMinusOne) {
  for (int m = 1; m <= 40; ++m) {
    std::vector<long long> prod{1};
    for (int d = 1; d <= m; ++d) {
      if (m % d) continue;
      auto phi = cyclotomic_polynomial(d);
      std::vector<long long> next(prod.size() + phi.size() - 1, 0);
      for (size_t i = 0; i < prod.size(); ++i)
        for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
      prod = next;
    }
    std::vector<long long> expect(m + 1, 0);
    expect[0] = -1;
    expect[m] = 1;
    EXPECT_EQ(prod, expect) << "m=" << m;
  }
}

TEST(RootPower, Classify) {
  EXPECT_EQ(RootPower(0, 12).classify(), RootPower::Kind::One);
  EXPECT_EQ(RootPower(6, 12).classify(), RootPower::Kind::MinusOne);
  EXPECT_EQ(RootPower(3, 12).classify(), RootPower::Kind::Other);
  EXPECT_EQ(RootPower(-6, 12).exponent(), 6);
  EXPECT_EQ(RootPower(3, 7).classify(), RootPower::Kind::Other);
}

TEST(RootPower, ClassifyAgreesWithFieldArithmetic) {
  for (int m = 1; m <= 64; ++m)
    for (int a = 0; a < m; ++a) {
      const bool minus_one = RootPower(a, m).classify() == RootPower::Kind::MinusOne;
      EXPECT_EQ(minus_one, (CycloNumber::root(m, a) + CycloNumber(m, 1)).is_zero()) << m << " " << a;
      EXPECT_EQ(RootPower(a, m).classify() == RootPower::Kind::One, CycloNumber::root(m, a).is_one());
    }
}

TEST(CycloNumber, SpecExamples) {
  for (int m : {3, 5, 12, 20}) {
    EXPECT_TRUE((CycloNumber::root(m, 1) * CycloNumber::root(m, m - 1)).is_one());
    CycloNumber sum(m);
    for (int a = 0; a < m; ++a) sum += CycloNumber::root(m, a);
    EXPECT_TRUE(sum.is_zero());
  }
  EXPECT_TRUE((CycloNumber(12, 1) + CycloNumber::root(12, 6)).is_zero());
  EXPECT_THROW(CycloNumber(12).inverse(), DomainError);
}

TEST(CycloNumber, ExponentHomomorphism) {
  for (int m : {1, 2, 7, 12, 16, 30})
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        EXPECT_EQ(CycloNumber::root(m, a) * CycloNumber::root(m, b), CycloNumber::root(m, a + b));
}

TEST(CycloNumber, MinimalPolynomialVanishes) {
  for (int m = 1; m <= 64; ++m) {
    CycloNumber v(m);
    auto phi = cyclotomic_polynomial(m);
    for (size_t i = 0; i < phi.size(); ++i) v += CycloNumber::root(m, static_cast<long long>(i)) * CycloNumber(m, static_cast<long>(phi[i]));
    EXPECT_TRUE(v.is_zero()) << m;
  }
}

TEST(CycloNumber, ArithmeticMatchesComplexEmbedding) {
  std::mt19937 rng(7);
  for (int m : {5, 12, 16, 24}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto a = random_element(m, rng), b = random_element(m, rng);
      EXPECT_LT(std::abs(numeric_value(a * b) - numeric_value(a) * numeric_value(b)), 1e-9L);
      EXPECT_LT(std::abs(numeric_value(a + b) - (numeric_value(a) + numeric_value(b))), 1e-9L);
      EXPECT_LT(std::abs(numeric_value(a.conj()) - std::conj(numeric_value(a))), 1e-9L);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ(a.pow(-2) * a.pow(3), a);
      }
    }
  }
}

TEST(CycloNumber, RootExponent) {
  EXPECT_EQ(CycloNumber::root(12, 5).root_exponent(), 5);
  EXPECT_EQ(CycloNumber(12, -1).root_exponent(), 6);
  EXPECT_FALSE((CycloNumber(12, 1) + CycloNumber(12, 1)).root_exponent().has_value());
}

TEST(CycloNumber, TextRoundTrip) {
  std::mt19937 rng(11);
  for (int m : {4, 12, 20}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_element(m, rng);
      EXPECT_EQ(parse_cyclo(a.str(), m), a) << a.str();
    }
  }
  EXPECT_EQ(CycloNumber(12).str(), "0");
  EXPECT_EQ(parse_cyclo("w^3 - w + 1/2", 12).str(), "w^3 - w + 1/2");
  EXPECT_EQ(parse_cyclo("w^6", 12), CycloNumber(12, -1));
  EXPECT_EQ(parse_cyclo("-3/2*w^-1", 12), CycloNumber::root(12, 11) * CycloNumber(12, Rational(-3, 2)));
  EXPECT_THROW(parse_cyclo("w^", 12), DomainError);
  EXPECT_THROW(parse_cyclo("1 2", 12), DomainError);
  EXPECT_THROW(parse_cyclo("", 12), DomainError);
}
