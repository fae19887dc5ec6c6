#include <gtest/gtest.h>

#include <set>

#include "nichols_dm/dihedral.hpp"
#include "nichols_dm/errors.hpp"

using namespace ndm;

namespace {

// s^e r^b as a permutation of the m-gon vertices: v -> +-(v + b).
std::vector<int> as_permutation(const GroupElement& a, int m) {
  std::vector<int> p(m);
  for (int v = 0; v < m; ++v) {
    int w = (v + a.rotation) % m;
    p[v] = a.reflection ? (m - w) % m : w;
  }
  return p;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> h(f.size());
  for (size_t v = 0; v < f.size(); ++v) h[v] = f[g[v]];
  return h;
}

}  // namespace

TEST(Dihedral, MultiplicationMatchesPermutations) {
  for (int m = 3; m <= 24; ++m) {
    DihedralGroup G(m);
    for (auto a : G.elements())
      for (auto b : G.elements())
        EXPECT_EQ(as_permutation(G.multiply(a, b), m), compose(as_permutation(a, m), as_permutation(b, m)));
  }
}

TEST(Dihedral, GroupAxioms) {
  for (int m : {3, 6, 12, 16}) {
    DihedralGroup G(m);
    for (auto a : G.elements()) {
      EXPECT_EQ(G.multiply(a, G.inverse(a)), G.identity());
      EXPECT_EQ(G.multiply(G.identity(), a), a);
      for (auto b : G.elements())
        for (auto c : G.elements())
          EXPECT_EQ(G.multiply(G.multiply(a, b), c), G.multiply(a, G.multiply(b, c)));
    }
  }
}

TEST(Dihedral, PresentationRelations) {
  DihedralGroup G(12);
  EXPECT_EQ(G.multiply(G.s(), G.r()), G.multiply(G.r(11), G.s()));
  EXPECT_EQ(G.multiply(G.s(), G.r()), G.element(1, 1));
  EXPECT_EQ(G.multiply(G.r(3), G.r(5)), G.r(8));
  EXPECT_EQ(G.multiply(G.multiply(G.s(), G.r()), G.s()), G.r(11));
  EXPECT_EQ(G.power(G.r(), 12), G.identity());
  EXPECT_EQ(G.element_order(G.r(4)), 3);
  EXPECT_EQ(G.name(G.element(1, 5)), "s r^5");
  EXPECT_EQ(G.gh_name(G.element(0, 1)), "h");
}

TEST(Dihedral, ClassesPartitionAndMatchBruteForce) {
  for (int m = 3; m <= 24; ++m) {
    DihedralGroup G(m);
    auto classes = conjugacy_classes(G);
    std::set<GroupElement> seen;
    for (auto& c : classes) {
      std::set<GroupElement> orbit;
      for (auto g : G.elements()) orbit.insert(G.conjugate(g, c.representative));
      EXPECT_EQ(orbit, std::set<GroupElement>(c.elements.begin(), c.elements.end()));
      EXPECT_EQ(c.elements.size() * centralizer(G, c.representative).size(), static_cast<size_t>(2 * m));
      for (auto x : c.elements) EXPECT_TRUE(seen.insert(x).second);
    }
    EXPECT_EQ(seen.size(), static_cast<size_t>(2 * m));
  }
}

TEST(Dihedral, TableTwoShapes) {
  DihedralGroup G(12);
  EXPECT_EQ(class_of(G, G.r(6)).elements.size(), 1u);
  EXPECT_EQ(class_of(G, G.r(1)).elements, (std::vector<GroupElement>{G.r(1), G.r(11)}));
  EXPECT_EQ(class_of(G, G.s()).elements.size(), 6u);
  EXPECT_EQ(centralizer(G, G.r(6)).size(), 24u);
  EXPECT_EQ(centralizer(G, G.r(1)).size(), 12u);
  EXPECT_EQ(centralizer(G, G.s()), (std::vector<GroupElement>{G.identity(), G.r(6), G.s(), G.element(1, 6)}));
  auto labels = std::vector<std::string>{};
  for (auto& c : conjugacy_classes(G)) labels.push_back(c.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"e", "r1", "r2", "r3", "r4", "r5", "r6", "s", "sr"}));
}

TEST(Dihedral, IrrepsAreHomomorphisms) {
  for (int m : {5, 12, 16, 20, 24}) {
    DihedralGroup G(m);
    for (const auto& rho : irreps(G))
      for (auto a : G.elements())
        for (auto b : G.elements())
          ASSERT_EQ(evaluate(G, rho, G.multiply(a, b)), evaluate(G, rho, a) * evaluate(G, rho, b))
              << rho.name() << " m=" << m;
  }
}

TEST(Dihedral, IrrepInventoryAndOrthogonality) {
  for (int m : {12, 16, 20, 7}) {
    DihedralGroup G(m);
    auto reps = irreps(G);
    int two = 0, one = 0, squares = 0;
    for (auto& r : reps) {
      (r.degree() == 2 ? two : one)++;
      squares += r.degree() * r.degree();
    }
    EXPECT_EQ(squares, 2 * m);
    if (m % 2 == 0) {
      EXPECT_EQ(two, m / 2 - 1);
      EXPECT_EQ(one, 4);
    }
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = 0; j < reps.size(); ++j) {
        CycloNumber s(m);
        for (auto g : G.elements()) s += character(G, reps[i], g) * character(G, reps[j], g).conj();
        EXPECT_EQ(s, CycloNumber(m, i == j ? 2 * m : 0));
      }
  }
}

TEST(Dihedral, TableOneValues) {
  DihedralGroup G(12);
  Irrep chi3{Irrep::Kind::Linear, 3};
  for (int b = 0; b < 12; ++b) EXPECT_EQ(character(G, chi3, G.r(b)), CycloNumber(12, b % 2 ? -1 : 1));
  EXPECT_EQ(character(G, chi3, G.s()), CycloNumber(12, 1));
  EXPECT_EQ(character(G, {Irrep::Kind::Linear, 4}, G.element(1, 1)), CycloNumber(12, 1));
  auto rho = evaluate(G, {Irrep::Kind::TwoDim, 2}, G.r());
  EXPECT_EQ(rho.at(0, 0), CycloNumber::root(12, 2));
  EXPECT_EQ(rho.at(1, 1), CycloNumber::root(12, -2));
  EXPECT_THROW(evaluate(G, {Irrep::Kind::TwoDim, 6}, G.r()), DomainError);
}
