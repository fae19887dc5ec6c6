#include <gtest/gtest.h>

#include "nichols_dm/errors.hpp"
#include "nichols_dm/ydmod.hpp"

using namespace ndm;

namespace {

using Rule = NicholsCertificate::Rule;

CycloNumber w(int m, long long e) { return CycloNumber::root(m, e); }

YDModule Mik(const DihedralGroup& G, int i, int k) { return induce(G, class_of(G, G.r(i)), CyclicCharacter{k}); }
YDModule Ml(const DihedralGroup& G, int l) { return induce(G, class_of(G, G.r(G.n())), Irrep{Irrep::Kind::TwoDim, l}); }

// Every (class, centralizer irrep) pair of D_m.
std::vector<std::pair<ConjugacyClass, CentralizerRep>> all_irreducibles(const DihedralGroup& G) {
  std::vector<std::pair<ConjugacyClass, CentralizerRep>> out;
  for (const auto& c : conjugacy_classes(G)) {
    if (c.elements.size() == 1) {
      for (const auto& r : irreps(G)) out.emplace_back(c, r);
    } else if (c.representative.reflection == 0) {
      for (int k = 0; k < G.m(); ++k) out.emplace_back(c, CyclicCharacter{k});
    } else {
      for (int a : {1, -1})
        for (int b : {1, -1}) out.emplace_back(c, KleinCharacter{a, b});
    }
  }
  return out;
}

// Expected Nichols verdict read off the table of irreducibles for m = 4t.
Rule table_rule(const DihedralGroup& G, const ConjugacyClass& c, const CentralizerRep& rep) {
  const int m = G.m(), n = m / 2;
  if (c.representative.reflection) return Rule::TypeD;
  if (c.representative.is_identity()) return Rule::RealClassScalar;
  if (c.elements.size() == 1) {
    const auto& ir = std::get<Irrep>(rep);
    return (ir.kind == Irrep::Kind::TwoDim && ir.index % 2 == 1) ? Rule::None : Rule::RealClassScalar;
  }
  const int i = c.representative.rotation, k = std::get<CyclicCharacter>(rep).k;
  return (i * k) % m == n ? Rule::None : Rule::RealClassScalar;
}

}  // namespace

TEST(Induce, RotationClassModule) {
  DihedralGroup G(12);
  auto M = Mik(G, 1, 6);
  EXPECT_EQ(M.dim(), 2);
  EXPECT_EQ(M.degree(0), G.r(1));
  EXPECT_EQ(M.degree(1), G.r(11));
  EXPECT_EQ(M.components()[0].coset_reps, (std::vector<GroupElement>{G.identity(), G.s()}));
  // r a = w^k a, r b = w^-k b, s a = b
  auto M23 = Mik(G, 2, 3);
  EXPECT_EQ(M23.act_r().at(0, 0), w(12, 3));
  EXPECT_EQ(M23.act_r().at(1, 1), w(12, -3));
  EXPECT_EQ(M23.act_s().at(1, 0), CycloNumber(12, 1));
  EXPECT_EQ(M23.act_s().at(0, 1), CycloNumber(12, 1));
}

TEST(Induce, CentralAndReflectionModules) {
  DihedralGroup G(12);
  auto M = Ml(G, 3);
  EXPECT_EQ(M.dim(), 2);
  EXPECT_EQ(M.degree(0), G.r(6));
  EXPECT_EQ(M.degree(1), G.r(6));
  auto R = induce(G, class_of(G, G.s()), KleinCharacter{1, 1});
  EXPECT_EQ(R.dim(), 6);
  EXPECT_THROW(induce(G, class_of(G, G.s()), CyclicCharacter{1}), DomainError);
  EXPECT_THROW(induce(G, class_of(G, G.r(2)), Irrep{Irrep::Kind::Linear, 1}), DomainError);
  EXPECT_THROW(induce(G, class_of(G, G.r(2)), CyclicCharacter{12}), DomainError);
  EXPECT_THROW(induce(DihedralGroup(7), class_of(DihedralGroup(7), DihedralGroup(7).r(1)), CyclicCharacter{1}), DomainError);
}

TEST(Induce, StructuralInvariantsOnAllIrreducibles) {
  for (int m : {12, 16}) {
    DihedralGroup G(m);
    for (const auto& [c, rep] : all_irreducibles(G)) {
      auto M = induce(G, c, rep);
      EXPECT_EQ(M.dim(), static_cast<int>(c.elements.size()) * (std::holds_alternative<Irrep>(rep) ? std::get<Irrep>(rep).degree() : 1));
      EXPECT_TRUE(check_action_relations(M)) << c.label << " " << rep_name(rep);
      EXPECT_TRUE(check_yd_compatibility(M)) << c.label << " " << rep_name(rep);
    }
  }
}

TEST(Braiding, MinusFlipForPairsInJ) {
  DihedralGroup G(12);
  auto B = braiding(Mik(G, 1, 6));
  ASSERT_TRUE(B.is_diagonal);
  for (auto& row : B.Q)
    for (auto& q : row) EXPECT_EQ(q, CycloNumber(12, -1));
  EXPECT_TRUE(is_minus_flip(B));
  auto D = dynkin_diagram(B);
  EXPECT_TRUE(D.edges.empty());
  EXPECT_EQ(D.vertices, std::vector<CycloNumber>(2, CycloNumber(12, -1)));
}

TEST(Braiding, TwoRotationSummandsMatchExplicitMatrix) {
  for (int m : {12, 16, 20}) {
    DihedralGroup G(m);
    for (int i = 1; i < m / 2; ++i)
      for (int k = 0; k < m; ++k)
        for (int p : {1, 2, 3})
          for (int q : {m / 2, m / 4, 1}) {
            auto B = braiding(direct_sum({Mik(G, i, k), Mik(G, p, q)}));
            ASSERT_TRUE(B.is_diagonal);
            const CycloNumber a = w(m, i * k), ai = w(m, -i * k), b = w(m, p * q), bi = w(m, -p * q);
            std::vector<std::vector<CycloNumber>> Q{{a, ai, w(m, i * q), w(m, -i * q)},
                                                    {ai, a, w(m, -i * q), w(m, i * q)},
                                                    {w(m, p * k), w(m, -p * k), b, bi},
                                                    {w(m, -p * k), w(m, p * k), bi, b}};
            EXPECT_EQ(B.Q, Q);
          }
  }
}

TEST(Braiding, RotationPlusCentralMatchesExplicitMatrix) {
  const int m = 12;
  DihedralGroup G(m);
  for (int i = 1; i < 6; ++i)
    for (int k = 0; k < m; ++k)
      for (int l = 1; l < 6; l += 2) {
        auto B = braiding(direct_sum({Mik(G, i, k), Ml(G, l)}));
        ASSERT_TRUE(B.is_diagonal);
        const CycloNumber sk = CycloNumber(m, k % 2 ? -1 : 1);
        EXPECT_EQ(B.Q[0][2], w(m, i * l));
        EXPECT_EQ(B.Q[0][3], w(m, -i * l));
        EXPECT_EQ(B.Q[1][2], w(m, -i * l));
        EXPECT_EQ(B.Q[2][0], sk);
        EXPECT_EQ(B.Q[3][1], sk);
        EXPECT_EQ(B.Q[2][2], CycloNumber(m, -1));
      }
}

TEST(Braiding, RomboDiagramLabels) {
  DihedralGroup G(12);
  auto D = dynkin_diagram(braiding(direct_sum({Mik(G, 2, 3), Mik(G, 1, 6)})));
  const CycloNumber lam = w(12, 2 * 6 + 1 * 3);
  ASSERT_EQ(D.edges.size(), 4u);
  EXPECT_EQ(D.edges[0].label, lam);             // (0,2)
  EXPECT_EQ(D.edges[1].label, lam.inverse());   // (0,3)
  EXPECT_EQ(D.edges[2].label, lam.inverse());   // (1,2)
  EXPECT_EQ(D.edges[3].label, lam);             // (1,3)
  for (auto& v : D.vertices) EXPECT_EQ(v, CycloNumber(12, -1));
}

TEST(Braiding, BraidEquationOnIrreducibles) {
  DihedralGroup G(12);
  for (const auto& [c, rep] : all_irreducibles(G)) {
    auto M = induce(G, c, rep);
    EXPECT_TRUE(check_braid_equation(braiding(M), 12)) << c.label << " " << rep_name(rep);
  }
  auto refl = braiding(induce(G, class_of(G, G.s()), KleinCharacter{-1, 1}));
  EXPECT_FALSE(refl.is_diagonal);
  EXPECT_THROW(dynkin_diagram(refl), DomainError);
}

TEST(Nichols, TableTwoReproduction) {
  for (int m : {12, 16, 20}) {
    DihedralGroup G(m);
    int finite = 0;
    for (const auto& [c, rep] : all_irreducibles(G)) {
      auto M = induce(G, c, rep);
      auto res = nichols_dimension(M);
      const Rule want = table_rule(G, c, rep);
      if (want == Rule::None) {
        ++finite;
        EXPECT_TRUE(res.finite) << c.label << " " << rep_name(rep);
        EXPECT_EQ(res.log2_dimension, 2);
      } else {
        EXPECT_FALSE(res.finite);
        EXPECT_EQ(res.certificate.rule, want) << c.label << " " << rep_name(rep);
      }
      if (res.finite) EXPECT_EQ(M.action(c.representative).at(0, 0), CycloNumber(m, -1));
    }
    // t odd l values plus sum over i of |N_i|
    int expect = m / 4;
    for (int i = 1; i < m / 2; ++i)
      for (int k = 0; k < m; ++k)
        if ((i * k) % m == m / 2) ++expect;
    EXPECT_EQ(finite, expect);
  }
}

TEST(Nichols, SumExamples) {
  DihedralGroup G(12);
  auto fin = nichols_dimension(direct_sum({Mik(G, 1, 6), Mik(G, 5, 6)}));
  EXPECT_TRUE(fin.finite);
  EXPECT_EQ(fin.log2_dimension, 4);
  auto inf = nichols_dimension(direct_sum({Mik(G, 2, 3), Mik(G, 1, 6)}));
  EXPECT_FALSE(inf.finite);
  EXPECT_EQ(inf.certificate.rule, Rule::RomboDiagram);
  EXPECT_EQ(*inf.certificate.edge_label, w(12, 15));
  auto td = nichols_dimension(direct_sum({Mik(G, 1, 6), induce(G, class_of(G, G.element(1, 1)), KleinCharacter{-1, -1})}));
  EXPECT_EQ(td.certificate.rule, Rule::TypeD);
  EXPECT_EQ(td.certificate.component, 1);
  auto mixed = nichols_dimension(direct_sum({Mik(G, 2, 3), Ml(G, 3)}));
  EXPECT_TRUE(mixed.finite);
  auto mixed_bad = nichols_dimension(direct_sum({Mik(G, 3, 2), Ml(G, 1)}));
  EXPECT_FALSE(mixed_bad.finite);
  EXPECT_EQ(mixed_bad.certificate.rule, Rule::RomboDiagram);
  EXPECT_THROW(nichols_dimension(Mik(DihedralGroup(8), 2, 2)), DomainError);
}
