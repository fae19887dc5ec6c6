#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "nichols_dm/errors.hpp"
#include "nichols_dm/iso.hpp"
#include "nichols_dm/rewrite.hpp"

using namespace ndm;

namespace {

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

// phi_l on group elements: g -> g, h -> h^l.
GroupElement phi_group(int m, int l, const GroupElement& x) {
  return {x.reflection, mod(static_cast<long long>(l) * x.rotation, m)};
}

// Target generator that phi_l sends source generator j to, found from degrees and
// h-eigenvalues alone: deg' = phi(deg) and l * h_exp' = h_exp.
int image_generator(const Presentation& S, const Presentation& T, int l, int j, const std::vector<int>& perm_I,
                    const std::vector<int>& perm_L) {
  const auto& v = S.generators[static_cast<size_t>(j)];
  const bool on_I = v.kind == 'x' || v.kind == 'y';
  const int slot = on_I ? perm_I[static_cast<size_t>(v.slot)] : perm_L[static_cast<size_t>(v.slot)];
  int found = -1;
  for (std::size_t t = 0; t < T.generators.size(); ++t) {
    const auto& w = T.generators[t];
    const bool w_on_I = w.kind == 'x' || w.kind == 'y';
    if (w_on_I != on_I || w.slot != slot) continue;
    if (!(w.grouplike == phi_group(S.m, l, v.grouplike))) continue;
    if (mod(static_cast<long long>(l) * w.h_exp - v.h_exp, S.m) != 0) continue;
    EXPECT_EQ(found, -1) << "ambiguous image";
    found = static_cast<int>(t);
  }
  return found;
}

using Shape = std::pair<std::vector<std::pair<std::vector<int>, std::string>>,
                        std::vector<std::pair<GroupElement, std::string>>>;

Shape shape_of(const std::vector<Term>& lhs, const GroupCombo& rhs) {
  Shape s;
  for (const auto& t : lhs) s.first.push_back({t.word, t.coef.str()});
  std::sort(s.first.begin(), s.first.end());
  for (const auto& [g, c] : rhs)
    if (!c.is_zero()) s.second.push_back({g, c.str()});
  std::sort(s.second.begin(), s.second.end());
  return s;
}

bool quadratic(const Relation& r) { return r.family != "group" && r.family != "conj"; }

// Applies phi_l to every quadratic relation of S and compares with those of T.
bool relations_carried(const Presentation& S, const Presentation& T, int l, const std::vector<int>& perm_I,
                       const std::vector<int>& perm_L) {
  std::vector<int> img;
  for (std::size_t j = 0; j < S.generators.size(); ++j)
    img.push_back(image_generator(S, T, l, static_cast<int>(j), perm_I, perm_L));
  if (std::count(img.begin(), img.end(), -1)) return false;
  std::set<Shape> mapped, target;
  for (const auto& r : S.relations) {
    if (!quadratic(r)) continue;
    std::vector<Term> lhs;
    for (const auto& t : r.lhs) {
      Term u{t.coef, {}};
      for (int x : t.word) u.word.push_back(img[static_cast<size_t>(x)]);
      lhs.push_back(u);
    }
    GroupCombo rhs;
    for (const auto& [g, c] : r.rhs) rhs.push_back({phi_group(S.m, l, g), c});
    mapped.insert(shape_of(lhs, rhs));
  }
  for (const auto& r : T.relations)
    if (quadratic(r)) target.insert(shape_of(r.lhs, r.rhs));
  return mapped == target;
}

Presentation present(int m, const Lifting& x) {
  if (x.I.pairs.empty()) return bosonization(m, build_M_L(m, x.L));
  return x.L.ells.empty() ? presentation_A(m, x.I, x.datum) : presentation_B(m, x.I, x.L, x.datum);
}

LiftingDatum datum(int m, std::initializer_list<std::pair<ParamSlot, int>> entries) {
  LiftingDatum d;
  for (const auto& [s, v] : entries) d.values.emplace(s, CycloNumber(m, v));
  return d;
}

std::vector<int> identity_perm(std::size_t n) {
  std::vector<int> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  return p;
}

}  // namespace

TEST(Iso, Units) {
  std::vector<int> got;
  for (const auto& u : units(12)) got.push_back(u.value());
  EXPECT_EQ(got, (std::vector<int>{1, 5, 7, 11}));
  UnitModM u(5, 16);
  EXPECT_EQ(u.inverse(), 13);
  EXPECT_THROW(UnitModM(4, 12), DomainError);
  EXPECT_THROW(UnitModM(3, 12), DomainError);
}

TEST(Iso, ActionExamples) {
  const int m = 12;
  EXPECT_EQ(act_pair(UnitModM(5, m), PairIK{1, 6}), (PairIK{5, 6}));
  EXPECT_EQ(act_pair(UnitModM(7, m), PairIK{1, 6}), (PairIK{5, 6}));
  EXPECT_EQ(act_pair(UnitModM(5, m), PairIK{2, 3}), (PairIK{2, 9}));
  EXPECT_EQ(act_pair(UnitModM(11, m), PairIK{2, 3}), (PairIK{2, 3}));
  EXPECT_EQ(act_ell(UnitModM(5, m), 1), 5);
  EXPECT_EQ(act_ell(UnitModM(5, m), 5), 1);
  EXPECT_EQ(act_ell(UnitModM(5, m), 3), 3);
  EXPECT_THROW(act_pair(UnitModM(5, m), PairIK{2, 2}), DomainError);
  EXPECT_THROW(act_ell(UnitModM(5, m), 2), DomainError);
}

TEST(Iso, ActionsAreGroupActionsPreservingStructure) {
  for (int m = 12; m <= 64; m += 4) {
    const auto J = support_J(m);
    const auto us = units(m);
    std::vector<int> ells;
    for (int r = 1; r < m / 2; r += 2) ells.push_back(r);
    for (const auto& p : J) {
      EXPECT_EQ(act_pair(UnitModM(1, m), p), p);
      for (const auto& a : us) {
        const PairIK q = act_pair(a, p);
        ASSERT_TRUE(in_J(m, q)) << m << " " << pair_name(p);
        for (const auto& b : us) {
          const UnitModM ab(a.value() * b.value(), m);
          EXPECT_EQ(act_pair(a, act_pair(b, p)), act_pair(ab, p));
        }
        for (const auto& p2 : J)
          EXPECT_EQ(are_equivalent(p, p2, m), are_equivalent(q, act_pair(a, p2), m));
      }
    }
    for (int r : ells)
      for (const auto& a : us) {
        const int s = act_ell(a, r);
        EXPECT_TRUE(s > 0 && s < m / 2 && s % 2 == 1);
        for (const auto& b : us) EXPECT_EQ(act_ell(a, act_ell(b, r)), act_ell(UnitModM(a.value() * b.value(), m), r));
      }
    // families stay families: every K pair (i, l) is sent into K
    for (const auto& K : enumerate_K(m, 2))
      for (const auto& a : us) EXPECT_NO_THROW(make_family_K(m, act_family(a, K.I), act_family(a, K.L)));
  }
}

TEST(Iso, LSingletonOrbits) {
  const int m = 12;
  std::set<std::set<int>> orbits;
  for (int r : {1, 3, 5}) {
    std::set<int> o;
    for (const auto& u : units(m)) o.insert(act_ell(u, r));
    orbits.insert(o);
  }
  EXPECT_EQ(orbits, (std::set<std::set<int>>{{1, 5}, {3}}));
}

TEST(Iso, StabilizerOfSmallK) {
  const int m = 12;
  const auto I = make_family_I(m, {{2, 3}});
  const auto L = make_family_L(m, {3});
  std::vector<int> stab;
  for (const auto& u : units(m))
    if (act_family(u, I) == I && act_family(u, L) == L) stab.push_back(u.value());
  EXPECT_EQ(stab, (std::vector<int>{1, 11}));
  // l = 11 flips both summands, so mu stays mu
  const LiftingDatum mu = datum(m, {{{ParamKind::Mu, 0, 0}, 1}});
  EXPECT_TRUE(is_isomorphic_B(m, I, L, mu, I, L, mu));
  const auto I9 = make_family_I(m, {{2, 9}});
  const LiftingDatum th = datum(m, {{{ParamKind::Theta, 0, 0}, 1}});
  auto w = is_isomorphic_B(m, I, L, mu, I9, L, th);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->ell == 5 || w->ell == 7);
  EXPECT_FALSE(is_isomorphic_B(m, I, L, mu, I9, L, {}));
}

TEST(Iso, TransportMatchesSymbolicImageOfRelations) {
  for (int m : {12, 16}) {
    std::vector<Lifting> sources;
    for (const auto& I : enumerate_I(m, 2)) {
      LiftingDatum d;
      int v = 1;
      for (const auto& s : parameter_shape(m, I, {}).free) d.values.emplace(s, CycloNumber(m, v++));
      sources.push_back({I, {}, d});
    }
    for (const auto& K : enumerate_K(m, 3)) {
      LiftingDatum d;
      int v = 2;
      for (const auto& s : parameter_shape(m, K.I, K.L).free) d.values.emplace(s, CycloNumber(m, v++));
      sources.push_back({K.I, K.L, d});
    }
    for (const auto& src : sources) {
      const Presentation S = present(m, src);
      for (const auto& u : units(m)) {
        const FamilyI tI = act_family(u, src.I);
        const FamilyL tL = act_family(u, src.L);
        // slot bijection: first unused matching target slot
        std::vector<int> pI, pL;
        std::vector<bool> usedI(tI.pairs.size()), usedL(tL.ells.size());
        for (const auto& p : src.I.pairs) {
          const PairIK q = act_pair(u, p);
          for (std::size_t t = 0; t < tI.pairs.size(); ++t)
            if (!usedI[t] && tI.pairs[t] == q) {
              usedI[t] = true;
              pI.push_back(static_cast<int>(t));
              break;
            }
        }
        for (int r : src.L.ells) {
          const int s = act_ell(u, r);
          for (std::size_t t = 0; t < tL.ells.size(); ++t)
            if (!usedL[t] && tL.ells[t] == s) {
              usedL[t] = true;
              pL.push_back(static_cast<int>(t));
              break;
            }
        }
        const Lifting tgt{tI, tL, transport_datum(m, u, src, pI, pL, tI, tL)};
        const Presentation T = present(m, tgt);
        EXPECT_TRUE(relations_carried(S, T, u.value(), pI, pL))
            << m << " l=" << u.value() << " I size " << src.I.pairs.size() << " L size " << src.L.ells.size();
        EXPECT_TRUE(find_isomorphism(m, src, tgt));
      }
    }
  }
}

TEST(Iso, BosonizationCriterionOnGrid) {
  const int m = 12;
  for (const auto& I : enumerate_I(m, 2)) {
    const auto free = parameter_shape(m, I, {}).free;
    for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
      LiftingDatum d;
      for (std::size_t j = 0; j < free.size(); ++j)
        if (mask >> j & 1) d.values.emplace(free[j], CycloNumber(m, 1));
      EXPECT_EQ(is_isomorphic_A(m, I, d, I, {}).has_value(), mask == 0);
      EXPECT_EQ(is_isomorphic_A(m, I, d, I, {}, true).has_value(), mask == 0);
    }
  }
}

TEST(Iso, RescalingIdentifiesNonzeroValues) {
  const int m = 12;
  const auto I = make_family_I(m, {{1, 6}});
  const LiftingDatum one = datum(m, {{{ParamKind::Lambda, 0, 0}, 1}});
  const LiftingDatum five = datum(m, {{{ParamKind::Lambda, 0, 0}, 5}});
  EXPECT_FALSE(is_isomorphic_A(m, I, one, I, five));
  EXPECT_TRUE(is_isomorphic_A(m, I, one, I, five, true));

  // an odd cycle fixes c^2; an even cycle forces an exact product relation
  const auto I2 = make_family_I(m, {{1, 6}, {5, 6}});
  const auto d = [&](int l00, int l01, int l11, int g01) {
    return datum(m, {{{ParamKind::Lambda, 0, 0}, l00},
                     {{ParamKind::Lambda, 0, 1}, l01},
                     {{ParamKind::Lambda, 1, 1}, l11},
                     {{ParamKind::Gamma, 0, 1}, g01}});
  };
  // c0^2 = 1/4, c1^2 = 1/9, c0 c1 = 1/6 consistent
  EXPECT_TRUE(is_isomorphic_A(m, I2, d(1, 1, 1, 1), I2, d(4, 6, 9, 6), true));
  EXPECT_FALSE(is_isomorphic_A(m, I2, d(1, 1, 1, 1), I2, d(4, 5, 9, 6), true));
  EXPECT_FALSE(is_isomorphic_A(m, I2, d(1, 1, 1, 1), I2, d(4, 6, 9, 0), true));
}

TEST(Iso, RepeatedSlotsNeedPermutationSearch) {
  const int m = 12;
  const auto I = make_family_I(m, {{1, 6}, {1, 6}});
  const LiftingDatum a = datum(m, {{{ParamKind::Lambda, 0, 0}, 1}, {{ParamKind::Lambda, 1, 1}, 2}});
  const LiftingDatum b = datum(m, {{{ParamKind::Lambda, 0, 0}, 2}, {{ParamKind::Lambda, 1, 1}, 1}});
  auto w = is_isomorphic_A(m, I, a, I, b);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->perm_I, (std::vector<int>{1, 0}));
}

TEST(Iso, Validation) {
  const int m = 12;
  const auto I = make_family_I(m, {{1, 6}});
  EXPECT_THROW(is_isomorphic_A(m, I, datum(m, {{{ParamKind::Gamma, 0, 0}, 1}}), I, {}), DomainError);
  EXPECT_THROW(is_isomorphic_A(10, I, {}, I, {}), DomainError);
  FamilyI unsorted{{{5, 6}, {1, 6}}};
  EXPECT_THROW(is_isomorphic_A(m, unsorted, {}, unsorted, {}), DomainError);
  EXPECT_THROW(transport_datum(m, UnitModM(5, m), {I, {}, {}}, identity_perm(1), {}, I, {}), DomainError);
}

TEST(Iso, ClassesAtTwelve) {
  const int m = 12;
  const auto classes = iso_classes(m, 2);
  std::size_t points = 0;
  for (const auto& c : classes) {
    points += c.members.size();
    ASSERT_EQ(c.members.size(), c.witness_units.size());
    EXPECT_EQ(c.witness_units[0], 1);
    for (std::size_t j = 0; j < c.members.size(); ++j)
      EXPECT_EQ(c.members[j].I, act_family(UnitModM(c.witness_units[j], m), c.representative.I));
  }
  std::size_t expected = 0;
  for (const auto& f : lifting_catalogue(m, 2)) expected += std::size_t{1} << f.shape.free.size();
  EXPECT_EQ(points, expected);

  // singleton bosonizations: orbits of {(i,k) in J : k != n}
  std::set<std::set<PairIK>> a_orbits, want;
  for (const auto& c : classes) {
    if (c.family != 'a') continue;
    std::set<PairIK> o;
    for (const auto& x : c.members) o.insert(x.I.pairs[0]);
    a_orbits.insert(o);
  }
  for (const auto& p : support_J(m)) {
    if (p.k == m / 2) continue;
    std::set<PairIK> o;
    for (const auto& u : units(m)) o.insert(act_pair(u, p));
    want.insert(o);
  }
  EXPECT_EQ(a_orbits, want);
  EXPECT_TRUE(a_orbits.count({{2, 3}, {2, 9}}));

  std::set<std::set<int>> b_singletons;
  for (const auto& c : classes)
    if (c.family == 'b' && c.representative.L.ells.size() == 1) {
      std::set<int> o;
      for (const auto& x : c.members) o.insert(x.L.ells[0]);
      b_singletons.insert(o);
    }
  EXPECT_EQ(b_singletons, (std::set<std::set<int>>{{1, 5}, {3}}));

  // rescaling never splits a class
  EXPECT_LE(iso_classes(m, 2, {}, true).size(), classes.size());
}

TEST(Iso, IsomorphicPairsHaveEqualDimension) {
  const int m = 12;
  for (const auto& c : iso_classes(m, 1)) {
    std::set<std::size_t> dims;
    for (const auto& x : c.members) dims.insert(dimension(compile(present(m, x))).dimension);
    EXPECT_EQ(dims.size(), 1u);
  }
}

TEST(Iso, CentralPairsMatchThroughFive) {
  const int m = 12;
  const auto I = make_family_I(m, {{1, 6}}), I5 = make_family_I(m, {{5, 6}});
  const LiftingDatum d = datum(m, {{{ParamKind::Lambda, 0, 0}, 3}});
  auto w = is_isomorphic_A(m, I, d, I5, d);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->ell == 5 || w->ell == 7);
  EXPECT_FALSE(is_isomorphic_A(m, I, d, I5, datum(m, {{{ParamKind::Lambda, 0, 0}, 1}})));
  EXPECT_TRUE(is_isomorphic_A(m, I, d, I, d));
}

TEST(Iso, EquivalenceRelationOnGrid) {
  const int m = 12;
  std::vector<Lifting> pts;
  for (const auto& I : enumerate_I(m, 2)) {
    const auto free = parameter_shape(m, I, {}).free;
    for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
      LiftingDatum d;
      for (std::size_t j = 0; j < free.size(); ++j)
        if (mask >> j & 1) d.values.emplace(free[j], CycloNumber(m, 1));
      pts.push_back({I, {}, d});
    }
  }
  const std::size_t n = pts.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rel[a][b] = find_isomorphism(m, pts[a], pts[b]).has_value();
  for (std::size_t a = 0; a < n; ++a) {
    EXPECT_TRUE(rel[a][a]);
    for (std::size_t b = 0; b < n; ++b) {
      EXPECT_EQ(rel[a][b], rel[b][a]);
      if (!rel[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (rel[b][c]) EXPECT_TRUE(rel[a][c]);
    }
  }
}
