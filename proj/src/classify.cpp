#include "nichols_dm/classify.hpp"

#include <algorithm>
#include <set>

#include "nichols_dm/errors.hpp"

namespace ndm {

void require_classification_order(int m) {
  if (m % 4 != 0 || m < 12)
    throw DomainError("classification needs m = 4t with t >= 3; got m = " + std::to_string(m));
}

std::string pair_name(const PairIK& p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.k) + ")"; }

bool in_J(int m, const PairIK& p) {
  const int n = m / 2;
  return p.i >= 1 && p.i <= n - 1 && p.k >= 1 && p.k <= m - 1 && (p.i * p.k) % m == n;
}

std::vector<PairIK> support_J(int m) {
  require_classification_order(m);
  std::vector<PairIK> out;
  for (int i = 1; i < m / 2; ++i)
    for (int k = 1; k < m; ++k)
      if (in_J(m, {i, k})) out.push_back({i, k});
  return out;
}

std::vector<int> N_i(int m, int i) {
  std::vector<int> out;
  for (int k = 0; k < m; ++k)
    if ((static_cast<long long>(i) * k) % m == m / 2) out.push_back(k);
  return out;
}

bool are_equivalent(const PairIK& a, const PairIK& b, int m) {
  if (!in_J(m, a) || !in_J(m, b))
    throw DomainError("are_equivalent: " + pair_name(a) + " and " + pair_name(b) + " must lie in J");
  return (a.i * b.k + b.i * a.k) % m == 0;
}

FamilyI make_family_I(int m, std::vector<PairIK> pairs) {
  require_classification_order(m);
  if (pairs.empty()) throw DomainError("family I must be nonempty");
  for (const auto& p : pairs)
    if (!in_J(m, p)) throw DomainError("pair " + pair_name(p) + " is not in J for m = " + std::to_string(m));
  for (const auto& a : pairs)
    for (const auto& b : pairs)
      if (!are_equivalent(a, b, m))
        throw DomainError("pairs " + pair_name(a) + " and " + pair_name(b) + " are not equivalent");
  std::sort(pairs.begin(), pairs.end());
  return {std::move(pairs)};
}

FamilyL make_family_L(int m, std::vector<int> ells) {
  require_classification_order(m);
  if (ells.empty()) throw DomainError("family L must be nonempty");
  for (int l : ells)
    if (l < 1 || l >= m / 2 || l % 2 == 0)
      throw DomainError("l = " + std::to_string(l) + " must be odd with 1 <= l < " + std::to_string(m / 2));
  std::sort(ells.begin(), ells.end());
  return {std::move(ells)};
}

FamilyK make_family_K(int m, FamilyI I, FamilyL L) {
  I = make_family_I(m, std::move(I.pairs));
  L = make_family_L(m, std::move(L.ells));
  for (const auto& p : I.pairs) {
    if (p.k % 2 == 0) throw DomainError("family K needs every k odd; " + pair_name(p) + " has k even");
    for (int l : L.ells)
      if (!in_J(m, {p.i, l}))
        throw DomainError("family K needs (i,l) in J; (" + std::to_string(p.i) + "," + std::to_string(l) + ") is not");
  }
  return {std::move(I), std::move(L)};
}

namespace {

// Nondecreasing (strictly increasing if set_only) index sequences of length r over
// [0, count), in lexicographic order.
template <class F>
bool for_each_multiset(size_t count, int r, bool set_only, F&& fn) {
  if (r <= 0 || count == 0) return true;
  std::vector<size_t> idx(r);
  std::function<bool(int, size_t)> rec = [&](int pos, size_t start) -> bool {
    if (pos == r) return fn(idx);
    for (size_t c = start; c < count; ++c) {
      idx[pos] = c;
      if (!rec(pos + 1, set_only ? c + 1 : c)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

bool pairwise_equivalent(int m, const std::vector<PairIK>& pairs) {
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b)
      if (!are_equivalent(pairs[a], pairs[b], m)) return false;
  return true;
}

std::vector<int> odd_ells(int m) {
  std::vector<int> out;
  for (int l = 1; l < m / 2; l += 2) out.push_back(l);
  return out;
}

}  // namespace

void enumerate_I(int m, int r_max, const std::function<bool(const FamilyI&)>& visit, bool set_only) {
  const auto J = support_J(m);
  for (int r = 1; r <= r_max; ++r) {
    const bool go = for_each_multiset(J.size(), r, set_only, [&](const std::vector<size_t>& idx) {
      std::vector<PairIK> pairs;
      for (size_t c : idx) pairs.push_back(J[c]);
      if (!pairwise_equivalent(m, pairs)) return true;
      return visit(FamilyI{std::move(pairs)});
    });
    if (!go) return;
  }
}

void enumerate_L(int m, int r_max, const std::function<bool(const FamilyL&)>& visit, bool set_only) {
  require_classification_order(m);
  const auto ells = odd_ells(m);
  for (int r = 1; r <= r_max; ++r) {
    const bool go = for_each_multiset(ells.size(), r, set_only, [&](const std::vector<size_t>& idx) {
      FamilyL L;
      for (size_t c : idx) L.ells.push_back(ells[c]);
      return visit(L);
    });
    if (!go) return;
  }
}

void enumerate_K(int m, int r_max, const std::function<bool(const FamilyK&)>& visit, bool set_only) {
  std::vector<PairIK> odd_pairs;
  for (const auto& p : support_J(m))
    if (p.k % 2 == 1) odd_pairs.push_back(p);
  const auto ells = odd_ells(m);
  for (int total = 2; total <= r_max; ++total) {
    std::vector<FamilyK> batch;
    for (int a = 1; a < total; ++a) {
      std::vector<FamilyI> Is;
      for_each_multiset(odd_pairs.size(), a, set_only, [&](const std::vector<size_t>& idx) {
        std::vector<PairIK> pairs;
        for (size_t c : idx) pairs.push_back(odd_pairs[c]);
        if (pairwise_equivalent(m, pairs)) Is.push_back({std::move(pairs)});
        return true;
      });
      for (const auto& I : Is)
        for_each_multiset(ells.size(), total - a, set_only, [&](const std::vector<size_t>& idx) {
          FamilyL L;
          for (size_t c : idx) L.ells.push_back(ells[c]);
          for (const auto& p : I.pairs)
            for (int l : L.ells)
              if (!in_J(m, {p.i, l})) return true;
          batch.push_back({I, std::move(L)});
          return true;
        });
    }
    std::sort(batch.begin(), batch.end());
    for (const auto& K : batch)
      if (!visit(K)) return;
  }
}

std::vector<FamilyI> enumerate_I(int m, int r_max, bool set_only) {
  std::vector<FamilyI> out;
  enumerate_I(m, r_max, [&](const FamilyI& f) { out.push_back(f); return true; }, set_only);
  return out;
}

std::vector<FamilyL> enumerate_L(int m, int r_max, bool set_only) {
  std::vector<FamilyL> out;
  enumerate_L(m, r_max, [&](const FamilyL& f) { out.push_back(f); return true; }, set_only);
  return out;
}

std::vector<FamilyK> enumerate_K(int m, int r_max, bool set_only) {
  std::vector<FamilyK> out;
  enumerate_K(m, r_max, [&](const FamilyK& f) { out.push_back(f); return true; }, set_only);
  return out;
}

// ------------------------------------------------------------ labelled modules

namespace {

std::string suffix(std::map<std::string, int>& seen, const std::string& base) {
  const int c = ++seen[base];
  return c == 1 ? base : base + "#" + std::to_string(c);
}

void append_I(const DihedralGroup& G, const FamilyI& I, std::vector<YDModule>& parts, std::vector<std::string>& names,
              std::map<std::string, int>& seen) {
  for (const auto& p : I.pairs) {
    parts.push_back(induce(G, class_of(G, G.r(p.i)), CyclicCharacter{p.k}));
    const std::string tag = std::to_string(p.i) + "," + std::to_string(p.k);
    names.push_back(suffix(seen, "a_{" + tag + "}"));
    names.push_back(suffix(seen, "b_{" + tag + "}"));
  }
}

void append_L(const DihedralGroup& G, const FamilyL& L, std::vector<YDModule>& parts, std::vector<std::string>& names,
              std::map<std::string, int>& seen) {
  for (int l : L.ells) {
    parts.push_back(induce(G, class_of(G, G.r(G.n())), Irrep{Irrep::Kind::TwoDim, l}));
    names.push_back(suffix(seen, "c_" + std::to_string(l)));
    names.push_back(suffix(seen, "d_" + std::to_string(l)));
  }
}

}  // namespace

LabeledModule build_M_I(int m, const FamilyI& I) {
  const FamilyI fam = make_family_I(m, I.pairs);
  DihedralGroup G(m);
  std::vector<YDModule> parts;
  std::vector<std::string> names;
  std::map<std::string, int> seen;
  append_I(G, fam, parts, names, seen);
  return {direct_sum(parts), names};
}

LabeledModule build_M_L(int m, const FamilyL& L) {
  const FamilyL fam = make_family_L(m, L.ells);
  DihedralGroup G(m);
  std::vector<YDModule> parts;
  std::vector<std::string> names;
  std::map<std::string, int> seen;
  append_L(G, fam, parts, names, seen);
  return {direct_sum(parts), names};
}

LabeledModule build_M_IL(int m, const FamilyI& I, const FamilyL& L) {
  const FamilyK K = make_family_K(m, I, L);
  DihedralGroup G(m);
  std::vector<YDModule> parts;
  std::vector<std::string> names;
  std::map<std::string, int> seen;
  append_I(G, K.I, parts, names, seen);
  append_L(G, K.L, parts, names, seen);
  return {direct_sum(parts), names};
}

// ---------------------------------------------------------------- report

ClassificationReport classification_report(int m, int r_max, bool set_only, int threads) {
  require_classification_order(m);
  if (r_max < 1) throw DomainError("classification_report: r_max must be at least 1");
  ClassificationReport rep;
  rep.m = m;
  rep.r_max = r_max;
  rep.set_only = set_only;
  rep.J = support_J(m);
  for (int i = 1; i < m / 2; ++i) rep.N[i] = N_i(m, i);
  rep.odd_ells = odd_ells(m);

  auto certify = [&](const LabeledModule& M, int size) {
    auto res = nichols_dimension(M.module, threads);
    if (!res.finite || res.log2_dimension != 2 * size)
      throw CheckFailure("family module does not have an exterior Nichols algebra of dimension 4^size");
    return res.log2_dimension;
  };
  enumerate_I(m, r_max, [&](const FamilyI& I) {
    rep.families.push_back({"I", I, {}, certify(build_M_I(m, I), static_cast<int>(I.pairs.size()))});
    return true;
  }, set_only);
  enumerate_L(m, r_max, [&](const FamilyL& L) {
    rep.families.push_back({"L", {}, L, certify(build_M_L(m, L), static_cast<int>(L.ells.size()))});
    return true;
  }, set_only);
  enumerate_K(m, r_max, [&](const FamilyK& K) {
    const int size = static_cast<int>(K.I.pairs.size() + K.L.ells.size());
    rep.families.push_back({"K", K.I, K.L, certify(build_M_IL(m, K.I, K.L), size)});
    return true;
  }, set_only);

  DihedralGroup G(m);
  for (const auto& [cls, r] : irreducible_pairs(G)) {
    auto M = induce(G, cls, r);
    rep.irreducibles.push_back({cls.label, rep_name(r), M.dim(), nichols_dimension(M, threads)});
  }
  return rep;
}

}  // namespace ndm
