#include "nichols_dm/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "nichols_dm/errors.hpp"

namespace ndm {

namespace {

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

bool is_pair_kind(ParamKind k) { return k == ParamKind::Lambda || k == ParamKind::Gamma; }

ParamSlot canonical(ParamSlot s) {
  if (is_pair_kind(s.kind) && s.a > s.b) std::swap(s.a, s.b);
  return s;
}

CycloNumber value_at(int m, const LiftingDatum& d, const ParamSlot& s) { return d.get(m, canonical(s)); }

/// All ordered slots, active or not.
std::vector<ParamSlot> all_slots(const FamilyI& I, const FamilyL& L) {
  std::vector<ParamSlot> out;
  const int ni = static_cast<int>(I.pairs.size()), nl = static_cast<int>(L.ells.size());
  for (ParamKind k : {ParamKind::Lambda, ParamKind::Gamma})
    for (int a = 0; a < ni; ++a)
      for (int b = 0; b < ni; ++b) out.push_back({k, a, b});
  for (ParamKind k : {ParamKind::Theta, ParamKind::Mu})
    for (int a = 0; a < ni; ++a)
      for (int c = 0; c < nl; ++c) out.push_back({k, a, c});
  return out;
}

struct SlotMap {
  const UnitModM& l;
  const Lifting& src;
  const std::vector<int>& pi;
  const std::vector<int>& pl;

  bool fi(int a) const { return pair_flipped(l, src.I.pairs[static_cast<size_t>(a)]); }
  bool fl(int c) const { return ell_flipped(l, src.L.ells[static_cast<size_t>(c)]); }

  /// Slot of the target relation that phi_l carries the source relation s onto.
  ParamSlot operator()(const ParamSlot& s) const {
    const int a = pi[static_cast<size_t>(s.a)];
    switch (s.kind) {
      case ParamKind::Lambda: {
        const int b = pi[static_cast<size_t>(s.b)];
        const bool x = fi(s.a), y = fi(s.b);
        if (x == y) return {ParamKind::Lambda, a, b};
        return x ? ParamSlot{ParamKind::Gamma, b, a} : ParamSlot{ParamKind::Gamma, a, b};
      }
      case ParamKind::Gamma: {
        const int b = pi[static_cast<size_t>(s.b)];
        const bool x = fi(s.a), y = fi(s.b);
        if (x != y) return {ParamKind::Lambda, a, b};
        return x ? ParamSlot{ParamKind::Gamma, b, a} : ParamSlot{ParamKind::Gamma, a, b};
      }
      case ParamKind::Theta:
      case ParamKind::Mu: {
        const int c = pl[static_cast<size_t>(s.b)];
        const bool same = fi(s.a) == fl(s.b);
        ParamKind k = s.kind;
        if (!same) k = k == ParamKind::Theta ? ParamKind::Mu : ParamKind::Theta;
        return {k, a, c};
      }
    }
    return s;
  }
};

/// Bijections p with target[p[a]] == image[a]; visit returns true to stop.
template <typename T>
bool for_each_matching(const std::vector<T>& image, const std::vector<T>& target,
                       const std::function<bool(const std::vector<int>&)>& visit) {
  const std::size_t n = image.size();
  if (target.size() != n) return false;
  std::vector<int> p(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t a) -> bool {
    if (a == n) return visit(p);
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || !(target[t] == image[a])) continue;
      used[t] = true;
      p[a] = static_cast<int>(t);
      if (rec(a + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return rec(0);
}

/// Torus action: does c_u c_v v' = v have a solution with all c nonzero?
bool rescaling_exists(int m, const Lifting& a, const Lifting& b, const SlotMap& T) {
  const int ni = static_cast<int>(a.I.pairs.size());
  const int nodes = ni + static_cast<int>(a.L.ells.size());
  struct Edge {
    int u, v;
    CycloNumber r;
  };
  std::vector<std::vector<Edge>> adj(static_cast<size_t>(nodes));
  for (const auto& s : all_slots(a.I, a.L)) {
    const CycloNumber v = value_at(m, a.datum, s), w = value_at(m, b.datum, T(s));
    if (v.is_zero() != w.is_zero()) return false;
    if (v.is_zero()) continue;
    const int u = s.a, x = is_pair_kind(s.kind) ? s.b : ni + s.b;
    const CycloNumber r = v / w;
    adj[static_cast<size_t>(u)].push_back({u, x, r});
    if (x != u) adj[static_cast<size_t>(x)].push_back({x, u, r});
  }
  // c_v = X^{sign_v} t_v along a spanning tree of each component
  std::vector<int> sign(static_cast<size_t>(nodes), 0);
  std::vector<CycloNumber> t(static_cast<size_t>(nodes), CycloNumber(m, 1));
  for (int root = 0; root < nodes; ++root) {
    if (sign[static_cast<size_t>(root)] != 0) continue;
    sign[static_cast<size_t>(root)] = 1;
    std::optional<CycloNumber> x2;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& e : adj[static_cast<size_t>(u)]) {
        const auto su = sign[static_cast<size_t>(u)];
        auto& sv = sign[static_cast<size_t>(e.v)];
        if (sv == 0) {
          sv = -su;
          t[static_cast<size_t>(e.v)] = e.r / t[static_cast<size_t>(u)];
          stack.push_back(e.v);
          continue;
        }
        const CycloNumber prod = t[static_cast<size_t>(u)] * t[static_cast<size_t>(e.v)];
        if (sv != su) {
          if (!(prod == e.r)) return false;
          continue;
        }
        CycloNumber need = e.r / prod;
        if (su < 0) need = need.inverse();
        if (x2 && !(*x2 == need)) return false;
        x2 = need;
      }
    }
  }
  return true;
}

void require_sorted(int m, const FamilyI& I, const FamilyL& L) {
  if (!I.pairs.empty() && !(make_family_I(m, I.pairs) == I)) throw DomainError("family I is not sorted");
  if (!L.ells.empty() && !(make_family_L(m, L.ells) == L)) throw DomainError("family L is not sorted");
}

}  // namespace

UnitModM::UnitModM(int l, int m) : l_(mod(l, m > 0 ? m : 1)), inv_(0), m_(m) {
  if (m < 2 || std::gcd(l_, m) != 1) throw DomainError("not a unit mod " + std::to_string(m) + ": " + std::to_string(l));
  for (int x = 1; x < m; ++x)
    if (mod(static_cast<long long>(x) * l_, m) == 1) inv_ = x;
}

std::vector<UnitModM> units(int m) {
  std::vector<UnitModM> out;
  for (int l = 1; l < m; ++l)
    if (std::gcd(l, m) == 1) out.emplace_back(l, m);
  return out;
}

bool pair_flipped(const UnitModM& l, const PairIK& p) {
  const int m = l.modulus();
  if (!in_J(m, p)) throw DomainError("pair " + pair_name(p) + " is not in J");
  return mod(static_cast<long long>(l.value()) * p.i, m) >= m / 2;
}

PairIK act_pair(const UnitModM& l, const PairIK& p) {
  const int m = l.modulus();
  const int li = mod(static_cast<long long>(l.value()) * p.i, m);
  const int k = mod(static_cast<long long>(l.inverse()) * p.k, m);
  if (!pair_flipped(l, p)) return {li, k};
  return {m - li, mod(-k, m)};
}

bool ell_flipped(const UnitModM& l, int r) {
  const int m = l.modulus();
  if (r < 1 || r >= m / 2 || r % 2 == 0) throw DomainError("ell must be odd with 0 < ell < n: " + std::to_string(r));
  return mod(static_cast<long long>(l.inverse()) * r, m) >= m / 2;
}

int act_ell(const UnitModM& l, int r) {
  const int m = l.modulus();
  const int x = mod(static_cast<long long>(l.inverse()) * r, m);
  return ell_flipped(l, r) ? m - x : x;
}

FamilyI act_family(const UnitModM& l, const FamilyI& I) {
  FamilyI out;
  for (const auto& p : I.pairs) out.pairs.push_back(act_pair(l, p));
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

FamilyL act_family(const UnitModM& l, const FamilyL& L) {
  FamilyL out;
  for (int r : L.ells) out.ells.push_back(act_ell(l, r));
  std::sort(out.ells.begin(), out.ells.end());
  return out;
}

LiftingDatum transport_datum(int m, const UnitModM& l, const Lifting& src, const std::vector<int>& perm_I,
                             const std::vector<int>& perm_L, const FamilyI& target_I, const FamilyL& target_L) {
  if (l.modulus() != m) throw DomainError("unit modulus differs from m");
  if (perm_I.size() != src.I.pairs.size() || perm_L.size() != src.L.ells.size())
    throw DomainError("slot permutation has the wrong size");
  for (std::size_t a = 0; a < perm_I.size(); ++a)
    if (!(target_I.pairs.at(static_cast<size_t>(perm_I[a])) == act_pair(l, src.I.pairs[a])))
      throw DomainError("slot permutation does not match the image family");
  for (std::size_t c = 0; c < perm_L.size(); ++c)
    if (target_L.ells.at(static_cast<size_t>(perm_L[c])) != act_ell(l, src.L.ells[c]))
      throw DomainError("slot permutation does not match the image family");
  SlotMap T{l, src, perm_I, perm_L};
  LiftingDatum out;
  for (const auto& [s, v] : src.datum.values) {
    out.values.insert_or_assign(canonical(T(s)), v);
    if (is_pair_kind(s.kind) && s.a != s.b) out.values.insert_or_assign(canonical(T({s.kind, s.b, s.a})), v);
  }
  return out;
}

std::optional<IsoWitness> find_isomorphism(int m, const Lifting& a, const Lifting& b, bool rescale) {
  require_classification_order(m);
  require_sorted(m, a.I, a.L);
  require_sorted(m, b.I, b.L);
  const LiftingDatum da = normalize_datum(m, a.I, a.L, a.datum), db = normalize_datum(m, b.I, b.L, b.datum);
  const Lifting A{a.I, a.L, da}, B{b.I, b.L, db};
  if (a.I.pairs.size() != b.I.pairs.size() || a.L.ells.size() != b.L.ells.size()) return std::nullopt;

  std::optional<IsoWitness> found;
  for (const auto& l : units(m)) {
    if (!(act_family(l, a.I) == b.I) || !(act_family(l, a.L) == b.L)) continue;
    std::vector<PairIK> img_I;
    for (const auto& p : a.I.pairs) img_I.push_back(act_pair(l, p));
    std::vector<int> img_L;
    for (int r : a.L.ells) img_L.push_back(act_ell(l, r));
    for_each_matching<PairIK>(img_I, b.I.pairs, [&](const std::vector<int>& pi) {
      return for_each_matching<int>(img_L, b.L.ells, [&](const std::vector<int>& pl) {
        SlotMap T{l, A, pi, pl};
        bool ok;
        if (rescale) {
          ok = rescaling_exists(m, A, B, T);
        } else {
          ok = transport_datum(m, l, A, pi, pl, b.I, b.L).values == db.values;
        }
        if (ok) found = IsoWitness{l.value(), pi, pl, rescale};
        return ok;
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<IsoWitness> is_isomorphic_A(int m, const FamilyI& I, const LiftingDatum& d, const FamilyI& I2,
                                          const LiftingDatum& d2, bool rescale) {
  return find_isomorphism(m, {I, {}, d}, {I2, {}, d2}, rescale);
}

std::optional<IsoWitness> is_isomorphic_B(int m, const FamilyI& I, const FamilyL& L, const LiftingDatum& d,
                                          const FamilyI& I2, const FamilyL& L2, const LiftingDatum& d2,
                                          bool rescale) {
  make_family_K(m, I, L);
  make_family_K(m, I2, L2);
  return find_isomorphism(m, {I, L, d}, {I2, L2, d2}, rescale);
}

std::vector<IsoClass> iso_classes(int m, int r_max, const std::vector<CycloNumber>& grid_in, bool rescale,
                                  bool set_only) {
  const std::vector<CycloNumber> grid =
      grid_in.empty() ? std::vector<CycloNumber>{CycloNumber(m, 0), CycloNumber(m, 1)} : grid_in;
  constexpr std::size_t kMaxPoints = 200000;

  struct Point {
    std::size_t family;  // index into the catalogue
    Lifting lifting;
  };
  const auto catalogue = lifting_catalogue(m, r_max, set_only);
  std::vector<Point> points;
  for (std::size_t f = 0; f < catalogue.size(); ++f) {
    const auto& desc = catalogue[f];
    const auto& free = desc.shape.free;
    std::vector<std::size_t> idx(free.size(), 0);
    while (true) {
      LiftingDatum d;
      for (std::size_t j = 0; j < free.size(); ++j)
        if (!grid[idx[j]].is_zero()) d.values.emplace(free[j], grid[idx[j]]);
      points.push_back({f, {desc.I, desc.L, d}});
      if (points.size() > kMaxPoints) throw DomainError("parameter grid too large");
      std::size_t j = 0;
      while (j < idx.size() && ++idx[j] == grid.size()) idx[j++] = 0;
      if (j == idx.size()) break;
    }
  }

  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) {
    x = find(x), y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };

  // families related by some unit
  const auto us = units(m);
  std::vector<std::vector<std::size_t>> related(catalogue.size());
  for (std::size_t f = 0; f < catalogue.size(); ++f)
    for (std::size_t g = f; g < catalogue.size(); ++g) {
      if (catalogue[f].family != catalogue[g].family) continue;
      for (const auto& l : us)
        if (act_family(l, catalogue[f].I) == catalogue[g].I && act_family(l, catalogue[f].L) == catalogue[g].L) {
          related[f].push_back(g);
          break;
        }
    }
  std::vector<std::vector<std::size_t>> by_family(catalogue.size());
  for (std::size_t p = 0; p < points.size(); ++p) by_family[points[p].family].push_back(p);
  for (std::size_t f = 0; f < catalogue.size(); ++f)
    for (std::size_t g : related[f])
      for (std::size_t p : by_family[f])
        for (std::size_t q : by_family[g]) {
          if (q <= p || find(p) == find(q)) continue;
          if (find_isomorphism(m, points[p].lifting, points[q].lifting, rescale)) unite(p, q);
        }

  std::vector<IsoClass> out;
  std::map<std::size_t, std::size_t> class_of;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const std::size_t root = find(p);
    auto [it, fresh] = class_of.emplace(root, out.size());
    if (fresh) {
      IsoClass c;
      c.family = catalogue[points[p].family].family;
      c.representative = points[p].lifting;
      out.push_back(std::move(c));
    }
    auto& c = out[it->second];
    const auto w = find_isomorphism(m, c.representative, points[p].lifting, rescale);
    if (!w) throw CheckFailure("orbit member without a witnessing unit");
    c.members.push_back(points[p].lifting);
    c.witness_units.push_back(w->ell);
  }
  return out;
}

}  // namespace ndm
