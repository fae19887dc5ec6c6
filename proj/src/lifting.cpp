#include "nichols_dm/lifting.hpp"

#include <algorithm>
#include <sstream>

#include "nichols_dm/errors.hpp"

namespace ndm {

std::string param_kind_name(ParamKind k) {
  switch (k) {
    case ParamKind::Lambda: return "lambda";
    case ParamKind::Gamma: return "gamma";
    case ParamKind::Theta: return "theta";
    case ParamKind::Mu: return "mu";
  }
  return "?";
}

ParamKind parse_param_kind(const std::string& s) {
  if (s == "lambda") return ParamKind::Lambda;
  if (s == "gamma") return ParamKind::Gamma;
  if (s == "theta") return ParamKind::Theta;
  if (s == "mu") return ParamKind::Mu;
  throw DomainError("unknown parameter family '" + s + "'");
}

std::string slot_name(const ParamSlot& s) {
  return param_kind_name(s.kind) + "[" + std::to_string(s.a) + "," + std::to_string(s.b) + "]";
}

CycloNumber LiftingDatum::get(int m, const ParamSlot& s) const {
  auto it = values.find(s);
  return it == values.end() ? CycloNumber(m) : it->second;
}

namespace {

bool is_pair_kind(ParamKind k) { return k == ParamKind::Lambda || k == ParamKind::Gamma; }

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

bool in_range(const FamilyI& I, const FamilyL& L, const ParamSlot& s) {
  const int ni = static_cast<int>(I.pairs.size()), nl = static_cast<int>(L.ells.size());
  if (s.a < 0 || s.a >= ni || s.b < 0) return false;
  return is_pair_kind(s.kind) ? s.b < ni : s.b < nl;
}

ParamSlot canonical(const ParamSlot& s) {
  if (is_pair_kind(s.kind) && s.a > s.b) return {s.kind, s.b, s.a};
  return s;
}

}  // namespace

bool guard_active(int m, const FamilyI& I, const FamilyL& L, const ParamSlot& s) {
  if (!in_range(I, L, s)) return false;
  const PairIK& pa = I.pairs[static_cast<size_t>(s.a)];
  switch (s.kind) {
    case ParamKind::Lambda: {
      const PairIK& pb = I.pairs[static_cast<size_t>(s.b)];
      return mod(pa.k + pb.k, m) == 0 && mod(pa.i + pb.i, m) != 0;
    }
    case ParamKind::Gamma: {
      const PairIK& pb = I.pairs[static_cast<size_t>(s.b)];
      return pa.k == pb.k && mod(pa.i - pb.i, m) != 0;
    }
    case ParamKind::Theta: return mod(pa.k + L.ells[static_cast<size_t>(s.b)], m) == 0;
    case ParamKind::Mu: return pa.k == L.ells[static_cast<size_t>(s.b)];
  }
  return false;
}

ParameterShape parameter_shape(int m, const FamilyI& I, const FamilyL& L) {
  ParameterShape shape;
  const int ni = static_cast<int>(I.pairs.size()), nl = static_cast<int>(L.ells.size());
  for (ParamKind k : {ParamKind::Lambda, ParamKind::Gamma})
    for (int a = 0; a < ni; ++a)
      for (int b = 0; b < ni; ++b) {
        const ParamSlot s{k, a, b};
        if (!guard_active(m, I, L, s)) {
          shape.forced_zero.push_back(s);
        } else if (a <= b) {
          shape.free.push_back(s);
          if (a < b) shape.identified.push_back({s, ParamSlot{k, b, a}});
        }
      }
  for (ParamKind k : {ParamKind::Theta, ParamKind::Mu})
    for (int a = 0; a < ni; ++a)
      for (int c = 0; c < nl; ++c) {
        const ParamSlot s{k, a, c};
        (guard_active(m, I, L, s) ? shape.free : shape.forced_zero).push_back(s);
      }
  return shape;
}

LiftingDatum normalize_datum(int m, const FamilyI& I, const FamilyL& L, const LiftingDatum& d) {
  LiftingDatum out;
  for (const auto& [s, v] : d.values) {
    if (!in_range(I, L, s)) throw DomainError("parameter " + slot_name(s) + " is out of range for this family");
    if (v.modulus() != m) throw DomainError("parameter " + slot_name(s) + " lives in the wrong cyclotomic field");
    if (v.is_zero()) continue;
    if (!guard_active(m, I, L, s))
      throw DomainError("parameter " + slot_name(s) + " must be 0: its relation has no deformation");
    if (is_pair_kind(s.kind)) {
      auto mirror = d.values.find(ParamSlot{s.kind, s.b, s.a});
      if (mirror != d.values.end() && !(mirror->second == v))
        throw DomainError("parameters " + slot_name(s) + " and " + slot_name(mirror->first) +
                          " must be equal (symmetry of the anticommutator)");
    }
    out.values.insert_or_assign(canonical(s), v);
  }
  return out;
}

LiftingDatum uniform_datum(int m, const FamilyI& I, const FamilyL& L, const CycloNumber& value) {
  LiftingDatum d;
  if (value.is_zero()) return d;
  for (const auto& s : parameter_shape(m, I, L).free) d.values.insert_or_assign(s, value);
  return d;
}

// ------------------------------------------------------------ presentations

std::string word_string(const Presentation& P, const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < word.size();) {
    size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += " ";
    const int l = word[i];
    out += l == kLetterG ? "g" : l == kLetterH ? "h" : P.generators[static_cast<size_t>(l)].name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

// "c word" with a leading sign; compound coefficients are parenthesized.
std::string signed_term(const CycloNumber& c, const std::string& word, bool first) {
  std::string body = c.str();
  bool neg = false;
  if (body[0] == '-') {
    neg = true;
    body = (-c).str();
  }
  if (body.find_first_of("+- ") != std::string::npos) body = "(" + body + ")";
  std::string out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  if (body == "1") return out + (word.empty() ? "1" : word);
  return out + body + (word.empty() ? "" : " " + word);
}

}  // namespace

std::string relation_string(const Presentation& P, const Relation& r) {
  DihedralGroup G(P.m);
  std::string out;
  for (const auto& t : r.lhs) out += signed_term(t.coef, word_string(P, t.word), out.empty());
  if (out.empty()) out = "0";
  out += " = ";
  std::string rhs;
  for (const auto& [g, c] : r.rhs) rhs += signed_term(c, g.is_identity() ? "" : G.gh_name(g), rhs.empty());
  return out + (rhs.empty() ? "0" : rhs);
}

namespace {

std::string generator_name(const std::string& basis_name) {
  static const std::map<char, char> to{{'a', 'x'}, {'b', 'y'}, {'c', 'z'}, {'d', 'w'}};
  return std::string(1, to.at(basis_name[0])) + basis_name.substr(1);
}

// c (1 - h^d) in the group basis.
GroupCombo one_minus_h(const DihedralGroup& G, const CycloNumber& c, long long d) {
  if (c.is_zero() || mod(d, G.m()) == 0) return {};
  return {{G.identity(), c}, {G.r(d), -c}};
}

Presentation build(int m, const FamilyI& I, const FamilyL& L, const LiftingDatum& datum, const LabeledModule& M) {
  DihedralGroup G(m);
  Presentation P;
  P.m = m;
  P.I = I;
  P.L = L;
  P.datum = normalize_datum(m, I, L, datum);

  const YDModule& mod_ = M.module;
  const int N = mod_.dim();
  for (int j = 0; j < N; ++j) {
    Generator gen;
    gen.name = generator_name(M.names[static_cast<size_t>(j)]);
    gen.kind = gen.name[0];
    gen.slot = gen.kind == 'x' || gen.kind == 'y' ? j / 2 : j / 2 - static_cast<int>(I.pairs.size());
    gen.grouplike = mod_.degree(j);
    auto e = mod_.act_r().at(j, j).root_exponent();
    if (!e) throw CheckFailure("presentation: the action of h is not diagonal on the chosen basis");
    gen.h_exp = *e;
    gen.partner = -1;
    for (int i = 0; i < N; ++i)
      if (!mod_.act_s().at(i, j).is_zero()) {
        if (!mod_.act_s().at(i, j).is_one() || gen.partner >= 0)
          throw CheckFailure("presentation: g does not permute the chosen basis");
        gen.partner = i;
      }
    P.generators.push_back(gen);
  }

  const CycloNumber one(m, 1);
  // group relations
  P.relations.push_back({"group", {{one, {kLetterG, kLetterG}}}, {{G.identity(), one}}, {}});
  P.relations.push_back({"group", {{one, std::vector<int>(static_cast<size_t>(m), kLetterH)}}, {{G.identity(), one}}, {}});
  P.relations.push_back({"group", {{one, {kLetterG, kLetterH, kLetterG}}}, {{G.r(m - 1), one}}, {}});
  // conjugation relations
  for (int v = 0; v < N; ++v) {
    const auto& gen = P.generators[static_cast<size_t>(v)];
    P.relations.push_back({"conj", {{one, {kLetterG, v}}, {-one, {gen.partner, kLetterG}}}, {}, {}});
    P.relations.push_back({"conj", {{one, {kLetterH, v}}, {-CycloNumber::root(m, gen.h_exp), {v, kLetterH}}}, {}, {}});
  }
  // quadratic relations u v + v u = rhs, one per unordered pair of letters
  auto quad = [&](int u, int v, const std::string& fam, std::optional<ParamSlot> slot, long long d) {
    Relation r;
    r.family = fam;
    if (u == v) {
      r.lhs = {{CycloNumber(m, 2), {u, u}}};
    } else {
      r.lhs = {{one, {u, v}}, {one, {v, u}}};
    }
    if (slot && guard_active(m, I, L, *slot)) {
      r.parameter = canonical(*slot);
      r.rhs = one_minus_h(G, P.datum.get(m, *r.parameter), d);
    }
    P.relations.push_back(std::move(r));
  };
  const int ni = static_cast<int>(I.pairs.size()), nl = static_cast<int>(L.ells.size());
  auto X = [](int a) { return 2 * a; };
  auto Y = [](int a) { return 2 * a + 1; };
  auto Z = [&](int c) { return 2 * ni + 2 * c; };
  auto W = [&](int c) { return 2 * ni + 2 * c + 1; };
  auto p_of = [&](int a) { return I.pairs[static_cast<size_t>(a)].i; };
  const int n = m / 2;
  for (int a = 0; a < ni; ++a)
    for (int b = a; b < ni; ++b) {
      quad(X(a), X(b), "xx", ParamSlot{ParamKind::Lambda, a, b}, p_of(a) + p_of(b));
      quad(Y(a), Y(b), "yy", ParamSlot{ParamKind::Lambda, a, b}, -p_of(a) - p_of(b));
    }
  for (int a = 0; a < ni; ++a)
    for (int b = 0; b < ni; ++b) quad(X(a), Y(b), "xy", ParamSlot{ParamKind::Gamma, a, b}, p_of(a) - p_of(b));
  for (int c = 0; c < nl; ++c)
    for (int e = c; e < nl; ++e) {
      quad(Z(c), Z(e), "zz", std::nullopt, 0);
      quad(W(c), W(e), "ww", std::nullopt, 0);
    }
  for (int c = 0; c < nl; ++c)
    for (int e = 0; e < nl; ++e) quad(Z(c), W(e), "zw", std::nullopt, 0);
  for (int a = 0; a < ni; ++a)
    for (int c = 0; c < nl; ++c) {
      quad(X(a), Z(c), "xz", ParamSlot{ParamKind::Theta, a, c}, n + p_of(a));
      quad(Y(a), W(c), "yw", ParamSlot{ParamKind::Theta, a, c}, n - p_of(a));
      quad(X(a), W(c), "xw", ParamSlot{ParamKind::Mu, a, c}, n + p_of(a));
      quad(Y(a), Z(c), "yz", ParamSlot{ParamKind::Mu, a, c}, n - p_of(a));
    }
  return P;
}

}  // namespace

Presentation presentation_A(int m, const FamilyI& I, const LiftingDatum& datum) {
  const FamilyI fam = make_family_I(m, I.pairs);
  return build(m, fam, {}, datum, build_M_I(m, fam));
}

Presentation presentation_B(int m, const FamilyI& I, const FamilyL& L, const LiftingDatum& datum) {
  const FamilyK K = make_family_K(m, I, L);
  return build(m, K.I, K.L, datum, build_M_IL(m, K.I, K.L));
}

Presentation bosonization(int m, const LabeledModule& M) {
  require_classification_order(m);
  if (M.module.m() != m) throw DomainError("bosonization: module lives over a different group");
  const auto& comps = M.module.components();
  DihedralGroup G(m);
  const GroupElement center = G.r(G.n());
  bool all_L = !comps.empty();
  FamilyL L;
  for (const auto& c : comps) {
    const auto* ir = std::get_if<Irrep>(&c.rep);
    if (c.sigma == center && ir && ir->kind == Irrep::Kind::TwoDim && ir->index % 2 == 1)
      L.ells.push_back(ir->index);
    else
      all_L = false;
  }
  if (all_L) {
    L = make_family_L(m, L.ells);
    return build(m, {}, L, {}, build_M_L(m, L));
  }
  if (comps.size() == 1 && !comps[0].sigma.reflection) {
    if (const auto* ch = std::get_if<CyclicCharacter>(&comps[0].rep)) {
      const PairIK p{comps[0].sigma.rotation, ch->k};
      if (in_J(m, p) && p.k != G.n()) {
        FamilyI I = make_family_I(m, {p});
        return build(m, I, {}, {}, build_M_I(m, I));
      }
    }
  }
  throw DomainError("bosonization covers M_{(i,k)} with k != n and M_L; use the A or B presentations with zero data otherwise");
}

// ------------------------------------------------------------ checks

namespace {

using ComboMap = std::map<GroupElement, CycloNumber>;

ComboMap combo_map(const GroupCombo& c) {
  ComboMap out;
  for (const auto& [g, v] : c) {
    auto it = out.find(g);
    if (it == out.end())
      out.emplace(g, v);
    else
      it->second += v;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<std::vector<int>, CycloNumber> term_map(const std::vector<Term>& ts) {
  std::map<std::vector<int>, CycloNumber> out;
  for (const auto& t : ts) {
    auto it = out.find(t.word);
    if (it == out.end())
      out.emplace(t.word, t.coef);
    else
      it->second += t.coef;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// a == c * b for some nonzero c.
bool proportional(int m, const Relation& a, const Relation& b) {
  auto la = term_map(a.lhs), lb = term_map(b.lhs);
  if (la.size() != lb.size() || la.empty()) return false;
  const CycloNumber c = la.begin()->second / lb.begin()->second;
  for (auto ia = la.begin(), ib = lb.begin(); ia != la.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == c * ib->second)) return false;
  auto ra = combo_map(a.rhs), rb = combo_map(b.rhs);
  if (ra.size() != rb.size()) return false;
  for (auto ia = ra.begin(), ib = rb.begin(); ia != ra.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == c * ib->second)) return false;
  (void)m;
  return true;
}

bool is_quadratic(const Relation& r) { return r.family != "group" && r.family != "conj"; }

}  // namespace

bool check_conjugation_closure(const Presentation& P) {
  DihedralGroup G(P.m);
  std::vector<const Relation*> quads;
  for (const auto& r : P.relations)
    if (is_quadratic(r)) quads.push_back(&r);
  auto listed = [&](const Relation& t) {
    return std::any_of(quads.begin(), quads.end(), [&](const Relation* r) { return proportional(P.m, t, *r); });
  };
  for (const Relation* r : quads) {
    Relation by_g = *r, by_h = *r;
    for (auto& t : by_g.lhs)
      for (int& l : t.word) l = P.generators[static_cast<size_t>(l)].partner;
    for (auto& [g, c] : by_g.rhs) g = G.conjugate(G.s(), g);
    for (auto& t : by_h.lhs) {
      long long e = 0;
      for (int l : t.word) e += P.generators[static_cast<size_t>(l)].h_exp;
      t.coef *= CycloNumber::root(P.m, e);
    }
    if (!listed(by_g) || !listed(by_h)) return false;
  }
  return true;
}

bool check_counit(const Presentation& P) {
  for (const auto& r : P.relations) {
    CycloNumber acc(P.m);
    for (const auto& t : r.lhs)
      if (std::all_of(t.word.begin(), t.word.end(), [](int l) { return l < 0; })) acc += t.coef;
    for (const auto& [g, c] : r.rhs) acc -= c;
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::vector<Relation> canonical_relations(const Presentation& P) {
  std::vector<Relation> out;
  for (auto r : P.relations) {
    Relation c;
    c.family = r.family;
    c.parameter = r.parameter;
    for (auto& [w, v] : term_map(r.lhs)) c.lhs.push_back({v, w});
    for (auto& [g, v] : combo_map(r.rhs)) c.rhs.emplace_back(g, v);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) {
    auto key = [](const Relation& r) {
      std::vector<std::vector<int>> ws;
      for (const auto& t : r.lhs) ws.push_back(t.word);
      return std::make_pair(r.family, ws);
    };
    return key(a) < key(b);
  });
  return out;
}

// ------------------------------------------------------------ catalogue

std::vector<FamilyDescriptor> lifting_catalogue(int m, int r_max, bool set_only) {
  require_classification_order(m);
  std::vector<FamilyDescriptor> out;
  const int n = m / 2;
  for (const auto& I : enumerate_I(m, 1, set_only))
    if (I.pairs[0].k != n) out.push_back({'a', I, {}, parameter_shape(m, I, {})});
  for (const auto& L : enumerate_L(m, r_max, set_only)) out.push_back({'b', {}, L, parameter_shape(m, {}, L)});
  for (const auto& I : enumerate_I(m, r_max, set_only))
    if (I.pairs.size() > 1 || I.pairs[0].k == n) out.push_back({'c', I, {}, parameter_shape(m, I, {})});
  for (const auto& K : enumerate_K(m, r_max, set_only)) out.push_back({'d', K.I, K.L, parameter_shape(m, K.I, K.L)});
  return out;
}

}  // namespace ndm
