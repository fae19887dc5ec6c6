#include "nichols_dm/ydmod.hpp"

#include <algorithm>
#include <map>

#include "nichols_dm/errors.hpp"
#include "nichols_dm/rack.hpp"

namespace ndm {

YDModule::YDModule(int m, std::vector<GroupElement> degree, CycloMatrix act_r, CycloMatrix act_s,
                   std::vector<YDComponent> components, std::vector<std::string> labels)
    : m_(m),
      degree_(std::move(degree)),
      act_r_(std::move(act_r)),
      act_s_(std::move(act_s)),
      components_(std::move(components)),
      labels_(std::move(labels)) {
  if (act_r_.size() != dim() || act_s_.size() != dim() || labels_.size() != degree_.size())
    throw DomainError("YDModule: inconsistent dimensions");
}

CycloMatrix YDModule::action(const GroupElement& g) const {
  CycloMatrix out = CycloMatrix::identity(m_, dim());
  // s^e r^b acts as act_s^e * act_r^b
  for (int b = 0; b < g.rotation; ++b) out = act_r_ * out;
  if (g.reflection) out = act_s_ * out;
  return out;
}

namespace {

// rho(gamma) for gamma in C(sigma); throws when gamma is outside the centralizer the
// representation lives on.
CycloMatrix evaluate_rep(const DihedralGroup& G, const GroupElement& sigma, const CentralizerRep& rep,
                         const GroupElement& gamma) {
  const int m = G.m();
  if (auto* ir = std::get_if<Irrep>(&rep)) return evaluate(G, *ir, gamma);
  CycloMatrix v(m, 1);
  if (auto* c = std::get_if<CyclicCharacter>(&rep)) {
    if (gamma.reflection) throw CheckFailure("cyclic character evaluated off <r>");
    v.at(0, 0) = CycloNumber::root(m, static_cast<long long>(c->k) * gamma.rotation);
    return v;
  }
  const auto& k = std::get<KleinCharacter>(rep);
  int sign = 1;
  if (gamma.reflection) {
    sign *= k.on_sigma;
    if (gamma.rotation != sigma.rotation) sign *= k.on_center;
  } else if (gamma.rotation != 0) {
    sign *= k.on_center;
  }
  v.at(0, 0) = CycloNumber(m, sign);
  return v;
}

void validate_rep(const DihedralGroup& G, const ConjugacyClass& cls, const CentralizerRep& rep) {
  const int m = G.m();
  const GroupElement& sigma = cls.representative;
  const bool central = cls.elements.size() == 1;
  if (auto* ir = std::get_if<Irrep>(&rep)) {
    if (!central) throw DomainError("irreps of D_m only apply to central classes; class " + cls.label);
    const auto all = irreps(G);
    if (std::find(all.begin(), all.end(), *ir) == all.end()) throw DomainError("no such irrep " + ir->name());
    return;
  }
  if (auto* c = std::get_if<CyclicCharacter>(&rep)) {
    if (central || sigma.reflection) throw DomainError("cyclic characters need a non-central rotation class");
    if (c->k < 0 || c->k >= m) throw DomainError("cyclic character needs 0 <= k < m");
    return;
  }
  const auto& k = std::get<KleinCharacter>(rep);
  if (!sigma.reflection || m % 2) throw DomainError("Klein characters need a reflection class of even D_m");
  if ((k.on_sigma != 1 && k.on_sigma != -1) || (k.on_center != 1 && k.on_center != -1))
    throw DomainError("Klein character signs must be +1 or -1");
}

}  // namespace

YDModule induce(const DihedralGroup& G, const ConjugacyClass& cls, const CentralizerRep& rep) {
  const int m = G.m();
  if (m % 2) throw DomainError("induce: D_m with m even is required");
  validate_rep(G, cls, rep);
  const GroupElement sigma = cls.representative;
  const int deg = std::holds_alternative<Irrep>(rep) ? std::get<Irrep>(rep).degree() : 1;

  // lexicographically-first coset representatives; g_1 = e and g_2 = s for {r^i, r^-i}
  YDComponent comp{cls.label, sigma, rep, {}, 0, 0};
  const auto elems = G.elements();
  for (const auto& tau : cls.elements)
    for (const auto& g : elems)
      if (G.conjugate(g, sigma) == tau) {
        comp.coset_reps.push_back(g);
        break;
      }
  const int blocks = static_cast<int>(comp.coset_reps.size());
  comp.dim = blocks * deg;

  std::vector<GroupElement> degree;
  std::vector<std::string> labels;
  for (int i = 0; i < blocks; ++i)
    for (int v = 0; v < deg; ++v) {
      degree.push_back(cls.elements[i]);
      labels.push_back(cls.label + "/" + rep_name(rep) + ":" + std::to_string(i + 1) + "." + std::to_string(v + 1));
    }

  auto build = [&](const GroupElement& g) {
    CycloMatrix A(m, comp.dim);
    for (int i = 0; i < blocks; ++i) {
      const GroupElement ggi = G.multiply(g, comp.coset_reps[i]);
      int j = -1;
      GroupElement gamma;
      for (int c = 0; c < blocks && j < 0; ++c) {
        gamma = G.multiply(G.inverse(comp.coset_reps[c]), ggi);
        if (G.multiply(gamma, sigma) == G.multiply(sigma, gamma)) j = c;
      }
      if (j < 0) throw CheckFailure("induce: coset factorization failed");
      const CycloMatrix R = evaluate_rep(G, sigma, rep, gamma);
      for (int v = 0; v < deg; ++v)
        for (int w = 0; w < deg; ++w) A.at(j * deg + w, i * deg + v) = R.at(w, v);
    }
    return A;
  };
  CycloMatrix act_r = build(G.r()), act_s = build(G.s());
  return YDModule(m, std::move(degree), std::move(act_r), std::move(act_s), {comp}, std::move(labels));
}

YDModule direct_sum(const std::vector<YDModule>& parts) {
  if (parts.empty()) throw DomainError("direct_sum: no summands");
  const int m = parts[0].m();
  int total = 0;
  for (const auto& p : parts) {
    if (p.m() != m) throw DomainError("direct_sum: summands over different groups");
    total += p.dim();
  }
  CycloMatrix R(m, total), S(m, total);
  std::vector<GroupElement> degree;
  std::vector<YDComponent> comps;
  std::vector<std::string> labels;
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.dim(); ++i)
      for (int j = 0; j < p.dim(); ++j) {
        R.at(off + i, off + j) = p.act_r().at(i, j);
        S.at(off + i, off + j) = p.act_s().at(i, j);
      }
    degree.insert(degree.end(), p.degrees().begin(), p.degrees().end());
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
    for (auto c : p.components()) {
      c.offset += off;
      comps.push_back(std::move(c));
    }
    off += p.dim();
  }
  return YDModule(m, std::move(degree), std::move(R), std::move(S), std::move(comps), std::move(labels));
}

std::vector<std::pair<ConjugacyClass, CentralizerRep>> irreducible_pairs(const DihedralGroup& G) {
  if (G.m() % 2) throw DomainError("irreducible_pairs: D_m with m even is required");
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

bool check_action_relations(const YDModule& M) {
  const int d = M.dim(), m = M.m();
  const CycloMatrix id = CycloMatrix::identity(m, d);
  CycloMatrix rm = id;
  for (int i = 0; i < m; ++i) rm = M.act_r() * rm;
  if (!(rm == id) || !(M.act_s() * M.act_s() == id)) return false;
  CycloMatrix r_inv = id;
  for (int i = 0; i < m - 1; ++i) r_inv = M.act_r() * r_inv;
  return M.act_s() * M.act_r() * M.act_s() == r_inv;
}

bool check_yd_compatibility(const YDModule& M) {
  DihedralGroup G(M.m());
  for (const auto& g : {G.r(), G.s()}) {
    const CycloMatrix& A = g.reflection ? M.act_s() : M.act_r();
    for (int v = 0; v < M.dim(); ++v) {
      const GroupElement want = G.conjugate(g, M.degree(v));
      for (int w = 0; w < M.dim(); ++w)
        if (!A.at(w, v).is_zero() && !(M.degree(w) == want)) return false;
    }
  }
  return true;
}

BraidingData braiding(const YDModule& M) {
  const int d = M.dim();
  BraidingData B;
  B.dim = d;
  B.terms.resize(static_cast<size_t>(d * d));
  std::map<GroupElement, CycloMatrix> cache;
  for (const auto& g : M.degrees())
    if (!cache.count(g)) cache.emplace(g, M.action(g));
  B.is_diagonal = true;
  for (int i = 0; i < d; ++i) {
    const CycloMatrix& A = cache.at(M.degree(i));
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        if (A.at(k, j).is_zero()) continue;
        B.terms[i * d + j].emplace_back(k, A.at(k, j));
        if (k != j) B.is_diagonal = false;
      }
  }
  if (B.is_diagonal) {
    const int m = M.m();
    B.Q.assign(d, std::vector<CycloNumber>(d, CycloNumber(m)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (const auto& [k, c] : B.terms[i * d + j]) B.Q[i][j] = c;
  }
  return B;
}

bool is_minus_flip(const BraidingData& B) {
  if (!B.is_diagonal) return false;
  for (const auto& row : B.Q)
    for (const auto& q : row) {
      auto e = q.root_exponent();
      if (!e || 2 * *e != q.modulus()) return false;
    }
  return true;
}

namespace {

using SparseVec = std::map<int, CycloNumber>;

void add_to(SparseVec& v, int key, const CycloNumber& c) {
  auto it = v.find(key);
  if (it == v.end()) {
    v.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

// position 0 acts on the first two tensor factors, position 1 on the last two
SparseVec apply_c(const BraidingData& B, const SparseVec& v, int position) {
  const int d = B.dim;
  SparseVec out;
  for (const auto& [idx, coef] : v) {
    int a = idx / (d * d), b = (idx / d) % d, c = idx % d;
    if (position == 0) {
      for (const auto& [k, q] : B.terms[a * d + b]) add_to(out, (k * d + a) * d + c, coef * q);
    } else {
      for (const auto& [k, q] : B.terms[b * d + c]) add_to(out, (a * d + k) * d + b, coef * q);
    }
  }
  return out;
}

}  // namespace

bool check_braid_equation(const BraidingData& B, int m) {
  const int d = B.dim;
  for (int idx = 0; idx < d * d * d; ++idx) {
    SparseVec v{{idx, CycloNumber(m, 1)}};
    SparseVec lhs = apply_c(B, apply_c(B, apply_c(B, v, 0), 1), 0);
    SparseVec rhs = apply_c(B, apply_c(B, apply_c(B, v, 1), 0), 1);
    if (lhs != rhs) return false;
  }
  return true;
}

DynkinDiagram dynkin_diagram(const BraidingData& B) {
  if (!B.is_diagonal) throw DomainError("dynkin_diagram: braiding is not diagonal");
  DynkinDiagram D;
  for (int i = 0; i < B.dim; ++i) D.vertices.push_back(B.Q[i][i]);
  for (int i = 0; i < B.dim; ++i)
    for (int j = i + 1; j < B.dim; ++j) {
      CycloNumber p = B.Q[i][j] * B.Q[j][i];
      if (!p.is_one()) D.edges.push_back({i, j, p});
    }
  return D;
}

std::string rule_name(NicholsCertificate::Rule r) {
  switch (r) {
    case NicholsCertificate::Rule::None:
      return "None";
    case NicholsCertificate::Rule::RealClassScalar:
      return "RealClassScalar";
    case NicholsCertificate::Rule::TypeD:
      return "TypeD";
    case NicholsCertificate::Rule::RomboDiagram:
      return "RomboDiagram";
  }
  return "?";
}

NicholsResult nichols_dimension(const YDModule& M, int threads) {
  const int m = M.m();
  if (m % 4 != 0 || m < 12) throw DomainError("nichols_dimension: needs D_m with m = 4t, t >= 3; got m = " + std::to_string(m));
  if (M.components().empty()) throw DomainError("nichols_dimension: module has no irreducible summands");
  DihedralGroup G(m);
  NicholsResult res;
  auto& cert = res.certificate;
  const auto& comps = M.components();

  for (size_t c = 0; c < comps.size(); ++c) {
    if (!comps[c].sigma.reflection) continue;
    auto w = find_type_D(G, class_of(G, comps[c].sigma), threads);
    if (!w) throw CheckFailure("reflection class without a type D witness");
    cert.rule = NicholsCertificate::Rule::TypeD;
    cert.component = static_cast<int>(c);
    cert.witness = *w;
    return res;
  }
  for (size_t c = 0; c < comps.size(); ++c) {
    const CycloMatrix A = M.action(comps[c].sigma);
    const CycloNumber q = A.at(comps[c].offset, comps[c].offset);
    const bool minus_one = (q + CycloNumber(m, 1)).is_zero();
    if (comps[c].sigma.is_identity() || !minus_one) {
      cert.rule = NicholsCertificate::Rule::RealClassScalar;
      cert.component = static_cast<int>(c);
      cert.scalar = q;
      return res;
    }
  }
  const BraidingData B = braiding(M);
  if (!B.is_diagonal) throw DomainError("nichols_dimension: non-diagonal braiding outside the supported family");
  const DynkinDiagram D = dynkin_diagram(B);
  if (!D.edges.empty()) {
    cert.rule = NicholsCertificate::Rule::RomboDiagram;
    cert.edge = std::make_pair(D.edges[0].i, D.edges[0].j);
    cert.edge_label = D.edges[0].label;
    for (size_t c = 0; c < comps.size(); ++c)
      if (comps[c].offset <= D.edges[0].j) cert.component = static_cast<int>(c);
    return res;
  }
  if (!is_minus_flip(B))
    throw DomainError("nichols_dimension: edgeless diagram without -flip braiding lies outside the supported family");
  res.finite = true;
  res.log2_dimension = M.dim();
  return res;
}

}  // namespace ndm
