#include "nichols_dm/dihedral.hpp"

#include <algorithm>
#include <set>

#include "nichols_dm/errors.hpp"

namespace ndm {

namespace {

int mod(long long a, int m) {
  long long r = a % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

}  // namespace

// --------------------------------------------------------------- CycloMatrix

CycloMatrix::CycloMatrix(int m, int size) : m_(m), size_(size) {
  data_.assign(static_cast<size_t>(size * size), CycloNumber(m));
}

CycloMatrix CycloMatrix::identity(int m, int size) {
  CycloMatrix id(m, size);
  for (int i = 0; i < size; ++i) id.at(i, i) = CycloNumber(m, 1);
  return id;
}

bool CycloMatrix::is_diagonal() const {
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

bool CycloMatrix::is_scalar() const {
  if (!is_diagonal()) return false;
  for (int i = 1; i < size_; ++i)
    if (!(at(i, i) == at(0, 0))) return false;
  return true;
}

CycloNumber CycloMatrix::trace() const {
  CycloNumber t(m_);
  for (int i = 0; i < size_; ++i) t += at(i, i);
  return t;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.size_ != b.size_ || a.m_ != b.m_) throw DomainError("CycloMatrix: shape mismatch");
  CycloMatrix c(a.m_, a.size_);
  for (int i = 0; i < a.size_; ++i)
    for (int k = 0; k < a.size_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.size_; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

// ------------------------------------------------------------- DihedralGroup

DihedralGroup::DihedralGroup(int m) : m_(m) {
  if (m < 1) throw DomainError("dihedral group needs m >= 1, got " + std::to_string(m));
}

GroupElement DihedralGroup::r(long long power) const { return {0, mod(power, m_)}; }

GroupElement DihedralGroup::element(int reflection, long long rotation) const {
  if (reflection != 0 && reflection != 1) throw DomainError("reflection bit must be 0 or 1");
  return {reflection, mod(rotation, m_)};
}

GroupElement DihedralGroup::from_index(int index) const {
  if (index < 0 || index >= 2 * m_) throw DomainError("group element index out of range");
  return {index / m_, index % m_};
}

GroupElement DihedralGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  // s^e1 r^b1 s^e2 r^b2, with r^b s = s r^-b
  if (b.reflection == 0) return {a.reflection, mod(static_cast<long long>(a.rotation) + b.rotation, m_)};
  return {a.reflection ^ 1, mod(static_cast<long long>(b.rotation) - a.rotation, m_)};
}

GroupElement DihedralGroup::inverse(const GroupElement& a) const {
  if (a.reflection == 1) return a;
  return {0, mod(-static_cast<long long>(a.rotation), m_)};
}

GroupElement DihedralGroup::conjugate(const GroupElement& g, const GroupElement& x) const {
  return multiply(multiply(g, x), inverse(g));
}

GroupElement DihedralGroup::power(const GroupElement& a, long long e) const {
  if (a.reflection == 1) return (mod(e, 2) == 0) ? identity() : a;
  return {0, mod(static_cast<long long>(a.rotation) * mod(e, m_), m_)};
}

int DihedralGroup::element_order(const GroupElement& a) const {
  if (a.reflection == 1) return 2;
  int k = 1;
  GroupElement p = a;
  while (!p.is_identity()) {
    p = multiply(p, a);
    ++k;
  }
  return k;
}

std::vector<GroupElement> DihedralGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(2 * m_);
  for (int i = 0; i < 2 * m_; ++i) out.push_back(from_index(i));
  return out;
}

std::string DihedralGroup::name(const GroupElement& a) const {
  std::string rot = a.rotation == 0 ? "" : (a.rotation == 1 ? "r" : "r^" + std::to_string(a.rotation));
  if (a.reflection == 0) return rot.empty() ? "1" : rot;
  return rot.empty() ? "s" : "s " + rot;
}

std::string DihedralGroup::gh_name(const GroupElement& a) const {
  std::string rot = a.rotation == 0 ? "" : (a.rotation == 1 ? "h" : "h^" + std::to_string(a.rotation));
  if (a.reflection == 0) return rot.empty() ? "1" : rot;
  return rot.empty() ? "g" : "g " + rot;
}

// ------------------------------------------------------------------ classes

std::vector<ConjugacyClass> conjugacy_classes(const DihedralGroup& G) {
  const int m = G.m();
  std::vector<ConjugacyClass> out;
  out.push_back({G.identity(), {G.identity()}, "e"});
  for (int i = 1; 2 * i <= m; ++i) {
    ConjugacyClass c{G.r(i), {}, "r" + std::to_string(i)};
    c.elements.push_back(G.r(i));
    if (2 * i != m) c.elements.push_back(G.r(m - i));
    out.push_back(std::move(c));
  }
  if (m % 2 == 1) {
    ConjugacyClass c{G.s(), {}, "s"};
    for (int b = 0; b < m; ++b) c.elements.push_back({1, b});
    out.push_back(std::move(c));
    return out;
  }
  ConjugacyClass even{G.s(), {}, "s"}, odd{G.element(1, 1), {}, "sr"};
  for (int b = 0; b < m; ++b) (b % 2 == 0 ? even : odd).elements.push_back({1, b});
  out.push_back(std::move(even));
  out.push_back(std::move(odd));
  return out;
}

ConjugacyClass class_of(const DihedralGroup& G, const GroupElement& x) {
  for (auto& c : conjugacy_classes(G))
    if (std::find(c.elements.begin(), c.elements.end(), x) != c.elements.end()) return c;
  throw CheckFailure("element lies in no conjugacy class");
}

std::vector<GroupElement> centralizer(const DihedralGroup& G, const GroupElement& x) {
  std::vector<GroupElement> out;
  for (const auto& g : G.elements())
    if (G.multiply(g, x) == G.multiply(x, g)) out.push_back(g);
  return out;
}

// ------------------------------------------------------------------- irreps

std::string Irrep::name() const {
  return (kind == Kind::Linear ? "chi" : "rho") + std::to_string(index);
}

std::vector<Irrep> irreps(const DihedralGroup& G) {
  std::vector<Irrep> out;
  const int m = G.m();
  const int linear = m % 2 == 0 ? 4 : 2;
  for (int i = 1; i <= linear; ++i) out.push_back({Irrep::Kind::Linear, i});
  const int top = m % 2 == 0 ? m / 2 - 1 : (m - 1) / 2;
  for (int l = 1; l <= top; ++l) out.push_back({Irrep::Kind::TwoDim, l});
  return out;
}

CycloMatrix evaluate(const DihedralGroup& G, const Irrep& rho, const GroupElement& a) {
  const int m = G.m();
  if (rho.kind == Irrep::Kind::Linear) {
    if (rho.index < 1 || rho.index > (m % 2 == 0 ? 4 : 2)) throw DomainError("no such linear character");
    // chi2: s -> -1; chi3: r -> -1; chi4: both
    int sign = 1;
    if ((rho.index == 2 || rho.index == 4) && a.reflection == 1) sign = -sign;
    if ((rho.index == 3 || rho.index == 4) && a.rotation % 2 == 1) sign = -sign;
    CycloMatrix v(m, 1);
    v.at(0, 0) = CycloNumber(m, sign);
    return v;
  }
  const int top = m % 2 == 0 ? m / 2 - 1 : (m - 1) / 2;
  if (rho.index < 1 || rho.index > top) throw DomainError("rho_l needs 1 <= l <= " + std::to_string(top));
  // rho(s^a r^b) = S^a diag(w^lb, w^-lb)
  const long long e = static_cast<long long>(rho.index) * a.rotation;
  CycloMatrix v(m, 2);
  if (a.reflection == 0) {
    v.at(0, 0) = CycloNumber::root(m, e);
    v.at(1, 1) = CycloNumber::root(m, -e);
  } else {
    v.at(0, 1) = CycloNumber::root(m, -e);
    v.at(1, 0) = CycloNumber::root(m, e);
  }
  return v;
}

CycloNumber character(const DihedralGroup& G, const Irrep& rho, const GroupElement& a) {
  return evaluate(G, rho, a).trace();
}

std::string rep_name(const CentralizerRep& rep) {
  if (auto* ir = std::get_if<Irrep>(&rep)) return ir->name();
  if (auto* c = std::get_if<CyclicCharacter>(&rep)) return "k" + std::to_string(c->k);
  const auto& k = std::get<KleinCharacter>(rep);
  std::string s;
  s += k.on_sigma == 1 ? 'e' : 's';
  s += k.on_center == 1 ? 'e' : 's';
  return s;
}

}  // namespace ndm
