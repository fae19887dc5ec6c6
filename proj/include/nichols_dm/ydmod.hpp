#pragma once

// Yetter-Drinfeld modules over D_m induced from centralizer representations,
// their braidings, and the finite-dimensionality decision for Nichols algebras.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols_dm/dihedral.hpp"

namespace ndm {

/// One irreducible summand M(O, rho) inside a YDModule.
struct YDComponent {
  std::string class_label;
  GroupElement sigma;
  CentralizerRep rep;
  std::vector<GroupElement> coset_reps;  // g_i with g_i sigma g_i^-1 = sigma_i
  int offset = 0;
  int dim = 0;
};

class YDModule {
 public:
  YDModule(int m, std::vector<GroupElement> degree, CycloMatrix act_r, CycloMatrix act_s,
           std::vector<YDComponent> components, std::vector<std::string> labels);

  int m() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(degree_.size()); }
  const std::vector<GroupElement>& degrees() const noexcept { return degree_; }
  const GroupElement& degree(int i) const { return degree_[static_cast<size_t>(i)]; }
  const std::vector<YDComponent>& components() const noexcept { return components_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const CycloMatrix& act_r() const noexcept { return act_r_; }
  const CycloMatrix& act_s() const noexcept { return act_s_; }

  /// Matrix of s^e r^b, columns are images of basis vectors.
  CycloMatrix action(const GroupElement& g) const;

 private:
  int m_;
  std::vector<GroupElement> degree_;
  CycloMatrix act_r_;
  CycloMatrix act_s_;
  std::vector<YDComponent> components_;
  std::vector<std::string> labels_;
};

/// M(O, rho). Throws DomainError when rho is not a representation of C(sigma).
YDModule induce(const DihedralGroup& G, const ConjugacyClass& cls, const CentralizerRep& rep);
YDModule direct_sum(const std::vector<YDModule>& parts);

/// Every (class, irreducible centralizer representation) pair of D_m, m even, in
/// canonical class order; cyclic characters run over 0 <= k < m.
std::vector<std::pair<ConjugacyClass, CentralizerRep>> irreducible_pairs(const DihedralGroup& G);

/// r^m = 1, s^2 = 1, s r s = r^-1 on the action matrices.
bool check_action_relations(const YDModule& M);
/// deg(g.v) = g deg(v) g^-1 for g in {r, s} and every basis vector.
bool check_yd_compatibility(const YDModule& M);

struct BraidingData {
  int dim = 0;
  /// terms[i * dim + j]: c(e_i (x) e_j) = sum coef * e_k (x) e_i over (k, coef).
  std::vector<std::vector<std::pair<int, CycloNumber>>> terms;
  bool is_diagonal = false;
  /// q_ij when diagonal: c(e_i (x) e_j) = q_ij e_j (x) e_i.
  std::vector<std::vector<CycloNumber>> Q;
};

BraidingData braiding(const YDModule& M);
bool is_minus_flip(const BraidingData& B);
/// Exact check of c1 c2 c1 = c2 c1 c2 on M (x) M (x) M.
bool check_braid_equation(const BraidingData& B, int m);

struct DynkinDiagram {
  struct Edge {
    int i;
    int j;
    CycloNumber label;  // q_ij q_ji
  };
  std::vector<CycloNumber> vertices;
  std::vector<Edge> edges;
};

/// Throws DomainError when the braiding is not diagonal.
DynkinDiagram dynkin_diagram(const BraidingData& B);

struct NicholsCertificate {
  enum class Rule { None, RealClassScalar, TypeD, RomboDiagram };
  Rule rule = Rule::None;
  int component = -1;                                            // offending summand
  std::optional<CycloNumber> scalar;                             // q_{sigma sigma}
  std::optional<std::pair<GroupElement, GroupElement>> witness;  // type D pair
  std::optional<std::pair<int, int>> edge;                       // basis indices
  std::optional<CycloNumber> edge_label;
};

std::string rule_name(NicholsCertificate::Rule r);

struct NicholsResult {
  bool finite = false;
  /// dim B(M) = 2^log2_dimension when finite.
  int log2_dimension = 0;
  NicholsCertificate certificate;
};

/// Decides dim B(M) for a direct sum of irreducibles over D_m, m = 4t >= 12.
NicholsResult nichols_dimension(const YDModule& M, int threads = 1);

}  // namespace ndm
