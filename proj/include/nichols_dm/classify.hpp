#pragma once

// The combinatorics behind the classification of finite-dimensional Nichols
// algebras over D_m, m = 4t >= 12: the set J, the sets N_i, the equivalence on J,
// the families I, L, K and their labelled modules.

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nichols_dm/ydmod.hpp"

namespace ndm {

/// Throws DomainError unless m = 4t with t >= 3.
void require_classification_order(int m);

struct PairIK {
  int i = 0;
  int k = 0;
  friend auto operator<=>(const PairIK&, const PairIK&) = default;
};

std::string pair_name(const PairIK& p);  // "(i,k)"

/// Multisets, kept sorted.
struct FamilyI {
  std::vector<PairIK> pairs;
  friend auto operator<=>(const FamilyI&, const FamilyI&) = default;
};
struct FamilyL {
  std::vector<int> ells;
  friend auto operator<=>(const FamilyL&, const FamilyL&) = default;
};
struct FamilyK {
  FamilyI I;
  FamilyL L;
  friend auto operator<=>(const FamilyK&, const FamilyK&) = default;
};

bool in_J(int m, const PairIK& p);
std::vector<PairIK> support_J(int m);
/// {k : ik = n mod m}, 0 <= k < m.
std::vector<int> N_i(int m, int i);
/// i q + p k = 0 mod m. Throws DomainError unless both pairs lie in J.
bool are_equivalent(const PairIK& a, const PairIK& b, int m);

/// Sort in place and check the family invariants (DomainError on violation).
FamilyI make_family_I(int m, std::vector<PairIK> pairs);
FamilyL make_family_L(int m, std::vector<int> ells);
FamilyK make_family_K(int m, FamilyI I, FamilyL L);

/// Enumerations bounded by r_max (total size for K, both parts nonempty), ordered by
/// size and then lexicographically. The visitor returns false to stop early.
void enumerate_I(int m, int r_max, const std::function<bool(const FamilyI&)>& visit, bool set_only = false);
void enumerate_L(int m, int r_max, const std::function<bool(const FamilyL&)>& visit, bool set_only = false);
void enumerate_K(int m, int r_max, const std::function<bool(const FamilyK&)>& visit, bool set_only = false);
std::vector<FamilyI> enumerate_I(int m, int r_max, bool set_only = false);
std::vector<FamilyL> enumerate_L(int m, int r_max, bool set_only = false);
std::vector<FamilyK> enumerate_K(int m, int r_max, bool set_only = false);

/// A YDModule together with the generator names a_{i,k}, b_{i,k}, c_l, d_l (one per
/// basis vector; repeated summands get a "#2", "#3" suffix).
struct LabeledModule {
  YDModule module;
  std::vector<std::string> names;
};

LabeledModule build_M_I(int m, const FamilyI& I);
LabeledModule build_M_L(int m, const FamilyL& L);
LabeledModule build_M_IL(int m, const FamilyI& I, const FamilyL& L);

struct IrreducibleVerdict {
  std::string class_label;
  std::string rep;
  int dim = 0;
  NicholsResult result;
};

struct FamilyEntry {
  std::string kind;  // "I", "L", "K"
  FamilyI I;
  FamilyL L;
  int log2_dimension = 0;
};

struct ClassificationReport {
  int m = 0;
  int r_max = 0;
  bool set_only = false;
  std::vector<PairIK> J;
  std::map<int, std::vector<int>> N;
  std::vector<int> odd_ells;
  std::vector<FamilyEntry> families;
  std::vector<IrreducibleVerdict> irreducibles;
};

/// Families up to r_max with Nichols dimensions (each recomputed through
/// nichols_dimension, so disagreement raises CheckFailure) and the verdict for every
/// irreducible Yetter-Drinfeld module.
ClassificationReport classification_report(int m, int r_max, bool set_only = false, int threads = 1);

}  // namespace ndm
