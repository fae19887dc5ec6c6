#pragma once

// Lifting data and the quadratic presentations A_I(lambda, gamma) and
// B_{I,L}(lambda, gamma, theta, mu) of pointed Hopf algebras over D_m.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols_dm/classify.hpp"

namespace ndm {

/// Parameters are indexed by slot: position in the sorted family, so repeated
/// pairs in a multiset get independent entries. lambda and gamma are keyed by
/// (a, b) with a, b slots of I; theta and mu by (a, c) with c a slot of L.
enum class ParamKind { Lambda, Gamma, Theta, Mu };

std::string param_kind_name(ParamKind k);  // "lambda", "gamma", "theta", "mu"
ParamKind parse_param_kind(const std::string& s);

struct ParamSlot {
  ParamKind kind;
  int a = 0;
  int b = 0;
  friend auto operator<=>(const ParamSlot&, const ParamSlot&) = default;
};

std::string slot_name(const ParamSlot& s);  // "lambda[0,1]"

struct LiftingDatum {
  std::map<ParamSlot, CycloNumber> values;  // zero entries are omitted

  CycloNumber get(int m, const ParamSlot& s) const;
};

/// Which entries are free, forced to zero by the delta guards, and identified by
/// the symmetry lambda_{a,b} = lambda_{b,a}, gamma_{a,b} = gamma_{b,a}.
struct ParameterShape {
  std::vector<ParamSlot> free;            // canonical representatives, a <= b for lambda/gamma
  std::vector<ParamSlot> forced_zero;
  std::vector<std::pair<ParamSlot, ParamSlot>> identified;  // (a,b) ~ (b,a), a < b
};

ParameterShape parameter_shape(int m, const FamilyI& I, const FamilyL& L);
bool guard_active(int m, const FamilyI& I, const FamilyL& L, const ParamSlot& s);

/// Symmetrize onto canonical slots and drop zeros. DomainError on out-of-range
/// slots, asymmetric lambda/gamma pairs, or nonzero entries with an inactive guard.
LiftingDatum normalize_datum(int m, const FamilyI& I, const FamilyL& L, const LiftingDatum& d);
/// Every free entry set to value.
LiftingDatum uniform_datum(int m, const FamilyI& I, const FamilyL& L, const CycloNumber& value);

/// Group-algebra element as sum of coef * element.
using GroupCombo = std::vector<std::pair<GroupElement, CycloNumber>>;

/// Letters of formal words: kLetterG, kLetterH, or a skew-primitive index >= 0.
inline constexpr int kLetterG = -1;
inline constexpr int kLetterH = -2;

struct Term {
  CycloNumber coef;
  std::vector<int> word;
  bool operator==(const Term&) const = default;
};

struct Generator {
  std::string name;        // x_{p,q}, y_{p,q}, z_l, w_l
  char kind = 'x';         // 'x', 'y', 'z', 'w'
  int slot = 0;            // slot of I for x/y, of L for z/w
  GroupElement grouplike;  // Delta(v) = v (x) 1 + grouplike (x) v
  int h_exp = 0;           // h v h^-1 = w^h_exp v
  int partner = 0;         // g v g^-1 = partner
};

struct Relation {
  std::string family;  // "group", "conj", "xx", "yy", "xy", "zz", "ww", "zw", "xz", "yw", "xw", "yz"
  std::vector<Term> lhs;
  GroupCombo rhs;
  std::optional<ParamSlot> parameter;
  bool operator==(const Relation&) const = default;
};

struct Presentation {
  int m = 0;
  FamilyI I;
  FamilyL L;
  LiftingDatum datum;
  std::vector<Generator> generators;
  std::vector<Relation> relations;
};

std::string word_string(const Presentation& P, const std::vector<int>& word);
std::string relation_string(const Presentation& P, const Relation& r);

/// A_I(lambda, gamma): I in the family set, lambda/gamma valid.
Presentation presentation_A(int m, const FamilyI& I, const LiftingDatum& datum);
/// B_{I,L}(lambda, gamma, theta, mu): (I, L) in K.
Presentation presentation_B(int m, const FamilyI& I, const FamilyL& L, const LiftingDatum& datum);
/// B(M) # kD_m for M = M_{(i,k)} with k != n, or M = M_L.
Presentation bosonization(int m, const LabeledModule& M);

/// Conjugating a quadratic relation by g or h gives a listed relation up to scalar.
bool check_conjugation_closure(const Presentation& P);
/// The counit kills every relation.
bool check_counit(const Presentation& P);
/// Relations in a canonical order, for syntactic comparison.
std::vector<Relation> canonical_relations(const Presentation& P);

struct FamilyDescriptor {
  char family = 'a';  // classification items a, b, c, d
  FamilyI I;
  FamilyL L;
  ParameterShape shape;
};

std::vector<FamilyDescriptor> lifting_catalogue(int m, int r_max, bool set_only = false);

}  // namespace ndm
