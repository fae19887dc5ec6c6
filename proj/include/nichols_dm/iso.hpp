#pragma once

// The action of (Z/m)^x on families and lifting data, isomorphism tests between
// the A and B presentations, and orbit decomposition over parameter grids.

#include <optional>
#include <vector>

#include "nichols_dm/lifting.hpp"

namespace ndm {

class UnitModM {
 public:
  /// Throws DomainError unless gcd(l, m) = 1.
  UnitModM(int l, int m);
  int value() const noexcept { return l_; }
  int inverse() const noexcept { return inv_; }
  int modulus() const noexcept { return m_; }

 private:
  int l_, inv_, m_;
};

std::vector<UnitModM> units(int m);

/// l.(i,k): h -> h^l sends x_{i,k} to x_{li, l^-1 k} when li mod m < n and to
/// y_{m-li, -l^-1 k} otherwise. Throws DomainError outside J.
PairIK act_pair(const UnitModM& l, const PairIK& p);
/// Whether the image of x_{i,k} is a y-generator.
bool pair_flipped(const UnitModM& l, const PairIK& p);
/// l.r = l^-1 r, or m - l^-1 r when that is at least n.
int act_ell(const UnitModM& l, int r);
bool ell_flipped(const UnitModM& l, int r);

FamilyI act_family(const UnitModM& l, const FamilyI& I);
FamilyL act_family(const UnitModM& l, const FamilyL& L);

struct Lifting {
  FamilyI I;
  FamilyL L;
  LiftingDatum datum;
};

struct IsoWitness {
  int ell = 1;
  std::vector<int> perm_I;  // slot a of the source goes to slot perm_I[a] of the target
  std::vector<int> perm_L;
  /// Set when the search allowed rescaling x_a -> c_a x'_{pi a}.
  bool rescaled = false;
};

/// Datum of the image of src under the isomorphism phi_l with slot bijections perm.
LiftingDatum transport_datum(int m, const UnitModM& l, const Lifting& src, const std::vector<int>& perm_I,
                             const std::vector<int>& perm_L, const FamilyI& target_I, const FamilyL& target_L);

/// Searches all units and slot bijections. With rescale, generators may also be
/// scaled (x_a -> c_a x'), which identifies data up to the induced torus action.
std::optional<IsoWitness> find_isomorphism(int m, const Lifting& a, const Lifting& b, bool rescale = false);
std::optional<IsoWitness> is_isomorphic_A(int m, const FamilyI& I, const LiftingDatum& d, const FamilyI& I2,
                                          const LiftingDatum& d2, bool rescale = false);
std::optional<IsoWitness> is_isomorphic_B(int m, const FamilyI& I, const FamilyL& L, const LiftingDatum& d,
                                          const FamilyI& I2, const FamilyL& L2, const LiftingDatum& d2,
                                          bool rescale = false);

struct IsoClass {
  char family = 'a';
  Lifting representative;
  std::vector<Lifting> members;  // representative first
  std::vector<int> witness_units;  // unit taking the representative to each member
};

/// Orbits of (family, grid point) under the unit action, for the catalogue families
/// with |I| + |L| <= r_max. Each free parameter ranges over grid (default {0, 1}).
std::vector<IsoClass> iso_classes(int m, int r_max, const std::vector<CycloNumber>& grid = {}, bool rescale = false,
                                  bool set_only = false);

}  // namespace ndm
