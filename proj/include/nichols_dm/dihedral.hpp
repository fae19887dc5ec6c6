#pragma once

// The dihedral group D_m = <s, r | s^2 = r^m = 1, srs = r^-1> of order 2m,
// its conjugacy classes, centralizers and irreducible representations.

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "nichols_dm/cyclo.hpp"

namespace ndm {

/// s^reflection r^rotation, always reduced (0 <= rotation < m).
struct GroupElement {
  int reflection = 0;
  int rotation = 0;

  /// Canonical index: reflection * m + rotation.
  int index(int m) const noexcept { return reflection * m + rotation; }
  bool is_identity() const noexcept { return reflection == 0 && rotation == 0; }

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Square matrix over Q(w_m), row-major.
class CycloMatrix {
 public:
  CycloMatrix(int m, int size);
  static CycloMatrix identity(int m, int size);

  int size() const noexcept { return size_; }
  int modulus() const noexcept { return m_; }
  CycloNumber& at(int row, int col) { return data_[static_cast<size_t>(row * size_ + col)]; }
  const CycloNumber& at(int row, int col) const { return data_[static_cast<size_t>(row * size_ + col)]; }

  bool is_scalar() const;
  bool is_diagonal() const;
  CycloNumber trace() const;

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b) = default;

 private:
  int m_;
  int size_;
  std::vector<CycloNumber> data_;
};

class DihedralGroup {
 public:
  /// Any m >= 1 for the group itself; classification code asks for m = 4t, t >= 3.
  explicit DihedralGroup(int m);

  int m() const noexcept { return m_; }
  int order() const noexcept { return 2 * m_; }
  /// m / 2; only meaningful for even m.
  int n() const noexcept { return m_ / 2; }
  bool is_classification_order() const noexcept { return m_ % 4 == 0 && m_ >= 12; }

  GroupElement identity() const noexcept { return {0, 0}; }
  GroupElement r(long long power = 1) const;
  GroupElement s() const noexcept { return {1, 0}; }
  GroupElement element(int reflection, long long rotation) const;
  GroupElement from_index(int index) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement conjugate(const GroupElement& g, const GroupElement& x) const;  // g x g^-1
  GroupElement power(const GroupElement& a, long long e) const;
  int element_order(const GroupElement& a) const;

  /// All 2m elements in canonical index order.
  std::vector<GroupElement> elements() const;

  /// "1", "r^3", "s", "s r^5"
  std::string name(const GroupElement& a) const;
  /// Naming in g = s, h = r: "1", "h^3", "g", "g h^5"
  std::string gh_name(const GroupElement& a) const;

 private:
  int m_;
};

struct ConjugacyClass {
  GroupElement representative;
  std::vector<GroupElement> elements;  // canonical order
  std::string label;                   // "e", "r^i", "s", "sr"
};

/// Classes in canonical order e, r^1..r^{floor(m/2)}, s, then sr when m is even.
std::vector<ConjugacyClass> conjugacy_classes(const DihedralGroup& G);
ConjugacyClass class_of(const DihedralGroup& G, const GroupElement& x);
std::vector<GroupElement> centralizer(const DihedralGroup& G, const GroupElement& x);

struct Irrep {
  enum class Kind { Linear, TwoDim };
  Kind kind = Kind::Linear;
  /// 1..4 for linear characters (1..2 when m is odd), l for rho_l.
  int index = 1;

  int degree() const noexcept { return kind == Kind::Linear ? 1 : 2; }
  std::string name() const;
  friend auto operator<=>(const Irrep&, const Irrep&) = default;
};

/// chi_1..chi_4 followed by rho_1..rho_{n-1} for even m.
std::vector<Irrep> irreps(const DihedralGroup& G);
CycloMatrix evaluate(const DihedralGroup& G, const Irrep& rho, const GroupElement& a);
CycloNumber character(const DihedralGroup& G, const Irrep& rho, const GroupElement& a);

/// Character of C(r^i) = <r>: r -> w^k.
struct CyclicCharacter {
  int k = 0;
  friend auto operator<=>(const CyclicCharacter&, const CyclicCharacter&) = default;
};

/// Character of C(sigma) = {e, sigma, r^n, sigma r^n} for a reflection sigma;
/// each field is +1 or -1.
struct KleinCharacter {
  int on_sigma = 1;
  int on_center = 1;
  friend auto operator<=>(const KleinCharacter&, const KleinCharacter&) = default;
};

using CentralizerRep = std::variant<Irrep, CyclicCharacter, KleinCharacter>;

std::string rep_name(const CentralizerRep& rep);

}  // namespace ndm
