#pragma once

// Finite racks, rack isomorphism, and the type-D criterion for classes of
// finite groups.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols_dm/dihedral.hpp"

namespace ndm {

/// A finite group given by its Cayley table; element 0 is the identity.
class FiniteGroup {
 public:
  /// table[a * order + b] = index of a*b. Validated (identity at 0, Latin square, associativity).
  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names = {});

  static FiniteGroup from_dihedral(const DihedralGroup& G);
  /// Closure of the given permutations of {0..degree-1}; elements are numbered in discovery
  /// order starting with the identity.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators);

  int order() const noexcept { return order_; }
  int multiply(int a, int b) const { return table_[static_cast<size_t>(a * order_ + b)]; }
  int inverse(int a) const { return inverse_[static_cast<size_t>(a)]; }
  int conjugate(int g, int x) const { return multiply(multiply(g, x), inverse(g)); }
  const std::string& name(int a) const { return names_[static_cast<size_t>(a)]; }

  /// Sorted element indices of the subgroup generated by gens.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
  std::vector<int> conjugacy_class(int x) const;

 private:
  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
};

struct TypeDWitness {
  int r;  // element indices in the ambient group
  int s;
};

/// Searches pairs (r, s) of the conjugation-stable subset with (rs)^2 != (sr)^2 and
/// r, s not conjugate in <r, s>. Returns the first witness in lexicographic order of the
/// subset as given. threads <= 1 runs sequentially; the answer does not depend on threads.
std::optional<TypeDWitness> find_type_D(const FiniteGroup& G, const std::vector<int>& subset, int threads = 1);

/// Convenience overload on a dihedral class; witness elements are dihedral elements.
std::optional<std::pair<GroupElement, GroupElement>> find_type_D(const DihedralGroup& G, const ConjugacyClass& cls,
                                                                  int threads = 1);

/// Re-checks a witness independently of the search.
bool verify_type_D_witness(const FiniteGroup& G, int r, int s);

class Rack {
 public:
  /// table[i * size + j] = i |> j. Throws DomainError unless both rack axioms hold.
  Rack(int size, std::vector<int> table, std::vector<std::string> labels = {});

  int size() const noexcept { return size_; }
  int op(int i, int j) const { return table_[static_cast<size_t>(i * size_ + j)]; }
  const std::vector<int>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool is_quandle() const;
  /// Cycle type (sorted cycle lengths) of the left translation i |> -.
  std::vector<int> translation_cycle_type(int i) const;

 private:
  int size_;
  std::vector<int> table_;
  std::vector<std::string> labels_;
};

Rack conjugation_rack(const DihedralGroup& G, const ConjugacyClass& cls);
Rack conjugation_rack(const FiniteGroup& G, const std::vector<int>& subset);
/// Z/n with i |> j = 2i - j.
Rack dihedral_rack(int n);
/// A = Z/orders[0] x ... with g(x)_i = sum_j matrix[i][j] x_j; x |> y = g(y) + x - g(x).
/// Throws DomainError unless g is a well-defined automorphism.
Rack affine_rack(const std::vector<int>& orders, const std::vector<std::vector<int>>& matrix);
/// Element coordinates used by affine_rack: index = x_0 + orders[0] * (x_1 + orders[1] * ...).
std::vector<int> affine_coordinates(const std::vector<int>& orders, int index);

/// A bijection f with f(i |> j) = f(i) |> f(j), if one exists.
std::optional<std::vector<int>> rack_isomorphism(const Rack& a, const Rack& b);

/// Rack-theoretic type D: r, s lie in different orbits of the inner group of the subrack
/// they generate, and r |> (s |> (r |> s)) != s. First witness in index order.
std::optional<std::pair<int, int>> rack_type_D(const Rack& X);

}  // namespace ndm
