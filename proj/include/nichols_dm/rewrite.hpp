#pragma once

// Rewriting systems for the quadratic presentations: compilation, completion with
// overlap checks, normal-word counting, and Hopf-structure checks.
//
// Alphabet: skew-primitive letters 0..N-1 (the presentation's generators), then one
// letter per non-identity group element, N + index(g) - 1. Words compare by length,
// then lexicographically, so group letters drift to the right.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nichols_dm/lifting.hpp"

namespace ndm {

using Word = std::vector<int>;

struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

using Poly = std::map<Word, CycloNumber, DegLex>;

struct Rule {
  Word lhs;
  Poly rhs;  // every word strictly below lhs
};

struct CompletionOptions {
  /// Overlaps examined before CompletionBudgetExceeded; 0 means unbounded.
  std::size_t overlap_budget = 0;
  int threads = 1;
};

struct ConfluenceCertificate {
  std::size_t initial_rules = 0;
  std::size_t rules = 0;
  std::size_t rules_added = 0;
  std::size_t overlaps_checked = 0;
  int passes = 0;
  bool confluent = false;
};

enum class ReductionStrategy { Leftmost, Rightmost };

class RewriteSystem {
 public:
  int m() const noexcept { return m_; }
  int skew_count() const noexcept { return skew_; }
  int letter_count() const noexcept { return skew_ + 2 * m_ - 1; }

  /// Letter of a group element; nullopt for the identity.
  std::optional<int> group_letter(const GroupElement& g) const;
  /// Word of a group element (empty for the identity).
  Word group_word(const GroupElement& g) const;
  bool is_group_letter(int l) const noexcept { return l >= skew_; }
  GroupElement letter_element(int l) const;

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const ConfluenceCertificate& certificate() const noexcept { return cert_; }
  const std::vector<std::string>& letter_names() const noexcept { return names_; }
  /// Degree of a skew letter: Delta(u) = u (x) 1 + H_deg (x) u.
  const GroupElement& skew_degree(int l) const { return skew_degree_[static_cast<size_t>(l)]; }

  Poly reduce(const Poly& p, ReductionStrategy s = ReductionStrategy::Leftmost) const;
  Poly reduce(const Word& w, ReductionStrategy s = ReductionStrategy::Leftmost) const;
  bool is_irreducible(const Word& w) const;

  std::string word_string(const Word& w) const;
  std::string poly_string(const Poly& p) const;

 private:
  friend RewriteSystem compile(const Presentation& P, const CompletionOptions& opts);
  friend class Completer;

  void add_rule(Rule r);
  void remove_rule(std::size_t i);
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w, ReductionStrategy s) const;

  struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
      std::size_t h = w.size();
      for (int l : w) h = h * 1000003u ^ static_cast<std::size_t>(l + 7);
      return h;
    }
  };

  int m_ = 0;
  int skew_ = 0;
  std::vector<std::string> names_;
  std::vector<GroupElement> skew_degree_;
  std::vector<Rule> rules_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::map<std::size_t, int> lhs_lengths_;  // length -> number of rules
  ConfluenceCertificate cert_;
};

/// Orients every relation by the term order and completes. Throws
/// CompletionBudgetExceeded (naming the first unresolved overlap) when the budget runs out.
RewriteSystem compile(const Presentation& P, const CompletionOptions& opts = {});

struct NormalBasis {
  std::vector<Word> words;  // deg-lex order
  std::size_t dimension() const noexcept { return words.size(); }
};

/// Irreducible words; CheckFailure when more than max_words exist or some word is
/// longer than max_length (the quotient is then not certified finite).
NormalBasis normal_basis(const RewriteSystem& R, std::size_t max_words = 1000000, std::size_t max_length = 256);

struct DimensionResult {
  std::size_t dimension = 0;
  ConfluenceCertificate certificate;
};

DimensionResult dimension(const RewriteSystem& R);

/// Presentation relation as an element of the free algebra on R's alphabet.
Poly relation_poly(const Presentation& P, const RewriteSystem& R, const Relation& rel);

struct HopfReport {
  bool delta_ok = true;
  bool counit_ok = true;
  bool antipode_ok = true;
  std::vector<std::string> failures;  // relation and nonzero residue
  bool ok() const noexcept { return delta_ok && counit_ok && antipode_ok; }
};

HopfReport hopf_check(const Presentation& P, const RewriteSystem& R);

struct SkewPrimitiveReport {
  GroupElement degree;
  /// Solutions of Delta(u) = u (x) 1 + H_degree (x) u over normal words of length <= 2.
  std::vector<Poly> basis;
  /// dim of the solution space modulo the trivial element 1 - H_degree.
  std::size_t nontrivial_dimension = 0;
};

SkewPrimitiveReport skew_primitives(const RewriteSystem& R, const GroupElement& degree);

}  // namespace ndm
