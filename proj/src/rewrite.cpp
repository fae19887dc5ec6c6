#include "nichols_dm/rewrite.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "nichols_dm/errors.hpp"
#include "parallel.hpp"

namespace ndm {

namespace {

void add_to(Poly& p, const Word& w, const CycloNumber& c) {
  if (c.is_zero()) return;
  auto it = p.find(w);
  if (it == p.end()) {
    p.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// a * p * b
Poly sandwich(const Word& a, const Poly& p, const Word& b) {
  Poly out;
  for (const auto& [w, c] : p) out.emplace(concat(concat(a, w), b), c);
  return out;
}

void add_poly(Poly& acc, const Poly& p, const CycloNumber& scale) {
  for (const auto& [w, c] : p) add_to(acc, w, c * scale);
}

}  // namespace

// ------------------------------------------------------------ system basics

std::optional<int> RewriteSystem::group_letter(const GroupElement& g) const {
  const int idx = g.index(m_);
  if (idx == 0) return std::nullopt;
  return skew_ + idx - 1;
}

Word RewriteSystem::group_word(const GroupElement& g) const {
  auto l = group_letter(g);
  return l ? Word{*l} : Word{};
}

GroupElement RewriteSystem::letter_element(int l) const {
  if (!is_group_letter(l)) throw DomainError("letter_element: not a group letter");
  return DihedralGroup(m_).from_index(l - skew_ + 1);
}

void RewriteSystem::add_rule(Rule r) {
  index_.emplace(r.lhs, rules_.size());
  ++lhs_lengths_[r.lhs.size()];
  rules_.push_back(std::move(r));
}

void RewriteSystem::remove_rule(std::size_t i) {
  if (--lhs_lengths_[rules_[i].lhs.size()] == 0) lhs_lengths_.erase(rules_[i].lhs.size());
  rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(i));
  index_.clear();
  for (std::size_t k = 0; k < rules_.size(); ++k) index_.emplace(rules_[k].lhs, k);
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_redex(const Word& w, ReductionStrategy s) const {
  const std::size_t n = w.size();
  auto try_at = [&](std::size_t pos) -> std::optional<std::pair<std::size_t, std::size_t>> {
    for (const auto& [len, cnt] : lhs_lengths_) {
      if (pos + len > n) break;
      auto it = index_.find(Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
                                 w.begin() + static_cast<std::ptrdiff_t>(pos + len)));
      if (it != index_.end()) return std::make_pair(pos, it->second);
    }
    return std::nullopt;
  };
  if (s == ReductionStrategy::Leftmost) {
    for (std::size_t pos = 0; pos < n; ++pos)
      if (auto r = try_at(pos)) return r;
  } else {
    for (std::size_t pos = n; pos-- > 0;)
      if (auto r = try_at(pos)) return r;
  }
  if (lhs_lengths_.count(0)) return std::make_pair(std::size_t{0}, index_.at(Word{}));
  return std::nullopt;
}

bool RewriteSystem::is_irreducible(const Word& w) const { return !find_redex(w, ReductionStrategy::Leftmost); }

Poly RewriteSystem::reduce(const Poly& p, ReductionStrategy s) const {
  Poly pending = p, out;
  while (!pending.empty()) {
    auto last = std::prev(pending.end());
    const Word w = last->first;
    const CycloNumber c = last->second;
    pending.erase(last);
    auto redex = find_redex(w, s);
    if (!redex) {
      out.emplace(w, c);
      continue;
    }
    const auto [pos, ri] = *redex;
    const Rule& r = rules_[ri];
    const Word pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    const Word post(w.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()), w.end());
    for (const auto& [rw, rc] : r.rhs) add_to(pending, concat(concat(pre, rw), post), c * rc);
  }
  return out;
}

Poly RewriteSystem::reduce(const Word& w, ReductionStrategy s) const {
  Poly p;
  p.emplace(w, CycloNumber(m_, 1));
  return reduce(p, s);
}

std::string RewriteSystem::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w) {
    if (!out.empty()) out += " ";
    out += is_group_letter(l) ? "[" + names_[static_cast<std::size_t>(l)] + "]" : names_[static_cast<std::size_t>(l)];
  }
  return out;
}

std::string RewriteSystem::poly_string(const Poly& p) const {
  if (p.empty()) return "0";
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.str() + ") " + word_string(it->first);
  }
  return out;
}

// ------------------------------------------------------------ completion

class Completer {
 public:
  Completer(RewriteSystem& R, const CompletionOptions& opts) : R_(R), opts_(opts) {}

  void insert(const Poly& p) {
    std::vector<Poly> queue{p};
    while (!queue.empty()) {
      Poly q = R_.reduce(queue.back());
      queue.pop_back();
      if (q.empty()) continue;
      auto lead = std::prev(q.end());
      const Word lhs = lead->first;
      if (lhs.empty()) throw CheckFailure("relations collapse the algebra (1 = 0)");
      const CycloNumber inv = lead->second.inverse();
      q.erase(lead);
      Poly rhs;
      for (const auto& [w, c] : q) rhs.emplace(w, -(c * inv));
      // rules whose lhs contains the new lhs are retired and re-inserted
      for (std::size_t i = R_.rules_.size(); i-- > 0;) {
        const Word& old = R_.rules_[i].lhs;
        if (old.size() >= lhs.size() && std::search(old.begin(), old.end(), lhs.begin(), lhs.end()) != old.end()) {
          Poly back = R_.rules_[i].rhs;
          add_to(back, old, CycloNumber(R_.m_, -1));
          queue.push_back(std::move(back));
          R_.remove_rule(i);
          epoch_.erase(epoch_.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
      R_.add_rule({lhs, std::move(rhs)});
      epoch_.push_back(pass_);
      if (pass_ > 0) ++R_.cert_.rules_added;
    }
  }

  void complete() {
    while (true) {
      ++pass_;
      struct Overlap {
        std::size_t i, j, k;
      };
      std::vector<Overlap> work;
      const auto& rules = R_.rules_;
      std::multimap<int, std::size_t> by_first;
      for (std::size_t j = 0; j < rules.size(); ++j) by_first.emplace(rules[j].lhs.front(), j);
      for (std::size_t i = 0; i < rules.size(); ++i) {
        const Word& a = rules[i].lhs;
        for (std::size_t k = 1; k < a.size(); ++k) {
          auto [lo, hi] = by_first.equal_range(a[a.size() - k]);
          for (auto it = lo; it != hi; ++it) {
            const std::size_t j = it->second;
            const Word& b = rules[j].lhs;
            if (b.size() <= k) continue;
            if (epoch_[i] < pass_ - 1 && epoch_[j] < pass_ - 1) continue;  // already checked
            if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
            work.push_back({i, j, k});
          }
        }
      }
      std::vector<std::optional<Poly>> residues(work.size());
      std::size_t limit = work.size();
      bool over_budget = false;
      if (opts_.overlap_budget && R_.cert_.overlaps_checked + work.size() > opts_.overlap_budget) {
        limit = opts_.overlap_budget - std::min(opts_.overlap_budget, R_.cert_.overlaps_checked);
        over_budget = true;
      }
      std::mutex err_mu;
      std::string err;
      detail::parallel_for(limit, opts_.threads, [&](std::size_t t) {
        try {
          const auto& [i, j, k] = work[t];
          const Word& a = rules[i].lhs;
          const Word& b = rules[j].lhs;
          const Word a_head(a.begin(), a.end() - static_cast<std::ptrdiff_t>(k));
          const Word b_tail(b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
          Poly s = sandwich({}, rules[i].rhs, b_tail);
          add_poly(s, sandwich(a_head, rules[j].rhs, {}), CycloNumber(R_.m_, -1));
          Poly r = R_.reduce(s);
          if (!r.empty()) residues[t] = std::move(r);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (err.empty()) err = e.what();
        }
      });
      if (!err.empty()) throw CheckFailure("completion: " + err);
      R_.cert_.overlaps_checked += limit;
      std::vector<Poly> fresh;
      std::string first;
      for (std::size_t t = 0; t < limit; ++t)
        if (residues[t]) {
          if (first.empty()) {
            const auto& o = work[t];
            first = "overlap of " + R_.word_string(rules[o.i].lhs) + " and " + R_.word_string(rules[o.j].lhs) +
                    " leaves " + R_.poly_string(*residues[t]);
          }
          fresh.push_back(std::move(*residues[t]));
        }
      if (over_budget)
        throw CompletionBudgetExceeded("completion exceeded the overlap budget of " +
                                       std::to_string(opts_.overlap_budget) +
                                       (first.empty() ? std::string() : "; first unresolved " + first));
      R_.cert_.passes = pass_;
      if (fresh.empty()) break;
      for (const auto& p : fresh) insert(p);
    }
    R_.cert_.rules = R_.rules_.size();
    R_.cert_.confluent = true;
  }

  void mark_initial() {
    R_.cert_.initial_rules = R_.rules_.size();
    epoch_.assign(R_.rules_.size(), 0);
  }

 private:
  RewriteSystem& R_;
  CompletionOptions opts_;
  std::vector<int> epoch_;
  int pass_ = 0;
};

namespace {

GroupElement evaluate_group_word(const DihedralGroup& G, const std::vector<int>& word) {
  GroupElement g = G.identity();
  for (int l : word) {
    if (l == kLetterG)
      g = G.multiply(g, G.s());
    else if (l == kLetterH)
      g = G.multiply(g, G.r());
    else
      throw CheckFailure("group relation mentions a skew-primitive");
  }
  return g;
}

}  // namespace

Poly relation_poly(const Presentation& P, const RewriteSystem& R, const Relation& rel) {
  DihedralGroup G(P.m);
  Poly p;
  const int s_letter = *R.group_letter(G.s()), r_letter = *R.group_letter(G.r());
  for (const auto& t : rel.lhs) {
    Word w;
    for (int l : t.word) w.push_back(l == kLetterG ? s_letter : l == kLetterH ? r_letter : l);
    add_to(p, w, t.coef);
  }
  for (const auto& [g, c] : rel.rhs) add_to(p, R.group_word(g), -c);
  return p;
}

RewriteSystem compile(const Presentation& P, const CompletionOptions& opts) {
  const int m = P.m;
  DihedralGroup G(m);
  RewriteSystem R;
  R.m_ = m;
  R.skew_ = static_cast<int>(P.generators.size());
  for (const auto& gen : P.generators) {
    R.names_.push_back(gen.name);
    R.skew_degree_.push_back(gen.grouplike);
  }
  for (int idx = 1; idx < 2 * m; ++idx) R.names_.push_back(G.gh_name(G.from_index(idx)));

  Completer C(R, opts);
  const CycloNumber one(m, 1);

  // The group relations must present D_m; multiplication of group letters is then
  // the group law.
  for (const auto& rel : P.relations) {
    if (rel.family != "group") continue;
    if (rel.lhs.size() != 1 || !rel.lhs[0].coef.is_one() || rel.rhs.size() != 1 || !rel.rhs[0].second.is_one())
      throw CheckFailure("unexpected group relation shape");
    if (evaluate_group_word(G, rel.lhs[0].word) != rel.rhs[0].first)
      throw CheckFailure("group relation does not hold in D_m: " + relation_string(P, rel));
  }
  const auto elems = G.elements();
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (a.is_identity() || b.is_identity()) continue;
      Rule r{{*R.group_letter(a), *R.group_letter(b)}, {}};
      r.rhs.emplace(R.group_word(G.multiply(a, b)), one);
      R.add_rule(std::move(r));
    }

  // Conjugation relations give H_g v -> c v' H_g for every g = s^e r^b.
  const int N = R.skew_;
  std::vector<int> partner(static_cast<std::size_t>(N), -1);
  std::vector<std::optional<CycloNumber>> h_coef(static_cast<std::size_t>(N));
  for (const auto& rel : P.relations) {
    if (rel.family != "conj") continue;
    if (rel.lhs.size() != 2 || !rel.rhs.empty() || !rel.lhs[0].coef.is_one() || rel.lhs[0].word.size() != 2)
      throw CheckFailure("unexpected conjugation relation: " + relation_string(P, rel));
    const int v = rel.lhs[0].word[1];
    const auto& other = rel.lhs[1];
    if (rel.lhs[0].word[0] == kLetterG && other.word.size() == 2 && other.word[1] == kLetterG && (-other.coef).is_one())
      partner[static_cast<std::size_t>(v)] = other.word[0];
    else if (rel.lhs[0].word[0] == kLetterH && other.word == Word{v, kLetterH})
      h_coef[static_cast<std::size_t>(v)] = -other.coef;
    else
      throw CheckFailure("unexpected conjugation relation: " + relation_string(P, rel));
  }
  for (int v = 0; v < N; ++v)
    if (partner[static_cast<std::size_t>(v)] < 0 || !h_coef[static_cast<std::size_t>(v)])
      throw CheckFailure("missing conjugation relation for " + P.generators[static_cast<std::size_t>(v)].name);
  for (const auto& g : elems) {
    if (g.is_identity()) continue;
    for (int v = 0; v < N; ++v) {
      const int target = g.reflection ? partner[static_cast<std::size_t>(v)] : v;
      Rule r{{*R.group_letter(g), v}, {}};
      r.rhs.emplace(Word{target, *R.group_letter(g)}, h_coef[static_cast<std::size_t>(v)]->pow(g.rotation));
      R.add_rule(std::move(r));
    }
  }
  C.mark_initial();

  for (const auto& rel : P.relations) {
    if (rel.family == "group" || rel.family == "conj") continue;
    C.insert(relation_poly(P, R, rel));
  }
  R.cert_.initial_rules = R.rules_.size();
  C.complete();
  return R;
}

// ------------------------------------------------------------ normal words

NormalBasis normal_basis(const RewriteSystem& R, std::size_t max_words, std::size_t max_length) {
  if (!R.certificate().confluent) throw CheckFailure("normal_basis: the system is not certified confluent");
  NormalBasis B;
  std::vector<Word> frontier{Word{}};
  B.words.push_back({});
  const int L = R.letter_count();
  std::size_t longest = 0;
  for (const auto& r : R.rules()) longest = std::max(longest, r.lhs.size());
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (int l = 0; l < L; ++l) {
        Word v = w;
        v.push_back(l);
        // only suffixes can be new redexes
        bool reducible = false;
        for (std::size_t len = 1; len <= std::min(longest, v.size()) && !reducible; ++len) {
          const Word tail(v.end() - static_cast<std::ptrdiff_t>(len), v.end());
          reducible = !R.is_irreducible(tail);
        }
        if (reducible) continue;
        next.push_back(std::move(v));
        if (B.words.size() + next.size() > max_words)
          throw CheckFailure("more than " + std::to_string(max_words) + " normal words; quotient not certified finite");
      }
    if (!next.empty() && next.front().size() > max_length)
      throw CheckFailure("normal words longer than " + std::to_string(max_length) + "; quotient not certified finite");
    std::sort(next.begin(), next.end());
    B.words.insert(B.words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return B;
}

DimensionResult dimension(const RewriteSystem& R) { return {normal_basis(R).dimension(), R.certificate()}; }

// ------------------------------------------------------------ Hopf checks

namespace {

using Tensor = std::map<std::pair<Word, Word>, CycloNumber>;

void add_to(Tensor& t, const Word& a, const Word& b, const CycloNumber& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

class HopfOps {
 public:
  explicit HopfOps(const RewriteSystem& R) : R_(R), G_(R.m()) {}

  Tensor delta_letter(int l) const {
    Tensor t;
    const CycloNumber one(R_.m(), 1);
    if (R_.is_group_letter(l)) {
      add_to(t, {l}, {l}, one);
    } else {
      add_to(t, {l}, {}, one);
      add_to(t, R_.group_word(R_.skew_degree(l)), {l}, one);
    }
    return t;
  }

  Tensor delta(const Poly& p) const {
    Tensor out;
    for (const auto& [w, c] : p) {
      Tensor acc;
      add_to(acc, {}, {}, c);
      for (int l : w) {
        Tensor next;
        const Tensor d = delta_letter(l);
        for (const auto& [ab, x] : acc)
          for (const auto& [cd, y] : d) add_to(next, concat(ab.first, cd.first), concat(ab.second, cd.second), x * y);
        acc = std::move(next);
      }
      for (const auto& [ab, x] : acc) add_to(out, ab.first, ab.second, x);
    }
    return out;
  }

  const Poly& nf(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(w, R_.reduce(w)).first->second;
  }

  Tensor reduce(const Tensor& t) {
    Tensor out;
    for (const auto& [ab, c] : t) {
      const Poly a = nf(ab.first);
      const Poly& b = nf(ab.second);
      for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) add_to(out, u, v, c * x * y);
    }
    return out;
  }

  CycloNumber counit(const Poly& p) const {
    CycloNumber acc(R_.m());
    for (const auto& [w, c] : p)
      if (std::all_of(w.begin(), w.end(), [&](int l) { return R_.is_group_letter(l); })) acc += c;
    return acc;
  }

  Poly antipode_letter(int l) const {
    Poly p;
    if (R_.is_group_letter(l)) {
      p.emplace(R_.group_word(G_.inverse(R_.letter_element(l))), CycloNumber(R_.m(), 1));
    } else {
      Word w = R_.group_word(G_.inverse(R_.skew_degree(l)));
      w.push_back(l);
      p.emplace(w, CycloNumber(R_.m(), -1));
    }
    return p;
  }

  /// Anti-homomorphic extension to the free algebra.
  Poly antipode(const Poly& p) const {
    Poly out;
    for (const auto& [w, c] : p) {
      Poly acc;
      acc.emplace(Word{}, c);
      for (int l : w) {  // S(l1 ... lk) = S(lk) ... S(l1)
        Poly next;
        const Poly s = antipode_letter(l);
        for (const auto& [u, x] : s)
          for (const auto& [v, y] : acc) add_to(next, concat(u, v), x * y);
        acc = std::move(next);
      }
      add_poly(out, acc, CycloNumber(R_.m(), 1));
    }
    return out;
  }

  std::string tensor_string(const Tensor& t) const {
    std::string out;
    int shown = 0;
    for (const auto& [ab, c] : t) {
      if (shown++ == 4) return out + " + ...";
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ") " + R_.word_string(ab.first) + " (x) " + R_.word_string(ab.second);
    }
    return out.empty() ? "0" : out;
  }

 private:
  const RewriteSystem& R_;
  DihedralGroup G_;
  std::map<Word, Poly, DegLex> cache_;
};

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) add_to(out, concat(u, v), x * y);
  return out;
}

}  // namespace

HopfReport hopf_check(const Presentation& P, const RewriteSystem& R) {
  HopfReport rep;
  HopfOps ops(R);
  const CycloNumber one(R.m(), 1);
  for (const auto& rel : P.relations) {
    const Poly rho = relation_poly(P, R, rel);
    const std::string name = relation_string(P, rel);
    if (!R.reduce(rho).empty()) {
      rep.delta_ok = false;
      rep.failures.push_back("relation does not hold in the quotient: " + name);
      continue;
    }
    const Tensor d = ops.reduce(ops.delta(rho));
    if (!d.empty()) {
      rep.delta_ok = false;
      rep.failures.push_back("Delta(" + name + ") = " + ops.tensor_string(d));
    }
    const CycloNumber e = ops.counit(rho);
    if (!e.is_zero()) {
      rep.counit_ok = false;
      rep.failures.push_back("eps(" + name + ") = " + e.str());
    }
    const Poly s = R.reduce(ops.antipode(rho));
    if (!s.empty()) {
      rep.antipode_ok = false;
      rep.failures.push_back("S(" + name + ") = " + R.poly_string(s));
    }
  }
  const int L = R.letter_count();
  for (int a = 0; a < L; ++a) {
    Poly pa;
    pa.emplace(Word{a}, one);
    // m(S (x) id) Delta = eps = m(id (x) S) Delta on generators
    Poly left, right;
    for (const auto& [ab, c] : ops.delta(pa)) {
      Poly u, v;
      u.emplace(ab.first, one);
      v.emplace(ab.second, one);
      add_poly(left, mul(ops.antipode(u), v), c);
      add_poly(right, mul(u, ops.antipode(v)), c);
    }
    Poly want;
    add_to(want, {}, ops.counit(pa));
    add_poly(left, want, CycloNumber(R.m(), -1));
    add_poly(right, want, CycloNumber(R.m(), -1));
    if (!R.reduce(left).empty() || !R.reduce(right).empty()) {
      rep.antipode_ok = false;
      rep.failures.push_back("antipode axiom fails on " + R.word_string({a}));
    }
    for (int b = 0; b < L; ++b) {
      Poly pb;
      pb.emplace(Word{b}, one);
      const Poly lhs = R.reduce(ops.antipode(R.reduce(Word{a, b})));
      const Poly rhs = R.reduce(mul(ops.antipode(pb), ops.antipode(pa)));
      if (lhs != rhs) {
        rep.antipode_ok = false;
        rep.failures.push_back("S(ab) != S(b)S(a) for " + R.word_string({a, b}));
      }
    }
  }
  return rep;
}

// ------------------------------------------------------------ skew-primitives

SkewPrimitiveReport skew_primitives(const RewriteSystem& R, const GroupElement& degree) {
  SkewPrimitiveReport rep;
  rep.degree = degree;
  HopfOps ops(R);
  const CycloNumber one(R.m(), 1);
  const Word dw = R.group_word(degree);

  std::vector<Word> words{Word{}};
  const int L = R.letter_count();
  for (int a = 0; a < L; ++a) {
    if (R.is_irreducible({a})) words.push_back({a});
    for (int b = 0; b < L; ++b)
      if (R.is_irreducible({a, b})) words.push_back({a, b});
  }

  // Kernel of u -> Delta(u) - u (x) 1 - H_d (x) u by sparse elimination.
  struct Row {
    Tensor vec;
    Poly combo;
  };
  std::vector<Row> pivots;
  std::vector<Poly> kernel;
  for (const auto& w : words) {
    Poly u;
    u.emplace(w, one);
    Tensor t = ops.reduce(ops.delta(u));
    add_to(t, w, {}, -one);
    Tensor hd;
    for (const auto& [v, c] : R.reduce(dw)) add_to(hd, v, w, c);
    for (const auto& [k, c] : ops.reduce(hd)) add_to(t, k.first, k.second, -c);
    Poly combo = u;
    for (const auto& piv : pivots) {
      const auto& key = piv.vec.rbegin()->first;
      auto it = t.find(key);
      if (it == t.end()) continue;
      const CycloNumber f = it->second / piv.vec.rbegin()->second;
      for (const auto& [k, c] : piv.vec) add_to(t, k.first, k.second, -(f * c));
      add_poly(combo, piv.combo, -f);
    }
    if (t.empty())
      kernel.push_back(std::move(combo));
    else
      pivots.push_back({std::move(t), std::move(combo)});
  }
  rep.basis = kernel;
  rep.nontrivial_dimension = kernel.size() - (degree.is_identity() || kernel.empty() ? 0 : 1);
  return rep;
}

}  // namespace ndm
