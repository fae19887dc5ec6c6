#include "nichols_dm/rack.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nichols_dm/errors.hpp"
#include "parallel.hpp"

namespace ndm {

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order < 1 || table_.size() != static_cast<size_t>(order) * order)
    throw DomainError("FiniteGroup: table has the wrong shape");
  for (int a = 0; a < order; ++a) {
    if (multiply(0, a) != a || multiply(a, 0) != a) throw DomainError("FiniteGroup: element 0 is not the identity");
    std::vector<bool> row(order), col(order);
    for (int b = 0; b < order; ++b) {
      const int x = multiply(a, b), y = multiply(b, a);
      if (x < 0 || x >= order || y < 0 || y >= order || row[x] || col[y])
        throw DomainError("FiniteGroup: table is not a Latin square");
      row[x] = col[y] = true;
    }
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          throw DomainError("FiniteGroup: table is not associative");
  inverse_.assign(order, 0);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (multiply(a, b) == 0) inverse_[a] = b;
  if (names_.empty())
    for (int a = 0; a < order; ++a) names_.push_back("g" + std::to_string(a));
  if (names_.size() != static_cast<size_t>(order)) throw DomainError("FiniteGroup: wrong number of names");
}

FiniteGroup FiniteGroup::from_dihedral(const DihedralGroup& G) {
  const int N = G.order();
  std::vector<int> table(static_cast<size_t>(N) * N);
  std::vector<std::string> names;
  for (int a = 0; a < N; ++a) {
    names.push_back(G.name(G.from_index(a)));
    for (int b = 0; b < N; ++b) table[a * N + b] = G.multiply(G.from_index(a), G.from_index(b)).index(G.m());
  }
  return FiniteGroup(N, std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators) {
  if (generators.empty()) throw DomainError("from_permutations: need at least one generator");
  const size_t deg = generators[0].size();
  for (const auto& g : generators) {
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> iota(deg);
    std::iota(iota.begin(), iota.end(), 0);
    if (g.size() != deg || sorted != iota) throw DomainError("from_permutations: not a permutation");
  }
  auto compose = [&](const std::vector<int>& f, const std::vector<int>& g) {  // f after g
    std::vector<int> h(deg);
    for (size_t v = 0; v < deg; ++v) h[v] = f[g[v]];
    return h;
  };
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : generators) {
      auto p = compose(elems[i], g);
      if (index.emplace(p, static_cast<int>(elems.size())).second) elems.push_back(p);
    }
  const int N = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<size_t>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) table[a * N + b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup(N, std::move(table));
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::vector<bool> in(order_, false);
  std::vector<int> elems{0};
  in[0] = true;
  for (size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      const int p = multiply(elems[i], g);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> FiniteGroup::conjugacy_class(int x) const {
  std::set<int> c;
  for (int g = 0; g < order_; ++g) c.insert(conjugate(g, x));
  return {c.begin(), c.end()};
}

// ------------------------------------------------------------------ type D

bool verify_type_D_witness(const FiniteGroup& G, int r, int s) {
  const int rs = G.multiply(r, s), sr = G.multiply(s, r);
  if (G.multiply(rs, rs) == G.multiply(sr, sr)) return false;
  for (int h : G.generated_subgroup({r, s}))
    if (G.conjugate(h, r) == s) return false;
  return true;
}

std::optional<TypeDWitness> find_type_D(const FiniteGroup& G, const std::vector<int>& subset, int threads) {
  const size_t k = subset.size();
  const size_t first = detail::parallel_first(k * k, threads, [&](size_t idx) {
    const int r = subset[idx / k], s = subset[idx % k];
    return r != s && verify_type_D_witness(G, r, s);
  });
  if (first == k * k) return std::nullopt;
  return TypeDWitness{subset[first / k], subset[first % k]};
}

std::optional<std::pair<GroupElement, GroupElement>> find_type_D(const DihedralGroup& G, const ConjugacyClass& cls,
                                                                  int threads) {
  const FiniteGroup F = FiniteGroup::from_dihedral(G);
  std::vector<int> subset;
  for (const auto& x : cls.elements) subset.push_back(x.index(G.m()));
  auto w = find_type_D(F, subset, threads);
  if (!w) return std::nullopt;
  return std::make_pair(G.from_index(w->r), G.from_index(w->s));
}

// ---------------------------------------------------------------------- Rack

Rack::Rack(int size, std::vector<int> table, std::vector<std::string> labels)
    : size_(size), table_(std::move(table)), labels_(std::move(labels)) {
  if (size < 1 || table_.size() != static_cast<size_t>(size) * size) throw DomainError("Rack: table has the wrong shape");
  for (int i = 0; i < size; ++i) {
    std::vector<bool> hit(size, false);
    for (int j = 0; j < size; ++j) {
      const int v = op(i, j);
      if (v < 0 || v >= size || hit[v]) throw DomainError("Rack: left translation is not a bijection");
      hit[v] = true;
    }
  }
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      for (int k = 0; k < size; ++k)
        if (op(i, op(j, k)) != op(op(i, j), op(i, k))) throw DomainError("Rack: not self-distributive");
  if (labels_.empty())
    for (int i = 0; i < size; ++i) labels_.push_back(std::to_string(i));
}

bool Rack::is_quandle() const {
  for (int i = 0; i < size_; ++i)
    if (op(i, i) != i) return false;
  return true;
}

std::vector<int> Rack::translation_cycle_type(int i) const {
  std::vector<bool> seen(size_, false);
  std::vector<int> cycles;
  for (int j = 0; j < size_; ++j) {
    if (seen[j]) continue;
    int len = 0;
    for (int v = j; !seen[v]; v = op(i, v)) {
      seen[v] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

Rack conjugation_rack(const FiniteGroup& G, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  std::map<int, int> pos;
  for (int i = 0; i < k; ++i) pos[subset[i]] = i;
  std::vector<int> table(static_cast<size_t>(k) * k);
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back(G.name(subset[i]));
    for (int j = 0; j < k; ++j) {
      auto it = pos.find(G.conjugate(subset[i], subset[j]));
      if (it == pos.end()) throw DomainError("conjugation_rack: subset is not stable under conjugation");
      table[i * k + j] = it->second;
    }
  }
  return Rack(k, std::move(table), std::move(labels));
}

Rack conjugation_rack(const DihedralGroup& G, const ConjugacyClass& cls) {
  std::vector<int> subset;
  for (const auto& x : cls.elements) subset.push_back(x.index(G.m()));
  return conjugation_rack(FiniteGroup::from_dihedral(G), subset);
}

Rack dihedral_rack(int n) {
  if (n < 1) throw DomainError("dihedral_rack: n must be positive");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = (((2 * i - j) % n) + n) % n;
  return Rack(n, std::move(table));
}

std::vector<int> affine_coordinates(const std::vector<int>& orders, int index) {
  std::vector<int> x(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) {
    x[i] = index % orders[i];
    index /= orders[i];
  }
  return x;
}

Rack affine_rack(const std::vector<int>& orders, const std::vector<std::vector<int>>& matrix) {
  const size_t d = orders.size();
  if (d == 0 || matrix.size() != d) throw DomainError("affine_rack: matrix must be square of the group's rank");
  int size = 1;
  for (int o : orders) {
    if (o < 1) throw DomainError("affine_rack: cyclic orders must be positive");
    size *= o;
  }
  for (size_t i = 0; i < d; ++i) {
    if (matrix[i].size() != d) throw DomainError("affine_rack: matrix must be square");
    for (size_t j = 0; j < d; ++j)
      if ((static_cast<long long>(matrix[i][j]) * orders[j]) % orders[i] != 0)
        throw DomainError("affine_rack: matrix does not define a homomorphism");
  }
  auto encode = [&](const std::vector<int>& x) {
    int idx = 0;
    for (size_t i = d; i-- > 0;) idx = idx * orders[i] + x[i];
    return idx;
  };
  auto apply = [&](const std::vector<int>& x) {
    std::vector<int> y(d);
    for (size_t i = 0; i < d; ++i) {
      long long acc = 0;
      for (size_t j = 0; j < d; ++j) acc += static_cast<long long>(matrix[i][j]) * x[j];
      y[i] = static_cast<int>(((acc % orders[i]) + orders[i]) % orders[i]);
    }
    return y;
  };
  std::vector<std::vector<int>> gx(size);
  std::vector<bool> hit(size, false);
  for (int a = 0; a < size; ++a) {
    gx[a] = apply(affine_coordinates(orders, a));
    const int img = encode(gx[a]);
    if (hit[img]) throw DomainError("affine_rack: g is not bijective");
    hit[img] = true;
  }
  std::vector<int> table(static_cast<size_t>(size) * size);
  for (int a = 0; a < size; ++a) {
    const auto x = affine_coordinates(orders, a);
    for (int b = 0; b < size; ++b) {
      std::vector<int> z(d);
      for (size_t i = 0; i < d; ++i) z[i] = ((gx[b][i] + x[i] - gx[a][i]) % orders[i] + 2 * orders[i]) % orders[i];
      table[a * size + b] = encode(z);
    }
  }
  return Rack(size, std::move(table));
}

// ------------------------------------------------------------- isomorphism

namespace {

struct IsoSearch {
  const Rack& a;
  const Rack& b;
  std::vector<std::vector<int>> type_a, type_b;
  std::vector<int> f, finv;

  bool consistent() const {
    const int n = a.size();
    for (int i = 0; i < n; ++i) {
      if (f[i] < 0) continue;
      for (int j = 0; j < n; ++j) {
        if (f[j] < 0) continue;
        const int k = a.op(i, j);
        const int want = b.op(f[i], f[j]);
        if (f[k] >= 0 ? f[k] != want : finv[want] >= 0) return false;
      }
    }
    return true;
  }

  bool solve(int next) {
    const int n = a.size();
    while (next < n && f[next] >= 0) ++next;
    if (next == n) return true;
    for (int c = 0; c < n; ++c) {
      if (finv[c] >= 0 || type_a[next] != type_b[c]) continue;
      f[next] = c;
      finv[c] = next;
      if (consistent() && solve(next + 1)) return true;
      f[next] = -1;
      finv[c] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> rack_isomorphism(const Rack& a, const Rack& b) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch s{a, b, {}, {}, std::vector<int>(a.size(), -1), std::vector<int>(a.size(), -1)};
  for (int i = 0; i < a.size(); ++i) {
    s.type_a.push_back(a.translation_cycle_type(i));
    s.type_b.push_back(b.translation_cycle_type(i));
  }
  auto ta = s.type_a, tb = s.type_b;
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  if (ta != tb) return std::nullopt;
  if (!s.solve(0)) return std::nullopt;
  return s.f;
}

std::optional<std::pair<int, int>> rack_type_D(const Rack& X) {
  const int n = X.size();
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      if (r == s || X.op(r, X.op(s, X.op(r, s))) == s) continue;
      // subrack generated by r and s (finite, so closure under |> suffices)
      std::vector<bool> in(n, false);
      std::vector<int> sub{r, s};
      in[r] = in[s] = true;
      for (bool grew = true; grew;) {
        grew = false;
        const size_t cur = sub.size();
        for (size_t i = 0; i < cur; ++i)
          for (size_t j = 0; j < cur; ++j) {
            const int v = X.op(sub[i], sub[j]);
            if (!in[v]) {
              in[v] = true;
              sub.push_back(v);
              grew = true;
            }
          }
      }
      // orbit of r under the translations of the subrack
      std::vector<bool> orbit(n, false);
      std::vector<int> queue{r};
      orbit[r] = true;
      for (size_t q = 0; q < queue.size(); ++q)
        for (int y : sub) {
          const int v = X.op(y, queue[q]);
          if (!orbit[v]) {
            orbit[v] = true;
            queue.push_back(v);
          }
        }
      if (!orbit[s]) return std::make_pair(r, s);
    }
  return std::nullopt;
}

}  // namespace ndm
