/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "periodcalc/brauer_descent.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "periodcalc/errors.hpp"

namespace periodcalc {

namespace {

bool set_less(const ElementSet& a, const ElementSet& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i];  // first differing element present in a => a's list is smaller
  }
  return false;
}

struct SetLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const { return set_less(a, b); }
};

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order != b.order) return a.order < b.order;
  return set_less(a.elements, b.elements);
}

// Closure of base (already a set containing 0) under right multiplication by gens.
ElementSet close(const FiniteGroup& G, ElementSet base, const std::vector<int>& gens) {
  std::deque<int> todo;
  for (int g = 0; g < G.order(); ++g) {
    if (base.test(static_cast<size_t>(g))) todo.push_back(g);
  }
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop_front();
    for (int s : gens) {
      const int y = G.mul(x, s);
      if (!base.test(static_cast<size_t>(y))) {
        base.set(static_cast<size_t>(y));
        todo.push_back(y);
      }
    }
  }
  return base;
}

Subgroup from_set(const ElementSet& s) {
  return Subgroup{s, static_cast<int>(s.count())};
}

}  // namespace

// ---- FiniteGroup ---------------------------------------------------------------------------

GroupPtr FiniteGroup::from_table(std::string name, const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(ErrorCode::InvalidInput, "empty multiplication table");
  if (n > kMaxGroupOrder) fail(ErrorCode::InvalidInput, "group order exceeds " + std::to_string(kMaxGroupOrder));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      fail(ErrorCode::InvalidInput, "multiplication table is not square", "/table/" + std::to_string(i));
    }
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n) {
        fail(ErrorCode::InvalidInput, "entry out of range", "/table/" + std::to_string(i) + "/" + std::to_string(j));
      }
    }
  }
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) fail(ErrorCode::InvalidInput, "no identity element");
  // relabel so the identity is 0
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[e]);
  std::shared_ptr<FiniteGroup> G(new FiniteGroup());
  G->name_ = std::move(name);
  G->n_ = n;
  G->table_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) G->table_[relabel[i] * n + relabel[j]] = relabel[table[i][j]];
  }
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n), col(n);
    for (int j = 0; j < n; ++j) {
      row[G->mul(i, j)] = true;
      col[G->mul(j, i)] = true;
    }
    for (int j = 0; j < n; ++j) {
      if (!row[j] || !col[j]) fail(ErrorCode::InvalidInput, "table is not a Latin square: no inverses");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = G->mul(a, b);
      for (int c = 0; c < n; ++c) {
        if (G->mul(ab, c) != G->mul(a, G->mul(b, c))) fail(ErrorCode::InvalidInput, "table is not associative");
      }
    }
  }
  G->finish();
  return G;
}

GroupPtr FiniteGroup::from_permutations(std::string name, const std::vector<std::vector<int>>& gens) {
  size_t deg = 0;
  for (const auto& g : gens) deg = std::max(deg, g.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    std::vector<int> seen(deg, 0);
    if (gens[k].size() != deg) fail(ErrorCode::InvalidInput, "generators have different degrees", "/generators/" + std::to_string(k));
    for (int v : gens[k]) {
      if (v < 0 || static_cast<size_t>(v) >= deg || seen[v]++) {
        fail(ErrorCode::InvalidInput, "not a permutation", "/generators/" + std::to_string(k));
      }
    }
  }
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  // (a*b)(i) = b(a(i)): apply a first
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
  };
  std::set<std::vector<int>> elems{id};
  std::deque<std::vector<int>> todo{id};
  while (!todo.empty()) {
    auto x = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      auto y = compose(x, g);
      if (elems.insert(y).second) {
        if (static_cast<int>(elems.size()) > kMaxGroupOrder) {
          fail(ErrorCode::InvalidInput, "group order exceeds " + std::to_string(kMaxGroupOrder));
        }
        todo.push_back(std::move(y));
      }
    }
  }
  std::vector<std::vector<int>> list(elems.begin(), elems.end());  // lexicographic, identity first
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<int>(i);
  std::shared_ptr<FiniteGroup> G(new FiniteGroup());
  G->name_ = std::move(name);
  G->n_ = static_cast<int>(list.size());
  G->table_.resize(list.size() * list.size());
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < list.size(); ++j) G->table_[i * list.size() + j] = index.at(compose(list[i], list[j]));
  }
  G->perms_ = list;
  G->finish();
  return G;
}

void FiniteGroup::finish() {
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) inv_[a] = b;
    }
  }
  class_of_.assign(n_, -1);
  classes_.clear();
  for (int g = 0; g < n_; ++g) {
    if (class_of_[g] >= 0) continue;
    std::set<int> orbit;
    for (int x = 0; x < n_; ++x) orbit.insert(conj(g, x));
    for (int y : orbit) class_of_[y] = static_cast<int>(classes_.size());
    classes_.emplace_back(orbit.begin(), orbit.end());
  }
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

// ---- subgroups -------------------------------------------------------------------------------

std::vector<int> Subgroup::list() const {
  std::vector<int> out;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements.test(i)) out.push_back(static_cast<int>(i));
  }
  return out;
}

Subgroup make_subgroup(const FiniteGroup& G, const std::vector<int>& elements) {
  ElementSet s;
  for (int g : elements) {
    if (g < 0 || g >= G.order()) fail(ErrorCode::NotASubgroup, "element " + std::to_string(g) + " not in the group");
    s.set(static_cast<size_t>(g));
  }
  if (!s.test(0)) fail(ErrorCode::NotASubgroup, "subset does not contain the identity");
  const Subgroup H = from_set(s);
  const auto L = H.list();
  for (int a : L) {
    for (int b : L) {
      if (!s.test(static_cast<size_t>(G.mul(a, b)))) fail(ErrorCode::NotASubgroup, "subset is not closed under multiplication");
    }
  }
  return H;
}

Subgroup whole_group(const FiniteGroup& G) {
  ElementSet s;
  for (int g = 0; g < G.order(); ++g) s.set(static_cast<size_t>(g));
  return from_set(s);
}

Subgroup trivial_subgroup(const FiniteGroup&) {
  ElementSet s;
  s.set(0);
  return from_set(s);
}

Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
  ElementSet s;
  s.set(0);
  return from_set(close(G, s, gens));
}

const std::vector<std::vector<int>>& conjugacy_classes(const FiniteGroup& G) { return G.classes(); }

bool is_solvable(const FiniteGroup& G, const Subgroup& H) {
  Subgroup D = H;
  while (D.order > 1) {
    const auto L = D.list();
    std::set<int> comms;
    for (int a : L) {
      for (int b : L) comms.insert(G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)));
    }
    const Subgroup C = generated_subgroup(G, std::vector<int>(comms.begin(), comms.end()));
    if (C == D) return false;
    D = C;
  }
  return true;
}

bool is_solvable(const FiniteGroup& G) { return is_solvable(G, whole_group(G)); }

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  // Every subgroup is reached by adjoining one element at a time.
  std::map<ElementSet, std::vector<int>, SetLess> found;  // subgroup -> generators
  ElementSet triv;
  triv.set(0);
  found[triv] = {};
  std::deque<ElementSet> todo{triv};
  while (!todo.empty()) {
    const ElementSet H = todo.front();
    todo.pop_front();
    const std::vector<int> gens = found[H];
    for (int g = 1; g < G.order(); ++g) {
      if (H.test(static_cast<size_t>(g))) continue;
      std::vector<int> ng = gens;
      ng.push_back(g);
      const ElementSet K = close(G, H, ng);
      if (!found.count(K)) {
        found[K] = ng;
        todo.push_back(K);
      }
    }
  }
  std::vector<Subgroup> out;
  for (const auto& [s, g] : found) out.push_back(from_set(s));
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> subgroup_class_representatives(const FiniteGroup& G) {
  std::vector<Subgroup> reps;
  std::set<ElementSet, SetLess> seen;
  for (const auto& H : all_subgroups(G)) {
    if (seen.count(H.elements)) continue;
    reps.push_back(H);
    const auto L = H.list();
    for (int x = 0; x < G.order(); ++x) {
      ElementSet c;
      for (int h : L) c.set(static_cast<size_t>(G.conj(h, x)));
      seen.insert(c);
    }
  }
  return reps;
}

// ---- class functions -------------------------------------------------------------------------

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

ClassFunction ClassFunction::operator*(long long k) const {
  ClassFunction r = *this;
  for (auto& v : r.values) v *= k;
  return r;
}

ClassFunction ClassFunction::trivial(GroupPtr G) {
  ClassFunction f{G, std::vector<Rational>(G->classes().size(), Rational(1))};
  return f;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group != g.group) fail(ErrorCode::InvalidInput, "class functions live on different groups");
  Rational s(0);
  const auto& C = f.group->classes();
  for (size_t i = 0; i < C.size(); ++i) s += Rational(static_cast<long long>(C[i].size())) * f.values[i] * g.values[i];
  return s / Rational(f.group->order());
}

ClassFunction induce_trivial(const GroupPtr& G, const Subgroup& H) {
  const Subgroup checked = make_subgroup(*G, H.list());
  ClassFunction f{G, {}};
  for (const auto& cls : G->classes()) {
    const int g = cls.front();
    long long fixed = 0;
    for (int x = 0; x < G->order(); ++x) {
      if (checked.contains(G->conj(g, x))) ++fixed;
    }
    f.values.emplace_back(fixed, checked.order);
  }
  return f;
}

// ---- Brauer decomposition --------------------------------------------------------------------

ClassFunction BrauerDecomposition::sum() const {
  ClassFunction s{group, std::vector<Rational>(group->classes().size(), Rational(0))};
  for (const auto& t : terms) s += induce_trivial(group, t.H) * t.n;
  return s;
}

bool BrauerDecomposition::verify() const {
  for (const auto& t : terms) {
    if (!is_solvable(*group, t.H)) return false;
  }
  return sum() == ClassFunction::trivial(group);
}

namespace {

using Matrix = std::vector<std::vector<long long>>;

// Integer solution of A x = b by column Hermite reduction, if one exists.
std::optional<std::vector<long long>> integer_solve(const Matrix& A, const std::vector<long long>& b) {
  const size_t rows = A.size();
  const size_t cols = rows ? A[0].size() : 0;
  Matrix H = A;
  Matrix U(cols, std::vector<long long>(cols, 0));
  for (size_t i = 0; i < cols; ++i) U[i][i] = 1;
  auto col_op = [&](size_t dst, size_t src, long long q) {  // col dst -= q col src
    for (size_t r = 0; r < rows; ++r) H[r][dst] -= q * H[r][src];
    for (size_t r = 0; r < cols; ++r) U[r][dst] -= q * U[r][src];
  };
  auto col_swap = [&](size_t a, size_t c) {
    for (size_t r = 0; r < rows; ++r) std::swap(H[r][a], H[r][c]);
    for (size_t r = 0; r < cols; ++r) std::swap(U[r][a], U[r][c]);
  };
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
  size_t k = 0;
  for (size_t i = 0; i < rows && k < cols; ++i) {
    // Euclid across columns k.. on row i
    for (;;) {
      size_t best = cols;
      for (size_t c = k; c < cols; ++c) {
        if (H[i][c] != 0 && (best == cols || std::llabs(H[i][c]) < std::llabs(H[i][best]))) best = c;
      }
      if (best == cols) break;
      if (best != k) col_swap(best, k);
      bool done = true;
      for (size_t c = k + 1; c < cols; ++c) {
        if (H[i][c] != 0) {
          col_op(c, k, H[i][c] / H[i][k]);
          if (H[i][c] != 0) done = false;
        }
      }
      if (done) break;
    }
    if (H[i][k] != 0) {
      pivots.emplace_back(i, k);
      ++k;
    }
  }
  std::vector<long long> y(cols, 0);
  size_t p = 0;
  for (size_t i = 0; i < rows; ++i) {
    long long rest = b[i];
    for (size_t c = 0; c < k; ++c) rest -= H[i][c] * y[c];
    if (p < pivots.size() && pivots[p].first == i) {
      const size_t c = pivots[p].second;
      if (rest % H[i][c] != 0) return std::nullopt;
      y[c] = rest / H[i][c];
      ++p;
    } else if (rest != 0) {
      return std::nullopt;
    }
  }
  std::vector<long long> x(cols, 0);
  for (size_t r = 0; r < cols; ++r) {
    for (size_t c = 0; c < cols; ++c) x[r] += U[r][c] * y[c];
  }
  return x;
}

bool solves(const Matrix& A, const std::vector<long long>& b, const std::vector<long long>& x) {
  for (size_t i = 0; i < A.size(); ++i) {
    long long s = 0;
    for (size_t j = 0; j < x.size(); ++j) s += A[i][j] * x[j];
    if (s != b[i]) return false;
  }
  return true;
}

// All x with sum |x_j| == budget solving A x = b; keeps the lexicographically smallest.
void search(const Matrix& A, const std::vector<long long>& b, std::vector<long long>& x, size_t j, long long budget,
            std::optional<std::vector<long long>>& best) {
  if (j + 1 == x.size()) {
    for (long long v : {-budget, budget}) {
      x[j] = v;
      if (solves(A, b, x) && (!best || x < *best)) best = x;
      if (budget == 0) break;
    }
    x[j] = 0;
    return;
  }
  for (long long v = -budget; v <= budget; ++v) {
    x[j] = v;
    search(A, b, x, j + 1, budget - std::llabs(v), best);
  }
  x[j] = 0;
}

constexpr long long kSearchBudget = 12;

}  // namespace

BrauerDecomposition brauer_decompose(const GroupPtr& G) {
  BrauerDecomposition dec;
  dec.group = G;
  if (is_solvable(*G)) {
    dec.terms.push_back({whole_group(*G), 1});
    dec.fast_path = true;
    dec.l1_norm = 1;
    return dec;
  }
  std::vector<Subgroup> cand;
  for (const auto& H : subgroup_class_representatives(*G)) {
    if (is_solvable(*G, H)) cand.push_back(H);
  }
  const size_t nc = G->classes().size();
  Matrix A(nc, std::vector<long long>(cand.size(), 0));
  for (size_t j = 0; j < cand.size(); ++j) {
    const ClassFunction f = induce_trivial(G, cand[j]);
    for (size_t i = 0; i < nc; ++i) A[i][j] = boost::rational_cast<long long>(f.values[i]);
  }
  const std::vector<long long> b(nc, 1);
  const auto particular = integer_solve(A, b);
  if (!particular) fail(ErrorCode::InvalidInput, "no integer combination of solvable inductions gives 1_G");
  long long bound = 0;
  for (long long v : *particular) bound += std::llabs(v);
  std::optional<std::vector<long long>> best;
  std::vector<long long> x(cand.size(), 0);
  for (long long B = 1; B <= std::min(bound, kSearchBudget) && !best; ++B) search(A, b, x, 0, B, best);
  const std::vector<long long> sol = best ? *best : *particular;
  for (size_t j = 0; j < cand.size(); ++j) {
    if (sol[j] != 0) dec.terms.push_back({cand[j], sol[j]});
    dec.l1_norm += std::llabs(sol[j]);
  }
  return dec;
}

// ---- cyclotomic integers -------------------------------------------------------------------

namespace {

std::vector<long long> poly_divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
  // den monic; coefficients low degree first
  std::vector<long long> q(num.size() - den.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    q[i] = num[i + den.size() - 1];
    for (size_t k = 0; k < den.size(); ++k) num[i + k] -= q[i] * den[k];
  }
  return q;
}

const std::vector<long long>& cyclotomic_poly(int m) {
  static std::map<int, std::vector<long long>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<long long> p(static_cast<size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d));
  }
  return cache[m] = p;
}

}  // namespace

Cyclotomic::Cyclotomic(int m) : m_(m) {
  if (m < 1 || m > 12) fail(ErrorCode::InvalidInput, "cyclotomic modulus must be in 1..12");
  c_.assign(cyclotomic_poly(m).size() - 1, 0);
}

void Cyclotomic::reduce(std::vector<long long> raw) {
  const auto& phi = cyclotomic_poly(m_);
  const size_t d = phi.size() - 1;
  for (size_t i = raw.size(); i-- > d;) {
    const long long lead = raw[i];
    if (lead == 0) continue;
    for (size_t k = 0; k <= d; ++k) raw[i - d + k] -= lead * phi[k];
  }
  raw.resize(d, 0);
  c_ = raw;
}

Cyclotomic Cyclotomic::root_power(int m, long long e) {
  Cyclotomic z(m);
  const long long r = ((e % m) + m) % m;
  std::vector<long long> raw(static_cast<size_t>(r) + 1, 0);
  raw[static_cast<size_t>(r)] = 1;
  z.reduce(raw);
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ != m_) fail(ErrorCode::InvalidInput, "cyclotomic moduli differ");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic Cyclotomic::divided_by(long long k) const {
  Cyclotomic r = *this;
  for (auto& v : r.c_) {
    if (v % k != 0) fail(ErrorCode::InvalidInput, "inexact cyclotomic division");
    v /= k;
  }
  return r;
}

std::string Cyclotomic::text() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    const long long a = std::llabs(c_[i]);
    if (i == 0 || a != 1) os << a;
    if (i > 0) os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

int LinearCharacter::order() const {
  int g = m;
  for (int e : exponent) g = std::gcd(g, e);
  return m / g;
}

std::vector<LinearCharacter> linear_characters(const FiniteGroup& G, const Subgroup& N, int max_order) {
  int m = 1;
  for (int k = 1; k <= max_order; ++k) m = std::lcm(m, k);
  if (max_order < 1 || m > 12) fail(ErrorCode::InvalidInput, "character order bound must be in 1..4");
  std::vector<int> gens;
  ElementSet span;
  span.set(0);
  for (int g : N.list()) {
    if (!span.test(static_cast<size_t>(g))) {
      gens.push_back(g);
      span = close(G, span, gens);
    }
  }
  std::vector<int> allowed;
  for (int e = 0; e < m; ++e) {
    if (m / std::gcd(m, e) <= max_order) allowed.push_back(e);
  }
  std::vector<LinearCharacter> out;
  std::vector<size_t> pick(gens.size(), 0);
  for (;;) {
    std::vector<int> val(G.order(), -1);
    val[0] = 0;
    std::deque<int> todo{0};
    bool ok = true;
    while (!todo.empty() && ok) {
      const int x = todo.front();
      todo.pop_front();
      for (size_t i = 0; i < gens.size() && ok; ++i) {
        const int y = G.mul(x, gens[i]);
        const int v = (val[x] + allowed[pick[i]]) % m;
        if (val[y] < 0) {
          val[y] = v;
          todo.push_back(y);
        } else if (val[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) {
      LinearCharacter lam{m, std::vector<int>(G.order(), 0)};
      for (int g : N.list()) lam.exponent[g] = val[g];
      if (lam.order() <= max_order) out.push_back(std::move(lam));
    }
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == allowed.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

InductionRestrictionReport induction_restriction(const FiniteGroup& G, const Subgroup& N, const Subgroup& H,
                                                 const LinearCharacter& lambda) {
  InductionRestrictionReport rep;
  const ElementSet HN = H.elements & N.elements;
  const int hn = static_cast<int>(HN.count());
  rep.g_equals_hn = static_cast<long long>(H.order) * N.order == static_cast<long long>(G.order()) * hn;
  for (int h : H.list()) {
    Cyclotomic l(lambda.m), r(lambda.m);
    for (int x = 0; x < G.order(); ++x) {
      const int c = G.conj(h, x);
      if (N.contains(c)) l += lambda.value(c);
      if (H.contains(x) && HN.test(static_cast<size_t>(c))) r += lambda.value(c);
    }
    rep.lhs.push_back(l.divided_by(N.order));
    rep.rhs.push_back(r.divided_by(hn));
  }
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

bool verify_induction_restriction(const FiniteGroup& G, const Subgroup& N, const Subgroup& H,
                                  const LinearCharacter& lambda) {
  const Subgroup n = make_subgroup(G, N.list());
  const Subgroup h = make_subgroup(G, H.list());
  if (2 * n.order != G.order()) fail(ErrorCode::InvalidInput, "N must have index 2 in G");
  if (static_cast<int>(lambda.exponent.size()) != G.order()) fail(ErrorCode::InvalidInput, "lambda has the wrong length");
  for (int a : n.list()) {
    for (int b : n.list()) {
      if ((lambda.exponent[a] + lambda.exponent[b]) % lambda.m != lambda.exponent[G.mul(a, b)] % lambda.m) {
        fail(ErrorCode::InvalidInput, "lambda is not multiplicative on N");
      }
    }
  }
  const auto rep = induction_restriction(G, n, h, lambda);
  if (!rep.g_equals_hn) fail(ErrorCode::HypothesisFailed, "G != HN");
  return rep.holds;
}

SweepStats induction_restriction_sweep(const FiniteGroup& G, int max_order) {
  SweepStats st;
  const auto subs = all_subgroups(G);
  for (const auto& N : subs) {
    if (2 * N.order != G.order()) continue;
    const auto chars = linear_characters(G, N, max_order);
    for (const auto& H : subs) {
      for (const auto& lam : chars) {
        const auto rep = induction_restriction(G, N, H, lam);
        if (rep.g_equals_hn) {
          ++st.tuples;
          if (!rep.holds) ++st.failures;
        } else {
          ++st.off_hypothesis;
          if (!rep.holds) ++st.counterexamples;
        }
      }
    }
  }
  return st;
}

std::vector<DescentDatum> descent_data_from_decomposition(const BrauerDecomposition& dec, int base_degree) {
  std::vector<DescentDatum> out;
  int idx = 0;
  for (const auto& t : dec.terms) {
    ++idx;
    const int index = dec.group->order() / t.H.order;
    DescentDatum d;
    d.subfield_label = index == 1 ? "K" : "K" + std::to_string(idx);
    d.degree_over_K = index;
    d.degree_over_Q = base_degree * index;
    d.multiplicity = static_cast<int>(t.n);
    out.push_back(d);
  }
  return out;
}

// ---- fixtures ------------------------------------------------------------------------------

namespace groups {

namespace {
std::vector<int> cycle(int deg, const std::vector<int>& pts) {
  std::vector<int> p(deg);
  std::iota(p.begin(), p.end(), 0);
  for (size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}
}  // namespace

GroupPtr cyclic(int n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "cyclic order must be positive");
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  return FiniteGroup::from_permutations("C" + std::to_string(n), {cycle(n, pts)});
}

GroupPtr dihedral(int n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "dihedral parameter must be positive");
  if (n == 1) return cyclic(2);
  if (n == 2) return FiniteGroup::from_permutations("D2", {cycle(4, {0, 1}), cycle(4, {2, 3})});
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  std::vector<int> refl(n);
  for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return FiniteGroup::from_permutations("D" + std::to_string(n), {cycle(n, pts), refl});
}

GroupPtr symmetric(int n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "symmetric degree must be positive");
  if (n == 1) return FiniteGroup::from_permutations("S1", {{0}});
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  return FiniteGroup::from_permutations("S" + std::to_string(n), {cycle(n, {0, 1}), cycle(n, pts)});
}

GroupPtr alternating(int n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "alternating degree must be positive");
  std::vector<std::vector<int>> gens;
  for (int k = 2; k < n; ++k) gens.push_back(cycle(n, {0, 1, k}));
  if (gens.empty()) gens.push_back(cycle(std::max(n, 1), {}));
  return FiniteGroup::from_permutations("A" + std::to_string(n), gens);
}

GroupPtr quaternion() {
  // index = 4*sign + unit, unit 0..3 = 1,i,j,k
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int s = (a / 4 + b / 4 + sign_mul[ua][ub]) % 2;
      t[a][b] = 4 * s + unit_mul[ua][ub];
    }
  }
  return FiniteGroup::from_table("Q8", t);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order(), nb = b->order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x) {
    for (int y = 0; y < na * nb; ++y) t[x][y] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
  }
  return FiniteGroup::from_table(a->name() + "x" + b->name(), t);
}

GroupPtr klein_four() {
  auto g = FiniteGroup::from_permutations("V4", {cycle(4, {0, 1}), cycle(4, {2, 3})});
  return g;
}

GroupPtr by_name(const std::string& name) {
  const auto x = name.find('x');
  if (x != std::string::npos) return direct_product(by_name(name.substr(0, x)), by_name(name.substr(x + 1)));
  if (name == "Q8") return quaternion();
  if (name == "V4") return klein_four();
  if (name.size() >= 2) {
    int k = 0;
    try {
      size_t used = 0;
      k = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1) k = 0;
    } catch (const std::exception&) {
      k = 0;
    }
    if (k > 0) {
      switch (name[0]) {
        case 'C': return cyclic(k);
        case 'D': return dihedral(k);
        case 'S': return symmetric(k);
        case 'A': return alternating(k);
        default: break;
      }
    }
  }
  fail(ErrorCode::InvalidInput, "unknown group name '" + name + "'");
}

std::vector<GroupPtr> fixtures() {
  std::vector<GroupPtr> out;
  for (int n = 1; n <= 8; ++n) out.push_back(cyclic(n));
  out.push_back(klein_four());
  out.push_back(symmetric(3));
  out.push_back(symmetric(4));
  out.push_back(alternating(4));
  for (int n = 3; n <= 8; ++n) out.push_back(dihedral(n));
  out.push_back(alternating(5));
  return out;
}

std::vector<GroupPtr> sweep_groups() {
  std::vector<GroupPtr> out;
  for (int n = 2; n <= 48; n += 2) out.push_back(cyclic(n));
  for (int n = 2; n <= 24; ++n) out.push_back(dihedral(n));
  out.push_back(symmetric(3));
  out.push_back(symmetric(4));
  out.push_back(alternating(4));
  out.push_back(quaternion());
  const auto C2 = cyclic(2);
  out.push_back(direct_product(C2, direct_product(C2, C2)));
  out.push_back(direct_product(C2, cyclic(4)));
  out.push_back(direct_product(C2, quaternion()));
  out.push_back(direct_product(C2, dihedral(4)));
  out.push_back(direct_product(C2, alternating(4)));
  out.push_back(direct_product(cyclic(3), symmetric(3)));
  out.push_back(direct_product(cyclic(4), symmetric(3)));
  out.push_back(direct_product(C2, symmetric(4)));
  out.push_back(direct_product(cyclic(3), quaternion()));
  out.push_back(direct_product(cyclic(4), alternating(4)));
  return out;
}

}  // namespace groups

}  // namespace periodcalc
