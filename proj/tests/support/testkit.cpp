#include "testkit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace testkit {

using clasp::TreeVector;

std::vector<Bracket> all_bodies(int leaves, int colors) {
  std::vector<Bracket> out;
  if (leaves == 1) {
    for (int c = 1; c <= colors; ++c) out.push_back(Bracket::leaf(c));
    return out;
  }
  for (int k = 1; k < leaves; ++k)
    for (const auto& l : all_bodies(k, colors))
      for (const auto& r : all_bodies(leaves - k, colors)) out.push_back(Bracket::join(l, r));
  return out;
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Jacobi rewrites of every node whose left child is internal:
// [[P,Q],Y] - [P,[Q,Y]] + [Q,[P,Y]] = 0.
struct Jacobi {
  Bracket a, b, c;
};

std::vector<Jacobi> jacobi_rewrites(const Bracket& t) {
  std::vector<Jacobi> out;
  if (t.is_leaf()) return out;
  const Bracket l = t.left(), r = t.right();
  if (!l.is_leaf()) {
    const Bracket p = l.left(), q = l.right();
    out.push_back({t, Bracket::join(p, Bracket::join(q, r)), Bracket::join(q, Bracket::join(p, r))});
  }
  for (const auto& j : jacobi_rewrites(l))
    out.push_back({Bracket::join(j.a, r), Bracket::join(j.b, r), Bracket::join(j.c, r)});
  for (const auto& j : jacobi_rewrites(r))
    out.push_back({Bracket::join(l, j.a), Bracket::join(l, j.b), Bracket::join(l, j.c)});
  return out;
}

}  // namespace

long witt(int k, int r) {
  long sum = 0;
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) sum += mobius(d) * ipow(r, k / d);
  return sum / k;
}

IhxOracle::IhxOracle(int m, int r) {
  const auto bodies = all_bodies(m, r);
  std::set<CanonicalTree> reps;
  for (int root = 1; root <= r; ++root)
    for (const auto& b : bodies) {
      const auto c = clasp::canonicalize(clasp::tree_from_body(root, b, r));
      if (c.sign != 0) reps.insert(c.rep);
    }
  basis_.assign(reps.begin(), reps.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;

  for (int root = 1; root <= r; ++root)
    for (const auto& b : bodies)
      for (const auto& j : jacobi_rewrites(b)) {
        TreeVector rel(r);
        rel.add(clasp::tree_from_body(root, j.a, r), Rational(1));
        rel.add(clasp::tree_from_body(root, j.b, r), Rational(-1));
        rel.add(clasp::tree_from_body(root, j.c, r), Rational(1));
        add_relation(coordinates(rel));
      }
}

std::vector<Rational> IhxOracle::coordinates(const TreeVector& v) const {
  std::vector<Rational> row(basis_.size());
  for (const auto& [t, c] : v.terms()) {
    auto it = index_.find(t);
    if (it == index_.end()) throw std::logic_error("tree outside the oracle basis: " + t.to_string());
    row[it->second] += c;
  }
  return row;
}

std::vector<Rational> IhxOracle::reduce(std::vector<Rational> row) const {
  for (std::size_t k = 0; k < echelon_.size(); ++k) {
    const Rational f = row[pivot_[k]];
    if (f.is_zero()) continue;
    for (std::size_t i = 0; i < row.size(); ++i) row[i] -= f * echelon_[k][i];
  }
  return row;
}

void IhxOracle::add_relation(std::vector<Rational> row) {
  row = reduce(std::move(row));
  auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return !x.is_zero(); });
  if (it == row.end()) return;
  const std::size_t p = static_cast<std::size_t>(it - row.begin());
  const Rational lead = row[p];
  for (auto& x : row) x /= lead;
  // keep the rows fully reduced so that reduce() is a single pass
  for (auto& e : echelon_) {
    const Rational f = e[p];
    if (f.is_zero()) continue;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= f * row[i];
  }
  echelon_.push_back(std::move(row));
  pivot_.push_back(p);
  ++rank_;
}

bool IhxOracle::in_span(const TreeVector& v) const {
  const auto row = reduce(coordinates(v));
  return std::all_of(row.begin(), row.end(), [](const Rational& x) { return x.is_zero(); });
}

std::vector<ColoredTree> pattern_catalog(int lo, int hi, int r) {
  std::vector<ColoredTree> out;
  for (int m = lo; m <= hi; ++m) {
    std::set<CanonicalTree> seen;
    const auto bodies = all_bodies(m, r);
    for (int root = 1; root <= r; ++root)
      for (const auto& b : bodies) seen.insert(clasp::canonicalize(clasp::tree_from_body(root, b, r)).rep);
    for (const auto& rep : seen) {
      ColoredTree t = rep.to_tree(r);
      if (clasp::has_admissible_vertex(t)) out.push_back(std::move(t));
    }
  }
  return out;
}

Bracket random_body(std::mt19937& rng, int leaves, int colors) {
  std::uniform_int_distribution<int> color(1, colors);
  if (leaves == 1) return Bracket::leaf(color(rng));
  std::uniform_int_distribution<int> split(1, leaves - 1);
  const int k = split(rng);
  return Bracket::join(random_body(rng, k, colors), random_body(rng, leaves - k, colors));
}

std::vector<ColoredTree> npattern_catalog(int n, int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> small(2, 3);
  std::function<Bracket(int)> grow = [&](int depth) {
    if (depth < 0) return random_body(rng, small(rng), 3);
    return Bracket::join(grow(depth - 1), grow(depth - 1));
  };
  std::set<CanonicalTree> seen;
  std::vector<ColoredTree> out;
  for (int tries = 0; static_cast<int>(out.size()) < count && tries < 50 * count; ++tries) {
    const Bracket a = grow(n - 2), b = grow(n - 2), c = grow(n - 1);
    ColoredTree t = clasp::tree_from_branches(a, b, c, 3);
    if (seen.insert(clasp::canonicalize(t).rep).second) out.push_back(std::move(t));
  }
  return out;
}

clasp::Matrix random_nonsingular(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    clasp::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(entry(rng));
    if (clasp::rank(m) == n) return m;
  }
}

namespace {

// Splits t along `cuts` (edges given as vertex pairs), putting X legs with
// the given colors on both sides; returns the components.
std::vector<ColoredTree> cut_tree(ColoredTree t, const std::vector<std::pair<int, int>>& cuts,
                                  const std::vector<std::pair<int, int>>& leg_colors) {
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const auto [u, v] = cuts[k];
    const int p = t.vertex_count(), q = p + 1;
    t.adj.push_back({u});
    t.adj.push_back({v});
    t.color.push_back(leg_colors[k].first);
    t.color.push_back(leg_colors[k].second);
    std::replace(t.adj[u].begin(), t.adj[u].end(), v, p);
    std::replace(t.adj[v].begin(), t.adj[v].end(), u, q);
  }
  const int n = t.vertex_count();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : t.adj[x])
        if (comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  std::vector<ColoredTree> out(count);
  std::vector<int> local(n);
  for (int v = 0; v < n; ++v) {
    local[v] = out[comp[v]].vertex_count();
    out[comp[v]].adj.emplace_back();
    out[comp[v]].color.push_back(t.color[v]);
  }
  for (int v = 0; v < n; ++v)
    for (int w : t.adj[v]) out[comp[v]].adj[local[v]].push_back(local[w]);
  for (auto& c : out) c.colors = t.colors;
  return out;
}

std::vector<std::pair<int, int>> edges(const ColoredTree& t) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int w : t.adj[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

}  // namespace

clasp::LeggedSeries random_series(std::mt19937& rng, int labels, int colors, int max_x, int monomials) {
  clasp::LeggedSeries s;
  for (int i = 0; i < labels; ++i) s.q.labels.push_back("y" + std::to_string(i + 1));
  s.q.q = random_nonsingular(rng, static_cast<std::size_t>(labels));
  s.colors = colors;
  s.cap = 20;
  std::uniform_int_distribution<int> label(0, labels - 1);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);

  while (static_cast<int>(s.r.size()) < monomials) {
    clasp::LeggedMonomial m;
    do m.coeff = Rational(num(rng)) / den(rng);
    while (m.coeff.is_zero());
    if (coin(rng)) {
      // one tree cut along random edges
      std::uniform_int_distribution<int> size(2, 5);
      const ColoredTree whole = clasp::tree_from_body(std::uniform_int_distribution<int>(1, colors)(rng),
                                                      random_body(rng, size(rng), colors), colors);
      auto es = edges(whole);
      std::shuffle(es.begin(), es.end(), rng);
      const int cuts = std::uniform_int_distribution<int>(0, std::min<int>(max_x / 2, 3))(rng);
      es.resize(std::min<std::size_t>(es.size(), static_cast<std::size_t>(cuts)));
      std::vector<std::pair<int, int>> legs;
      for (std::size_t k = 0; k < es.size(); ++k)
        legs.emplace_back(clasp::x_color(label(rng)), clasp::x_color(label(rng)));
      m.trees = cut_tree(whole, es, legs);
    } else {
      // unrelated trees with random legs
      int x_left = max_x;
      const int pieces = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int k = 0; k < pieces; ++k) {
        const int leaves = std::uniform_int_distribution<int>(2, 3)(rng);
        Bracket body = random_body(rng, leaves, colors);
        std::vector<int> code = body.code();
        for (int& c : code)
          if (c != 0 && x_left > 0 && coin(rng)) {
            c = clasp::x_color(label(rng));
            --x_left;
          }
        int root = std::uniform_int_distribution<int>(1, colors)(rng);
        if (x_left > 0 && coin(rng)) {
          root = clasp::x_color(label(rng));
          --x_left;
        }
        m.trees.push_back(clasp::tree_from_body(root, Bracket::from_code(code), colors));
      }
      if (clasp::unlink_leg_count(m) < 2) continue;
    }
    s.r.push_back(std::move(m));
  }
  return s;
}

}  // namespace testkit
