#include "clasp/diagrams.hpp"

#include "clasp/errors.hpp"

#include <set>
#include <sstream>

namespace clasp {

void TreeVector::add(const CanonicalTree& t, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TreeVector::add(const ColoredTree& t, const Rational& c) {
  const Canonical k = canonicalize(t);
  if (k.sign == 0) return;
  add(k.rep, k.sign > 0 ? c : Rational(-c));
}

std::vector<int> TreeVector::degrees() const {
  std::set<int> ds;
  for (const auto& [t, c] : terms_) ds.insert(t.degree());
  return {ds.begin(), ds.end()};
}

TreeVector TreeVector::component(int degree) const {
  TreeVector out(colors_);
  for (const auto& [t, c] : terms_)
    if (t.degree() == degree) out.terms_.emplace(t, c);
  return out;
}

TreeVector& TreeVector::operator+=(const TreeVector& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  if (colors_ == 0) colors_ = o.colors_;
  return *this;
}

TreeVector& TreeVector::operator-=(const TreeVector& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  if (colors_ == 0) colors_ = o.colors_;
  return *this;
}

TreeVector& TreeVector::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

TreeVector TreeVector::operator-() const {
  TreeVector out = *this;
  for (auto& [t, v] : out.terms_) v = -v;
  return out;
}

std::string TreeVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << clasp::to_string(c) << "*(" << t.to_string() << ")";
  }
  return os.str();
}

int degree(const CanonicalTree& t) { return t.degree(); }

TreeVector ihx_resolve(const ColoredTree& t, int u, int w) {
  auto [h, x] = ihx_terms(t, u, w);
  TreeVector out(t.colors);
  out.add(h, 1);
  out.add(x, 1);
  return out;
}

LieVector eta(const ColoredTree& t) {
  LieVector out;
  for (int leaf : t.leaves()) out.add(t.color[static_cast<std::size_t>(leaf)], rooted_body(t, leaf), 1);
  return out;
}

LieVector eta(const TreeVector& v) {
  LieVector out;
  for (const auto& [t, c] : v.terms()) {
    const ColoredTree g = t.to_tree();
    for (int leaf : g.leaves()) out.add(g.color[static_cast<std::size_t>(leaf)], rooted_body(g, leaf), c);
  }
  return out;
}

bool is_zero(const TreeVector& v) {
  if (v.empty()) return true;
  return lyndon_reduce(eta(v)).empty();
}

bool equal_in_atr(const TreeVector& a, const TreeVector& b) { return is_zero(a - b); }

std::vector<CanonicalTree> enumerate_trees(int m, int r, const Limits& limits, bool include_as_null) {
  if (m < 1 || r < 1) throw InputError("degree and color count must be positive");
  if (m > limits.max_degree) throw LimitError("degree " + std::to_string(m) + " exceeds max_degree " + std::to_string(limits.max_degree));
  if (r > limits.max_colors) throw LimitError("color count " + std::to_string(r) + " exceeds max_colors " + std::to_string(limits.max_colors));

  // Sorted rooted bodies by leaf count; equal siblings are AS-null and
  // skipped unless requested.
  std::vector<std::vector<Bracket>> bodies(static_cast<std::size_t>(m) + 1);
  for (int c = 1; c <= r; ++c) bodies[1].push_back(Bracket::leaf(c));
  long total = r;
  for (int k = 2; k <= m; ++k) {
    auto& out = bodies[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i)
      for (const auto& a : bodies[static_cast<std::size_t>(i)])
        for (const auto& b : bodies[static_cast<std::size_t>(k - i)])
          if (a < b || (include_as_null && a == b)) {
            out.push_back(Bracket::join(a, b));
            if (++total > limits.max_enumeration) throw LimitError("tree enumeration exceeds max_enumeration");
          }
  }
  std::set<CanonicalTree> seen;
  for (int c = 1; c <= r; ++c)
    for (const auto& body : bodies[static_cast<std::size_t>(m)]) {
      const Canonical k = canonicalize(tree_from_body(c, body));
      if (k.sign != 0 || include_as_null) seen.insert(k.rep);
    }
  return {seen.begin(), seen.end()};
}

SparseRow RelationSpan::coordinates(const TreeVector& v) const {
  SparseRow row;
  for (const auto& [t, c] : v.terms()) {
    auto it = index.find(t);
    if (it == index.end()) throw InputError("tree " + t.to_string() + " is not in the degree-" + std::to_string(degree) + " basis");
    row.emplace(it->second, c);
  }
  return row;
}

RelationSpan relation_span(int m, int r, const Limits& limits) {
  RelationSpan span;
  span.degree = m;
  span.colors = r;
  span.basis = enumerate_trees(m, r, limits);
  for (std::size_t i = 0; i < span.basis.size(); ++i) span.index.emplace(span.basis[i], i);
  for (const auto& t : span.basis) {
    const ColoredTree g = t.to_tree(r);
    for (auto [u, w] : internal_edges(g)) {
      TreeVector rel(r);
      rel.add(t, 1);
      rel -= ihx_resolve(g, u, w);
      if (!rel.empty()) span.relations.insert(span.coordinates(rel));
    }
  }
  return span;
}

std::size_t dim(int m, int r, const Limits& limits) { return relation_span(m, r, limits).dimension(); }

}  // namespace clasp
